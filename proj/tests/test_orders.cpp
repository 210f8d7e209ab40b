#include "doctest.h"

#include <vector>

#include "agelab/multi_index.hpp"
#include "agelab/rng.hpp"

using namespace agelab;

namespace {

// Clause-literal oracles over dense vectors, used to freeze expected values.
int oracle_revlex(const MultiIndex& a, const MultiIndex& b) {
  for (std::int64_t pos = 1; pos <= 64; ++pos) {
    if (a.at(pos) != b.at(pos)) return a.at(pos) > b.at(pos) ? 1 : -1;
  }
  return 0;
}

int oracle_principal2(const MultiIndex& i, const MultiIndex& j, const MultiIndex& i2,
                      const MultiIndex& j2) {
  if (weight(i) != weight(i2)) return weight(i) > weight(i2) ? 1 : -1;
  if (oracle_revlex(i, i2) != 0) return oracle_revlex(i, i2);
  return oracle_revlex(j, j2);
}

int oracle_principal4(const Tuple4& a, const Tuple4& b) {
  const std::int64_t wmn = weight(a.m) + weight(a.n), wmn2 = weight(b.m) + weight(b.n);
  if (wmn != wmn2) return wmn > wmn2 ? 1 : -1;
  if (oracle_revlex(a.n, b.n) != 0) return oracle_revlex(a.n, b.n);
  if (oracle_revlex(a.m, b.m) != 0) return oracle_revlex(a.m, b.m);
  const std::int64_t wij = weight(a.i) + weight(a.j), wij2 = weight(b.i) + weight(b.j);
  if (wij != wij2) return wij > wij2 ? 1 : -1;
  if (oracle_revlex(a.j, b.j) != 0) return oracle_revlex(a.j, b.j);
  return oracle_revlex(a.i, b.i);
}

int sign(std::strong_ordering o) { return o > 0 ? 1 : (o < 0 ? -1 : 0); }

MultiIndex random_mi(SplitMix64& rng) {
  MultiIndex m;
  const std::int64_t entries = rng.range(0, 3);
  for (std::int64_t e = 0; e < entries; ++e) m.bump(rng.range(1, 6), rng.range(1, 3));
  return m;
}

const MultiIndex eps1 = MultiIndex::unit(1);
const MultiIndex eps2 = MultiIndex::unit(2);
const MultiIndex eps3 = MultiIndex::unit(3);
const MultiIndex eps5 = MultiIndex::unit(5);

}  // namespace

TEST_CASE("weight and size") {
  CHECK(weight(eps3) == 3);
  CHECK(size(eps3) == 1);
  MultiIndex m;
  m.bump(1, 2);
  m.bump(4, 1);
  CHECK(weight(m) == 6);
  CHECK(size(m) == 3);
  CHECK(weight(MultiIndex{}) == 0);
  CHECK(size(MultiIndex{}) == 0);
}

TEST_CASE("addition and guarded subtraction") {
  SplitMix64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const MultiIndex a = random_mi(rng), b = random_mi(rng);
    CHECK(weight(add(a, b)) == weight(a) + weight(b));
    CHECK(size(add(a, b)) == size(a) + size(b));
    CHECK(sub(add(a, b), b) == a);
  }
  CHECK_THROWS_AS(sub(eps1, eps2), std::domain_error);
}

TEST_CASE("reverse lexicographic order") {
  CHECK(revlex_cmp(eps1, eps2) > 0);
  CHECK(revlex_cmp(eps2, eps1) < 0);
  CHECK(revlex_cmp(eps3, eps3) == std::strong_ordering::equal);
  MultiIndex i13;  // entry 3 at position 1
  i13.bump(1, 3);
  CHECK(revlex_cmp(eps2, i13) < 0);

  SplitMix64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const MultiIndex a = random_mi(rng), b = random_mi(rng);
    CHECK(sign(revlex_cmp(a, b)) == oracle_revlex(a, b));
    CHECK((revlex_cmp(a, b) == std::strong_ordering::equal) == (a == b));
  }
}

TEST_CASE("principal order on pairs") {
  // weight clause dominates
  CHECK(principal2_cmp({eps2, MultiIndex{}}, {eps1, eps5}) > 0);
  CHECK(principal2_cmp({eps1, MultiIndex{}}, {eps1, MultiIndex{}}) ==
        std::strong_ordering::equal);
  // equal first components: compare second by revlex (regenerated from the
  // clause oracle: eps2 beats eps3 at position 2)
  CHECK(principal2_cmp({eps1, eps2}, {eps1, eps3}) > 0);
  CHECK(oracle_principal2(eps1, eps2, eps1, eps3) == 1);

  SplitMix64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const MultiIndex a = random_mi(rng), b = random_mi(rng), c = random_mi(rng),
                     d = random_mi(rng);
    CHECK(sign(principal2_cmp({a, b}, {c, d})) == oracle_principal2(a, b, c, d));
  }
}

TEST_CASE("principal order on quadruples") {
  // clause (i): weight of the (m, n) blocks dominates
  CHECK(principal4_cmp({MultiIndex{}, MultiIndex{}, eps1, MultiIndex{}},
                       {MultiIndex::unit(9), MultiIndex::unit(9), MultiIndex{}, MultiIndex{}}) >
        0);
  Tuple4 t1{MultiIndex{}, MultiIndex{}, MultiIndex{}, eps2};
  CHECK(principal4_cmp(t1, t1) == std::strong_ordering::equal);
  // equal block weights: n decides (regenerated from the clause oracle)
  CHECK(principal4_cmp({MultiIndex{}, MultiIndex{}, MultiIndex{}, eps2},
                       {MultiIndex{}, MultiIndex{}, eps2, MultiIndex{}}) > 0);

  SplitMix64 rng(29);
  for (int t = 0; t < 500; ++t) {
    const Tuple4 a{random_mi(rng), random_mi(rng), random_mi(rng), random_mi(rng)};
    const Tuple4 b{random_mi(rng), random_mi(rng), random_mi(rng), random_mi(rng)};
    CHECK(sign(principal4_cmp(a, b)) == oracle_principal4(a, b));
    CHECK((principal4_cmp(a, b) == std::strong_ordering::equal) == (a == b));
  }
}

TEST_CASE("all three orders are total and transitive") {
  SplitMix64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const MultiIndex a = random_mi(rng), b = random_mi(rng), c = random_mi(rng);
    // antisymmetry
    CHECK(sign(revlex_cmp(a, b)) == -sign(revlex_cmp(b, a)));
    // transitivity
    if (revlex_cmp(a, b) <= 0 && revlex_cmp(b, c) <= 0) CHECK(revlex_cmp(a, c) <= 0);

    const std::pair<MultiIndex, MultiIndex> pa{a, b}, pb{b, c}, pc{c, a};
    if (principal2_cmp(pa, pb) <= 0 && principal2_cmp(pb, pc) <= 0)
      CHECK(principal2_cmp(pa, pc) <= 0);
  }
  for (int t = 0; t < 1000; ++t) {
    const Tuple4 a{random_mi(rng), random_mi(rng), random_mi(rng), random_mi(rng)};
    const Tuple4 b{random_mi(rng), random_mi(rng), random_mi(rng), random_mi(rng)};
    const Tuple4 c{random_mi(rng), random_mi(rng), random_mi(rng), random_mi(rng)};
    if (principal4_cmp(a, b) <= 0 && principal4_cmp(b, c) <= 0)
      CHECK(principal4_cmp(a, c) <= 0);
  }
}

TEST_CASE("principal orders refine the governing weight") {
  SplitMix64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const MultiIndex a = random_mi(rng), b = random_mi(rng), c = random_mi(rng),
                     d = random_mi(rng);
    if (weight(a) > weight(c)) CHECK(principal2_cmp({a, b}, {c, d}) > 0);
    const Tuple4 ta{a, b, c, d}, tb{d, c, b, a};
    if (weight(ta.m) + weight(ta.n) > weight(tb.m) + weight(tb.n))
      CHECK(principal4_cmp(ta, tb) > 0);
  }
}
