#include "doctest.h"

#include "agelab/lie.hpp"
#include "agelab/rng.hpp"

using namespace agelab;

namespace {

std::vector<GenRef> gens_in_window(std::int64_t w, bool with_k = true) {
  std::vector<GenRef> out;
  for (Kind k : {Kind::E, Kind::P, Kind::Q, Kind::H, Kind::Z})
    for (std::int64_t m = -w; m <= w; ++m) out.push_back({k, m});
  if (with_k) out.push_back(GenRef::k());
  return out;
}

LieElement random_lie(SplitMix64& rng, std::int64_t window, int terms) {
  LieElement x;
  for (int t = 0; t < terms; ++t) {
    const Kind k = static_cast<Kind>(rng.range(0, 4));
    x.add({k, rng.range(-window, window)}, rng.small_scalar());
  }
  return x;
}

}  // namespace

TEST_CASE("bracket table on generators") {
  CHECK(bracket(GenRef::h(1), GenRef::e(-1)) == LieElement(GenRef::e(0), 2));
  CHECK(bracket(GenRef::h(2), GenRef::h(-2)) == LieElement(GenRef::k(), 2));
  CHECK(bracket(GenRef::p(3), GenRef::q(-3)) == LieElement(GenRef::z(0)));
  CHECK(bracket(GenRef::e(5), GenRef::p(7)).is_zero());
  CHECK(bracket(GenRef::z(2), GenRef::q(-9)).is_zero());
  CHECK(bracket(GenRef::h(0), GenRef::p(4)) == LieElement(GenRef::p(4)));
  CHECK(bracket(GenRef::h(0), GenRef::q(4)) == LieElement(GenRef::q(4), -1));
  CHECK(bracket(GenRef::e(1), GenRef::q(2)) == LieElement(GenRef::p(3)));
  CHECK(bracket(GenRef::k(), GenRef::h(1)).is_zero());
}

TEST_CASE("bracket_lin is the bilinear extension") {
  LieElement x;
  x.add(GenRef::e(0), 1);
  x.add(GenRef::h(1), 1);
  LieElement expected;
  expected.add(GenRef::p(0), 1);
  expected.add(GenRef::q(1), -1);
  CHECK(bracket_lin(x, LieElement(GenRef::q(0))) == expected);

  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const LieElement a = random_lie(rng, 4, 3);
    CHECK(bracket_lin(a, a).is_zero());
    CHECK(bracket_lin(LieElement{}, a).is_zero());
  }
}

TEST_CASE("antisymmetry, exhaustive window 5") {
  const auto gens = gens_in_window(5);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      LieElement sum = bracket(x, y);
      sum.add(bracket(y, x));
      CHECK(sum.is_zero());
    }
}

TEST_CASE("jacobi identity, exhaustive generators window 3 plus random elements") {
  const auto gens = gens_in_window(3);
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        LieElement sum = bracket_lin(LieElement(x), bracket(y, z));
        sum.add(bracket_lin(LieElement(z), bracket(x, y)));
        sum.add(bracket_lin(LieElement(y), bracket(z, x)));
        REQUIRE(sum.is_zero());
      }

  SplitMix64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const LieElement x = random_lie(rng, 4, 3);
    const LieElement y = random_lie(rng, 4, 3);
    const LieElement z = random_lie(rng, 4, 3);
    LieElement sum = bracket_lin(x, bracket_lin(y, z));
    sum.add(bracket_lin(z, bracket_lin(x, y)));
    sum.add(bracket_lin(y, bracket_lin(z, x)));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("grading: term modes of [x,y] add") {
  const auto gens = gens_in_window(4, false);
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const LieElement b = bracket(x, y);
      if (b.is_zero()) continue;
      const auto deg = loop_degree(b);
      REQUIRE(deg.has_value());
      CHECK(*deg == x.mode + y.mode);
    }
}

TEST_CASE("centrality of z and k") {
  for (const auto& y : gens_in_window(5)) {
    CHECK(bracket(GenRef::z(-2), y).is_zero());
    CHECK(bracket(GenRef::z(3), y).is_zero());
    CHECK(bracket(GenRef::k(), y).is_zero());
  }
}

TEST_CASE("invariant form") {
  CHECK(invariant_form(GenRef::h(0), GenRef::h(0)) == 1);
  CHECK(invariant_form(GenRef::h(3), GenRef::h(-3)) == 1);
  CHECK(invariant_form(GenRef::p(0), GenRef::q(0)) == 0);
  CHECK(invariant_form(GenRef::e(0), GenRef::e(0)) == 0);
  CHECK(invariant_form(GenRef::k(), GenRef::h(0)) == 0);
}

TEST_CASE("loop_degree") {
  LieElement x(GenRef::e(3));
  x.add(GenRef::z(3), 2);
  CHECK(loop_degree(x) == 3);
  CHECK(loop_degree(LieElement(GenRef::k())) == 0);
  LieElement mixed(GenRef::e(1));
  mixed.add(GenRef::q(2), 1);
  CHECK(!loop_degree(mixed).has_value());
  CHECK_THROWS_AS(loop_degree(LieElement{}), std::domain_error);
}

TEST_CASE("element rendering and parsing round-trip") {
  LieElement x;
  x.add(GenRef::e(0), 2);
  x.add(GenRef::h(-2), Scalar(-1, 3));
  x.add(GenRef::k(), 1);
  CHECK(to_string(x) == "2*e(0) - 1/3*h(-2) + k");
  CHECK(parse_lie_element(to_string(x)) == x);

  SplitMix64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const LieElement a = random_lie(rng, 6, 4);
    CHECK(parse_lie_element(to_string(a)) == a);
  }
  CHECK(parse_lie_element("0").is_zero());
  CHECK_THROWS_AS(parse_lie_element("2*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_element("x(1)"), std::invalid_argument);
}

TEST_CASE("scalars stay in lowest terms through serialization") {
  CHECK(to_string(scalar_from_string("4/6")) == "2/3");
  CHECK(to_string(scalar_from_string("-4/6")) == "-2/3");
  CHECK(to_string(Scalar(7)) == "7");
  CHECK(scalar_from_string("0/5") == 0);
  CHECK_THROWS_AS(scalar_from_string("1/0"), std::invalid_argument);
}
