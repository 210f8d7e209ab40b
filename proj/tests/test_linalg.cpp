#include "doctest.h"

#include "agelab/linalg.hpp"
#include "agelab/rng.hpp"

using namespace agelab;

namespace {

RatVec vec(std::initializer_list<int> xs) {
  RatVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("rref, rank, kernel on a small system") {
  RatMat m(3);
  m.add_row(vec({1, 2, 3}));
  m.add_row(vec({2, 4, 6}));
  m.add_row(vec({0, 1, 1}));
  CHECK(rank(m) == 2);

  const auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  // verify A k = 0 exactly
  for (const auto& row : m.rows) {
    Scalar dot(0);
    for (std::size_t c = 0; c < 3; ++c) dot += row[c] * kb[0][c];
    CHECK(dot == 0);
  }
}

TEST_CASE("kernel basis solves random systems exactly") {
  SplitMix64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t cols = static_cast<std::size_t>(rng.range(2, 6));
    RatMat m(cols);
    const std::int64_t rows = rng.range(1, 6);
    for (std::int64_t r = 0; r < rows; ++r) {
      RatVec row;
      for (std::size_t c = 0; c < cols; ++c) row.push_back(rng.small_scalar_or_zero());
      m.add_row(std::move(row));
    }
    const std::size_t rk = rank(m);
    const auto kb = kernel_basis(m);
    CHECK(rk + kb.size() == cols);
    for (const auto& k : kb)
      for (const auto& row : m.rows) {
        Scalar dot(0);
        for (std::size_t c = 0; c < cols; ++c) dot += row[c] * k[c];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("in_span") {
  std::vector<RatVec> rows{vec({1, 0, 1}), vec({0, 1, 1})};
  CHECK(in_span(rows, vec({2, 3, 5}), 3));
  CHECK(!in_span(rows, vec({0, 0, 1}), 3));
}

TEST_CASE("sparse eliminator agrees with dense rank") {
  SplitMix64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const std::size_t cols = static_cast<std::size_t>(rng.range(3, 8));
    RatMat m(cols);
    SparseEliminator el;
    const std::int64_t rows = rng.range(1, 10);
    for (std::int64_t r = 0; r < rows; ++r) {
      RatVec row(cols, Scalar(0));
      std::map<std::size_t, Scalar> srow;
      for (int nz = 0; nz < 3; ++nz) {
        const std::size_t c = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(cols) - 1));
        const Scalar v = rng.small_scalar();
        row[c] += v;
        auto [it, fresh] = srow.try_emplace(c, Scalar(0));
        it->second += v;
        if (it->second == 0) srow.erase(it);
      }
      m.add_row(row);
      el.add_row(srow);
    }
    CHECK(rank(m) == el.rank());

    // reduce_sparse empties exactly the span members
    for (const auto& row : m.rows) {
      std::map<std::size_t, Scalar> srow;
      for (std::size_t c = 0; c < cols; ++c)
        if (row[c] != 0) srow[c] = row[c];
      el.reduce_sparse(srow);
      CHECK(srow.empty());
    }
  }
}
