#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "trilinvar/modmat.hpp"

using namespace trilinvar;

namespace {

// Fraction-free (Bareiss) elimination: exact rank over the rationals.
std::size_t rational_rank(std::vector<std::vector<mpz_class>> a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

ModMatrix reduce_mod(const std::vector<std::vector<mpz_class>>& a, std::uint32_t p) {
  ModMatrix M(p, a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t r = 0; r < M.rows; ++r)
    for (std::size_t c = 0; c < M.cols; ++c) {
      mpz_class v = a[r][c] % p;
      if (v < 0) v += p;
      M.at(r, c) = static_cast<std::uint32_t>(v.get_ui());
    }
  return M;
}

}  // namespace

TEST_CASE("rref of the identity") {
  ModMatrix M(101, 4, 4);
  for (int i = 0; i < 4; ++i) M.at(i, i) = 1;
  auto info = rref_mod(M);
  CHECK(info.rank == 4);
  CHECK(info.pivot_cols == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("nullspace of a single relation") {
  ModMatrix M(101, 1, 2);
  M.at(0, 0) = 1;
  M.at(0, 1) = 1;
  auto info = rref_mod(M);
  auto basis = nullspace_mod(M, info);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<std::uint32_t>{100, 1});
  CHECK(symmetric_lift(basis[0], 101) == std::vector<long>{-1, 1});
}

TEST_CASE("nullspace of the zero matrix") {
  ModMatrix M(101, 3, 5);
  auto info = rref_mod(M);
  CHECK(info.rank == 0);
  auto basis = nullspace_mod(M, info);
  REQUIRE(basis.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(basis[i][j] == (i == j ? 1u : 0u));
}

TEST_CASE("symmetric lift") {
  CHECK(symmetric_lift(91u, 101) == -10);
  CHECK(symmetric_lift(1u, 101) == 1);
  CHECK(symmetric_lift(0u, 101) == 0);
  CHECK(symmetric_lift(51u, 101) == -50);
  CHECK(symmetric_lift(50u, 101) == 50);
}

TEST_CASE("rref is idempotent and nullvectors are annihilated") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int n = 0; n < 50; ++n) {
    std::vector<std::vector<mpz_class>> a(6, std::vector<mpz_class>(9));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    ModMatrix M = reduce_mod(a, 101);
    ModMatrix orig = M;
    auto info = rref_mod(M);
    ModMatrix again = M;
    auto info2 = rref_mod(again);
    CHECK(again.a == M.a);
    CHECK(info2.rank == info.rank);
    for (const auto& v : nullspace_mod(M, info)) {
      for (std::size_t r = 0; r < orig.rows; ++r) {
        std::uint64_t s = 0;
        for (std::size_t c = 0; c < orig.cols; ++c)
          s = (s + std::uint64_t(orig.at(r, c)) * v[c]) % 101;
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("modular rank never exceeds rational rank") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> entry(-30, 30);
  std::uniform_int_distribution<int> dim(1, 8);
  int drops = 0;
  for (int n = 0; n < 200; ++n) {
    std::size_t rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    // make rank drops mod small primes more likely
    if (n % 3 == 0)
      for (auto& row : a)
        for (auto& x : row) x *= 7;
    std::size_t r0 = rational_rank(a);
    for (std::uint32_t p : {7u, 101u}) {
      ModMatrix M = reduce_mod(a, p);
      auto info = rref_mod(M);
      CHECK(info.rank <= r0);
      if (info.rank < r0) ++drops;
    }
  }
  CHECK(drops > 0);  // the inequality was exercised strictly somewhere
}

TEST_CASE("online dense reducer matches batch rref") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int n = 0; n < 30; ++n) {
    std::size_t rows = 12, cols = 8;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    ModMatrix M = reduce_mod(a, 101);
    ModMatrix copy = M;
    auto info = rref_mod(copy);

    OnlineRrefDense red(101, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> row;
      for (std::size_t c = 0; c < cols; ++c)
        if (M.at(r, c)) row.emplace_back(c, M.at(r, c));
      red.add_row(row);
    }
    CHECK(red.rank() == info.rank);
    red.finalize();
    for (std::size_t r = 0; r < info.rank; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        CHECK(red.reduced_rows()[r][c] == copy.at(r, c));
    CHECK(red.nullspace() == nullspace_mod(copy, info));
  }
}

TEST_CASE("online sparse reducer matches batch rref") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> entry(0, 100);
  std::uniform_int_distribution<int> colpick(0, 19);
  for (int n = 0; n < 30; ++n) {
    std::size_t rows = 25, cols = 20;
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
    for (auto& row : a)
      for (int k = 0; k < 4; ++k) row[colpick(rng)] = entry(rng);
    ModMatrix M = reduce_mod(a, 101);
    ModMatrix copy = M;
    auto info = rref_mod(copy);

    OnlineRrefSparse red(101, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
      for (std::size_t c = 0; c < cols; ++c)
        if (M.at(r, c)) row.emplace_back(c, M.at(r, c));
      if (!row.empty()) red.add_row(std::move(row));
    }
    CHECK(red.rank() == info.rank);
    auto sparse_null = red.nullspace_sparse();
    auto dense_null = nullspace_mod(copy, info);
    REQUIRE(sparse_null.size() == dense_null.size());
    for (std::size_t i = 0; i < sparse_null.size(); ++i) {
      std::vector<std::uint32_t> v(cols, 0);
      for (auto [c, val] : sparse_null[i]) v[c] = val;
      CHECK(v == dense_null[i]);
    }
  }
}
