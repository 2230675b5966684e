#ifndef TRILINVAR_INTMAT_HPP
#define TRILINVAR_INTMAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace trilinvar {

/// Dense matrix with arbitrary precision integer entries.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

IntMatrix transpose(const IntMatrix& M);
bool is_zero_row(const IntMatrix& M, std::size_t r);

struct HnfResult {
  IntMatrix H;  // row-style Hermite normal form of M
  IntMatrix U;  // unimodular, U * M == H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form with transform: pivots positive, entries
/// above each pivot reduced into [0, pivot), zero rows at the bottom.
/// The rows of U beyond rank(M) span the integer left nullspace of M.
HnfResult hnf(const IntMatrix& M);

/// Incremental integer row space reducer: rows are folded into an echelon
/// basis by extended gcd combinations. normalize() turns the state into the
/// (unique) Hermite normal form of the row space.
class OnlineHnf {
 public:
  explicit OnlineHnf(std::size_t cols);

  /// Add one row (sparse int64 form). Returns true when the rank increased.
  bool add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& row);

  std::size_t rank() const { return rows_.size(); }

  /// Reduce entries above pivots; afterwards the stored rows are the HNF of
  /// everything added so far (sorted by pivot column).
  void normalize();

  /// HNF matrix of the accumulated row space (calls normalize()).
  IntMatrix matrix();

 private:
  void insert_row(std::vector<mpz_class> v);

  std::size_t cols_;
  std::vector<std::vector<mpz_class>> rows_;  // echelon, leading entry > 0
  std::vector<std::int32_t> pivot_row_of_col_;
  // support cache: columns with nonzero entries per stored row
  std::vector<std::vector<std::uint32_t>> support_;
};

struct LatticeBasis2 {
  std::vector<mpz_class> b1;  // shortest
  std::vector<mpz_class> b2;  // shortest independent companion
};

/// Lagrange (two dimensional lattice) reduction. Throws on dependent input.
LatticeBasis2 gauss_lagrange(std::vector<mpz_class> b1, std::vector<mpz_class> b2);

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

}  // namespace trilinvar

#endif
