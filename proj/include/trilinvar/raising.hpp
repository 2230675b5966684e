#ifndef TRILINVAR_RAISING_HPP
#define TRILINVAR_RAISING_HPP

#include <cstdint>
#include <vector>

#include "trilinvar/exponent.hpp"
#include "trilinvar/polynomial.hpp"

namespace trilinvar {

struct DegreeBasis;

/// One of the six raising operators: direction in {1,2,3}, root in {1,2}.
struct OperatorId {
  int direction = 1;
  int root = 1;
};

/// The six operators in a fixed order: (1,1),(1,2),(2,1),(2,2),(3,1),(3,2).
std::vector<OperatorId> all_operators();

struct RaisingTerm {
  int coeff;  // positive multiplicity (the exponent being lowered)
  ExponentArray image;
};

/// Action of a raising operator on a single monomial: for every position on
/// level root+1 of the given direction with positive exponent e, emit
/// coefficient e and the array with that entry moved up one level.
/// At most 9 terms; empty when nothing is raisable.
std::vector<RaisingTerm> apply_raising(OperatorId op, const ExponentArray& E);

/// Linear extension to polynomials, exact over the integers.
Polynomial apply_raising_poly(OperatorId op, const Polynomial& p);

/// Sparse matrix entry produced while filling an operator matrix.
struct MatrixTriplet {
  std::uint32_t row;  // index into the higher weight basis
  std::uint32_t col;  // index into the domain basis
  std::int64_t value;
};

/// Matrix of one raising operator on the weight zero basis: entry (r,c) is
/// the accumulated multiplicity with which higher weight monomial r appears
/// in the image of weight zero monomial c. Triplets are sorted by (row, col)
/// and deduplicated; values are reduced mod `modulus` when it is nonzero.
/// A raising image missing from the higher weight basis is a basis bug and
/// throws std::out_of_range.
struct OperatorMatrix {
  OperatorId op;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatrixTriplet> triplets;
};

OperatorMatrix build_operator_matrix(const DegreeBasis& basis, OperatorId op,
                                     std::uint32_t modulus = 0);

/// Matrix of one raising operator restricted to a span of polynomials
/// (columns). Column j holds the coefficients of T(columns[j]) in the
/// higher weight basis. Used with symmetric or alternating orbit sums.
OperatorMatrix build_restricted_matrix(const DegreeBasis& basis, OperatorId op,
                                       const std::vector<Polynomial>& columns,
                                       std::uint32_t modulus = 0);

/// Stream the rows of an OperatorMatrix in blocks of `block_rows`
/// consecutive rows. Each block is delivered as dense int64 rows
/// (block_rows x cols, the final block may be shorter). Blocks with no
/// nonzero entries are still reported so the row partition is exact.
template <typename F>
void stream_row_blocks(const OperatorMatrix& m, std::size_t block_rows, F&& emit) {
  std::size_t n_blocks = (m.rows + block_rows - 1) / block_rows;
  std::size_t t = 0;
  for (std::size_t k = 0; k < n_blocks; ++k) {
    std::size_t lo = k * block_rows;
    std::size_t hi = std::min(m.rows, lo + block_rows);
    std::vector<std::vector<std::int64_t>> block(hi - lo,
                                                 std::vector<std::int64_t>(m.cols, 0));
    while (t < m.triplets.size() && m.triplets[t].row < hi) {
      const auto& tr = m.triplets[t];
      block[tr.row - lo][tr.col] = tr.value;
      ++t;
    }
    emit(k, block);
  }
}

}  // namespace trilinvar

#endif
