#ifndef TRILINVAR_MODMAT_HPP
#define TRILINVAR_MODMAT_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace trilinvar {

/// Dense matrix over Z/p, entries reduced into [0, p).
struct ModMatrix {
  std::uint32_t p = 101;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;

  ModMatrix() = default;
  ModMatrix(std::uint32_t p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t p);

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// In-place reduced row echelon form. Pivot selection: per column, the
/// first row (top down) with a nonzero entry, which makes the result and
/// the derived nullspace basis deterministic.
RrefResult rref_mod(ModMatrix& M);

/// Canonical nullspace basis from an RREF matrix: one vector per free
/// column, free variable set to 1, pivot variables back substituted.
std::vector<std::vector<std::uint32_t>> nullspace_mod(const ModMatrix& rref,
                                                      const RrefResult& info);

/// Representative in (-p/2, p/2] of each residue.
std::vector<long> symmetric_lift(const std::vector<std::uint32_t>& v, std::uint32_t p);
long symmetric_lift(std::uint32_t x, std::uint32_t p);

/// Incremental row reducer over Z/p for wide systems fed row by row.
/// Maintains an echelon set of pivot rows; back substitution to full RREF
/// happens once in finalize(). Rows are stored dense.
class OnlineRrefDense {
 public:
  OnlineRrefDense(std::uint32_t p, std::size_t cols);

  /// Adds a row given as sparse (col, value) pairs; returns true when the
  /// rank increased.
  bool add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  /// Back substitutes to full RREF and returns the canonical nullspace
  /// basis (same convention as nullspace_mod).
  std::vector<std::vector<std::uint32_t>> nullspace();

  /// RREF rows and pivots after finalize (for inspection/tests).
  void finalize();
  const std::vector<std::vector<std::uint32_t>>& reduced_rows() const { return rows_; }
  std::vector<std::size_t> pivot_columns() const;

 private:
  void reduce_into_acc(const std::vector<std::pair<std::uint32_t, std::int64_t>>& row);

  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;  // echelon rows, unit pivots
  std::vector<std::int32_t> pivot_row_of_col_;    // -1 when free so far
  std::vector<std::uint64_t> acc_;                // scratch accumulator row
  bool finalized_ = false;
};

/// Incremental row reducer over Z/p with sparse storage, for systems too
/// wide for dense rows (the full degree 9 elimination). Same interface.
class OnlineRrefSparse {
 public:
  OnlineRrefSparse(std::uint32_t p, std::size_t cols);

  bool add_row(std::vector<std::pair<std::uint32_t, std::uint32_t>> row);
  std::size_t rank() const { return n_rows_; }

  void finalize();  // back substitute to full RREF
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nullspace_sparse();

 private:
  using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::uint32_t p_;
  std::size_t cols_;
  std::size_t n_rows_ = 0;
  std::vector<std::int32_t> pivot_row_of_col_;
  std::vector<SparseRow> rows_;  // indexed by insertion, pivot value 1
  bool finalized_ = false;
};

}  // namespace trilinvar

#endif
