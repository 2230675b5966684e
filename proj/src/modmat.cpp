#include "trilinvar/modmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace trilinvar {

std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t p) {
  // extended Euclid; p prime, x != 0 mod p
  std::int64_t a = x % p, b = p, u = 1, v = 0;
  while (b) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw std::invalid_argument("mod_inverse: not invertible");
  u %= static_cast<std::int64_t>(p);
  if (u < 0) u += p;
  return static_cast<std::uint32_t>(u);
}

RrefResult rref_mod(ModMatrix& M) {
  const std::uint64_t p = M.p;
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < M.rows && M.at(pivot, c) == 0) ++pivot;
    if (pivot == M.rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < M.cols; ++j) std::swap(M.at(r, j), M.at(pivot, j));
    std::uint64_t inv = mod_inverse(M.at(r, c), M.p);
    for (std::size_t j = c; j < M.cols; ++j)
      M.at(r, j) = static_cast<std::uint32_t>(M.at(r, j) * inv % p);
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = M.at(i, c);
      if (!f) continue;
      std::uint64_t neg = p - f;
      for (std::size_t j = c; j < M.cols; ++j)
        M.at(i, j) = static_cast<std::uint32_t>((M.at(i, j) + neg * M.at(r, j)) % p);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<std::vector<std::uint32_t>> nullspace_mod(const ModMatrix& rref,
                                                      const RrefResult& info) {
  std::vector<bool> is_pivot(rref.cols, false);
  for (auto c : info.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < rref.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(rref.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < info.rank; ++r) {
      std::size_t c = info.pivot_cols[r];
      std::uint32_t val = rref.at(r, f);
      if (val) v[c] = rref.p - val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

long symmetric_lift(std::uint32_t x, std::uint32_t p) {
  long v = static_cast<long>(x % p);
  if (v > static_cast<long>(p / 2)) v -= static_cast<long>(p);
  return v;
}

std::vector<long> symmetric_lift(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::vector<long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = symmetric_lift(v[i], p);
  return out;
}

// ---------------------------------------------------------------------------

OnlineRrefDense::OnlineRrefDense(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_row_of_col_(cols, -1), acc_(cols, 0) {}

void OnlineRrefDense::reduce_into_acc(
    const std::vector<std::pair<std::uint32_t, std::int64_t>>& row) {
  std::fill(acc_.begin(), acc_.end(), 0);
  for (auto [c, v] : row) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    acc_[c] = (acc_[c] + static_cast<std::uint64_t>(r)) % p_;
  }
  // Eliminate against pivot rows left to right. Accumulator entries stay
  // below 2^63: each combination adds at most (p-1)^2 <= 10^4 per entry and
  // is lazily reduced at pivot positions only.
  std::uint64_t slack = ~0ull / ((std::uint64_t)(p_ - 1) * (p_ - 1)) - 2;
  std::uint64_t steps = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::uint64_t val = acc_[c] % p_;
    acc_[c] = val;
    if (!val) continue;
    std::int32_t pr = pivot_row_of_col_[c];
    if (pr < 0) continue;  // leading entry of a new pivot row
    const auto& prow = rows_[pr];
    std::uint64_t f = p_ - val;  // add f * pivot_row, pivot entry is 1
    acc_[c] = 0;
    for (std::size_t j = c + 1; j < cols_; ++j) acc_[j] += f * prow[j];
    if (++steps >= slack) {
      for (std::size_t j = c + 1; j < cols_; ++j) acc_[j] %= p_;
      steps = 0;
    }
  }
}

bool OnlineRrefDense::add_row(
    const std::vector<std::pair<std::uint32_t, std::int64_t>>& row) {
  finalized_ = false;
  reduce_into_acc(row);
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    acc_[c] %= p_;
    if (acc_[c]) { lead = c; break; }
  }
  if (lead == cols_) return false;
  std::vector<std::uint32_t> newrow(cols_, 0);
  std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(acc_[lead]), p_);
  for (std::size_t j = lead; j < cols_; ++j)
    newrow[j] = static_cast<std::uint32_t>((acc_[j] % p_) * inv % p_);
  pivot_row_of_col_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(newrow));
  return true;
}

void OnlineRrefDense::finalize() {
  if (finalized_) return;
  // order rows by pivot column, then back substitute
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_of_col_[c] >= 0) order.push_back(pivot_row_of_col_[c]);
  std::vector<std::vector<std::uint32_t>> sorted;
  sorted.reserve(order.size());
  for (auto idx : order) sorted.push_back(std::move(rows_[idx]));
  rows_ = std::move(sorted);
  std::fill(pivot_row_of_col_.begin(), pivot_row_of_col_.end(), -1);
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t c = 0;
    while (c < cols_ && rows_[r][c] == 0) ++c;
    pivots.push_back(c);
    pivot_row_of_col_[c] = static_cast<std::int32_t>(r);
  }
  const std::uint64_t p = p_;
  for (std::size_t r = rows_.size(); r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      std::uint64_t f = rows_[above][pivots[r]];
      if (!f) continue;
      std::uint64_t neg = p - f;
      auto& dst = rows_[above];
      const auto& src = rows_[r];
      for (std::size_t j = pivots[r]; j < cols_; ++j)
        dst[j] = static_cast<std::uint32_t>((dst[j] + neg * src[j]) % p);
    }
  }
  finalized_ = true;
}

std::vector<std::size_t> OnlineRrefDense::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_of_col_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<std::vector<std::uint32_t>> OnlineRrefDense::nullspace() {
  finalize();
  ModMatrix M(p_, rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) M.at(r, c) = rows_[r][c];
  RrefResult info;
  info.rank = rows_.size();
  info.pivot_cols = pivot_columns();
  return nullspace_mod(M, info);
}

// ---------------------------------------------------------------------------

OnlineRrefSparse::OnlineRrefSparse(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_row_of_col_(cols, -1) {}

bool OnlineRrefSparse::add_row(std::vector<std::pair<std::uint32_t, std::uint32_t>> row) {
  finalized_ = false;
  std::sort(row.begin(), row.end());
  SparseRow cur = std::move(row);
  SparseRow tmp;
  while (!cur.empty()) {
    std::uint32_t lead = cur.front().first;
    std::int32_t pr = pivot_row_of_col_[lead];
    if (pr < 0) {
      // normalize to unit pivot and store
      std::uint64_t inv = mod_inverse(cur.front().second, p_);
      for (auto& [c, v] : cur) v = static_cast<std::uint32_t>(v * inv % p_);
      pivot_row_of_col_[lead] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(cur));
      ++n_rows_;
      return true;
    }
    // cur -= cur[lead] * pivot_row (merge of two sorted sparse rows)
    const SparseRow& prow = rows_[pr];
    std::uint64_t f = p_ - cur.front().second;  // multiplier for prow
    tmp.clear();
    tmp.reserve(cur.size() + prow.size());
    std::size_t i = 0, j = 0;
    while (i < cur.size() || j < prow.size()) {
      if (j == prow.size() || (i < cur.size() && cur[i].first < prow[j].first)) {
        tmp.push_back(cur[i++]);
      } else if (i == cur.size() || prow[j].first < cur[i].first) {
        tmp.emplace_back(prow[j].first,
                         static_cast<std::uint32_t>(f * prow[j].second % p_));
        ++j;
      } else {
        std::uint64_t v = cur[i].second + f * prow[j].second % p_;
        v %= p_;
        if (v) tmp.emplace_back(cur[i].first, static_cast<std::uint32_t>(v));
        ++i;
        ++j;
      }
    }
    cur.swap(tmp);
  }
  return false;
}

void OnlineRrefSparse::finalize() {
  if (finalized_) return;
  // back substitute: process pivots right to left, reducing them out of all
  // earlier rows
  std::vector<std::pair<std::uint32_t, std::int32_t>> pivots;  // (col, row)
  for (std::uint32_t c = 0; c < cols_; ++c)
    if (pivot_row_of_col_[c] >= 0) pivots.emplace_back(c, pivot_row_of_col_[c]);
  SparseRow tmp;
  for (std::size_t pi = pivots.size(); pi-- > 0;) {
    auto [pc, prowi] = pivots[pi];
    const SparseRow src = rows_[prowi];
    for (std::size_t qi = 0; qi < pi; ++qi) {
      auto& dst = rows_[pivots[qi].second];
      auto it = std::lower_bound(dst.begin(), dst.end(), std::make_pair(pc, 0u),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      if (it == dst.end() || it->first != pc) continue;
      std::uint64_t f = p_ - it->second;
      tmp.clear();
      tmp.reserve(dst.size() + src.size());
      std::size_t i = 0, j = 0;
      while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
          tmp.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
          tmp.emplace_back(src[j].first,
                           static_cast<std::uint32_t>(f * src[j].second % p_));
          ++j;
        } else {
          std::uint64_t v = (dst[i].second + f * src[j].second) % p_;
          if (v) tmp.emplace_back(dst[i].first, static_cast<std::uint32_t>(v));
          ++i;
          ++j;
        }
      }
      dst.swap(tmp);
    }
  }
  finalized_ = true;
}

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
OnlineRrefSparse::nullspace_sparse() {
  finalize();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> basis;
  for (std::uint32_t f = 0; f < cols_; ++f) {
    if (pivot_row_of_col_[f] >= 0) continue;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> v;
    for (std::uint32_t c = 0; c < cols_; ++c) {
      std::int32_t pr = pivot_row_of_col_[c];
      if (pr < 0) continue;
      const auto& row = rows_[pr];
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(f, 0u),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      if (it != row.end() && it->first == f && it->second)
        v.emplace_back(c, p_ - it->second);
    }
    v.emplace_back(f, 1);
    std::sort(v.begin(), v.end());
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace trilinvar
