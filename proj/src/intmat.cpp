#include "trilinvar/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace trilinvar {

IntMatrix transpose(const IntMatrix& M) {
  IntMatrix T(M.cols, M.rows);
  for (std::size_t r = 0; r < M.rows; ++r)
    for (std::size_t c = 0; c < M.cols; ++c) T.at(c, r) = M.at(r, c);
  return T;
}

bool is_zero_row(const IntMatrix& M, std::size_t r) {
  for (std::size_t c = 0; c < M.cols; ++c)
    if (M.at(r, c) != 0) return false;
  return true;
}

HnfResult hnf(const IntMatrix& M) {
  const std::size_t n = M.rows, m = M.cols;
  HnfResult res;
  res.H = M;
  res.U = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) res.U.at(i, i) = 1;
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;

  auto row_combine = [&](std::size_t r1, std::size_t r2, const mpz_class& a,
                         const mpz_class& b, const mpz_class& c, const mpz_class& d) {
    // (row r1, row r2) <- (a*r1 + b*r2, c*r1 + d*r2); ad - bc = +-1
    mpz_class t1, t2;
    for (std::size_t j = 0; j < m; ++j) {
      t1 = a * H.at(r1, j) + b * H.at(r2, j);
      t2 = c * H.at(r1, j) + d * H.at(r2, j);
      H.at(r1, j) = t1;
      H.at(r2, j) = t2;
    }
    for (std::size_t j = 0; j < n; ++j) {
      t1 = a * U.at(r1, j) + b * U.at(r2, j);
      t2 = c * U.at(r1, j) + d * U.at(r2, j);
      U.at(r1, j) = t1;
      U.at(r2, j) = t2;
    }
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m; ++j) H.at(dst, j) -= q * H.at(src, j);
    for (std::size_t j = 0; j < n; ++j) U.at(dst, j) -= q * U.at(src, j);
  };
  auto row_swap = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < m; ++j) std::swap(H.at(r1, j), H.at(r2, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(U.at(r1, j), U.at(r2, j));
  };
  auto row_negate = [&](std::size_t r) {
    for (std::size_t j = 0; j < m; ++j) H.at(r, j) = -H.at(r, j);
    for (std::size_t j = 0; j < n; ++j) U.at(r, j) = -U.at(r, j);
  };

  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  mpz_class g, s, t, q;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    // clear column c below row r with gcd combinations into row `pos`
    std::size_t pos = r;
    while (pos < n && H.at(pos, c) == 0) ++pos;
    if (pos == n) continue;
    row_swap(r, pos);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (H.at(i, c) == 0) continue;
      const mpz_class &hr = H.at(r, c), &hi = H.at(i, c);
      if (hi % hr == 0) {
        q = hi / hr;
        row_axpy(i, r, q);
      } else {
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), hr.get_mpz_t(),
                   hi.get_mpz_t());
        // (r, i) <- (s*r + t*i, -(hi/g)*r + (hr/g)*i); determinant is 1
        row_combine(r, i, s, t, -(hi / g), hr / g);
      }
    }
    if (H.at(r, c) < 0) row_negate(r);
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
      row_axpy(i, r, q);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

// ---------------------------------------------------------------------------

OnlineHnf::OnlineHnf(std::size_t cols)
    : cols_(cols), pivot_row_of_col_(cols, -1) {}

void OnlineHnf::insert_row(std::vector<mpz_class> v) {
  std::size_t lead = 0;
  while (lead < cols_ && v[lead] == 0) ++lead;
  if (v[lead] < 0)
    for (auto& x : v) x = -x;
  std::vector<std::uint32_t> sup;
  for (std::uint32_t j = 0; j < cols_; ++j)
    if (v[j] != 0) sup.push_back(j);
  pivot_row_of_col_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  support_.push_back(std::move(sup));
}

bool OnlineHnf::add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& row) {
  std::vector<mpz_class> v(cols_);
  bool any = false;
  for (auto [c, val] : row) {
    if (!val) continue;
    v[c] = val;
    any = true;
  }
  if (!any) return false;
  mpz_class g, s, t, q;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    std::int32_t pr = pivot_row_of_col_[c];
    if (pr < 0) {
      insert_row(std::move(v));
      return true;
    }
    auto& prow = rows_[pr];
    const mpz_class& h = prow[c];
    if (v[c] % h == 0) {
      q = v[c] / h;
      // v -= q * pivot row, walking the pivot row's support only
      for (auto j : support_[pr]) v[j] -= q * prow[j];
    } else {
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h.get_mpz_t(),
                 v[c].get_mpz_t());
      mpz_class hg = h / g, vg = v[c] / g;
      mpz_class t1, t2;
      for (std::size_t j = c; j < cols_; ++j) {
        t1 = s * prow[j] + t * v[j];
        t2 = -vg * prow[j] + hg * v[j];
        prow[j] = t1;
        v[j] = t2;
      }
      // pivot row mutated: rebuild its support
      auto& sup = support_[pr];
      sup.clear();
      for (std::uint32_t j = 0; j < cols_; ++j)
        if (prow[j] != 0) sup.push_back(j);
    }
  }
  return false;
}

void OnlineHnf::normalize() {
  // sort rows by pivot column
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (pivot col, row idx)
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_of_col_[c] >= 0) order.emplace_back(c, pivot_row_of_col_[c]);
  std::vector<std::vector<mpz_class>> sorted;
  sorted.reserve(order.size());
  for (auto& [c, idx] : order) sorted.push_back(std::move(rows_[idx]));
  rows_ = std::move(sorted);
  std::fill(pivot_row_of_col_.begin(), pivot_row_of_col_.end(), -1);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    pivot_row_of_col_[order[r].first] = static_cast<std::int32_t>(r);
  // reduce above pivots left to right, so already reduced pivot columns
  // are never disturbed again
  mpz_class q;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t c = order[r].first;
    const auto& src = rows_[r];
    for (std::size_t i = 0; i < r; ++i) {
      auto& dst = rows_[i];
      if (dst[c] == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), dst[c].get_mpz_t(), src[c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) dst[j] -= q * src[j];
    }
  }
  // rebuild supports
  support_.assign(rows_.size(), {});
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::uint32_t j = 0; j < cols_; ++j)
      if (rows_[r][j] != 0) support_[r].push_back(j);
}

IntMatrix OnlineHnf::matrix() {
  normalize();
  IntMatrix M(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) M.at(r, c) = rows_[r][c];
  return M;
}

// ---------------------------------------------------------------------------

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeBasis2 gauss_lagrange(std::vector<mpz_class> b1, std::vector<mpz_class> b2) {
  if (b1.size() != b2.size())
    throw std::invalid_argument("gauss_lagrange: length mismatch");
  mpz_class n1 = dot(b1, b1), n2 = dot(b2, b2);
  if (n1 == 0 || n2 == 0)
    throw std::invalid_argument("gauss_lagrange: zero vector");
  if (n1 > n2) {
    b1.swap(b2);
    std::swap(n1, n2);
  }
  mpz_class mu, num, half, t;
  while (true) {
    // mu = nearest integer to <b1,b2>/<b1,b1>
    num = dot(b1, b2);
    mpz_class twice = 2 * num;
    // round half toward zero keeps the loop deterministic
    mu = num / n1;  // truncated
    t = num - mu * n1;
    if (2 * t > n1) mu += 1;
    if (2 * t < -n1) mu -= 1;
    if (mu != 0)
      for (std::size_t i = 0; i < b2.size(); ++i) b2[i] -= mu * b1[i];
    n2 = dot(b2, b2);
    if (n2 == 0) throw std::invalid_argument("gauss_lagrange: dependent input");
    if (n2 >= n1) break;
    b1.swap(b2);
    std::swap(n1, n2);
  }
  return {std::move(b1), std::move(b2)};
}

}  // namespace trilinvar
