#include "trilinvar/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "trilinvar/raising.hpp"

namespace trilinvar {

namespace {

// All 3x3 non-negative integer matrices with total sum q, ascending in lex
// order of their 9 flattened entries.
std::vector<std::array<std::uint8_t, 9>> slices_with_sum(int q) {
  std::vector<std::array<std::uint8_t, 9>> out;
  std::array<std::uint8_t, 9> s{};
  // nested composition loop, last entry forced
  for (int f0 = 0; f0 <= q; ++f0)
    for (int f1 = 0; f1 <= q - f0; ++f1)
      for (int f2 = 0; f2 <= q - f0 - f1; ++f2)
        for (int f3 = 0; f3 <= q - f0 - f1 - f2; ++f3)
          for (int f4 = 0; f4 <= q - f0 - f1 - f2 - f3; ++f4)
            for (int f5 = 0; f5 <= q - f0 - f1 - f2 - f3 - f4; ++f5)
              for (int f6 = 0; f6 <= q - f0 - f1 - f2 - f3 - f4 - f5; ++f6)
                for (int f7 = 0; f7 <= q - f0 - f1 - f2 - f3 - f4 - f5 - f6; ++f7) {
                  int f8 = q - f0 - f1 - f2 - f3 - f4 - f5 - f6 - f7;
                  s = {std::uint8_t(f0), std::uint8_t(f1), std::uint8_t(f2),
                       std::uint8_t(f3), std::uint8_t(f4), std::uint8_t(f5),
                       std::uint8_t(f6), std::uint8_t(f7), std::uint8_t(f8)};
                  out.push_back(s);
                }
  return out;
}

inline int row_sum(const std::array<std::uint8_t, 9>& s, int j) {
  return s[3 * j] + s[3 * j + 1] + s[3 * j + 2];
}
inline int col_sum(const std::array<std::uint8_t, 9>& s, int k) {
  return s[k] + s[3 + k] + s[6 + k];
}

// Emit, in lex order, every 3x3 matrix with the given row and column sums.
template <typename F>
void for_each_margin_matrix(const int r[3], const int c[3], F&& emit) {
  for (int m00 = 0; m00 <= std::min(r[0], c[0]); ++m00)
    for (int m01 = 0; m01 <= std::min(r[0] - m00, c[1]); ++m01) {
      int m02 = r[0] - m00 - m01;
      if (m02 > c[2]) continue;
      for (int m10 = 0; m10 <= std::min(r[1], c[0] - m00); ++m10)
        for (int m11 = 0; m11 <= std::min(r[1] - m10, c[1] - m01); ++m11) {
          int m12 = r[1] - m10 - m11;
          if (m12 > c[2] - m02) continue;
          int m20 = c[0] - m00 - m10;
          int m21 = c[1] - m01 - m11;
          int m22 = c[2] - m02 - m12;
          // margins are consistent, so row 2 sums to r[2] automatically
          emit(m00, m01, m02, m10, m11, m12, m20, m21, m22);
        }
    }
}

}  // namespace

std::vector<ExponentArray> generate_weight_zero(int N) {
  if (N < 0) throw std::invalid_argument("generate_weight_zero: N >= 0");
  std::vector<ExponentArray> out;
  if (N % 3 != 0) return out;
  const int q = N / 3;

  // The flattening is (slice i=1, slice i=2, slice i=3), each slice itself
  // flattened by (j,k); enumerating slices in ascending lex order therefore
  // yields the full list already sorted.
  auto slices = slices_with_sum(q);
  for (const auto& s0 : slices) {
    for (const auto& s1 : slices) {
      int r[3], c[3];
      bool ok = true;
      for (int j = 0; j < 3; ++j) {
        r[j] = q - row_sum(s0, j) - row_sum(s1, j);
        if (r[j] < 0) { ok = false; break; }
      }
      if (!ok) continue;
      for (int k = 0; k < 3; ++k) {
        c[k] = q - col_sum(s0, k) - col_sum(s1, k);
        if (c[k] < 0) { ok = false; break; }
      }
      if (!ok) continue;
      for_each_margin_matrix(r, c, [&](int m00, int m01, int m02, int m10,
                                       int m11, int m12, int m20, int m21,
                                       int m22) {
        ExponentArray E;
        for (int t = 0; t < 9; ++t) E.e[t] = s0[t];
        for (int t = 0; t < 9; ++t) E.e[9 + t] = s1[t];
        E.e[18] = std::uint8_t(m00);
        E.e[19] = std::uint8_t(m01);
        E.e[20] = std::uint8_t(m02);
        E.e[21] = std::uint8_t(m10);
        E.e[22] = std::uint8_t(m11);
        E.e[23] = std::uint8_t(m12);
        E.e[24] = std::uint8_t(m20);
        E.e[25] = std::uint8_t(m21);
        E.e[26] = std::uint8_t(m22);
        out.push_back(E);
      });
    }
  }
  return out;
}

namespace {

// transpose directions 1<->2 or 1<->3
ExponentArray transpose12(const ExponentArray& E) {
  ExponentArray out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.at(i, j, k) = E.at(j, i, k);
  return out;
}

ExponentArray transpose13(const ExponentArray& E) {
  ExponentArray out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.at(i, j, k) = E.at(k, j, i);
  return out;
}

std::vector<ExponentArray> higher_weight_direction1(
    const std::vector<ExponentArray>& weight_zero, int root) {
  std::vector<ExponentArray> images;
  images.reserve(weight_zero.size() * 4);
  OperatorId op{1, root};
  for (const auto& E : weight_zero)
    for (const auto& term : apply_raising(op, E)) images.push_back(term.image);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace

std::vector<ExponentArray> generate_higher_weight(int N, int direction, int root) {
  if (direction < 1 || direction > 3 || root < 1 || root > 2)
    throw std::invalid_argument("generate_higher_weight: direction in 1..3, root in 1..2");
  auto wz = generate_weight_zero(N);
  auto base = higher_weight_direction1(wz, root);
  if (direction == 1) return base;
  for (auto& E : base) E = (direction == 2) ? transpose12(E) : transpose13(E);
  std::sort(base.begin(), base.end());
  return base;
}

DegreeBasis build_degree_basis(int N) {
  DegreeBasis b;
  b.degree = N;
  b.weight_zero = generate_weight_zero(N);
  for (int root = 1; root <= 2; ++root) {
    auto base = higher_weight_direction1(b.weight_zero, root);
    auto t12 = base;
    for (auto& E : t12) E = transpose12(E);
    std::sort(t12.begin(), t12.end());
    auto t13 = base;
    for (auto& E : t13) E = transpose13(E);
    std::sort(t13.begin(), t13.end());
    b.higher[root - 1] = std::move(base);
    b.higher[2 + root - 1] = std::move(t12);
    b.higher[4 + root - 1] = std::move(t13);
  }
  return b;
}

std::size_t monomial_index(const ExponentArray& E,
                           const std::vector<ExponentArray>& basis) {
  auto it = std::lower_bound(basis.begin(), basis.end(), E);
  if (it == basis.end() || !(*it == E))
    throw std::out_of_range("monomial_index: monomial not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace trilinvar
