#include "trilinvar/raising.hpp"

#include <algorithm>
#include <stdexcept>

#include "trilinvar/basis.hpp"

namespace trilinvar {

std::vector<OperatorId> all_operators() {
  return {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
}

std::vector<RaisingTerm> apply_raising(OperatorId op, const ExponentArray& E) {
  if (op.direction < 1 || op.direction > 3 || op.root < 1 || op.root > 2)
    throw std::invalid_argument("apply_raising: bad operator id");
  std::vector<RaisingTerm> out;
  const int m = op.root - 1;  // 0-based level being raised into
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      int src, dst;
      switch (op.direction) {
        case 1:
          src = 9 * (m + 1) + 3 * a + b;
          dst = 9 * m + 3 * a + b;
          break;
        case 2:
          src = 9 * a + 3 * (m + 1) + b;
          dst = 9 * a + 3 * m + b;
          break;
        default:
          src = 9 * a + 3 * b + (m + 1);
          dst = 9 * a + 3 * b + m;
          break;
      }
      int e = E.e[src];
      if (e > 0) {
        RaisingTerm t{e, E};
        --t.image.e[src];
        ++t.image.e[dst];
        out.push_back(t);
      }
    }
  return out;
}

Polynomial apply_raising_poly(OperatorId op, const Polynomial& p) {
  Polynomial out;
  mpz_class scaled;
  for (const auto& [E, c] : p.terms()) {
    for (const auto& t : apply_raising(op, E)) {
      scaled = c * t.coeff;
      out.add_term(t.image, scaled);
    }
  }
  return out;
}

namespace {

void finalize_triplets(OperatorMatrix& m, std::uint32_t modulus) {
  auto& tr = m.triplets;
  std::sort(tr.begin(), tr.end(), [](const MatrixTriplet& a, const MatrixTriplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // merge duplicates
  std::size_t w = 0;
  for (std::size_t r = 0; r < tr.size(); ++r) {
    if (w > 0 && tr[w - 1].row == tr[r].row && tr[w - 1].col == tr[r].col) {
      tr[w - 1].value += tr[r].value;
    } else {
      tr[w++] = tr[r];
    }
  }
  tr.resize(w);
  if (modulus) {
    for (auto& t : tr) {
      t.value %= static_cast<std::int64_t>(modulus);
      if (t.value < 0) t.value += modulus;
    }
  }
  tr.erase(std::remove_if(tr.begin(), tr.end(),
                          [](const MatrixTriplet& t) { return t.value == 0; }),
           tr.end());
}

}  // namespace

OperatorMatrix build_operator_matrix(const DegreeBasis& basis, OperatorId op,
                                     std::uint32_t modulus) {
  OperatorMatrix m;
  m.op = op;
  const auto& target = basis.higher_weight(op.direction, op.root);
  m.rows = target.size();
  m.cols = basis.weight_zero.size();
  m.triplets.reserve(m.cols * 4);
  for (std::uint32_t c = 0; c < m.cols; ++c) {
    for (const auto& t : apply_raising(op, basis.weight_zero[c])) {
      std::uint32_t r = static_cast<std::uint32_t>(monomial_index(t.image, target));
      m.triplets.push_back({r, c, t.coeff});
    }
  }
  finalize_triplets(m, modulus);
  return m;
}

OperatorMatrix build_restricted_matrix(const DegreeBasis& basis, OperatorId op,
                                       const std::vector<Polynomial>& columns,
                                       std::uint32_t modulus) {
  OperatorMatrix m;
  m.op = op;
  const auto& target = basis.higher_weight(op.direction, op.root);
  m.rows = target.size();
  m.cols = columns.size();
  for (std::uint32_t j = 0; j < columns.size(); ++j) {
    for (const auto& [E, c] : columns[j].terms()) {
      if (!c.fits_slong_p())
        throw std::overflow_error("build_restricted_matrix: column coefficient too large");
      long cl = c.get_si();
      for (const auto& t : apply_raising(op, E)) {
        std::uint32_t r = static_cast<std::uint32_t>(monomial_index(t.image, target));
        m.triplets.push_back({r, j, cl * t.coeff});
      }
    }
  }
  finalize_triplets(m, modulus);
  return m;
}

}  // namespace trilinvar
