#include "trilinvar/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace trilinvar {

Polynomial Polynomial::monomial(const ExponentArray& E, mpz_class coeff) {
  Polynomial p;
  p.add_term(E, coeff);
  return p;
}

void Polynomial::add_term(const ExponentArray& E, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(E, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class Polynomial::coefficient(const ExponentArray& E) const {
  auto it = terms_.find(E);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [E, c] : terms_)
    if (E.degree() != d)
      throw std::logic_error("homogeneous_degree: mixed degrees");
  return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [E, c] : other.terms_) add_term(E, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [E, c] : other.terms_) add_term(E, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [E, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  // iterate the smaller factor in the outer loop
  const Polynomial& outer = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& inner = a.terms_.size() <= b.terms_.size() ? b : a;
  mpz_class prod;
  for (const auto& [Ea, ca] : outer.terms_) {
    for (const auto& [Eb, cb] : inner.terms_) {
      prod = ca * cb;
      out.add_term(Ea + Eb, prod);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& [E, c] : terms_) {
    auto it = other.terms_.find(E);
    if (it == other.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<std::pair<ExponentArray, mpz_class>> Polynomial::sorted_terms() const {
  std::vector<std::pair<ExponentArray, mpz_class>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace trilinvar
