#ifndef TRILINVAR_POLYNOMIAL_HPP
#define TRILINVAR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trilinvar/exponent.hpp"

namespace trilinvar {

/// Sparse multivariate polynomial in the 27 variables with exact integer
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::unordered_map<ExponentArray, mpz_class, ExponentHash>;

  Polynomial() = default;

  static Polynomial monomial(const ExponentArray& E, mpz_class coeff = 1);

  /// coeff may be zero (no-op); entries that cancel are erased.
  void add_term(const ExponentArray& E, const mpz_class& coeff);

  /// Coefficient of E, zero if absent.
  mpz_class coefficient(const ExponentArray& E) const;
  bool contains(const ExponentArray& E) const { return terms_.count(E) != 0; }

  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Every stored term has this total degree (throws if terms are mixed).
  int homogeneous_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& scalar);

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

  bool operator==(const Polynomial& other) const;

  const TermMap& terms() const { return terms_; }

  /// Terms sorted ascending in the monomial order.
  std::vector<std::pair<ExponentArray, mpz_class>> sorted_terms() const;

 private:
  TermMap terms_;
};

}  // namespace trilinvar

#endif
