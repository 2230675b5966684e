#ifndef TRILINVAR_ACTION_HPP
#define TRILINVAR_ACTION_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "trilinvar/polynomial.hpp"

namespace trilinvar {

/// 3x3x3 integer array, the evaluation point for polynomials.
struct Array333 {
  std::array<mpz_class, 27> x{};

  mpz_class& at(int i, int j, int k) { return x[9 * i + 3 * j + k]; }
  const mpz_class& at(int i, int j, int k) const { return x[9 * i + 3 * j + k]; }

  static Array333 diagonal_ones();
};

/// 3x3 integer matrix, row major.
using Mat3 = std::array<mpz_class, 9>;

mpz_class det3(const Mat3& A);
Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& A, const Mat3& B);

/// Simultaneous basis change: a triple of determinant 1 matrices acting
/// along the three directions.
struct GroupAction {
  Mat3 A = mat3_identity();
  Mat3 B = mat3_identity();
  Mat3 C = mat3_identity();
};

/// Checks det(A) = det(B) = det(C) = 1 exactly; throws otherwise.
void check_special(const GroupAction& g);

/// Array transform dual to the coordinate action, chosen so that
///   evaluate(f, transform(X, g)) == evaluate(g . f, X)
/// holds for every polynomial f. Concretely
///   X'[i][j][k] = sum_{p,q,r} A[p][i] B[q][j] C[r][k] X[p][q][r].
/// Composition: transform(transform(X, g), h) == transform(X, g * h)
/// where (g * h) multiplies the three matrix components.
Array333 transform(const Array333& X, const GroupAction& g);

/// Product of `count` (default random in 3..6) transvections I + t*E_ab
/// with a != b and 0 < |t| <= 3; determinant exactly 1.
Mat3 random_sl3(std::mt19937_64& rng);
Mat3 random_sl3(std::mt19937_64& rng, int transvections);

/// Exact evaluation at an integer array.
mpz_class evaluate(const Polynomial& p, const Array333& X);

struct InvarianceReport {
  int trials = 0;
  int passed = 0;
  int failed = 0;
  std::optional<int> first_failure;  // trial index
  bool ok() const { return failed == 0; }
};

/// Randomized SL3(Z)^3 invariance check: per trial, a random array with
/// entries in [-9, 9] and a random triple of transvection products; exact
/// equality of the two evaluations is required. Trials run in parallel;
/// results are deterministic for a fixed seed.
InvarianceReport invariance_test(const Polynomial& p, int trials,
                                 std::uint64_t seed);

}  // namespace trilinvar

#endif
