#include <doctest.h>

#include <stdexcept>

#include <random>

#include "trilinvar/action.hpp"

using namespace trilinvar;

namespace {

Array333 random_array(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  Array333 X;
  for (auto& x : X.x) x = entry(rng);
  return X;
}

Polynomial random_poly(std::mt19937_64& rng, int terms, int degree) {
  std::uniform_int_distribution<int> var(0, 26);
  std::uniform_int_distribution<int> coeff(-9, 9);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    ExponentArray E;
    for (int d = 0; d < degree; ++d) ++E.e[var(rng)];
    p.add_term(E, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("transform by the identity") {
  std::mt19937_64 rng(3);
  Array333 X = random_array(rng);
  GroupAction id;
  Array333 Y = transform(X, id);
  CHECK(Y.x == X.x);
}

TEST_CASE("transvection adds a slice multiple") {
  // the contraction runs over the first index of A, so with A = I + 2*E_12
  // slice 2 of the output picks up twice slice 1 of the input
  GroupAction g;
  g.A[3 * 0 + 1] = 2;  // A[0][1] = 2
  Array333 X;
  X.at(0, 1, 1) = 5;
  Array333 Y = transform(X, g);
  CHECK(Y.at(0, 1, 1) == 5);
  CHECK(Y.at(1, 1, 1) == 10);  // 2 * 5 landed on the second slice
}

TEST_CASE("determinant must be one") {
  GroupAction g;
  g.A[0] = 2;  // det 2
  Array333 X;
  CHECK_THROWS_AS(transform(X, g), std::invalid_argument);
}

TEST_CASE("random sl3 matrices are special") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 10000; ++n) {
    Mat3 M = random_sl3(rng);
    CHECK(det3(M) == 1);
  }
  Mat3 I = random_sl3(rng, 0);
  CHECK(I == mat3_identity());
}

TEST_CASE("transform composes through matrix products") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 20; ++n) {
    Array333 X = random_array(rng);
    GroupAction g, h, gh;
    g.A = random_sl3(rng);
    g.B = random_sl3(rng);
    g.C = random_sl3(rng);
    h.A = random_sl3(rng);
    h.B = random_sl3(rng);
    h.C = random_sl3(rng);
    gh.A = mat3_mul(g.A, h.A);
    gh.B = mat3_mul(g.B, h.B);
    gh.C = mat3_mul(g.C, h.C);
    Array333 two_step = transform(transform(X, g), h);
    Array333 one_step = transform(X, gh);
    CHECK(two_step.x == one_step.x);
  }
}

TEST_CASE("evaluate basics") {
  Polynomial p;
  ExponentArray E;
  E.at(0, 0, 0) = 1;
  E.at(1, 1, 1) = 1;
  E.at(2, 2, 2) = 1;
  p.add_term(E, 1);
  CHECK(evaluate(p, Array333::diagonal_ones()) == 1);
  Array333 zero;
  CHECK(evaluate(p, zero) == 0);
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    Polynomial p = random_poly(rng, 5, 3), q = random_poly(rng, 5, 3);
    Array333 X = random_array(rng);
    CHECK(evaluate(p * q, X) == evaluate(p, X) * evaluate(q, X));
    CHECK(evaluate(p + q, X) == evaluate(p, X) + evaluate(q, X));
  }
}

TEST_CASE("homogeneous scaling") {
  std::mt19937_64 rng(13);
  Polynomial p = random_poly(rng, 8, 4);  // homogeneous of degree 4
  Array333 X = random_array(rng);
  Array333 X3;
  for (int v = 0; v < 27; ++v) X3.x[v] = 3 * X.x[v];
  CHECK(evaluate(p, X3) == mpz_class(81) * evaluate(p, X));
}

TEST_CASE("invariance test flags a non invariant") {
  ExponentArray E;
  E.at(0, 0, 0) = 2;
  Polynomial p = Polynomial::monomial(E, 1);
  InvarianceReport rep = invariance_test(p, 20, 99);
  CHECK(rep.failed > 0);
  CHECK(rep.first_failure.has_value());
}
