#include "trilinvar/action.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

#include "trilinvar/parallel.hpp"

namespace trilinvar {

Array333 Array333::diagonal_ones() {
  Array333 X;
  for (int i = 0; i < 3; ++i) X.at(i, i, i) = 1;
  return X;
}

mpz_class det3(const Mat3& A) {
  return A[0] * (A[4] * A[8] - A[5] * A[7]) -
         A[1] * (A[3] * A[8] - A[5] * A[6]) +
         A[2] * (A[3] * A[7] - A[4] * A[6]);
}

Mat3 mat3_identity() {
  Mat3 I{};
  I[0] = I[4] = I[8] = 1;
  return I;
}

Mat3 mat3_mul(const Mat3& A, const Mat3& B) {
  Mat3 C{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpz_class s = 0;
      for (int k = 0; k < 3; ++k) s += A[3 * i + k] * B[3 * k + j];
      C[3 * i + j] = s;
    }
  return C;
}

void check_special(const GroupAction& g) {
  if (det3(g.A) != 1 || det3(g.B) != 1 || det3(g.C) != 1)
    throw std::invalid_argument("transform: determinant must be 1");
}

Array333 transform(const Array333& X, const GroupAction& g) {
  check_special(g);
  // stage the triple contraction one direction at a time
  Array333 t1, t2, out;
  for (int i = 0; i < 3; ++i)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        mpz_class s = 0;
        for (int p = 0; p < 3; ++p) s += g.A[3 * p + i] * X.at(p, q, r);
        t1.at(i, q, r) = s;
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r) {
        mpz_class s = 0;
        for (int q = 0; q < 3; ++q) s += g.B[3 * q + j] * t1.at(i, q, r);
        t2.at(i, j, r) = s;
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        mpz_class s = 0;
        for (int r = 0; r < 3; ++r) s += g.C[3 * r + k] * t2.at(i, j, r);
        out.at(i, j, k) = s;
      }
  return out;
}

Mat3 random_sl3(std::mt19937_64& rng, int transvections) {
  Mat3 M = mat3_identity();
  std::uniform_int_distribution<int> pos(0, 2);
  std::uniform_int_distribution<int> shift(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int n = 0; n < transvections; ++n) {
    int a = pos(rng), b = pos(rng);
    while (b == a) b = pos(rng);
    int t = shift(rng) * (coin(rng) ? 1 : -1);
    // M <- M * (I + t*E_ab): column b gains t * column a
    Mat3 T = mat3_identity();
    T[3 * a + b] = t;
    M = mat3_mul(M, T);
  }
  return M;
}

Mat3 random_sl3(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(3, 6);
  return random_sl3(rng, count(rng));
}

mpz_class evaluate(const Polynomial& p, const Array333& X) {
  // power table: pow[v][e] = X[v]^e up to the largest exponent seen
  int max_exp = 0;
  for (const auto& [E, c] : p.terms())
    for (auto v : E.e) max_exp = std::max(max_exp, int(v));
  std::vector<std::array<mpz_class, 27>> pow(max_exp + 1);
  for (int v = 0; v < 27; ++v) pow[0][v] = 1;
  for (int e = 1; e <= max_exp; ++e)
    for (int v = 0; v < 27; ++v) pow[e][v] = pow[e - 1][v] * X.x[v];
  mpz_class total = 0, term;
  for (const auto& [E, c] : p.terms()) {
    term = c;
    for (int v = 0; v < 27; ++v)
      if (E.e[v]) term *= pow[E.e[v]][v];
    total += term;
  }
  return total;
}

InvarianceReport invariance_test(const Polynomial& p, int trials,
                                 std::uint64_t seed) {
  InvarianceReport report;
  report.trials = trials;
  std::vector<char> outcome(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    // independent deterministic stream per trial
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (trial + 1));
    std::uniform_int_distribution<int> entry(-9, 9);
    Array333 X;
    for (int v = 0; v < 27; ++v) X.x[v] = entry(rng);
    GroupAction g;
    g.A = random_sl3(rng);
    g.B = random_sl3(rng);
    g.C = random_sl3(rng);
    mpz_class before = evaluate(p, X);
    mpz_class after = evaluate(p, transform(X, g));
    outcome[trial] = (before == after) ? 1 : 0;
  });
  for (int i = 0; i < trials; ++i) {
    if (outcome[i]) {
      ++report.passed;
    } else {
      ++report.failed;
      if (!report.first_failure) report.first_failure = i;
    }
  }
  return report;
}

}  // namespace trilinvar
