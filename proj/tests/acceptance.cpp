// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "trilinvar/action.hpp"
#include "trilinvar/basis.hpp"
#include "trilinvar/intmat.hpp"
#include "trilinvar/io.hpp"
#include "trilinvar/modmat.hpp"
#include "trilinvar/pipeline.hpp"
#include "trilinvar/symmetry.hpp"

using namespace trilinvar;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string message;
  bool ok = true;
  try {
    body();
  } catch (const std::exception& e) {
    ok = false;
    message = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
              message.empty() ? "" : " -- ", message.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

std::vector<OrbitRow> golden_orbit_table(const std::string& name) {
  return read_orbit_table(std::filesystem::path(TEST_DATA_DIR) / name);
}

// golden degree 12 data: per orbit i12, i12prime, representative, size
struct Degree12GoldenRow {
  mpz_class i12, i12p;
  ExponentArray rep;
  int size;
};

std::vector<Degree12GoldenRow> golden_degree12() {
  std::ifstream in(std::filesystem::path(TEST_DATA_DIR) / "degree12_invariant_pair.txt");
  require(bool(in), "cannot open degree12_invariant_pair.txt");
  std::vector<Degree12GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, rep, size;
    std::getline(ls, a, '\t');
    std::getline(ls, b, '\t');
    std::getline(ls, rep, '\t');
    std::getline(ls, size);
    rows.push_back({mpz_class(a), mpz_class(b), from_line(rep), std::stoi(size)});
  }
  require(rows.size() == 359, "golden degree 12 table has 359 rows");
  return rows;
}

// Bareiss fraction-free elimination: exact rank over Q.
std::size_t rational_rank(std::vector<std::vector<mpz_class>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

mpz_class det_recursive(const IntMatrix& M, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols) {
  if (rows.empty()) return 1;
  mpz_class total = 0;
  int sgn = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto sub = rows;
    sub.erase(sub.begin() + i);
    std::vector<std::size_t> rest(cols.begin() + 1, cols.end());
    total += sgn * M.at(rows[i], cols[0]) * det_recursive(M, sub, rest);
    sgn = -sgn;
  }
  return total;
}

}  // namespace

int main() {
  InvariantRecord i6, i9;
  Degree12Result d12;

  criterion("1. basis counts 1152/22620/302274 and 792/17802/254961", [&] {
    const struct { int n; std::size_t wz, hw; } expect[] = {
        {6, 1152, 792}, {9, 22620, 17802}, {12, 302274, 254961}};
    for (const auto& e : expect) {
      DegreeBasis b = build_degree_basis(e.n);
      require(b.weight_zero.size() == e.wz,
              "weight zero count at degree " + std::to_string(e.n));
      for (int d = 1; d <= 3; ++d)
        for (int r = 1; r <= 2; ++r)
          require(b.higher_weight(d, r).size() == e.hw,
                  "higher weight count at degree " + std::to_string(e.n));
    }
  });

  criterion("2. degree 6: rank 1151, dim 1, table, 1152 terms, annihilation", [&] {
    i6 = compute_I6(101);
    require(i6.rank_trajectory.back() == 1151, "final rank is 1151");
    require(i6.nullity == 1, "nullspace dimension 1");
    require(i6.expanded.term_count() == 1152, "1152 expanded terms");
    auto golden = golden_orbit_table("invariant6_orbit_table.txt");
    require(i6.orbit_table.size() == 8, "8 orbits");
    int total = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      require(i6.orbit_table[i].coeff == golden[i].coeff, "orbit coefficient");
      require(i6.orbit_table[i].rep == golden[i].rep, "orbit representative");
      require(i6.orbit_table[i].orbit_size == golden[i].orbit_size, "orbit size");
      total += i6.orbit_table[i].orbit_size;
    }
    require(total == 1152, "orbit sizes sum to 1152");
    std::set<long> values;
    for (const auto& row : i6.orbit_table) values.insert(row.coeff.get_si());
    require(values == std::set<long>{-10, -4, -2, 1, 2, 4, 8},
            "coefficient set {-10,-4,-2,1,2,4,8}");
    require(verify_annihilation(i6.expanded).ok(), "six annihilation checks");
  });

  criterion("3. degree 9 orbit-fast: 44 orbits, dim 1, table, 4608+4608, annihilation", [&] {
    auto orbits = orbit_decomposition(9);
    require(orbits.size() == 44, "44 orbits");
    i9 = compute_I9(Degree9Mode::orbit_fast, 101);
    require(i9.nullity == 1, "restricted nullspace dimension 1");
    auto golden = golden_orbit_table("invariant9_orbit_table.txt");
    require(i9.orbit_table.size() == 14, "14 carrier orbits");
    for (std::size_t i = 0; i < 14; ++i) {
      require(i9.orbit_table[i].coeff == 1, "coefficient +1");
      require(i9.orbit_table[i].rep == golden[i].rep, "row representative");
      require(i9.orbit_table[i].orbit_size == golden[i].orbit_size, "row size");
    }
    require(i9.expanded.term_count() == 9216, "9216 expanded terms");
    int plus = 0, minus = 0;
    for (const auto& [E, c] : i9.expanded.terms()) {
      if (c == 1) ++plus;
      else if (c == -1) ++minus;
      else throw std::runtime_error("coefficient outside {-1,+1}");
    }
    require(plus == 4608 && minus == 4608, "4608 coefficients of each sign");
    require(verify_annihilation(i9.expanded).ok(), "six annihilation checks");
  });

  criterion("4. degree 12: orbits, rank 357, dim 2, reduced pair, 235/209061, annihilation", [&] {
    d12 = compute_I12_pair(101);
    require(d12.orbit_count == 359, "359 orbits");
    auto golden = golden_degree12();
    require(d12.modular_rank_trajectory ==
                std::vector<std::size_t>(6, 357),
            "modular rank 357 after the first pass, unchanged after");
    require(d12.integer_rank_trajectory == d12.modular_rank_trajectory,
            "integer rank trajectory matches");
    // compare both coefficient columns, the representative and the size on
    // every one of the 359 orbits
    auto orbits = orbit_decomposition(12);
    require(orbits.size() == 359, "decomposition size");
    std::size_t t12 = 0, t12p = 0;
    int nonzero12 = 0;
    for (std::size_t j = 0; j < 359; ++j) {
      require(orbits[j].min_rep == golden[j].rep, "orbit representative");
      require(orbits[j].size == golden[j].size, "orbit size");
    }
    auto coeff_of = [](const InvariantRecord& rec, const ExponentArray& rep) {
      for (const auto& row : rec.orbit_table)
        if (row.rep == rep) return row.coeff;
      return mpz_class(0);
    };
    for (std::size_t j = 0; j < 359; ++j) {
      mpz_class c12 = coeff_of(d12.i12, golden[j].rep);
      mpz_class c12p = coeff_of(d12.i12_prime, golden[j].rep);
      require(c12 == golden[j].i12, "I12 coefficient on orbit " + std::to_string(j + 1));
      require(c12p == golden[j].i12p,
              "I12' coefficient on orbit " + std::to_string(j + 1));
      if (c12 != 0) {
        ++nonzero12;
        t12 += golden[j].size;
      }
      if (c12p != 0) t12p += golden[j].size;
    }
    require(nonzero12 == 235, "I12 nonzero on exactly 235 orbits");
    require(d12.i12.expanded.term_count() == 209061, "209061 expanded terms");
    require(t12 == 209061, "orbit sizes of carriers sum to 209061");
    require(verify_annihilation(d12.i12.expanded).ok(), "I12 annihilated");
    require(verify_annihilation(d12.i12_prime.expanded).ok(), "I12' annihilated");
  });

  criterion("5. relation I6^2 = I12' - 21*I12 with zero residual", [&] {
    require(!i6.expanded.is_zero() && !d12.i12.expanded.is_zero(),
            "prerequisite records computed");
    RelationReport rep = verify_relation(i6, d12.i12, d12.i12_prime);
    require(rep.residual_zero, "residual is identically zero");
    require(rep.a == -21 && rep.b == 1, "(a, b) = (-21, 1)");
    // negative control: swapping the pair must break the coefficients
    RelationReport swapped = verify_relation(i6, d12.i12_prime, d12.i12);
    require(!(swapped.a == -21 && swapped.b == 1), "negative control differs");
  });

  criterion("6. degree 3 sanity: nullspace dimension 0", [&] {
    require(nullspace_dimension(3) == 0, "dimension 0");
  });

  criterion("7a. SL3(Z) invariance of I6, I9, I12 on 100 random trials", [&] {
    require(invariance_test(i6.expanded, 100, 2024).ok(), "I6 invariance");
    require(invariance_test(i9.expanded, 100, 2025).ok(), "I9 invariance");
    require(invariance_test(d12.i12.expanded, 100, 2026).ok(), "I12 invariance");
  });

  criterion("7b. epsilon equivariance of I9 under all 1296 elements", [&] {
    for (const auto& g : all_group_elements()) {
      int eps = sign(g);
      for (const auto& [E, c] : i9.expanded.terms())
        if (i9.expanded.coefficient(act(g, E)) != eps * c)
          throw std::runtime_error("equivariance violated");
    }
  });

  criterion("7c. modular rank never exceeds rational rank (200 matrices)", [&] {
    std::mt19937 rng(7777);
    std::uniform_int_distribution<int> entry(-40, 40);
    std::uniform_int_distribution<int> dim(1, 9);
    for (int n = 0; n < 200; ++n) {
      std::size_t rows = dim(rng), cols = dim(rng);
      std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
      for (auto& row : a)
        for (auto& x : row) x = entry(rng) * ((n % 4 == 0) ? 101 : 1);
      std::size_t r0 = rational_rank(a);
      ModMatrix M(101, rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          mpz_class v = a[r][c] % 101;
          if (v < 0) v += 101;
          M.at(r, c) = static_cast<std::uint32_t>(v.get_ui());
        }
      auto info = rref_mod(M);
      require(info.rank <= r0, "rank_p <= rank_Q");
    }
  });

  criterion("7d. HNF unimodularity and Lagrange conditions on fuzzed input", [&] {
    std::mt19937 rng(8888);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int n = 0; n < 100; ++n) {
      IntMatrix M(dim(rng), dim(rng));
      for (auto& x : M.a) x = entry(rng);
      HnfResult res = hnf(M);
      std::vector<std::size_t> idx(res.U.rows);
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      mpz_class d = det_recursive(res.U, idx, idx);
      require(d == 1 || d == -1, "U unimodular");
      // U * M == H
      for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) {
          mpz_class s = 0;
          for (std::size_t k = 0; k < M.rows; ++k)
            s += res.U.at(i, k) * M.at(k, j);
          require(s == res.H.at(i, j), "U*M == H");
        }
    }
    // a larger unimodular transform has integer inverse: its HNF is I
    {
      IntMatrix M(20, 20);
      std::uniform_int_distribution<int> small(-3, 3);
      for (auto& x : M.a) x = small(rng);
      for (std::size_t i = 0; i < 20; ++i) M.at(i, i) = 1;
      HnfResult res = hnf(M);
      HnfResult uu = hnf(res.U);
      require(uu.rank == 20, "U has full rank");
      for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 20; ++j)
          require(uu.H.at(i, j) == (i == j ? 1 : 0), "HNF of unimodular U is I");
    }
    std::uniform_int_distribution<int> ventry(-50, 50);
    int reduced_pairs = 0;
    for (int n = 0; n < 200; ++n) {
      std::vector<mpz_class> b1(4), b2(4);
      for (auto& x : b1) x = ventry(rng);
      for (auto& x : b2) x = ventry(rng);
      mpz_class g_in =
          dot(b1, b1) * dot(b2, b2) - dot(b1, b2) * dot(b1, b2);
      if (g_in == 0) continue;  // dependent
      LatticeBasis2 red = gauss_lagrange(b1, b2);
      mpz_class n1 = dot(red.b1, red.b1), n2 = dot(red.b2, red.b2);
      mpz_class inner = dot(red.b1, red.b2);
      require(n1 <= n2, "|b1| <= |b2|");
      require(2 * abs(inner) <= n1, "Lagrange condition");
      mpz_class g_out = n1 * n2 - inner * inner;
      require(g_in == g_out, "Gram determinant preserved");
      ++reduced_pairs;
    }
    require(reduced_pairs > 150, "enough independent pairs exercised");
  });

  criterion("7e. prime independence of I6 and I9 at p = 103", [&] {
    InvariantRecord i6b = compute_I6(103);
    require(i6b.expanded == i6.expanded, "I6 unchanged at 103");
    InvariantRecord i9b = compute_I9(Degree9Mode::orbit_fast, 103);
    require(i9b.expanded == i9.expanded, "I9 unchanged at 103");
    require(nullspace_dimension(6, 103) == 1, "dimension 1 at 103");
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "OK", failures);
  return failures ? 1 : 0;
}
