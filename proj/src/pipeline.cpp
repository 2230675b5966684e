#include "trilinvar/pipeline.hpp"

#include <algorithm>
#include <numeric>

#include "trilinvar/basis.hpp"
#include "trilinvar/intmat.hpp"
#include "trilinvar/modmat.hpp"

namespace trilinvar {

namespace {

// Feed the triplet rows of an operator matrix (sorted by row) into a
// reducer exposing add_row(vector<pair<col,value>>).
template <typename Reducer>
void feed_rows(Reducer& red, const OperatorMatrix& m) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> row;
  std::size_t t = 0;
  while (t < m.triplets.size()) {
    row.clear();
    std::uint32_t r = m.triplets[t].row;
    while (t < m.triplets.size() && m.triplets[t].row == r) {
      row.emplace_back(m.triplets[t].col, m.triplets[t].value);
      ++t;
    }
    red.add_row(row);
  }
}

void feed_rows_sparse_mod(OnlineRrefSparse& red, const OperatorMatrix& m,
                          std::uint32_t p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
  std::size_t t = 0;
  while (t < m.triplets.size()) {
    row.clear();
    std::uint32_t r = m.triplets[t].row;
    while (t < m.triplets.size() && m.triplets[t].row == r) {
      std::int64_t v = m.triplets[t].value % p;
      if (v < 0) v += p;
      if (v) row.emplace_back(m.triplets[t].col, static_cast<std::uint32_t>(v));
      ++t;
    }
    if (!row.empty()) red.add_row(std::move(row));
    row = {};
  }
}

mpz_class coefficient_gcd(const std::vector<OrbitRow>& rows) {
  mpz_class g = 0;
  for (const auto& r : rows) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.coeff.get_mpz_t());
  return g;
}

}  // namespace

ExponentArray degree6_anchor() {
  ExponentArray E;
  E.at(0, 2, 2) = 2;  // x133^2
  E.at(1, 1, 1) = 2;  // x222^2
  E.at(2, 0, 0) = 2;  // x311^2
  return E;
}

ExponentArray degree9_anchor() {
  ExponentArray E;
  E.at(0, 1, 2) = 1;  // x123
  E.at(0, 2, 1) = 1;  // x132
  E.at(0, 2, 2) = 1;  // x133
  E.at(1, 0, 2) = 1;  // x213
  E.at(1, 1, 0) = 1;  // x221
  E.at(1, 2, 1) = 1;  // x232
  E.at(2, 0, 0) = 2;  // x311^2
  E.at(2, 1, 1) = 1;  // x322
  return E;
}

AnnihilationReport verify_annihilation(const Polynomial& p) {
  AnnihilationReport rep;
  auto ops = all_operators();
  for (std::size_t i = 0; i < ops.size(); ++i)
    rep.zero_after_op[i] = apply_raising_poly(ops[i], p).is_zero();
  return rep;
}

InvariantRecord compute_I6(std::uint32_t prime) {
  DegreeBasis basis = build_degree_basis(6);
  const auto& wz = basis.weight_zero;

  InvariantRecord rec;
  rec.degree = 6;
  rec.prime = prime;
  rec.kind = OrbitSumKind::symmetric;

  OnlineRrefDense red(prime, wz.size());
  for (auto op : all_operators()) {
    feed_rows(red, build_operator_matrix(basis, op, prime));
    rec.rank_trajectory.push_back(red.rank());
  }
  auto null_basis = red.nullspace();
  rec.nullity = null_basis.size();
  if (rec.nullity != 1)
    throw PipelineError("degree 6: nullspace dimension " +
                        std::to_string(rec.nullity) + ", expected 1");
  auto v = null_basis.front();

  std::size_t pin = monomial_index(degree6_anchor(), wz);
  if (v[pin] == 0) throw PipelineError("degree 6: anchor coefficient vanishes");
  std::uint64_t scale = mod_inverse(v[pin], prime);
  for (auto& x : v) x = static_cast<std::uint32_t>(x * scale % prime);
  rec.normalization = "coefficient +1 on the orbit of x133^2 x222^2 x311^2";

  auto lifted = symmetric_lift(v, prime);
  for (std::size_t i = 0; i < wz.size(); ++i)
    if (lifted[i]) rec.expanded.add_term(wz[i], lifted[i]);

  // the lifted vector must be constant on symmetry orbits
  auto orbits = orbit_decomposition(wz);
  for (const auto& o : orbits) {
    mpz_class c = rec.expanded.coefficient(o.min_rep);
    for (const auto& member : o.elements)
      if (rec.expanded.coefficient(member) != c)
        throw PipelineError("degree 6: coefficients not constant on an orbit");
    if (c != 0) rec.orbit_table.push_back({c, o.min_rep, o.size});
  }
  if (coefficient_gcd(rec.orbit_table) != 1)
    throw PipelineError("degree 6: coefficient vector is not primitive");

  if (!verify_annihilation(rec.expanded).ok())
    throw PipelineError("degree 6: integer annihilation check failed");
  return rec;
}

namespace {

InvariantRecord finish_degree9(const std::vector<Orbit>& orbits,
                               const std::vector<ExponentArray>& wz,
                               std::vector<std::uint32_t> v, std::uint32_t prime,
                               std::vector<std::size_t> ranks, std::size_t nullity) {
  InvariantRecord rec;
  rec.degree = 9;
  rec.prime = prime;
  rec.kind = OrbitSumKind::alternating;
  rec.rank_trajectory = std::move(ranks);
  rec.nullity = nullity;

  std::size_t pin = monomial_index(degree9_anchor(), wz);
  if (v[pin] == 0) throw PipelineError("degree 9: anchor coefficient vanishes");
  std::uint64_t scale = mod_inverse(v[pin], prime);
  for (auto& x : v) x = static_cast<std::uint32_t>(x * scale % prime);
  rec.normalization =
      "coefficient +1 on x123 x132 x133 x213 x221 x232 x311^2 x322";

  auto lifted = symmetric_lift(v, prime);
  for (std::size_t i = 0; i < wz.size(); ++i) {
    if (!lifted[i]) continue;
    if (lifted[i] != 1 && lifted[i] != -1)
      throw PipelineError("degree 9: lifted coefficient outside {-1,0,1}");
    rec.expanded.add_term(wz[i], lifted[i]);
  }

  for (const auto& o : orbits) {
    // each orbit carries the vector entirely or not at all
    bool carried = rec.expanded.contains(o.min_rep);
    ExponentArray rep;
    bool have_rep = false;
    for (const auto& member : o.elements) {
      mpz_class c = rec.expanded.coefficient(member);
      if ((c != 0) != carried)
        throw PipelineError("degree 9: orbit partially carried");
      if (c == 1 && (!have_rep || member < rep)) {
        rep = member;
        have_rep = true;
      }
    }
    if (carried) {
      if (!have_rep) throw PipelineError("degree 9: carrier orbit without +1 member");
      rec.orbit_table.push_back({1, rep, o.size});
    }
  }
  std::sort(rec.orbit_table.begin(), rec.orbit_table.end(),
            [](const OrbitRow& a, const OrbitRow& b) { return a.rep < b.rep; });

  if (!verify_annihilation(rec.expanded).ok())
    throw PipelineError("degree 9: integer annihilation check failed");
  return rec;
}

}  // namespace

InvariantRecord compute_I9(Degree9Mode mode, std::uint32_t prime) {
  DegreeBasis basis = build_degree_basis(9);
  const auto& wz = basis.weight_zero;
  auto orbits = orbit_decomposition(wz);

  if (mode == Degree9Mode::full_basis) {
    OnlineRrefSparse red(prime, wz.size());
    std::vector<std::size_t> ranks;
    for (auto op : all_operators()) {
      feed_rows_sparse_mod(red, build_operator_matrix(basis, op, prime), prime);
      ranks.push_back(red.rank());
    }
    auto null_basis = red.nullspace_sparse();
    if (null_basis.size() != 1)
      throw PipelineError("degree 9 full basis: nullspace dimension " +
                          std::to_string(null_basis.size()) + ", expected 1");
    std::vector<std::uint32_t> v(wz.size(), 0);
    for (auto [c, val] : null_basis.front()) v[c] = val;
    return finish_degree9(orbits, wz, std::move(v), prime, std::move(ranks), 1);
  }

  // orbit_fast: columns are the nonzero alternating orbit sums
  std::vector<Polynomial> columns;
  for (const auto& o : orbits) {
    OrbitSum s = alternating_orbit_sum(o.min_rep);
    if (!s.poly.is_zero()) columns.push_back(std::move(s.poly));
  }

  OnlineRrefDense red(prime, columns.size());
  std::vector<std::size_t> ranks;
  for (auto op : all_operators()) {
    feed_rows(red, build_restricted_matrix(basis, op, columns, prime));
    ranks.push_back(red.rank());
  }
  auto null_basis = red.nullspace();
  if (null_basis.size() != 1)
    throw PipelineError("degree 9 restricted: nullspace dimension " +
                        std::to_string(null_basis.size()) + ", expected 1");
  const auto& w = null_basis.front();

  std::vector<std::uint32_t> v(wz.size(), 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!w[j]) continue;
    for (const auto& [E, c] : columns[j].terms()) {
      std::int64_t contrib = c.get_si() * static_cast<std::int64_t>(w[j]);
      contrib %= static_cast<std::int64_t>(prime);
      if (contrib < 0) contrib += prime;
      std::size_t idx = monomial_index(E, wz);
      v[idx] = static_cast<std::uint32_t>((v[idx] + contrib) % prime);
    }
  }
  return finish_degree9(orbits, wz, std::move(v), prime, std::move(ranks), 1);
}

Degree12Result compute_I12_pair(std::uint32_t prime) {
  constexpr std::size_t kBlockRows = 639;
  DegreeBasis basis = build_degree_basis(12);
  const auto& wz = basis.weight_zero;
  auto orbits = orbit_decomposition(wz);

  Degree12Result result;
  result.orbit_count = orbits.size();

  std::vector<Polynomial> columns;
  columns.reserve(orbits.size());
  for (const auto& o : orbits) {
    Polynomial s;
    for (const auto& member : o.elements) s.add_term(member, 1);
    columns.push_back(std::move(s));
  }

  // modular rank oracle first
  OnlineRrefDense mod_red(prime, columns.size());
  for (auto op : all_operators()) {
    feed_rows(mod_red, build_restricted_matrix(basis, op, columns, prime));
    result.modular_rank_trajectory.push_back(mod_red.rank());
  }
  std::size_t mod_nullity = columns.size() - mod_red.rank();
  if (mod_nullity != 2)
    throw PipelineError("degree 12: modular nullity " +
                        std::to_string(mod_nullity) + ", expected 2");

  // integer pass: the same rows streamed in blocks through incremental HNF
  OnlineHnf hnf_state(columns.size());
  for (auto op : all_operators()) {
    OperatorMatrix m = build_restricted_matrix(basis, op, columns, 0);
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    stream_row_blocks(m, kBlockRows, [&](std::size_t, const auto& block) {
      for (const auto& dense_row : block) {
        row.clear();
        for (std::uint32_t c = 0; c < dense_row.size(); ++c)
          if (dense_row[c]) row.emplace_back(c, dense_row[c]);
        if (!row.empty()) hnf_state.add_row(row);
      }
    });
    result.integer_rank_trajectory.push_back(hnf_state.rank());
  }
  if (result.integer_rank_trajectory != result.modular_rank_trajectory)
    throw PipelineError("degree 12: integer and modular rank trajectories differ");

  IntMatrix M = hnf_state.matrix();
  IntMatrix Mt = transpose(M);
  HnfResult h = hnf(Mt);
  if (h.rank != M.rows)
    throw PipelineError("degree 12: transpose HNF rank mismatch");
  std::size_t null_dim = Mt.rows - h.rank;
  if (null_dim != 2)
    throw PipelineError("degree 12: integer nullspace dimension " +
                        std::to_string(null_dim) + ", expected 2");

  std::vector<mpz_class> u1(Mt.rows), u2(Mt.rows);
  for (std::size_t j = 0; j < Mt.rows; ++j) {
    u1[j] = h.U.at(h.rank, j);
    u2[j] = h.U.at(h.rank + 1, j);
  }
  // confirm both really annihilate M
  for (const auto* u : {&u1, &u2}) {
    for (std::size_t r = 0; r < M.rows; ++r) {
      mpz_class s = 0;
      for (std::size_t c = 0; c < M.cols; ++c) s += M.at(r, c) * (*u)[c];
      if (s != 0) throw PipelineError("degree 12: nullspace row check failed");
    }
  }

  LatticeBasis2 reduced = gauss_lagrange(std::move(u1), std::move(u2));

  auto pin_first_positive = [](std::vector<mpz_class>& v) {
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  };
  pin_first_positive(reduced.b1);
  pin_first_positive(reduced.b2);

  auto make_record = [&](const std::vector<mpz_class>& coeffs) {
    InvariantRecord rec;
    rec.degree = 12;
    rec.prime = prime;
    rec.kind = OrbitSumKind::symmetric;
    rec.normalization = "first nonzero orbit coefficient +1 after Lagrange reduction";
    rec.rank_trajectory = result.integer_rank_trajectory;
    rec.nullity = 2;
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      if (coeffs[j] == 0) continue;
      rec.orbit_table.push_back({coeffs[j], orbits[j].min_rep, orbits[j].size});
      for (const auto& member : orbits[j].elements)
        rec.expanded.add_term(member, coeffs[j]);
    }
    if (coefficient_gcd(rec.orbit_table) != 1)
      throw PipelineError("degree 12: coefficient vector is not primitive");
    if (!verify_annihilation(rec.expanded).ok())
      throw PipelineError("degree 12: integer annihilation check failed");
    return rec;
  };
  result.i12 = make_record(reduced.b1);
  result.i12_prime = make_record(reduced.b2);
  return result;
}

RelationReport verify_relation(const InvariantRecord& i6,
                               const InvariantRecord& i12,
                               const InvariantRecord& i12_prime) {
  Polynomial square = i6.expanded * i6.expanded;

  // orbit probes: coefficient of each vector at shared representatives
  struct Probe {
    mpz_class p, c1, c2;
  };
  std::vector<Probe> probes;
  auto coeff_in = [](const InvariantRecord& rec, const ExponentArray& rep) {
    for (const auto& row : rec.orbit_table)
      if (row.rep == rep) return row.coeff;
    return mpz_class(0);
  };
  for (const auto& row : i12_prime.orbit_table)
    probes.push_back({square.coefficient(row.rep), coeff_in(i12, row.rep), row.coeff});

  RelationReport rep;
  rep.residual_zero = false;
  // find two probes with an invertible 2x2 coefficient matrix
  for (std::size_t i = 0; i < probes.size() && !rep.residual_zero; ++i) {
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      mpz_class det = probes[i].c1 * probes[j].c2 - probes[i].c2 * probes[j].c1;
      if (det == 0) continue;
      mpz_class na = probes[i].p * probes[j].c2 - probes[i].c2 * probes[j].p;
      mpz_class nb = probes[i].c1 * probes[j].p - probes[i].p * probes[j].c1;
      if (na % det != 0 || nb % det != 0) return rep;  // no integer solution
      rep.a = na / det;
      rep.b = nb / det;
      Polynomial residual = square;
      Polynomial t12 = i12.expanded;
      t12 *= rep.a;
      residual -= t12;
      Polynomial t12p = i12_prime.expanded;
      t12p *= rep.b;
      residual -= t12p;
      rep.residual_zero = residual.is_zero();
      return rep;
    }
  }
  return rep;
}

std::size_t nullspace_dimension(int N, std::uint32_t prime, DimensionMode mode) {
  if (mode == DimensionMode::automatic)
    mode = (N <= 6) ? DimensionMode::full_basis : DimensionMode::orbit_restricted;

  DegreeBasis basis = build_degree_basis(N);
  if (basis.weight_zero.empty()) return 0;

  if (mode == DimensionMode::full_basis) {
    OnlineRrefDense red(prime, basis.weight_zero.size());
    for (auto op : all_operators())
      feed_rows(red, build_operator_matrix(basis, op, prime));
    return basis.weight_zero.size() - red.rank();
  }

  // orbit restricted: the span the invariants are known to live in
  auto orbits = orbit_decomposition(basis.weight_zero);
  std::vector<Polynomial> columns;
  for (const auto& o : orbits) {
    if (N == 9) {
      OrbitSum s = alternating_orbit_sum(o.min_rep);
      if (!s.poly.is_zero()) columns.push_back(std::move(s.poly));
    } else {
      Polynomial s;
      for (const auto& member : o.elements) s.add_term(member, 1);
      columns.push_back(std::move(s));
    }
  }
  if (columns.empty()) return 0;
  OnlineRrefDense red(prime, columns.size());
  for (auto op : all_operators())
    feed_rows(red, build_restricted_matrix(basis, op, columns, prime));
  return columns.size() - red.rank();
}

}  // namespace trilinvar
