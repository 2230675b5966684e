// trilinvar: fundamental invariants of 3x3x3 arrays under SL3 x SL3 x SL3.
//
// Subcommands: basis, orbits, compute, verify, relation, eval, invariance.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "trilinvar/action.hpp"
#include "trilinvar/basis.hpp"
#include "trilinvar/io.hpp"
#include "trilinvar/pipeline.hpp"
#include "trilinvar/symmetry.hpp"

namespace fs = std::filesystem;
using namespace trilinvar;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int cmd_basis(int degree, const fs::path& out_dir) {
  Timer timer;
  RunManifest man;
  man.command = "basis";
  man.degree = degree;
  DegreeBasis basis = build_degree_basis(degree);
  if (basis.weight_zero.empty())
    std::cerr << "warning: no weight zero monomials in degree " << degree
              << " (not a multiple of 3)\n";
  auto emit = [&](const std::string& name, const std::vector<ExponentArray>& list) {
    fs::path p = out_dir / name;
    write_monomial_list(p, list);
    man.outputs[name] = file_checksum(p);
    std::cout << name << ": " << list.size() << " monomials\n";
  };
  emit("weightzero.txt", basis.weight_zero);
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; r <= 2; ++r)
      emit("higher_d" + std::to_string(d) + "r" + std::to_string(r) + ".txt",
           basis.higher_weight(d, r));
  man.elapsed_seconds = timer.seconds();
  man.write(out_dir / "manifest.json");
  return 0;
}

int cmd_orbits(int degree, const fs::path& out_dir) {
  Timer timer;
  auto orbits = orbit_decomposition(degree);
  std::vector<OrbitRow> rows;
  for (const auto& o : orbits) rows.push_back({1, o.min_rep, o.size});
  fs::path p = out_dir / ("orbits" + std::to_string(degree) + ".orbits");
  write_orbit_table(p, rows);
  std::cout << orbits.size() << " orbits written to " << p.string() << '\n';
  RunManifest man;
  man.command = "orbits";
  man.degree = degree;
  man.outputs[p.filename().string()] = file_checksum(p);
  man.elapsed_seconds = timer.seconds();
  man.write(out_dir / "manifest.json");
  return 0;
}

void emit_record(const InvariantRecord& rec, const std::string& stem,
                 const std::string& format, const fs::path& out_dir,
                 RunManifest& man) {
  if (format == "orbit" || format == "both") {
    fs::path p = out_dir / (stem + ".orbits");
    write_orbit_table(p, rec.orbit_table);
    man.outputs[p.filename().string()] = file_checksum(p);
    std::cout << stem << ": " << rec.orbit_table.size() << " orbit rows -> "
              << p.string() << '\n';
  }
  if (format == "expanded" || format == "both") {
    fs::path p = out_dir / (stem + ".expanded");
    write_expanded(p, rec.expanded);
    man.outputs[p.filename().string()] = file_checksum(p);
    std::cout << stem << ": " << rec.expanded.term_count() << " terms -> "
              << p.string() << '\n';
  }
}

int cmd_compute(int degree, std::uint32_t prime, const std::string& mode,
                const std::string& format, const fs::path& out_dir) {
  Timer timer;
  RunManifest man;
  man.command = "compute";
  man.degree = degree;
  man.prime = prime;
  man.mode = mode;
  if (degree == 6) {
    InvariantRecord rec = compute_I6(prime);
    man.normalization = rec.normalization;
    man.ranks = rec.rank_trajectory;
    man.nullity = rec.nullity;
    emit_record(rec, "I6", format, out_dir, man);
  } else if (degree == 9) {
    Degree9Mode m = (mode == "full-basis") ? Degree9Mode::full_basis
                                           : Degree9Mode::orbit_fast;
    InvariantRecord rec = compute_I9(m, prime);
    man.normalization = rec.normalization;
    man.ranks = rec.rank_trajectory;
    man.nullity = rec.nullity;
    emit_record(rec, "I9", format, out_dir, man);
  } else if (degree == 12) {
    Degree12Result res = compute_I12_pair(prime);
    man.normalization = res.i12.normalization;
    man.ranks = res.integer_rank_trajectory;
    man.nullity = 2;
    emit_record(res.i12, "I12", format, out_dir, man);
    emit_record(res.i12_prime, "I12prime", format, out_dir, man);
  } else {
    std::cerr << "compute: degree must be 6, 9 or 12\n";
    return 2;
  }
  man.elapsed_seconds = timer.seconds();
  man.write(out_dir / "manifest.json");
  std::cout << "manifest: " << (out_dir / "manifest.json").string() << '\n';
  return 0;
}

int cmd_verify(const fs::path& file, const std::string& kind_flag, int degree_hint) {
  OrbitSumKind kind = OrbitSumKind::symmetric;
  if (kind_flag == "alternating" || (kind_flag == "auto" && degree_hint == 9))
    kind = OrbitSumKind::alternating;
  if (kind_flag == "auto" && degree_hint == 0 && file.extension() == ".orbits") {
    // sniff the degree from the first representative
    auto rows = read_orbit_table(file);
    if (!rows.empty() && rows.front().rep.degree() == 9)
      kind = OrbitSumKind::alternating;
  }
  Polynomial p = read_polynomial_file(file, kind);
  AnnihilationReport rep = verify_annihilation(p);
  auto ops = all_operators();
  for (std::size_t i = 0; i < ops.size(); ++i)
    std::cout << "T(" << ops[i].direction << "," << ops[i].root << "): "
              << (rep.zero_after_op[i] ? "annihilated" : "NOT annihilated") << '\n';
  std::cout << (rep.ok() ? "invariant: yes" : "invariant: NO") << '\n';
  return rep.ok() ? 0 : 1;
}

int cmd_relation(std::uint32_t prime, const fs::path& from_dir) {
  InvariantRecord i6, i12, i12p;
  if (!from_dir.empty()) {
    i6.expanded = read_polynomial_file(from_dir / "I6.orbits", OrbitSumKind::symmetric);
    i6.orbit_table = read_orbit_table(from_dir / "I6.orbits");
    i12.expanded = read_polynomial_file(from_dir / "I12.orbits", OrbitSumKind::symmetric);
    i12.orbit_table = read_orbit_table(from_dir / "I12.orbits");
    i12p.expanded =
        read_polynomial_file(from_dir / "I12prime.orbits", OrbitSumKind::symmetric);
    i12p.orbit_table = read_orbit_table(from_dir / "I12prime.orbits");
  } else {
    i6 = compute_I6(prime);
    Degree12Result res = compute_I12_pair(prime);
    i12 = std::move(res.i12);
    i12p = std::move(res.i12_prime);
  }
  RelationReport rep = verify_relation(i6, i12, i12p);
  if (!rep.ok()) {
    std::cout << "relation check FAILED\n";
    return 1;
  }
  // report in the conventional direction I6^2 = a*I12 + b*I12'
  std::cout << "I6^2 = ";
  if (rep.b == 1)
    std::cout << "I'12";
  else
    std::cout << rep.b.get_str() << "*I'12";
  if (rep.a < 0)
    std::cout << " - " << mpz_class(-rep.a).get_str() << "*I12";
  else if (rep.a > 0)
    std::cout << " + " << rep.a.get_str() << "*I12";
  std::cout << '\n';
  return 0;
}

int cmd_eval(const fs::path& poly_file, const fs::path& array_file,
             const std::string& kind_flag) {
  OrbitSumKind kind =
      kind_flag == "alternating" ? OrbitSumKind::alternating : OrbitSumKind::symmetric;
  Polynomial p = read_polynomial_file(poly_file, kind);
  Array333 X = read_array_json(array_file);
  std::cout << evaluate(p, X).get_str() << '\n';
  return 0;
}

int cmd_invariance(const fs::path& poly_file, int trials, std::uint64_t seed,
                   const std::string& kind_flag) {
  OrbitSumKind kind =
      kind_flag == "alternating" ? OrbitSumKind::alternating : OrbitSumKind::symmetric;
  Polynomial p = read_polynomial_file(poly_file, kind);
  InvarianceReport rep = invariance_test(p, trials, seed);
  std::cout << "passed " << rep.passed << "/" << rep.trials << " trials\n";
  if (rep.first_failure)
    std::cout << "first failure at trial " << *rep.first_failure << '\n';
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental invariants of 3x3x3 arrays"};
  app.require_subcommand(1);

  int degree = 6;
  std::uint32_t prime = 101;
  std::string mode = "orbit-fast", format = "both", out_dir = "out";
  std::string kind = "auto";
  int trials = 100;
  std::uint64_t seed = 1;
  std::string poly_file, array_file, from_dir;

  auto* basis_cmd = app.add_subcommand("basis", "write monomial basis lists");
  basis_cmd->add_option("--degree", degree, "degree (3, 6, 9 or 12)")->required();
  basis_cmd->add_option("--out", out_dir, "output directory");

  auto* orbits_cmd = app.add_subcommand("orbits", "write the orbit decomposition");
  orbits_cmd->add_option("--degree", degree, "degree (3, 6, 9 or 12)")->required();
  orbits_cmd->add_option("--out", out_dir, "output directory");

  auto* compute_cmd = app.add_subcommand("compute", "compute an invariant");
  compute_cmd->add_option("--degree", degree, "degree (6, 9 or 12)")->required();
  compute_cmd->add_option("--prime", prime, "odd working prime (default 101)");
  compute_cmd->add_option("--mode", mode, "degree 9 mode: orbit-fast | full-basis")
      ->check(CLI::IsMember({"orbit-fast", "full-basis"}));
  compute_cmd->add_option("--format", format, "orbit | expanded | both")
      ->check(CLI::IsMember({"orbit", "expanded", "both"}));
  compute_cmd->add_option("--out", out_dir, "output directory");

  auto* verify_cmd = app.add_subcommand("verify", "check a polynomial file is invariant");
  verify_cmd->add_option("file", poly_file, ".orbits or .expanded file")->required();
  verify_cmd->add_option("--kind", kind, "orbit sum kind: auto | symmetric | alternating")
      ->check(CLI::IsMember({"auto", "symmetric", "alternating"}));
  int degree_hint = 0;
  verify_cmd->add_option("--degree", degree_hint, "degree hint for --kind auto");

  auto* relation_cmd = app.add_subcommand("relation", "check I6^2 against the degree 12 pair");
  relation_cmd->add_option("--prime", prime, "odd working prime (default 101)");
  relation_cmd->add_option("--from", from_dir,
                           "directory with I6/I12/I12prime .orbits files "
                           "(recomputes when omitted)");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at an integer array");
  eval_cmd->add_option("file", poly_file, ".orbits or .expanded file")->required();
  eval_cmd->add_option("array", array_file, "JSON array file [i][j][k]")->required();
  eval_cmd->add_option("--kind", kind, "symmetric | alternating for .orbits input")
      ->check(CLI::IsMember({"auto", "symmetric", "alternating"}));

  auto* inv_cmd = app.add_subcommand("invariance", "randomized invariance test");
  inv_cmd->add_option("file", poly_file, ".orbits or .expanded file")->required();
  inv_cmd->add_option("--trials", trials, "number of trials (default 100)");
  inv_cmd->add_option("--seed", seed, "random seed (default 1)");
  inv_cmd->add_option("--kind", kind, "symmetric | alternating for .orbits input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (basis_cmd->parsed() || orbits_cmd->parsed()) {
      if (degree < 0) {
        std::cerr << "degree must be non-negative\n";
        return 2;
      }
      return basis_cmd->parsed() ? cmd_basis(degree, out_dir)
                                 : cmd_orbits(degree, out_dir);
    }
    if (compute_cmd->parsed()) return cmd_compute(degree, prime, mode, format, out_dir);
    if (verify_cmd->parsed()) return cmd_verify(poly_file, kind, degree_hint);
    if (relation_cmd->parsed()) return cmd_relation(prime, from_dir);
    if (eval_cmd->parsed()) return cmd_eval(poly_file, array_file, kind);
    if (inv_cmd->parsed()) return cmd_invariance(poly_file, trials, seed, kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
