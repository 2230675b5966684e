#include "trilinvar/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trilinvar/action.hpp"
#include "trilinvar/symmetry.hpp"

namespace trilinvar {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_monomial_list(const std::filesystem::path& path,
                         const std::vector<ExponentArray>& list) {
  auto out = open_out(path);
  for (const auto& E : list) out << to_line(E) << '\n';
}

std::vector<ExponentArray> read_monomial_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<ExponentArray> list;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    list.push_back(from_line(line));
  }
  return list;
}

void write_orbit_table(const std::filesystem::path& path,
                       const std::vector<OrbitRow>& rows) {
  auto out = open_out(path);
  for (const auto& r : rows)
    out << r.coeff.get_str() << '\t' << to_line(r.rep) << '\t' << r.orbit_size
        << '\n';
}

std::vector<OrbitRow> read_orbit_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<OrbitRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff_s, rep_s, size_s;
    if (!std::getline(ls, coeff_s, '\t') || !std::getline(ls, rep_s, '\t') ||
        !std::getline(ls, size_s))
      throw std::runtime_error("orbit table: malformed line in " + path.string());
    OrbitRow r;
    r.coeff = mpz_class(coeff_s);
    r.rep = from_line(rep_s);
    r.orbit_size = std::stoi(size_s);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_expanded(const std::filesystem::path& path, const Polynomial& p) {
  auto out = open_out(path);
  for (const auto& [E, c] : p.sorted_terms())
    out << c.get_str() << ' ' << to_line(E) << '\n';
}

Polynomial read_expanded(const std::filesystem::path& path) {
  auto in = open_in(path);
  Polynomial p;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff_s;
    ls >> coeff_s;
    std::vector<int> flat;
    int v;
    while (ls >> v) flat.push_back(v);
    p.add_term(unflatten(flat), mpz_class(coeff_s));
  }
  return p;
}

Polynomial expand_orbit_table(const std::vector<OrbitRow>& rows, OrbitSumKind kind) {
  Polynomial p;
  for (const auto& r : rows) {
    if (kind == OrbitSumKind::symmetric) {
      OrbitSum s = symmetric_orbit_sum(r.rep);
      s.poly *= r.coeff;
      p += s.poly;
    } else {
      OrbitSum s = alternating_orbit_sum(r.rep);
      if (s.poly.is_zero())
        throw std::runtime_error("orbit table: zero alternating sum listed");
      // renormalize so the listed representative carries +1
      mpz_class at_rep = s.poly.coefficient(r.rep);
      s.poly *= at_rep * r.coeff;  // at_rep is +-1
      p += s.poly;
    }
  }
  return p;
}

Polynomial read_polynomial_file(const std::filesystem::path& path, OrbitSumKind kind) {
  if (path.extension() == ".orbits")
    return expand_orbit_table(read_orbit_table(path), kind);
  return read_expanded(path);
}

Array333 read_array_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  nlohmann::json j;
  in >> j;
  if (!j.is_array() || j.size() != 3)
    throw std::runtime_error("array json: expected 3 nested levels of 3");
  Array333 X;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3)
      throw std::runtime_error("array json: expected 3 nested levels of 3");
    for (int jj = 0; jj < 3; ++jj) {
      if (!j[i][jj].is_array() || j[i][jj].size() != 3)
        throw std::runtime_error("array json: expected 3 nested levels of 3");
      for (int k = 0; k < 3; ++k)
        X.at(i, jj, k) = mpz_class(j[i][jj][k].get<long>());
    }
  }
  return X;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_checksum(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["command"] = command;
  j["degree"] = degree;
  j["prime"] = prime;
  if (!mode.empty()) j["mode"] = mode;
  if (!normalization.empty()) j["normalization"] = normalization;
  j["ranks"] = ranks;
  j["nullity"] = nullity;
  j["outputs"] = outputs;
  j["elapsed_seconds"] = elapsed_seconds;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace trilinvar
