#ifndef TRILINVAR_IO_HPP
#define TRILINVAR_IO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "trilinvar/pipeline.hpp"
#include "trilinvar/polynomial.hpp"

namespace trilinvar {

/// Monomial list: 27 space separated non-negative integers per line,
/// flatten order.
void write_monomial_list(const std::filesystem::path& path,
                         const std::vector<ExponentArray>& list);
std::vector<ExponentArray> read_monomial_list(const std::filesystem::path& path);

/// Orbit table: one orbit per line, `coeff<TAB>27 ints<TAB>orbit size`.
void write_orbit_table(const std::filesystem::path& path,
                       const std::vector<OrbitRow>& rows);
std::vector<OrbitRow> read_orbit_table(const std::filesystem::path& path);

/// Expanded polynomial: `coeff 27 ints` per line, ascending monomial order.
void write_expanded(const std::filesystem::path& path, const Polynomial& p);
Polynomial read_expanded(const std::filesystem::path& path);

/// Reconstructs the polynomial of an orbit table: sum of coeff times the
/// symmetric or alternating orbit sum of each representative. For
/// alternating rows the sum is renormalized so the listed representative
/// itself carries +1.
Polynomial expand_orbit_table(const std::vector<OrbitRow>& rows, OrbitSumKind kind);

/// Dispatch on extension: ".orbits" files are expanded via orbit sums,
/// anything else is parsed as an expanded polynomial.
Polynomial read_polynomial_file(const std::filesystem::path& path, OrbitSumKind kind);

/// JSON array file: three nested arrays of three arrays of three integers,
/// index order [i][j][k].
struct Array333;
Array333 read_array_json(const std::filesystem::path& path);

std::string fnv1a64_hex(const std::string& data);
std::string file_checksum(const std::filesystem::path& path);

/// Machine readable record of one CLI run.
struct RunManifest {
  std::string command;
  int degree = 0;
  std::uint32_t prime = 0;
  std::string mode;
  std::string normalization;
  std::vector<std::size_t> ranks;
  std::size_t nullity = 0;
  std::map<std::string, std::string> outputs;  // file name -> checksum
  double elapsed_seconds = 0.0;

  void write(const std::filesystem::path& path) const;
};

}  // namespace trilinvar

#endif
