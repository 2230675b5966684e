#ifndef TRILINVAR_PIPELINE_HPP
#define TRILINVAR_PIPELINE_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilinvar/polynomial.hpp"
#include "trilinvar/raising.hpp"
#include "trilinvar/symmetry.hpp"

namespace trilinvar {

struct PipelineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrbitRow {
  mpz_class coeff;
  ExponentArray rep;
  int orbit_size = 0;
};

/// One computed invariant: the compressed orbit table (nonzero rows only,
/// ascending representative) together with the full expansion.
struct InvariantRecord {
  int degree = 0;
  std::uint32_t prime = 0;  // working prime of the modular stage
  OrbitSumKind kind = OrbitSumKind::symmetric;
  std::vector<OrbitRow> orbit_table;
  Polynomial expanded;
  std::string normalization;               // pin applied to fix scale/sign
  std::vector<std::size_t> rank_trajectory;  // rank after each operator pass
  std::size_t nullity = 0;
};

struct AnnihilationReport {
  std::array<bool, 6> zero_after_op{};  // in all_operators() order
  bool ok() const {
    for (bool b : zero_after_op)
      if (!b) return false;
    return true;
  }
};

/// Applies all six raising operators exactly over the integers; the
/// polynomial is invariant iff every image vanishes identically.
AnnihilationReport verify_annihilation(const Polynomial& p);

struct RelationReport {
  mpz_class a, b;       // I6^2 = a * I12 + b * I12'
  bool residual_zero = false;
  bool ok() const { return residual_zero; }
};

/// Multiplies I6 by itself and expresses the square in the degree 12 pair.
RelationReport verify_relation(const InvariantRecord& i6,
                               const InvariantRecord& i12,
                               const InvariantRecord& i12_prime);

/// Degree 6: full 1152 column system mod p, canonical nullspace vector,
/// symmetric lift, scale pinned so the orbit of x133^2 x222^2 x311^2 has
/// coefficient +1. Verifies orbit constancy and integer annihilation.
InvariantRecord compute_I6(std::uint32_t prime = 101);

enum class Degree9Mode { orbit_fast, full_basis };

/// Degree 9. orbit_fast restricts the six operators to the span of the
/// nonzero alternating orbit sums; full_basis runs the 22620 column sparse
/// elimination (slow; the fidelity cross check). Sign pinned so the
/// monomial x123 x132 x133 x213 x221 x232 x311^2 x322 has coefficient +1;
/// each orbit row then lists the smallest member carrying +1.
InvariantRecord compute_I9(Degree9Mode mode = Degree9Mode::orbit_fast,
                           std::uint32_t prime = 101);

struct Degree12Result {
  InvariantRecord i12;        // shorter reduced lattice vector
  InvariantRecord i12_prime;  // companion
  std::vector<std::size_t> modular_rank_trajectory;  // after each operator
  std::vector<std::size_t> integer_rank_trajectory;
  std::size_t orbit_count = 0;
};

/// Degree 12: restriction to the 359 symmetric orbit sums, streamed in
/// blocks of 639 rows through the incremental integer HNF (after a modular
/// rank oracle pass), integer nullspace via the HNF transform of the
/// transpose, Lagrange reduction, and sign pins (first nonzero orbit
/// coefficient positive for both vectors).
Degree12Result compute_I12_pair(std::uint32_t prime = 101);

enum class DimensionMode { automatic, full_basis, orbit_restricted };

/// Dimension of ker Lambda_N mod the given prime (or of its orbit
/// restricted analogue: alternating span at N = 9, symmetric span at
/// N = 12, where the invariants are known to live).
std::size_t nullspace_dimension(int N, std::uint32_t prime = 101,
                                DimensionMode mode = DimensionMode::automatic);

/// Anchor monomials used for the normalization pins.
ExponentArray degree6_anchor();  // x133^2 x222^2 x311^2
ExponentArray degree9_anchor();  // x123 x132 x133 x213 x221 x232 x311^2 x322

}  // namespace trilinvar

#endif
