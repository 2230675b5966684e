#ifndef TRILINVAR_SYMMETRY_HPP
#define TRILINVAR_SYMMETRY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "trilinvar/exponent.hpp"
#include "trilinvar/polynomial.hpp"

namespace trilinvar {

/// Permutation of {0,1,2}: p[i] is the image of i.
using Perm3 = std::array<std::uint8_t, 3>;

int perm_sign(const Perm3& p);
Perm3 perm_compose(const Perm3& a, const Perm3& b);  // (a o b)(i) = a[b[i]]
Perm3 perm_inverse(const Perm3& p);
const std::array<Perm3, 6>& all_perm3();

/// Element of the symmetry group (S3 x S3 x S3) semidirect S3 of order 1296.
/// alpha, beta, gamma permute the parallel slices in directions 1, 2, 3;
/// delta permutes the directions themselves.
struct GroupElement {
  Perm3 alpha{0, 1, 2}, beta{0, 1, 2}, gamma{0, 1, 2}, delta{0, 1, 2};

  bool operator==(const GroupElement&) const = default;
};

/// Product of the signs of the four components.
int sign(const GroupElement& g);

/// Action on exponent arrays: first the direction permutation
///   f[i][j][k] = e[t[delta(0)]][t[delta(1)]][t[delta(2)]], t = (i,j,k),
/// then the slice relabelings
///   out[i][j][k] = f[alpha(i)][beta(j)][gamma(k)].
/// Preserves degree and the weight zero property.
ExponentArray act(const GroupElement& g, const ExponentArray& E);

/// The element k with act(k, E) == act(g, act(h, E)) for all E.
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// All 1296 elements in a fixed deterministic order.
const std::vector<GroupElement>& all_group_elements();

struct Orbit {
  ExponentArray min_rep;
  int size = 0;
  std::vector<ExponentArray> elements;  // sorted ascending
};

/// Orbit of a weight zero exponent array (throws otherwise).
Orbit orbit(const ExponentArray& E);

/// Orbits partitioning a sorted weight zero basis, sorted by minimal
/// representative. The sweep visits monomials in order and expands each
/// unseen one, so the output order is forced.
std::vector<Orbit> orbit_decomposition(const std::vector<ExponentArray>& weight_zero);
std::vector<Orbit> orbit_decomposition(int degree);

enum class OrbitSumKind { symmetric, alternating };

struct OrbitSum {
  OrbitSumKind kind;
  Polynomial poly;  // coefficients in {-1, 0, +1}
};

/// Sum of the orbit's distinct monomials, all coefficients +1.
OrbitSum symmetric_orbit_sum(const ExponentArray& E);

/// Signed orbit sum: identically zero when the stabilizer contains an odd
/// element; otherwise every member appears with coefficient +-1, normalized
/// so the minimal representative has +1.
OrbitSum alternating_orbit_sum(const ExponentArray& E);

}  // namespace trilinvar

#endif
