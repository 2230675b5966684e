#ifndef TRILINVAR_BASIS_HPP
#define TRILINVAR_BASIS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "trilinvar/exponent.hpp"

namespace trilinvar {

/// All equal-parallel-slice exponent arrays of degree N (the weight zero
/// monomials), strictly increasing in the total order. Empty when N is
/// not a multiple of 3. N < 0 is an error.
std::vector<ExponentArray> generate_weight_zero(int N);

/// All exponent arrays of weight Omega_{direction,root} reachable by one
/// raising step from weight zero, deduplicated and sorted. The lists for
/// directions 2 and 3 are obtained from direction 1 by transposing indices.
std::vector<ExponentArray> generate_higher_weight(int N, int direction, int root);

/// Monomial bases for one degree: weight zero plus the six higher weights.
struct DegreeBasis {
  int degree = 0;
  std::vector<ExponentArray> weight_zero;
  // higher[2*(direction-1) + (root-1)]
  std::array<std::vector<ExponentArray>, 6> higher;

  const std::vector<ExponentArray>& higher_weight(int direction, int root) const {
    return higher[2 * (direction - 1) + (root - 1)];
  }
};

DegreeBasis build_degree_basis(int N);

/// Position of E in a sorted basis via binary search.
/// Absence signals a basis-generation bug: throws std::out_of_range.
std::size_t monomial_index(const ExponentArray& E,
                           const std::vector<ExponentArray>& basis);

}  // namespace trilinvar

#endif
