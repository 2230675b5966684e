#include "trilinvar/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "trilinvar/basis.hpp"

namespace trilinvar {

int perm_sign(const Perm3& p) {
  int s = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

Perm3 perm_compose(const Perm3& a, const Perm3& b) {
  return {a[b[0]], a[b[1]], a[b[2]]};
}

Perm3 perm_inverse(const Perm3& p) {
  Perm3 inv{};
  for (std::uint8_t i = 0; i < 3; ++i) inv[p[i]] = i;
  return inv;
}

const std::array<Perm3, 6>& all_perm3() {
  static const std::array<Perm3, 6> perms = {
      Perm3{0, 1, 2}, Perm3{0, 2, 1}, Perm3{1, 0, 2},
      Perm3{1, 2, 0}, Perm3{2, 0, 1}, Perm3{2, 1, 0}};
  return perms;
}

int sign(const GroupElement& g) {
  return perm_sign(g.alpha) * perm_sign(g.beta) * perm_sign(g.gamma) *
         perm_sign(g.delta);
}

namespace {

ExponentArray direction_act(const Perm3& delta, const ExponentArray& E) {
  ExponentArray out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int t[3] = {i, j, k};
        out.at(i, j, k) = E.at(t[delta[0]], t[delta[1]], t[delta[2]]);
      }
  return out;
}

ExponentArray slice_act(const Perm3& a, const Perm3& b, const Perm3& c,
                        const ExponentArray& E) {
  ExponentArray out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.at(i, j, k) = E.at(a[i], b[j], c[k]);
  return out;
}

}  // namespace

ExponentArray act(const GroupElement& g, const ExponentArray& E) {
  return slice_act(g.alpha, g.beta, g.gamma, direction_act(g.delta, E));
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  // With S_a the slice relabeling and D_d the direction permutation,
  // act(g) = S_{(alpha,beta,gamma)} D_delta and the operators satisfy
  //   D_d S_b = S_{b'} D_d  with b'_n = b_{d^{-1}(n)},
  //   S_a S_b = S_{(b_1 a_1, b_2 a_2, b_3 a_3)}   (componentwise b o a),
  //   D_d D_e = D_{d o e}.
  GroupElement k;
  Perm3 dinv = perm_inverse(g.delta);
  std::array<Perm3, 3> hcomps = {h.alpha, h.beta, h.gamma};
  std::array<Perm3, 3> moved;
  for (int n = 0; n < 3; ++n) moved[n] = hcomps[dinv[n]];
  k.alpha = perm_compose(moved[0], g.alpha);
  k.beta = perm_compose(moved[1], g.beta);
  k.gamma = perm_compose(moved[2], g.gamma);
  k.delta = perm_compose(g.delta, h.delta);
  return k;
}

const std::vector<GroupElement>& all_group_elements() {
  static const std::vector<GroupElement> elements = [] {
    std::vector<GroupElement> out;
    out.reserve(1296);
    for (const auto& d : all_perm3())
      for (const auto& a : all_perm3())
        for (const auto& b : all_perm3())
          for (const auto& c : all_perm3()) out.push_back({a, b, c, d});
    return out;
  }();
  return elements;
}

Orbit orbit(const ExponentArray& E) {
  if (!weight(E).is_zero())
    throw std::invalid_argument("orbit: exponent array is not weight zero");
  std::vector<ExponentArray> images;
  images.reserve(1296);
  for (const auto& g : all_group_elements()) images.push_back(act(g, E));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  Orbit o;
  o.min_rep = images.front();
  o.size = static_cast<int>(images.size());
  o.elements = std::move(images);
  return o;
}

std::vector<Orbit> orbit_decomposition(const std::vector<ExponentArray>& weight_zero) {
  std::vector<bool> seen(weight_zero.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < weight_zero.size(); ++i) {
    if (seen[i]) continue;
    Orbit o = orbit(weight_zero[i]);
    for (const auto& member : o.elements)
      seen[monomial_index(member, weight_zero)] = true;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<Orbit> orbit_decomposition(int degree) {
  return orbit_decomposition(generate_weight_zero(degree));
}

OrbitSum symmetric_orbit_sum(const ExponentArray& E) {
  Orbit o = orbit(E);
  OrbitSum s{OrbitSumKind::symmetric, {}};
  for (const auto& member : o.elements) s.poly.add_term(member, 1);
  return s;
}

OrbitSum alternating_orbit_sum(const ExponentArray& E) {
  if (!weight(E).is_zero())
    throw std::invalid_argument("alternating_orbit_sum: not weight zero");
  // accumulate the sign sum per distinct image; each total is either 0
  // (odd stabilizer element somewhere: the whole sum vanishes) or
  // +-|stabilizer|
  std::unordered_map<ExponentArray, int, ExponentHash> totals;
  for (const auto& g : all_group_elements()) totals[act(g, E)] += sign(g);
  OrbitSum s{OrbitSumKind::alternating, {}};
  ExponentArray min_rep = totals.begin()->first;
  for (const auto& [member, t] : totals) {
    if (t == 0) return s;  // zero polynomial
    if (member < min_rep) min_rep = member;
  }
  int norm = totals[min_rep] > 0 ? 1 : -1;
  for (const auto& [member, t] : totals)
    s.poly.add_term(member, (t > 0 ? 1 : -1) * norm);
  return s;
}

}  // namespace trilinvar
