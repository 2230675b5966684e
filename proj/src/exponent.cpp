#include "trilinvar/exponent.hpp"

#include <sstream>
#include <stdexcept>

namespace trilinvar {

Weight raised_weight(int direction, int root) {
  if (direction < 1 || direction > 3 || root < 1 || root > 2)
    throw std::invalid_argument("raised_weight: direction in 1..3, root in 1..2");
  Weight w;
  int base = 2 * (direction - 1);
  if (root == 1) {
    w.w[base] = 2;
    w.w[base + 1] = -1;
  } else {
    w.w[base] = -1;
    w.w[base + 1] = 2;
  }
  return w;
}

Weight weight(const ExponentArray& E) {
  // slice sums per direction
  int si[3] = {0, 0, 0}, sj[3] = {0, 0, 0}, sk[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int v = E.at(i, j, k);
        si[i] += v;
        sj[j] += v;
        sk[k] += v;
      }
  Weight w;
  w.w[0] = si[0] - si[1];
  w.w[1] = si[1] - si[2];
  w.w[2] = sj[0] - sj[1];
  w.w[3] = sj[1] - sj[2];
  w.w[4] = sk[0] - sk[1];
  w.w[5] = sk[1] - sk[2];
  return w;
}

std::array<int, 27> flatten(const ExponentArray& E) {
  std::array<int, 27> out;
  for (int t = 0; t < 27; ++t) out[t] = E.e[t];
  return out;
}

ExponentArray unflatten(const std::vector<int>& flat) {
  if (flat.size() != 27)
    throw std::invalid_argument("unflatten: expected 27 entries, got " +
                                std::to_string(flat.size()));
  ExponentArray E;
  for (int t = 0; t < 27; ++t) {
    if (flat[t] < 0) throw std::invalid_argument("unflatten: negative entry");
    if (flat[t] > 255) throw std::invalid_argument("unflatten: entry too large");
    E.e[t] = static_cast<std::uint8_t>(flat[t]);
  }
  return E;
}

Ordering compare(const ExponentArray& a, const ExponentArray& b) {
  if (a.e < b.e) return Ordering::less;
  if (a.e == b.e) return Ordering::equal;
  return Ordering::greater;
}

ExponentArray operator+(const ExponentArray& a, const ExponentArray& b) {
  ExponentArray out;
  for (int t = 0; t < 27; ++t)
    out.e[t] = static_cast<std::uint8_t>(a.e[t] + b.e[t]);
  return out;
}

std::string to_line(const ExponentArray& E) {
  std::string s;
  s.reserve(54);
  for (int t = 0; t < 27; ++t) {
    if (t) s += ' ';
    s += std::to_string(int(E.e[t]));
  }
  return s;
}

ExponentArray from_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> vals;
  int v;
  while (in >> v) vals.push_back(v);
  return unflatten(vals);
}

}  // namespace trilinvar
