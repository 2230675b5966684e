#ifndef TRILINVAR_EXPONENT_HPP
#define TRILINVAR_EXPONENT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace trilinvar {

/// Exponent array of a monomial in the 27 variables x_ijk (1 <= i,j,k <= 3).
///
/// Entries are stored flattened in lexicographic subscript order
/// (e111, e112, e113, e121, ..., e333), which makes the default
/// array comparison coincide with the total order on monomials:
/// lex order on flattenings.
struct ExponentArray {
  std::array<std::uint8_t, 27> e{};

  /// 0-based accessors; position (i,j,k) lives at 9i + 3j + k.
  std::uint8_t at(int i, int j, int k) const { return e[9 * i + 3 * j + k]; }
  std::uint8_t& at(int i, int j, int k) { return e[9 * i + 3 * j + k]; }

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }

  auto operator<=>(const ExponentArray&) const = default;
  bool operator==(const ExponentArray&) const = default;
};

/// Cartan eigenvalue tuple (w11, w12, w21, w22, w31, w32).
struct Weight {
  std::array<int, 6> w{};

  bool is_zero() const { return w == std::array<int, 6>{}; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

/// The six nonzero weights reachable from weight zero by one raising step.
/// direction and root are 1-based.
Weight raised_weight(int direction, int root);

/// Eigenvalues of the monomial under the six Cartan elements: for each
/// direction, the differences of consecutive parallel slice sums.
Weight weight(const ExponentArray& E);

/// flatten/unflatten between ExponentArray and a plain 27-list.
/// unflatten validates: wrong length or a negative entry is an error.
std::array<int, 27> flatten(const ExponentArray& E);
ExponentArray unflatten(const std::vector<int>& flat);

enum class Ordering { less, equal, greater };

/// Total order on exponent arrays: lex order on flattenings.
Ordering compare(const ExponentArray& a, const ExponentArray& b);

/// Entrywise sum (product of the underlying monomials).
ExponentArray operator+(const ExponentArray& a, const ExponentArray& b);

/// "e1 e2 ... e27" with single spaces, flatten order.
std::string to_line(const ExponentArray& E);
/// Parse a to_line-formatted string; throws std::invalid_argument on junk.
ExponentArray from_line(const std::string& line);

struct ExponentHash {
  std::size_t operator()(const ExponentArray& E) const {
    // FNV-1a over the 27 bytes
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : E.e) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace trilinvar

#endif
