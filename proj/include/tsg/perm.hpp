#pragma once
/**
 * @file perm.hpp
 * Permutations of {1, .., degree} with degree <= 12.
 *
 * Conventions, fixed project-wide:
 *  - Composition is right-to-left: compose(a, b) means "apply b first, then a".
 *  - Cycle notation is canonical on output: cycles sorted by their smallest
 *    moved point, each cycle rotated to start at its smallest element, fixed
 *    points suppressed, the identity printed as "()".
 *  - On input, a run of digits inside a cycle is split into single digits when
 *    degree <= 9 ("(2431)" means the 4-cycle 2->4->3->1->2); for degree >= 10
 *    points must be separated by whitespace or commas.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsg {

/// Hard cap on permutation degree for this engine.
inline constexpr int kMaxDegree = 12;

/// Raised for malformed textual input (cycle notation, Gauss codes, JSON).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when structurally valid input violates a data invariant.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multiset of cycle lengths (>= 2, sorted descending) plus fixed-point count.
struct CycleType {
  std::vector<int> lengths;
  int fixed = 0;

  bool operator==(const CycleType&) const = default;
  /// Render as e.g. "(4,2)" or "()" when nothing moves; fixed count excluded.
  std::string str() const;
};

class Perm {
 public:
  /// Identity permutation of the given degree.
  explicit Perm(int degree = 1);

  /// Build from 1-based image list: images[i] = image of point i+1.
  static Perm from_images(int degree, const std::vector<int>& images);

  /// Parse disjoint cycle notation; see file header for the exact grammar.
  /// Throws parse_error naming the offending token on bad input.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return deg_; }

  /// Image of a 1-based point.
  int apply(int point) const;

  bool is_identity() const;

  Perm inverse() const;

  /// k may be negative or zero; reduces mod order.
  Perm power(long long k) const;

  int order() const;

  /// Sorted list of 1-based fixed points.
  std::vector<int> fixed_points() const;

  CycleType cycle_type() const;

  /// Canonical cycle notation (see file header).
  std::string str() const;

  bool operator==(const Perm&) const = default;
  /// Lexicographic on (degree, image list); gives the canonical element order.
  std::strong_ordering operator<=>(const Perm&) const;

 private:
  int deg_;
  std::array<std::uint8_t, kMaxDegree> img_{};  // 0-based images; zero past deg_
  friend Perm compose(const Perm& a, const Perm& b);
};

/// compose(a, b): apply b first, then a.  Degrees must agree.
Perm compose(const Perm& a, const Perm& b);

}  // namespace tsg
