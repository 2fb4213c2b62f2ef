#pragma once
/// Knot and link diagrams in Gauss-code form, and the polynomial
/// invariants used to distinguish them: Kauffman bracket, the
/// writhe-normalized invariant, span, determinant, mirror images, and
/// connected sums.
///
/// Gauss-code grammar (ASCII): a diagram is one or more components
/// separated by '|'; a component is a comma-separated list of passages;
/// a passage is 'O' or 'U', a positive integer crossing id, and a sign
/// '+' or '-'.  Example: "O1+,U2+,O3+,U1+,O2+,U3+".  Whitespace is
/// ignored around tokens, and '#' starts a comment that runs to the end
/// of its line.  Every crossing id must appear exactly twice, once over
/// and once under, with the same sign at both passages.  An empty (or
/// all-comment) string denotes the 0-crossing unknot.  Realizability of
/// a code as a planar diagram is not checked.
///
/// Conventions:
///  - bracket: Kauffman state sum with loop value delta = -A^2 - A^-2,
///    normalized so the 0-crossing unknot has bracket 1.  At a positive
///    crossing the A-smoothing joins over-in to under-out (and over-out
///    to under-in); at a negative crossing the pairings swap.  With this
///    convention a positive kink brackets to -A^3.
///  - normalized_invariant: (-A)^(-3 w) * bracket, where w is the
///    writhe (sum of crossing signs).
///  - determinant: |normalized invariant at A^4 = -1|, evaluated
///    exactly in Z[A]/(A^4 + 1).
///  - mirror: swaps every over/under flag and negates every sign.
///  - connected_sum: splices single-component codes at the first arc of
///    each (the second operand's ids are shifted past the first's).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tsg/perm.hpp"  // parse_error, data_error

namespace tsg {

/// State-sum cap: bracket and everything built on it refuse diagrams
/// with more crossings than this (the sum has 2^c states).
inline constexpr int kMaxBracketCrossings = 20;

/// One passage of a strand through a crossing.
struct GaussEntry {
  int id = 0;         // positive crossing id
  bool over = false;  // true when this passage crosses over
  int sign = 0;       // crossing sign, +1 or -1
  auto operator<=>(const GaussEntry&) const = default;
};

/// A diagram as ordered passage lists, one per closed component.  The
/// empty diagram (no components) denotes the 0-crossing unknot.
struct KnotDiagram {
  std::vector<std::vector<GaussEntry>> components;

  /// Number of distinct crossing ids.
  int crossing_count() const;

  /// Enforce the pairing invariants: every id appears exactly twice,
  /// once over and once under, with a consistent sign.  Throws
  /// data_error with a description of the first violation.
  void validate() const;

  /// Canonical text form ("O1+,U2+,..." with '|' between components).
  std::string str() const;
};

/// Parse the Gauss-code grammar documented above.  Throws parse_error
/// on malformed text and data_error when the pairing invariants fail.
KnotDiagram parse_gauss(const std::string& text);

/// Laurent polynomial in the bracket variable A with integer
/// coefficients; the canonical form stores no zero coefficients.
struct LaurentPoly {
  std::map<int, long long> terms;  // exponent -> nonzero coefficient

  static LaurentPoly zero();
  static LaurentPoly one();
  static LaurentPoly monomial(long long coeff, int exp);

  bool is_zero() const { return terms.empty(); }
  long long coeff(int exp) const;  // 0 when absent
  int min_exp() const;             // throws data_error on the zero polynomial
  int max_exp() const;
  LaurentPoly substituted_inverse() const;  // A -> A^-1

  /// Human-readable form in descending exponents, e.g.
  /// "-A^5 - A^-3 + A^-7"; the zero polynomial prints as "0".
  std::string str() const;

  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator*(const LaurentPoly&) const;
  bool operator==(const LaurentPoly&) const = default;
};

/// Sum of crossing signs, each crossing counted once.
int writhe(const KnotDiagram& d);

/// Kauffman bracket by direct state enumeration.  Throws data_error
/// when crossing_count() exceeds kMaxBracketCrossings.
LaurentPoly bracket(const KnotDiagram& d);

/// (-A)^(-3 writhe) * bracket: invariant under Reidemeister moves.
LaurentPoly normalized_invariant(const KnotDiagram& d);

/// |normalized invariant at A^4 = -1|, exact.  Throws data_error when
/// the evaluation does not land in a single residue class (possible
/// only for codes with no planar realization).
long long determinant(const KnotDiagram& d);

/// max_exp - min_exp.  Throws data_error for the zero polynomial.
int span(const LaurentPoly& p);

/// Swap every over/under flag and negate every sign.
KnotDiagram mirror(const KnotDiagram& d);

/// Splice two single-component codes at their first arcs; either
/// operand may be the empty unknot.  Throws data_error on
/// multi-component input.
KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b);

}  // namespace tsg
