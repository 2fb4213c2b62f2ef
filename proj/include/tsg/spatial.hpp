#pragma once
/**
 * @file spatial.hpp
 * Exact piecewise-linear spatial graphs in R^3.
 *
 * Every coordinate is an exact rational (GMP mpq); every geometric predicate
 * (orientation, segment intersection, crossing order, genericity of a
 * projection direction) is decided in rational arithmetic with no epsilon.
 *
 * Conventions, fixed project-wide:
 *  - Vertices are 1-based and contiguous: a graph with n vertices uses
 *    exactly the labels 1..n.
 *  - An edge {i, j} is stored under i < j with its polyline ordered from i
 *    to j.  The polyline includes both endpoints; interior points are
 *    "waypoints".
 *  - project(g, d) views the scene along d: of two strands meeting in
 *    projection, the one with the larger inner product <d, p> is the over
 *    strand.  A crossing's sign is the sign of det[t_over, t_under, d]
 *    where t_* are the 3D strand directions (along stored polyline order).
 *    This sign convention is invariant under d -> -d and negates under
 *    reflection of the graph through a coordinate plane.
 *  - Arcs: each edge's polyline is cut at its underpasses; the resulting
 *    pieces get consecutive global ids, edges visited in key order.  A
 *    crossing references the over strand's containing arc and, for the
 *    under strand, the arc that leads into the underpass.
 */

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tsg/perm.hpp"  // parse_error, data_error

namespace tsg {

using Rational = mpq_class;

/// Exact point (or vector) in R^3.
using Point3 = std::array<Rational, 3>;

/// Raised by project() when the direction is degenerate for the graph:
/// a segment parallel to the direction, a tangency, a triple point, or a
/// vertex falling onto a non-incident edge.  The message names the exact
/// predicate that failed; callers retry with a fresh direction.
struct NonGenericDirection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with a < b.
struct EdgeKey {
  int a = 0;
  int b = 0;

  EdgeKey() = default;
  EdgeKey(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  auto operator<=>(const EdgeKey&) const = default;
  std::string str() const;  // "{a, b}"
};

/// A PL embedding of a graph in R^3.
struct SpatialGraph {
  int n = 0;
  std::map<int, Point3> coordinates;
  std::map<EdgeKey, std::vector<Point3>> edges;

  /// Check every exact invariant: labels are 1..n, vertex points distinct,
  /// polylines run endpoint to endpoint with no degenerate segment, open
  /// edge interiors pairwise disjoint and disjoint from non-incident
  /// vertices.  Throws data_error naming the first violation.
  void validate() const;

  /// True when the edge set covers every pair {i, j}, 1 <= i < j <= n.
  bool is_complete() const;
};

/// One transversal double point of a generic projection.
struct Crossing {
  int over_arc = 0;
  int under_arc = 0;
  int sign = 0;  // +1 or -1
  EdgeKey over_edge;
  EdgeKey under_edge;
};

/// A generic projection of a SpatialGraph along a direction.
struct ProjectedDiagram {
  Point3 direction;
  std::vector<Crossing> crossings;            // sorted by projected point
  std::map<EdgeKey, std::vector<int>> arcs;   // global arc ids, in edge order
};

/// Project along `direction` (which must be nonzero, else data_error).
/// Throws NonGenericDirection when any exact genericity predicate fails.
ProjectedDiagram project(const SpatialGraph& g, const Point3& direction);

/// Linking number of two vertex-disjoint cycles, each given as a vertex
/// list of length >= 3 whose consecutive pairs (cyclically) are edges of g.
/// Computed as half the signed inter-component crossing sum of a generic
/// projection; the value is independent of the direction chosen.
/// Throws data_error for shared vertices, repeated vertices, or a missing
/// edge (an open polyline).
int linking_number(const SpatialGraph& g, const std::vector<int>& cycle_a,
                   const std::vector<int>& cycle_b);

/// The mod-2 sum of linking numbers over all 10 pairs of complementary
/// triangles of an embedding of K6.  Throws data_error unless n = 6 and the
/// edge set is complete.
int conway_gordon(const SpatialGraph& g);

/// Deterministic straight-line embedding of K_n (1 <= n <= 6) with integer
/// coordinates in general position: samples from mt19937_64(seed) until the
/// exact disjointness predicates pass.  Throws data_error if the resampling
/// cap is exhausted.
SpatialGraph random_embedding(int n, std::uint64_t seed);

/// Parse the JSON embedding format:
///   {"n": int,
///    "vertices": [[[num,den],[num,den],[num,den]], ...]   (vertex 1..n)
///    "edges": [{"ends":[i,j], "waypoints":[[...], ...]}, ...]}
/// Integers may be JSON numbers or decimal strings (for big values);
/// waypoints are the interior points of the polyline, listed from i to j,
/// and may be omitted for a straight segment.  The parsed graph is
/// validated.  Throws parse_error for malformed documents and data_error
/// for invariant violations.
SpatialGraph spatial_from_json(const std::string& text);

/// Serialize in the same format, canonically: edges sorted by key, ends as
/// [min, max], rationals in lowest terms, integers emitted as JSON numbers
/// when they fit in 64 bits and as decimal strings otherwise.  Parsing then
/// serializing a canonical document reproduces it byte for byte.
std::string spatial_to_json(const SpatialGraph& g);

}  // namespace tsg
