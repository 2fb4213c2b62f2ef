#pragma once
/**
 * @file groups.hpp
 * Subgroups of S_n (n <= 6): closures, the full subgroup lattice up to
 * conjugacy, isomorphism fingerprints and names, and the group-theoretic
 * queries the classification rules need.
 *
 * Isomorphism types carry the fixed ASCII names used throughout the engine:
 * Z1..Z6, D2..D6, A4..A6, S4..S6, Z4xZ2, Z2xZ2xZ2, Z3xZ3, D3xZ3,
 * (Z3xZ3):Z2, (Z3xZ3):Z4, Z5:Z4, D3xD3, D4xZ2, A4xZ2, S4xZ2, S2[S3].
 * Every subgroup of S_n for n <= 6 is one of these ("D2" is the Klein group).
 */

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsg/perm.hpp"

namespace tsg {

/// A concrete subgroup of S_degree: sorted closed element list with identity.
struct Subgroup {
  int degree = 1;
  std::vector<Perm> elements;
  std::vector<Perm> generators;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Perm& p) const;
};

/// Closure of the generated set; guarded so it cannot exceed degree!.
Subgroup closure(int degree, std::vector<Perm> generators);

Subgroup symmetric_group(int degree);

/// Small deterministic generating set (greedy; not guaranteed minimal).
std::vector<Perm> small_generating_set(const Subgroup&);

/// Cheap isomorphism invariants; equal fingerprints are a necessary condition
/// and in this engine's range (subgroups of S6) also distinguish all types.
struct Fingerprint {
  int order = 1;
  std::vector<std::pair<int, int>> order_histogram;  // (element order, count)
  bool abelian = true;
  int center_order = 1;
  int derived_order = 1;
  int exponent = 1;

  auto operator<=>(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const Subgroup&);

/// Canonical isomorphism-type name; "Unnamed(order=..., fingerprint=...)" is
/// the guarded fallback and never fires for subgroups of S_n, n <= 6.
std::string iso_name(const Subgroup&);

/// Exact isomorphism test by generator-image backtracking.
bool is_isomorphic(const Subgroup&, const Subgroup&);

struct SubgroupClass {
  Subgroup rep;
  long class_size = 1;
  std::string name;
};

/// All subgroups of S_degree up to conjugacy, deterministically ordered by
/// (group order, canonical class form).  Computed once per degree and cached.
const std::vector<SubgroupClass>& subgroup_classes(int degree);

/// Number of subgroups of S_degree with every conjugate counted.
long subgroup_count(int degree);

/// Every subgroup of G (not just up to conjugacy), deterministic order.
std::vector<Subgroup> subgroups_of(const Subgroup& G);

/// Normal subgroups of index 2: kernels of the surjections G -> Z2.
std::vector<Subgroup> index2_normal_subgroups(const Subgroup& G);

Subgroup centralizer(const Subgroup& ambient, const Perm& x);

Subgroup conjugate_subgroup(const Subgroup& G, const Perm& c);

/// Smallest odd m with a monomorphism G -> D_m x D_m, searching m in {L, 3L}
/// where L is the lcm of the odd element orders of G; nullopt if the Sylow
/// filters reject G or the search fails.
std::optional<int> dmxdm_embedding(const Subgroup& G);

/// A complementary triangle pair of K6, named by the sorted triple that
/// contains vertex 1.
using Triple = std::array<int, 3>;

std::string triple_str(const Triple&);

/// Orbits of a subgroup of S6 on the 10 triangle pairs.  Orbit members and
/// the orbit list itself are sorted; requires degree 6.
std::vector<std::vector<Triple>> triangle_pair_orbits(const Subgroup& G);

}  // namespace tsg
