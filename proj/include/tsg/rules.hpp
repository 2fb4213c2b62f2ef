#pragma once
/**
 * @file rules.hpp
 * The obstruction rule engine: every exclusion criterion as an executable
 * filter on elements, subgroups, and (group, kernel) pairs.
 *
 * A candidate for the orientation-preserving symmetry group of an embedded
 * complete graph K_n must survive a battery of filters:
 *   - congruence conditions on n when the candidate is A4, A5, or S4;
 *   - fixed-point bounds per element (Lemma 1), split by whether the
 *     realizing homeomorphism preserves or reverses orientation;
 *   - the even-order restriction (Lemma 2): an orientation-preserving
 *     element of even order > 2 fixes no vertex and flips no vertex pair;
 *   - membership in the closed list of groups acting on S^3 preserving
 *     orientation: finite subgroups of SO(3) or subgroups of D_m x D_m
 *     with m odd;
 *   - for K6: no induced pure 4-cycle, and the mod-2 linking parity of the
 *     ten complementary triangle pairs (an odd orbit must exist).
 *
 * Composite checks return the first failing rule in a fixed canonical order
 * (congruence, Lemma 2, Lemma 1, SO(3)/dihedral-product, 4-cycle, parity),
 * which is the order the human-readable "reason" strings rely on.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/groups.hpp"

namespace tsg {

enum class RuleId {
  kCgt,         // "CGT": SO(3) / D_m x D_m membership
  kA4Thm,       // "A4-THM": n = 0,1,4,5,8 (mod 12)
  kA5Thm,       // "A5-THM": n = 0,1,5,20 (mod 60)
  kS4Thm,       // "S4-THM": n = 0,4,8,12,20 (mod 24)
  kLemma1Op,    // "LEMMA1-OP": fixed-point bound, orientation preserving
  kLemma1Or,    // "LEMMA1-OR": fixed-point bound, orientation reversing
  kLemma2,      // "LEMMA2": even order > 2 excludes fixed vertices/2-cycles
  kFourCycle,   // "FOURCYCLE": no pure 4-cycle on six vertices
  kCgParity,    // "CG-PARITY": triangle-pair orbit parity on six vertices
  kSubgroupThm, // "SUBGROUP-THM": inherited realizability (classification)
  kIndex2,      // "INDEX2": orientation dichotomy (classification)
};

/// Stable ASCII rule id used in reports and JSON.
std::string_view rule_id_str(RuleId id);

struct RuleVerdict {
  RuleId id;
  bool pass = true;
  std::string evidence;  // non-empty exactly when pass is false

  static RuleVerdict ok(RuleId id) { return {id, true, {}}; }
  static RuleVerdict fail(RuleId id, std::string why) {
    return {id, false, std::move(why)};
  }
};

/// Congruence conditions for the three exceptional candidates; m is the
/// number of vertices.  Throws data_error when m < 4.
bool congruence_a4(int m);
bool congruence_a5(int m);
bool congruence_s4(int m);

/// The congruence obstruction for a named candidate group: nullopt when the
/// name carries no congruence or the congruence holds; otherwise the failing
/// verdict (rule A4-THM / A5-THM / S4-THM).
std::optional<RuleVerdict> congruence_obstruction(const std::string& iso_name,
                                                  int m);

enum class Orientation { kPreserving, kReversing };

/// Fixed-point bound for one nontrivial element: at most 4 fixed vertices if
/// the homeomorphism reverses orientation; at most 3 if it preserves it, and
/// at most 2 when the element also has even order.  Requires degree > 3 and
/// p != identity (data_error otherwise).
RuleVerdict lemma1_element(const Perm& p, Orientation o);

/// Vacuously passes unless order(p) is even and > 2; then p must fix no
/// vertex and interchange no pair of vertices.
RuleVerdict lemma2_element(const Perm& p);

/// Fails iff G contains a 4-cycle fixing two vertices.  Requires n = 6.
RuleVerdict four_cycle_rule(const Subgroup& G, int n);

/// Fails iff every G-orbit on the 10 complementary triangle pairs has even
/// size (no orbit can then carry the odd total linking parity).  Requires
/// n = 6.
RuleVerdict cg_parity_rule(const Subgroup& G, int n);

/// Passes iff K is a finite SO(3) type (cyclic, dihedral, A4, S4, A5) or
/// embeds in D_m x D_m for some odd m.
RuleVerdict cgt_rule(const Subgroup& K);

/// Element sweeps over a whole subgroup; the returned failure cites the first
/// violating element in canonical element order.
RuleVerdict sweep_lemma1(const Subgroup& K, Orientation o);
RuleVerdict sweep_lemma2(const Subgroup& K);

/// Lemma 1 with the orientation-reversing bound over the coset G \ K.
RuleVerdict sweep_lemma1_coset(const Subgroup& G, const Subgroup& K);

/// A candidate factorization of a full symmetry group: K plays the
/// orientation-preserving part (K = G, or an index-2 normal subgroup), the
/// complement G \ K the orientation-reversing coset.
struct SignedCandidate {
  Subgroup G;
  Subgroup K;
};

/// The full orientation-preserving battery in canonical order; nullopt when
/// every rule passes, otherwise the first failure.  n in {4,5,6} and K must
/// be a subgroup of S_n.
std::optional<RuleVerdict> tsg_plus_feasible(const Subgroup& K, int n);

/// The battery for a signed candidate: K must pass tsg_plus_feasible, every
/// element of G \ K the reversing bound of Lemma 1, and G itself the
/// 4-cycle and parity rules when n = 6.
std::optional<RuleVerdict> signed_feasible(const SignedCandidate& c, int n);

struct CandidateOutcome {
  Subgroup kernel;
  std::optional<RuleVerdict> failure;  // nullopt: this factorization works
};

struct FullFeasibility {
  bool pass = false;                      // some candidate survived
  std::vector<CandidateOutcome> outcomes; // K = G first, then index-2 kernels
};

/// Evaluates signed_feasible for K = G and for every index-2 normal subgroup.
FullFeasibility full_feasible(const Subgroup& G, int n);

/// All x of the given cycle type in S_degree(y) satisfying a two-variable
/// word equation such as "x^-1 y x = y^2".  Words read left to right in
/// application order: "x^-1 y x" sends a point p to x(y(x^-1(p))).
/// Degree is capped at 8 (data_error above).
std::vector<Perm> relation_search(const Perm& y, const CycleType& target,
                                  const std::string& relation);

}  // namespace tsg
