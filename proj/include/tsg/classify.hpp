#pragma once
/**
 * @file classify.hpp
 * Assembles the realizability verdict tables for K_n, n in {3,4,5,6}.
 *
 * "Yes" verdicts rest on an auditable base of witness records: specific
 * embeddings, referenced by figure label and transcribed as permutation
 * generators, whose symmetry groups realize the claimed types.  Witnessed
 * positive realizability spreads to subgroups when the witness embedding has
 * a free edge (Subgroup Theorem), and positive realizability promotes to
 * plain realizability for n > 3 by tying a chiral knot into an edge orbit.
 * "No" verdicts are derived: per conjugacy class, the orientation-preserving
 * battery must fail, and in full mode every index-2 kernel choice must fail
 * as well (the orientation dichotomy allows no other factorization).
 *
 * K_3 is special: its verdicts are served from trusted embedding facts (the
 * planar embedding, the 8_17 and 8_17 # 3_1 embeddings, and the slithering
 * constraint that forces an order-3 symmetry on every embedding).
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tsg/groups.hpp"
#include "tsg/rules.hpp"

namespace tsg {

/// One witnessed embedding: the combinatorial shadow of a published figure.
/// Geometry is out of scope; the trusted base is the (figure, generators,
/// claimed type) triple plus any external facts the construction relies on.
struct WitnessRecord {
  int n = 0;                            // vertex count of the embedded K_n
  std::vector<std::string> generators;  // cycle-notation generators
  std::string claimed_name;             // iso type the embedding realizes
  bool positive = false;                // realizes TSG+ (else the full TSG)
  std::string figure;                   // "Figure 5", "modifying Figure 9", ...
  std::optional<std::array<int, 2>> free_edge;  // edge fixed pointwise by no
                                                // nontrivial element
  std::vector<std::string> trusted_facts;       // e.g. "3_1 is chiral"

  /// Closure of the parsed generators in S_n.
  Subgroup group() const;
};

/// The compiled-in witness registry.  Construction validates every record:
/// the closure's iso type equals the claimed name, free edges are genuinely
/// free, and each witnessed group passes the very rule battery that refutes
/// the "No" rows (n >= 4).
const std::vector<WitnessRecord>& witness_registry();

/// Subgroup Theorem: a positive witness with a free edge certifies every
/// subgroup of the witnessed group as positively realizable (knot the free
/// edge's orbit until only the subgroup survives).  Returns the iso types of
/// all subgroups, the trivial group and the witnessed type included, sorted
/// by descending order then name.  Throws data_error when the record is not
/// positive, lacks a free edge, or the free edge is fixed pointwise by a
/// nontrivial element (the fixing element is cited).
std::vector<std::string> propagate_subgroup_theorem(const WitnessRecord& w);

/// Chiral promotion: for n > 3, tying a chiral knot into an edge orbit kills
/// every orientation-reversing symmetry, so positively realizable types are
/// realizable outright.  Identity on the set; data_error for n <= 3 (the
/// construction needs an edge a knot can be tied into).
std::vector<std::string> promote_positive_to_full(
    int n, const std::vector<std::string>& positives);

/// One row of a classification table.
struct VerdictRow {
  std::string type;                  // iso type, display name
  bool yes = false;
  std::vector<std::string> reasons;  // e.g. {"By Lemma 2", "By Lemma 1"}
  std::vector<std::string> sources;  // {"witness(Figure 5)"}, {"subgroup-thm"},
                                     // {"chiral-promotion"}; empty for derived
                                     // rows and congruence rows
  bool extra = false;                // absent from the published table

  /// The reasons joined with "; " — the table's Reason column.
  std::string reason() const;
};

struct ClassifyResult {
  int n = 0;
  std::string mode;  // "positive" or "full"
  std::vector<VerdictRow> rows;
};

/// Outcome of one kernel choice for one conjugacy class: either the first
/// rule the factorization violates, or a pass (which refutes nothing).
struct KernelOutcome {
  std::string kernel_name;   // iso type of the kernel
  int kernel_order = 0;
  bool whole_group = false;  // kernel is the class representative itself
  std::string rule;          // violated rule id; empty when pass
  std::string evidence;      // violation evidence; empty when pass
  bool pass = false;
};

struct ClassDerivation {
  std::string class_generators;        // generators of the class representative
  std::vector<KernelOutcome> kernels;  // whole-group entry first
};

/// A machine-derived refutation of full realizability for one iso type.
struct NoDerivation {
  std::string reason;                    // the table's Reason string
  std::vector<ClassDerivation> classes;  // one entry per conjugacy class
};

/// Returns a refutation iff for every conjugacy class of the type in S_n,
/// every kernel choice (the class representative itself and each index-2
/// normal subgroup) violates some rule; nullopt as soon as one kernel choice
/// survives.  n in {4,5,6}; data_error when S_n has no subgroup of the type.
std::optional<NoDerivation> full_no_derivation(const std::string& type_name,
                                               int n);

/// The classification table for K_n, n in {3,4,5,6}; mode "positive" or
/// "full".  One row per nontrivial iso type of subgroups of S_n, in the
/// published display order; rows absent from the published tables are
/// flagged extra.  Pure and deterministic.
ClassifyResult classify(int n, const std::string& mode);

}  // namespace tsg
