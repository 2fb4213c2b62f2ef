#pragma once
/**
 * @file render.hpp
 * Report assembly and stable text rendering for the engine's front ends.
 *
 * Each command-level operation is split in two: a pure builder that runs the
 * engine and collects a report struct, and a renderer that serializes the
 * report to one of the stable output formats.  Renderings are deterministic
 * byte for byte: identical inputs produce identical output.
 *
 * Formats:
 *  - markdown: pipe tables with a title line; the human-facing default.
 *  - csv: RFC 4180 quoting (fields containing comma, quote, or newline are
 *    quoted, embedded quotes doubled), LF line endings, header row first.
 *  - json: a single object serialized with 2-space indentation and a
 *    trailing newline; key order is fixed, so output round-trips bit-exactly
 *    through any order-preserving JSON parser.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsg/classify.hpp"

namespace tsg {

enum class OutputFormat { kMarkdown, kCsv, kJson };

/// "markdown" | "csv" | "json" (exact); anything else is a parse_error.
OutputFormat parse_format(const std::string& name);

/// Classification table.  Markdown: columns Subgroup, then "Positively
/// Realizable" (positive mode) or "Realizable" (full mode), then Reason when
/// show_reasons is set; rows absent from the published tables carry the
/// suffix "(absent from published table)" in the Reason cell.  CSV and JSON
/// always carry all fields regardless of show_reasons.
std::string render_classify(const ClassifyResult& r, OutputFormat f,
                            bool show_reasons);

// ---------------------------------------------------------------------------
// check: per-rule verdicts for one candidate group.

struct CheckLine {
  std::string rule;      // rule id, e.g. "LEMMA2"
  bool pass = false;
  std::string evidence;  // empty exactly when pass
};

struct CheckReport {
  int n = 0;
  std::string generators;  // canonical forms, "; "-joined
  std::string type;        // iso name of the closure
  int order = 0;
  std::vector<CheckLine> lines;
  bool all_pass = false;
};

/// Parse semicolon-separated generators in S_n (4 <= n <= 6, data_error
/// otherwise), close them, and run the orientation-preserving battery rule
/// by rule in canonical order: the congruence for A4/A5/S4 candidates, then
/// LEMMA2, LEMMA1-OP, CGT, and for n = 6 FOURCYCLE and CG-PARITY.  `rules`
/// is "all" or a comma-separated list of rule ids to keep (ids are
/// validated, parse_error on an unknown one; inapplicable requested rules
/// simply yield no line).
CheckReport check_group(int n, const std::string& generators,
                        const std::string& rules);

std::string render_check(const CheckReport& r, OutputFormat f);

// ---------------------------------------------------------------------------
// orbits: action on the ten complementary triangle pairs of K6.

struct OrbitReport {
  std::string generators;
  std::string type;
  int order = 0;
  std::vector<std::vector<std::string>> orbits;  // triple notation, sorted
  bool all_even = false;
};

/// Closure of semicolon-separated generators in S_6 acting on the triangle
/// pairs; each pair is named by the triple containing vertex 1.
OrbitReport orbit_report(const std::string& generators);

std::string render_orbits(const OrbitReport& r, OutputFormat f);

// ---------------------------------------------------------------------------
// subgroups: lattice summary of S_n.

struct SubgroupRow {
  std::string type;
  int order = 0;
  int classes = 0;   // conjugacy classes of subgroups with this type
  long count = 0;    // subgroups with this type, every conjugate counted
};

struct SubgroupReport {
  int n = 0;
  std::vector<SubgroupRow> rows;  // descending order, then name
  long classes_total = 0;
  long subgroups_total = 0;
  int nontrivial_types = 0;
};

SubgroupReport subgroup_report(int n);

std::string render_subgroups(const SubgroupReport& r, OutputFormat f);

// ---------------------------------------------------------------------------
// Geometric reports (plain text).

/// "lk({a...}, {b...}) = v" with a trailing newline; cycles are vertex
/// lists of an embedding parsed from JSON text.
std::string linking_report(const std::string& embedding_json,
                           const std::vector<int>& cycle_a,
                           const std::vector<int>& cycle_b);

/// Ten lines "pair {1xy}: lk = v" in triple order, then "invariant = p".
/// The embedding must be a K6.
std::string cg_file_report(const std::string& embedding_json);

/// "k/count embeddings: invariant = 1" over seeded random straight-line K6
/// embeddings with seeds seed, seed+1, ..., seed+count-1.
std::string cg_random_report(int count, std::uint64_t seed);

// ---------------------------------------------------------------------------
// bracket: knot invariant report.

struct BracketReport {
  std::string code;  // canonical Gauss code
  int crossings = 0;
  int num_components = 0;
  int writhe = 0;
  std::string bracket;    // polynomial strings
  std::string invariant;  // writhe-normalized
  int span = 0;
  std::optional<long long> determinant;       // with_det
  std::optional<std::string> mirror_invariant;  // with_mirror
  std::optional<bool> equals_mirror;            // with_mirror
};

BracketReport bracket_report(const std::string& gauss_text, bool with_det,
                             bool with_mirror);

std::string render_bracket(const BracketReport& r, OutputFormat f);

}  // namespace tsg
