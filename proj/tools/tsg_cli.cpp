// tsg: command-line front end over the C API.
//
// Subcommands: classify, check, orbits, subgroups, linking, cg, bracket.
// Exit codes: 0 success, 2 usage or parse error, 3 data invariant
// violation, 4 internal failure.  Identical invocations produce
// byte-identical output; TSG_SEED overrides the default seed of cg
// --random when --seed is not given explicitly.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsg/c_api.h"

namespace {

/// Print the result of a C API call; returns the process exit code.
int emit(tsg_engine* eng, int status, char* out) {
  if (status == TSG_OK) {
    std::fputs(out, stdout);
    tsg_string_free(out);
    return 0;
  }
  std::fprintf(stderr, "error: %s\n", tsg_last_error(eng));
  return status;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return false;
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Topological symmetry engine for complete graphs: realizability "
      "tables, rule checks, triangle-pair orbits, subgroup lattices, exact "
      "linking numbers, and knot invariants."};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"markdown", "csv", "json"};

  int cl_n = 6;
  std::string cl_mode = "positive", cl_format = "markdown";
  bool cl_reasons = false;
  CLI::App* classify = app.add_subcommand(
      "classify", "Realizability table for the symmetry groups of K_n");
  classify->add_option("--n", cl_n, "Number of vertices (3-6)")
      ->required()
      ->check(CLI::Range(3, 6));
  classify->add_option("--mode", cl_mode, "positive or full realizability")
      ->check(CLI::IsMember({"positive", "full"}));
  classify->add_option("--format", cl_format, "Output format")
      ->check(CLI::IsMember(formats));
  classify->add_flag("--show-reasons", cl_reasons,
                     "Include the Reason column in markdown output");

  int ck_n = 6;
  std::string ck_group, ck_rules = "all", ck_format = "markdown";
  CLI::App* check = app.add_subcommand(
      "check", "Run the obstruction rules on one candidate group");
  check->add_option("--n", ck_n, "Number of vertices (4-6)")
      ->required()
      ->check(CLI::Range(4, 6));
  check
      ->add_option("--group", ck_group,
                   "Semicolon-separated generators, e.g. \"(12); (34)(56)\"")
      ->required();
  check->add_option("--rules", ck_rules,
                    "all, or a comma-separated list of rule ids");
  check->add_option("--format", ck_format, "Output format")
      ->check(CLI::IsMember(formats));

  int ob_n = 6;
  std::string ob_group, ob_format = "markdown";
  CLI::App* orbits = app.add_subcommand(
      "orbits", "Orbits on the ten complementary triangle pairs of K6");
  orbits->add_option("--n", ob_n, "Number of vertices (must be 6)")
      ->check(CLI::Range(6, 6));
  orbits->add_option("--group", ob_group, "Semicolon-separated generators")
      ->required();
  orbits->add_option("--format", ob_format, "Output format")
      ->check(CLI::IsMember(formats));

  int sg_n = 6;
  std::string sg_format = "markdown";
  CLI::App* subgroups =
      app.add_subcommand("subgroups", "Subgroup-lattice summary of S_n");
  subgroups->add_option("--n", sg_n, "Number of vertices (3-6)")
      ->required()
      ->check(CLI::Range(3, 6));
  subgroups->add_option("--format", sg_format, "Output format")
      ->check(CLI::IsMember(formats));

  std::string lk_input;
  std::vector<std::string> lk_cycles;
  CLI::App* linking = app.add_subcommand(
      "linking", "Exact linking number of two cycles of an embedding");
  linking->add_option("--input", lk_input, "Embedding JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  linking
      ->add_option("--cycle", lk_cycles,
                   "Cycle as a vertex list, e.g. 1,2,3 (give exactly twice)")
      ->required()
      ->expected(2);

  std::string cg_input;
  int cg_count = 0;
  std::uint64_t cg_seed = 7;
  CLI::App* cg = app.add_subcommand(
      "cg", "Mod-2 triangle-pair linking invariant of K6 embeddings");
  CLI::Option* cg_input_opt =
      cg->add_option("--input", cg_input, "Embedding JSON file")
          ->check(CLI::ExistingFile);
  CLI::Option* cg_random_opt =
      cg->add_option("--random", cg_count,
                     "Check this many seeded random embeddings")
          ->check(CLI::Range(1, 10000));
  cg->add_option("--seed", cg_seed, "Base seed for --random")
      ->envname("TSG_SEED");
  cg_input_opt->excludes(cg_random_opt);

  std::string br_file, br_code, br_format = "markdown";
  bool br_det = false, br_mirror = false;
  CLI::App* bracket =
      app.add_subcommand("bracket", "Invariants of a knot diagram");
  CLI::Option* br_file_opt =
      bracket->add_option("--gauss", br_file, "Gauss-code file")
          ->check(CLI::ExistingFile);
  CLI::Option* br_code_opt =
      bracket->add_option("--code", br_code, "Inline Gauss code");
  bracket->add_flag("--det", br_det, "Include the determinant");
  bracket->add_flag("--mirror-check", br_mirror,
                    "Compare against the mirror image");
  bracket->add_option("--format", br_format, "Output format")
      ->check(CLI::IsMember(formats));
  br_file_opt->excludes(br_code_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  tsg_engine* eng = tsg_engine_new();
  if (eng == nullptr) {
    std::fprintf(stderr, "error: engine allocation failed\n");
    return 4;
  }
  int rc = 0;
  char* out = nullptr;

  if (classify->parsed()) {
    const int status =
        tsg_classify_render(eng, cl_n, cl_mode.c_str(), cl_format.c_str(),
                            cl_reasons ? 1 : 0, &out);
    rc = emit(eng, status, out);
  } else if (check->parsed()) {
    const int status = tsg_check_group(eng, ck_n, ck_group.c_str(),
                                       ck_rules.c_str(), ck_format.c_str(),
                                       &out);
    rc = emit(eng, status, out);
  } else if (orbits->parsed()) {
    const int status =
        tsg_orbits(eng, ob_group.c_str(), ob_format.c_str(), &out);
    rc = emit(eng, status, out);
  } else if (subgroups->parsed()) {
    const int status = tsg_subgroups(eng, sg_n, sg_format.c_str(), &out);
    rc = emit(eng, status, out);
  } else if (linking->parsed()) {
    std::string json;
    if (!read_file(lk_input, json)) {
      std::fprintf(stderr, "error: cannot read %s\n", lk_input.c_str());
      rc = 2;
    } else {
      const int status =
          tsg_linking_number(eng, json.c_str(), lk_cycles[0].c_str(),
                             lk_cycles[1].c_str(), &out, nullptr);
      rc = emit(eng, status, out);
    }
  } else if (cg->parsed()) {
    if (cg_input_opt->count() == 0 && cg_random_opt->count() == 0) {
      std::fprintf(stderr, "error: cg needs --input or --random\n");
      rc = 2;
    } else if (cg_random_opt->count() > 0) {
      const int status =
          tsg_cg_random(eng, cg_count, cg_seed, &out, nullptr);
      rc = emit(eng, status, out);
    } else {
      std::string json;
      if (!read_file(cg_input, json)) {
        std::fprintf(stderr, "error: cannot read %s\n", cg_input.c_str());
        rc = 2;
      } else {
        const int status = tsg_cg_check(eng, json.c_str(), &out, nullptr);
        rc = emit(eng, status, out);
      }
    }
  } else if (bracket->parsed()) {
    std::string code;
    bool ready = true;
    if (br_file_opt->count() > 0) {
      if (!read_file(br_file, code)) {
        std::fprintf(stderr, "error: cannot read %s\n", br_file.c_str());
        rc = 2;
        ready = false;
      }
    } else if (br_code_opt->count() > 0) {
      code = br_code;
    } else {
      std::fprintf(stderr, "error: bracket needs --gauss or --code\n");
      rc = 2;
      ready = false;
    }
    if (ready) {
      const int status =
          tsg_bracket_report(eng, code.c_str(), br_det ? 1 : 0,
                             br_mirror ? 1 : 0, br_format.c_str(), &out);
      rc = emit(eng, status, out);
    }
  }

  tsg_engine_free(eng);
  return rc;
}
