// Golden-file regression for the CLI surface.
//
// Every case runs the tsg binary twice with identical arguments and
// requires (a) both runs byte-identical (determinism) and (b) the output
// byte-identical to the committed golden file.  Environment: TSG_CLI_BIN,
// TSG_GOLDEN_DIR, TSG_DATA_DIR.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string sh_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') {
      out += "'\\''";
    } else {
      out += ch;
    }
  }
  out += "'";
  return out;
}

bool run_capture(const std::string& cmd, std::string& out) {
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return false;
  char buf[4096];
  out.clear();
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  return pclose(p) == 0;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return !in.bad();
}

}  // namespace

int main() {
  const char* bin = std::getenv("TSG_CLI_BIN");
  const char* gold = std::getenv("TSG_GOLDEN_DIR");
  const char* data = std::getenv("TSG_DATA_DIR");
  if (bin == nullptr || gold == nullptr || data == nullptr) {
    std::fprintf(stderr,
                 "TSG_CLI_BIN, TSG_GOLDEN_DIR, and TSG_DATA_DIR must be "
                 "set\n");
    return 1;
  }
  const std::string D = data;

  struct Case {
    std::string golden;
    std::vector<std::string> args;
  };
  std::vector<Case> cases;
  for (const std::string n : {"3", "4", "5", "6"}) {
    for (const std::string mode : {"positive", "full"}) {
      cases.push_back({"classify_n" + n + "_" + mode + ".md",
                       {"classify", "--n", n, "--mode", mode,
                        "--show-reasons"}});
    }
  }
  cases.push_back({"classify_n6_full.json",
                   {"classify", "--n", "6", "--mode", "full", "--format",
                    "json"}});
  cases.push_back(
      {"check_fourcycle.md", {"check", "--n", "6", "--group", "(1 2 3 4)"}});
  cases.push_back(
      {"orbits_z2cubed.md", {"orbits", "--group", "(13);(24);(56)"}});
  cases.push_back({"subgroups_n6.md", {"subgroups", "--n", "6"}});
  cases.push_back({"linking_hopf.txt",
                   {"linking", "--input", D + "/embeddings/hopf.json",
                    "--cycle", "1,2,3,4", "--cycle", "5,6,7,8"}});
  cases.push_back(
      {"cg_k6.txt", {"cg", "--input", D + "/embeddings/k6.json"}});
  cases.push_back(
      {"cg_random_100_seed7.txt", {"cg", "--random", "100", "--seed", "7"}});
  cases.push_back({"bracket_41.md",
                   {"bracket", "--gauss", D + "/knots/4_1.gauss", "--det",
                    "--mirror-check"}});

  int failures = 0;
  for (const Case& c : cases) {
    std::string cmd = sh_quote(bin);
    for (const std::string& a : c.args) cmd += " " + sh_quote(a);
    std::string first, second, expected;
    std::string why;
    if (!run_capture(cmd, first)) {
      why = "command failed";
    } else if (!run_capture(cmd, second)) {
      why = "second run failed";
    } else if (first != second) {
      why = "output not deterministic";
    } else if (!read_file(std::string(gold) + "/" + c.golden, expected)) {
      why = "missing golden file";
    } else if (first != expected) {
      why = "output differs from golden (" + std::to_string(first.size()) +
            " vs " + std::to_string(expected.size()) + " bytes)";
    }
    if (why.empty()) {
      std::printf("[OK]   %s\n", c.golden.c_str());
    } else {
      std::printf("[FAIL] %s: %s\n", c.golden.c_str(), why.c_str());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d golden case(s) failed\n", failures);
    return 1;
  }
  std::printf("all %d golden cases match\n",
              static_cast<int>(cases.size()));
  return 0;
}
