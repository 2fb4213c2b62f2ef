#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tsg/c_api.h"
#include "tsg/render.hpp"

using namespace tsg;

namespace {

std::string data_file(const std::string& rel) {
  const char* dir = std::getenv("TSG_DATA_DIR");
  const std::string base = dir != nullptr ? dir : "data";
  std::ifstream in(base + "/" + rel, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Engine {
  tsg_engine* e = tsg_engine_new();
  ~Engine() { tsg_engine_free(e); }
};

std::string take(char* s) {
  const std::string out = s != nullptr ? s : "";
  tsg_string_free(s);
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("output format selection and quoting") {
  CHECK(parse_format("markdown") == OutputFormat::kMarkdown);
  CHECK(parse_format("csv") == OutputFormat::kCsv);
  CHECK(parse_format("json") == OutputFormat::kJson);
  CHECK_THROWS_AS(parse_format("yaml"), parse_error);
  CHECK_THROWS_AS(parse_format("Markdown"), parse_error);

  // RFC 4180: fields with commas or quotes are quoted, quotes doubled.
  ClassifyResult fake;
  fake.n = 4;
  fake.mode = "positive";
  VerdictRow row;
  row.type = "D4";
  row.yes = true;
  row.reasons = {"holds, with \"evidence\""};
  fake.rows.push_back(row);
  const std::string csv = render_classify(fake, OutputFormat::kCsv, true);
  CHECK(contains(csv, "subgroup,verdict,reason,sources,extra\n"));
  CHECK(contains(csv, "D4,Yes,\"holds, with \"\"evidence\"\"\",,false\n"));
}

TEST_CASE("classify rendering across formats") {
  const ClassifyResult pos5 = classify(5, "positive");

  const std::string md = render_classify(pos5, OutputFormat::kMarkdown, true);
  CHECK(contains(md, "# Positively realizable groups for K5\n"));
  CHECK(contains(md, "| Subgroup | Positively Realizable | Reason |\n"));
  CHECK(contains(md, "| A5 | Yes | By A5 Theorem |\n"));
  CHECK(contains(md,
                 "| S5 | No | By Lemma 2 (absent from published table) |\n"));

  const std::string brief =
      render_classify(pos5, OutputFormat::kMarkdown, false);
  CHECK(contains(brief, "| Subgroup | Positively Realizable |\n"));
  CHECK(!contains(brief, "Reason"));
  CHECK(contains(brief, "| A5 | Yes |\n"));

  const std::string full_md =
      render_classify(classify(3, "full"), OutputFormat::kMarkdown, true);
  CHECK(contains(full_md, "# Realizable groups for K3\n"));
  CHECK(contains(full_md, "| Subgroup | Realizable | Reason |\n"));

  // JSON round-trips bit-exactly through an order-preserving parser.
  const std::string js = render_classify(pos5, OutputFormat::kJson, true);
  const auto parsed = nlohmann::ordered_json::parse(js);
  CHECK(parsed.dump(2) + "\n" == js);
  CHECK(parsed["command"] == "classify");
  CHECK(parsed["n"] == 5);
  CHECK(parsed["rows"].size() == 15);
  CHECK(parsed["rows"][0]["type"] == "S5");
  CHECK(parsed["rows"][0]["yes"] == false);
  CHECK(parsed["rows"][0]["extra"] == true);
}

TEST_CASE("check reports run the battery rule by rule") {
  const CheckReport four = check_group(6, "(1 2 3 4)", "all");
  CHECK(four.n == 6);
  CHECK(four.generators == "(1 2 3 4)");
  CHECK(four.type == "Z4");
  CHECK(four.order == 4);
  REQUIRE(four.lines.size() == 5);
  CHECK(four.lines[0].rule == "LEMMA2");
  CHECK(four.lines[1].rule == "LEMMA1-OP");
  CHECK(four.lines[2].rule == "CGT");
  CHECK(four.lines[3].rule == "FOURCYCLE");
  CHECK(four.lines[4].rule == "CG-PARITY");
  CHECK(!four.lines[0].pass);
  CHECK(four.lines[1].pass);
  CHECK(four.lines[2].pass);
  CHECK(!four.lines[3].pass);
  CHECK(contains(four.lines[3].evidence, "(1 2 3 4)"));
  CHECK(!four.all_pass);

  const std::string md = render_check(four, OutputFormat::kMarkdown);
  CHECK(contains(md, "# Rule check for K6\n"));
  CHECK(contains(md, "Type: Z4, order 4\n"));
  CHECK(contains(md, "| FOURCYCLE | fail |"));
  CHECK(contains(md, "All checked rules pass: no\n"));

  // Rule filters keep only the requested lines.
  const CheckReport filtered = check_group(6, "(1 2 3 4)", "CGT,LEMMA1-OP");
  REQUIRE(filtered.lines.size() == 2);
  CHECK(filtered.lines[0].rule == "LEMMA1-OP");
  CHECK(filtered.lines[1].rule == "CGT");
  CHECK(filtered.all_pass);
  CHECK_THROWS_AS(check_group(6, "(12)", "CGT,NOSUCH"), parse_error);

  // The congruence line appears exactly for A4/A5/S4 candidates.
  const CheckReport a4_5 = check_group(5, "(12)(34); (123)", "all");
  CHECK(a4_5.type == "A4");
  REQUIRE(!a4_5.lines.empty());
  CHECK(a4_5.lines[0].rule == "A4-THM");
  CHECK(a4_5.lines[0].pass);
  CHECK(a4_5.all_pass);
  const CheckReport a4_6 = check_group(6, "(12)(34); (123)", "all");
  CHECK(a4_6.lines[0].rule == "A4-THM");
  CHECK(!a4_6.lines[0].pass);
  CHECK(!a4_6.all_pass);

  // The trivial group passes vacuously; n = 5 has no K6-only rules.
  const CheckReport triv = check_group(5, "", "all");
  CHECK(triv.generators == "()");
  CHECK(triv.type == "Z1");
  CHECK(triv.order == 1);
  REQUIRE(triv.lines.size() == 3);
  CHECK(triv.all_pass);
  for (const CheckLine& line : triv.lines) {
    CHECK(line.pass);
    CHECK(line.evidence.empty());
  }

  CHECK_THROWS_AS(check_group(3, "(12)", "all"), data_error);
  CHECK_THROWS_AS(check_group(7, "(12)", "all"), data_error);
  CHECK_THROWS_AS(check_group(6, "(12); ; (34)", "all"), parse_error);
  CHECK_THROWS_AS(check_group(6, "(17)", "all"), parse_error);
}

TEST_CASE("orbit and subgroup reports") {
  const OrbitReport orb = orbit_report("(13);(24);(56)");
  CHECK(orb.generators == "(1 3); (2 4); (5 6)");
  CHECK(orb.type == "Z2xZ2xZ2");
  CHECK(orb.order == 8);
  const std::vector<std::vector<std::string>> expect = {
      {"{123}", "{134}"},
      {"{124}", "{156}"},
      {"{125}", "{126}", "{145}", "{146}"},
      {"{135}", "{136}"}};
  CHECK(orb.orbits == expect);
  CHECK(orb.all_even);
  const std::string md = render_orbits(orb, OutputFormat::kMarkdown);
  CHECK(contains(md, "| 3 | 4 | {125}, {126}, {145}, {146} |\n"));
  CHECK(contains(md, "All orbit sizes even: yes\n"));

  // The trivial group keeps all ten pairs separate: ten odd orbits.
  const OrbitReport triv = orbit_report("");
  CHECK(triv.orbits.size() == 10);
  CHECK(!triv.all_even);

  const SubgroupReport s4 = subgroup_report(4);
  CHECK(s4.classes_total == 11);
  CHECK(s4.subgroups_total == 30);
  CHECK(s4.nontrivial_types == 8);
  REQUIRE(!s4.rows.empty());
  CHECK(s4.rows[0].type == "S4");
  CHECK(s4.rows[0].order == 24);
  CHECK(s4.rows[0].classes == 1);
  CHECK(s4.rows[0].count == 1);
  CHECK(s4.rows.back().type == "Z1");
  const std::string csv = render_subgroups(s4, OutputFormat::kCsv);
  CHECK(contains(csv, "type,order,classes,subgroups\nS4,24,1,1\n"));

  const SubgroupReport s6 = subgroup_report(6);
  CHECK(s6.classes_total == 56);
  CHECK(s6.subgroups_total == 1455);
  CHECK(s6.nontrivial_types == 28);

  const std::string js = render_subgroups(s6, OutputFormat::kJson);
  const auto parsed = nlohmann::ordered_json::parse(js);
  CHECK(parsed.dump(2) + "\n" == js);
  CHECK(parsed["rows"][0]["type"] == "S6");
  CHECK(parsed["rows"][0]["order"] == 720);
}

TEST_CASE("geometric text reports") {
  const std::string hopf = data_file("embeddings/hopf.json");
  const std::string split = data_file("embeddings/split.json");
  CHECK(linking_report(hopf, {1, 2, 3, 4}, {5, 6, 7, 8}) ==
        "lk({1, 2, 3, 4}, {5, 6, 7, 8}) = 1\n");
  CHECK(linking_report(hopf, {5, 6, 7, 8}, {1, 2, 3, 4}) ==
        "lk({5, 6, 7, 8}, {1, 2, 3, 4}) = 1\n");
  CHECK(linking_report(split, {1, 2, 3, 4}, {5, 6, 7, 8}) ==
        "lk({1, 2, 3, 4}, {5, 6, 7, 8}) = 0\n");

  const std::string k6 = data_file("embeddings/k6.json");
  const std::string cg = cg_file_report(k6);
  CHECK(contains(cg, "pair {123}: lk = 0\n"));
  CHECK(contains(cg, "pair {134}: lk = -1\n"));
  CHECK(contains(cg, "invariant = 1\n"));
  int pairs = 0;
  for (std::size_t at = cg.find("pair "); at != std::string::npos;
       at = cg.find("pair ", at + 1)) {
    ++pairs;
  }
  CHECK(pairs == 10);

  CHECK(cg_random_report(3, 7) == "3/3 embeddings: invariant = 1\n");
  CHECK_THROWS_AS(cg_random_report(0, 7), data_error);
  CHECK_THROWS_AS(cg_random_report(20000, 7), data_error);

  // A non-K6 embedding is rejected with the violated predicate.
  CHECK_THROWS_AS(cg_file_report(hopf), data_error);
}

TEST_CASE("bracket reports") {
  const BracketReport rep =
      bracket_report("O1+,U2+,O3+,U1+,O2+,U3+", true, true);
  CHECK(rep.code == "O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(rep.crossings == 3);
  CHECK(rep.num_components == 1);
  CHECK(rep.writhe == 3);
  CHECK(rep.bracket == "-A^5 - A^-3 + A^-7");
  CHECK(rep.invariant == "A^-4 + A^-12 - A^-16");
  CHECK(rep.span == 12);
  REQUIRE(rep.determinant.has_value());
  CHECK(*rep.determinant == 3);
  REQUIRE(rep.equals_mirror.has_value());
  CHECK(!*rep.equals_mirror);

  const std::string md = render_bracket(rep, OutputFormat::kMarkdown);
  CHECK(contains(md, "| determinant | 3 |\n"));
  CHECK(contains(md, "| equals mirror | no |\n"));

  const BracketReport plain =
      bracket_report("# just a kink\nO1+,U1+", false, false);
  CHECK(plain.code == "O1+,U1+");
  CHECK(!plain.determinant.has_value());
  CHECK(!plain.mirror_invariant.has_value());
  const std::string js = render_bracket(plain, OutputFormat::kJson);
  const auto parsed = nlohmann::ordered_json::parse(js);
  CHECK(parsed.dump(2) + "\n" == js);
  CHECK(!parsed.contains("determinant"));
  CHECK(parsed["invariant"] == "1");
}

TEST_CASE("c api status codes and outputs") {
  Engine eng;
  REQUIRE(eng.e != nullptr);
  CHECK(std::string(tsg_last_error(eng.e)).empty());

  char* out = nullptr;
  CHECK(tsg_classify_render(eng.e, 4, "positive", "markdown", 1, &out) ==
        TSG_OK);
  const std::string table = take(out);
  CHECK(contains(table, "| S4 | Yes | By S4 Theorem |\n"));
  CHECK(std::string(tsg_last_error(eng.e)).empty());

  out = nullptr;
  CHECK(tsg_classify_render(eng.e, 4, "sideways", "markdown", 1, &out) ==
        TSG_EPARSE);
  CHECK(out == nullptr);
  CHECK(contains(tsg_last_error(eng.e), "sideways"));

  CHECK(tsg_classify_render(eng.e, 9, "positive", "markdown", 1, &out) ==
        TSG_EDATA);
  CHECK(tsg_classify_render(eng.e, 4, "positive", "markdown", 1, nullptr) ==
        TSG_EPARSE);
  CHECK(tsg_classify_render(eng.e, 4, nullptr, "markdown", 1, &out) ==
        TSG_EPARSE);

  // A later success clears the stored message.
  CHECK(tsg_classify_render(eng.e, 3, "full", "json", 0, &out) == TSG_OK);
  CHECK(std::string(tsg_last_error(eng.e)).empty());
  CHECK(contains(take(out), "\"mode\": \"full\""));

  out = nullptr;
  CHECK(tsg_check_group(eng.e, 6, "(1 2 3 4)", "all", "markdown", &out) ==
        TSG_OK);
  CHECK(contains(take(out), "| FOURCYCLE | fail |"));
  CHECK(tsg_check_group(eng.e, 6, "(xy)", "all", "markdown", &out) ==
        TSG_EPARSE);
  CHECK(tsg_check_group(eng.e, 3, "(12)", "all", "markdown", &out) ==
        TSG_EDATA);

  out = nullptr;
  CHECK(tsg_orbits(eng.e, "(13);(24);(56)", "markdown", &out) == TSG_OK);
  CHECK(contains(take(out), "| 1 | 2 | {123}, {134} |\n"));

  out = nullptr;
  CHECK(tsg_subgroups(eng.e, 6, "json", &out) == TSG_OK);
  {
    const auto parsed = nlohmann::ordered_json::parse(take(out));
    CHECK(parsed["rows"][0]["type"] == "S6");
    CHECK(parsed["subgroups"] == 1455);
  }
}

TEST_CASE("c api geometry and knots") {
  Engine eng;
  const std::string hopf = data_file("embeddings/hopf.json");
  const std::string k6 = data_file("embeddings/k6.json");

  char* out = nullptr;
  long long lk = 0;
  CHECK(tsg_linking_number(eng.e, hopf.c_str(), "1,2,3,4", "5,6,7,8", &out,
                           &lk) == TSG_OK);
  CHECK(take(out) == "lk({1, 2, 3, 4}, {5, 6, 7, 8}) = 1\n");
  CHECK(lk == 1);
  CHECK(tsg_linking_number(eng.e, hopf.c_str(), "1,2,3,4", "4,5,6", &out,
                           nullptr) == TSG_EDATA);
  CHECK(tsg_linking_number(eng.e, hopf.c_str(), "1,2,x", "5,6,7", &out,
                           nullptr) == TSG_EPARSE);
  CHECK(tsg_linking_number(eng.e, "{ not json", "1,2,3", "4,5,6", &out,
                           nullptr) == TSG_EPARSE);

  out = nullptr;
  int invariant = -1;
  CHECK(tsg_cg_check(eng.e, k6.c_str(), &out, &invariant) == TSG_OK);
  CHECK(invariant == 1);
  CHECK(contains(take(out), "invariant = 1\n"));

  out = nullptr;
  int good = 0;
  CHECK(tsg_cg_random(eng.e, 2, 7, &out, &good) == TSG_OK);
  CHECK(take(out) == "2/2 embeddings: invariant = 1\n");
  CHECK(good == 2);
  CHECK(tsg_cg_random(eng.e, 0, 7, &out, &good) == TSG_EDATA);

  out = nullptr;
  CHECK(tsg_bracket_report(eng.e, "O1+,U2+,O3+,U1+,O2+,U3+", 1, 1,
                           "markdown", &out) == TSG_OK);
  const std::string rep = take(out);
  CHECK(contains(rep, "| determinant | 3 |\n"));
  CHECK(contains(rep, "| equals mirror | no |\n"));
  CHECK(tsg_bracket_report(eng.e, "O1", 0, 0, "markdown", &out) ==
        TSG_EPARSE);
  CHECK(tsg_bracket_report(eng.e, "O1+,U1-", 0, 0, "markdown", &out) ==
        TSG_EDATA);
  CHECK(tsg_bracket_report(eng.e, "O1+,U1+", 0, 0, "pdf", &out) ==
        TSG_EPARSE);
}
