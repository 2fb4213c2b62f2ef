#include "tsg/render.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsg/knots.hpp"
#include "tsg/spatial.hpp"

namespace tsg {

namespace {

using ojson = nlohmann::ordered_json;

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

// RFC 4180 field quoting.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ",";
    out += csv_field(fields[i]);
  }
  out += "\n";
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const std::string& c : cells) {
    out += " " + c + " |";
  }
  out += "\n";
  return out;
}

std::string md_rule_row(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += " --- |";
  out += "\n";
  return out;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
  });
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  const auto sp = [&](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
  };
  while (b < e && sp(s[b])) ++b;
  while (e > b && sp(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (true) {
    const std::size_t at = s.find(sep, from);
    if (at == std::string::npos) {
      parts.push_back(s.substr(from));
      return parts;
    }
    parts.push_back(s.substr(from, at - from));
    from = at + 1;
  }
}

/// Parse "(12); (34)(56)" into permutations of S_n; empty text means no
/// generators.  Returns the parsed list and the canonical echo string.
std::pair<std::vector<Perm>, std::string> parse_generators(
    const std::string& text, int n) {
  std::vector<Perm> gens;
  std::string echo;
  if (!is_blank(text)) {
    for (const std::string& raw : split_on(text, ';')) {
      const std::string tok = trimmed(raw);
      if (tok.empty()) {
        throw parse_error("empty generator in list: \"" + text + "\"");
      }
      const Perm p = Perm::parse(tok, n);
      gens.push_back(p);
      if (!echo.empty()) echo += "; ";
      echo += p.str();
    }
  }
  if (echo.empty()) echo = "()";
  return {std::move(gens), std::move(echo)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "markdown") return OutputFormat::kMarkdown;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw parse_error("unknown output format \"" + name +
                    "\"; expected markdown, csv, or json");
}

// ---------------------------------------------------------------------------
// classify

std::string render_classify(const ClassifyResult& r, OutputFormat f,
                            bool show_reasons) {
  const bool positive = r.mode == "positive";
  const std::string verdict_col = positive ? "Positively Realizable"
                                           : "Realizable";
  if (f == OutputFormat::kMarkdown) {
    std::string out = "# ";
    out += positive ? "Positively realizable" : "Realizable";
    out += " groups for K" + std::to_string(r.n) + "\n\n";
    std::vector<std::string> head = {"Subgroup", verdict_col};
    if (show_reasons) head.push_back("Reason");
    out += md_row(head);
    out += md_rule_row(head.size());
    for (const VerdictRow& row : r.rows) {
      std::vector<std::string> cells = {row.type, row.yes ? "Yes" : "No"};
      if (show_reasons) {
        std::string reason = row.reason();
        if (row.extra) {
          if (!reason.empty()) reason += " ";
          reason += "(absent from published table)";
        }
        cells.push_back(reason);
      }
      out += md_row(cells);
    }
    return out;
  }
  if (f == OutputFormat::kCsv) {
    std::string out = csv_row({"subgroup", "verdict", "reason", "sources",
                               "extra"});
    for (const VerdictRow& row : r.rows) {
      std::string sources;
      for (const std::string& s : row.sources) {
        if (!sources.empty()) sources += "; ";
        sources += s;
      }
      out += csv_row({row.type, row.yes ? "Yes" : "No", row.reason(), sources,
                      row.extra ? "true" : "false"});
    }
    return out;
  }
  ojson j;
  j["command"] = "classify";
  j["n"] = r.n;
  j["mode"] = r.mode;
  j["rows"] = ojson::array();
  for (const VerdictRow& row : r.rows) {
    ojson jr;
    jr["type"] = row.type;
    jr["yes"] = row.yes;
    jr["reasons"] = row.reasons;
    jr["sources"] = row.sources;
    jr["extra"] = row.extra;
    j["rows"].push_back(jr);
  }
  return json_text(j);
}

// ---------------------------------------------------------------------------
// check

CheckReport check_group(int n, const std::string& generators,
                        const std::string& rules) {
  if (n < 4 || n > 6) {
    throw data_error("rule checks apply to K_n with 4 <= n <= 6; got n = " +
                     std::to_string(n));
  }
  static const std::vector<std::string> kCheckable = {
      "A4-THM", "A5-THM", "S4-THM", "LEMMA2", "LEMMA1-OP",
      "CGT",    "FOURCYCLE", "CG-PARITY"};
  std::vector<std::string> keep;
  if (trimmed(rules) != "all") {
    for (const std::string& raw : split_on(rules, ',')) {
      const std::string tok = trimmed(raw);
      if (std::find(kCheckable.begin(), kCheckable.end(), tok) ==
          kCheckable.end()) {
        std::string valid;
        for (const std::string& v : kCheckable) {
          if (!valid.empty()) valid += ", ";
          valid += v;
        }
        throw parse_error("unknown rule id \"" + tok + "\"; expected all or " +
                          "a comma-separated list from: " + valid);
      }
      keep.push_back(tok);
    }
  }

  CheckReport rep;
  rep.n = n;
  auto [gens, echo] = parse_generators(generators, n);
  rep.generators = echo;
  const Subgroup K = closure(n, std::move(gens));
  rep.type = iso_name(K);
  rep.order = K.order();

  std::vector<CheckLine> lines;
  const auto add = [&](RuleId id, const RuleVerdict& v) {
    lines.push_back(
        CheckLine{std::string(rule_id_str(id)), v.pass, v.evidence});
  };
  if (rep.type == "A4" || rep.type == "A5" || rep.type == "S4") {
    const RuleId id = rep.type == "A4"   ? RuleId::kA4Thm
                      : rep.type == "A5" ? RuleId::kA5Thm
                                         : RuleId::kS4Thm;
    if (auto obs = congruence_obstruction(rep.type, n)) {
      add(id, *obs);
    } else {
      add(id, RuleVerdict::ok(id));
    }
  }
  add(RuleId::kLemma2, sweep_lemma2(K));
  add(RuleId::kLemma1Op, sweep_lemma1(K, Orientation::kPreserving));
  add(RuleId::kCgt, cgt_rule(K));
  if (n == 6) {
    add(RuleId::kFourCycle, four_cycle_rule(K, 6));
    add(RuleId::kCgParity, cg_parity_rule(K, 6));
  }

  rep.all_pass = true;
  for (const CheckLine& line : lines) {
    if (!keep.empty() &&
        std::find(keep.begin(), keep.end(), line.rule) == keep.end()) {
      continue;
    }
    rep.lines.push_back(line);
    if (!line.pass) rep.all_pass = false;
  }
  return rep;
}

std::string render_check(const CheckReport& r, OutputFormat f) {
  if (f == OutputFormat::kMarkdown) {
    std::string out = "# Rule check for K" + std::to_string(r.n) + "\n\n";
    out += "Generators: " + r.generators + "\n";
    out += "Type: " + r.type + ", order " + std::to_string(r.order) + "\n\n";
    out += md_row({"Rule", "Verdict", "Evidence"});
    out += md_rule_row(3);
    for (const CheckLine& line : r.lines) {
      out += md_row({line.rule, line.pass ? "pass" : "fail", line.evidence});
    }
    out += "\nAll checked rules pass: " + yes_no(r.all_pass) + "\n";
    return out;
  }
  if (f == OutputFormat::kCsv) {
    std::string out = csv_row({"rule", "pass", "evidence"});
    for (const CheckLine& line : r.lines) {
      out += csv_row({line.rule, line.pass ? "true" : "false", line.evidence});
    }
    return out;
  }
  ojson j;
  j["command"] = "check";
  j["n"] = r.n;
  j["generators"] = r.generators;
  j["type"] = r.type;
  j["order"] = r.order;
  j["rules"] = ojson::array();
  for (const CheckLine& line : r.lines) {
    ojson jl;
    jl["rule"] = line.rule;
    jl["pass"] = line.pass;
    jl["evidence"] = line.evidence;
    j["rules"].push_back(jl);
  }
  j["all_pass"] = r.all_pass;
  return json_text(j);
}

// ---------------------------------------------------------------------------
// orbits

OrbitReport orbit_report(const std::string& generators) {
  OrbitReport rep;
  auto [gens, echo] = parse_generators(generators, 6);
  rep.generators = echo;
  const Subgroup G = closure(6, std::move(gens));
  rep.type = iso_name(G);
  rep.order = G.order();
  rep.all_even = true;
  for (const std::vector<Triple>& orbit : triangle_pair_orbits(G)) {
    std::vector<std::string> names;
    names.reserve(orbit.size());
    for (const Triple& t : orbit) names.push_back(triple_str(t));
    if (names.size() % 2 != 0) rep.all_even = false;
    rep.orbits.push_back(std::move(names));
  }
  return rep;
}

std::string render_orbits(const OrbitReport& r, OutputFormat f) {
  const auto joined = [](const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& n : names) {
      if (!out.empty()) out += ", ";
      out += n;
    }
    return out;
  };
  if (f == OutputFormat::kMarkdown) {
    std::string out = "# Triangle-pair orbits for K6\n\n";
    out += "Generators: " + r.generators + "\n";
    out += "Type: " + r.type + ", order " + std::to_string(r.order) + "\n\n";
    out += md_row({"Orbit", "Size", "Pairs"});
    out += md_rule_row(3);
    for (std::size_t i = 0; i < r.orbits.size(); ++i) {
      out += md_row({std::to_string(i + 1), std::to_string(r.orbits[i].size()),
                     joined(r.orbits[i])});
    }
    out += "\nAll orbit sizes even: " + yes_no(r.all_even) + "\n";
    return out;
  }
  if (f == OutputFormat::kCsv) {
    std::string out = csv_row({"orbit", "size", "pairs"});
    for (std::size_t i = 0; i < r.orbits.size(); ++i) {
      out += csv_row({std::to_string(i + 1), std::to_string(r.orbits[i].size()),
                      joined(r.orbits[i])});
    }
    return out;
  }
  ojson j;
  j["command"] = "orbits";
  j["n"] = 6;
  j["generators"] = r.generators;
  j["type"] = r.type;
  j["order"] = r.order;
  j["orbits"] = r.orbits;
  ojson sizes = ojson::array();
  for (const auto& o : r.orbits) sizes.push_back(o.size());
  j["sizes"] = sizes;
  j["all_even"] = r.all_even;
  return json_text(j);
}

// ---------------------------------------------------------------------------
// subgroups

SubgroupReport subgroup_report(int n) {
  SubgroupReport rep;
  rep.n = n;
  std::map<std::string, SubgroupRow> by;
  const std::vector<SubgroupClass>& classes = subgroup_classes(n);
  for (const SubgroupClass& c : classes) {
    SubgroupRow& row = by[c.name];
    row.type = c.name;
    row.order = c.rep.order();
    row.classes += 1;
    row.count += c.class_size;
  }
  for (const auto& [name, row] : by) {
    rep.rows.push_back(row);
    if (name != "Z1") rep.nontrivial_types += 1;
  }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const SubgroupRow& a, const SubgroupRow& b) {
              if (a.order != b.order) return a.order > b.order;
              return a.type < b.type;
            });
  rep.classes_total = static_cast<long>(classes.size());
  rep.subgroups_total = subgroup_count(n);
  return rep;
}

std::string render_subgroups(const SubgroupReport& r, OutputFormat f) {
  if (f == OutputFormat::kMarkdown) {
    std::string out =
        "# Subgroups of S" + std::to_string(r.n) + " up to conjugacy\n\n";
    out += md_row({"Type", "Order", "Classes", "Subgroups"});
    out += md_rule_row(4);
    for (const SubgroupRow& row : r.rows) {
      out += md_row({row.type, std::to_string(row.order),
                     std::to_string(row.classes), std::to_string(row.count)});
    }
    out += "\n" + std::to_string(r.classes_total) + " conjugacy classes; " +
           std::to_string(r.subgroups_total) + " subgroups; " +
           std::to_string(r.nontrivial_types) +
           " nontrivial isomorphism types.\n";
    return out;
  }
  if (f == OutputFormat::kCsv) {
    std::string out = csv_row({"type", "order", "classes", "subgroups"});
    for (const SubgroupRow& row : r.rows) {
      out += csv_row({row.type, std::to_string(row.order),
                      std::to_string(row.classes), std::to_string(row.count)});
    }
    return out;
  }
  ojson j;
  j["command"] = "subgroups";
  j["n"] = r.n;
  j["rows"] = ojson::array();
  for (const SubgroupRow& row : r.rows) {
    ojson jr;
    jr["type"] = row.type;
    jr["order"] = row.order;
    jr["classes"] = row.classes;
    jr["subgroups"] = row.count;
    j["rows"].push_back(jr);
  }
  j["classes"] = r.classes_total;
  j["subgroups"] = r.subgroups_total;
  j["nontrivial_types"] = r.nontrivial_types;
  return json_text(j);
}

// ---------------------------------------------------------------------------
// geometric reports

namespace {

std::string cycle_str(const std::vector<int>& cycle) {
  std::string out = "{";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(cycle[i]);
  }
  out += "}";
  return out;
}

}  // namespace

std::string linking_report(const std::string& embedding_json,
                           const std::vector<int>& cycle_a,
                           const std::vector<int>& cycle_b) {
  const SpatialGraph g = spatial_from_json(embedding_json);
  const int lk = linking_number(g, cycle_a, cycle_b);
  return "lk(" + cycle_str(cycle_a) + ", " + cycle_str(cycle_b) +
         ") = " + std::to_string(lk) + "\n";
}

std::string cg_file_report(const std::string& embedding_json) {
  const SpatialGraph g = spatial_from_json(embedding_json);
  const int invariant = conway_gordon(g);  // validates n = 6, completeness
  std::string out;
  for (int a = 2; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      const Triple t{1, a, b};
      std::vector<int> first = {1, a, b};
      std::vector<int> second;
      for (int v = 2; v <= 6; ++v) {
        if (v != a && v != b) second.push_back(v);
      }
      const int lk = linking_number(g, first, second);
      out += "pair " + triple_str(t) + ": lk = " + std::to_string(lk) + "\n";
    }
  }
  out += "invariant = " + std::to_string(invariant) + "\n";
  return out;
}

std::string cg_random_report(int count, std::uint64_t seed) {
  if (count < 1 || count > 10000) {
    throw data_error("embedding count must be between 1 and 10000; got " +
                     std::to_string(count));
  }
  int good = 0;
  for (int i = 0; i < count; ++i) {
    const SpatialGraph g =
        random_embedding(6, seed + static_cast<std::uint64_t>(i));
    if (conway_gordon(g) == 1) ++good;
  }
  return std::to_string(good) + "/" + std::to_string(count) +
         " embeddings: invariant = 1\n";
}

// ---------------------------------------------------------------------------
// bracket

BracketReport bracket_report(const std::string& gauss_text, bool with_det,
                             bool with_mirror) {
  const KnotDiagram d = parse_gauss(gauss_text);
  BracketReport rep;
  rep.code = d.str();
  rep.crossings = d.crossing_count();
  rep.num_components = static_cast<int>(d.components.size());
  rep.writhe = writhe(d);
  rep.bracket = bracket(d).str();
  const LaurentPoly f = normalized_invariant(d);
  rep.invariant = f.str();
  rep.span = span(f);
  if (with_det) rep.determinant = determinant(d);
  if (with_mirror) {
    const LaurentPoly fm = normalized_invariant(mirror(d));
    rep.mirror_invariant = fm.str();
    rep.equals_mirror = (fm == f);
  }
  return rep;
}

std::string render_bracket(const BracketReport& r, OutputFormat f) {
  if (f == OutputFormat::kMarkdown) {
    std::string out = "# Knot invariants\n\n";
    out += "Code: " + r.code + "\n";
    out += "Crossings: " + std::to_string(r.crossings) +
           "; components: " + std::to_string(r.num_components) +
           "; writhe: " + std::to_string(r.writhe) + "\n\n";
    out += md_row({"Quantity", "Value"});
    out += md_rule_row(2);
    out += md_row({"bracket", r.bracket});
    out += md_row({"normalized invariant", r.invariant});
    out += md_row({"span", std::to_string(r.span)});
    if (r.determinant) {
      out += md_row({"determinant", std::to_string(*r.determinant)});
    }
    if (r.mirror_invariant) {
      out += md_row({"mirror invariant", *r.mirror_invariant});
      out += md_row({"equals mirror", yes_no(*r.equals_mirror)});
    }
    return out;
  }
  if (f == OutputFormat::kCsv) {
    std::string out = csv_row({"quantity", "value"});
    out += csv_row({"code", r.code});
    out += csv_row({"crossings", std::to_string(r.crossings)});
    out += csv_row({"components", std::to_string(r.num_components)});
    out += csv_row({"writhe", std::to_string(r.writhe)});
    out += csv_row({"bracket", r.bracket});
    out += csv_row({"normalized invariant", r.invariant});
    out += csv_row({"span", std::to_string(r.span)});
    if (r.determinant) {
      out += csv_row({"determinant", std::to_string(*r.determinant)});
    }
    if (r.mirror_invariant) {
      out += csv_row({"mirror invariant", *r.mirror_invariant});
      out += csv_row({"equals mirror", yes_no(*r.equals_mirror)});
    }
    return out;
  }
  ojson j;
  j["command"] = "bracket";
  j["code"] = r.code;
  j["crossings"] = r.crossings;
  j["components"] = r.num_components;
  j["writhe"] = r.writhe;
  j["bracket"] = r.bracket;
  j["invariant"] = r.invariant;
  j["span"] = r.span;
  if (r.determinant) j["determinant"] = *r.determinant;
  if (r.mirror_invariant) {
    j["mirror_invariant"] = *r.mirror_invariant;
    j["equals_mirror"] = *r.equals_mirror;
  }
  return json_text(j);
}

}  // namespace tsg
