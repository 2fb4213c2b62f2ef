#include "tsg/rules.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace tsg {
namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << xs[i];
  }
  return os.str();
}

std::optional<RuleVerdict> congruence_check(RuleId id, int m, int modulus,
                                            const std::vector<int>& allowed) {
  int r = m % modulus;
  if (std::count(allowed.begin(), allowed.end(), r)) return std::nullopt;
  std::ostringstream os;
  os << "m=" << m << ": " << m << " mod " << modulus << " = " << r
     << ", not in {" << join_ints(allowed) << "}";
  return RuleVerdict::fail(id, os.str());
}

void require_m(int m) {
  if (m < 4)
    throw data_error("congruence conditions require m >= 4, got " +
                     std::to_string(m));
}

const std::vector<int>& a4_residues() {
  static const std::vector<int> r{0, 1, 4, 5, 8};
  return r;
}
const std::vector<int>& a5_residues() {
  static const std::vector<int> r{0, 1, 5, 20};
  return r;
}
const std::vector<int>& s4_residues() {
  static const std::vector<int> r{0, 4, 8, 12, 20};
  return r;
}

}  // namespace

std::string_view rule_id_str(RuleId id) {
  switch (id) {
    case RuleId::kCgt: return "CGT";
    case RuleId::kA4Thm: return "A4-THM";
    case RuleId::kA5Thm: return "A5-THM";
    case RuleId::kS4Thm: return "S4-THM";
    case RuleId::kLemma1Op: return "LEMMA1-OP";
    case RuleId::kLemma1Or: return "LEMMA1-OR";
    case RuleId::kLemma2: return "LEMMA2";
    case RuleId::kFourCycle: return "FOURCYCLE";
    case RuleId::kCgParity: return "CG-PARITY";
    case RuleId::kSubgroupThm: return "SUBGROUP-THM";
    case RuleId::kIndex2: return "INDEX2";
  }
  return "UNKNOWN";
}

bool congruence_a4(int m) {
  require_m(m);
  return !congruence_check(RuleId::kA4Thm, m, 12, a4_residues());
}

bool congruence_a5(int m) {
  require_m(m);
  return !congruence_check(RuleId::kA5Thm, m, 60, a5_residues());
}

bool congruence_s4(int m) {
  require_m(m);
  return !congruence_check(RuleId::kS4Thm, m, 24, s4_residues());
}

std::optional<RuleVerdict> congruence_obstruction(const std::string& iso_name,
                                                  int m) {
  require_m(m);
  if (iso_name == "A4")
    return congruence_check(RuleId::kA4Thm, m, 12, a4_residues());
  if (iso_name == "A5")
    return congruence_check(RuleId::kA5Thm, m, 60, a5_residues());
  if (iso_name == "S4")
    return congruence_check(RuleId::kS4Thm, m, 24, s4_residues());
  return std::nullopt;
}

RuleVerdict lemma1_element(const Perm& p, Orientation o) {
  if (p.degree() <= 3)
    throw data_error("the fixed-point bound applies to K_n with n > 3");
  if (p.is_identity())
    throw data_error("the fixed-point bound applies to nontrivial elements");
  int fixed = static_cast<int>(p.fixed_points().size());
  RuleId id =
      o == Orientation::kPreserving ? RuleId::kLemma1Op : RuleId::kLemma1Or;
  if (o == Orientation::kReversing) {
    if (fixed <= 4) return RuleVerdict::ok(id);
    std::ostringstream os;
    os << "element " << p.str() << " fixes " << fixed
       << " vertices; an orientation-reversing element fixes at most 4";
    return RuleVerdict::fail(id, os.str());
  }
  bool even = p.order() % 2 == 0;
  int bound = even ? 2 : 3;
  if (fixed <= bound) return RuleVerdict::ok(id);
  std::ostringstream os;
  os << "element " << p.str() << " of " << (even ? "even" : "odd") << " order "
     << p.order() << " fixes " << fixed
     << " vertices; an orientation-preserving element of "
     << (even ? "even" : "odd") << " order fixes at most " << bound;
  return RuleVerdict::fail(id, os.str());
}

RuleVerdict lemma2_element(const Perm& p) {
  int order = p.order();
  if (order % 2 != 0 || order <= 2) return RuleVerdict::ok(RuleId::kLemma2);
  auto fixed = p.fixed_points();
  if (!fixed.empty()) {
    std::ostringstream os;
    os << "element " << p.str() << " of even order " << order
       << " fixes vertex " << fixed.front();
    return RuleVerdict::fail(RuleId::kLemma2, os.str());
  }
  for (int v = 1; v <= p.degree(); ++v) {
    if (p.apply(v) > v && p.apply(p.apply(v)) == v) {
      std::ostringstream os;
      os << "element " << p.str() << " of even order " << order
         << " interchanges vertices " << v << " and " << p.apply(v);
      return RuleVerdict::fail(RuleId::kLemma2, os.str());
    }
  }
  return RuleVerdict::ok(RuleId::kLemma2);
}

RuleVerdict four_cycle_rule(const Subgroup& G, int n) {
  if (n != 6 || G.degree != 6)
    throw data_error("the 4-cycle rule is stated for K6 only");
  for (const auto& p : G.elements) {
    CycleType t = p.cycle_type();
    if (t.lengths == std::vector<int>{4} && t.fixed == 2) {
      auto fixed = p.fixed_points();
      std::ostringstream os;
      os << "element " << p.str() << " is a 4-cycle fixing vertices "
         << fixed[0] << " and " << fixed[1];
      return RuleVerdict::fail(RuleId::kFourCycle, os.str());
    }
  }
  return RuleVerdict::ok(RuleId::kFourCycle);
}

RuleVerdict cg_parity_rule(const Subgroup& G, int n) {
  if (n != 6 || G.degree != 6)
    throw data_error("the triangle-pair parity rule is stated for K6 only");
  auto orbits = triangle_pair_orbits(G);
  std::vector<int> sizes;
  bool any_odd = false;
  for (const auto& o : orbits) {
    sizes.push_back(static_cast<int>(o.size()));
    if (o.size() % 2 == 1) any_odd = true;
  }
  if (any_odd) return RuleVerdict::ok(RuleId::kCgParity);
  std::ostringstream os;
  os << "all orbits on the 10 triangle pairs have even size: "
     << join_ints(sizes);
  return RuleVerdict::fail(RuleId::kCgParity, os.str());
}

RuleVerdict cgt_rule(const Subgroup& K) {
  static const std::set<std::string> so3 = {"Z1", "Z2", "Z3", "Z4", "Z5",
                                           "Z6", "D2", "D3", "D4", "D5",
                                           "D6", "A4", "S4", "A5"};
  std::string name = iso_name(K);
  if (so3.count(name)) return RuleVerdict::ok(RuleId::kCgt);
  if (dmxdm_embedding(K).has_value()) return RuleVerdict::ok(RuleId::kCgt);
  std::ostringstream os;
  os << name
     << " is neither a finite subgroup of SO(3) (cyclic, dihedral, A4, S4, "
        "A5) nor a subgroup of D_m x D_m for odd m";
  return RuleVerdict::fail(RuleId::kCgt, os.str());
}

RuleVerdict sweep_lemma1(const Subgroup& K, Orientation o) {
  RuleId id =
      o == Orientation::kPreserving ? RuleId::kLemma1Op : RuleId::kLemma1Or;
  for (const auto& p : K.elements) {
    if (p.is_identity()) continue;
    RuleVerdict v = lemma1_element(p, o);
    if (!v.pass) return v;
  }
  return RuleVerdict::ok(id);
}

RuleVerdict sweep_lemma2(const Subgroup& K) {
  for (const auto& p : K.elements) {
    if (p.is_identity()) continue;
    RuleVerdict v = lemma2_element(p);
    if (!v.pass) return v;
  }
  return RuleVerdict::ok(RuleId::kLemma2);
}

RuleVerdict sweep_lemma1_coset(const Subgroup& G, const Subgroup& K) {
  for (const auto& p : G.elements) {
    if (K.contains(p)) continue;
    RuleVerdict v = lemma1_element(p, Orientation::kReversing);
    if (!v.pass) return v;
  }
  return RuleVerdict::ok(RuleId::kLemma1Or);
}

std::optional<RuleVerdict> tsg_plus_feasible(const Subgroup& K, int n) {
  if (n < 4 || n > 6)
    throw data_error("feasibility is evaluated for K_n with n in {4,5,6}");
  if (K.degree != n)
    throw data_error("subgroup degree " + std::to_string(K.degree) +
                     " does not match n=" + std::to_string(n));
  if (auto c = congruence_obstruction(iso_name(K), n)) return c;
  if (RuleVerdict v = sweep_lemma2(K); !v.pass) return v;
  if (RuleVerdict v = sweep_lemma1(K, Orientation::kPreserving); !v.pass)
    return v;
  if (RuleVerdict v = cgt_rule(K); !v.pass) return v;
  if (n == 6) {
    if (RuleVerdict v = four_cycle_rule(K, n); !v.pass) return v;
    if (RuleVerdict v = cg_parity_rule(K, n); !v.pass) return v;
  }
  return std::nullopt;
}

std::optional<RuleVerdict> signed_feasible(const SignedCandidate& c, int n) {
  if (c.K.degree != c.G.degree)
    throw data_error("kernel and group degrees differ");
  if (c.G.order() % c.K.order() != 0 ||
      c.G.order() / c.K.order() > 2)
    throw data_error("kernel must have index 1 or 2");
  for (const auto& p : c.K.elements)
    if (!c.G.contains(p))
      throw data_error("kernel is not contained in the group");
  if (c.K.order() == c.G.order()) return tsg_plus_feasible(c.G, n);

  if (auto v = tsg_plus_feasible(c.K, n)) return v;
  if (RuleVerdict v = sweep_lemma1_coset(c.G, c.K); !v.pass) return v;
  if (n == 6) {
    if (RuleVerdict v = four_cycle_rule(c.G, n); !v.pass) return v;
    if (RuleVerdict v = cg_parity_rule(c.G, n); !v.pass) return v;
  }
  return std::nullopt;
}

FullFeasibility full_feasible(const Subgroup& G, int n) {
  FullFeasibility out;
  out.outcomes.push_back({G, signed_feasible({G, G}, n)});
  for (const auto& K : index2_normal_subgroups(G))
    out.outcomes.push_back({K, signed_feasible({G, K}, n)});
  for (const auto& o : out.outcomes)
    if (!o.failure.has_value()) out.pass = true;
  return out;
}

namespace {

struct Factor {
  char letter;        // 'x' or 'y'
  long long exponent; // default 1
};

std::vector<Factor> parse_word(std::string_view text) {
  std::vector<Factor> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'y')
      throw data_error(std::string("unexpected character '") + c +
                       "' in relation word (expected x or y)");
    Factor f{c, 1};
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                               text[start]))))
        throw data_error("missing exponent after '^' in relation word");
      f.exponent = std::stoll(std::string(text.substr(start, i - start)));
    }
    out.push_back(f);
  }
  return out;
}

Perm eval_word(const std::vector<Factor>& word, const Perm& x, const Perm& y) {
  // Application order: the leftmost factor acts first.
  Perm acc(x.degree());
  for (const auto& f : word) {
    Perm t = (f.letter == 'x' ? x : y).power(f.exponent);
    acc = compose(t, acc);
  }
  return acc;
}

}  // namespace

std::vector<Perm> relation_search(const Perm& y, const CycleType& target,
                                  const std::string& relation) {
  int n = y.degree();
  if (n > 8) throw data_error("relation search supports degree at most 8");
  size_t eq = relation.find('=');
  if (eq == std::string::npos)
    throw data_error("relation must contain '=': " + relation);
  auto lhs = parse_word(std::string_view(relation).substr(0, eq));
  auto rhs = parse_word(std::string_view(relation).substr(eq + 1));

  std::vector<Perm> out;
  std::vector<int> imgs(n);
  std::iota(imgs.begin(), imgs.end(), 1);
  do {
    Perm x = Perm::from_images(n, imgs);
    if (!(x.cycle_type() == target)) continue;
    if (eval_word(lhs, x, y) == eval_word(rhs, x, y)) out.push_back(x);
  } while (std::next_permutation(imgs.begin(), imgs.end()));
  return out;
}

}  // namespace tsg
