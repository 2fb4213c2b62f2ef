#include "tsg/knots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tsg {

int KnotDiagram::crossing_count() const {
  std::set<int> ids;
  for (const auto& comp : components) {
    for (const auto& e : comp) ids.insert(e.id);
  }
  return static_cast<int>(ids.size());
}

void KnotDiagram::validate() const {
  struct Rec {
    int over = 0;
    int under = 0;
    int sign = 0;
  };
  std::map<int, Rec> recs;
  for (const auto& comp : components) {
    if (comp.empty()) {
      throw data_error("a component must contain at least one passage");
    }
    for (const auto& e : comp) {
      if (e.id <= 0) {
        throw data_error("crossing id must be positive; got " +
                         std::to_string(e.id));
      }
      if (e.sign != 1 && e.sign != -1) {
        throw data_error("crossing " + std::to_string(e.id) +
                         " has sign " + std::to_string(e.sign) +
                         "; expected +1 or -1");
      }
      Rec& r = recs[e.id];
      if (r.over + r.under == 0) {
        r.sign = e.sign;
      } else if (r.sign != e.sign) {
        throw data_error("crossing " + std::to_string(e.id) +
                         " has inconsistent signs");
      }
      (e.over ? r.over : r.under) += 1;
    }
  }
  for (const auto& [id, r] : recs) {
    if (r.over + r.under != 2) {
      throw data_error("crossing " + std::to_string(id) + " appears " +
                       std::to_string(r.over + r.under) +
                       " times; expected exactly twice");
    }
    if (r.over != 1 || r.under != 1) {
      throw data_error("crossing " + std::to_string(id) +
                       " must appear once over and once under");
    }
  }
}

std::string KnotDiagram::str() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += "|";
    for (std::size_t j = 0; j < components[i].size(); ++j) {
      if (j > 0) out += ",";
      const GaussEntry& e = components[i][j];
      out += (e.over ? "O" : "U");
      out += std::to_string(e.id);
      out += (e.sign > 0 ? "+" : "-");
    }
  }
  return out;
}

KnotDiagram parse_gauss(const std::string& text) {
  std::string clean;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') {
      comment = true;
    } else if (ch == '\n') {
      comment = false;
      clean += ' ';
    } else if (!comment) {
      clean += ch;
    }
  }
  const auto is_space = [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
  };
  if (std::all_of(clean.begin(), clean.end(), is_space)) {
    return KnotDiagram{};  // the 0-crossing unknot
  }

  const auto trim = [&](const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
  };
  const auto split = [](const std::string& s, char sep) {
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
  };

  KnotDiagram d;
  for (const std::string& part : split(clean, '|')) {
    if (trim(part).empty()) {
      throw parse_error("empty component in Gauss code");
    }
    std::vector<GaussEntry> comp;
    for (const std::string& raw : split(part, ',')) {
      const std::string tok = trim(raw);
      if (tok.empty()) {
        throw parse_error("empty passage in Gauss code");
      }
      if (tok[0] != 'O' && tok[0] != 'U') {
        throw parse_error("passage must start with 'O' or 'U': \"" + tok +
                          "\"");
      }
      std::size_t k = 1;
      while (k < tok.size() &&
             std::isdigit(static_cast<unsigned char>(tok[k]))) {
        ++k;
      }
      if (k == 1) {
        throw parse_error("passage needs a crossing id: \"" + tok + "\"");
      }
      if (k > 8) {
        throw parse_error("crossing id too large: \"" + tok + "\"");
      }
      if (k + 1 != tok.size() || (tok[k] != '+' && tok[k] != '-')) {
        throw parse_error("passage must end with '+' or '-': \"" + tok +
                          "\"");
      }
      const int id = std::atoi(tok.substr(1, k - 1).c_str());
      if (id <= 0) {
        throw parse_error("crossing id must be positive: \"" + tok + "\"");
      }
      comp.push_back(GaussEntry{id, tok[0] == 'O', tok[k] == '+' ? 1 : -1});
    }
    d.components.push_back(std::move(comp));
  }
  d.validate();
  return d;
}

// ---------- Laurent polynomials ----------

LaurentPoly LaurentPoly::zero() { return {}; }

LaurentPoly LaurentPoly::one() { return monomial(1, 0); }

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms[exp] = coeff;
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  const auto it = terms.find(exp);
  return it == terms.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms.empty()) {
    throw data_error("the zero polynomial has no exponents");
  }
  return terms.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms.empty()) {
    throw data_error("the zero polynomial has no exponents");
  }
  return terms.rbegin()->first;
}

LaurentPoly LaurentPoly::substituted_inverse() const {
  LaurentPoly out;
  for (const auto& [e, co] : terms) out.terms[-e] = co;
  return out;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const int e = it->first;
    const long long co = it->second;
    out += (co < 0) ? (out.empty() ? "-" : " - ")
                    : (out.empty() ? "" : " + ");
    const long long mag = co < 0 ? -co : co;
    if (e == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, co] : o.terms) {
    const long long v = out.terms[e] + co;
    if (v == 0) {
      out.terms.erase(e);
    } else {
      out.terms[e] = v;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly neg;
  for (const auto& [e, co] : o.terms) neg.terms[e] = -co;
  return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::map<int, long long> acc;
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : o.terms) {
      acc[e1 + e2] += c1 * c2;
    }
  }
  LaurentPoly out;
  for (const auto& [e, co] : acc) {
    if (co != 0) out.terms[e] = co;
  }
  return out;
}

// ---------- invariants ----------

int writhe(const KnotDiagram& d) {
  d.validate();
  std::map<int, int> signs;
  for (const auto& comp : d.components) {
    for (const auto& e : comp) signs[e.id] = e.sign;
  }
  int w = 0;
  for (const auto& [id, s] : signs) {
    (void)id;
    w += s;
  }
  return w;
}

LaurentPoly bracket(const KnotDiagram& d) {
  d.validate();
  const int c = d.crossing_count();
  if (c > kMaxBracketCrossings) {
    throw data_error("state sum supports at most " +
                     std::to_string(kMaxBracketCrossings) +
                     " crossings; got " + std::to_string(c));
  }
  if (d.components.empty()) return LaurentPoly::one();

  // Flatten passages; passage k owns half-edges 2k (in) and 2k+1 (out).
  std::vector<GaussEntry> ps;
  std::vector<int> sizes;
  for (const auto& comp : d.components) {
    sizes.push_back(static_cast<int>(comp.size()));
    ps.insert(ps.end(), comp.begin(), comp.end());
  }
  const int n = static_cast<int>(ps.size());  // = 2c after validation

  // Strand matching: out-half of each passage to in-half of the next.
  std::vector<int> m1(2 * n);
  int at = 0;
  for (const int size : sizes) {
    for (int j = 0; j < size; ++j) {
      const int a = 2 * (at + j) + 1;
      const int b = 2 * (at + (j + 1) % size);
      m1[a] = b;
      m1[b] = a;
    }
    at += size;
  }

  struct Cross {
    int over = -1, under = -1, sign = 0;
  };
  std::map<int, Cross> by_id;
  for (int k = 0; k < n; ++k) {
    Cross& r = by_id[ps[k].id];
    (ps[k].over ? r.over : r.under) = k;
    r.sign = ps[k].sign;
  }
  std::vector<Cross> cr;
  cr.reserve(by_id.size());
  for (const auto& [id, r] : by_id) {
    (void)id;
    cr.push_back(r);
  }

  // Powers of the loop value delta = -A^2 - A^-2.
  std::vector<std::map<int, long long>> dpow(2 * c + 1);
  dpow[0] = {{0, 1}};
  for (int m = 1; m <= 2 * c; ++m) {
    for (const auto& [e, co] : dpow[m - 1]) {
      dpow[m][e + 2] -= co;
      dpow[m][e - 2] -= co;
    }
  }

  const int off = 5 * c + 4;
  std::vector<long long> acc(2 * off + 1, 0);
  std::vector<int> m2(2 * n);
  std::vector<char> vis(2 * n);

  for (unsigned state = 0; state < (1u << c); ++state) {
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      const Cross& r = cr[k];
      const int oi = 2 * r.over, oo = oi + 1;
      const int ui = 2 * r.under, uo = ui + 1;
      const bool a_smoothing = ((state >> k) & 1u) == 0;
      if (a_smoothing) ++a_count;
      // Positive crossing, A-smoothing: join (over-in, under-out) and
      // (over-out, under-in); all other cases are the complement.
      if ((r.sign > 0) == a_smoothing) {
        m2[oi] = uo;
        m2[uo] = oi;
        m2[oo] = ui;
        m2[ui] = oo;
      } else {
        m2[oi] = ui;
        m2[ui] = oi;
        m2[oo] = uo;
        m2[uo] = oo;
      }
    }
    std::fill(vis.begin(), vis.end(), 0);
    int loops = 0;
    for (int h = 0; h < 2 * n; ++h) {
      if (vis[h]) continue;
      ++loops;
      int x = h;
      while (!vis[x]) {
        vis[x] = 1;
        x = m1[x];
        vis[x] = 1;
        x = m2[x];
      }
    }
    const int exp = 2 * a_count - c;
    for (const auto& [e, co] : dpow[loops - 1]) acc[off + exp + e] += co;
  }

  LaurentPoly out;
  for (int i = 0; i <= 2 * off; ++i) {
    if (acc[i] != 0) out.terms[i - off] = acc[i];
  }
  return out;
}

LaurentPoly normalized_invariant(const KnotDiagram& d) {
  const LaurentPoly b = bracket(d);
  const int w = writhe(d);
  const long long s = (w % 2 == 0) ? 1 : -1;
  LaurentPoly out;
  for (const auto& [e, co] : b.terms) out.terms[e - 3 * w] = s * co;
  return out;
}

long long determinant(const KnotDiagram& d) {
  const LaurentPoly f = normalized_invariant(d);
  long long coords[4] = {0, 0, 0, 0};
  for (const auto& [e, co] : f.terms) {
    const int m = ((e % 8) + 8) % 8;
    if (m < 4) {
      coords[m] += co;
    } else {
      coords[m - 4] -= co;
    }
  }
  if (coords[1] != 0 || coords[3] != 0) {
    throw std::logic_error("invariant evaluation produced odd powers of A");
  }
  if (coords[0] != 0 && coords[2] != 0) {
    throw data_error(
        "determinant is undefined: the evaluation mixes residue classes "
        "(the code may have no planar realization)");
  }
  const auto mag = [](long long v) { return v < 0 ? -v : v; };
  return mag(coords[0]) + mag(coords[2]);
}

int span(const LaurentPoly& p) {
  if (p.is_zero()) {
    throw data_error("span of the zero polynomial is undefined");
  }
  return p.max_exp() - p.min_exp();
}

KnotDiagram mirror(const KnotDiagram& d) {
  KnotDiagram out = d;
  for (auto& comp : out.components) {
    for (auto& e : comp) {
      e.over = !e.over;
      e.sign = -e.sign;
    }
  }
  return out;
}

KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b) {
  a.validate();
  b.validate();
  if (a.components.empty()) return b;
  if (b.components.empty()) return a;
  if (a.components.size() != 1 || b.components.size() != 1) {
    throw data_error("connected sum needs single-component diagrams");
  }
  int shift = 0;
  for (const auto& e : a.components[0]) shift = std::max(shift, e.id);
  KnotDiagram out;
  out.components.push_back(a.components[0]);
  std::vector<GaussEntry>& comp = out.components[0];
  for (GaussEntry e : b.components[0]) {
    e.id += shift;
    comp.push_back(e);
  }
  return out;
}

}  // namespace tsg
