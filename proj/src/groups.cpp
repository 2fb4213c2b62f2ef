#include "tsg/groups.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tsg {
namespace {

constexpr std::array<int, 13> kFactorial = {1,    1,    2,     6,     24,
                                            120,  720,  5040,  40320, 362880,
                                            3628800, 39916800, 479001600};

// ---------------------------------------------------------------------------
// Multiplication table of the full symmetric group S_degree, with elements
// indexed by lexicographic rank of their image lists (identity is index 0).
// Built once per degree; degrees above 6 would need 5040+ elements and are
// rejected (the lattice machinery is only ever used for n <= 6).
// ---------------------------------------------------------------------------

struct Bits {
  std::array<std::uint64_t, 12> w{};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void operator|=(const Bits& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  bool operator==(const Bits&) const = default;
  auto operator<=>(const Bits&) const = default;
};

struct BitsHash {
  size_t operator()(const Bits& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : b.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

struct SymTable {
  int degree = 1;
  int N = 1;
  std::vector<Perm> elems;
  std::vector<std::uint16_t> mult;  // N*N
  std::vector<std::uint16_t> inv;
  std::vector<std::uint8_t> odd;  // 1 for odd permutations
  std::vector<int> elt_order;
  Bits full_bits, alt_bits;

  std::uint16_t mul(int a, int b) const { return mult[a * N + b]; }

  int rank(const Perm& p) const {
    // Lexicographic rank via the factorial number system.
    int n = degree;
    int images[kMaxDegree];
    for (int i = 0; i < n; ++i) images[i] = p.apply(i + 1);
    int r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (images[j] < images[i]) ++smaller;
      r += smaller * kFactorial[n - 1 - i];
    }
    return r;
  }

  explicit SymTable(int deg) : degree(deg) {
    if (deg < 1 || deg > 6)
      throw data_error("subgroup lattice machinery supports degree 1..6, got " +
                       std::to_string(deg));
    N = kFactorial[deg];
    std::vector<int> imgs(deg);
    std::iota(imgs.begin(), imgs.end(), 1);
    elems.reserve(N);
    do {
      elems.push_back(Perm::from_images(deg, imgs));
    } while (std::next_permutation(imgs.begin(), imgs.end()));
    mult.resize(static_cast<size_t>(N) * N);
    inv.resize(N);
    odd.resize(N);
    elt_order.resize(N);
    for (int a = 0; a < N; ++a) {
      inv[a] = static_cast<std::uint16_t>(rank(elems[a].inverse()));
      elt_order[a] = elems[a].order();
      int transpositions = 0;
      for (int len : elems[a].cycle_type().lengths) transpositions += len - 1;
      odd[a] = static_cast<std::uint8_t>(transpositions & 1);
      full_bits.set(a);
      if (!(transpositions & 1)) alt_bits.set(a);
    }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        mult[a * N + b] =
            static_cast<std::uint16_t>(rank(compose(elems[a], elems[b])));
  }

  static const SymTable& of(int degree) {
    static std::array<std::unique_ptr<SymTable>, 7> cache;
    if (degree < 1 || degree > 6)
      throw data_error("degree " + std::to_string(degree) + " unsupported");
    if (!cache[degree]) cache[degree] = std::make_unique<SymTable>(degree);
    return *cache[degree];
  }
};

std::vector<std::uint16_t> bits_members(const Bits& b, int N) {
  std::vector<std::uint16_t> out;
  for (int i = 0; i < N; ++i)
    if (b.test(i)) out.push_back(static_cast<std::uint16_t>(i));
  return out;
}

// Closure of a seed set (identity implied) under multiplication, with
// short-circuits: once more than half of S_n is present the closure is S_n,
// and an all-even seed exceeding half of A_n closes to A_n.
Bits closure_bits(const SymTable& T, const std::vector<std::uint16_t>& seed) {
  Bits bits;
  std::vector<std::uint16_t> mem;
  bits.set(0);
  mem.push_back(0);
  bool all_even = true;
  for (auto s : seed) {
    if (T.odd[s]) all_even = false;
    if (!bits.test(s)) {
      bits.set(s);
      mem.push_back(s);
    }
  }
  int half = T.N / 2, quarter = T.N / 4;
  for (size_t i = 0; i < mem.size(); ++i) {
    int x = mem[i];
    size_t snapshot = mem.size();
    for (size_t j = 0; j < snapshot; ++j) {
      int y = mem[j];
      for (int z : {static_cast<int>(T.mul(x, y)), static_cast<int>(T.mul(y, x))}) {
        if (!bits.test(z)) {
          bits.set(z);
          mem.push_back(static_cast<std::uint16_t>(z));
        }
      }
    }
    if (static_cast<int>(mem.size()) > half) return T.full_bits;
    if (all_even && static_cast<int>(mem.size()) > quarter && T.N >= 4)
      return T.alt_bits;
  }
  return bits;
}

Bits conj_bits(const SymTable& T, const std::vector<std::uint16_t>& members,
               int c) {
  Bits out;
  int ci = T.inv[c];
  for (auto x : members) out.set(T.mul(T.mul(c, x), ci));
  return out;
}

Subgroup subgroup_from_bits(const SymTable& T, const Bits& b) {
  Subgroup g;
  g.degree = T.degree;
  for (auto i : bits_members(b, T.N)) g.elements.push_back(T.elems[i]);
  // elems is lex-sorted by rank, so elements come out sorted.
  return g;
}

// ---------------------------------------------------------------------------
// Abstract finite groups (multiplication tables) for isomorphism and
// monomorphism searches.
// ---------------------------------------------------------------------------

struct FiniteGroup {
  int n = 1;
  std::vector<int> mult;  // n*n
  std::vector<int> elt_order;
  int mul(int a, int b) const { return mult[a * n + b]; }
};

FiniteGroup to_finite_group(const Subgroup& g) {
  FiniteGroup f;
  f.n = g.order();
  f.mult.resize(static_cast<size_t>(f.n) * f.n);
  f.elt_order.resize(f.n);
  for (int a = 0; a < f.n; ++a) {
    f.elt_order[a] = g.elements[a].order();
    for (int b = 0; b < f.n; ++b) {
      Perm p = compose(g.elements[a], g.elements[b]);
      auto it = std::lower_bound(g.elements.begin(), g.elements.end(), p);
      f.mult[a * f.n + b] = static_cast<int>(it - g.elements.begin());
    }
  }
  return f;
}

// D_m as pairs (a, s) with (a,s)*(b,t) = (a + (-1)^s b mod m, s xor t).
FiniteGroup dihedral_product(int m) {
  FiniteGroup f;
  int dm = 2 * m;
  f.n = dm * dm;
  f.mult.resize(static_cast<size_t>(f.n) * f.n);
  f.elt_order.assign(f.n, 0);
  auto dmul = [m](int x, int y) {
    int a = x >> 1, s = x & 1, b = y >> 1, t = y & 1;
    int c = s ? (a - b + m) % m : (a + b) % m;
    return c * 2 + (s ^ t);
  };
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y) {
      int x1 = x / dm, x2 = x % dm, y1 = y / dm, y2 = y % dm;
      f.mult[x * f.n + y] = dmul(x1, y1) * dm + dmul(x2, y2);
    }
  for (int x = 0; x < f.n; ++x) {
    int e = x, o = 1;
    while (e != 0) {
      e = f.mul(e, x);
      ++o;
    }
    f.elt_order[x] = o;
  }
  return f;
}

// Does mapping gens[i] -> images[i] (i < placed) extend to an injective
// homomorphism on the subgroup those generators span?  Close the pair set
// {(g_i, h_i)} in A x B: the map is a well-defined homomorphism iff the
// closure is the graph of a function, and injective iff no pair (a, 0) with
// a != 0 appears.  With require_full, the span must be all of A.
bool pairs_consistent(const FiniteGroup& A, const FiniteGroup& B,
                      const std::vector<int>& gens,
                      const std::vector<int>& images, size_t placed,
                      bool require_full) {
  std::vector<int> image_of(A.n, -1);
  image_of[0] = 0;
  std::vector<int> mem{0};
  for (size_t i = 0; i < placed; ++i) {
    int a = gens[i], b = images[i];
    if (a != 0 && b == 0) return false;
    if (image_of[a] == -1) {
      image_of[a] = b;
      mem.push_back(a);
    } else if (image_of[a] != b) {
      return false;
    }
  }
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = 0; j < mem.size(); ++j) {
      int a = A.mul(mem[i], mem[j]);
      int b = B.mul(image_of[mem[i]], image_of[mem[j]]);
      if (image_of[a] == -1) {
        image_of[a] = b;
        mem.push_back(a);
      } else if (image_of[a] != b) {
        return false;
      }
      if (a != 0 && b == 0) return false;  // nontrivial kernel
    }
  }
  return !require_full || static_cast<int>(mem.size()) == A.n;
}

// Greedy generating sequence for a FiniteGroup: repeatedly append the first
// element outside the current closure.
std::vector<int> finite_generators(const FiniteGroup& A) {
  std::vector<int> gens;
  std::vector<char> in(A.n, 0);
  in[0] = 1;
  int covered = 1;
  while (covered < A.n) {
    int pick = -1;
    for (int x = 1; x < A.n; ++x)
      if (!in[x]) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    // close
    std::vector<int> mem;
    for (int x = 0; x < A.n; ++x)
      if (in[x]) mem.push_back(x);
    in[pick] = 1;
    mem.push_back(pick);
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = 0; j < mem.size(); ++j) {
        int z = A.mul(mem[i], mem[j]);
        if (!in[z]) {
          in[z] = 1;
          mem.push_back(z);
        }
      }
    covered = static_cast<int>(mem.size());
  }
  return gens;
}

bool mono_search(const FiniteGroup& A, const FiniteGroup& B,
                 const std::vector<int>& gens,
                 const std::vector<std::vector<int>>& cand,
                 std::vector<int>& images, size_t k) {
  if (!pairs_consistent(A, B, gens, images, k, k == gens.size())) return false;
  if (k == gens.size()) return true;
  for (int b : cand[k]) {
    images[k] = b;
    if (mono_search(A, B, gens, cand, images, k + 1)) return true;
  }
  return false;
}

bool mono_exists(const FiniteGroup& A, const FiniteGroup& B) {
  if (B.n % A.n != 0) return false;
  std::vector<int> gens = finite_generators(A);
  // Candidate images per generator: elements of B of equal order.
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    for (int b = 0; b < B.n; ++b)
      if (B.elt_order[b] == A.elt_order[gens[i]]) cand[i].push_back(b);
    if (cand[i].empty()) return false;
  }
  std::vector<int> images(gens.size());
  return mono_search(A, B, gens, cand, images, 0);
}

// ---------------------------------------------------------------------------
// Reference constructions for the closed list of isomorphism-type names.
// ---------------------------------------------------------------------------

struct RefEntry {
  std::string name;
  Subgroup group;
  Fingerprint fp;
};

std::vector<RefEntry> build_reference_table();

const std::vector<RefEntry>& reference_table() {
  static const std::vector<RefEntry> table = build_reference_table();
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

bool Subgroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

Subgroup closure(int degree, std::vector<Perm> generators) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw data_error("generator degree mismatch: expected " +
                       std::to_string(degree));
  if (degree <= 6) {
    const SymTable& T = SymTable::of(degree);
    std::vector<std::uint16_t> seed;
    for (const auto& g : generators)
      seed.push_back(static_cast<std::uint16_t>(T.rank(g)));
    Subgroup out = subgroup_from_bits(T, closure_bits(T, seed));
    out.generators = std::move(generators);
    return out;
  }
  // Generic path for degrees 7..12 (no lattice support, closure only).
  std::vector<Perm> mem{Perm(degree)};
  for (const auto& g : generators)
    if (!std::count(mem.begin(), mem.end(), g)) mem.push_back(g);
  for (size_t i = 0; i < mem.size(); ++i) {
    size_t snapshot = mem.size();
    for (size_t j = 0; j < snapshot; ++j) {
      for (const Perm& z : {compose(mem[i], mem[j]), compose(mem[j], mem[i])}) {
        if (!std::count(mem.begin(), mem.end(), z)) mem.push_back(z);
        if (static_cast<int>(mem.size()) > kFactorial[degree])
          throw data_error("closure exceeded degree! bound");
      }
    }
  }
  std::sort(mem.begin(), mem.end());
  Subgroup out;
  out.degree = degree;
  out.elements = std::move(mem);
  out.generators = std::move(generators);
  return out;
}

Subgroup symmetric_group(int degree) {
  const SymTable& T = SymTable::of(degree);
  Subgroup g = subgroup_from_bits(T, T.full_bits);
  g.generators = small_generating_set(g);
  return g;
}

std::vector<Perm> small_generating_set(const Subgroup& G) {
  std::vector<Perm> gens;
  Subgroup cur = closure(G.degree, {});
  while (cur.order() < G.order()) {
    for (const auto& p : G.elements) {
      if (!cur.contains(p)) {
        gens.push_back(p);
        break;
      }
    }
    cur = closure(G.degree, gens);
  }
  return gens;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " orders{";
  for (size_t i = 0; i < order_histogram.size(); ++i) {
    if (i) os << ',';
    os << order_histogram[i].first << ':' << order_histogram[i].second;
  }
  os << "} abelian=" << (abelian ? 1 : 0) << " center=" << center_order
     << " derived=" << derived_order << " exponent=" << exponent;
  return os.str();
}

Fingerprint fingerprint(const Subgroup& G) {
  Fingerprint fp;
  fp.order = G.order();
  std::map<int, int> hist;
  long long expo = 1;
  for (const auto& p : G.elements) {
    int o = p.order();
    ++hist[o];
    expo = std::lcm(expo, static_cast<long long>(o));
  }
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.exponent = static_cast<int>(expo);
  fp.abelian = true;
  for (const auto& a : G.elements) {
    for (const auto& b : G.elements) {
      if (compose(a, b) != compose(b, a)) {
        fp.abelian = false;
        break;
      }
    }
    if (!fp.abelian) break;
  }
  int center = 0;
  for (const auto& a : G.elements) {
    bool central = true;
    for (const auto& b : G.elements)
      if (compose(a, b) != compose(b, a)) {
        central = false;
        break;
      }
    if (central) ++center;
  }
  fp.center_order = center;
  std::vector<Perm> comms;
  for (const auto& a : G.elements)
    for (const auto& b : G.elements) {
      Perm c = compose(compose(a, b), compose(a.inverse(), b.inverse()));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  fp.derived_order = closure(G.degree, comms).order();
  return fp;
}

namespace {

std::vector<RefEntry> build_reference_table() {
  struct Spec {
    const char* name;
    const char* gens;
    int degree;
    int order;
  };
  const Spec specs[] = {
      {"Z1", "", 1, 1},
      {"Z2", "(12)", 2, 2},
      {"Z3", "(123)", 3, 3},
      {"Z4", "(1234)", 4, 4},
      {"Z5", "(12345)", 5, 5},
      {"Z6", "(123456)", 6, 6},
      {"D2", "(12);(34)", 4, 4},
      {"D3", "(123);(12)", 3, 6},
      {"D4", "(1234);(13)", 4, 8},
      {"D5", "(12345);(25)(34)", 5, 10},
      {"D6", "(123456);(26)(35)", 6, 12},
      {"A4", "(123);(12)(34)", 4, 12},
      {"A5", "(12345);(123)", 5, 60},
      {"A6", "(123);(23456)", 6, 360},
      {"S4", "(1234);(12)", 4, 24},
      {"S5", "(12345);(12)", 5, 120},
      {"S6", "(123456);(12)", 6, 720},
      {"Z4xZ2", "(1234);(56)", 6, 8},
      {"Z2xZ2xZ2", "(12);(34);(56)", 6, 8},
      {"Z3xZ3", "(123);(456)", 6, 9},
      {"D3xZ3", "(123);(12);(456)", 6, 18},
      {"(Z3xZ3):Z2", "(123);(456);(12)(45)", 6, 18},
      {"(Z3xZ3):Z4", "(123)(456);(123)(465);(14)(2536)", 6, 36},
      {"Z5:Z4", "(12345);(2431)", 5, 20},
      {"D3xD3", "(123);(12);(456);(45)", 6, 36},
      {"D4xZ2", "(1234);(13);(56)", 6, 16},
      {"A4xZ2", "(123);(12)(34);(56)", 6, 24},
      {"S4xZ2", "(1234);(12);(56)", 6, 48},
      {"S2[S3]", "(123);(12);(456);(45);(14)(25)(36)", 6, 72},
  };
  std::vector<RefEntry> table;
  for (const auto& s : specs) {
    std::vector<Perm> gens;
    std::string text = s.gens;
    size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
      size_t semi = text.find(';', pos);
      std::string piece = text.substr(pos, semi == std::string::npos
                                               ? std::string::npos
                                               : semi - pos);
      if (!piece.empty()) gens.push_back(Perm::parse(piece, s.degree));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    RefEntry e;
    e.name = s.name;
    e.group = closure(s.degree, gens);
    if (e.group.order() != s.order)
      throw std::logic_error(std::string("reference group ") + s.name +
                             " has order " + std::to_string(e.group.order()) +
                             ", expected " + std::to_string(s.order));
    e.fp = fingerprint(e.group);
    table.push_back(std::move(e));
  }
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = i + 1; j < table.size(); ++j)
      if (table[i].fp == table[j].fp)
        throw std::logic_error("reference fingerprints collide: " +
                               table[i].name + " vs " + table[j].name);
  return table;
}

}  // namespace

std::string iso_name(const Subgroup& G) {
  Fingerprint fp = fingerprint(G);
  for (const auto& e : reference_table())
    if (e.fp == fp) return e.name;
  return "Unnamed(order=" + std::to_string(fp.order) + ", fingerprint=" +
         fp.str() + ")";
}

bool is_isomorphic(const Subgroup& A, const Subgroup& B) {
  if (A.order() != B.order()) return false;
  if (fingerprint(A) != fingerprint(B)) return false;
  FiniteGroup fa = to_finite_group(A);
  FiniteGroup fb = to_finite_group(B);
  return mono_exists(fa, fb);  // equal orders: mono == iso
}

const std::vector<SubgroupClass>& subgroup_classes(int degree) {
  static std::array<std::unique_ptr<std::vector<SubgroupClass>>, 7> cache;
  if (degree < 1 || degree > 6)
    throw data_error("subgroup_classes: degree " + std::to_string(degree) +
                     " unsupported");
  if (cache[degree]) return *cache[degree];

  const SymTable& T = SymTable::of(degree);
  struct Rec {
    Bits form;
    std::vector<std::uint16_t> members;
    long class_size;
  };
  std::vector<Rec> recs;
  std::unordered_map<Bits, int, BitsHash> by_form;  // any conjugate form -> class

  auto register_class = [&](const Bits& K) {
    auto it = by_form.find(K);
    if (it != by_form.end()) return -1;
    auto members = bits_members(K, T.N);
    // Canonicalize across all conjugates, registering every conjugate form so
    // later closures resolve by exact lookup.  The class's stored form is the
    // minimal conjugate, making class order independent of discovery order.
    int idx = static_cast<int>(recs.size());
    long stabilizer = 0;
    Bits min_form = K;
    for (int c = 0; c < T.N; ++c) {
      Bits KC = conj_bits(T, members, c);
      if (KC == K) ++stabilizer;
      if (KC < min_form) min_form = KC;
      by_form.emplace(KC, idx);
    }
    Rec r;
    r.form = min_form;
    r.members = bits_members(min_form, T.N);
    r.class_size = T.N / stabilizer;
    recs.push_back(std::move(r));
    return idx;
  };

  Bits triv;
  triv.set(0);
  register_class(triv);
  for (size_t qi = 0; qi < recs.size(); ++qi) {
    Bits base = recs[qi].form;
    std::vector<std::uint16_t> members = recs[qi].members;
    Bits covered = base;
    for (int g = 0; g < T.N; ++g) {
      if (covered.test(g)) continue;
      std::vector<std::uint16_t> seed = members;
      seed.push_back(static_cast<std::uint16_t>(g));
      register_class(closure_bits(T, seed));
      for (auto h : members)
        covered.set(T.mul(g, h));
    }
  }

  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.form < b.form;
  });

  auto out = std::make_unique<std::vector<SubgroupClass>>();
  for (const auto& r : recs) {
    SubgroupClass sc;
    sc.rep = subgroup_from_bits(T, r.form);
    sc.rep.generators = small_generating_set(sc.rep);
    sc.class_size = r.class_size;
    sc.name = iso_name(sc.rep);
    out->push_back(std::move(sc));
  }
  cache[degree] = std::move(out);
  return *cache[degree];
}

long subgroup_count(int degree) {
  long total = 0;
  for (const auto& c : subgroup_classes(degree)) total += c.class_size;
  return total;
}

std::vector<Subgroup> subgroups_of(const Subgroup& G) {
  const SymTable& T = SymTable::of(G.degree);
  struct Rec {
    Bits form;
    std::vector<std::uint16_t> members;
  };
  std::vector<Rec> recs;
  std::unordered_map<Bits, int, BitsHash> seen;
  std::vector<std::uint16_t> gmem;
  for (const auto& p : G.elements)
    gmem.push_back(static_cast<std::uint16_t>(T.rank(p)));

  Bits triv;
  triv.set(0);
  recs.push_back({triv, {0}});
  seen.emplace(triv, 0);
  for (size_t qi = 0; qi < recs.size(); ++qi) {
    Bits base = recs[qi].form;
    std::vector<std::uint16_t> members = recs[qi].members;
    Bits covered = base;
    for (auto g : gmem) {
      if (covered.test(g)) continue;
      std::vector<std::uint16_t> seed = members;
      seed.push_back(g);
      Bits K = closure_bits(T, seed);
      if (!seen.count(K)) {
        seen.emplace(K, static_cast<int>(recs.size()));
        recs.push_back({K, bits_members(K, T.N)});
      }
      for (auto h : members)
        covered.set(T.mul(g, h));
    }
  }
  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.form < b.form;
  });
  std::vector<Subgroup> out;
  for (const auto& r : recs) out.push_back(subgroup_from_bits(T, r.form));
  return out;
}

std::vector<Subgroup> index2_normal_subgroups(const Subgroup& G) {
  // K0 = closure of all squares and commutators; G/K0 is the largest
  // elementary abelian 2-quotient, and index-2 subgroups are the kernels of
  // the nonzero functionals on it.
  std::vector<Perm> seed;
  for (const auto& a : G.elements) seed.push_back(compose(a, a));
  for (const auto& a : G.elements)
    for (const auto& b : G.elements)
      seed.push_back(compose(compose(a, b), compose(a.inverse(), b.inverse())));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  Subgroup K0 = closure(G.degree, seed);
  int index = G.order() / K0.order();
  if (index == 1) return {};

  // Coset space of K0 in G forms a vector space over F2.  Assign coordinates
  // by BFS over coset representatives.
  std::vector<Perm> reps;  // rep of each coset, reps[0] = identity coset
  auto coset_index = [&](const Perm& x) {
    for (size_t r = 0; r < reps.size(); ++r)
      if (K0.contains(compose(x, reps[r].inverse()))) return static_cast<int>(r);
    return -1;
  };
  reps.push_back(Perm(G.degree));
  std::vector<std::uint32_t> coord{0};
  std::uint32_t next_basis = 1;
  for (const auto& x : G.elements) {
    if (coset_index(x) != -1) continue;
    // New independent direction: x gets the next basis vector; close the span.
    std::vector<Perm> base_reps = reps;
    std::vector<std::uint32_t> base_coord = coord;
    for (size_t r = 0; r < base_reps.size(); ++r) {
      reps.push_back(compose(x, base_reps[r]));
      coord.push_back(next_basis ^ base_coord[r]);
    }
    next_basis <<= 1;
  }
  if (static_cast<int>(reps.size()) != index)
    throw std::logic_error("index-2 computation: quotient not elementary abelian");

  int k = std::countr_zero(next_basis);  // dimension
  std::vector<Subgroup> out;
  for (std::uint32_t lambda = 1; lambda < (1u << k); ++lambda) {
    std::vector<Perm> members;
    for (const auto& x : G.elements) {
      int r = coset_index(x);
      std::uint32_t v = coord[r];
      if (std::popcount(v & lambda) % 2 == 0) members.push_back(x);
    }
    Subgroup H;
    H.degree = G.degree;
    H.elements = std::move(members);
    std::sort(H.elements.begin(), H.elements.end());
    H.generators = small_generating_set(H);
    out.push_back(std::move(H));
  }
  // Deterministic order by element list.
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.elements < b.elements;
  });
  return out;
}

Subgroup centralizer(const Subgroup& ambient, const Perm& x) {
  Subgroup out;
  out.degree = ambient.degree;
  for (const auto& a : ambient.elements)
    if (compose(a, x) == compose(x, a)) out.elements.push_back(a);
  out.generators = small_generating_set(out);
  return out;
}

Subgroup conjugate_subgroup(const Subgroup& G, const Perm& c) {
  Subgroup out;
  out.degree = G.degree;
  for (const auto& a : G.elements)
    out.elements.push_back(compose(compose(c, a), c.inverse()));
  std::sort(out.elements.begin(), out.elements.end());
  for (const auto& g : G.generators)
    out.generators.push_back(compose(compose(c, g), c.inverse()));
  return out;
}

std::optional<int> dmxdm_embedding(const Subgroup& G) {
  // Necessary conditions: Sylow 2-subgroups of D_m x D_m (m odd) are Klein
  // four-groups, so G may contain no element of order 4 and its order's
  // 2-part must divide 4.
  for (const auto& p : G.elements)
    if (p.order() == 4) return std::nullopt;
  int order = G.order();
  int two_part = 1;
  while (order % 2 == 0) {
    order /= 2;
    two_part *= 2;
  }
  if (two_part > 4) return std::nullopt;

  long long L = 1;
  for (const auto& p : G.elements) {
    int o = p.order();
    while (o % 2 == 0) o /= 2;
    L = std::lcm(L, static_cast<long long>(o));
  }
  FiniteGroup A = to_finite_group(G);
  for (long long m : {L, 3 * L}) {
    if (4 * m * m < G.order()) continue;
    FiniteGroup B = dihedral_product(static_cast<int>(m));
    if (mono_exists(A, B)) return static_cast<int>(m);
  }
  return std::nullopt;
}

std::string triple_str(const Triple& t) {
  std::ostringstream os;
  os << '{' << t[0] << t[1] << t[2] << '}';
  return os.str();
}

std::vector<std::vector<Triple>> triangle_pair_orbits(const Subgroup& G) {
  if (G.degree != 6)
    throw data_error("triangle pair orbits require degree 6");
  std::vector<Triple> pairs;
  for (int a = 2; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) pairs.push_back({1, a, b});
  auto canon = [](Triple t) {
    std::sort(t.begin(), t.end());
    if (t[0] == 1) return t;
    // Complement within {1..6}.
    std::array<bool, 7> in{};
    for (int v : t) in[v] = true;
    Triple c{};
    int k = 0;
    for (int v = 1; v <= 6; ++v)
      if (!in[v]) c[k++] = v;
    return c;
  };
  auto index_of = [&](const Triple& t) {
    return static_cast<int>(std::lower_bound(pairs.begin(), pairs.end(), t) -
                            pairs.begin());
  };
  std::vector<int> root(pairs.size(), -1);
  std::vector<std::vector<Triple>> orbits;
  for (size_t s = 0; s < pairs.size(); ++s) {
    if (root[s] != -1) continue;
    std::vector<int> orbit{static_cast<int>(s)};
    root[s] = static_cast<int>(s);
    for (size_t qi = 0; qi < orbit.size(); ++qi) {
      Triple cur = pairs[orbit[qi]];
      for (const auto& g : G.elements) {
        Triple img = {g.apply(cur[0]), g.apply(cur[1]), g.apply(cur[2])};
        int idx = index_of(canon(img));
        if (root[idx] == -1) {
          root[idx] = static_cast<int>(s);
          orbit.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Triple> members;
    for (int idx : orbit) members.push_back(pairs[idx]);
    orbits.push_back(std::move(members));
  }
  return orbits;
}

}  // namespace tsg
