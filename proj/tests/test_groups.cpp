#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tsg/groups.hpp"

using namespace tsg;

namespace {

Subgroup grp(int degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> ps;
  for (const char* g : gens) ps.push_back(Perm::parse(g, degree));
  return closure(degree, ps);
}

// ---------------------------------------------------------------------------
// A from-scratch S4 subgroup census that shares no code with the library:
// permutations as image arrays, its own multiplication table, and a plain
// subset scan.  Results are compared against the lattice machinery.
// ---------------------------------------------------------------------------

struct BruteS4 {
  std::vector<std::array<int, 4>> elems;  // images of 1..4, 0-based values
  int mul[24][24];                        // function composition a(b(x))
  int inv[24];
  std::vector<std::uint32_t> subgroup_masks;

  BruteS4() {
    std::array<int, 4> img{0, 1, 2, 3};
    do {
      elems.push_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    auto index_of = [&](const std::array<int, 4>& a) {
      return static_cast<int>(std::find(elems.begin(), elems.end(), a) -
                              elems.begin());
    };
    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b) {
        std::array<int, 4> c{};
        for (int x = 0; x < 4; ++x) c[x] = elems[a][elems[b][x]];
        mul[a][b] = index_of(c);
      }
    for (int a = 0; a < 24; ++a) {
      std::array<int, 4> c{};
      for (int x = 0; x < 4; ++x) c[elems[a][x]] = x;
      inv[a] = index_of(c);
    }
    // Identity is index 0 in lexicographic order.  Scan all subsets that
    // contain it and whose size divides 24, keeping the closed ones.
    for (std::uint32_t m = 1; m < (1u << 24); m += 2) {
      int size = std::popcount(m);
      if (24 % size != 0) continue;
      if (closed(m)) subgroup_masks.push_back(m);
    }
  }

  bool closed(std::uint32_t m) const {
    for (int a = 0; a < 24; ++a) {
      if (!(m >> a & 1)) continue;
      for (int b = 0; b < 24; ++b) {
        if (!(m >> b & 1)) continue;
        if (!(m >> mul[a][b] & 1)) return false;
      }
    }
    return true;
  }

  std::uint32_t conjugate(std::uint32_t m, int c) const {
    std::uint32_t out = 0;
    for (int a = 0; a < 24; ++a)
      if (m >> a & 1) out |= 1u << mul[mul[c][a]][inv[c]];
    return out;
  }
};

}  // namespace

TEST_CASE("subgroup census of S4 agrees with an independent scan") {
  BruteS4 brute;
  CHECK(brute.subgroup_masks.size() == 30);

  // Group the 30 subgroups into conjugacy classes by minimal conjugate mask.
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (std::uint32_t m : brute.subgroup_masks) {
    std::uint32_t canon = m;
    for (int c = 0; c < 24; ++c) canon = std::min(canon, brute.conjugate(m, c));
    classes[canon].push_back(m);
  }
  CHECK(classes.size() == 11);

  CHECK(subgroup_count(4) == 30);
  const auto& cls = subgroup_classes(4);
  CHECK(cls.size() == 11);

  // The multiset of (order, class size) pairs must agree exactly.
  std::multiset<std::pair<int, long>> got, want;
  for (const auto& c : cls) got.insert({c.rep.order(), c.class_size});
  for (const auto& [canon, members] : classes)
    want.insert({std::popcount(canon), static_cast<long>(members.size())});
  CHECK(got == want);

  long total = 0;
  for (const auto& c : cls) total += c.class_size;
  CHECK(total == 30);
}

TEST_CASE("subgroup census sizes for S5 and S6") {
  CHECK(subgroup_count(5) == 156);
  CHECK(subgroup_classes(5).size() == 19);
  CHECK(subgroup_count(6) == 1455);
  CHECK(subgroup_classes(6).size() == 56);

  // Famous counts inside S6: one class of 45 Sylow 2-subgroups (D4 x Z2),
  // 10 copies of the order-72 wreath-type group, two classes of A5.
  int sylow2 = 0, wreath = 0, a5 = 0;
  for (const auto& c : subgroup_classes(6)) {
    if (c.rep.order() == 16) {
      ++sylow2;
      CHECK(c.class_size == 45);
      CHECK(c.name == "D4xZ2");
    }
    if (c.rep.order() == 72) {
      ++wreath;
      CHECK(c.class_size == 10);
      CHECK(c.name == "S2[S3]");
    }
    if (c.name == "A5") ++a5;
  }
  CHECK(sylow2 == 1);
  CHECK(wreath == 1);
  CHECK(a5 == 2);
}

TEST_CASE("classes are deterministically ordered and regenerate from their generators") {
  for (int n : {4, 5, 6}) {
    const auto& cls = subgroup_classes(n);
    for (size_t i = 1; i < cls.size(); ++i)
      CHECK(cls[i - 1].rep.order() <= cls[i].rep.order());
    for (const auto& c : cls) {
      Subgroup re = closure(n, c.rep.generators);
      CHECK(re.elements == c.rep.elements);
    }
  }
}

TEST_CASE("closure basics") {
  CHECK(closure(4, {}).order() == 1);
  CHECK(grp(4, {"(12)"}).order() == 2);
  CHECK(grp(6, {"(123456)"}).order() == 6);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(6).order() == 720);
  Subgroup a6 = grp(6, {"(123)", "(23456)"});
  CHECK(a6.order() == 360);
  CHECK(a6.contains(Perm::parse("(12)(34)", 6)));
  CHECK(!a6.contains(Perm::parse("(12)", 6)));
  CHECK_THROWS_AS(closure(4, {Perm::parse("(12345)", 5)}), data_error);
}

TEST_CASE("iso_name identifies the expected types") {
  CHECK(iso_name(grp(1, {})) == "Z1");
  CHECK(iso_name(grp(6, {"(12)"})) == "Z2");
  CHECK(iso_name(grp(6, {"(123456)"})) == "Z6");
  CHECK(iso_name(grp(4, {"(12)", "(34)"})) == "D2");
  CHECK(iso_name(grp(4, {"(1234)"})) == "Z4");
  CHECK(iso_name(grp(4, {"(1234)", "(13)"})) == "D4");
  CHECK(iso_name(grp(5, {"(12345)", "(25)(34)"})) == "D5");
  CHECK(iso_name(grp(6, {"(123456)", "(26)(35)"})) == "D6");
  CHECK(iso_name(grp(4, {"(123)", "(12)(34)"})) == "A4");
  CHECK(iso_name(grp(5, {"(12345)", "(123)"})) == "A5");
  CHECK(iso_name(grp(4, {"(1234)", "(12)"})) == "S4");
  CHECK(iso_name(grp(5, {"(12345)", "(12)"})) == "S5");
  CHECK(iso_name(grp(6, {"(123)", "(23456)"})) == "A6");
  CHECK(iso_name(symmetric_group(6)) == "S6");
  CHECK(iso_name(grp(6, {"(1234)", "(56)"})) == "Z4xZ2");
  CHECK(iso_name(grp(6, {"(12)", "(34)", "(56)"})) == "Z2xZ2xZ2");
  CHECK(iso_name(grp(6, {"(123)", "(456)"})) == "Z3xZ3");
  CHECK(iso_name(grp(6, {"(123)", "(12)", "(456)"})) == "D3xZ3");
  CHECK(iso_name(grp(6, {"(123)", "(456)", "(12)(45)"})) == "(Z3xZ3):Z2");
  CHECK(iso_name(grp(6, {"(123)(456)", "(123)(465)", "(14)(2536)"})) ==
        "(Z3xZ3):Z4");
  CHECK(iso_name(grp(5, {"(12345)", "(2431)"})) == "Z5:Z4");
  CHECK(iso_name(grp(6, {"(123)", "(12)", "(456)", "(45)"})) == "D3xD3");
  CHECK(iso_name(grp(6, {"(1234)", "(13)", "(56)"})) == "D4xZ2");
  CHECK(iso_name(grp(6, {"(123)", "(12)(34)", "(56)"})) == "A4xZ2");
  CHECK(iso_name(grp(6, {"(1234)", "(12)", "(56)"})) == "S4xZ2");
  CHECK(iso_name(grp(6, {"(123)", "(12)", "(456)", "(45)", "(14)(25)(36)"})) ==
        "S2[S3]");
}

TEST_CASE("every class of every degree gets a listed name") {
  const std::set<std::string> known = {
      "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "D2", "D3", "D4", "D5",
      "D6", "A4", "A5", "A6", "S4", "S5", "S6", "Z4xZ2", "Z2xZ2xZ2",
      "Z3xZ3", "D3xZ3", "(Z3xZ3):Z2", "(Z3xZ3):Z4", "Z5:Z4", "D3xD3",
      "D4xZ2", "A4xZ2", "S4xZ2", "S2[S3]"};
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : subgroup_classes(n)) {
      CHECK(known.count(c.name) == 1);
      CHECK(c.rep.degree == n);
    }
}

TEST_CASE("names agree with the exact isomorphism test across all S6 classes") {
  // Same name must mean isomorphic and different names must mean not, checked
  // with the backtracking search (restricted to tractable orders).
  const auto& cls = subgroup_classes(6);
  for (size_t i = 0; i < cls.size(); ++i)
    for (size_t j = i; j < cls.size(); ++j) {
      if (cls[i].rep.order() != cls[j].rep.order()) continue;
      if (cls[i].rep.order() > 72) continue;
      bool iso = is_isomorphic(cls[i].rep, cls[j].rep);
      CHECK(iso == (cls[i].name == cls[j].name));
    }
}

TEST_CASE("is_isomorphic crosses degrees and rejects same-order non-isomorphs") {
  CHECK(is_isomorphic(grp(3, {"(123)", "(12)"}),
                      grp(6, {"(123)(456)", "(12)(45)"})));
  CHECK(!is_isomorphic(grp(4, {"(1234)"}), grp(4, {"(12)", "(34)"})));
  CHECK(!is_isomorphic(grp(6, {"(123)", "(12)", "(456)"}),
                       grp(6, {"(123)", "(456)", "(12)(45)"})));
  CHECK(!is_isomorphic(grp(6, {"(123456)"}), grp(3, {"(123)", "(12)"})));
}

TEST_CASE("fingerprints separate the order-18 and order-8 lookalikes") {
  Fingerprint d3z3 = fingerprint(grp(6, {"(123)", "(12)", "(456)"}));
  Fingerprint semidirect = fingerprint(grp(6, {"(123)", "(456)", "(12)(45)"}));
  CHECK(d3z3 != semidirect);
  CHECK(d3z3.order == 18);
  CHECK(semidirect.order == 18);

  Fingerprint z4z2 = fingerprint(grp(6, {"(1234)", "(56)"}));
  Fingerprint d4 = fingerprint(grp(4, {"(1234)", "(13)"}));
  Fingerprint z2cubed = fingerprint(grp(6, {"(12)", "(34)", "(56)"}));
  CHECK(z4z2 != d4);
  CHECK(z4z2 != z2cubed);
  CHECK(z4z2.abelian);
  CHECK(!d4.abelian);
  CHECK(z2cubed.exponent == 2);
}

TEST_CASE("subgroups_of enumerates every subgroup") {
  CHECK(subgroups_of(grp(4, {"(123)", "(12)(34)"})).size() == 10);  // A4
  CHECK(subgroups_of(grp(4, {"(1234)", "(13)"})).size() == 10);     // D4
  CHECK(subgroups_of(symmetric_group(4)).size() == 30);
  CHECK(subgroups_of(grp(6, {"(123456)"})).size() == 4);  // one per divisor
  auto subs = subgroups_of(grp(6, {"(12)", "(34)", "(56)"}));
  CHECK(subs.size() == 16);  // elementary abelian 2^3: 1 + 7 + 7 + 1
  for (const auto& h : subs) CHECK((grp(6, {"(12)", "(34)", "(56)"}).order() %
                                    h.order()) == 0);
}

TEST_CASE("index-2 normal subgroups") {
  auto k_s4 = index2_normal_subgroups(symmetric_group(4));
  REQUIRE(k_s4.size() == 1);
  CHECK(iso_name(k_s4[0]) == "A4");

  auto k_s6 = index2_normal_subgroups(symmetric_group(6));
  REQUIRE(k_s6.size() == 1);
  CHECK(iso_name(k_s6[0]) == "A6");

  CHECK(index2_normal_subgroups(grp(4, {"(123)", "(12)(34)"})).empty());  // A4
  CHECK(index2_normal_subgroups(grp(5, {"(12345)", "(123)"})).empty());   // A5
  CHECK(index2_normal_subgroups(grp(3, {"(123)"})).empty());              // Z3

  auto k_z4z2 = index2_normal_subgroups(grp(6, {"(1234)", "(56)"}));
  REQUIRE(k_z4z2.size() == 3);
  std::multiset<std::string> names;
  for (const auto& k : k_z4z2) {
    CHECK(k.order() == 4);
    names.insert(iso_name(k));
  }
  CHECK(names == std::multiset<std::string>({"D2", "Z4", "Z4"}));

  auto k_z2cubed = index2_normal_subgroups(grp(6, {"(12)", "(34)", "(56)"}));
  REQUIRE(k_z2cubed.size() == 7);
  for (const auto& k : k_z2cubed) CHECK(iso_name(k) == "D2");

  auto k_frob = index2_normal_subgroups(grp(5, {"(12345)", "(2431)"}));
  REQUIRE(k_frob.size() == 1);
  CHECK(iso_name(k_frob[0]) == "D5");

  auto k_s4z2 = index2_normal_subgroups(grp(6, {"(1234)", "(12)", "(56)"}));
  REQUIRE(k_s4z2.size() == 3);
  std::multiset<std::string> sn;
  for (const auto& k : k_s4z2) sn.insert(iso_name(k));
  CHECK(sn == std::multiset<std::string>({"A4xZ2", "S4", "S4"}));
}

TEST_CASE("centralizer and conjugation") {
  Subgroup s6 = symmetric_group(6);
  Subgroup c = centralizer(s6, Perm::parse("(1234)(56)", 6));
  CHECK(c.order() == 8);
  CHECK(iso_name(c) == "Z4xZ2");
  CHECK(c.contains(Perm::parse("(1234)", 6)));
  CHECK(c.contains(Perm::parse("(56)", 6)));
  int transpositions = 0;
  for (const auto& p : c.elements)
    if (p.cycle_type().lengths == std::vector<int>{2}) ++transpositions;
  CHECK(transpositions == 1);  // only (56)

  Subgroup h = grp(3, {"(12)"});
  Subgroup hc = conjugate_subgroup(h, Perm::parse("(13)", 3));
  CHECK(hc.contains(Perm::parse("(23)", 3)));
  CHECK(hc.order() == 2);
}

TEST_CASE("small_generating_set regenerates its group") {
  for (int n : {3, 4, 5}) {
    Subgroup g = symmetric_group(n);
    auto gens = small_generating_set(g);
    CHECK(gens.size() <= 4);
    CHECK(closure(n, gens).order() == g.order());
  }
}

TEST_CASE("embeddings into a product of two dihedral groups") {
  CHECK(dmxdm_embedding(grp(6, {"(123)", "(456)"})) == 3);
  CHECK(dmxdm_embedding(grp(6, {"(123)", "(12)", "(456)"})) == 3);
  CHECK(dmxdm_embedding(grp(6, {"(123)", "(456)", "(12)(45)"})) == 3);
  CHECK(dmxdm_embedding(grp(6, {"(123)", "(12)", "(456)", "(45)"})) == 3);

  // Order-4 elements or a 2-part above 4 rule an embedding out.
  CHECK(!dmxdm_embedding(grp(6, {"(1234)", "(56)"})).has_value());
  CHECK(!dmxdm_embedding(grp(6, {"(12)", "(34)", "(56)"})).has_value());
  CHECK(!dmxdm_embedding(grp(6, {"(123)", "(12)(34)", "(56)"})).has_value());
  CHECK(!dmxdm_embedding(grp(6, {"(123)(456)", "(123)(465)", "(14)(2536)"}))
             .has_value());
  CHECK(!dmxdm_embedding(grp(5, {"(12345)", "(2431)"})).has_value());
  CHECK(
      !dmxdm_embedding(grp(6, {"(123)", "(12)", "(456)", "(45)", "(14)(25)(36)"}))
           .has_value());
}

TEST_CASE("triangle pair orbits") {
  auto as_sets = [](const std::vector<std::vector<Triple>>& orbits) {
    std::vector<std::vector<std::string>> out;
    for (const auto& o : orbits) {
      std::vector<std::string> names;
      for (const auto& t : o) names.push_back(triple_str(t));
      out.push_back(names);
    }
    return out;
  };

  auto orbits = triangle_pair_orbits(grp(6, {"(13)", "(24)", "(56)"}));
  std::vector<std::vector<std::string>> expect = {
      {"{123}", "{134}"},
      {"{124}", "{156}"},
      {"{125}", "{126}", "{145}", "{146}"},
      {"{135}", "{136}"}};
  CHECK(as_sets(orbits) == expect);

  auto orbits2 = triangle_pair_orbits(grp(6, {"(12)(34)", "(13)(24)", "(56)"}));
  std::vector<size_t> sizes;
  for (const auto& o : orbits2) sizes.push_back(o.size());
  CHECK(sizes == std::vector<size_t>({4, 2, 2, 2}));

  // The trivial group keeps all ten pairs separate; S6 fuses them.
  CHECK(triangle_pair_orbits(grp(6, {})).size() == 10);
  CHECK(triangle_pair_orbits(symmetric_group(6)).size() == 1);

  CHECK_THROWS_AS(triangle_pair_orbits(grp(5, {"(12345)"})), data_error);
}
