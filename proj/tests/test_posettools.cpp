#include "doctest.h"

#include "nervekit/fixtures.hpp"
#include "nervekit/gen.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/posettools.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace nervekit;
using namespace nervekit::fixtures;

namespace {

std::vector<long long> betti(const SimplicialComplex& k, int maxdeg) {
  return homology_of_complex(k, maxdeg, CoefficientSpec::q()).betti;
}

std::vector<std::string> subset_of(const std::vector<std::string>& elems, unsigned mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (mask & (1u << i)) out.push_back(elems[i]);
  return out;
}

bool is_chain_subset(const Poset& p, const std::vector<std::string>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!p.comparable(s[i], s[j])) return false;
  return true;
}

bool subset_le(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> meet(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poset chain_of(int k) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 1; i <= k; ++i) elems.push_back("p" + std::to_string(i));
  for (int i = 1; i < k; ++i) rels.push_back({elems[i - 1], elems[i]});
  return Poset::from_relations(elems, rels);
}

PosetMap identity_map(const Poset& p) {
  std::map<std::string, std::string> m;
  for (const std::string& e : p.elements()) m[e] = e;
  return PosetMap::make(p, p, std::move(m));
}

}  // namespace

TEST_CASE("stars collect the comparable elements") {
  Poset b3 = poset_fixture("b3-minus-bounds");
  CHECK(star_elements(b3, "1") == std::vector<std::string>{"1", "12", "13"});
  CHECK(star_elements(b3, "12") == std::vector<std::string>{"1", "12", "2"});
  Poset s1 = star(b3, "1");
  CHECK(s1.elements() == std::vector<std::string>{"1", "12", "13"});
  CHECK(s1.less("1", "12"));
  CHECK(!s1.comparable("12", "13"));

  Poset c3 = poset_fixture("chain3");
  CHECK(star_elements(c3, "p2") == c3.elements());

  CHECK_THROWS_AS(star_elements(b3, "nope"), input_error);
}

TEST_CASE("cutset check walks the maximal chains") {
  Poset b3 = poset_fixture("b3-minus-bounds");
  CHECK(cutset_check(b3, {"1", "2", "3"}).is_cutset);
  CHECK(cutset_check(b3, {"12", "13", "23"}).is_cutset);

  CutsetReport bad = cutset_check(b3, {"1"});
  CHECK(!bad.is_cutset);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == std::vector<std::string>{"2", "12"});

  Poset sq = poset_fixture("square-circle-poset");
  CHECK(cutset_check(sq, {"a", "b"}).is_cutset);
  CHECK(cutset_check(sq, {"c", "d"}).is_cutset);
  CHECK(!cutset_check(sq, {"a", "c"}).is_cutset);

  Poset qb = poset_fixture("quillen-base");
  CHECK(cutset_check(qb, {"1"}).is_cutset);
  CHECK(cutset_check(qb, {"0", "0p"}).is_cutset);

  CHECK_THROWS_AS(cutset_check(b3, {"77"}), input_error);
}

TEST_CASE("star cover of a cutset covers the order complex") {
  Poset b3 = poset_fixture("b3-minus-bounds");
  IndexedCover cov = star_cover(b3, {"1", "2", "3"});
  CHECK(cov.index_order() == std::vector<std::string>{"1", "2", "3"});
  CHECK(cov.is_full());
  CHECK(cov.member_at(0) == order_complex(star(b3, "1")));

  // The ambient is the hexagon 1-12-2-23-3-13, the stars are its three
  // two-edge arcs, so the nerve is a hollow triangle and both carry one loop.
  CHECK(betti(cov.ambient(), 1) == std::vector<long long>{1, 1});
  CHECK(betti(nerve(cov), 1) == std::vector<long long>{1, 1});

  CHECK_THROWS_AS(star_cover(b3, {"1", "2"}), input_error);
  CHECK_THROWS_AS(star_cover(b3, {"1", "1", "2", "3"}), input_error);
}

TEST_CASE("component poset of the star intersections") {
  Poset b3 = poset_fixture("b3-minus-bounds");
  GammaResult g = gamma_poset(b3, {"1", "2", "3"});
  REQUIRE(g.poset.size() == 6);
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(g.member_elements.at("g0")) == std::vector<std::string>{"1", "12", "13"});
  CHECK(sorted(g.member_elements.at("g1")) == std::vector<std::string>{"12"});
  CHECK(sorted(g.member_elements.at("g2")) == std::vector<std::string>{"12", "2", "23"});
  CHECK(sorted(g.member_elements.at("g3")) == std::vector<std::string>{"13"});
  CHECK(sorted(g.member_elements.at("g4")) == std::vector<std::string>{"13", "23", "3"});
  CHECK(sorted(g.member_elements.at("g5")) == std::vector<std::string>{"23"});
  CHECK(g.poset.all_relations().size() == 6);
  CHECK(g.poset.less("g1", "g0"));
  CHECK(g.poset.less("g1", "g2"));
  CHECK(g.poset.less("g5", "g4"));
  CHECK(!g.poset.comparable("g0", "g2"));
  CHECK(betti(order_complex(g.poset), 1) == std::vector<long long>{1, 1});

  // Same component structure as the component poset of the star cover.
  VbarResult vb = vbar(star_cover(b3, {"1", "2", "3"}));
  REQUIRE(vb.poset.size() == g.poset.size());
  std::map<std::vector<std::string>, std::string> by_elems, by_verts;
  for (const auto& [tok, elems] : g.member_elements) by_elems[sorted(elems)] = tok;
  for (const auto& [tok, member] : vb.member) by_verts[member.vertices()] = tok;
  REQUIRE(by_elems.size() == by_verts.size());
  for (const auto& [elems, gtok] : by_elems) {
    REQUIRE(by_verts.count(elems));
    for (const auto& [elems2, gtok2] : by_elems)
      CHECK(g.poset.less(gtok, gtok2) ==
            vb.poset.less(by_verts.at(elems), by_verts.at(elems2)));
  }
}

TEST_CASE("cutset complex of the square-circle poset") {
  Poset sq = poset_fixture("square-circle-poset");
  CutsetComplex r = r_complex(sq, {"a", "b"});
  CHECK(r.vertices == std::vector<std::string>{"a", "b"});
  REQUIRE(r.edges.size() == 2);
  CHECK(r.edges[0].token == "a+b@c");
  CHECK(r.edges[1].token == "a+b@d");
  CHECK(r.triangles.empty());

  // Two parallel edges form a loop; the order complex is the four-cycle.
  GroupPresentation pres = pi1_presentation(r);
  CHECK(pres.generators == std::vector<std::string>{"a+b@d"});
  CHECK(pres.relators.empty());
  AbelianizationResult ab = pi1_abelianized(r);
  CHECK(ab.rank == 1);
  CHECK(ab.torsion.empty());
  CHECK(betti(order_complex(sq), 1) == std::vector<long long>{1, 1});
}

TEST_CASE("cutset complex of the bounded-free boolean poset") {
  Poset b3 = poset_fixture("b3-minus-bounds");
  CutsetComplex r = r_complex(b3, {"1", "2", "3"});
  REQUIRE(r.edges.size() == 3);
  CHECK(r.edges[0].token == "1+2@12");
  CHECK(r.edges[1].token == "1+3@13");
  CHECK(r.edges[2].token == "2+3@23");
  CHECK(r.triangles.empty());
  GroupPresentation pres = pi1_presentation(r);
  CHECK(pres.generators == std::vector<std::string>{"2+3@23"});
  AbelianizationResult ab = pi1_abelianized(r);
  CHECK(ab.rank == 1);
  CHECK(ab.torsion.empty());

  CHECK_THROWS_AS(r_complex(b3, {"1", "2"}), input_error);
  Poset two = Poset::from_relations({"x", "y"}, {});
  CHECK_THROWS_AS(r_complex(two, {"x", "y"}), input_error);
}

TEST_CASE("cutset complex sees torsion") {
  // Face poset of the six-vertex projective plane, cut by its vertices. The
  // pairwise star intersections are single components (edge plus its two
  // triangles), so the cutset complex rebuilds the triangulation and its
  // fundamental group has order two.
  SimplicialComplex rp2 = complex_fixture("rp2");
  Poset fp = face_poset(rp2);
  std::vector<std::string> verts;
  for (const Vertex& v : rp2.vertices()) verts.push_back(v);
  CutsetComplex r = r_complex(fp, verts);
  CHECK(r.vertices.size() == 6);
  CHECK(r.edges.size() == 15);
  CHECK(r.triangles.size() == 10);
  // Each edge component consists of the simplices containing both vertices.
  for (const CutsetComplex::Edge& e : r.edges) {
    CHECK(e.rep.find(e.a) != std::string::npos);
    CHECK(e.rep.find(e.b) != std::string::npos);
  }

  AbelianizationResult ab = pi1_abelianized(r);
  CHECK(ab.rank == 0);
  REQUIRE(ab.torsion.size() == 1);
  CHECK(ab.torsion[0] == 2);

  // Spanning forest choice must not matter.
  for (std::uint64_t seed : {1ull, 7ull, 123456789ull}) {
    AbelianizationResult other = pi1_abelianized(r, seed);
    CHECK(other.rank == ab.rank);
    CHECK(other.torsion == ab.torsion);
  }

  HomologyResult h = homology_of_complex(order_complex(fp), 1, CoefficientSpec::z());
  CHECK(h.betti[1] == 0);
  REQUIRE(h.torsion[1].size() == 1);
  CHECK(h.torsion[1][0] == 2);
}

TEST_CASE("cutset verification") {
  Poset sq = poset_fixture("square-circle-poset");
  CutsetVerdict v = verify_cutset(sq, {"a", "b"});
  CHECK(v.is_cutset);
  CHECK(v.rank_r == 1);
  CHECK(v.rank_delta == 1);
  CHECK(v.torsion_r.empty());
  CHECK(v.torsion_delta.empty());
  CHECK(v.pass);

  CutsetVerdict top = verify_cutset(sq, {"c", "d"});
  CHECK(top.pass);

  SimplicialComplex rp2 = complex_fixture("rp2");
  Poset fp = face_poset(rp2);
  std::vector<std::string> verts;
  for (const Vertex& vx : rp2.vertices()) verts.push_back(vx);
  CutsetVerdict tor = verify_cutset(fp, verts, 5);
  CHECK(tor.pass);
  REQUIRE(tor.torsion_r.size() == 1);
  CHECK(tor.torsion_r[0] == 2);

  // A set that fails to cut is a verification failure with the missed chain.
  CutsetVerdict miss = verify_cutset(sq, {"a"});
  CHECK(!miss.is_cutset);
  CHECK(!miss.pass);
  REQUIRE(miss.cutset_witness.has_value());
  CHECK(*miss.cutset_witness == std::vector<std::string>{"b", "c"});

  Poset two = Poset::from_relations({"x", "y"}, {});
  CHECK_THROWS_AS(verify_cutset(two, {"x", "y"}), input_error);
}

TEST_CASE("quillen fibers are preimages of up-sets") {
  Poset c3 = poset_fixture("chain3");
  PosetMap id = identity_map(c3);
  CHECK(quillen_fiber(id, "p1") == c3);
  CHECK(quillen_fiber(id, "p2") ==
        Poset::from_relations({"p2", "p3"}, {{"p2", "p3"}}));
  CHECK(quillen_fiber(id, "p3") == Poset::from_relations({"p3"}, {}));

  PosetMap pi = posetmap_fixture("quillen-pi");
  Poset f2 = quillen_fiber(pi, "2");
  CHECK(f2.elements() == std::vector<std::string>{"2~a", "2~b"});
  CHECK(!f2.comparable("2~a", "2~b"));
  Poset f1 = quillen_fiber(pi, "1");
  CHECK(f1.elements() == std::vector<std::string>{"1~m", "2~a", "2~b"});
  CHECK(f1.less("1~m", "2~a"));
  Poset f0 = quillen_fiber(pi, "0");
  CHECK(f0.size() == 5);
  CHECK(betti(order_complex(f0), 1) == std::vector<long long>{1, 0});

  CHECK_THROWS_AS(quillen_fiber(pi, "9"), input_error);
}

TEST_CASE("joins and coherence") {
  Poset b3 = poset_fixture("b3-minus-bounds");
  CHECK(poset_join(b3, {"1", "2"}) == std::optional<std::string>{"12"});
  CHECK(poset_join(b3, {"3"}) == std::optional<std::string>{"3"});
  CHECK(poset_join(b3, {"1", "2", "3"}) == std::nullopt);

  Poset sq = poset_fixture("square-circle-poset");
  CHECK(poset_join(sq, {"a", "b"}) == std::nullopt);

  CoherenceReport cb3 = coherence(b3);
  CHECK(cb3.coherent);
  CHECK(cb3.minimal == std::vector<std::string>{"1", "2", "3"});
  // Triple is unbounded, so only singletons and pairs enter the join table.
  CHECK(cb3.joins.size() == 6);
  CHECK(cb3.joins.at({"1", "2"}) == "12");

  CoherenceReport csq = coherence(sq);
  CHECK(!csq.coherent);
  REQUIRE(csq.witness.has_value());
  CHECK(*csq.witness == std::vector<std::string>{"a", "b"});
  CHECK(csq.joins.size() == 2);

  CHECK(coherence(poset_fixture("chain3")).coherent);
  CoherenceReport cqb = coherence(poset_fixture("quillen-base"));
  CHECK(cqb.coherent);
  CHECK(cqb.joins.at({"0", "0p"}) == "1");
}

TEST_CASE("fiber mode names round-trip") {
  for (FiberMode m : {FiberMode::Quillen, FiberMode::Copo, FiberMode::Achain})
    CHECK(parse_fiber_mode(fiber_mode_name(m)) == m);
  CHECK_THROWS_AS(parse_fiber_mode("other"), input_error);
}

TEST_CASE("fiber verification on maps with contractible fibers") {
  Poset c3 = poset_fixture("chain3");
  PosetMap id = identity_map(c3);
  Poset pt = Poset::from_relations({"m"}, {});
  PosetMap constant = PosetMap::make(c3, pt, {{"p1", "m"}, {"p2", "m"}, {"p3", "m"}});

  for (FiberMode mode : {FiberMode::Quillen, FiberMode::Copo, FiberMode::Achain})
    for (int n : {0, 1, 2}) {
      FiberVerdict vi = verify_fiber(id, mode, n, CoefficientSpec::q());
      CHECK(vi.hypothesis_pass);
      CHECK(vi.conclusion_pass);
      CHECK(vi.pass);
      FiberVerdict vc = verify_fiber(constant, mode, n, CoefficientSpec::q());
      CHECK(vc.pass);
    }

  // Quillen mode demands every up-set preimage; identity entries are the
  // elements themselves.
  FiberVerdict vi = verify_fiber(id, FiberMode::Quillen, 1, CoefficientSpec::q());
  REQUIRE(vi.entries.size() == 3);
  CHECK(vi.entries[0].name == "fiber@p1");
  CHECK(vi.entries[0].needed == 1);
  CHECK(vi.entries[0].level == 1);

  CHECK_THROWS_AS(verify_fiber(id, FiberMode::Quillen, 1, CoefficientSpec::z()), input_error);
}

TEST_CASE("the comparison map that separates the fiber criteria") {
  PosetMap pi = posetmap_fixture("quillen-pi");

  SUBCASE("pointwise fibers fail while the map is acyclic") {
    FiberVerdict v = verify_fiber(pi, FiberMode::Quillen, 0, CoefficientSpec::q());
    CHECK(!v.hypothesis_pass);
    CHECK(v.conclusion_pass);
    CHECK(!v.pass);
    REQUIRE(v.entries.size() == 4);
    CHECK(v.entries[0].name == "fiber@0");
    CHECK(v.entries[0].pass);
    CHECK(v.entries[1].name == "fiber@0p");
    CHECK(v.entries[1].pass);
    CHECK(v.entries[2].name == "fiber@1");
    CHECK(v.entries[2].pass);
    CHECK(v.entries[3].name == "fiber@2");
    CHECK(!v.entries[3].pass);
    CHECK(v.entries[3].needed == 0);
    CHECK(v.entries[3].level == -1);
  }

  SUBCASE("chain intersections satisfy the graded demands") {
    for (int n : {0, 1}) {
      FiberVerdict v = verify_fiber(pi, FiberMode::Achain, n, CoefficientSpec::q());
      CHECK(v.hypothesis_pass);
      CHECK(v.conclusion_pass);
      CHECK(v.pass);
    }
    FiberVerdict v = verify_fiber(pi, FiberMode::Achain, 0, CoefficientSpec::q());
    REQUIRE(v.entries.size() == 3);
    CHECK(v.entries[0].name == "fiber@{0+1+2}");
    CHECK(v.entries[0].needed == 0);
    CHECK(v.entries[1].name == "fiber@{0p+1+2}");
    CHECK(v.entries[1].needed == 0);
    CHECK(v.entries[2].name == "fiber@{1+2}");
    CHECK(v.entries[2].needed == -1);
  }

  SUBCASE("joins of minimal elements satisfy the graded demands") {
    for (int n : {0, 1}) {
      FiberVerdict v = verify_fiber(pi, FiberMode::Copo, n, CoefficientSpec::q());
      CHECK(v.hypothesis_pass);
      CHECK(v.conclusion_pass);
      CHECK(v.pass);
    }
    // The element 2 is not a join of minimal elements, so its bad fiber is
    // never demanded.
    FiberVerdict v = verify_fiber(pi, FiberMode::Copo, 0, CoefficientSpec::q());
    REQUIRE(v.entries.size() == 3);
    CHECK(v.entries[0].name == "fiber@0");
    CHECK(v.entries[1].name == "fiber@0p");
    CHECK(v.entries[2].name == "fiber@1");
    CHECK(v.entries[2].needed == -1);
  }

  SUBCASE("negative grading asks only for a surjection on components") {
    FiberVerdict v = verify_fiber(pi, FiberMode::Quillen, -1, CoefficientSpec::q());
    CHECK(v.hypothesis_pass);  // nonempty fibers suffice
    CHECK(v.conclusion_pass);
    CHECK(v.pass);
  }
}

TEST_CASE("deep joins are skipped once the demand drops far enough") {
  Poset b3full = Poset::from_relations(
      {"1", "2", "3", "12", "13", "23", "123"},
      {{"1", "12"}, {"1", "13"}, {"2", "12"}, {"2", "23"}, {"3", "13"}, {"3", "23"},
       {"12", "123"}, {"13", "123"}, {"23", "123"}});
  CoherenceReport ch = coherence(b3full);
  CHECK(ch.coherent);
  CHECK(ch.joins.size() == 7);
  FiberVerdict v = verify_fiber(identity_map(b3full), FiberMode::Copo, 0, CoefficientSpec::q());
  CHECK(v.pass);
  bool found = false;
  for (const FiberEntry& e : v.entries)
    if (e.name == "fiber@123") {
      found = true;
      CHECK(e.skipped);
      CHECK(e.needed == -2);
      CHECK(e.pass);
    }
  CHECK(found);
}

TEST_CASE("random monotone maps never break the fiber theorems") {
  // Whenever the graded hypotheses hold, the conclusion must hold too.
  int verified = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Poset dom = gen::random_poset(seed * 11, 7, 9);
    Poset cod = gen::random_poset(seed * 13 + 1, 5, 6);
    PosetMap f = gen::random_monotone_map(seed * 17 + 2, dom, cod);
    for (FiberMode mode : {FiberMode::Quillen, FiberMode::Achain}) {
      for (int n : {0, 1}) {
        FiberVerdict v = verify_fiber(f, mode, n, CoefficientSpec::q());
        if (v.hypothesis_pass) {
          CHECK(v.conclusion_pass);
          ++verified;
        }
      }
    }
  }
  CHECK(verified > 0);
}

TEST_CASE("neighborhoods, cores and the fixed-point test") {
  Poset qb = poset_fixture("quillen-base");
  CHECK(neighborhood(qb, {"1"}) == qb.elements());
  CHECK(neighborhood(qb, {"0"}) == std::vector<std::string>{"0", "1", "2"});
  CHECK(neighborhood(qb, {"0", "0p"}) == std::vector<std::string>{"1", "2"});
  CHECK(neighborhood(qb, {}) == qb.elements());
  CHECK(core_of(qb, qb.elements()) == std::vector<std::string>{"1", "2"});
  CHECK(core_of(qb, {"0", "1", "2"}) == std::vector<std::string>{"0", "1", "2"});

  CHECK(is_essential(qb, {"0", "1", "2"}));
  CHECK(is_essential(qb, {"0p", "1", "2"}));
  CHECK(is_essential(qb, {"1", "2"}));
  CHECK(!is_essential(qb, {"2"}));
  CHECK(!is_essential(qb, {}));
  CHECK(!is_essential(qb, {"0"}));

  // In an antichain the empty set and the singletons are the fixed points.
  Poset anti = Poset::from_relations({"x", "y", "z"}, {});
  CHECK(is_essential(anti, {}));
  CHECK(is_essential(anti, {"y"}));
  CHECK(!is_essential(anti, {"x", "y"}));

  CHECK_THROWS_AS(neighborhood(qb, {"nope"}), input_error);
}

TEST_CASE("essential chains by closure") {
  CHECK(essential_chains(Poset::from_relations({}, {})) ==
        std::vector<std::vector<std::string>>{{}});

  Poset c3 = poset_fixture("chain3");
  CHECK(essential_chains(c3) ==
        std::vector<std::vector<std::string>>{{"p1", "p2", "p3"}});

  Poset qb = poset_fixture("quillen-base");
  CHECK(essential_chains(qb) ==
        std::vector<std::vector<std::string>>{
            {"0", "1", "2"}, {"0p", "1", "2"}, {"1", "2"}});

  // Six maximal chains, their six singleton overlaps, and the empty chain.
  Poset b3 = poset_fixture("b3-minus-bounds");
  CHECK(essential_chains(b3).size() == 13);
}

TEST_CASE("closure route and fixed-point route agree exhaustively") {
  for (int n = 0; n <= 6; ++n)
    for (const Poset& p : gen::enumerate_posets(n)) {
      std::set<std::vector<std::string>> closure;
      for (const auto& c : essential_chains(p)) closure.insert(c);
      const std::vector<std::string>& elems = p.elements();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::string> s = subset_of(elems, mask);
        CHECK(is_essential(p, s) == (closure.count(s) > 0));
      }
    }
}

TEST_CASE("neighborhood calculus") {
  // On chains S lies inside the core of its neighborhood; on arbitrary
  // subsets the core is squeezed between the iterated neighborhoods, the
  // neighborhood reverses inclusions, and nested sets push cores up.
  auto check_poset = [](const Poset& p) {
    const std::vector<std::string>& elems = p.elements();
    const unsigned full = 1u << elems.size();
    for (unsigned tm = 0; tm < full; ++tm) {
      std::vector<std::string> t = subset_of(elems, tm);
      std::vector<std::string> nt = neighborhood(p, t);
      std::vector<std::string> cnt = core_of(p, nt);
      if (is_chain_subset(p, t)) CHECK(subset_le(t, cnt));
      CHECK(subset_le(cnt, neighborhood(p, nt)));
      unsigned sm = tm;
      while (true) {
        std::vector<std::string> s = subset_of(elems, sm);
        std::vector<std::string> ns = neighborhood(p, s);
        CHECK(subset_le(nt, ns));
        CHECK(subset_le(meet(core_of(p, ns), nt), cnt));
        if (sm == 0) break;
        sm = (sm - 1) & tm;
      }
    }
  };
  for (int n = 0; n <= 5; ++n)
    for (const Poset& p : gen::enumerate_posets(n)) check_poset(p);
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    check_poset(gen::random_poset(seed * 7, 7, 10));
}

TEST_CASE("maximal chains are their own neighborhoods") {
  auto check_poset = [](const Poset& p) {
    for (std::vector<std::string> c : maximal_chains(p)) {
      std::sort(c.begin(), c.end());
      CHECK(neighborhood(p, c) == c);
      CHECK(is_essential(p, c));
    }
  };
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : gen::enumerate_posets(n)) check_poset(p);
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    check_poset(gen::random_poset(seed * 3 + 1, 9, 14));
}

TEST_CASE("intersections of essential chains stay essential") {
  auto check_poset = [](const Poset& p) {
    std::vector<std::vector<std::string>> ess = essential_chains(p);
    for (std::size_t i = 0; i < ess.size(); ++i)
      for (std::size_t j = i; j < ess.size(); ++j)
        CHECK(is_essential(p, meet(ess[i], ess[j])));
  };
  for (int n = 0; n <= 6; ++n)
    for (const Poset& p : gen::enumerate_posets(n)) check_poset(p);
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    check_poset(gen::random_poset(seed * 5 + 3, 8, 11));
}

TEST_CASE("fiberwise join of posets") {
  Poset base = poset_fixture("quillen-base");
  Poset s0 = Poset::from_relations({"a", "b"}, {});
  Poset pt = Poset::from_relations({"m"}, {});
  PqJoinResult pq = pq_join(base, {{"0", s0}, {"0p", s0}, {"1", pt}, {"2", s0}});
  CHECK(pq.total.size() == 7);
  CHECK(pq.total.less("0~a", "1~m"));
  CHECK(pq.total.less("0~a", "2~b"));
  CHECK(!pq.total.comparable("0~a", "0~b"));
  CHECK(!pq.total.comparable("0~a", "0p~b"));
  CHECK(pq.pi("0~a") == "0");
  CHECK(pq.pi("1~m") == "1");

  // The fixture map is exactly this construction.
  PosetMap pi = posetmap_fixture("quillen-pi");
  CHECK(pq.total == pi.domain());
  for (const std::string& e : pq.total.elements()) CHECK(pq.pi(e) == pi(e));

  // Point fibers reproduce the base.
  PqJoinResult triv = pq_join(base, {{"0", pt}, {"0p", pt}, {"1", pt}, {"2", pt}});
  CHECK(triv.total.size() == base.size());
  CHECK(triv.total.less("0~m", "1~m") == base.less("0", "1"));
  CHECK(triv.total.comparable("0~m", "0p~m") == base.comparable("0", "0p"));

  // Empty fibers drop their part of the total poset.
  PqJoinResult sparse = pq_join(chain_of(2), {{"p1", Poset::from_relations({}, {})}, {"p2", s0}});
  CHECK(sparse.total.elements() == std::vector<std::string>{"p2~a", "p2~b"});

  CHECK_THROWS_AS(pq_join(base, {{"0", s0}}), input_error);
  CHECK_THROWS_AS(pq_join(base, {{"0", s0}, {"0p", s0}, {"1", pt}, {"2", s0}, {"9", pt}}),
                  input_error);
  Poset tilde = Poset::from_relations({"x~y"}, {});
  CHECK_THROWS_AS(pq_join(tilde, {{"x~y", pt}}), input_error);
  CHECK_THROWS_AS(pq_join(chain_of(1), {{"p1", tilde}}), input_error);
}

TEST_CASE("preimages of base subsets") {
  PqJoinResult pq = covex_cover(poset_fixture("quillen-base")).pq;
  Poset pre = pq_preimage(pq, {"1", "2"});
  CHECK(pre.elements() == std::vector<std::string>{"1~a", "1~b", "2~a", "2~b"});
  CHECK(pre.less("1~a", "2~b"));
  CHECK(!pre.comparable("2~a", "2~b"));
  CHECK(pq_preimage(pq, {}).size() == 0);
  CHECK_THROWS_AS(pq_preimage(pq, {"9"}), input_error);
}

TEST_CASE("order complexes of fiberwise joins are joins of complexes") {
  // Over a chain the total order complex is the join of the fibers, so the
  // reduced homology multiplies: two circles give a three-sphere, a circle
  // and a pair of points give a two-sphere.
  Poset sq = poset_fixture("square-circle-poset");
  Poset s0 = Poset::from_relations({"a", "b"}, {});
  PqJoinResult tori = pq_join(chain_of(2), {{"p1", sq}, {"p2", sq}});
  CHECK(betti(order_complex(tori.total), 3) == std::vector<long long>{1, 0, 0, 1});
  PqJoinResult mixed = pq_join(chain_of(2), {{"p1", sq}, {"p2", s0}});
  CHECK(betti(order_complex(mixed.total), 2) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("covers by maximal chains") {
  Poset qb = poset_fixture("quillen-base");
  IndexedCover cov = chain_cover(qb);
  CHECK(cov.index_order() == std::vector<std::string>{"0+1+2", "0p+1+2"});
  CHECK(cov.is_full());
  CHECK(cov.ambient() == order_complex(qb));
  // Each member is a solid triangle on its chain.
  CHECK(cov.member_at(0).facets().size() == 1);

  IndexedCover single = chain_cover(poset_fixture("chain3"));
  CHECK(single.index_order() == std::vector<std::string>{"p1+p2+p3"});
  CHECK(single.member_at(0) == single.ambient());
}

TEST_CASE("two-point fiberwise joins model spheres") {
  // A chain with k elements yields the (k-1)-sphere, covered by the preimage
  // of its single maximal chain.
  CovexResult c1 = covex_cover(chain_of(1));
  CHECK(betti(order_complex(c1.pq.total), 0) == std::vector<long long>{2});
  CovexResult c2 = covex_cover(chain_of(2));
  CHECK(betti(order_complex(c2.pq.total), 1) == std::vector<long long>{1, 1});
  CovexResult c3 = covex_cover(chain_of(3));
  CHECK(betti(order_complex(c3.pq.total), 2) == std::vector<long long>{1, 0, 1});
  CHECK(c3.cover.is_full());
  CHECK(c3.cover.size() == 1);
  CHECK(c3.cover.ambient() == order_complex(c3.pq.total));

  // Acyclicity of the chain preimages is exactly one short of the dimension.
  for (int k : {2, 3, 4}) {
    CovexResult c = covex_cover(chain_of(k));
    CHECK(acyclicity_level(order_complex(c.pq.total), k - 1, CoefficientSpec::q()) == k - 2);
  }

  // Over a branching base the cover has one member per maximal chain; here
  // the double overlap is the two-point join of the shared tail, a circle.
  CovexResult qb = covex_cover(poset_fixture("quillen-base"));
  CHECK(qb.cover.index_order() == std::vector<std::string>{"0+1+2", "0p+1+2"});
  CHECK(qb.cover.is_full());
  IntersectionCache cache(qb.cover);
  CHECK(betti(cache.intersection({0, 1}), 1) == std::vector<long long>{1, 1});
}

TEST_CASE("cover detection criterion") {
  SUBCASE("identity maps pass at every grade") {
    IndexedCover cov = cover_fixture("hollow-triangle");
    std::map<std::string, std::string> vm;
    for (const Vertex& v : cov.ambient().vertices()) vm[v] = v;
    SimplicialMap id = SimplicialMap::make(cov.ambient(), cov.ambient(), vm);
    for (int n : {0, 1, 2}) {
      DetectionVerdict v = detection_check(id, cov, n, CoefficientSpec::q());
      CHECK(v.hypothesis_pass);
      CHECK(v.conclusion_pass);
      CHECK(v.pass);
    }
    DetectionVerdict v = detection_check(id, cov, 1, CoefficientSpec::q());
    REQUIRE(v.entries.size() == 6);
    CHECK(v.entries[0].name == "restriction@x");
    CHECK(v.entries[1].name == "restriction@x+y");
    CHECK(v.entries[1].needed == 0);
  }

  SUBCASE("the comparison projection is detected by the chain cover") {
    PosetMap pi = posetmap_fixture("chain-covex-pi");
    SimplicialMap f = order_complex_map(pi);
    IndexedCover cov = chain_cover(poset_fixture("chain3"));
    for (int n : {0, 1, 2}) {
      DetectionVerdict v = detection_check(f, cov, n, CoefficientSpec::q());
      CHECK(v.pass);
    }
    // The total space is a two-sphere, so degree-two isomorphism fails and
    // the graded hypotheses fail right along with it.
    DetectionVerdict v = detection_check(f, cov, 3, CoefficientSpec::q());
    CHECK(!v.hypothesis_pass);
    CHECK(!v.conclusion_pass);
  }

  SUBCASE("a restriction over an overlap can flag the failure") {
    SimplicialComplex circle = complex_fixture("circle");
    SimplicialComplex edge = SimplicialComplex::from_facets({{"1", "2"}});
    IndexedCover cov = IndexedCover::make(
        circle, {"u", "w"},
        {SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}}),
         SimplicialComplex::from_facets({{"1", "3"}})});
    SimplicialMap inc = SimplicialMap::make(edge, circle, {{"1", "1"}, {"2", "2"}});
    DetectionVerdict v = detection_check(inc, cov, 1, CoefficientSpec::q());
    CHECK(!v.hypothesis_pass);
    CHECK(!v.conclusion_pass);
    REQUIRE(v.entries.size() == 3);
    CHECK(v.entries[0].name == "restriction@u");
    CHECK(v.entries[0].pass);
    CHECK(v.entries[1].name == "restriction@u+w");
    CHECK(!v.entries[1].pass);
    CHECK(v.entries[1].needed == 0);
    CHECK(v.entries[1].level == -1);
    CHECK(v.entries[2].name == "restriction@w");
    CHECK(v.entries[2].pass);

    CHECK_THROWS_AS(detection_check(inc, cov, 1, CoefficientSpec::z()), input_error);
    CHECK_THROWS_AS(detection_check(inc, cover_fixture("square-circle"), 1,
                                    CoefficientSpec::q()),
                    input_error);
  }
}
