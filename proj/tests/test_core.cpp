#include "doctest.h"
#include "nervekit/core.hpp"

#include <random>

using namespace nervekit;

static SimplicialComplex cx(std::vector<Simplex> facets) {
  return SimplicialComplex::from_facets(std::move(facets));
}

TEST_SUITE_BEGIN("core");

TEST_CASE("tokens and simplices") {
  CHECK(is_valid_token("a"));
  CHECK(is_valid_token("e1+e2@x"));
  CHECK_FALSE(is_valid_token(""));
  CHECK_FALSE(is_valid_token("a b"));
  CHECK_FALSE(is_valid_token("a\t"));
  CHECK(make_simplex({"c", "a", "b"}) == Simplex{"a", "b", "c"});
  CHECK_THROWS_AS(make_simplex({"a", "a"}), input_error);
  CHECK(simplex_token({"a", "b"}) == "a.b");
}

TEST_CASE("complex basics and facet maximalization") {
  auto k = cx({{"a", "b"}, {"b", "c"}, {"a"}, {"b", "c"}});
  CHECK(k.facets() == std::vector<Simplex>{{"a", "b"}, {"b", "c"}});
  CHECK(k.vertices() == std::vector<Vertex>{"a", "b", "c"});
  CHECK(k.dim() == 1);
  CHECK(k.contains({"b"}));
  CHECK(k.contains({"a", "b"}));
  CHECK_FALSE(k.contains({"a", "c"}));
  CHECK_FALSE(k.contains({}));
  CHECK(k.simplex_count() == 5);
  CHECK_THROWS_AS(SimplicialComplex::from_facets_strict({{"a", "b"}, {"a"}}), input_error);

  SimplicialComplex empty;
  CHECK(empty.empty());
  CHECK(empty.dim() == -1);
  CHECK(empty.simplex_count() == 0);
  CHECK_FALSE(empty.connected());
}

TEST_CASE("simplex enumeration is sorted per degree") {
  auto k = cx({{"a", "b", "c"}, {"b", "c", "d"}});
  auto edges = k.simplices_of_dim(1);
  CHECK(edges == std::vector<Simplex>{{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(k.simplices_of_dim(2).size() == 2);
  CHECK(k.simplices_of_dim(3).empty());
}

TEST_CASE("components with least representatives") {
  auto k = cx({{"a", "b"}, {"c", "d"}, {"e"}});
  auto comp = k.components();
  REQUIRE(comp.reps == std::vector<Vertex>{"a", "c", "e"});
  CHECK(comp.subcomplexes[0] == cx({{"a", "b"}}));
  CHECK(comp.subcomplexes[1] == cx({{"c", "d"}}));
  CHECK(comp.vertex_class.at("d") == 1);
  CHECK_FALSE(k.connected());
  CHECK(cx({{"a", "b"}, {"b", "c"}}).connected());
}

TEST_CASE("subcomplex lattice laws on random subcomplexes") {
  std::mt19937_64 rng(7);
  auto ambient = cx({{"a", "b", "c"}, {"c", "d", "e"}, {"e", "f"}, {"a", "f"}, {"g"}});
  auto all = ambient.all_simplices();
  for (int trial = 0; trial < 30; ++trial) {
    auto pick = [&]() {
      std::vector<Simplex> fs;
      for (const auto& s : all)
        if (rng() % 3 == 0) fs.push_back(s);
      return SimplicialComplex::from_facets(fs);
    };
    auto a = pick(), b = pick();
    auto meet = intersect(a, b);
    auto join = unite(a, b);
    CHECK(is_subcomplex(meet, a));
    CHECK(is_subcomplex(meet, b));
    CHECK(is_subcomplex(a, join));
    CHECK(is_subcomplex(b, join));
    CHECK(unite(meet, b) == b);
    CHECK(intersect(join, a) == a);
    CHECK(is_subcomplex(a, ambient));
  }
}

TEST_CASE("cone") {
  auto base = cx({{"a", "b"}, {"b", "c"}});
  auto c = cone("z", base);
  CHECK(c.contains({"a", "b", "z"}));
  CHECK(c.dim() == 2);
  CHECK(c.connected());
  CHECK(cone("z", SimplicialComplex{}) == cx({{"z"}}));
  CHECK_THROWS_AS(cone("a", base), input_error);
}

TEST_CASE("poset construction, closure, cycles") {
  auto p = Poset::from_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.less("a", "c"));  // transitive closure
  CHECK_FALSE(p.less("c", "a"));
  CHECK(p.leq("a", "a"));
  CHECK(p.comparable("a", "c"));
  CHECK_FALSE(p.comparable("a", "d"));
  CHECK(p.minimal_elements() == std::vector<std::string>{"a", "d"});
  CHECK(p.maximal_elements() == std::vector<std::string>{"c", "d"});
  CHECK(p.cover_relations() ==
        std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
  CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), input_error);
  CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "a"}}), input_error);
  CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "x"}}), input_error);
  CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), input_error);
}

TEST_CASE("opposite and induced subposet") {
  auto p = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto op = opposite(p);
  CHECK(op.less("c", "a"));
  CHECK_FALSE(op.less("a", "c"));
  CHECK(opposite(op) == p);
  auto sub = induced_subposet(p, {"a", "c"});
  CHECK(sub.less("a", "c"));
  CHECK(sub.size() == 2);
}

TEST_CASE("upset, downset, components of posets") {
  auto p = Poset::from_relations({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"a", "c"}, {"x", "y"}});
  CHECK(upset(p, "a") == std::vector<std::string>{"a", "b", "c"});
  CHECK(downset(p, "b") == std::vector<std::string>{"a", "b"});
  auto comps = poset_components(p);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::string>{"a", "b", "c"});
  CHECK(comps[1] == std::vector<std::string>{"x", "y"});
  CHECK_FALSE(poset_connected(p));
  CHECK_FALSE(poset_connected(Poset{}));
}

TEST_CASE("maximal chains and order complex") {
  // square-circle shape: two minima below two maxima
  auto p = Poset::from_relations({"a", "b", "c", "d"},
                                 {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  auto chains = maximal_chains(p);
  CHECK(chains == std::vector<std::vector<std::string>>{
                      {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  auto oc = order_complex(p);
  CHECK(oc.vertices().size() == 4);
  CHECK(oc.facets().size() == 4);
  CHECK(oc.dim() == 1);
  CHECK(is_chain(p, {"a", "c"}));
  CHECK_FALSE(is_chain(p, {"c", "d"}));
  CHECK(is_chain(p, {}));
  CHECK(maximal_chains(Poset{}).empty());
}

TEST_CASE("face poset and barycentric subdivision") {
  auto boundary_triangle = cx({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto fp = face_poset(boundary_triangle);
  CHECK(fp.size() == 6);
  CHECK(fp.less("a", "a.b"));
  CHECK_FALSE(fp.less("a.b", "a"));
  auto sd = barycentric_subdivision(boundary_triangle);
  CHECK(sd.vertices().size() == 6);
  CHECK(sd.facets().size() == 6);
  CHECK(sd.dim() == 1);
  // subdivision of a full triangle: 7 vertices, 6 triangles
  auto full = cx({{"a", "b", "c"}});
  auto sd2 = barycentric_subdivision(full);
  CHECK(sd2.vertices().size() == 7);
  CHECK(sd2.facets().size() == 6);
  CHECK(sd2.dim() == 2);
}

TEST_CASE("poset maps validate and compose") {
  auto p = Poset::from_relations({"a", "b"}, {{"a", "b"}});
  auto q = Poset::from_relations({"x", "y"}, {{"x", "y"}});
  auto f = PosetMap::make(p, q, {{"a", "x"}, {"b", "y"}});
  CHECK(f("a") == "x");
  CHECK_THROWS_AS(PosetMap::make(p, q, {{"a", "y"}, {"b", "x"}}), input_error);
  CHECK_THROWS_AS(PosetMap::make(p, q, {{"a", "x"}}), input_error);
  auto r = Poset::from_relations({"u", "v"}, {{"u", "v"}});
  auto g = PosetMap::make(q, r, {{"x", "u"}, {"y", "v"}});
  CHECK(compose(g, f)("b") == "v");
  // constant maps are monotone
  auto cns = PosetMap::make(p, q, {{"a", "x"}, {"b", "x"}});
  CHECK(cns("b") == "x");
}

TEST_CASE("simplicial maps validate; order complex functor") {
  auto dom = cx({{"a", "b"}, {"b", "c"}});
  auto codG = cx({{"x", "y"}});
  auto f = SimplicialMap::make(dom, codG, {{"a", "x"}, {"b", "y"}, {"c", "x"}});
  CHECK(f.image({"a", "b"}) == Simplex{"x", "y"});
  CHECK(f.image({"a", "c"}) == Simplex{"x"});  // collapse
  // {a,b} -> {x,x} fine; but a path cannot map onto a discrete codomain
  auto disc = cx({{"x"}, {"y"}});
  CHECK_THROWS_AS(SimplicialMap::make(dom, disc, {{"a", "x"}, {"b", "y"}, {"c", "x"}}),
                  input_error);
  auto p = Poset::from_relations({"a", "b"}, {{"a", "b"}});
  auto q = Poset::from_relations({"x", "y"}, {{"x", "y"}});
  auto pf = PosetMap::make(p, q, {{"a", "x"}, {"b", "y"}});
  auto sf = order_complex_map(pf);
  CHECK(sf.domain() == order_complex(p));
  CHECK(sf.image({"a", "b"}) == Simplex{"x", "y"});
}

TEST_CASE("components of complexes match components of face posets") {
  std::mt19937_64 rng(11);
  std::vector<Vertex> pool = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Simplex> fs;
    int nf = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < nf; ++i) {
      std::set<Vertex> s;
      int sz = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < sz; ++j) s.insert(pool[rng() % pool.size()]);
      fs.emplace_back(s.begin(), s.end());
    }
    auto k = SimplicialComplex::from_facets(fs);
    CHECK(k.components().reps.size() == poset_components(face_poset(k)).size());
  }
}

TEST_CASE("simplicial set validation") {
  // two 0-cells, one 1-cell with both faces on cell 0
  SimplicialSetTrunc s;
  s.max_dim = 1;
  s.cells = {{"p", "q"}, {"e"}};
  s.faces = {{{}, {}}, {{1, 0}}};
  CHECK_NOTHROW(s.validate());
  s.faces[1][0] = {SimplicialSetTrunc::kDegenerateFace, 0};
  CHECK_THROWS_AS(s.validate(), input_error);  // degree-1 faces never degenerate
  s.faces[1][0] = {5, 0};
  CHECK_THROWS_AS(s.validate(), input_error);
}

TEST_SUITE_END();
