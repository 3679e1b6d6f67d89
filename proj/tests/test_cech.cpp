#include "doctest.h"
#include "nervekit/cech.hpp"
#include "nervekit/fixtures.hpp"
#include "nervekit/gen.hpp"

#include <algorithm>

using namespace nervekit;

namespace {

SimplicialComplex cx(std::vector<Simplex> facets) {
  return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<long long> sset_betti(const SimplicialSetTrunc& s, CoefficientSpec coeffs) {
  HomologyResult h = homology(normalized_chain_complex(s, s.max_dim), coeffs);
  return std::vector<long long>(h.betti.begin(), h.betti.begin() + h.degree_ceiling + 1);
}

std::vector<long long> complex_betti(const SimplicialComplex& k, int maxdeg) {
  return homology_of_complex(k, maxdeg, CoefficientSpec::q()).betti;
}

IndexedCover reordered(const IndexedCover& cov, const std::vector<int>& perm) {
  std::vector<std::string> idx;
  std::vector<SimplicialComplex> members;
  for (int p : perm) {
    idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    members.push_back(cov.member_at(p));
  }
  return IndexedCover::make(cov.ambient(), std::move(idx), std::move(members));
}

}  // namespace

TEST_SUITE_BEGIN("cech");

TEST_CASE("levels of a singleton cover") {
  SimplicialComplex circle = cx({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  IndexedCover cov = IndexedCover::make(circle, {"all"}, {circle});
  for (int k = 0; k <= 3; ++k) {
    CechLevel lvl = cech_level(cov, k);
    REQUIRE(lvl.cells.size() == 1);
    CHECK(lvl.cells[0].tuple == std::vector<std::string>(static_cast<std::size_t>(k) + 1, "all"));
    CHECK(lvl.cells[0].intersection == circle);
  }
  SimplicialSetTrunc s = cech_delta(cov, 3);
  s.validate();
  CHECK(s.cell_count(0) == 1);
  CHECK(s.cell_count(1) == 0);
  CHECK(s.cell_count(2) == 0);
}

TEST_CASE("levels of the hollow triangle") {
  IndexedCover cov = fixtures::cover_fixture("hollow-triangle");
  CHECK(cech_level(cov, 0).cells.size() == 3);
  // 3 constant pairs plus 6 ordered mixed pairs, all with nonempty overlap.
  CechLevel lvl1 = cech_level(cov, 1);
  CHECK(lvl1.cells.size() == 9);
  // The triple intersection is empty, so no tuple may use all three indices.
  for (const CechLevel::Cell& c : cech_level(cov, 2).cells) {
    std::vector<std::string> support = c.tuple;
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    CHECK(support.size() <= 2);
  }
  std::vector<CechLevel> all = cech_levels(cov, 2);
  REQUIRE(all.size() == 3);
  CHECK(all[1].cells.size() == 9);
}

TEST_CASE("two members with connected overlap alternate forever") {
  SimplicialComplex path = cx({{"a", "b"}, {"b", "c"}});
  IndexedCover cov =
      IndexedCover::make(path, {"u", "w"}, {cx({{"a", "b"}}), cx({{"b", "c"}})});
  SimplicialSetTrunc s = cech_delta(cov, 2);
  s.validate();
  CHECK(s.cell_count(0) == 2);
  CHECK(s.cell_count(1) == 2);
  CHECK(s.cell_count(2) == 2);
  // A path is contractible and so is the component model.
  CHECK(sset_betti(s, CoefficientSpec::q()) == std::vector<long long>{1, 0});
}

TEST_CASE("degenerate faces are marked") {
  IndexedCover cov = fixtures::cover_fixture("square-circle");
  SimplicialSetTrunc s = cech_delta(cov, 2);
  s.validate();
  // Any 2-cell u,w,u loses its middle entry into a degeneracy.
  bool found = false;
  for (const auto& fc : s.faces[2])
    for (int f : fc)
      if (f == SimplicialSetTrunc::kDegenerateFace) found = true;
  CHECK(found);
  // Degree-1 faces are never degenerate.
  for (const auto& fc : s.faces[1])
    for (int f : fc) CHECK(f != SimplicialSetTrunc::kDegenerateFace);
}

TEST_CASE("component model of the square-circle cover is a circle") {
  IndexedCover cov = fixtures::cover_fixture("square-circle");
  SimplicialSetTrunc s = cech_delta(cov, 2);
  std::vector<long long> b = sset_betti(s, CoefficientSpec::q());
  CHECK(b == std::vector<long long>{1, 1});
}

TEST_CASE("component model always matches the completed nerve") {
  for (const std::string name : {"fig1", "square-circle", "hollow-triangle", "chain-covex"}) {
    IndexedCover cov = fixtures::cover_fixture(name);
    SimplicialSetTrunc s = cech_delta(cov, 3);
    s.validate();
    std::vector<long long> left = sset_betti(s, CoefficientSpec::q());
    SimplicialComplex delta = order_complex(completed_nerve(cov).poset);
    std::vector<long long> right = complex_betti(delta, 2);
    CHECK(left == right);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    IndexedCover cov = gen::random_cover(seed, 8, 8, 3, 4);
    SimplicialSetTrunc s = cech_delta(cov, 3);
    std::vector<long long> left = sset_betti(s, CoefficientSpec::q());
    std::vector<long long> right = complex_betti(order_complex(completed_nerve(cov).poset), 2);
    CHECK(left == right);
  }
}

TEST_CASE("member count bounds the nondegenerate cells") {
  IndexedCover cov = fixtures::cover_fixture("fig1");
  SimplicialSetTrunc s = cech_delta(cov, 3);
  long long maxcomp = 1;
  IntersectionCache cache(cov);
  for (const std::vector<int>& f : nerve_faces(cache))
    maxcomp = std::max(maxcomp,
                       static_cast<long long>(cache.components(f).subcomplexes.size()));
  const long long m = static_cast<long long>(cov.size());
  for (int k = 0; k <= 3; ++k) {
    long long bound = m * maxcomp;
    for (int t = 0; t < k; ++t) bound *= m - 1;
    CHECK(static_cast<long long>(s.cell_count(k)) <= bound);
  }
}

TEST_CASE("reordering the index set changes nothing homological") {
  IndexedCover sq = fixtures::cover_fixture("square-circle");
  IndexedCover sq_r = reordered(sq, {1, 0});
  CHECK(sset_betti(cech_delta(sq, 2), CoefficientSpec::q()) ==
        sset_betti(cech_delta(sq_r, 2), CoefficientSpec::q()));

  IndexedCover ht = fixtures::cover_fixture("hollow-triangle");
  IndexedCover ht_r = reordered(ht, {2, 0, 1});
  CHECK(sset_betti(cech_delta(ht, 3), CoefficientSpec::q()) ==
        sset_betti(cech_delta(ht_r, 3), CoefficientSpec::q()));
  CHECK(sset_betti(completed_nerve_sset(ht, 2), CoefficientSpec::q()) ==
        sset_betti(completed_nerve_sset(ht_r, 2), CoefficientSpec::q()));

  IndexedCover fig = fixtures::cover_fixture("fig1");
  IndexedCover fig_r = reordered(fig, {4, 2, 0, 3, 1});
  CHECK(sset_betti(cech_delta(fig, 3), CoefficientSpec::q()) ==
        sset_betti(cech_delta(fig_r, 3), CoefficientSpec::q()));
}

TEST_CASE("levels satisfy the fiber product identity") {
  for (const std::string name : {"square-circle", "hollow-triangle"}) {
    IndexedCover cov = fixtures::cover_fixture(name);
    for (int n = 1; n <= 3; ++n) {
      FiberProductReport rep = cech_fiber_product_check(cov, n);
      CHECK(rep.pass);
      CHECK(rep.cell_count == rep.pair_count);
    }
  }
  FiberProductReport fig = cech_fiber_product_check(fixtures::cover_fixture("fig1"), 2);
  CHECK(fig.pass);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    FiberProductReport rep =
        cech_fiber_product_check(gen::random_cover(seed, 8, 8, 3, 4), 2);
    CHECK(rep.pass);
  }
}

TEST_CASE("serial and parallel construction agree") {
  IndexedCover fig = fixtures::cover_fixture("fig1");
  SimplicialSetTrunc a = cech_delta(fig, 3, Exec::Serial);
  SimplicialSetTrunc b = cech_delta(fig, 3, Exec::Parallel);
  CHECK(a.cells == b.cells);
  CHECK(a.faces == b.faces);
}

TEST_CASE("nerve theorem verification") {
  SUBCASE("hollow triangle at n = 1") {
    NerveTheoremVerdict v =
        verify_nerve_theorem(fixtures::cover_fixture("hollow-triangle"), 1, CoefficientSpec::q());
    CHECK(v.hypothesis_pass);
    CHECK(v.conclusion_checked);
    CHECK(v.conclusion_pass);
    CHECK(v.pass);
    CHECK(v.betti_ambient == std::vector<long long>{1, 1, 0});
    CHECK(v.betti_completed == std::vector<long long>{1, 1, 0});
    CHECK(v.betti_cech == std::vector<long long>{1, 1, 0});
  }

  SUBCASE("fig1 passes at n = 1") {
    NerveTheoremVerdict v =
        verify_nerve_theorem(fixtures::cover_fixture("fig1"), 1, CoefficientSpec::q());
    CHECK(v.pass);
    // Degree-2 surjection condition: 2 >= 1.
    CHECK(v.betti_ambient == std::vector<long long>{1, 0, 2});
    CHECK(v.betti_completed == std::vector<long long>{1, 0, 1});
  }

  SUBCASE("fig1 fails at n = 2 on the equator") {
    NerveTheoremVerdict v =
        verify_nerve_theorem(fixtures::cover_fixture("fig1"), 2, CoefficientSpec::q());
    CHECK_FALSE(v.hypothesis_pass);
    CHECK_FALSE(v.conclusion_checked);
    CHECK_FALSE(v.pass);
    REQUIRE(v.hypotheses.failures.size() == 1);
    CHECK(v.hypotheses.failures[0].indices == std::vector<std::string>{"Dminus", "Dplus"});
  }

  SUBCASE("square-circle passes at n = 2 with split components") {
    NerveTheoremVerdict v =
        verify_nerve_theorem(fixtures::cover_fixture("square-circle"), 2, CoefficientSpec::q());
    CHECK(v.pass);
    CHECK(v.betti_ambient == std::vector<long long>{1, 1, 0, 0});
    CHECK(v.betti_cech == std::vector<long long>{1, 1, 0, 0});
  }

  SUBCASE("integer coefficients work too") {
    NerveTheoremVerdict v =
        verify_nerve_theorem(fixtures::cover_fixture("hollow-triangle"), 1, CoefficientSpec::z());
    CHECK(v.pass);
  }

  SUBCASE("partial covers are rejected") {
    SimplicialComplex circle = cx({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    IndexedCover partial = IndexedCover::make(circle, {"u"}, {cx({{"a", "b"}})});
    CHECK_THROWS_AS(verify_nerve_theorem(partial, 1, CoefficientSpec::q()), input_error);
  }
}

TEST_SUITE_END();
