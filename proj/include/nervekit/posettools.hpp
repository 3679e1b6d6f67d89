// Poset-level machinery: stars and cutsets, the cutset 2-complex and its
// fundamental-group abelianization, Quillen fibers and the graded fiber
// verifiers, coherence and joins, neighborhoods and essential chains, the
// fiberwise join construction, and the cover-detection criterion.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerves.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nervekit {

// Elements comparable to x (including x): the union of its up-set and
// down-set.
std::vector<std::string> star_elements(const Poset& p, const std::string& x);
Poset star(const Poset& p, const std::string& x);

// A set X cuts P when every chain extends by some member of X; equivalently
// every maximal chain meets X. The witness on failure is a maximal chain
// missing X.
struct CutsetReport {
  bool is_cutset = true;
  std::optional<std::vector<std::string>> witness;
};
CutsetReport cutset_check(const Poset& p, const std::vector<std::string>& x);

// Cover of the order complex of P by the order complexes of the stars of the
// members of X (full exactly when X cuts P).
IndexedCover star_cover(const Poset& p, const std::vector<std::string>& x);

// Components of the intersections of stars over X, as element sets ordered by
// inclusion; isomorphic to the component poset of the star cover.
struct GammaResult {
  Poset poset;  // tokens "g0", "g1", ...
  std::map<std::string, std::vector<std::string>> member_elements;
};
GammaResult gamma_poset(const Poset& p, const std::vector<std::string>& x);

// The cutset 2-complex: one vertex per member of X, one edge per component of
// a pairwise star intersection, one triangle per component of a triple star
// intersection, attached to the edges carrying that component.
struct CutsetComplex {
  std::vector<std::string> vertices;
  struct Edge {
    std::string a, b;  // a < b as tokens
    Vertex rep;        // least element of the component
    std::string token;
  };
  std::vector<Edge> edges;
  struct Triangle {
    std::string a, b, c;  // a < b < c as tokens
    Vertex rep;
    int e_ab = -1, e_bc = -1, e_ac = -1;  // indices into edges
    std::string token;
  };
  std::vector<Triangle> triangles;
};
// Requires P connected and X a cutset.
CutsetComplex r_complex(const Poset& p, const std::vector<std::string>& x);

// Fundamental-group presentation from a spanning forest: generators are the
// edges outside the forest, relators the triangle boundaries. tree_seed
// selects among deterministic spanning forests.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<long long>> relators;  // abelianized rows over generators
};
GroupPresentation pi1_presentation(const CutsetComplex& r, std::uint64_t tree_seed = 0);

struct AbelianizationResult {
  long long rank = 0;
  std::vector<la::BigInt> torsion;
};
AbelianizationResult pi1_abelianized(const CutsetComplex& r, std::uint64_t tree_seed = 0,
                                     Exec ex = Exec::Auto);

// Preimage of the up-set over q, as an induced subposet of the domain.
Poset quillen_fiber(const PosetMap& f, const std::string& q);

// Join of a subset: the unique minimum of its common upper bounds, when that
// minimum exists.
std::optional<std::string> poset_join(const Poset& q, const std::vector<std::string>& s);

// A finite poset is coherent when every bounded-above set of minimal elements
// has a join (a unique minimum among its upper bounds). The join table lists
// every nonempty bounded-above subset of the minimal elements.
struct CoherenceReport {
  bool coherent = true;
  std::vector<std::string> minimal;
  std::map<std::vector<std::string>, std::string> joins;
  std::optional<std::vector<std::string>> witness;  // bounded set with no join
};
CoherenceReport coherence(const Poset& q);

// Graded fiber criteria for a poset map, checked homologically.
//   Quillen: every fiber over an element must be n-acyclic; conclusion
//     (n+1)-acyclic map.
//   Copo: fibers over joins of k bounded-above minimal elements must be
//     (n-k+1)-acyclic; requires a coherent codomain; conclusion (n+1)-acyclic
//     map.
//   Achain: fibers over intersections of k distinct maximal chains must be
//     (n-k+1)-acyclic; conclusion (n+1)-acyclic map.
// A map is m-acyclic when it induces isomorphisms below degree m and a
// surjection in degree m; every map is m-acyclic for m < 0.
enum class FiberMode { Quillen, Copo, Achain };
FiberMode parse_fiber_mode(const std::string& s);
std::string fiber_mode_name(FiberMode m);

struct FiberEntry {
  std::string name;
  int needed = 0;    // acyclicity level demanded
  int level = 0;     // measured level, capped at needed
  bool pass = true;
  bool skipped = false;  // demanded level below -2: vacuous
};
struct FiberVerdict {
  FiberMode mode = FiberMode::Quillen;
  int n = 0;
  bool hypothesis_pass = true;
  bool conclusion_pass = true;
  bool pass = true;
  std::vector<FiberEntry> entries;
  InducedMapResult conclusion;
};
FiberVerdict verify_fiber(const PosetMap& f, FiberMode mode, int n, CoefficientSpec coeffs,
                          Exec ex = Exec::Auto);

// Neighborhood: elements comparable (or equal) to every member of S. The core
// of S collects the members of S comparable to all of S; S is essential when
// it equals the core of its neighborhood.
std::vector<std::string> neighborhood(const Poset& p, const std::vector<std::string>& s);
std::vector<std::string> core_of(const Poset& p, const std::vector<std::string>& s);
bool is_essential(const Poset& p, const std::vector<std::string>& s);

// All essential chains: the closure of the maximal chains under pairwise
// intersection (the empty chain appears exactly when no element is comparable
// to everything). The empty poset yields the empty chain alone.
std::vector<std::vector<std::string>> essential_chains(const Poset& p);

// Total poset of the fiberwise join: elements (p, q) with q in the fiber over
// p, tokens "p~q"; (p, q) <= (p', q') iff p = p' and q <= q' in the fiber, or
// p < p'. pi projects to the base. Fibers may be empty.
struct PqJoinResult {
  Poset total;
  PosetMap pi;  // total -> base
};
PqJoinResult pq_join(const Poset& base, const std::map<std::string, Poset>& fibers);

// Preimage of a subset of the base, as an induced subposet of the total.
Poset pq_preimage(const PqJoinResult& pq, const std::vector<std::string>& base_elements);

// Cover of the order complex of a poset by the order complexes of its maximal
// chains (index tokens: chain elements joined by '+'). Always full.
IndexedCover chain_cover(const Poset& p);

// Fiberwise join with a two-point discrete fiber over every element, covered
// by the preimages of the maximal chains of the base.
struct CovexResult {
  PqJoinResult pq;
  IndexedCover cover;  // of order_complex(pq.total), one member per maximal chain
};
CovexResult covex_cover(const Poset& base);

// Cutset verification: the fundamental-group abelianization of the cutset
// 2-complex must match integral H_1 of the order complex in rank and torsion.
// Requires a connected poset; a set that fails to cut is a verification
// failure (with the missed chain as witness), not an input error.
struct CutsetVerdict {
  bool is_cutset = false;
  std::optional<std::vector<std::string>> cutset_witness;
  long long rank_r = 0, rank_delta = 0;
  std::vector<la::BigInt> torsion_r, torsion_delta;
  bool pass = false;
};
CutsetVerdict verify_cutset(const Poset& p, const std::vector<std::string>& x,
                            std::uint64_t tree_seed = 0, Exec ex = Exec::Auto);

// Cover-detection criterion for a simplicial map into a covered complex: if
// the restriction over every k-fold member intersection is (n-k+1)-acyclic,
// the map itself is n-acyclic. Hypotheses and conclusion are both measured.
struct DetectionVerdict {
  int n = 0;
  bool hypothesis_pass = true;
  bool conclusion_pass = true;
  bool pass = true;
  std::vector<FiberEntry> entries;  // named by face, needed level as in the modes above
  InducedMapResult conclusion;
};
DetectionVerdict detection_check(const SimplicialMap& f, const IndexedCover& cov, int n,
                                 CoefficientSpec coeffs, Exec ex = Exec::Auto);

}  // namespace nervekit
