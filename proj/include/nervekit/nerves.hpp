// Nerve constructions on indexed covers of a simplicial complex: the nerve,
// the completed nerve (as a poset and as a truncated simplicial set), the
// Grothendieck-style model, the poset of intersection components, the eta
// comparison map, cover completion, and cover morphisms with their induced
// maps.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nervekit {

// A cover of a fixed ambient complex by subcomplexes, with a totally ordered
// index set. The same subcomplex may appear under several indices; indices
// matter for functoriality.
class IndexedCover {
 public:
  // Validates: distinct nonempty index tokens, every member a subcomplex of
  // ambient. Members may be empty.
  static IndexedCover make(SimplicialComplex ambient, std::vector<std::string> index_order,
                           std::vector<SimplicialComplex> members);

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::vector<std::string>& index_order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  int position_of(const std::string& index) const;  // -1 if absent
  const SimplicialComplex& member(const std::string& index) const;
  const SimplicialComplex& member_at(int pos) const { return members_[static_cast<std::size_t>(pos)]; }
  // True when the members' union equals the ambient complex.
  bool is_full() const;

 private:
  SimplicialComplex ambient_;
  std::vector<std::string> order_;
  std::vector<SimplicialComplex> members_;
  std::map<std::string, int> pos_;
};

// Memoized intersections over subsets of member positions (sorted, nonempty),
// plus their component decompositions.
class IntersectionCache {
 public:
  explicit IntersectionCache(const IndexedCover& cov) : cov_(&cov) {}
  const SimplicialComplex& intersection(const std::vector<int>& subset);
  const ComponentsResult& components(const std::vector<int>& subset);
  const IndexedCover& cover() const { return *cov_; }

 private:
  const IndexedCover* cov_;
  std::map<std::vector<int>, SimplicialComplex> inter_;
  std::map<std::vector<int>, ComponentsResult> comp_;
};

// Faces of the nerve: all nonempty index subsets with nonempty intersection,
// as sorted position lists in lexicographic order.
std::vector<std::vector<int>> nerve_faces(IntersectionCache& cache);

// The nerve as a simplicial complex on the index tokens.
SimplicialComplex nerve(const IndexedCover& cov);

// Element token for a pair (F, C): indices joined by '+', then '@', then the
// component representative.
std::string pair_token(const std::vector<std::string>& indices, const Vertex& rep);

// Completed nerve: poset of pairs (F, C) with F a nerve face and C a component
// of the intersection over F; (F, C) <= (F', C') iff F is a subset of F' and
// C' is contained in C.
struct CompletedNerve {
  Poset poset;
  // Tables keyed by element token.
  std::map<std::string, std::vector<std::string>> indices;
  std::map<std::string, Vertex> rep;
  std::map<std::string, SimplicialComplex> component;
};
CompletedNerve completed_nerve(const IndexedCover& cov, Exec ex = Exec::Auto);

// Truncated simplicial set model: nondegenerate k-cells are strictly
// increasing index tuples (in index_order position order) with a component of
// their intersection; faces delete an entry and push the component forward.
SimplicialSetTrunc completed_nerve_sset(const IndexedCover& cov, int max_dim,
                                        Exec ex = Exec::Auto);

// Model built independently from the nerve and the component pushforward
// functor: pairs (F, x) with (F, x) <= (G, y) iff G is a subset of F and the
// component of x in the intersection over G is y. Uses the same element
// tokens as the completed nerve; equals opposite(completed_nerve(cov).poset).
Poset grothendieck_model(const IndexedCover& cov);

// Poset of distinct intersection components, ordered by subcomplex inclusion,
// with q sending a completed-nerve pair (in the opposite order) to its
// component.
struct VbarResult {
  Poset poset;                                     // tokens "c0", "c1", ...
  std::map<std::string, SimplicialComplex> member;  // token -> component subcomplex
  PosetMap q;                                       // opposite(completed nerve) -> poset
};
VbarResult vbar(const IndexedCover& cov);

// The comparison map eta for a full cover: eta(sigma) = (indices of all
// members containing sigma, component of sigma in their intersection),
// monotone from the opposite face poset of the ambient complex.
struct EtaResult {
  CompletedNerve target;
  PosetMap poset_map;         // opposite(face_poset(ambient)) -> target.poset
  SimplicialMap complex_map;  // barycentric subdivision -> order complex of target
  std::map<std::string, Simplex> simplex_of;  // face-poset token -> ambient simplex
};
EtaResult eta_map(const IndexedCover& cov);

// Simplices sigma with eta(sigma) above the given element; equals that
// element's component exactly.
SimplicialComplex eta_quillen_fiber(const EtaResult& eta, const std::string& element);

// Graded acyclicity hypotheses: for each nerve face F with 1 <= |F| <= n,
// every component of the intersection over F must be (n - |F| + 1)-acyclic.
struct HypothesisFailure {
  std::vector<std::string> indices;
  Vertex component_rep;
  int needed = 0;
  std::optional<int> witness_degree;
};
struct HypothesisReport {
  int n = 0;
  bool pass = true;
  int checked = 0;
  std::vector<HypothesisFailure> failures;
};
HypothesisReport hypothesis_check(const IndexedCover& cov, int n, CoefficientSpec coeffs,
                                  Exec ex = Exec::Auto);

// Cover completion: per simplex sigma, F_sigma = indices of members containing
// sigma and C_sigma = component of sigma in their intersection. vhat collects
// the distinct C_sigma under inclusion; vtilde the distinct F_sigma under
// reverse inclusion. c maps vtilde onto vhat by intersection; it is only
// available when every such intersection is connected, otherwise a witness
// simplex is reported.
struct CompletionResult {
  Poset vhat;                                       // tokens "c0", "c1", ...
  std::map<std::string, SimplicialComplex> vhat_member;
  Poset vtilde;                                     // tokens: indices joined by '+'
  std::map<std::string, std::vector<std::string>> vtilde_indices;
  bool c_available = false;
  std::optional<PosetMap> c;                        // vtilde -> vhat
  std::optional<Simplex> witness;                   // sigma with disconnected intersection
};
CompletionResult completion(const IndexedCover& cov);

// The completion as an indexed cover of the same ambient complex (index
// tokens are the vhat element tokens).
IndexedCover completion_cover(const CompletionResult& comp, const IndexedCover& cov);

// Completeness: every nerve-face intersection is a union of members.
struct CompletenessReport {
  bool complete = true;
  std::optional<std::vector<std::string>> witness;  // failing face (index tokens)
};
CompletenessReport is_complete(const IndexedCover& cov);

// Morphism of covers: a simplicial map of ambient complexes together with an
// index map carrying each member into the member over its image index.
class CoverMorphism {
 public:
  static CoverMorphism make(const IndexedCover& dom, const IndexedCover& cod, SimplicialMap f,
                            std::map<std::string, std::string> phi);
  const IndexedCover& domain() const { return *dom_; }
  const IndexedCover& codomain() const { return *cod_; }
  const SimplicialMap& space_map() const { return f_; }
  const std::map<std::string, std::string>& index_map() const { return phi_; }
  // phi bijective and preimages of nerve faces are nerve faces.
  bool is_equivalence() const { return equivalence_; }

 private:
  CoverMorphism() = default;
  const IndexedCover* dom_ = nullptr;
  const IndexedCover* cod_ = nullptr;
  SimplicialMap f_;
  std::map<std::string, std::string> phi_;
  bool equivalence_ = false;
};

// Uniform comparison-map verification: when every component of every
// nerve-face intersection is n-acyclic, the comparison map must induce
// homology isomorphisms through degree n and a surjection in degree n+1 over
// the given field. The fiber identity (preimage of an up-set = recorded
// component) is checked unconditionally; the observed connectivity of the
// induced map is reported as data either way.
struct EtaVerdict {
  int n = 0;
  bool hypothesis_pass = false;
  bool fibers_pass = false;
  bool conclusion_checked = false;
  bool conclusion_pass = false;
  bool pass = false;
  std::vector<HypothesisFailure> failures;  // components below n-acyclic
  InducedMapResult induced;                 // through degree max(0, n+1)
  int observed_connectivity = -1;  // largest m <= n+1 with iso below m, epi at m
};
EtaVerdict verify_eta(const IndexedCover& cov, int n, CoefficientSpec field, Exec ex = Exec::Auto);

// Completion verification: the completed cover must always be complete; when
// every member of the completion is n-acyclic, the member poset's order
// complex must match the ambient homology through degree n with the
// degree-(n+1) surjection conditions.
struct CompletionVerdict {
  int n = 0;
  bool complete_pass = false;
  bool hypothesis_pass = false;
  bool conclusion_checked = false;
  bool conclusion_pass = false;
  bool pass = false;
  bool c_available = false;              // reported as data, not a failure
  std::optional<Simplex> c_witness;
  std::vector<std::pair<std::string, int>> member_levels;  // vhat token -> level, capped at n
  std::vector<std::string> conclusion_failures;
  std::vector<long long> betti_ambient, betti_vhat;  // through degree n+1
};
CompletionVerdict verify_completion(const IndexedCover& cov, int n, CoefficientSpec coeffs,
                                    Exec ex = Exec::Auto);

// Induced maps on the nerve (F -> phi(F)) and the completed nerve
// ((F, C) -> (phi(F), [f(C)])). pi0_bijection records whether, for every
// nerve face F of the domain, pushing components of the intersection over F
// forward into the intersection over phi(F) is bijective; together with
// equivalence this forces the completed-nerve map to be an order isomorphism.
struct InducedNerveMaps {
  SimplicialMap nerve_map;
  PosetMap completed_map;
  bool equivalence = false;
  bool pi0_bijection = false;
  bool order_isomorphism = false;
};
InducedNerveMaps induced_nerve_maps(const CoverMorphism& m);

}  // namespace nervekit
