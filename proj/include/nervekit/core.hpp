// Core combinatorial types: finite simplicial complexes, finite posets, and
// the structure-preserving maps between them. Everything here is a value type
// with deterministic, sorted internal order so that downstream output is
// reproducible run to run.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nervekit {

// Malformed input (bad tokens, cyclic relations, maps that do not preserve
// structure, members that are not subcomplexes, ...). The CLI maps this to
// exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex tokens are nonempty strings without whitespace; they sort
// lexicographically (byte order) everywhere.
using Vertex = std::string;

// A simplex is a strictly sorted list of distinct vertices. Sortedness fixes
// the orientation used by boundary matrices.
using Simplex = std::vector<Vertex>;

bool is_valid_token(const std::string& s);
void require_valid_token(const std::string& s, const char* what);

// Sorts and validates; throws input_error on duplicates or bad tokens.
Simplex make_simplex(std::vector<Vertex> verts);

// Token form "v0.v1.v2" used when simplices become poset elements.
std::string simplex_token(const Simplex& s);

class SimplicialComplex;

struct ComponentsResult {
  // One entry per connected component, sorted by representative.
  std::vector<SimplicialComplex> subcomplexes;
  std::vector<Vertex> reps;          // lexicographically least vertex per class
  std::map<Vertex, int> vertex_class;
};

// Finite abstract simplicial complex stored by its facets (maximal simplices).
// The empty complex is legal. Isolated vertices are singleton facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Prunes non-maximal entries; use for internally computed facet lists.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);
  // Rejects nested or duplicate facets; use for external input.
  static SimplicialComplex from_facets_strict(std::vector<Simplex> facets);

  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool empty() const { return facets_.empty(); }
  // -1 for the empty complex.
  int dim() const;
  std::size_t facet_count() const { return facets_.size(); }

  bool has_vertex(const Vertex& v) const;
  bool contains(const Simplex& s) const;

  // All simplices, sorted lexicographically (sizes mixed).
  std::vector<Simplex> all_simplices() const;
  // k-dimensional simplices (k+1 vertices), sorted lexicographically.
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::size_t simplex_count() const;

  ComponentsResult components() const;
  bool connected() const;  // empty complex counts as not connected

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }
  // Lexicographic on facet lists; usable as a map key.
  bool operator<(const SimplicialComplex& o) const { return facets_ < o.facets_; }

 private:
  std::vector<Simplex> facets_;   // sorted, mutually incomparable
  std::vector<Vertex> vertices_;  // sorted union of facet vertices
  void rebuild_vertices();
};

// Subcomplex lattice operations.
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& of);
// Cone with apex over a base complex; apex must not occur in the base.
SimplicialComplex cone(const Vertex& apex, const SimplicialComplex& base);

// Finite poset, stored as a transitively closed strict order on sorted
// element tokens.
class Poset {
 public:
  Poset() = default;

  // relations are generators a < b; the transitive closure is computed here.
  // Cycles (including a < a) are a hard input error naming one cycle.
  static Poset from_relations(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& relations);
  // lt must already be a strict partial order (checked).
  static Poset from_less_matrix(std::vector<std::string> elements,
                                std::vector<std::vector<uint8_t>> lt);

  const std::vector<std::string>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool has_element(const std::string& e) const;
  int index_of(const std::string& e) const;  // -1 if absent

  bool less(const std::string& a, const std::string& b) const;
  bool leq(const std::string& a, const std::string& b) const;
  bool comparable(const std::string& a, const std::string& b) const;  // a==b counts
  bool less_by_index(int a, int b) const { return lt_[a][b] != 0; }

  // Generating pairs of the order (cover relations a <: b), sorted.
  std::vector<std::pair<std::string, std::string>> cover_relations() const;
  // All pairs a < b, sorted.
  std::vector<std::pair<std::string, std::string>> all_relations() const;

  std::vector<std::string> minimal_elements() const;
  std::vector<std::string> maximal_elements() const;

  bool operator==(const Poset& o) const { return elems_ == o.elems_ && lt_ == o.lt_; }
  bool operator!=(const Poset& o) const { return !(*this == o); }

 private:
  std::vector<std::string> elems_;        // sorted
  std::map<std::string, int> index_;
  std::vector<std::vector<uint8_t>> lt_;  // lt_[i][j]: elems_[i] < elems_[j]
};

Poset opposite(const Poset& p);
Poset induced_subposet(const Poset& p, std::vector<std::string> subset);
// Principal up/down sets, inclusive; element must exist.
std::vector<std::string> upset(const Poset& p, const std::string& x);
std::vector<std::string> downset(const Poset& p, const std::string& x);
// Comparability components; each class sorted, classes ordered by least element.
std::vector<std::vector<std::string>> poset_components(const Poset& p);
bool poset_connected(const Poset& p);  // empty poset counts as not connected

// Maximal chains (as sorted-by-order element lists, ascending). Enumerated by
// depth-first extension along cover relations in lexicographic order; empty
// poset yields no chains.
std::vector<std::vector<std::string>> maximal_chains(const Poset& p);
bool is_chain(const Poset& p, const std::vector<std::string>& s);

// Order complex: vertices are the elements, simplices the nonempty chains,
// facets the maximal chains.
SimplicialComplex order_complex(const Poset& p);
// Face poset: elements are simplex tokens ("a.b.c"), ordered by face inclusion.
Poset face_poset(const SimplicialComplex& k);
// order_complex(face_poset(k)).
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

// Monotone map between posets; total on the domain, validated at construction.
class PosetMap {
 public:
  // Default: the unique map between empty posets.
  PosetMap() = default;
  static PosetMap make(Poset domain, Poset codomain, std::map<std::string, std::string> map);
  const Poset& domain() const { return dom_; }
  const Poset& codomain() const { return cod_; }
  const std::map<std::string, std::string>& mapping() const { return map_; }
  const std::string& operator()(const std::string& e) const;

 private:
  Poset dom_, cod_;
  std::map<std::string, std::string> map_;
};

// g after f; f's codomain must equal g's domain.
PosetMap compose(const PosetMap& g, const PosetMap& f);

// Simplicial map given by a vertex map; every facet image must be a simplex of
// the codomain (hence every simplex image is).
class SimplicialMap {
 public:
  // Default: the unique map between empty complexes.
  SimplicialMap() = default;
  static SimplicialMap make(SimplicialComplex domain, SimplicialComplex codomain,
                            std::map<Vertex, Vertex> vertex_map);
  const SimplicialComplex& domain() const { return dom_; }
  const SimplicialComplex& codomain() const { return cod_; }
  const std::map<Vertex, Vertex>& vertex_map() const { return vmap_; }
  const Vertex& operator()(const Vertex& v) const;
  // Sorted image simplex (duplicates collapsed).
  Simplex image(const Simplex& s) const;

 private:
  SimplicialComplex dom_, cod_;
  std::map<Vertex, Vertex> vmap_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
// Functor Delta applied to a poset map: order complexes and the same
// underlying vertex assignment.
SimplicialMap order_complex_map(const PosetMap& f);

// Truncated simplicial set: cells listed per degree 0..max_dim with tokens,
// plus face maps. faces[k][c][i] is the index of d_i of cell c in degree k-1,
// or kDegenerateFace when that face is degenerate (dropped by normalization).
struct SimplicialSetTrunc {
  static constexpr int kDegenerateFace = -1;
  int max_dim = -1;
  std::vector<std::vector<std::string>> cells;        // per degree, sorted
  std::vector<std::vector<std::vector<int>>> faces;   // faces[k]: per cell, k+1 entries

  std::size_t cell_count(int k) const { return cells[static_cast<std::size_t>(k)].size(); }
  // Checks shape, sortedness, index bounds, the simplicial identity
  // d_i d_j = d_{j-1} d_i (i < j) where both sides are nondegenerate, and that
  // degree-1 cells never have degenerate faces. Throws input_error on failure.
  void validate() const;
};

}  // namespace nervekit
