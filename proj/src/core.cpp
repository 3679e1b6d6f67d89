#include "nervekit/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nervekit {

bool is_valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (std::isspace(c)) return false;
  return true;
}

void require_valid_token(const std::string& s, const char* what) {
  if (!is_valid_token(s))
    throw input_error(std::string(what) + ": invalid token \"" + s + "\" (must be nonempty, no whitespace)");
}

Simplex make_simplex(std::vector<Vertex> verts) {
  for (const auto& v : verts) require_valid_token(v, "simplex vertex");
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw input_error("simplex has a repeated vertex");
  return verts;
}

std::string simplex_token(const Simplex& s) {
  std::string t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) t += '.';
    t += s[i];
  }
  return t;
}

// --- SimplicialComplex ---------------------------------------------------

void SimplicialComplex::rebuild_vertices() {
  std::set<Vertex> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  vertices_.assign(vs.begin(), vs.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  for (auto& f : facets) f = make_simplex(std::move(f));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // drop entries contained in another facet
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets.size() && !dominated; ++j) {
      if (i == j || facets[j].size() <= facets[i].size()) continue;
      dominated = std::includes(facets[j].begin(), facets[j].end(),
                                facets[i].begin(), facets[i].end());
    }
    if (!dominated) maximal.push_back(facets[i]);
  }
  SimplicialComplex k;
  k.facets_ = std::move(maximal);
  k.rebuild_vertices();
  return k;
}

SimplicialComplex SimplicialComplex::from_facets_strict(std::vector<Simplex> facets) {
  std::vector<Simplex> sorted;
  sorted.reserve(facets.size());
  for (auto& f : facets) sorted.push_back(make_simplex(std::move(f)));
  auto k = from_facets(sorted);
  if (k.facet_count() != sorted.size())
    throw input_error("facet list has duplicate or nested entries");
  return k;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::has_vertex(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  for (const auto& f : facets_) {
    if (f.size() < s.size()) continue;
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  }
  return false;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::set<Simplex> out;
  for (const auto& f : facets_) {
    const std::size_t n = f.size();
    // nonempty subsets of the facet
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) s.push_back(f[i]);
      out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  if (k < 0) return {};
  std::set<Simplex> out;
  const std::size_t want = static_cast<std::size_t>(k) + 1;
  for (const auto& f : facets_) {
    const std::size_t n = f.size();
    if (n < want) continue;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != want) continue;
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) s.push_back(f[i]);
      out.insert(std::move(s));
    }
  }
  return {out.begin(), out.end()};
}

std::size_t SimplicialComplex::simplex_count() const { return all_simplices().size(); }

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

ComponentsResult SimplicialComplex::components() const {
  ComponentsResult res;
  const auto& vs = vertices_;
  UnionFind uf(vs.size());
  auto idx = [&](const Vertex& v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& f : facets_)
    for (std::size_t i = 1; i < f.size(); ++i) uf.unite(idx(f[0]), idx(f[i]));
  // class id -> least vertex; vertices_ is sorted so first hit is least
  std::map<int, Vertex> least;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (!least.count(r)) least[r] = vs[i];
  }
  std::vector<std::pair<Vertex, int>> classes;  // (rep, root)
  for (const auto& [root, rep] : least) classes.emplace_back(rep, root);
  std::sort(classes.begin(), classes.end());
  std::map<int, int> root_to_class;
  for (std::size_t c = 0; c < classes.size(); ++c) root_to_class[classes[c].second] = static_cast<int>(c);
  for (std::size_t i = 0; i < vs.size(); ++i)
    res.vertex_class[vs[i]] = root_to_class[uf.find(static_cast<int>(i))];
  std::vector<std::vector<Simplex>> facets_by_class(classes.size());
  for (const auto& f : facets_)
    facets_by_class[static_cast<std::size_t>(res.vertex_class.at(f[0]))].push_back(f);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    res.reps.push_back(classes[c].first);
    res.subcomplexes.push_back(SimplicialComplex::from_facets(std::move(facets_by_class[c])));
  }
  return res;
}

bool SimplicialComplex::connected() const {
  if (empty()) return false;
  return components().reps.size() == 1;
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  // simplices common to both, then maximalize
  auto sa = a.all_simplices();
  std::vector<Simplex> common;
  for (auto& s : sa)
    if (b.contains(s)) common.push_back(std::move(s));
  return SimplicialComplex::from_facets(std::move(common));
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> fs = a.facets();
  const auto& fb = b.facets();
  fs.insert(fs.end(), fb.begin(), fb.end());
  return SimplicialComplex::from_facets(std::move(fs));
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& of) {
  for (const auto& f : sub.facets())
    if (!of.contains(f)) return false;
  return true;
}

SimplicialComplex cone(const Vertex& apex, const SimplicialComplex& base) {
  require_valid_token(apex, "cone apex");
  if (base.has_vertex(apex)) throw input_error("cone apex occurs in base complex");
  if (base.empty()) return SimplicialComplex::from_facets({{apex}});
  std::vector<Simplex> fs;
  for (auto f : base.facets()) {
    f.push_back(apex);
    fs.push_back(make_simplex(std::move(f)));
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

// --- Poset ---------------------------------------------------------------

namespace {
// Transitive closure in place; returns true if it stays irreflexive.
bool close_and_check(std::vector<std::vector<uint8_t>>& lt) {
  const std::size_t n = lt.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!lt[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (lt[k][j]) lt[i][j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (lt[i][i]) return false;
  return true;
}

std::string find_cycle_string(const std::vector<std::string>& elems,
                              const std::vector<std::vector<uint8_t>>& gen) {
  // DFS for a directed cycle over the generator edges; gen is not closed.
  const std::size_t n = elems.size();
  std::vector<int> state(n, 0);
  std::vector<int> stack;
  std::string found;
  auto dfs = [&](auto&& self, std::size_t v) -> bool {
    state[v] = 1;
    stack.push_back(static_cast<int>(v));
    for (std::size_t w = 0; w < n; ++w) {
      if (!gen[v][w]) continue;
      if (state[w] == 1) {
        std::string msg;
        auto it = std::find(stack.begin(), stack.end(), static_cast<int>(w));
        for (; it != stack.end(); ++it) msg += elems[static_cast<std::size_t>(*it)] + " < ";
        msg += elems[w];
        found = msg;
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    state[v] = 2;
    stack.pop_back();
    return false;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(dfs, v)) return found;
  return "unknown cycle";
}
}  // namespace

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  for (const auto& e : elements) require_valid_token(e, "poset element");
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw input_error("poset has duplicate elements");
  Poset p;
  p.elems_ = std::move(elements);
  for (std::size_t i = 0; i < p.elems_.size(); ++i) p.index_[p.elems_[i]] = static_cast<int>(i);
  const std::size_t n = p.elems_.size();
  std::vector<std::vector<uint8_t>> gen(n, std::vector<uint8_t>(n, 0));
  for (const auto& [a, b] : relations) {
    auto ia = p.index_.find(a), ib = p.index_.find(b);
    if (ia == p.index_.end()) throw input_error("relation mentions unknown element \"" + a + "\"");
    if (ib == p.index_.end()) throw input_error("relation mentions unknown element \"" + b + "\"");
    if (ia->second == ib->second)
      throw input_error("cyclic relation: " + a + " < " + a);
    gen[static_cast<std::size_t>(ia->second)][static_cast<std::size_t>(ib->second)] = 1;
  }
  p.lt_ = gen;
  if (!close_and_check(p.lt_))
    throw input_error("relations contain a cycle: " + find_cycle_string(p.elems_, gen));
  return p;
}

Poset Poset::from_less_matrix(std::vector<std::string> elements,
                              std::vector<std::vector<uint8_t>> lt) {
  std::vector<std::pair<std::string, std::string>> rels;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (lt[i][j]) rels.emplace_back(elements[i], elements[j]);
  return from_relations(std::move(elements), rels);
}

bool Poset::has_element(const std::string& e) const { return index_.count(e) != 0; }

int Poset::index_of(const std::string& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

bool Poset::less(const std::string& a, const std::string& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0) throw input_error("unknown poset element \"" + a + "\"");
  if (ib < 0) throw input_error("unknown poset element \"" + b + "\"");
  return lt_[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)] != 0;
}

bool Poset::leq(const std::string& a, const std::string& b) const { return a == b || less(a, b); }

bool Poset::comparable(const std::string& a, const std::string& b) const {
  return a == b || less(a, b) || less(b, a);
}

std::vector<std::pair<std::string, std::string>> Poset::cover_relations() const {
  std::vector<std::pair<std::string, std::string>> out;
  const std::size_t n = elems_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt_[i][j]) continue;
      bool covers = true;
      for (std::size_t k = 0; k < n && covers; ++k)
        if (lt_[i][k] && lt_[k][j]) covers = false;
      if (covers) out.emplace_back(elems_[i], elems_[j]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, std::string>> Poset::all_relations() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j)
      if (lt_[i][j]) out.emplace_back(elems_[i], elems_[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Poset::minimal_elements() const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < elems_.size(); ++j) {
    bool minimal = true;
    for (std::size_t i = 0; i < elems_.size() && minimal; ++i)
      if (lt_[i][j]) minimal = false;
    if (minimal) out.push_back(elems_[j]);
  }
  return out;
}

std::vector<std::string> Poset::maximal_elements() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < elems_.size() && maximal; ++j)
      if (lt_[i][j]) maximal = false;
    if (maximal) out.push_back(elems_[i]);
  }
  return out;
}

Poset opposite(const Poset& p) {
  const auto& es = p.elements();
  std::vector<std::vector<uint8_t>> lt(es.size(), std::vector<uint8_t>(es.size(), 0));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (p.less_by_index(static_cast<int>(i), static_cast<int>(j))) lt[j][i] = 1;
  return Poset::from_less_matrix(es, std::move(lt));
}

Poset induced_subposet(const Poset& p, std::vector<std::string> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<std::pair<std::string, std::string>> rels;
  for (const auto& a : subset) {
    if (!p.has_element(a)) throw input_error("induced subposet: unknown element \"" + a + "\"");
    for (const auto& b : subset)
      if (p.less(a, b)) rels.emplace_back(a, b);
  }
  return Poset::from_relations(std::move(subset), rels);
}

std::vector<std::string> upset(const Poset& p, const std::string& x) {
  if (!p.has_element(x)) throw input_error("upset: unknown element \"" + x + "\"");
  std::vector<std::string> out;
  for (const auto& e : p.elements())
    if (p.leq(x, e)) out.push_back(e);
  return out;
}

std::vector<std::string> downset(const Poset& p, const std::string& x) {
  if (!p.has_element(x)) throw input_error("downset: unknown element \"" + x + "\"");
  std::vector<std::string> out;
  for (const auto& e : p.elements())
    if (p.leq(e, x)) out.push_back(e);
  return out;
}

std::vector<std::vector<std::string>> poset_components(const Poset& p) {
  const auto& es = p.elements();
  UnionFind uf(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (p.less_by_index(static_cast<int>(i), static_cast<int>(j)) ||
          p.less_by_index(static_cast<int>(j), static_cast<int>(i)))
        uf.unite(static_cast<int>(i), static_cast<int>(j));
  std::map<int, std::vector<std::string>> classes;
  for (std::size_t i = 0; i < es.size(); ++i)
    classes[uf.find(static_cast<int>(i))].push_back(es[i]);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());  // classes are sorted internally; order by least element
  return out;
}

bool poset_connected(const Poset& p) {
  if (p.size() == 0) return false;
  return poset_components(p).size() == 1;
}

std::vector<std::vector<std::string>> maximal_chains(const Poset& p) {
  // saturated chains from a minimal to a maximal element, via cover relations
  const std::size_t n = p.size();
  std::vector<std::vector<int>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.less_by_index(static_cast<int>(i), static_cast<int>(j))) continue;
      bool covers = true;
      for (std::size_t k = 0; k < n && covers; ++k)
        if (p.less_by_index(static_cast<int>(i), static_cast<int>(k)) &&
            p.less_by_index(static_cast<int>(k), static_cast<int>(j)))
          covers = false;
      if (covers) succ[i].push_back(static_cast<int>(j));
    }
  std::vector<std::vector<std::string>> out;
  std::vector<int> path;
  auto dfs = [&](auto&& self, int v) -> void {
    path.push_back(v);
    if (succ[static_cast<std::size_t>(v)].empty()) {
      std::vector<std::string> chain;
      for (int e : path) chain.push_back(p.elements()[static_cast<std::size_t>(e)]);
      out.push_back(std::move(chain));
    } else {
      for (int w : succ[static_cast<std::size_t>(v)]) self(self, w);
    }
    path.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < n && minimal; ++k)
      if (p.less_by_index(static_cast<int>(k), static_cast<int>(i))) minimal = false;
    if (minimal) dfs(dfs, static_cast<int>(i));
  }
  return out;
}

bool is_chain(const Poset& p, const std::vector<std::string>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!p.comparable(s[i], s[j])) return false;
  return true;
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<Simplex> facets;
  for (auto& chain : maximal_chains(p)) facets.push_back(make_simplex(std::move(chain)));
  return SimplicialComplex::from_facets(std::move(facets));
}

Poset face_poset(const SimplicialComplex& k) {
  auto simplices = k.all_simplices();
  std::vector<std::string> elems;
  elems.reserve(simplices.size());
  for (const auto& s : simplices) elems.push_back(simplex_token(s));
  std::vector<std::pair<std::string, std::string>> rels;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    for (std::size_t j = 0; j < simplices.size(); ++j) {
      if (i == j || simplices[i].size() >= simplices[j].size()) continue;
      if (std::includes(simplices[j].begin(), simplices[j].end(),
                        simplices[i].begin(), simplices[i].end()))
        rels.emplace_back(elems[i], elems[j]);
    }
  return Poset::from_relations(std::move(elems), rels);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  return order_complex(face_poset(k));
}

// --- maps ----------------------------------------------------------------

PosetMap PosetMap::make(Poset domain, Poset codomain, std::map<std::string, std::string> map) {
  for (const auto& e : domain.elements()) {
    auto it = map.find(e);
    if (it == map.end()) throw input_error("poset map missing image of \"" + e + "\"");
    if (!codomain.has_element(it->second))
      throw input_error("poset map image \"" + it->second + "\" not in codomain");
  }
  if (map.size() != domain.size()) {
    for (const auto& [a, b] : map)
      if (!domain.has_element(a))
        throw input_error("poset map defined on unknown element \"" + a + "\"");
  }
  for (const auto& a : domain.elements())
    for (const auto& b : domain.elements())
      if (domain.less(a, b) && !codomain.leq(map.at(a), map.at(b)))
        throw input_error("poset map not order-preserving at " + a + " < " + b);
  PosetMap f;
  f.dom_ = std::move(domain);
  f.cod_ = std::move(codomain);
  f.map_ = std::move(map);
  return f;
}

const std::string& PosetMap::operator()(const std::string& e) const {
  auto it = map_.find(e);
  if (it == map_.end()) throw input_error("poset map applied to unknown element \"" + e + "\"");
  return it->second;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
  if (f.codomain() != g.domain()) throw input_error("poset map composition: domains do not match");
  std::map<std::string, std::string> m;
  for (const auto& e : f.domain().elements()) m[e] = g(f(e));
  return PosetMap::make(f.domain(), g.codomain(), std::move(m));
}

SimplicialMap SimplicialMap::make(SimplicialComplex domain, SimplicialComplex codomain,
                                  std::map<Vertex, Vertex> vertex_map) {
  for (const auto& v : domain.vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw input_error("simplicial map missing image of vertex \"" + v + "\"");
    if (!codomain.has_vertex(it->second))
      throw input_error("simplicial map image vertex \"" + it->second + "\" not in codomain");
  }
  SimplicialMap f;
  f.dom_ = std::move(domain);
  f.cod_ = std::move(codomain);
  f.vmap_ = std::move(vertex_map);
  for (const auto& fac : f.dom_.facets()) {
    Simplex img = f.image(fac);
    if (!f.cod_.contains(img))
      throw input_error("simplicial map image of facet {" + simplex_token(fac) +
                        "} is not a simplex of the codomain");
  }
  return f;
}

const Vertex& SimplicialMap::operator()(const Vertex& v) const {
  auto it = vmap_.find(v);
  if (it == vmap_.end()) throw input_error("simplicial map applied to unknown vertex \"" + v + "\"");
  return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<Vertex> img;
  img.reserve(s.size());
  for (const auto& v : s) img.push_back((*this)(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.codomain() == g.domain()))
    throw input_error("simplicial map composition: domains do not match");
  std::map<Vertex, Vertex> m;
  for (const auto& v : f.domain().vertices()) m[v] = g(f(v));
  return SimplicialMap::make(f.domain(), g.codomain(), std::move(m));
}

SimplicialMap order_complex_map(const PosetMap& f) {
  std::map<Vertex, Vertex> vmap(f.mapping().begin(), f.mapping().end());
  return SimplicialMap::make(order_complex(f.domain()), order_complex(f.codomain()),
                             std::move(vmap));
}

// --- SimplicialSetTrunc --------------------------------------------------

void SimplicialSetTrunc::validate() const {
  if (max_dim < 0) throw input_error("simplicial set: max_dim must be >= 0");
  const auto dims = static_cast<std::size_t>(max_dim) + 1;
  if (cells.size() != dims || faces.size() != dims)
    throw input_error("simplicial set: degree table shape mismatch");
  for (std::size_t k = 0; k < dims; ++k) {
    if (!std::is_sorted(cells[k].begin(), cells[k].end()) ||
        std::adjacent_find(cells[k].begin(), cells[k].end()) != cells[k].end())
      throw input_error("simplicial set: cell tokens must be sorted and distinct");
    if (faces[k].size() != cells[k].size())
      throw input_error("simplicial set: face table shape mismatch");
    for (const auto& fc : faces[k]) {
      if (k == 0) {
        if (!fc.empty()) throw input_error("simplicial set: degree-0 cells have no faces");
        continue;
      }
      if (fc.size() != k + 1) throw input_error("simplicial set: face arity mismatch");
      for (int idx : fc) {
        if (idx == kDegenerateFace) {
          if (k == 1) throw input_error("simplicial set: degree-1 faces cannot be degenerate");
          continue;
        }
        if (idx < 0 || static_cast<std::size_t>(idx) >= cells[k - 1].size())
          throw input_error("simplicial set: face index out of range");
      }
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j, whenever all four faces involved exist
  for (std::size_t k = 2; k < dims; ++k) {
    for (std::size_t c = 0; c < cells[k].size(); ++c) {
      const auto& fc = faces[k][c];
      for (std::size_t j = 1; j < fc.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
          int dj = fc[j], di = fc[i];
          if (dj == kDegenerateFace || di == kDegenerateFace) continue;
          int lhs = faces[k - 1][static_cast<std::size_t>(dj)][i];
          int rhs = faces[k - 1][static_cast<std::size_t>(di)][j - 1];
          if (lhs != kDegenerateFace && rhs != kDegenerateFace && lhs != rhs)
            throw input_error("simplicial set: simplicial identity violated");
        }
    }
  }
}

}  // namespace nervekit
