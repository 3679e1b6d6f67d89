#include "nervekit/nerves.hpp"

#include <algorithm>
#include <set>

namespace nervekit {

namespace {

std::string join_plus(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += parts[i];
  }
  return out;
}

}  // namespace

IndexedCover IndexedCover::make(SimplicialComplex ambient, std::vector<std::string> index_order,
                                std::vector<SimplicialComplex> members) {
  if (index_order.size() != members.size())
    throw input_error("cover: index_order and member list sizes differ");
  IndexedCover cov;
  cov.ambient_ = std::move(ambient);
  cov.order_ = std::move(index_order);
  cov.members_ = std::move(members);
  for (std::size_t i = 0; i < cov.order_.size(); ++i) {
    require_valid_token(cov.order_[i], "cover index");
    if (!cov.pos_.emplace(cov.order_[i], static_cast<int>(i)).second)
      throw input_error("cover: duplicate index '" + cov.order_[i] + "'");
    if (!is_subcomplex(cov.members_[i], cov.ambient_))
      throw input_error("cover: member '" + cov.order_[i] + "' is not a subcomplex of the ambient complex");
  }
  return cov;
}

int IndexedCover::position_of(const std::string& index) const {
  auto it = pos_.find(index);
  return it == pos_.end() ? -1 : it->second;
}

const SimplicialComplex& IndexedCover::member(const std::string& index) const {
  int p = position_of(index);
  if (p < 0) throw input_error("cover: unknown index '" + index + "'");
  return members_[static_cast<std::size_t>(p)];
}

bool IndexedCover::is_full() const {
  for (const Simplex& f : ambient_.facets()) {
    bool covered = false;
    for (const SimplicialComplex& m : members_)
      if (m.contains(f)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

const SimplicialComplex& IntersectionCache::intersection(const std::vector<int>& subset) {
  auto it = inter_.find(subset);
  if (it != inter_.end()) return it->second;
  if (subset.empty()) throw input_error("intersection over an empty index set");
  SimplicialComplex k = cov_->member_at(subset[0]);
  for (std::size_t i = 1; i < subset.size(); ++i) k = intersect(k, cov_->member_at(subset[i]));
  return inter_.emplace(subset, std::move(k)).first->second;
}

const ComponentsResult& IntersectionCache::components(const std::vector<int>& subset) {
  auto it = comp_.find(subset);
  if (it != comp_.end()) return it->second;
  return comp_.emplace(subset, intersection(subset).components()).first->second;
}

std::vector<std::vector<int>> nerve_faces(IntersectionCache& cache) {
  const int m = static_cast<int>(cache.cover().size());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Depth-first extension by larger positions; an empty intersection prunes
  // all supersets.
  auto extend = [&](auto&& self, int from) -> void {
    for (int j = from; j < m; ++j) {
      cur.push_back(j);
      if (!cache.intersection(cur).empty()) {
        out.push_back(cur);
        self(self, j + 1);
      }
      cur.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex nerve(const IndexedCover& cov) {
  IntersectionCache cache(cov);
  std::vector<Simplex> faces;
  for (const std::vector<int>& f : nerve_faces(cache)) {
    Simplex s;
    for (int p : f) s.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    std::sort(s.begin(), s.end());
    faces.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(faces);
}

std::string pair_token(const std::vector<std::string>& indices, const Vertex& rep) {
  return join_plus(indices) + "@" + rep;
}

namespace {

struct PairTable {
  // Every (face, component) pair, in deterministic order.
  std::vector<std::string> tokens;                // sorted
  std::map<std::string, std::vector<int>> face;   // token -> member positions
  std::map<std::string, Vertex> rep;
  std::map<std::string, SimplicialComplex> component;
};

PairTable pair_table(const IndexedCover& cov, IntersectionCache& cache) {
  PairTable t;
  for (const std::vector<int>& f : nerve_faces(cache)) {
    std::vector<std::string> idx;
    for (int p : f) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    const ComponentsResult& comps = cache.components(f);
    for (std::size_t c = 0; c < comps.reps.size(); ++c) {
      std::string tok = pair_token(idx, comps.reps[c]);
      t.tokens.push_back(tok);
      t.face[tok] = f;
      t.rep[tok] = comps.reps[c];
      t.component[tok] = comps.subcomplexes[c];
    }
  }
  std::sort(t.tokens.begin(), t.tokens.end());
  return t;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

CompletedNerve completed_nerve(const IndexedCover& cov, Exec ex) {
  IntersectionCache cache(cov);
  PairTable t = pair_table(cov, cache);
  const int n = static_cast<int>(t.tokens.size());
  std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                       std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
  // (F, C) < (F', C') iff F is a proper-or-equal subset of F', the pair
  // differs, and C' sits inside C. Containment of the connected C' in a
  // component C of a larger intersection reduces to one vertex membership.
  std::vector<const std::vector<int>*> faces(static_cast<std::size_t>(n));
  std::vector<const Vertex*> reps(static_cast<std::size_t>(n));
  std::vector<const SimplicialComplex*> comps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::string& tok = t.tokens[static_cast<std::size_t>(i)];
    faces[static_cast<std::size_t>(i)] = &t.face.at(tok);
    reps[static_cast<std::size_t>(i)] = &t.rep.at(tok);
    comps[static_cast<std::size_t>(i)] = &t.component.at(tok);
  }
  const bool par = la::exec_is_parallel(ex);
#pragma omp parallel for schedule(static) if (par)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!subset_of(*faces[static_cast<std::size_t>(i)], *faces[static_cast<std::size_t>(j)])) continue;
      bool same_face = faces[static_cast<std::size_t>(i)]->size() == faces[static_cast<std::size_t>(j)]->size();
      if (same_face) continue;  // same face forces the same component
      if (comps[static_cast<std::size_t>(i)]->has_vertex(*reps[static_cast<std::size_t>(j)]))
        lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }
  CompletedNerve out;
  out.poset = Poset::from_less_matrix(t.tokens, std::move(lt));
  for (const std::string& tok : t.tokens) {
    std::vector<std::string> idx;
    for (int p : t.face.at(tok)) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    out.indices[tok] = std::move(idx);
    out.rep[tok] = t.rep.at(tok);
    out.component[tok] = t.component.at(tok);
  }
  return out;
}

SimplicialSetTrunc completed_nerve_sset(const IndexedCover& cov, int max_dim, Exec ex) {
  if (max_dim < 0) throw input_error("completed_nerve_sset: max_dim must be nonnegative");
  IntersectionCache cache(cov);
  std::vector<std::vector<int>> faces = nerve_faces(cache);
  // Cells in degree k: strictly increasing position tuples of length k + 1
  // (exactly the nerve faces of that size) with a component choice; sorted by
  // token. Deleting an entry keeps the tuple strictly increasing, so no face
  // is degenerate.
  SimplicialSetTrunc s;
  s.max_dim = max_dim;
  s.cells.assign(static_cast<std::size_t>(max_dim) + 1, {});
  s.faces.assign(static_cast<std::size_t>(max_dim) + 1, {});
  struct Cell {
    std::vector<int> face;
    Vertex rep;
  };
  std::vector<std::vector<Cell>> data(static_cast<std::size_t>(max_dim) + 1);
  std::vector<std::map<std::string, int>> pos(static_cast<std::size_t>(max_dim) + 1);
  for (int k = 0; k <= max_dim; ++k) {
    std::vector<std::pair<std::string, Cell>> named;
    for (const std::vector<int>& f : faces) {
      if (static_cast<int>(f.size()) != k + 1) continue;
      std::vector<std::string> idx;
      for (int p : f) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
      const ComponentsResult& comps = cache.components(f);
      for (const Vertex& r : comps.reps) named.push_back({pair_token(idx, r), Cell{f, r}});
    }
    std::sort(named.begin(), named.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [tok, cell] : named) {
      pos[static_cast<std::size_t>(k)][tok] = static_cast<int>(s.cells[static_cast<std::size_t>(k)].size());
      s.cells[static_cast<std::size_t>(k)].push_back(tok);
      data[static_cast<std::size_t>(k)].push_back(cell);
    }
  }
  s.faces[0].assign(s.cells[0].size(), {});
  // Resolve faces; deterministic per cell, so safe to parallelize per degree.
  const bool par = la::exec_is_parallel(ex);
  for (int k = 1; k <= max_dim; ++k) {
    const int nk = static_cast<int>(s.cells[static_cast<std::size_t>(k)].size());
    s.faces[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(nk),
                                                std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
    // Precompute component lookups serially (shared cache), then fill faces.
    for (int c = 0; c < nk; ++c) {
      const Cell& cell = data[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      for (int d = 0; d <= k; ++d) {
        std::vector<int> sub = cell.face;
        sub.erase(sub.begin() + d);
        (void)cache.components(sub);
      }
    }
#pragma omp parallel for schedule(static) if (par)
    for (int c = 0; c < nk; ++c) {
      const Cell& cell = data[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      for (int d = 0; d <= k; ++d) {
        std::vector<int> sub = cell.face;
        sub.erase(sub.begin() + d);
        const ComponentsResult& comps = cache.components(sub);
        const Vertex& pushed = comps.reps[static_cast<std::size_t>(comps.vertex_class.at(cell.rep))];
        std::vector<std::string> idx;
        for (int p : sub) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
        s.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] =
            pos[static_cast<std::size_t>(k) - 1].at(pair_token(idx, pushed));
      }
    }
  }
  s.validate();
  return s;
}

Poset grothendieck_model(const IndexedCover& cov) {
  IntersectionCache cache(cov);
  PairTable t = pair_table(cov, cache);
  const int n = static_cast<int>(t.tokens.size());
  std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                       std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    const std::vector<int>& fi = t.face.at(t.tokens[static_cast<std::size_t>(i)]);
    const Vertex& ri = t.rep.at(t.tokens[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::vector<int>& fj = t.face.at(t.tokens[static_cast<std::size_t>(j)]);
      if (fi.size() == fj.size()) continue;
      if (!subset_of(fj, fi)) continue;
      // Push the component of (F, x) forward along the inclusion into the
      // intersection over the smaller face G and compare with y.
      const ComponentsResult& comps = cache.components(fj);
      const Vertex& pushed = comps.reps[static_cast<std::size_t>(comps.vertex_class.at(ri))];
      if (pushed == t.rep.at(t.tokens[static_cast<std::size_t>(j)]))
        lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }
  }
  return Poset::from_less_matrix(t.tokens, std::move(lt));
}

VbarResult vbar(const IndexedCover& cov) {
  CompletedNerve cn = completed_nerve(cov);
  // Distinct component subcomplexes, sorted for deterministic tokens.
  std::vector<SimplicialComplex> distinct;
  for (const auto& [tok, comp] : cn.component) distinct.push_back(comp);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < distinct.size(); ++i) tokens.push_back("c" + std::to_string(i));
  const int n = static_cast<int>(distinct.size());
  std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                       std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && distinct[static_cast<std::size_t>(i)] != distinct[static_cast<std::size_t>(j)] &&
          is_subcomplex(distinct[static_cast<std::size_t>(i)], distinct[static_cast<std::size_t>(j)]))
        lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  VbarResult out;
  out.poset = Poset::from_less_matrix(tokens, std::move(lt));
  std::map<std::string, std::string> qmap;
  for (std::size_t i = 0; i < distinct.size(); ++i) out.member[tokens[i]] = distinct[i];
  for (const auto& [tok, comp] : cn.component) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), comp);
    qmap[tok] = tokens[static_cast<std::size_t>(it - distinct.begin())];
  }
  out.q = PosetMap::make(opposite(cn.poset), out.poset, std::move(qmap));
  return out;
}

EtaResult eta_map(const IndexedCover& cov) {
  if (!cov.is_full())
    throw input_error("eta: cover is not full, some simplex lies in no member");
  EtaResult out;
  out.target = completed_nerve(cov);
  IntersectionCache cache(cov);
  Poset fp = face_poset(cov.ambient());
  std::map<std::string, std::string> map;
  for (const Simplex& sigma : cov.ambient().all_simplices()) {
    std::string sigma_tok = simplex_token(sigma);
    out.simplex_of[sigma_tok] = sigma;
    std::vector<int> f;
    std::vector<std::string> idx;
    for (std::size_t p = 0; p < cov.size(); ++p)
      if (cov.member_at(static_cast<int>(p)).contains(sigma)) {
        f.push_back(static_cast<int>(p));
        idx.push_back(cov.index_order()[p]);
      }
    const ComponentsResult& comps = cache.components(f);
    const Vertex& rep = comps.reps[static_cast<std::size_t>(comps.vertex_class.at(sigma[0]))];
    map[sigma_tok] = pair_token(idx, rep);
  }
  out.poset_map = PosetMap::make(opposite(fp), out.target.poset, map);
  out.complex_map = SimplicialMap::make(order_complex(fp), order_complex(out.target.poset), map);
  return out;
}

SimplicialComplex eta_quillen_fiber(const EtaResult& eta, const std::string& element) {
  const Poset& target = eta.target.poset;
  if (!target.has_element(element)) throw input_error("eta fiber: unknown element '" + element + "'");
  std::vector<Simplex> faces;
  for (const auto& [sigma_tok, val] : eta.poset_map.mapping()) {
    if (!target.leq(element, val)) continue;
    faces.push_back(eta.simplex_of.at(sigma_tok));
  }
  return SimplicialComplex::from_facets(faces);
}

HypothesisReport hypothesis_check(const IndexedCover& cov, int n, CoefficientSpec coeffs, Exec ex) {
  HypothesisReport rep;
  rep.n = n;
  IntersectionCache cache(cov);
  for (const std::vector<int>& f : nerve_faces(cache)) {
    const int size = static_cast<int>(f.size());
    if (size > n) continue;
    const int needed = n - size + 1;
    const ComponentsResult& comps = cache.components(f);
    for (const SimplicialComplex& comp : comps.subcomplexes) {
      ++rep.checked;
      AcyclicityCertificate cert = acyclicity_certificate(comp, needed, coeffs, ex);
      if (!cert.pass) {
        rep.pass = false;
        HypothesisFailure fail;
        for (int p : f) fail.indices.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
        fail.component_rep = comp.vertices().front();
        fail.needed = needed;
        fail.witness_degree = cert.witness_degree;
        rep.failures.push_back(std::move(fail));
      }
    }
  }
  return rep;
}

CompletionResult completion(const IndexedCover& cov) {
  if (!cov.is_full())
    throw input_error("completion: cover is not full, some simplex lies in no member");
  IntersectionCache cache(cov);
  CompletionResult out;
  std::vector<SimplicialComplex> comps;
  std::set<std::vector<int>> face_sets;
  std::map<std::vector<int>, Simplex> face_witness;
  for (const Simplex& sigma : cov.ambient().all_simplices()) {
    std::vector<int> f;
    for (std::size_t p = 0; p < cov.size(); ++p)
      if (cov.member_at(static_cast<int>(p)).contains(sigma)) f.push_back(static_cast<int>(p));
    const ComponentsResult& cr = cache.components(f);
    comps.push_back(cr.subcomplexes[static_cast<std::size_t>(cr.vertex_class.at(sigma[0]))]);
    if (face_sets.insert(f).second) face_witness[f] = sigma;
  }
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  {
    const int n = static_cast<int>(comps.size());
    std::vector<std::string> tokens;
    for (int i = 0; i < n; ++i) tokens.push_back("c" + std::to_string(i));
    std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                         std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && comps[static_cast<std::size_t>(i)] != comps[static_cast<std::size_t>(j)] &&
            is_subcomplex(comps[static_cast<std::size_t>(i)], comps[static_cast<std::size_t>(j)]))
          lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    out.vhat = Poset::from_less_matrix(tokens, std::move(lt));
    for (int i = 0; i < n; ++i) out.vhat_member[tokens[static_cast<std::size_t>(i)]] = comps[static_cast<std::size_t>(i)];
  }
  {
    std::vector<std::vector<int>> faces(face_sets.begin(), face_sets.end());
    const int n = static_cast<int>(faces.size());
    std::vector<std::string> tokens;
    for (const std::vector<int>& f : faces) {
      std::vector<std::string> idx;
      for (int p : f) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
      tokens.push_back(join_plus(idx));
      out.vtilde_indices[tokens.back()] = idx;
    }
    // Reverse inclusion: a larger index set sits lower.
    std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                         std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && faces[static_cast<std::size_t>(i)].size() > faces[static_cast<std::size_t>(j)].size() &&
            subset_of(faces[static_cast<std::size_t>(j)], faces[static_cast<std::size_t>(i)]))
          lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    out.vtilde = Poset::from_less_matrix(tokens, std::move(lt));
    out.c_available = true;
    std::map<std::string, std::string> cmap;
    for (int i = 0; i < n; ++i) {
      const SimplicialComplex& inter = cache.intersection(faces[static_cast<std::size_t>(i)]);
      if (!inter.connected()) {
        out.c_available = false;
        out.witness = face_witness.at(faces[static_cast<std::size_t>(i)]);
        break;
      }
      auto it = std::lower_bound(comps.begin(), comps.end(), inter);
      if (it == comps.end() || *it != inter) {
        // A connected full intersection always occurs as some C_sigma.
        out.c_available = false;
        out.witness = face_witness.at(faces[static_cast<std::size_t>(i)]);
        break;
      }
      cmap[tokens[static_cast<std::size_t>(i)]] =
          "c" + std::to_string(static_cast<std::size_t>(it - comps.begin()));
    }
    if (out.c_available) out.c = PosetMap::make(out.vtilde, out.vhat, std::move(cmap));
  }
  return out;
}

IndexedCover completion_cover(const CompletionResult& comp, const IndexedCover& cov) {
  std::vector<std::string> order;
  std::vector<SimplicialComplex> members;
  for (const std::string& tok : comp.vhat.elements()) {
    order.push_back(tok);
    members.push_back(comp.vhat_member.at(tok));
  }
  return IndexedCover::make(cov.ambient(), std::move(order), std::move(members));
}

CompletenessReport is_complete(const IndexedCover& cov) {
  IntersectionCache cache(cov);
  CompletenessReport rep;
  for (const std::vector<int>& f : nerve_faces(cache)) {
    const SimplicialComplex& inter = cache.intersection(f);
    // Union of all members contained in the intersection.
    SimplicialComplex u;
    for (std::size_t p = 0; p < cov.size(); ++p)
      if (is_subcomplex(cov.member_at(static_cast<int>(p)), inter))
        u = unite(u, cov.member_at(static_cast<int>(p)));
    if (u != inter) {
      rep.complete = false;
      std::vector<std::string> idx;
      for (int p : f) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
      rep.witness = idx;
      return rep;
    }
  }
  return rep;
}

CoverMorphism CoverMorphism::make(const IndexedCover& dom, const IndexedCover& cod, SimplicialMap f,
                                  std::map<std::string, std::string> phi) {
  if (f.domain() != dom.ambient() || f.codomain() != cod.ambient())
    throw input_error("cover morphism: space map does not match the ambient complexes");
  for (const std::string& i : dom.index_order()) {
    auto it = phi.find(i);
    if (it == phi.end()) throw input_error("cover morphism: index map misses '" + i + "'");
    if (cod.position_of(it->second) < 0)
      throw input_error("cover morphism: index map hits unknown index '" + it->second + "'");
    // f must carry the member over i into the member over phi(i).
    const SimplicialComplex& target = cod.member(it->second);
    for (const Simplex& s : dom.member(i).facets())
      if (!target.contains(f.image(s)))
        throw input_error("cover morphism: member '" + i + "' does not land in member '" +
                          it->second + "'");
  }
  if (phi.size() != dom.size()) throw input_error("cover morphism: index map has extra entries");
  CoverMorphism m;
  m.dom_ = &dom;
  m.cod_ = &cod;
  m.f_ = std::move(f);
  m.phi_ = std::move(phi);
  // Equivalence: phi bijective and preimages of nerve faces intersect.
  bool bij = dom.size() == cod.size();
  std::set<std::string> image;
  if (bij)
    for (const auto& [a, b] : m.phi_) image.insert(b);
  bij = bij && image.size() == cod.size();
  if (bij) {
    std::map<std::string, std::string> inv;
    for (const auto& [a, b] : m.phi_) inv[b] = a;
    IntersectionCache dcache(dom);
    IntersectionCache ccache(cod);
    bool ok = true;
    for (const std::vector<int>& g : nerve_faces(ccache)) {
      std::vector<int> pre;
      for (int p : g) pre.push_back(dom.position_of(inv.at(cod.index_order()[static_cast<std::size_t>(p)])));
      std::sort(pre.begin(), pre.end());
      if (dcache.intersection(pre).empty()) {
        ok = false;
        break;
      }
    }
    m.equivalence_ = ok;
  }
  return m;
}

InducedNerveMaps induced_nerve_maps(const CoverMorphism& m) {
  const IndexedCover& dom = m.domain();
  const IndexedCover& cod = m.codomain();
  InducedNerveMaps out;
  out.equivalence = m.is_equivalence();
  std::map<std::string, std::string> vmap(m.index_map().begin(), m.index_map().end());
  out.nerve_map = SimplicialMap::make(nerve(dom), nerve(cod), vmap);
  CompletedNerve dn = completed_nerve(dom);
  CompletedNerve cn = completed_nerve(cod);
  IntersectionCache ccache(cod);
  std::map<std::string, std::string> cmap;
  out.pi0_bijection = true;
  for (const std::string& tok : dn.poset.elements()) {
    // Image face phi(F) as codomain positions, sorted.
    std::vector<int> g;
    for (const std::string& i : dn.indices.at(tok)) g.push_back(cod.position_of(m.index_map().at(i)));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<std::string> gidx;
    for (int p : g) gidx.push_back(cod.index_order()[static_cast<std::size_t>(p)]);
    const ComponentsResult& comps = ccache.components(g);
    // Push the component forward through the space map.
    Vertex image_vertex = m.space_map().image(Simplex{dn.rep.at(tok)})[0];
    const Vertex& pushed = comps.reps[static_cast<std::size_t>(comps.vertex_class.at(image_vertex))];
    cmap[tok] = pair_token(gidx, pushed);
  }
  // Component pushforward bijectivity, face by face.
  {
    IntersectionCache dcache(dom);
    for (const std::vector<int>& f : nerve_faces(dcache)) {
      std::vector<int> g;
      for (int p : f) g.push_back(cod.position_of(m.index_map().at(dom.index_order()[static_cast<std::size_t>(p)])));
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      const ComponentsResult& dc = dcache.components(f);
      const ComponentsResult& cc = ccache.components(g);
      std::set<int> hit;
      for (const Vertex& r : dc.reps) {
        Vertex image_vertex = m.space_map().image(Simplex{r})[0];
        hit.insert(cc.vertex_class.at(image_vertex));
      }
      if (hit.size() != dc.reps.size() || hit.size() != cc.reps.size()) out.pi0_bijection = false;
    }
  }
  out.completed_map = PosetMap::make(dn.poset, cn.poset, std::move(cmap));
  if (out.equivalence && out.pi0_bijection) {
    // Bijective monotone map with bijective monotone inverse.
    bool iso = dn.poset.size() == cn.poset.size();
    if (iso) {
      std::set<std::string> image;
      for (const auto& [a, b] : out.completed_map.mapping()) image.insert(b);
      iso = image.size() == cn.poset.size();
    }
    if (iso) iso = dn.poset.all_relations().size() == cn.poset.all_relations().size();
    if (iso) {
      for (const auto& [a, b] : out.completed_map.mapping())
        for (const auto& [c, d] : out.completed_map.mapping())
          if (dn.poset.less(a, c) != cn.poset.less(b, d)) {
            iso = false;
            break;
          }
    }
    out.order_isomorphism = iso;
  }
  return out;
}

EtaVerdict verify_eta(const IndexedCover& cov, int n, CoefficientSpec field, Exec ex) {
  if (!field.is_field())
    throw input_error("verify eta: induced maps need field coefficients (q, f2 or fp:<p>)");
  if (n < 0) throw input_error("verify eta: n must be nonnegative");
  if (!cov.is_full())
    throw input_error("verify eta: cover is not full, some simplex lies in no member");
  EtaVerdict v;
  v.n = n;

  // Uniform hypothesis: every component of every nerve-face intersection is
  // n-acyclic.
  IntersectionCache cache(cov);
  v.hypothesis_pass = true;
  for (const std::vector<int>& f : nerve_faces(cache)) {
    const ComponentsResult& comps = cache.components(f);
    for (std::size_t ci = 0; ci < comps.subcomplexes.size(); ++ci) {
      AcyclicityCertificate cert = acyclicity_certificate(comps.subcomplexes[ci], n, field, ex);
      if (cert.pass) continue;
      v.hypothesis_pass = false;
      HypothesisFailure fail;
      for (int p : f) fail.indices.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
      fail.component_rep = comps.reps[ci];
      fail.needed = n;
      fail.witness_degree = cert.witness_degree;
      v.failures.push_back(std::move(fail));
    }
  }

  EtaResult eta = eta_map(cov);
  v.fibers_pass = true;
  for (const std::string& e : eta.target.poset.elements())
    if (eta_quillen_fiber(eta, e) != eta.target.component.at(e)) v.fibers_pass = false;

  v.induced = induced_map(eta.complex_map, std::max(0, n + 1), field, ex);
  // Observed connectivity: recorded as data regardless of the hypotheses.
  v.observed_connectivity = -1;
  for (int d = 0; d <= v.induced.degree_ceiling; ++d) {
    const auto du = static_cast<std::size_t>(d);
    if (v.induced.epi[du]) v.observed_connectivity = d;
    if (!v.induced.iso[du]) break;
  }

  if (v.hypothesis_pass) {
    v.conclusion_checked = true;
    v.conclusion_pass = true;
    for (int d = 0; d <= n; ++d)
      if (!v.induced.iso[static_cast<std::size_t>(d)]) v.conclusion_pass = false;
    if (!v.induced.epi[static_cast<std::size_t>(n + 1)]) v.conclusion_pass = false;
  }
  v.pass = v.hypothesis_pass && v.conclusion_pass && v.fibers_pass;
  return v;
}

CompletionVerdict verify_completion(const IndexedCover& cov, int n, CoefficientSpec coeffs,
                                    Exec ex) {
  if (n < 0) throw input_error("verify completion: n must be nonnegative");
  CompletionVerdict v;
  v.n = n;
  CompletionResult comp = completion(cov);
  v.c_available = comp.c_available;
  v.c_witness = comp.witness;

  IndexedCover done = completion_cover(comp, cov);
  v.complete_pass = is_complete(done).complete;

  v.hypothesis_pass = true;
  for (const auto& [tok, member] : comp.vhat_member) {
    int level = acyclicity_level(member, n, coeffs, ex);
    v.member_levels.push_back({tok, level});
    if (level < n) v.hypothesis_pass = false;
  }

  if (v.hypothesis_pass) {
    v.conclusion_checked = true;
    HomologyResult ambient = homology_of_complex(cov.ambient(), n + 1, coeffs, ex);
    HomologyResult vhat = homology_of_complex(order_complex(comp.vhat), n + 1, coeffs, ex);
    RangeCompareResult rc = range_compare(ambient, vhat, n);
    for (const std::string& f : rc.failures)
      v.conclusion_failures.push_back("ambient vs completion poset: " + f);
    v.betti_ambient.assign(ambient.betti.begin(), ambient.betti.begin() + n + 2);
    v.betti_vhat.assign(vhat.betti.begin(), vhat.betti.begin() + n + 2);
    v.conclusion_pass = v.conclusion_failures.empty();
  }
  v.pass = v.complete_pass && v.hypothesis_pass && v.conclusion_pass;
  return v;
}

}  // namespace nervekit
