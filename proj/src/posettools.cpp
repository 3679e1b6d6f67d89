#include "nervekit/posettools.hpp"

#include <algorithm>
#include <queue>
#include <random>
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

void require_elements(const Poset& p, const std::vector<std::string>& s, const char* what) {
  for (const std::string& e : s)
    if (!p.has_element(e)) throw input_error(std::string(what) + ": unknown element '" + e + "'");
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> intersect_sorted(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<std::string> star_elements(const Poset& p, const std::string& x) {
  if (!p.has_element(x)) throw input_error("star: unknown element '" + x + "'");
  std::vector<std::string> out;
  for (const std::string& y : p.elements())
    if (p.comparable(x, y)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

Poset star(const Poset& p, const std::string& x) { return induced_subposet(p, star_elements(p, x)); }

CutsetReport cutset_check(const Poset& p, const std::vector<std::string>& x) {
  require_elements(p, x, "cutset");
  std::set<std::string> xs(x.begin(), x.end());
  CutsetReport rep;
  for (const std::vector<std::string>& chain : maximal_chains(p)) {
    bool met = false;
    for (const std::string& e : chain)
      if (xs.count(e)) {
        met = true;
        break;
      }
    if (!met) {
      rep.is_cutset = false;
      rep.witness = chain;
      return rep;
    }
  }
  return rep;
}

IndexedCover star_cover(const Poset& p, const std::vector<std::string>& x) {
  CutsetReport rep = cutset_check(p, x);
  if (!rep.is_cutset)
    throw input_error("star_cover: not a cutset, maximal chain '" + join_plus(*rep.witness) +
                      "' misses it");
  std::vector<std::string> xs = sorted_unique(x);
  if (xs.size() != x.size()) throw input_error("star_cover: duplicate cutset element");
  std::vector<SimplicialComplex> members;
  for (const std::string& e : xs) members.push_back(order_complex(star(p, e)));
  return IndexedCover::make(order_complex(p), xs, std::move(members));
}

GammaResult gamma_poset(const Poset& p, const std::vector<std::string>& x) {
  CutsetReport cut = cutset_check(p, x);
  if (!cut.is_cutset) throw input_error("gamma_poset: not a cutset");
  std::vector<std::string> xs = sorted_unique(x);
  std::vector<std::vector<std::string>> stars;
  for (const std::string& e : xs) stars.push_back(star_elements(p, e));
  // All components of all nonempty intersections of stars; empty intersections
  // prune their supersets.
  std::set<std::vector<std::string>> classes;
  auto extend = [&](auto&& self, int from, std::vector<std::string> inter) -> void {
    for (int j = from; j < static_cast<int>(stars.size()); ++j) {
      std::vector<std::string> next = intersect_sorted(inter, stars[static_cast<std::size_t>(j)]);
      if (next.empty()) continue;
      for (const std::vector<std::string>& cls : poset_components(induced_subposet(p, next)))
        classes.insert(cls);
      self(self, j + 1, next);
    }
  };
  std::vector<std::string> all = p.elements();
  std::sort(all.begin(), all.end());
  extend(extend, 0, std::move(all));
  GammaResult out;
  std::vector<std::vector<std::string>> list(classes.begin(), classes.end());
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < list.size(); ++i) tokens.push_back("g" + std::to_string(i));
  const int n = static_cast<int>(list.size());
  std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                       std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && list[static_cast<std::size_t>(i)] != list[static_cast<std::size_t>(j)] &&
          std::includes(list[static_cast<std::size_t>(j)].begin(), list[static_cast<std::size_t>(j)].end(),
                        list[static_cast<std::size_t>(i)].begin(), list[static_cast<std::size_t>(i)].end()))
        lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  out.poset = Poset::from_less_matrix(tokens, std::move(lt));
  for (std::size_t i = 0; i < list.size(); ++i) out.member_elements[tokens[i]] = list[i];
  return out;
}

CutsetComplex r_complex(const Poset& p, const std::vector<std::string>& x) {
  if (!poset_connected(p)) throw input_error("r_complex: poset is disconnected");
  CutsetReport cut = cutset_check(p, x);
  if (!cut.is_cutset)
    throw input_error("r_complex: not a cutset, maximal chain '" + join_plus(*cut.witness) +
                      "' misses it");
  CutsetComplex r;
  r.vertices = sorted_unique(x);
  const int m = static_cast<int>(r.vertices.size());
  std::vector<std::vector<std::string>> stars;
  for (const std::string& e : r.vertices) stars.push_back(star_elements(p, e));
  // Pairwise star intersections; remember which edge carries each element.
  std::map<std::pair<int, int>, std::map<std::string, int>> edge_of;  // element -> edge index
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<std::string> inter = intersect_sorted(stars[static_cast<std::size_t>(i)],
                                                        stars[static_cast<std::size_t>(j)]);
      if (inter.empty()) continue;
      for (const std::vector<std::string>& cls : poset_components(induced_subposet(p, inter))) {
        CutsetComplex::Edge e;
        e.a = r.vertices[static_cast<std::size_t>(i)];
        e.b = r.vertices[static_cast<std::size_t>(j)];
        e.rep = cls.front();
        e.token = e.a + "+" + e.b + "@" + e.rep;
        int idx = static_cast<int>(r.edges.size());
        for (const std::string& el : cls) edge_of[{i, j}][el] = idx;
        r.edges.push_back(std::move(e));
      }
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        std::vector<std::string> inter = intersect_sorted(
            intersect_sorted(stars[static_cast<std::size_t>(i)], stars[static_cast<std::size_t>(j)]),
            stars[static_cast<std::size_t>(k)]);
        if (inter.empty()) continue;
        for (const std::vector<std::string>& cls : poset_components(induced_subposet(p, inter))) {
          CutsetComplex::Triangle t;
          t.a = r.vertices[static_cast<std::size_t>(i)];
          t.b = r.vertices[static_cast<std::size_t>(j)];
          t.c = r.vertices[static_cast<std::size_t>(k)];
          t.rep = cls.front();
          t.e_ab = edge_of.at({i, j}).at(t.rep);
          t.e_bc = edge_of.at({j, k}).at(t.rep);
          t.e_ac = edge_of.at({i, k}).at(t.rep);
          t.token = t.a + "+" + t.b + "+" + t.c + "@" + t.rep;
          r.triangles.push_back(std::move(t));
        }
      }
  return r;
}

GroupPresentation pi1_presentation(const CutsetComplex& r, std::uint64_t tree_seed) {
  const int nv = static_cast<int>(r.vertices.size());
  const int ne = static_cast<int>(r.edges.size());
  std::map<std::string, int> vidx;
  for (int i = 0; i < nv; ++i) vidx[r.vertices[static_cast<std::size_t>(i)]] = i;
  // Edge scan order: token order by default, shuffled for nonzero seeds; the
  // abelianization must not depend on the resulting forest.
  std::vector<int> order(static_cast<std::size_t>(ne));
  for (int i = 0; i < ne; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return r.edges[static_cast<std::size_t>(a)].token < r.edges[static_cast<std::size_t>(b)].token;
  });
  if (tree_seed != 0) {
    std::mt19937_64 rng(tree_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  // Breadth-first forest over the edge scan order, starting from the least
  // unvisited vertex of each component.
  std::vector<char> in_forest(static_cast<std::size_t>(ne), 0);
  std::vector<char> visited(static_cast<std::size_t>(nv), 0);
  for (int s = 0; s < nv; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    std::queue<int> bfs;
    bfs.push(s);
    visited[static_cast<std::size_t>(s)] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int ei : order) {
        const CutsetComplex::Edge& e = r.edges[static_cast<std::size_t>(ei)];
        int a = vidx.at(e.a), b = vidx.at(e.b);
        int other = -1;
        if (a == u && !visited[static_cast<std::size_t>(b)]) other = b;
        if (b == u && !visited[static_cast<std::size_t>(a)]) other = a;
        if (other < 0) continue;
        in_forest[static_cast<std::size_t>(ei)] = 1;
        visited[static_cast<std::size_t>(other)] = 1;
        bfs.push(other);
      }
    }
  }
  GroupPresentation pres;
  std::vector<int> gen_of(static_cast<std::size_t>(ne), -1);
  std::vector<int> gens;
  for (int i = 0; i < ne; ++i)
    if (!in_forest[static_cast<std::size_t>(i)]) gens.push_back(i);
  std::sort(gens.begin(), gens.end(), [&](int a, int b) {
    return r.edges[static_cast<std::size_t>(a)].token < r.edges[static_cast<std::size_t>(b)].token;
  });
  for (std::size_t g = 0; g < gens.size(); ++g) {
    gen_of[static_cast<std::size_t>(gens[g])] = static_cast<int>(g);
    pres.generators.push_back(r.edges[static_cast<std::size_t>(gens[g])].token);
  }
  for (const CutsetComplex::Triangle& t : r.triangles) {
    std::vector<long long> row(pres.generators.size(), 0);
    auto add = [&](int ei, long long c) {
      int g = gen_of[static_cast<std::size_t>(ei)];
      if (g >= 0) row[static_cast<std::size_t>(g)] += c;
    };
    add(t.e_ab, 1);
    add(t.e_bc, 1);
    add(t.e_ac, -1);
    pres.relators.push_back(std::move(row));
  }
  return pres;
}

AbelianizationResult pi1_abelianized(const CutsetComplex& r, std::uint64_t tree_seed, Exec ex) {
  GroupPresentation pres = pi1_presentation(r, tree_seed);
  const int g = static_cast<int>(pres.generators.size());
  const int nr = static_cast<int>(pres.relators.size());
  la::IntMat m(g, nr);
  for (int j = 0; j < nr; ++j)
    for (int i = 0; i < g; ++i)
      m.at(i, j) = pres.relators[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  la::SnfResult s = la::snf(m, ex);
  AbelianizationResult out;
  out.rank = g - s.rank;
  out.torsion = s.torsion();
  return out;
}

Poset quillen_fiber(const PosetMap& f, const std::string& q) {
  if (!f.codomain().has_element(q))
    throw input_error("quillen_fiber: unknown codomain element '" + q + "'");
  std::vector<std::string> keep;
  for (const std::string& p : f.domain().elements())
    if (f.codomain().leq(q, f(p))) keep.push_back(p);
  return induced_subposet(f.domain(), keep);
}

std::optional<std::string> poset_join(const Poset& q, const std::vector<std::string>& s) {
  require_elements(q, s, "join");
  std::vector<std::string> ub;
  for (const std::string& u : q.elements()) {
    bool ok = true;
    for (const std::string& a : s)
      if (!q.leq(a, u)) {
        ok = false;
        break;
      }
    if (ok) ub.push_back(u);
  }
  for (const std::string& u : ub) {
    bool minimum = true;
    for (const std::string& v : ub)
      if (!q.leq(u, v)) {
        minimum = false;
        break;
      }
    if (minimum) return u;
  }
  return std::nullopt;
}

CoherenceReport coherence(const Poset& q) {
  CoherenceReport rep;
  rep.minimal = q.minimal_elements();
  std::sort(rep.minimal.begin(), rep.minimal.end());
  const int m = static_cast<int>(rep.minimal.size());
  if (m > 20) throw input_error("coherence: too many minimal elements to enumerate");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::string> subset;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(rep.minimal[static_cast<std::size_t>(i)]);
    // Bounded above?
    bool bounded = false;
    for (const std::string& u : q.elements()) {
      bool ok = true;
      for (const std::string& a : subset)
        if (!q.leq(a, u)) {
          ok = false;
          break;
        }
      if (ok) {
        bounded = true;
        break;
      }
    }
    if (!bounded) continue;
    std::optional<std::string> j = poset_join(q, subset);
    if (j) {
      rep.joins[subset] = *j;
    } else {
      rep.coherent = false;
      if (!rep.witness) rep.witness = subset;
    }
  }
  return rep;
}

FiberMode parse_fiber_mode(const std::string& s) {
  if (s == "quillen") return FiberMode::Quillen;
  if (s == "copo") return FiberMode::Copo;
  if (s == "achain") return FiberMode::Achain;
  throw input_error("unknown fiber mode '" + s + "' (quillen, copo or achain)");
}

std::string fiber_mode_name(FiberMode m) {
  switch (m) {
    case FiberMode::Quillen: return "quillen";
    case FiberMode::Copo: return "copo";
    case FiberMode::Achain: return "achain";
  }
  return "";
}

FiberVerdict verify_fiber(const PosetMap& f, FiberMode mode, int n, CoefficientSpec coeffs,
                          Exec ex) {
  if (!coeffs.is_field())
    throw input_error("verify_fiber: field coefficients required (q, f2 or fp:<p>)");
  FiberVerdict v;
  v.mode = mode;
  v.n = n;
  const Poset& cod = f.codomain();
  struct Task {
    std::string name;
    int needed;
    Poset fiber;
  };
  std::vector<Task> tasks;
  if (mode == FiberMode::Quillen) {
    for (const std::string& q : cod.elements())
      tasks.push_back({"fiber@" + q, n, quillen_fiber(f, q)});
  } else if (mode == FiberMode::Copo) {
    CoherenceReport ch = coherence(cod);
    if (!ch.coherent)
      throw input_error("verify_fiber: copo mode needs a coherent codomain, no join for {" +
                        join_plus(*ch.witness) + "}");
    // Smallest generating subset per join element decides the demanded level.
    std::map<std::string, int> kmin;
    for (const auto& [subset, join] : ch.joins) {
      auto it = kmin.find(join);
      int k = static_cast<int>(subset.size());
      if (it == kmin.end() || k < it->second) kmin[join] = k;
    }
    for (const auto& [join, k] : kmin)
      tasks.push_back({"fiber@" + join, n - k + 1, quillen_fiber(f, join)});
  } else {
    // Distinct intersections of maximal chains, with the least number of
    // chains realizing each; beyond n+2 chains nothing is demanded.
    std::vector<std::vector<std::string>> chains;
    for (std::vector<std::string> c : maximal_chains(cod)) {
      std::sort(c.begin(), c.end());
      chains.push_back(std::move(c));
    }
    std::map<std::vector<std::string>, int> kmin;
    std::vector<std::vector<std::string>> frontier = chains;
    for (const std::vector<std::string>& c : chains) kmin.emplace(c, 1);
    int k = 1;
    while (!frontier.empty() && k < n + 2) {
      std::vector<std::vector<std::string>> next;
      for (const std::vector<std::string>& s : frontier)
        for (const std::vector<std::string>& c : chains) {
          std::vector<std::string> t = intersect_sorted(s, c);
          if (t == s) continue;  // same set, more chains: weaker demand
          if (kmin.emplace(t, k + 1).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
      ++k;
    }
    for (const auto& [s, kk] : kmin) {
      std::vector<std::string> keep;
      for (const std::string& p : f.domain().elements()) {
        const std::string& img = f(p);
        if (std::binary_search(s.begin(), s.end(), img)) keep.push_back(p);
      }
      tasks.push_back({"fiber@{" + join_plus(s) + "}", n - kk + 1,
                       induced_subposet(f.domain(), keep)});
    }
  }
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) { return a.name < b.name; });
  v.entries.resize(tasks.size());
  const bool par = la::exec_is_parallel(ex);
  const int nt = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (par)
  for (int i = 0; i < nt; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    FiberEntry e;
    e.name = t.name;
    e.needed = t.needed;
    if (t.needed <= -2) {
      e.skipped = true;
      e.level = -2;
      e.pass = true;
    } else {
      e.level = acyclicity_level(order_complex(t.fiber), t.needed, coeffs, Exec::Serial);
      e.pass = e.level >= t.needed;
    }
    v.entries[static_cast<std::size_t>(i)] = std::move(e);
  }
  for (const FiberEntry& e : v.entries)
    if (!e.pass) v.hypothesis_pass = false;
  v.conclusion = induced_map(order_complex_map(f), std::max(0, n + 1), coeffs, ex);
  if (n + 1 >= 0) {
    for (int d = 0; d <= n; ++d)
      if (!v.conclusion.iso[static_cast<std::size_t>(d)]) v.conclusion_pass = false;
    if (!v.conclusion.epi[static_cast<std::size_t>(n) + 1]) v.conclusion_pass = false;
  }
  v.pass = v.hypothesis_pass && v.conclusion_pass;
  return v;
}

std::vector<std::string> neighborhood(const Poset& p, const std::vector<std::string>& s) {
  require_elements(p, s, "neighborhood");
  std::vector<std::string> out;
  for (const std::string& x : p.elements()) {
    bool ok = true;
    for (const std::string& a : s)
      if (!p.comparable(x, a)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> core_of(const Poset& p, const std::vector<std::string>& s) {
  require_elements(p, s, "core");
  std::vector<std::string> out;
  for (const std::string& x : s) {
    bool ok = true;
    for (const std::string& a : s)
      if (!p.comparable(x, a)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return sorted_unique(out);
}

bool is_essential(const Poset& p, const std::vector<std::string>& s) {
  std::vector<std::string> ss = sorted_unique(s);
  return core_of(p, neighborhood(p, ss)) == ss;
}

std::vector<std::vector<std::string>> essential_chains(const Poset& p) {
  if (p.size() == 0) return {{}};
  std::set<std::vector<std::string>> out;
  for (std::vector<std::string> c : maximal_chains(p)) {
    std::sort(c.begin(), c.end());
    out.insert(std::move(c));
  }
  // Close under pairwise intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::string>> cur(out.begin(), out.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (out.insert(intersect_sorted(cur[i], cur[j])).second) grew = true;
  }
  return {out.begin(), out.end()};
}

PqJoinResult pq_join(const Poset& base, const std::map<std::string, Poset>& fibers) {
  for (const std::string& e : base.elements()) {
    if (!fibers.count(e)) throw input_error("pq_join: no fiber over '" + e + "'");
    if (e.find('~') != std::string::npos)
      throw input_error("pq_join: base element '" + e + "' contains '~'");
  }
  if (fibers.size() != base.size()) throw input_error("pq_join: fiber over unknown element");
  std::vector<std::string> tokens;
  std::vector<std::pair<int, int>> coords;  // (base position, fiber position)
  std::vector<const Poset*> fib;
  std::map<std::string, std::string> proj;
  const auto& belems = base.elements();
  for (std::size_t bi = 0; bi < belems.size(); ++bi) {
    const Poset& q = fibers.at(belems[bi]);
    fib.push_back(&q);
    for (std::size_t qi = 0; qi < q.elements().size(); ++qi) {
      const std::string& qe = q.elements()[qi];
      if (qe.find('~') != std::string::npos)
        throw input_error("pq_join: fiber element '" + qe + "' contains '~'");
      tokens.push_back(belems[bi] + "~" + qe);
      coords.push_back({static_cast<int>(bi), static_cast<int>(qi)});
      proj[tokens.back()] = belems[bi];
    }
  }
  const int n = static_cast<int>(tokens.size());
  std::vector<std::vector<uint8_t>> lt(static_cast<std::size_t>(n),
                                       std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto [bi, qi] = coords[static_cast<std::size_t>(i)];
      auto [bj, qj] = coords[static_cast<std::size_t>(j)];
      if (bi == bj) {
        const Poset& q = *fib[static_cast<std::size_t>(bi)];
        if (q.less(q.elements()[static_cast<std::size_t>(qi)], q.elements()[static_cast<std::size_t>(qj)]))
          lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      } else if (base.less(belems[static_cast<std::size_t>(bi)], belems[static_cast<std::size_t>(bj)])) {
        lt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      }
    }
  PqJoinResult out;
  out.total = Poset::from_less_matrix(tokens, std::move(lt));
  out.pi = PosetMap::make(out.total, base, std::move(proj));
  return out;
}

Poset pq_preimage(const PqJoinResult& pq, const std::vector<std::string>& base_elements) {
  require_elements(pq.pi.codomain(), base_elements, "pq_preimage");
  std::set<std::string> bs(base_elements.begin(), base_elements.end());
  std::vector<std::string> keep;
  for (const std::string& e : pq.total.elements())
    if (bs.count(pq.pi(e))) keep.push_back(e);
  return induced_subposet(pq.total, keep);
}

IndexedCover chain_cover(const Poset& p) {
  std::vector<std::string> tokens;
  std::vector<SimplicialComplex> members;
  std::vector<std::pair<std::string, SimplicialComplex>> named;
  for (std::vector<std::string> c : maximal_chains(p)) {
    SimplicialComplex k = order_complex(induced_subposet(p, c));
    std::sort(c.begin(), c.end());
    named.push_back({join_plus(c), std::move(k)});
  }
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [t, k] : named) {
    tokens.push_back(t);
    members.push_back(std::move(k));
  }
  return IndexedCover::make(order_complex(p), std::move(tokens), std::move(members));
}

CovexResult covex_cover(const Poset& base) {
  Poset s0 = Poset::from_relations({"a", "b"}, {});
  std::map<std::string, Poset> fibers;
  for (const std::string& e : base.elements()) fibers[e] = s0;
  CovexResult out;
  out.pq = pq_join(base, fibers);
  std::vector<std::pair<std::string, SimplicialComplex>> named;
  for (std::vector<std::string> c : maximal_chains(base)) {
    SimplicialComplex k = order_complex(pq_preimage(out.pq, c));
    std::sort(c.begin(), c.end());
    named.push_back({join_plus(c), std::move(k)});
  }
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> tokens;
  std::vector<SimplicialComplex> members;
  for (auto& [t, k] : named) {
    tokens.push_back(t);
    members.push_back(std::move(k));
  }
  out.cover = IndexedCover::make(order_complex(out.pq.total), std::move(tokens), std::move(members));
  return out;
}

CutsetVerdict verify_cutset(const Poset& p, const std::vector<std::string>& x,
                            std::uint64_t tree_seed, Exec ex) {
  if (!poset_connected(p)) throw input_error("verify cutset: poset must be connected");
  CutsetVerdict v;
  CutsetReport cut = cutset_check(p, x);
  v.is_cutset = cut.is_cutset;
  v.cutset_witness = cut.witness;
  if (!v.is_cutset) return v;  // verification fails with the missed chain

  AbelianizationResult ab = pi1_abelianized(r_complex(p, x), tree_seed, ex);
  v.rank_r = ab.rank;
  v.torsion_r = ab.torsion;
  HomologyResult h = homology_of_complex(order_complex(p), 1, CoefficientSpec::z(), ex);
  v.rank_delta = h.betti[1];
  v.torsion_delta = h.torsion[1];
  v.pass = v.rank_r == v.rank_delta && v.torsion_r == v.torsion_delta;
  return v;
}

DetectionVerdict detection_check(const SimplicialMap& f, const IndexedCover& cov, int n,
                                 CoefficientSpec coeffs, Exec ex) {
  if (!coeffs.is_field())
    throw input_error("detection_check: field coefficients required (q, f2 or fp:<p>)");
  if (f.codomain() != cov.ambient())
    throw input_error("detection_check: cover is not a cover of the codomain");
  if (!cov.is_full()) throw input_error("detection_check: cover is not full");
  DetectionVerdict v;
  v.n = n;
  // Preimage of each member under f.
  std::vector<SimplicialComplex> pre;
  std::vector<Simplex> dom_simplices = f.domain().all_simplices();
  for (std::size_t i = 0; i < cov.size(); ++i) {
    std::vector<Simplex> faces;
    for (const Simplex& s : dom_simplices)
      if (cov.member_at(static_cast<int>(i)).contains(f.image(s))) faces.push_back(s);
    pre.push_back(SimplicialComplex::from_facets(faces));
  }
  IntersectionCache cache(cov);
  struct Task {
    std::string name;
    int needed;
    SimplicialMap restriction;
  };
  std::vector<Task> tasks;
  for (const std::vector<int>& face : nerve_faces(cache)) {
    const int k = static_cast<int>(face.size());
    const int needed = n - k + 1;
    if (needed < 0) continue;  // every map passes below level 0
    SimplicialComplex dom_r = pre[static_cast<std::size_t>(face[0])];
    for (std::size_t i = 1; i < face.size(); ++i)
      dom_r = intersect(dom_r, pre[static_cast<std::size_t>(face[i])]);
    const SimplicialComplex& cod_r = cache.intersection(face);
    std::map<std::string, std::string> vmap;
    for (const Vertex& vx : dom_r.vertices()) vmap[vx] = f.image(Simplex{vx})[0];
    std::vector<std::string> idx;
    for (int p : face) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    tasks.push_back({"restriction@" + join_plus(idx), needed,
                     SimplicialMap::make(dom_r, cod_r, std::move(vmap))});
  }
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) { return a.name < b.name; });
  v.entries.resize(tasks.size());
  const bool par = la::exec_is_parallel(ex);
  const int nt = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (par)
  for (int i = 0; i < nt; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    FiberEntry e;
    e.name = t.name;
    e.needed = t.needed;
    InducedMapResult im = induced_map(t.restriction, t.needed, coeffs, Exec::Serial);
    // Largest m <= needed with isomorphisms below m and a surjection at m.
    e.level = -1;
    for (int m = 0; m <= t.needed; ++m) {
      bool ok = im.epi[static_cast<std::size_t>(m)];
      for (int d = 0; d < m && ok; ++d) ok = im.iso[static_cast<std::size_t>(d)];
      if (ok)
        e.level = m;
      else
        break;
    }
    e.pass = e.level >= t.needed;
    v.entries[static_cast<std::size_t>(i)] = std::move(e);
  }
  for (const FiberEntry& e : v.entries)
    if (!e.pass) v.hypothesis_pass = false;
  v.conclusion = induced_map(f, std::max(0, n), coeffs, ex);
  if (n >= 0) {
    for (int d = 0; d < n; ++d)
      if (!v.conclusion.iso[static_cast<std::size_t>(d)]) v.conclusion_pass = false;
    if (!v.conclusion.epi[static_cast<std::size_t>(n)]) v.conclusion_pass = false;
  }
  v.pass = v.hypothesis_pass && v.conclusion_pass;
  return v;
}

}  // namespace nervekit
