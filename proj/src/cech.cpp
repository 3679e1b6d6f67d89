#include "nervekit/cech.hpp"

#include <algorithm>
#include <map>

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

std::vector<int> support(const std::vector<int>& tuple) {
  std::vector<int> s = tuple;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string tuple_token(const IndexedCover& cov, const std::vector<int>& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '+';
    out += cov.index_order()[static_cast<std::size_t>(tuple[i])];
  }
  return out;
}

// All tuples of the given length over member positions with nonempty support
// intersection; adjacent repeats excluded when no_adjacent is set. Extending
// a tuple only shrinks the intersection, so empty prefixes prune.
void enumerate_tuples(IntersectionCache& cache, int length, bool no_adjacent,
                      std::vector<std::vector<int>>& out) {
  const int m = static_cast<int>(cache.cover().size());
  std::vector<int> cur;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (int j = 0; j < m; ++j) {
      if (no_adjacent && !cur.empty() && cur.back() == j) continue;
      cur.push_back(j);
      if (!cache.intersection(support(cur)).empty()) self(self);
      cur.pop_back();
    }
  };
  extend(extend);
}

}  // namespace

CechLevel cech_level(const IndexedCover& cov, int k) {
  if (k < 0) throw input_error("cech_level: level must be nonnegative");
  IntersectionCache cache(cov);
  CechLevel level;
  level.k = k;
  std::vector<std::vector<int>> tuples;
  enumerate_tuples(cache, k + 1, false, tuples);
  for (const std::vector<int>& t : tuples) {
    CechLevel::Cell cell;
    for (int p : t) cell.tuple.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    cell.intersection = cache.intersection(support(t));
    level.cells.push_back(std::move(cell));
  }
  return level;
}

std::vector<CechLevel> cech_levels(const IndexedCover& cov, int k_max) {
  std::vector<CechLevel> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(cech_level(cov, k));
  return out;
}

SimplicialSetTrunc cech_delta(const IndexedCover& cov, int max_dim, Exec ex) {
  if (max_dim < 0) throw input_error("cech_delta: max_dim must be nonnegative");
  IntersectionCache cache(cov);
  SimplicialSetTrunc s;
  s.max_dim = max_dim;
  s.cells.assign(static_cast<std::size_t>(max_dim) + 1, {});
  s.faces.assign(static_cast<std::size_t>(max_dim) + 1, {});
  struct Cell {
    std::vector<int> tuple;
    Vertex rep;
  };
  std::vector<std::vector<Cell>> data(static_cast<std::size_t>(max_dim) + 1);
  std::vector<std::map<std::string, int>> pos(static_cast<std::size_t>(max_dim) + 1);
  for (int k = 0; k <= max_dim; ++k) {
    std::vector<std::vector<int>> tuples;
    enumerate_tuples(cache, k + 1, true, tuples);
    std::vector<std::pair<std::string, Cell>> named;
    for (const std::vector<int>& t : tuples) {
      const ComponentsResult& comps = cache.components(support(t));
      for (const Vertex& r : comps.reps)
        named.push_back({tuple_token(cov, t) + "@" + r, Cell{t, r}});
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
  const bool par = la::exec_is_parallel(ex);
  for (int k = 1; k <= max_dim; ++k) {
    const int nk = static_cast<int>(s.cells[static_cast<std::size_t>(k)].size());
    s.faces[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(nk),
                                                std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
    // Touch every deletion support once while single-threaded; the parallel
    // pass then only reads the cache.
    for (int c = 0; c < nk; ++c) {
      const Cell& cell = data[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      for (int d = 0; d <= k; ++d) {
        std::vector<int> sub = cell.tuple;
        sub.erase(sub.begin() + d);
        if (d > 0 && d < k && cell.tuple[static_cast<std::size_t>(d) - 1] == cell.tuple[static_cast<std::size_t>(d) + 1])
          continue;
        (void)cache.components(support(sub));
      }
    }
#pragma omp parallel for schedule(static) if (par)
    for (int c = 0; c < nk; ++c) {
      const Cell& cell = data[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      for (int d = 0; d <= k; ++d) {
        if (d > 0 && d < k && cell.tuple[static_cast<std::size_t>(d) - 1] == cell.tuple[static_cast<std::size_t>(d) + 1]) {
          s.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] =
              SimplicialSetTrunc::kDegenerateFace;
          continue;
        }
        std::vector<int> sub = cell.tuple;
        sub.erase(sub.begin() + d);
        const ComponentsResult& comps = cache.components(support(sub));
        const Vertex& pushed = comps.reps[static_cast<std::size_t>(comps.vertex_class.at(cell.rep))];
        s.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] =
            pos[static_cast<std::size_t>(k) - 1].at(tuple_token(cov, sub) + "@" + pushed);
      }
    }
  }
  s.validate();
  return s;
}

FiberProductReport cech_fiber_product_check(const IndexedCover& cov, int n) {
  if (n < 1) throw input_error("cech_fiber_product_check: level must be at least 1");
  FiberProductReport rep;
  rep.n = n;
  CechLevel top = cech_level(cov, n);
  CechLevel prev = cech_level(cov, n - 1);
  CechLevel ones = cech_level(cov, 1);
  std::map<std::vector<std::string>, const SimplicialComplex*> prev_of, one_of;
  for (const CechLevel::Cell& c : prev.cells) prev_of[c.tuple] = &c.intersection;
  for (const CechLevel::Cell& c : ones.cells) one_of[c.tuple] = &c.intersection;
  rep.cell_count = static_cast<long long>(top.cells.size());
  for (const CechLevel::Cell& c : top.cells) {
    std::vector<std::string> head(c.tuple.begin(), c.tuple.end() - 1);
    std::vector<std::string> tail = {c.tuple[static_cast<std::size_t>(n) - 1],
                                     c.tuple[static_cast<std::size_t>(n)]};
    auto hit = prev_of.find(head);
    auto tit = one_of.find(tail);
    if (hit == prev_of.end() || tit == one_of.end()) {
      rep.pass = false;
      rep.failures.push_back("missing factor cells for " + join_plus(c.tuple));
      continue;
    }
    if (intersect(*hit->second, *tit->second) != c.intersection) {
      rep.pass = false;
      rep.failures.push_back("intersection mismatch at " + join_plus(c.tuple));
    }
  }
  for (const CechLevel::Cell& a : prev.cells)
    for (const CechLevel::Cell& b : ones.cells) {
      if (a.tuple.back() != b.tuple.front()) continue;
      if (!intersect(a.intersection, b.intersection).empty()) ++rep.pair_count;
    }
  if (rep.pair_count != rep.cell_count) {
    rep.pass = false;
    rep.failures.push_back("pair count " + std::to_string(rep.pair_count) + " != cell count " +
                           std::to_string(rep.cell_count));
  }
  return rep;
}

NerveTheoremVerdict verify_nerve_theorem(const IndexedCover& cov, int n, CoefficientSpec coeffs,
                                         Exec ex) {
  if (!cov.is_full())
    throw input_error("verify nerve theorem: cover is not full, some simplex lies in no member");
  if (n < 0) throw input_error("verify nerve theorem: n must be nonnegative");
  NerveTheoremVerdict v;
  v.n = n;
  v.hypotheses = hypothesis_check(cov, n, coeffs, ex);
  v.hypothesis_pass = v.hypotheses.pass;
  if (!v.hypothesis_pass) return v;  // conclusion skipped, nothing asserted

  v.conclusion_checked = true;
  HomologyResult ambient = homology_of_complex(cov.ambient(), n + 1, coeffs, ex);
  HomologyResult completed =
      homology_of_complex(order_complex(completed_nerve(cov, ex).poset), n + 1, coeffs, ex);
  RangeCompareResult rc = range_compare(ambient, completed, n);
  for (const std::string& f : rc.failures)
    v.conclusion_failures.push_back("ambient vs completed nerve: " + f);

  SimplicialSetTrunc s = cech_delta(cov, n + 2, ex);
  HomologyResult cech = homology(normalized_chain_complex(s, n + 2), coeffs, ex);
  for (int d = 0; d <= n + 1; ++d) {
    const auto du = static_cast<std::size_t>(d);
    if (cech.betti[du] != completed.betti[du])
      v.conclusion_failures.push_back("component model vs completed nerve: degree " +
                                      std::to_string(d) + " betti " +
                                      std::to_string(cech.betti[du]) + " != " +
                                      std::to_string(completed.betti[du]));
    if (coeffs.kind == CoefficientSpec::Kind::Z && cech.torsion[du] != completed.torsion[du])
      v.conclusion_failures.push_back("component model vs completed nerve: degree " +
                                      std::to_string(d) + " torsion differs");
  }
  v.betti_ambient.assign(ambient.betti.begin(), ambient.betti.begin() + n + 2);
  v.betti_completed.assign(completed.betti.begin(), completed.betti.begin() + n + 2);
  v.betti_cech.assign(cech.betti.begin(), cech.betti.begin() + n + 2);
  v.conclusion_pass = v.conclusion_failures.empty();
  v.pass = v.hypothesis_pass && v.conclusion_pass;
  return v;
}

}  // namespace nervekit
