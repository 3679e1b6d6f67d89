#include "nervekit/gen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace nervekit::gen {

namespace {

std::string padded(int i) {
  std::string s = std::to_string(i);
  return s.size() < 2 ? "0" + s : s;
}

SimplicialComplex draw_complex(std::mt19937_64& rng, const std::string& prefix, int pool,
                               int facet_count, int max_facet_size) {
  std::vector<Simplex> fs;
  for (int i = 0; i < facet_count; ++i) {
    std::set<Vertex> s;
    int sz = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_facet_size));
    for (int j = 0; j < sz; ++j)
      s.insert(prefix + padded(static_cast<int>(rng() % static_cast<unsigned>(pool))));
    fs.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex::from_facets(fs);
}

}  // namespace

SimplicialComplex random_complex(std::uint64_t seed, int vertex_pool, int facet_count,
                                 int max_facet_size) {
  if (vertex_pool < 1 || facet_count < 1 || max_facet_size < 1)
    throw input_error("random_complex: pool, facet count and facet size must be positive");
  std::mt19937_64 rng(seed);
  return draw_complex(rng, "v", vertex_pool, facet_count, max_facet_size);
}

IndexedCover random_cover(std::uint64_t seed, int vertex_pool, int facet_count,
                          int max_facet_size, int member_count) {
  if (member_count < 1) throw input_error("random_cover: need at least one member");
  std::mt19937_64 rng(seed);
  SimplicialComplex ambient = draw_complex(rng, "v", vertex_pool, facet_count, max_facet_size);
  std::vector<std::vector<Simplex>> deal(static_cast<std::size_t>(member_count));
  for (const Simplex& f : ambient.facets())
    deal[rng() % static_cast<unsigned>(member_count)].push_back(f);
  std::vector<std::string> idx;
  std::vector<SimplicialComplex> members;
  for (int i = 0; i < member_count; ++i) {
    idx.push_back("m" + std::to_string(i));
    members.push_back(SimplicialComplex::from_facets(deal[static_cast<std::size_t>(i)]));
  }
  return IndexedCover::make(std::move(ambient), std::move(idx), std::move(members));
}

IndexedCover random_cone_cover(std::uint64_t seed, int patch_count, int member_count,
                               int patch_pool, int patch_facets, int max_facet_size) {
  if (patch_count < 1 || member_count < 1)
    throw input_error("random_cone_cover: need at least one patch and one member");
  if (member_count > 20) throw input_error("random_cone_cover: too many members");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Simplex>> member_facets(static_cast<std::size_t>(member_count));
  SimplicialComplex ambient;
  for (int j = 0; j < patch_count; ++j) {
    // Disjoint vertex namespaces keep the patches from touching each other.
    std::string prefix = "b" + std::to_string(j) + "x";
    SimplicialComplex base = draw_complex(rng, prefix, patch_pool, patch_facets, max_facet_size);
    SimplicialComplex patch = cone("z" + std::to_string(j), base);
    ambient = unite(ambient, patch);
    unsigned mask = 1u + static_cast<unsigned>(rng() % ((1u << member_count) - 1u));
    for (int i = 0; i < member_count; ++i)
      if (mask & (1u << i))
        for (const Simplex& f : patch.facets()) member_facets[static_cast<std::size_t>(i)].push_back(f);
  }
  std::vector<std::string> idx;
  std::vector<SimplicialComplex> members;
  for (int i = 0; i < member_count; ++i) {
    idx.push_back("m" + std::to_string(i));
    members.push_back(SimplicialComplex::from_facets(member_facets[static_cast<std::size_t>(i)]));
  }
  return IndexedCover::make(std::move(ambient), std::move(idx), std::move(members));
}

Poset random_poset(std::uint64_t seed, int element_count, int relation_count) {
  if (element_count < 0) throw input_error("random_poset: negative element count");
  std::mt19937_64 rng(seed);
  std::vector<std::string> elems;
  for (int i = 0; i < element_count; ++i) elems.push_back("p" + padded(i));
  std::vector<std::pair<std::string, std::string>> rels;
  for (int r = 0; r < relation_count && element_count >= 2; ++r) {
    int a = static_cast<int>(rng() % static_cast<unsigned>(element_count));
    int b = static_cast<int>(rng() % static_cast<unsigned>(element_count));
    if (a == b) continue;
    if (a > b) std::swap(a, b);  // orient by number: acyclic by construction
    rels.push_back({elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]});
  }
  return Poset::from_relations(std::move(elems), rels);
}

Poset random_connected_poset(std::uint64_t seed, int element_count, int relation_count) {
  std::mt19937_64 rng(seed);
  Poset p = random_poset(rng(), element_count, relation_count);
  while (!poset_connected(p) && p.size() >= 2) {
    // Bridge the first two comparability components with one more relation.
    std::vector<std::vector<std::string>> comps = poset_components(p);
    const std::string& a = comps[0][rng() % comps[0].size()];
    const std::string& b = comps[1][rng() % comps[1].size()];
    std::vector<std::pair<std::string, std::string>> rels = p.all_relations();
    rels.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    p = Poset::from_relations(p.elements(), rels);
  }
  return p;
}

PosetMap random_monotone_map(std::uint64_t seed, const Poset& domain, const Poset& codomain) {
  if (domain.size() > 0 && codomain.size() == 0)
    throw input_error("random_monotone_map: empty codomain");
  std::mt19937_64 rng(seed);
  // Linear extension: predecessors have strictly smaller down-sets.
  std::vector<std::string> order = domain.elements();
  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return downset(domain, a).size() < downset(domain, b).size();
  });
  std::map<std::string, std::string> f;
  bool ok = true;
  for (const std::string& e : order) {
    std::vector<std::string> candidates;
    for (const std::string& c : codomain.elements()) {
      bool fits = true;
      for (const std::string& p : domain.elements())
        if (domain.less(p, e) && !codomain.leq(f.at(p), c)) {
          fits = false;
          break;
        }
      if (fits) candidates.push_back(c);
    }
    if (candidates.empty()) {
      ok = false;
      break;
    }
    f[e] = candidates[rng() % candidates.size()];
  }
  if (!ok) {
    // Constant maps are always monotone.
    std::vector<std::string> tops = codomain.maximal_elements();
    const std::string& t = tops[rng() % tops.size()];
    for (const std::string& e : domain.elements()) f[e] = t;
  }
  return PosetMap::make(domain, codomain, std::move(f));
}

namespace {

using Matrix = std::vector<std::vector<uint8_t>>;

Matrix unpack(std::uint64_t key, int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (key & (1ull << (i * n + j))) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return m;
}

// Iterated neighbour refinement; isomorphism-invariant by construction.
std::vector<std::string> element_invariants(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::string> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int out = 0, in = 0;
    for (int j = 0; j < n; ++j) {
      out += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      in += m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    inv[static_cast<std::size_t>(i)] = std::to_string(out) + "." + std::to_string(in);
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> up, down;
      for (int j = 0; j < n; ++j) {
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) up.push_back(inv[static_cast<std::size_t>(j)]);
        if (m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) down.push_back(inv[static_cast<std::size_t>(j)]);
      }
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      std::string s = inv[static_cast<std::size_t>(i)] + "|";
      for (const std::string& u : up) s += u + ",";
      s += "|";
      for (const std::string& d : down) s += d + ",";
      next[static_cast<std::size_t>(i)] = s;
    }
    inv = next;
  }
  return inv;
}

// Minimum packed matrix over relabellings that sort the refinement classes.
std::uint64_t canonical_key(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  std::vector<std::string> inv = element_invariants(m);
  std::map<std::string, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[inv[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [k, v] : classes) blocks.push_back(v);

  std::uint64_t best = ~0ull;
  std::vector<int> perm;
  auto dfs = [&](auto&& self, std::size_t bi) -> void {
    if (bi == blocks.size()) {
      std::uint64_t key = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (m[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
               [static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])])
            key |= 1ull << (a * n + b);
      best = std::min(best, key);
      return;
    }
    std::vector<int> block = blocks[bi];
    std::sort(block.begin(), block.end());
    do {
      perm.insert(perm.end(), block.begin(), block.end());
      self(self, bi + 1);
      perm.resize(perm.size() - block.size());
    } while (std::next_permutation(block.begin(), block.end()));
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
  if (n < 0 || n > 7) throw input_error("enumerate_posets: supported for 0 <= n <= 7");
  // Grow by adding a maximal element over each down-closed subset, then
  // deduplicate by canonical form.
  std::map<std::uint64_t, Matrix> cur;
  cur[0] = Matrix{};
  for (int k = 0; k < n; ++k) {
    std::map<std::uint64_t, Matrix> next;
    for (const auto& [key, m] : cur) {
      std::vector<unsigned> pred(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
            pred[static_cast<std::size_t>(i)] |= 1u << j;
      for (unsigned ideal = 0; ideal < (1u << k); ++ideal) {
        bool closed = true;
        for (int i = 0; i < k && closed; ++i)
          if ((ideal & (1u << i)) && (pred[static_cast<std::size_t>(i)] & ~ideal)) closed = false;
        if (!closed) continue;
        Matrix q(static_cast<std::size_t>(k) + 1,
                 std::vector<uint8_t>(static_cast<std::size_t>(k) + 1, 0));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int i = 0; i < k; ++i)
          if (ideal & (1u << i)) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 1;
        std::uint64_t ck = canonical_key(q);
        if (!next.count(ck)) next[ck] = unpack(ck, k + 1);
      }
    }
    cur = std::move(next);
  }
  std::vector<Poset> out;
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back("q" + std::to_string(i));
  for (const auto& [key, m] : cur) out.push_back(Poset::from_less_matrix(elems, m));
  return out;
}

}  // namespace nervekit::gen
