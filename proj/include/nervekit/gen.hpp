// Seeded deterministic generators for the property suites and the command
// line: random complexes and covers, random posets and monotone maps, and
// exhaustive enumeration of small posets up to isomorphism.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/nerves.hpp"

#include <cstdint>
#include <vector>

namespace nervekit::gen {

// Complex from facet draws over a fixed vertex pool.
SimplicialComplex random_complex(std::uint64_t seed, int vertex_pool, int facet_count,
                                 int max_facet_size);

// Full cover built by dealing the facets of a random complex among members.
// Members may come out empty; the union is the ambient complex by
// construction.
IndexedCover random_cover(std::uint64_t seed, int vertex_pool, int facet_count,
                          int max_facet_size, int member_count);

// Full cover whose members are unions of vertex-disjoint cones, so every
// component of every nonempty member intersection is a cone and in particular
// acyclic in all degrees.
IndexedCover random_cone_cover(std::uint64_t seed, int patch_count, int member_count,
                               int patch_pool, int patch_facets, int max_facet_size);

// Poset on p00..p{nn} with relation_count generating relations oriented by
// element number, then transitively closed.
Poset random_poset(std::uint64_t seed, int element_count, int relation_count);
// Same, then linked into a single comparability component.
Poset random_connected_poset(std::uint64_t seed, int element_count, int relation_count);

// Monotone map sampled one element at a time along a linear extension of the
// domain; falls back to a constant map when a partial choice dead-ends.
PosetMap random_monotone_map(std::uint64_t seed, const Poset& domain, const Poset& codomain);

// All posets with n elements up to isomorphism (n <= 7), each on elements
// q0..q{n-1} in a canonical labelling, sorted deterministically. Sizes follow
// the classical counts 1, 1, 2, 5, 16, 63, 318, 2045.
std::vector<Poset> enumerate_posets(int n);

}  // namespace nervekit::gen
