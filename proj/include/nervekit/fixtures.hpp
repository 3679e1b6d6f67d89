// Named example inputs used by the test suites and the command line: small
// complexes with known homology, covers exercising the nerve machinery, and
// the poset/map examples for the fiber verifiers.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/posettools.hpp"

#include <string>
#include <vector>

namespace nervekit::fixtures {

std::vector<std::string> complex_names();
std::vector<std::string> cover_names();
std::vector<std::string> poset_names();
std::vector<std::string> posetmap_names();

// Throw input_error for unknown names.
SimplicialComplex complex_fixture(const std::string& name);
IndexedCover cover_fixture(const std::string& name);
Poset poset_fixture(const std::string& name);
PosetMap posetmap_fixture(const std::string& name);

}  // namespace nervekit::fixtures
