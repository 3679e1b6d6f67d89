// Levelwise Čech data for an indexed cover: full tuple levels with their
// intersections, the component-level truncated simplicial set, and the
// fiber-product identity tying consecutive levels together.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/nerves.hpp"

#include <string>
#include <vector>

namespace nervekit {

// Level k: every (k+1)-tuple of indices (repeats allowed) whose members have
// a nonempty common intersection, together with that intersection.
struct CechLevel {
  int k = 0;
  struct Cell {
    std::vector<std::string> tuple;
    SimplicialComplex intersection;
  };
  std::vector<Cell> cells;  // lexicographic tuple order
};
CechLevel cech_level(const IndexedCover& cov, int k);
std::vector<CechLevel> cech_levels(const IndexedCover& cov, int k_max);

// Component-level model, truncated at max_dim: nondegenerate k-cells are
// tuples with no two adjacent entries equal plus a component of the
// intersection over the tuple's support; deleting an entry is degenerate
// exactly when it leaves two equal adjacent entries, and otherwise pushes the
// component forward. Homology read from degrees strictly below max_dim is
// exact.
SimplicialSetTrunc cech_delta(const IndexedCover& cov, int max_dim, Exec ex = Exec::Auto);

// Level n cells biject with pairs of a level n-1 cell and a level 1 cell that
// agree on the shared index and whose regions meet; the paired intersections
// cut out exactly the level-n intersection.
struct FiberProductReport {
  int n = 0;
  bool pass = true;
  long long cell_count = 0;
  long long pair_count = 0;
  std::vector<std::string> failures;
};
FiberProductReport cech_fiber_product_check(const IndexedCover& cov, int n);

// Full nerve-theorem verification for a full cover: graded acyclicity
// hypotheses first; when they hold, ambient homology must agree with the
// completed nerve through degree n (plus the degree-(n+1) surjection
// conditions) and the component-level model must agree with the completed
// nerve through degree n+1. When hypotheses fail the conclusion is skipped.
struct NerveTheoremVerdict {
  int n = 0;
  bool hypothesis_pass = false;
  bool conclusion_checked = false;
  bool conclusion_pass = false;
  bool pass = false;
  HypothesisReport hypotheses;
  std::vector<std::string> conclusion_failures;
  // Betti numbers through degree n+1, recorded when the conclusion ran.
  std::vector<long long> betti_ambient, betti_completed, betti_cech;
};
NerveTheoremVerdict verify_nerve_theorem(const IndexedCover& cov, int n, CoefficientSpec coeffs,
                                         Exec ex = Exec::Auto);

}  // namespace nervekit
