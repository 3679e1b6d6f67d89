// Exact homology of finite complexes and truncated simplicial sets, plus the
// derived judgements used by the verifiers: acyclicity certificates, homology
// range comparison, and induced maps on homology over a field.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/exactla.hpp"

#include <optional>

namespace nervekit {

// Coefficient choice: rationals, integers, or a prime field ("q", "z", "f2",
// "fp:<p>" on the command line).
struct CoefficientSpec {
  enum class Kind { Q, Z, Fp };
  Kind kind = Kind::Q;
  std::uint32_t p = 0;

  static CoefficientSpec q() { return {Kind::Q, 0}; }
  static CoefficientSpec z() { return {Kind::Z, 0}; }
  static CoefficientSpec f2() { return {Kind::Fp, 2}; }
  static CoefficientSpec fp(std::uint32_t p);
  static CoefficientSpec parse(const std::string& s);
  std::string str() const;
  bool is_field() const { return kind != Kind::Z; }
  bool operator==(const CoefficientSpec& o) const { return kind == o.kind && p == o.p; }
};

// Chain complex with integer boundary matrices, degrees 0..top_degree().
// boundary[k] maps degree k to degree k-1 (k >= 1); entry boundary[0] is a
// placeholder. When truncated_top is set, degree-top data lacks the incoming
// boundary and homology there is not determined.
struct ChainComplexData {
  std::vector<int> ranks;
  std::vector<la::IntMat> boundary;
  std::vector<std::vector<std::string>> labels;
  bool truncated_top = false;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
};

// Simplicial chain complex with lexicographic bases and alternating-sign
// boundaries, through degree max_degree (>= 0).
ChainComplexData chain_complex(const SimplicialComplex& k, int max_degree);
// Normalized chains of a truncated simplicial set: nondegenerate cells only,
// degenerate faces dropped. Requires max_degree <= s.max_dim.
ChainComplexData normalized_chain_complex(const SimplicialSetTrunc& s, int max_degree);
// Exact check of boundary * boundary == 0 in consecutive degrees.
bool boundary_squared_is_zero(const ChainComplexData& c);

struct HomologyResult {
  CoefficientSpec coeffs;
  int degree_ceiling = -1;  // betti/torsion valid for degrees 0..degree_ceiling
  std::vector<long long> betti;
  std::vector<std::vector<la::BigInt>> torsion;  // nontrivial invariant factors; Z only
};

HomologyResult homology(const ChainComplexData& c, CoefficientSpec coeffs, Exec ex = Exec::Auto);
// Convenience: homology of a complex through degree max_degree (all exact;
// chain data is extended one degree to keep the top exact).
HomologyResult homology_of_complex(const SimplicialComplex& k, int max_degree,
                                   CoefficientSpec coeffs, Exec ex = Exec::Auto);

// n-acyclicity: nonempty, connected, and H_k = 0 for 0 < k <= n. For n = -1
// only nonemptiness is required; for n <= -2 every complex passes.
struct AcyclicityCertificate {
  int n = 0;
  CoefficientSpec coeffs;
  bool pass = false;
  // -1: failed by emptiness; 0: failed by disconnectedness; k > 0: least
  // degree with nonzero homology.
  std::optional<int> witness_degree;
};
AcyclicityCertificate acyclicity_certificate(const SimplicialComplex& k, int n,
                                             CoefficientSpec coeffs, Exec ex = Exec::Auto);
// Largest n <= cap such that k is n-acyclic (at least -2 by convention).
int acyclicity_level(const SimplicialComplex& k, int cap, CoefficientSpec coeffs,
                     Exec ex = Exec::Auto);

// Degreewise comparison: equality through degree n, plus the degree-(n+1)
// conditions necessary for a surjection from x onto y (rank inequality; over Z
// also mod-p dimension inequalities for primes dividing recorded torsion).
struct RangeCompareResult {
  int n = 0;
  bool pass = false;
  std::vector<std::string> failures;
};
RangeCompareResult range_compare(const HomologyResult& x, const HomologyResult& y, int n);

// Induced map on homology over a field, degrees 0..degree_ceiling. matrix[k]
// is betti_cod x betti_dom with exact entries rendered as strings ("-3/2" over
// Q, residues over F_p).
struct InducedMapResult {
  CoefficientSpec coeffs;
  int degree_ceiling = -1;
  std::vector<long long> betti_dom, betti_cod, rank;
  std::vector<std::uint8_t> iso, epi, mono;
  std::vector<std::vector<std::vector<std::string>>> matrix;
};
InducedMapResult induced_map(const SimplicialMap& f, int max_degree, CoefficientSpec field,
                             Exec ex = Exec::Auto);

}  // namespace nervekit
