// Exact linear algebra for homology: fraction-free integer elimination
// (rank and kernels over Q), elimination mod p, and Smith normal form over Z
// with arbitrary-precision entries. Every kernel has a serial reference
// implementation and an OpenMP variant that produces bit-identical results;
// pivot choices are made serially between steps so output never depends on
// thread count.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/serialize.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nervekit {

// Execution mode for the parallel/serial kernel pairs.
enum class Exec { Auto, Serial, Parallel };

namespace la {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense row-major integer matrix. Boundary matrices are small and sparse-ish
// but dense storage keeps the elimination kernels simple and cache-friendly.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Horizontal concatenation [a | b]; row counts must match.
IntMat hcat(const IntMat& a, const IntMat& b);
IntMat matmul(const IntMat& a, const IntMat& b);

// Rank over Q via fraction-free Bareiss elimination; int64 fast path with
// automatic arbitrary-precision retry on overflow.
int rank_q(const IntMat& m, Exec ex = Exec::Auto);
// Rank over F_p (p an odd-or-2 prime below 2^31).
int rank_fp(const IntMat& m, std::uint32_t p, Exec ex = Exec::Auto);

// Smith normal form diagonal d1 | d2 | ... | dr (positive, divisibility
// enforced); rank = number of nonzero diagonal entries.
struct SnfResult {
  int rank = 0;
  std::vector<BigInt> diag;
  std::vector<BigInt> torsion() const {  // entries > 1
    std::vector<BigInt> t;
    for (const auto& d : diag)
      if (d > 1) t.push_back(d);
    return t;
  }
};
SnfResult snf(const IntMat& m, Exec ex = Exec::Auto);

// Basis of ker(m) over Q as primitive integer vectors (gcd 1, first nonzero
// entry positive), ordered by free-column index. Columns of m index the
// coordinates.
std::vector<std::vector<BigInt>> kernel_q(const IntMat& m, Exec ex = Exec::Auto);
// Basis of ker(m) over F_p, entries in [0, p).
std::vector<std::vector<std::uint32_t>> kernel_fp(const IntMat& m, std::uint32_t p,
                                                  Exec ex = Exec::Auto);

// Left-to-right column echelon bookkeeping: which columns of [block | rest]
// carry pivots, with column order fixed. Used to extend a spanning set (the
// block) to a basis by columns of rest.
std::vector<int> pivot_columns_q(const IntMat& m, Exec ex = Exec::Auto);
std::vector<int> pivot_columns_fp(const IntMat& m, std::uint32_t p, Exec ex = Exec::Auto);

// Solve block * x = w over Q for each column w of solve_cols, with free
// columns of the block set to zero. consistent[i] is false when column i is
// not in the span. coords[i] has one rational per pivot column of the block.
struct SpanSolveQ {
  std::vector<int> pivot_cols;
  std::vector<char> consistent;
  std::vector<std::vector<BigRat>> coords;
};
SpanSolveQ span_solve_q(const IntMat& block, const IntMat& solve_cols, Exec ex = Exec::Auto);

struct SpanSolveFp {
  std::vector<int> pivot_cols;
  std::vector<char> consistent;
  std::vector<std::vector<std::uint32_t>> coords;
};
SpanSolveFp span_solve_fp(const IntMat& block, const IntMat& solve_cols, std::uint32_t p,
                          Exec ex = Exec::Auto);

// True when ex resolves to the OpenMP path in this build.
bool exec_is_parallel(Exec ex);

}  // namespace la
}  // namespace nervekit
