#include "nervekit/exactla.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nervekit::la {

bool exec_is_parallel(Exec ex) {
#ifdef _OPENMP
  return ex != Exec::Serial;
#else
  (void)ex;
  return false;
#endif
}

IntMat hcat(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows) throw std::logic_error("hcat: row mismatch");
  IntMat m(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::logic_error("matmul: shape mismatch");
  IntMat m(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      long long v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) m.at(i, j) += v * b.at(k, j);
    }
  return m;
}

namespace {

struct OverflowTag {};

template <class T>
struct MatT {
  int rows = 0, cols = 0;
  std::vector<T> a;
  MatT() = default;
  MatT(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), T(0)) {}
  T& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class T>
MatT<T> to_mat(const IntMat& m) {
  MatT<T> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = T(m.a[i]);
  return out;
}

constexpr long long kGuard = 1ll << 62;

// (piv*cur - lead*top) / prev, exact division; OverflowTag when int64 is not
// enough (caller retries with BigInt).
inline long long bareiss_update_ll(long long piv, long long cur, long long lead, long long top,
                                   long long prev) {
  if (piv > kGuard || piv < -kGuard || cur > kGuard || cur < -kGuard || lead > kGuard ||
      lead < -kGuard || top > kGuard || top < -kGuard)
    throw OverflowTag{};
  __int128 num = static_cast<__int128>(piv) * cur - static_cast<__int128>(lead) * top;
  __int128 q = num / prev;
  if (q * static_cast<__int128>(prev) != num) throw OverflowTag{};
  if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
    throw OverflowTag{};
  return static_cast<long long>(q);
}

inline BigInt bareiss_update_big(const BigInt& piv, const BigInt& cur, const BigInt& lead,
                                 const BigInt& top, const BigInt& prev) {
  return (piv * cur - lead * top) / prev;
}

template <class T>
bool abs_less(const T& x, const T& y) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(x) < abs(y);
}

// One Bareiss step below pivot row t, pivot column c. Classical fraction-free
// update applied to every row below the pivot (also rows whose leading entry
// is zero; for those it is the exact rescale piv*cur/prev). Rows are
// independent, so the parallel variant is bit-identical to the serial one.
template <class T>
void bareiss_sweep(MatT<T>& m, int t, int c, const T& prev, bool par) {
  const T piv = m.at(t, c);
  std::atomic<bool> overflowed{false};
  auto body = [&](int i) {
    const T lead = m.at(i, c);
    try {
      for (int j = c + 1; j < m.cols; ++j) {
        if constexpr (std::is_same_v<T, long long>) {
          m.at(i, j) = bareiss_update_ll(piv, m.at(i, j), lead, m.at(t, j), prev);
        } else {
          m.at(i, j) = bareiss_update_big(piv, m.at(i, j), lead, m.at(t, j), prev);
        }
      }
      m.at(i, c) = T(0);
    } catch (OverflowTag&) {
      overflowed.store(true, std::memory_order_relaxed);
    }
  };
  if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = t + 1; i < m.rows; ++i) body(i);
  } else {
    for (int i = t + 1; i < m.rows; ++i) body(i);
  }
  if (overflowed.load(std::memory_order_relaxed)) throw OverflowTag{};
}

// Fraction-free row echelon, columns scanned left to right, pivot row chosen
// by least magnitude (ties: least index). Pivots are only taken in columns
// < pivot_col_limit; all columns receive updates. Returns pivot columns.
template <class T>
std::vector<int> echelon_ff(MatT<T>& m, int pivot_col_limit, bool par) {
  std::vector<int> pivot_cols;
  T prev(1);
  int t = 0;
  for (int c = 0; c < pivot_col_limit && t < m.rows; ++c) {
    int best = -1;
    for (int i = t; i < m.rows; ++i) {
      if (m.at(i, c) == T(0)) continue;
      if (best < 0 || abs_less(m.at(i, c), m.at(best, c))) best = i;
    }
    if (best < 0) continue;
    if (best != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(best, j));
    bareiss_sweep(m, t, c, prev, par);
    prev = m.at(t, c);
    pivot_cols.push_back(c);
    ++t;
  }
  return pivot_cols;
}

struct EchelonQ {
  MatT<BigInt> m;
  std::vector<int> pivot_cols;
};

// Runs the int64 fast path and falls back to arbitrary precision on overflow.
EchelonQ echelon_q_dual(const IntMat& in, int pivot_col_limit, bool par) {
  EchelonQ out;
  try {
    MatT<long long> m = to_mat<long long>(in);
    out.pivot_cols = echelon_ff(m, pivot_col_limit, par);
    out.m = MatT<BigInt>(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.m.a[i] = BigInt(m.a[i]);
    return out;
  } catch (OverflowTag&) {
    MatT<BigInt> m = to_mat<BigInt>(in);
    out.pivot_cols = echelon_ff(m, pivot_col_limit, par);
    out.m = std::move(m);
    return out;
  }
}

// Back-substitution over Q on an echelon form: solve (pivot-column block) * x
// = rhs_col, where rhs_col is a column index of m and only rows 0..r-1 carry
// pivots. Returns one rational per pivot column.
std::vector<BigRat> backsolve_q(const MatT<BigInt>& m, const std::vector<int>& pivot_cols,
                                int rhs_col, int rhs_sign) {
  const int r = static_cast<int>(pivot_cols.size());
  std::vector<BigRat> x(static_cast<std::size_t>(r));
  for (int i = r - 1; i >= 0; --i) {
    BigRat acc = BigRat(rhs_sign) * BigRat(m.at(i, rhs_col));
    for (int j = i + 1; j < r; ++j) acc -= BigRat(m.at(i, pivot_cols[static_cast<std::size_t>(j)])) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc / BigRat(m.at(i, pivot_cols[static_cast<std::size_t>(i)]));
  }
  return x;
}

// --- F_p kernels ---------------------------------------------------------

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

MatT<std::uint64_t> to_fp(const IntMat& m, std::uint32_t p) {
  MatT<std::uint64_t> out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    long long v = m.a[i] % static_cast<long long>(p);
    if (v < 0) v += p;
    out.a[i] = static_cast<std::uint64_t>(v);
  }
  return out;
}

void fp_sweep(MatT<std::uint64_t>& m, int t, int c, std::uint64_t p, bool par) {
  const std::uint64_t inv = invmod(m.at(t, c), p);
  auto body = [&](int i) {
    std::uint64_t lead = m.at(i, c);
    if (lead == 0) return;
    std::uint64_t f = lead * inv % p;
    for (int j = c; j < m.cols; ++j) {
      std::uint64_t sub = f * m.at(t, j) % p;
      m.at(i, j) = (m.at(i, j) + p - sub) % p;
    }
  };
  if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = t + 1; i < m.rows; ++i) body(i);
  } else {
    for (int i = t + 1; i < m.rows; ++i) body(i);
  }
}

// Forward elimination mod p; same pivot discipline as the rational path
// (least row index; magnitudes are meaningless mod p).
std::vector<int> echelon_fp(MatT<std::uint64_t>& m, int pivot_col_limit, std::uint32_t p,
                            bool par) {
  std::vector<int> pivot_cols;
  int t = 0;
  for (int c = 0; c < pivot_col_limit && t < m.rows; ++c) {
    int best = -1;
    for (int i = t; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        best = i;
        break;
      }
    if (best < 0) continue;
    if (best != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(best, j));
    fp_sweep(m, t, c, p, par);
    pivot_cols.push_back(c);
    ++t;
  }
  return pivot_cols;
}

std::vector<std::uint32_t> backsolve_fp(const MatT<std::uint64_t>& m,
                                        const std::vector<int>& pivot_cols, int rhs_col,
                                        std::uint64_t rhs_sign_mod_p, std::uint32_t p) {
  const int r = static_cast<int>(pivot_cols.size());
  std::vector<std::uint64_t> x(static_cast<std::size_t>(r));
  for (int i = r - 1; i >= 0; --i) {
    std::uint64_t acc = rhs_sign_mod_p * m.at(i, rhs_col) % p;
    for (int j = i + 1; j < r; ++j) {
      std::uint64_t sub = m.at(i, pivot_cols[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)] % p;
      acc = (acc + p - sub) % p;
    }
    x[static_cast<std::size_t>(i)] =
        acc * invmod(m.at(i, pivot_cols[static_cast<std::size_t>(i)]), p) % p;
  }
  return {x.begin(), x.end()};
}

}  // namespace

int rank_q(const IntMat& m, Exec ex) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return static_cast<int>(echelon_q_dual(m, m.cols, exec_is_parallel(ex)).pivot_cols.size());
}

int rank_fp(const IntMat& m, std::uint32_t p, Exec ex) {
  if (m.rows == 0 || m.cols == 0) return 0;
  auto fp = to_fp(m, p);
  return static_cast<int>(echelon_fp(fp, m.cols, p, exec_is_parallel(ex)).size());
}

std::vector<int> pivot_columns_q(const IntMat& m, Exec ex) {
  if (m.rows == 0 || m.cols == 0) return {};
  return echelon_q_dual(m, m.cols, exec_is_parallel(ex)).pivot_cols;
}

std::vector<int> pivot_columns_fp(const IntMat& m, std::uint32_t p, Exec ex) {
  if (m.rows == 0 || m.cols == 0) return {};
  auto fp = to_fp(m, p);
  return echelon_fp(fp, m.cols, p, exec_is_parallel(ex));
}

std::vector<std::vector<BigInt>> kernel_q(const IntMat& m, Exec ex) {
  const int n = m.cols;
  std::vector<std::vector<BigInt>> out;
  if (n == 0) return out;
  if (m.rows == 0) {
    for (int j = 0; j < n; ++j) {
      std::vector<BigInt> e(static_cast<std::size_t>(n), BigInt(0));
      e[static_cast<std::size_t>(j)] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  EchelonQ e = echelon_q_dual(m, n, exec_is_parallel(ex));
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    // x_f = 1, other free coords 0; solve for pivot coords
    std::vector<BigRat> coords = backsolve_q(e.m, e.pivot_cols, f, -1);
    std::vector<BigRat> x(static_cast<std::size_t>(n), BigRat(0));
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      x[static_cast<std::size_t>(e.pivot_cols[i])] = coords[i];
    // clear denominators, divide by gcd, sign-normalize
    BigInt lcm = 1;
    for (const auto& v : x)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
    std::vector<BigInt> iv(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      BigRat scaled = x[static_cast<std::size_t>(j)] * BigRat(lcm);
      iv[static_cast<std::size_t>(j)] = boost::multiprecision::numerator(scaled);
    }
    BigInt g = 0;
    for (const auto& v : iv) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
      for (auto& v : iv) v /= g;
    for (const auto& v : iv) {
      if (v == 0) continue;
      if (v < 0)
        for (auto& w : iv) w = -w;
      break;
    }
    out.push_back(std::move(iv));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> kernel_fp(const IntMat& m, std::uint32_t p, Exec ex) {
  const int n = m.cols;
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0) return out;
  if (m.rows == 0) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  auto fp = to_fp(m, p);
  auto pivot_cols = echelon_fp(fp, n, p, exec_is_parallel(ex));
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    auto coords = backsolve_fp(fp, pivot_cols, f, p - 1, p);  // rhs sign -1 mod p
    std::vector<std::uint32_t> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      x[static_cast<std::size_t>(pivot_cols[i])] = coords[i];
    out.push_back(std::move(x));
  }
  return out;
}

SpanSolveQ span_solve_q(const IntMat& block, const IntMat& solve_cols, Exec ex) {
  if (block.rows != solve_cols.rows) throw std::logic_error("span_solve_q: row mismatch");
  SpanSolveQ out;
  IntMat joined = hcat(block, solve_cols);
  if (joined.cols == 0 || joined.rows == 0) {
    // no rows: everything is consistent and spanned by nothing
    out.consistent.assign(static_cast<std::size_t>(solve_cols.cols), 1);
    out.coords.assign(static_cast<std::size_t>(solve_cols.cols), {});
    return out;
  }
  EchelonQ e = echelon_q_dual(joined, block.cols, exec_is_parallel(ex));
  out.pivot_cols = e.pivot_cols;
  const int r = static_cast<int>(e.pivot_cols.size());
  for (int s = 0; s < solve_cols.cols; ++s) {
    const int col = block.cols + s;
    bool ok = true;
    for (int i = r; i < e.m.rows && ok; ++i)
      if (e.m.at(i, col) != 0) ok = false;
    out.consistent.push_back(ok ? 1 : 0);
    if (ok)
      out.coords.push_back(backsolve_q(e.m, e.pivot_cols, col, 1));
    else
      out.coords.emplace_back();
  }
  return out;
}

SpanSolveFp span_solve_fp(const IntMat& block, const IntMat& solve_cols, std::uint32_t p,
                          Exec ex) {
  if (block.rows != solve_cols.rows) throw std::logic_error("span_solve_fp: row mismatch");
  SpanSolveFp out;
  IntMat joined = hcat(block, solve_cols);
  if (joined.cols == 0 || joined.rows == 0) {
    out.consistent.assign(static_cast<std::size_t>(solve_cols.cols), 1);
    out.coords.assign(static_cast<std::size_t>(solve_cols.cols), {});
    return out;
  }
  auto fp = to_fp(joined, p);
  auto pivot_cols = echelon_fp(fp, block.cols, p, exec_is_parallel(ex));
  out.pivot_cols = pivot_cols;
  const int r = static_cast<int>(pivot_cols.size());
  for (int s = 0; s < solve_cols.cols; ++s) {
    const int col = block.cols + s;
    bool ok = true;
    for (int i = r; i < fp.rows && ok; ++i)
      if (fp.at(i, col) != 0) ok = false;
    out.consistent.push_back(ok ? 1 : 0);
    if (ok)
      out.coords.push_back(backsolve_fp(fp, pivot_cols, col, 1, p));
    else
      out.coords.emplace_back();
  }
  return out;
}

// --- Smith normal form ---------------------------------------------------

namespace {

// Index of the entry of least magnitude (nonzero) in the submatrix at (t,t);
// ties broken by row then column. (-1,-1) when the submatrix is zero.
std::pair<int, int> min_abs_entry(const MatT<BigInt>& m, int t) {
  int bi = -1, bj = -1;
  for (int i = t; i < m.rows; ++i)
    for (int j = t; j < m.cols; ++j) {
      const BigInt& v = m.at(i, j);
      if (v == 0) continue;
      if (bi < 0 || abs_less(v, m.at(bi, bj))) {
        bi = i;
        bj = j;
      }
    }
  return {bi, bj};
}

}  // namespace

SnfResult snf(const IntMat& in, Exec ex) {
  const bool par = exec_is_parallel(ex);
  MatT<BigInt> m = to_mat<BigInt>(in);
  SnfResult res;
  const int steps = std::min(m.rows, m.cols);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      auto [pi, pj] = min_abs_entry(m, t);
      if (pi < 0) {
        t = steps;  // submatrix zero: done overall
        break;
      }
      if (pi != t)
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
      if (pj != t)
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));
      const BigInt piv = m.at(t, t);
      bool dirty = false;
      // clear column t below the pivot
      {
        std::atomic<bool> any{false};
        auto body = [&](int i) {
          if (m.at(i, t) == 0) return;
          BigInt q = m.at(i, t) / piv;  // truncated: remainder smaller than pivot
          if (q != 0)
            for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
          if (m.at(i, t) != 0) any.store(true, std::memory_order_relaxed);
        };
        if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
          for (int i = t + 1; i < m.rows; ++i) body(i);
        } else {
          for (int i = t + 1; i < m.rows; ++i) body(i);
        }
        dirty = any.load(std::memory_order_relaxed);
      }
      if (dirty) continue;  // a smaller entry appeared; re-pick pivot
      // clear row t right of the pivot
      {
        std::atomic<bool> any{false};
        auto body = [&](int j) {
          if (m.at(t, j) == 0) return;
          BigInt q = m.at(t, j) / piv;
          if (q != 0)
            for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
          if (m.at(t, j) != 0) any.store(true, std::memory_order_relaxed);
        };
        if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
          for (int j = t + 1; j < m.cols; ++j) body(j);
        } else {
          for (int j = t + 1; j < m.cols; ++j) body(j);
        }
        dirty = any.load(std::memory_order_relaxed);
      }
      if (dirty) continue;
      // enforce divisibility of the remaining block by the pivot
      int bad_row = -1;
      for (int i = t + 1; i < m.rows && bad_row < 0; ++i)
        for (int j = t + 1; j < m.cols; ++j)
          if (m.at(i, j) % piv != 0) {
            bad_row = i;
            break;
          }
      if (bad_row >= 0) {
        for (int j = 0; j < m.cols; ++j) m.at(t, j) += m.at(bad_row, j);
        continue;
      }
      break;  // corner done
    }
    if (t >= steps) break;
  }
  for (int t = 0; t < steps; ++t) {
    BigInt d = m.at(t, t);
    if (d == 0) break;
    if (d < 0) d = -d;
    res.diag.push_back(d);
  }
  res.rank = static_cast<int>(res.diag.size());
  return res;
}

}  // namespace nervekit::la
