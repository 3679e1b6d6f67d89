#include "nervekit/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace nervekit {

using la::BigInt;
using la::BigRat;
using la::IntMat;

// --- coefficients --------------------------------------------------------

namespace {
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

CoefficientSpec CoefficientSpec::fp(std::uint32_t p) {
  if (!is_prime_u32(p)) throw input_error("coefficient field fp:<p> needs a prime p");
  return {Kind::Fp, p};
}

CoefficientSpec CoefficientSpec::parse(const std::string& s) {
  if (s == "q") return q();
  if (s == "z") return z();
  if (s == "f2") return f2();
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t v = 0;
    try {
      v = std::stoull(s.substr(3));
    } catch (...) {
      throw input_error("bad coefficient spec \"" + s + "\"");
    }
    if (v < 2 || v >= (1ull << 31)) throw input_error("fp:<p> needs 2 <= p < 2^31");
    return fp(static_cast<std::uint32_t>(v));
  }
  throw input_error("bad coefficient spec \"" + s + "\" (expected q|z|f2|fp:<p>)");
}

std::string CoefficientSpec::str() const {
  switch (kind) {
    case Kind::Q:
      return "q";
    case Kind::Z:
      return "z";
    case Kind::Fp:
      return p == 2 ? "f2" : "fp:" + std::to_string(p);
  }
  return "?";
}

// --- chain complexes -----------------------------------------------------

ChainComplexData chain_complex(const SimplicialComplex& k, int max_degree) {
  if (max_degree < 0) throw input_error("chain_complex: max_degree must be >= 0");
  ChainComplexData c;
  const int top = max_degree;
  std::vector<std::vector<Simplex>> bases(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) bases[static_cast<std::size_t>(d)] = k.simplices_of_dim(d);
  c.ranks.resize(static_cast<std::size_t>(top) + 1);
  c.labels.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    c.ranks[static_cast<std::size_t>(d)] = static_cast<int>(bases[static_cast<std::size_t>(d)].size());
    for (const auto& s : bases[static_cast<std::size_t>(d)])
      c.labels[static_cast<std::size_t>(d)].push_back(simplex_token(s));
  }
  c.boundary.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 1; d <= top; ++d) {
    const auto& hi = bases[static_cast<std::size_t>(d)];
    const auto& lo = bases[static_cast<std::size_t>(d - 1)];
    std::map<Simplex, int> lo_index;
    for (std::size_t i = 0; i < lo.size(); ++i) lo_index[lo[i]] = static_cast<int>(i);
    IntMat b(static_cast<int>(lo.size()), static_cast<int>(hi.size()));
    for (std::size_t col = 0; col < hi.size(); ++col) {
      const Simplex& s = hi[col];
      int sign = 1;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        b.at(lo_index.at(face), static_cast<int>(col)) += sign;
        sign = -sign;
      }
    }
    c.boundary[static_cast<std::size_t>(d)] = std::move(b);
  }
  c.truncated_top = k.dim() > top;
  return c;
}

ChainComplexData normalized_chain_complex(const SimplicialSetTrunc& s, int max_degree) {
  if (max_degree < 0) throw input_error("normalized_chain_complex: max_degree must be >= 0");
  if (max_degree > s.max_dim)
    throw input_error("normalized_chain_complex: simplicial set truncation is below the requested degree");
  ChainComplexData c;
  c.ranks.resize(static_cast<std::size_t>(max_degree) + 1);
  c.labels.resize(static_cast<std::size_t>(max_degree) + 1);
  c.boundary.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d) {
    c.ranks[static_cast<std::size_t>(d)] = static_cast<int>(s.cells[static_cast<std::size_t>(d)].size());
    c.labels[static_cast<std::size_t>(d)] = s.cells[static_cast<std::size_t>(d)];
  }
  for (int d = 1; d <= max_degree; ++d) {
    IntMat b(c.ranks[static_cast<std::size_t>(d - 1)], c.ranks[static_cast<std::size_t>(d)]);
    const auto& face_rows = s.faces[static_cast<std::size_t>(d)];
    for (std::size_t col = 0; col < face_rows.size(); ++col) {
      int sign = 1;
      for (std::size_t i = 0; i < face_rows[col].size(); ++i) {
        int idx = face_rows[col][i];
        if (idx != SimplicialSetTrunc::kDegenerateFace) b.at(idx, static_cast<int>(col)) += sign;
        sign = -sign;
      }
    }
    c.boundary[static_cast<std::size_t>(d)] = std::move(b);
  }
  c.truncated_top =
      max_degree == s.max_dim || !s.cells[static_cast<std::size_t>(max_degree) + 1].empty();
  return c;
}

bool boundary_squared_is_zero(const ChainComplexData& c) {
  for (int d = 2; d <= c.top_degree(); ++d) {
    IntMat prod = la::matmul(c.boundary[static_cast<std::size_t>(d - 1)],
                             c.boundary[static_cast<std::size_t>(d)]);
    for (long long v : prod.a)
      if (v != 0) return false;
  }
  return true;
}

// --- homology ------------------------------------------------------------

HomologyResult homology(const ChainComplexData& c, CoefficientSpec coeffs, Exec ex) {
  HomologyResult h;
  h.coeffs = coeffs;
  const int top = c.top_degree();
  h.degree_ceiling = c.truncated_top ? top - 1 : top;
  if (h.degree_ceiling < 0) return h;
  std::vector<int> rank_b(static_cast<std::size_t>(top) + 2, 0);  // rank of boundary[k]
  std::vector<std::vector<BigInt>> tors(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) {
    const IntMat& b = c.boundary[static_cast<std::size_t>(d)];
    switch (coeffs.kind) {
      case CoefficientSpec::Kind::Q:
        rank_b[static_cast<std::size_t>(d)] = la::rank_q(b, ex);
        break;
      case CoefficientSpec::Kind::Fp:
        rank_b[static_cast<std::size_t>(d)] = la::rank_fp(b, coeffs.p, ex);
        break;
      case CoefficientSpec::Kind::Z: {
        auto s = la::snf(b, ex);
        rank_b[static_cast<std::size_t>(d)] = s.rank;
        tors[static_cast<std::size_t>(d)] = s.torsion();
        break;
      }
    }
  }
  for (int d = 0; d <= h.degree_ceiling; ++d) {
    long long betti = c.ranks[static_cast<std::size_t>(d)] - rank_b[static_cast<std::size_t>(d)] -
                      rank_b[static_cast<std::size_t>(d) + 1];
    h.betti.push_back(betti);
    if (coeffs.kind == CoefficientSpec::Kind::Z)
      h.torsion.push_back(tors[static_cast<std::size_t>(d) + 1]);
    else
      h.torsion.emplace_back();
  }
  return h;
}

HomologyResult homology_of_complex(const SimplicialComplex& k, int max_degree,
                                   CoefficientSpec coeffs, Exec ex) {
  // one extra degree so the requested top is exact even when the complex goes on
  ChainComplexData c = chain_complex(k, max_degree + 1);
  HomologyResult h = homology(c, coeffs, ex);
  if (h.degree_ceiling > max_degree) {
    h.degree_ceiling = max_degree;
    h.betti.resize(static_cast<std::size_t>(max_degree) + 1);
    h.torsion.resize(static_cast<std::size_t>(max_degree) + 1);
  }
  return h;
}

AcyclicityCertificate acyclicity_certificate(const SimplicialComplex& k, int n,
                                             CoefficientSpec coeffs, Exec ex) {
  AcyclicityCertificate cert;
  cert.n = n;
  cert.coeffs = coeffs;
  if (n <= -2) {
    cert.pass = true;
    return cert;
  }
  if (k.empty()) {
    cert.pass = false;
    cert.witness_degree = -1;
    return cert;
  }
  if (n == -1) {
    cert.pass = true;
    return cert;
  }
  if (!k.connected()) {
    cert.pass = false;
    cert.witness_degree = 0;
    return cert;
  }
  if (n >= 1) {
    HomologyResult h = homology_of_complex(k, n, coeffs, ex);
    for (int d = 1; d <= n; ++d) {
      bool zero = h.betti[static_cast<std::size_t>(d)] == 0 &&
                  h.torsion[static_cast<std::size_t>(d)].empty();
      if (!zero) {
        cert.pass = false;
        cert.witness_degree = d;
        return cert;
      }
    }
  }
  cert.pass = true;
  return cert;
}

int acyclicity_level(const SimplicialComplex& k, int cap, CoefficientSpec coeffs, Exec ex) {
  const int bound = std::max(cap, -2);
  if (k.empty()) return -2;
  if (!k.connected()) return std::min(-1, bound);
  if (bound <= 0) return bound;
  HomologyResult h = homology_of_complex(k, cap, coeffs, ex);
  int level = 0;
  for (int d = 1; d <= cap; ++d) {
    if (h.betti[static_cast<std::size_t>(d)] != 0 || !h.torsion[static_cast<std::size_t>(d)].empty())
      break;
    level = d;
  }
  return level;
}

// --- range compare -------------------------------------------------------

namespace {
std::string torsion_str(const std::vector<BigInt>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += t[i].str();
  }
  return s + "]";
}

// dim over F_p of (free^rank + sum Z/d) tensored with F_p
long long mod_p_dim(long long betti, const std::vector<BigInt>& torsion, const BigInt& p) {
  long long dim = betti;
  for (const auto& d : torsion)
    if (d % p == 0) ++dim;
  return dim;
}
}  // namespace

RangeCompareResult range_compare(const HomologyResult& x, const HomologyResult& y, int n) {
  if (!(x.coeffs == y.coeffs)) throw input_error("range_compare: coefficient mismatch");
  if (x.degree_ceiling < n + 1 || y.degree_ceiling < n + 1)
    throw input_error("range_compare: homology not computed through degree n+1");
  RangeCompareResult r;
  r.n = n;
  for (int d = 0; d <= n; ++d) {
    if (x.betti[static_cast<std::size_t>(d)] != y.betti[static_cast<std::size_t>(d)])
      r.failures.push_back("degree " + std::to_string(d) + ": betti " +
                           std::to_string(x.betti[static_cast<std::size_t>(d)]) + " != " +
                           std::to_string(y.betti[static_cast<std::size_t>(d)]));
    if (x.torsion[static_cast<std::size_t>(d)] != y.torsion[static_cast<std::size_t>(d)])
      r.failures.push_back("degree " + std::to_string(d) + ": torsion " +
                           torsion_str(x.torsion[static_cast<std::size_t>(d)]) + " != " +
                           torsion_str(y.torsion[static_cast<std::size_t>(d)]));
  }
  const auto dx = static_cast<std::size_t>(n) + 1;
  if (x.betti[dx] < y.betti[dx])
    r.failures.push_back("degree " + std::to_string(n + 1) + ": rank " +
                         std::to_string(x.betti[dx]) + " cannot surject onto rank " +
                         std::to_string(y.betti[dx]));
  // mod-p conditions for a surjection of finitely generated abelian groups
  std::vector<BigInt> primes;
  auto collect = [&](const std::vector<BigInt>& tor) {
    for (const auto& d : tor) {
      BigInt v = d;
      for (BigInt f = 2; f * f <= v; ++f)
        while (v % f == 0) {
          primes.push_back(f);
          v /= f;
        }
      if (v > 1) primes.push_back(v);
    }
  };
  collect(x.torsion[dx]);
  collect(y.torsion[dx]);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) {
    long long lx = mod_p_dim(x.betti[dx], x.torsion[dx], p);
    long long ly = mod_p_dim(y.betti[dx], y.torsion[dx], p);
    if (lx < ly)
      r.failures.push_back("degree " + std::to_string(n + 1) + ": mod-" + p.str() +
                           " dimension " + std::to_string(lx) + " cannot surject onto " +
                           std::to_string(ly));
  }
  r.pass = r.failures.empty();
  return r;
}

// --- induced maps --------------------------------------------------------

namespace {

// Chain map matrix of f in degree k: signed permutation entries, zero on
// collapsing simplices.
IntMat chain_map_matrix(const SimplicialMap& f, int k) {
  auto dom = f.domain().simplices_of_dim(k);
  auto cod = f.codomain().simplices_of_dim(k);
  std::map<Simplex, int> cod_index;
  for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
  IntMat m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (std::size_t col = 0; col < dom.size(); ++col) {
    std::vector<Vertex> img;
    img.reserve(dom[col].size());
    for (const auto& v : dom[col]) img.push_back(f(v));
    // permutation sign via insertion sort; duplicate vertices collapse to zero
    int sign = 1;
    bool collapsed = false;
    for (std::size_t i = 1; i < img.size() && !collapsed; ++i)
      for (std::size_t j = i; j > 0; --j) {
        if (img[j - 1] < img[j]) break;
        if (img[j - 1] == img[j]) {
          collapsed = true;
          break;
        }
        std::swap(img[j - 1], img[j]);
        sign = -sign;
      }
    if (collapsed) continue;
    m.at(cod_index.at(img), static_cast<int>(col)) = sign;
  }
  return m;
}

IntMat columns_to_mat(const std::vector<std::vector<BigInt>>& cols, int rows) {
  IntMat m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) {
      const BigInt& v = cols[c][static_cast<std::size_t>(r)];
      if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw input_error("induced map: cycle basis entry exceeds 64-bit range");
      m.at(r, static_cast<int>(c)) = static_cast<long long>(v);
    }
  return m;
}

IntMat fp_columns_to_mat(const std::vector<std::vector<std::uint32_t>>& cols, int rows) {
  IntMat m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][static_cast<std::size_t>(r)];
  return m;
}

IntMat select_columns(const IntMat& m, const std::vector<int>& cols) {
  IntMat out(m.rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < m.rows; ++r) out.at(r, static_cast<int>(c)) = m.at(r, cols[c]);
  return out;
}

std::string rat_str(const BigRat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

InducedMapResult induced_map(const SimplicialMap& f, int max_degree, CoefficientSpec field,
                             Exec ex) {
  if (!field.is_field())
    throw input_error("induced_map: integer coefficients not supported; use q, f2 or fp:<p>");
  if (max_degree < 0) throw input_error("induced_map: max_degree must be >= 0");
  InducedMapResult res;
  res.coeffs = field;
  res.degree_ceiling = max_degree;
  const bool rational = field.kind == CoefficientSpec::Kind::Q;
  const std::uint32_t p = field.p;

  ChainComplexData dom = chain_complex(f.domain(), max_degree + 1);
  ChainComplexData cod = chain_complex(f.codomain(), max_degree + 1);

  for (int k = 0; k <= max_degree; ++k) {
    const int ndom = dom.ranks[static_cast<std::size_t>(k)];
    const int ncod = cod.ranks[static_cast<std::size_t>(k)];
    const IntMat zero_dom(0, ndom), zero_cod(0, ncod);
    const IntMat& ddom = k > 0 ? dom.boundary[static_cast<std::size_t>(k)] : zero_dom;
    const IntMat& dcod = k > 0 ? cod.boundary[static_cast<std::size_t>(k)] : zero_cod;
    const IntMat& bdom = dom.boundary[static_cast<std::size_t>(k) + 1];
    const IntMat& bcod = cod.boundary[static_cast<std::size_t>(k) + 1];

    // cycle space bases
    IntMat zdom(ndom, 0), zcod(ncod, 0);
    if (rational) {
      zdom = columns_to_mat(la::kernel_q(ddom, ex), ndom);
      zcod = columns_to_mat(la::kernel_q(dcod, ex), ncod);
    } else {
      zdom = fp_columns_to_mat(la::kernel_fp(ddom, p, ex), ndom);
      zcod = fp_columns_to_mat(la::kernel_fp(dcod, p, ex), ncod);
    }

    // extend im(boundary_{k+1}) to the cycle space: kernel columns that carry
    // new pivots represent a homology basis
    auto pick_reps = [&](const IntMat& bmat, const IntMat& zmat) {
      IntMat joined = la::hcat(bmat, zmat);
      std::vector<int> pivots = rational ? la::pivot_columns_q(joined, ex)
                                         : la::pivot_columns_fp(joined, p, ex);
      std::vector<int> reps;
      for (int c : pivots)
        if (c >= bmat.cols) reps.push_back(c - bmat.cols);
      return reps;
    };
    std::vector<int> dom_rep_cols = pick_reps(bdom, zdom);
    std::vector<int> cod_rep_cols = pick_reps(bcod, zcod);
    const long long betti_dom = static_cast<long long>(dom_rep_cols.size());
    const long long betti_cod = static_cast<long long>(cod_rep_cols.size());

    IntMat dom_reps = select_columns(zdom, dom_rep_cols);
    IntMat cod_reps = select_columns(zcod, cod_rep_cols);

    // push domain representatives through the chain map
    IntMat fk = chain_map_matrix(f, k);
    IntMat pushed = la::matmul(fk, dom_reps);

    // express pushed cycles over [boundaries | homology reps] of the codomain
    IntMat block = la::hcat(bcod, cod_reps);
    std::vector<std::vector<std::string>> mat(static_cast<std::size_t>(betti_cod),
                                              std::vector<std::string>(static_cast<std::size_t>(betti_dom)));
    IntMat coeff_int(static_cast<int>(betti_cod), static_cast<int>(betti_dom));
    if (rational) {
      auto sol = la::span_solve_q(block, pushed, ex);
      // denominators cleared per column for the rank computation
      for (int c = 0; c < static_cast<int>(betti_dom); ++c) {
        if (!sol.consistent[static_cast<std::size_t>(c)])
          throw input_error("induced_map: pushed cycle not a cycle (internal error)");
        std::vector<BigRat> hcoords(static_cast<std::size_t>(betti_cod), BigRat(0));
        for (std::size_t i = 0; i < sol.pivot_cols.size(); ++i) {
          int col = sol.pivot_cols[i];
          if (col >= bcod.cols)
            hcoords[static_cast<std::size_t>(col - bcod.cols)] = sol.coords[static_cast<std::size_t>(c)][i];
        }
        BigInt lcm = 1;
        for (const auto& v : hcoords)
          lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
        for (int r = 0; r < static_cast<int>(betti_cod); ++r) {
          mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = rat_str(hcoords[static_cast<std::size_t>(r)]);
          BigInt scaled = boost::multiprecision::numerator(hcoords[static_cast<std::size_t>(r)] * BigRat(lcm));
          if (scaled > std::numeric_limits<long long>::max() ||
              scaled < std::numeric_limits<long long>::min())
            throw input_error("induced_map: homology coordinate exceeds 64-bit range");
          coeff_int.at(r, c) = static_cast<long long>(scaled);
        }
      }
      res.rank.push_back(la::rank_q(coeff_int, ex));
    } else {
      auto sol = la::span_solve_fp(block, pushed, p, ex);
      for (int c = 0; c < static_cast<int>(betti_dom); ++c) {
        if (!sol.consistent[static_cast<std::size_t>(c)])
          throw input_error("induced_map: pushed cycle not a cycle (internal error)");
        for (std::size_t i = 0; i < sol.pivot_cols.size(); ++i) {
          int col = sol.pivot_cols[i];
          if (col >= bcod.cols) {
            int r = col - bcod.cols;
            std::uint32_t v = sol.coords[static_cast<std::size_t>(c)][i];
            mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = std::to_string(v);
            coeff_int.at(r, c) = v;
          }
        }
      }
      for (auto& row : mat)
        for (auto& cell : row)
          if (cell.empty()) cell = "0";
      res.rank.push_back(la::rank_fp(coeff_int, p, ex));
    }

    res.betti_dom.push_back(betti_dom);
    res.betti_cod.push_back(betti_cod);
    res.matrix.push_back(std::move(mat));
    const long long rk = res.rank.back();
    res.epi.push_back(rk == betti_cod ? 1 : 0);
    res.mono.push_back(rk == betti_dom ? 1 : 0);
    res.iso.push_back(rk == betti_cod && rk == betti_dom ? 1 : 0);
  }
  return res;
}

}  // namespace nervekit
