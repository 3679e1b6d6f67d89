// Compares the serial elimination kernels against the OpenMP ones on a
// medium instance and checks they agree. Wall times are informational; the
// equality check is the point.
#include "nervekit/cech.hpp"
#include "nervekit/gen.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerves.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace nervekit;

namespace {

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int mismatches = 0;

void compare(const std::string& label, const HomologyResult& serial,
             const HomologyResult& parallel, double ts, double tp) {
  bool same = serial.betti == parallel.betti && serial.torsion == parallel.torsion;
  if (!same) ++mismatches;
  std::printf("%-34s serial %8.3fs   openmp %8.3fs   %s\n", label.c_str(), ts, tp,
              same ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 42;
  int scale = argc > 2 ? std::stoi(argv[2]) : 1;

  {
    SimplicialComplex k = gen::random_complex(seed, 10 + 2 * scale, 20 * scale, 5);
    SimplicialComplex kk = barycentric_subdivision(k);
    std::printf("complex: %d vertices, dim %d after subdivision\n",
                static_cast<int>(kk.simplices_of_dim(0).size()), kk.dim());
    HomologyResult hs, hp;
    double ts = timed([&] { hs = homology_of_complex(kk, kk.dim(), CoefficientSpec::z(), Exec::Serial); });
    double tp = timed([&] { hp = homology_of_complex(kk, kk.dim(), CoefficientSpec::z(), Exec::Parallel); });
    compare("integral homology, subdivision", hs, hp, ts, tp);
  }
  {
    IndexedCover cov = gen::random_cover(seed + 1, 10 + scale, 12 * scale, 4, 6);
    SimplicialSetTrunc s = cech_delta(cov, 4);
    ChainComplexData c = normalized_chain_complex(s, 4);
    HomologyResult hs, hp;
    double ts = timed([&] { hs = homology(c, CoefficientSpec::q(), Exec::Serial); });
    double tp = timed([&] { hp = homology(c, CoefficientSpec::q(), Exec::Parallel); });
    compare("discrete nerve model, rational", hs, hp, ts, tp);
  }
  {
    IndexedCover cov = gen::random_cover(seed + 2, 12, 14 * scale, 4, 5);
    SimplicialComplex d = order_complex(completed_nerve(cov).poset);
    HomologyResult hs, hp;
    double ts = timed([&] { hs = homology_of_complex(d, 3, CoefficientSpec::fp(1000003), Exec::Serial); });
    double tp = timed([&] { hp = homology_of_complex(d, 3, CoefficientSpec::fp(1000003), Exec::Parallel); });
    compare("completed nerve, large prime", hs, hp, ts, tp);
  }
  if (mismatches) std::printf("%d kernel mismatches\n", mismatches);
  return mismatches == 0 ? 0 : 1;
}
