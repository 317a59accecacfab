// Timing comparison between the parallel kernels and their serial
// counterparts: exchange-graph construction (threaded frontier expansion vs
// the naive reference queue) and batch relator verification.

#include <chrono>
#include <cstdio>

#include "cxb/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cxb;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
  int hw = omp_get_max_threads();
#else
  int hw = 1;
#endif
  printf("threads available: %d\n\n", hw);

  printf("%-28s %10s %10s %10s %8s\n", "exchange graph", "reference", "1 thread",
         "threaded", "speedup");
  for (const char* label : {"A4", "B4", "D4", "F4", "H3", "H4"}) {
    Folding f = default_folding(label);
    int reps = std::string(label) == "H4" ? 3 : 10;
    double ref = time_ms([&] { build_ceg_reference(f); }, reps);
    CegOptions one;
    one.threads = 1;
    double serial = time_ms([&] { build_ceg(f, one); }, reps);
    CegOptions par;
    par.threads = hw;
    double threaded = time_ms([&] { build_ceg(f, par); }, reps);
    printf("%-28s %9.2fms %9.2fms %9.2fms %7.2fx\n", label, ref, serial,
           threaded, serial / threaded);
  }

  printf("\n%-28s %10s %10s %8s\n", "relator verification", "1 thread",
         "threaded", "speedup");
  for (const char* label : {"B3", "H3"}) {
    Folding f = default_folding(label);
    ExchangeGraph g = build_ceg(f);
    CoxeterContext ctx(f.target, 200000);
    auto run = [&](int threads) {
      VerifyOptions o;
      o.threads = threads;
      VerificationReport rep;
      TwistLabeling lab = build_twist_labeling(g, ctx, rep, o);
      auto prep = verify_presentations(g, lab, ctx, o);
      return rep.ok && prep.ok;
    };
    double serial = time_ms([&] { run(1); }, 3);
    double threaded = time_ms([&] { run(hw); }, 3);
    printf("%-28s %9.2fms %9.2fms %7.2fx\n", label, serial, threaded,
           serial / threaded);
  }

  {
    printf("\n%-28s %10s %10s %8s\n", "theta invariance", "1 thread", "threaded",
           "speedup");
    Folding f = default_folding("H4");
    auto run = [&](int threads) {
      VerifyOptions o;
      o.threads = threads;
      o.samples = 40;
      verify_theta_invariance(f, o);
    };
    double serial = time_ms([&] { run(1); }, 1);
    double threaded = time_ms([&] { run(hw); }, 1);
    printf("%-28s %9.2fms %9.2fms %7.2fx\n", "H4, 40 sequences", serial,
           threaded, serial / threaded);
  }
  return 0;
}
