// Times the serial reference against the OpenMP kernel on the exhaustive
// right-submodule enumeration and checks that both return the same list.
//
//   bench_enumerate [--large]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "hopfcode/enumerate.hpp"
#include "hopfcode/omega.hpp"

using namespace hopfcode;

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  const char* name;
  unsigned s_size;
  unsigned capN;
  std::uint64_t p;
};

std::vector<unsigned> cycle(unsigned n) {
  std::vector<unsigned> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = (i + 1) % n;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool large = argc > 1 && std::strcmp(argv[1], "--large") == 0;
  std::vector<Instance> instances = {
      {"|S|=3 N=2 GF(3)  (3^6)", 3, 2, 3},
      {"|S|=4 N=2 GF(3)  (3^8)", 4, 2, 3},
      {"|S|=5 N=2 GF(3)  (3^10)", 5, 2, 3},
  };
  if (large) instances.push_back({"|S|=6 N=2 GF(3)  (3^12)", 6, 2, 3});

  std::printf("%-26s %12s %12s %9s %7s\n", "instance", "serial[ms]",
              "openmp[ms]", "speedup", "equal");
  for (const auto& inst : instances) {
    OmegaSpec spec;
    spec.s_size = inst.s_size;
    spec.capN = inst.capN;
    spec.omega = cycle(inst.s_size);
    OmegaAlgebra alg(spec, Field::prime(inst.p));

    auto t0 = Clock::now();
    auto serial = enumerate_right_submodules_serial(alg.algebra());
    auto t1 = Clock::now();
    auto parallel =
        enumerate_right_submodules(alg.algebra(), {default_enumeration_budget(), true});
    auto t2 = Clock::now();

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
      equal = serial[i].space() == parallel[i].space();

    double ms_serial =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    double ms_parallel =
        std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::printf("%-26s %12.1f %12.1f %8.2fx %7s\n", inst.name, ms_serial,
                ms_parallel, ms_serial / ms_parallel,
                equal ? "yes" : "NO");
    if (!equal) return 1;
  }
  return 0;
}
