// Compares the OpenMP kernels against the serial reference implementations:
// same exact values, wall-clock side by side. Run with OMP_NUM_THREADS set
// to taste; on one core the two columns should simply match in value.

#include <chrono>
#include <cstdio>
#include <string>

#include "tqftkit/dw.hpp"
#include "tqftkit/error.hpp"
#include "tqftkit/lattice.hpp"
#include "tqftkit/metric.hpp"
#include "tqftkit/tqft3.hpp"
#include "tqftkit/tqft4.hpp"

using namespace tqftkit;

namespace {

int failures = 0;

template <typename F>
auto timed(F&& f, double& seconds) {
  auto start = std::chrono::steady_clock::now();
  auto value = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return value;
}

template <typename F>
void row(const std::string& name, F&& kernel) {
  double ts = 0, tp = 0;
  auto serial = timed([&] { return kernel(false); }, ts);
  auto parallel = timed([&] { return kernel(true); }, tp);
  bool ok = serial == parallel;
  if (!ok) ++failures;
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   %s\n", name.c_str(), ts, tp,
              ok ? "match" : "MISMATCH");
}

MetricGroup big_cyclic(long long n, long long k) {
  // q(x) = k x^2 / n on Z/n, nondegenerate when gcd(2k, n) = 1 scaling works out
  return MetricGroup::from_cyclic({n}, {PhaseQZ::of(static_cast<long>(k), static_cast<long>(n))},
                                  {{}});
}

}  // namespace

int main() {
  std::printf("tqftkit kernel benchmark\n\n");

  row("gauss_sum  Z/100003 (prime)", [m = big_cyclic(100003, 1)](bool par) {
    return gauss_sum(m, par);
  });

  row("gauss_sum  (Z/2)^16 hyperbolic", [](bool par) {
    std::vector<long long> cyc(16, 2);
    std::vector<PhaseQZ> q(16);
    std::vector<std::vector<PhaseQZ>> b(16);
    for (int i = 0; i < 16; ++i) b[i].resize(15 - i);
    for (int i = 0; i < 16; i += 2) b[i][0] = PhaseQZ::of(1, 2);
    return gauss_sum(MetricGroup::from_cyclic(cyc, q, b), par);
  });

  {
    MetricGroup semion = MetricGroup::from_cyclic({2}, {PhaseQZ::of(1, 4)}, {{}});
    FourManifold k3 = FourManifold::named("K3");
    row("partition_sum  K3 x semion", [&](bool par) { return partition_sum(semion, k3, par); });
  }

  {
    MetricGroup m = big_cyclic(9, 1);
    ZMat link(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) link.at(i, j) = int_of(i == j ? 2 : 1);
    row("rt_invariant  Z/9, 3 components", [&](bool par) {
      return rt_invariant(m, SurgeryPresentation{link}, par);
    });
  }

  row("brute_force_surface  A4 genus 3", [g = named_group("A4")](bool par) {
    return brute_force_surface(g, 3, par);
  });

  row("dw3_invariant  Q8 genus-3 surface", [g = named_group("Q8")](bool par) {
    GroupPresentation p;
    p.generators = 6;
    p.relators = {{{0, 1}, {1, 1}, {0, -1}, {1, -1}, {2, 1}, {3, 1}, {2, -1}, {3, -1},
                   {4, 1}, {5, 1}, {4, -1}, {5, -1}}};
    return dw3_invariant(p, g, par);
  });

  if (failures > 0) {
    std::printf("\n%d kernel(s) disagree between serial and parallel\n", failures);
    return 1;
  }
  std::printf("\nall kernels agree\n");
  return 0;
}
