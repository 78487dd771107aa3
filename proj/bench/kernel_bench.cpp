// Serial reference vs OpenMP kernels: packing verification and all-pairs
// distances. Usage: halin_kernel_bench [verify_vertices] [apsp_vertices]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "halin/colorer.hpp"
#include "halin/generator.hpp"
#include "halin/oracle.hpp"
#include "halin/verifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_of(int runs, F&& f) {
  double best = 1e300;
  for (int r = 0; r < runs; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* kernel, std::size_t n, double serial_ms, double parallel_ms) {
  std::cout << std::left << std::setw(22) << kernel << std::right << std::setw(10) << n
            << std::setw(14) << std::fixed << std::setprecision(3) << serial_ms << std::setw(14)
            << parallel_ms << std::setw(10) << std::setprecision(2) << serial_ms / parallel_ms << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace halin;
  const std::size_t verify_n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 400000;
  const std::size_t apsp_n = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 6000;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << '\n';
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(10) << "n_total"
            << std::setw(14) << "serial_ms" << std::setw(14) << "parallel_ms" << std::setw(10)
            << "speedup" << '\n';

  {
    const HalinGraph g = gen_random_halin({verify_n * 2 / 3, 5, 11});
    const LabelColoring labels = to_labels(packing_coloring(g));
    const ClassAssignment classes = ClassAssignment::standard();
    bool agree = true;
    double s = best_of(3, [&] { agree &= verify_packing_serial(g, labels, classes).ok; });
    double p = best_of(3, [&] { agree &= verify_packing(g, labels, classes).ok; });
    row("verify_packing", g.vertex_count(), s, p);
    if (!agree) return 1;
  }
  {
    const HalinGraph g = gen_random_halin({apsp_n * 2 / 3, 5, 12});
    DistanceMatrix ds, dp;
    double s = best_of(3, [&] { ds = all_pairs_distances_serial(g); });
    double p = best_of(3, [&] { dp = all_pairs_distances(g); });
    row("all_pairs_distances", g.vertex_count(), s, p);
    if (!(ds == dp)) return 1;
  }
  return 0;
}
