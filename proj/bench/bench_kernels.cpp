#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "extlevel/wedge.hpp"

using namespace extlevel;

namespace {

ExactMatrix random_matrix(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  ExactMatrix g(ring, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g.at(r, c) = ring.from_int(long(rng() % ring.modulus()));
  return g;
}

template <class F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::mt19937_64 rng(20240611);
  auto ring = Ring::modular(9);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-22s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "equal");

  const std::pair<int, int> shapes[] = {{6, 3}, {8, 3}, {8, 4}, {9, 4}};
  for (auto [n, m] : shapes) {
    WedgeSpec spec(n, m);
    auto g = random_matrix(ring, n, rng);
    ExactMatrix a(ring, 1), b(ring, 1);
    double ts = best_ms(reps, [&] { a = wedge_matrix_serial(spec, g); });
    double tp = best_ms(reps, [&] { b = wedge_matrix(spec, g); });
    char name[32];
    std::snprintf(name, sizeof name, "wedge (%d,%d) N=%zu", n, m, spec.N());
    std::printf("%-22s %10.2f %10.2f %8s\n", name, ts, tp, a == b ? "yes" : "NO");
  }

  for (std::size_t n : {32u, 64u, 126u}) {
    auto x = random_matrix(ring, n, rng), y = random_matrix(ring, n, rng);
    ExactMatrix a(ring, 1), b(ring, 1);
    double ts = best_ms(reps, [&] { a = mat_mul_serial(x, y); });
    double tp = best_ms(reps, [&] { b = mat_mul(x, y); });
    char name[32];
    std::snprintf(name, sizeof name, "mat_mul %zu", n);
    std::printf("%-22s %10.2f %10.2f %8s\n", name, ts, tp, a == b ? "yes" : "NO");
  }
  return 0;
}
