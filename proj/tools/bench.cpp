#include <chrono>
#include <cstdio>
#include <set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tangle/crossings.hpp"
#include "tangle/exact.hpp"
#include "tangle/generators.hpp"
#include "tangle/rng.hpp"

using namespace tangle;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void set_threads(int count) {
#ifdef _OPENMP
  omp_set_num_threads(count);
#else
  (void)count;
#endif
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool same_tables(const CrossingTables& a, const CrossingTables& b) {
  if (a.left_inner() != b.left_inner() || a.right_inner() != b.right_inner())
    return false;
  for (int v = 0; v < a.left_inner(); ++v)
    for (int w = 0; w < a.right_inner(); ++w)
      if (a.equal_at(v, w) != b.equal_at(v, w) ||
          a.crossed_at(v, w) != b.crossed_at(v, w))
        return false;
  return true;
}

MinUncutGraph random_graph(int vertices, int edges, std::uint64_t seed) {
  MinUncutGraph g;
  g.vertex_count = vertices;
  Rng rng(seed);
  std::set<std::pair<int, int>> seen;
  while (static_cast<int>(g.edges.size()) < edges) {
    const int a = static_cast<int>(rng.below(vertices));
    const int b = static_cast<int>(rng.below(vertices));
    if (a == b) continue;
    if (!seen.insert(std::minmax(a, b)).second) continue;
    g.edges.emplace_back(a, b);
  }
  return g;
}

void report(const char* kernel, double serial_ms, double parallel_ms,
            bool equal) {
  std::printf("%-22s %10.1f ms %10.1f ms %8.2fx   %s\n", kernel, serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  const int threads = hardware_threads();
  std::printf("threads available: %d\n", threads);
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    const TanglegramInstance inst =
        gen_random(2048, RandomShape::RandomBinary, 11);
    CrossingTables serial(0, 0), parallel(0, 0);
    const double ts = time_ms([&] { serial = build_tables_serial(inst); });
    set_threads(threads);
    const double tp = time_ms([&] { parallel = build_tables(inst); });
    report("build_tables n=2048", ts, tp, same_tables(serial, parallel));
  }

  {
    const TanglegramInstance inst =
        gen_random(16, RandomShape::Complete, 23);
    const int cap = inst.left().inner_count() + inst.right().inner_count();
    ExactResult serial{{}, 0}, parallel{{}, 0};
    set_threads(1);
    const double ts = time_ms([&] { serial = solve_exact(inst, cap); });
    set_threads(threads);
    const double tp = time_ms([&] { parallel = solve_exact(inst, cap); });
    report("solve_exact n=16", ts, tp,
           serial.crossings == parallel.crossings &&
               serial.layout == parallel.layout);
  }

  {
    const MetaInstance meta =
        gen_minuncut(random_graph(400, 2500, 5), 1000, 30);
    const Layout layout = meta_identity_layout(meta);
    std::uint64_t serial = 0, parallel = 0;
    const double ts =
        time_ms([&] { serial = count_meta_crossings_serial(meta, layout); });
    set_threads(threads);
    const double tp =
        time_ms([&] { parallel = count_meta_crossings(meta, layout); });
    report("count_meta E=3301", ts, tp, serial == parallel);
  }

  return 0;
}
