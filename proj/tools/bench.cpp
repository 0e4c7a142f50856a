// Benchmark of the OpenMP sweep kernels against their serial reference
// implementations. Each workload is run with both policies and the results
// are compared for equality before timing is reported.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "specblocks/blocks.hpp"
#include "specblocks/gp.hpp"

using namespace specblocks;

namespace {

template <typename Fn>
double time_seconds(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %.2fx\n", name.c_str(),
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

// edge-transitivity oracle over every GP(n,s) pair up to max_n
std::vector<int> gp_sweep(int max_n, Exec exec) {
  std::vector<std::pair<int, int>> pairs;
  for (int n = 3; n <= max_n; ++n)
    for (int s = 1; 2 * s < n; ++s) pairs.emplace_back(n, s);
  std::vector<int> verdicts(pairs.size(), 0);
  parallel_for(static_cast<std::int64_t>(pairs.size()), exec, [&](std::int64_t i) {
    auto [n, s] = pairs[static_cast<std::size_t>(i)];
    verdicts[static_cast<std::size_t>(i)] =
        is_edge_transitive_oracle(gp_graph(n, s).graph) ? 1 : 0;
  });
  return verdicts;
}

// spectra of a batch of random circulant-block symbols
std::vector<std::size_t> spectrum_batch(int count, Exec exec) {
  std::mt19937_64 rng(1234);
  std::vector<Symbol> symbols;
  for (int i = 0; i < count; ++i) {
    AbelianGroup h({static_cast<int>(8 + rng() % 9)});
    int m = 3;
    std::vector<std::vector<Element>> classes(m);
    for (int c = 0; c < m; ++c)
      for (std::int64_t e = 0; e < h.order(); ++e)
        if (rng() % 3 == 0) classes[c].push_back(h.element_at(e));
    Symbol s(h, m);
    for (int i2 = 0; i2 < m; ++i2)
      for (int j = 0; j < m; ++j) s.set_entry(i2, j, classes[((j - i2) % m + m) % m]);
    symbols.push_back(std::move(s));
  }
  std::vector<std::size_t> cluster_counts(symbols.size());
  // the per-symbol loop is the parallel axis here; spectrum() itself stays serial
  parallel_for(static_cast<std::int64_t>(symbols.size()), exec, [&](std::int64_t i) {
    cluster_counts[static_cast<std::size_t>(i)] =
        spectrum(symbols[static_cast<std::size_t>(i)], 1e-8, Exec::serial).entries.size();
  });
  return cluster_counts;
}

// kernel residual filtering over an enumerated dihedral group acting on a
// large cycle
std::vector<std::size_t> kernel_filter(int n, Exec exec) {
  AbelianGroup zn({n});
  Symbol s(zn, 1);
  s.set_entry(0, 0, {{1}, {n - 1}});
  auto real = digraph_from_symbol(s);
  // dihedral group: rotations plus one reflection
  std::vector<int> reflect(n);
  for (int i = 0; i < n; ++i) reflect[i] = (n - i) % n;
  std::vector<Perm> gens = real.frame.h().generators();
  gens.emplace_back(std::move(reflect));
  PermGroup g(n, std::move(gens));

  SpectrumResult spec = spectrum(s, 1e-8);
  std::vector<std::size_t> kernel_orders;
  int taken = 0;
  for (const auto& entry : spec.entries) {
    if (taken >= 4) break;
    auto sys = spectral_block_system(g, s, real.frame, entry.lambda, 1e-8, kDefaultCap, exec);
    kernel_orders.push_back(sys.kernel.elements().size());
    ++taken;
  }
  return kernel_orders;
}

}  // namespace

int main(int argc, char** argv) {
  int gp_max_n = 24;
  int batch = 400;
  int cycle = 500;
  if (argc > 1) gp_max_n = std::atoi(argv[1]);
  if (argc > 2) batch = std::atoi(argv[2]);
  if (argc > 3) cycle = std::atoi(argv[3]);

  std::printf("threads available: %d\n", hardware_threads());

  {
    std::vector<int> serial_out, parallel_out;
    double ts = time_seconds([&] { serial_out = gp_sweep(gp_max_n, Exec::serial); });
    double tp = time_seconds([&] { parallel_out = gp_sweep(gp_max_n, Exec::parallel); });
    if (serial_out != parallel_out) {
      std::fprintf(stderr, "gp sweep: serial and parallel results differ\n");
      return 1;
    }
    report("gp aut-oracle sweep", ts, tp);
  }
  {
    std::vector<std::size_t> serial_out, parallel_out;
    double ts = time_seconds([&] { serial_out = spectrum_batch(batch, Exec::serial); });
    double tp = time_seconds([&] { parallel_out = spectrum_batch(batch, Exec::parallel); });
    if (serial_out != parallel_out) {
      std::fprintf(stderr, "spectrum batch: serial and parallel results differ\n");
      return 1;
    }
    report("spectrum batch", ts, tp);
  }
  {
    std::vector<std::size_t> serial_out, parallel_out;
    double ts = time_seconds([&] { serial_out = kernel_filter(cycle, Exec::serial); });
    double tp = time_seconds([&] { parallel_out = kernel_filter(cycle, Exec::parallel); });
    if (serial_out != parallel_out) {
      std::fprintf(stderr, "kernel filter: serial and parallel results differ\n");
      return 1;
    }
    report("eigenspace kernel filter", ts, tp);
  }
  return 0;
}
