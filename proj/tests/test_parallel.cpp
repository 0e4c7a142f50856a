#include <numeric>

#include "doctest.h"
#include "specblocks/blocks.hpp"
#include "specblocks/gp.hpp"
#include "specblocks/parallel.hpp"
#include "support.hpp"

using namespace specblocks;

// The OpenMP kernels must produce exactly the serial reference results.

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, Exec::parallel, [&](std::int64_t i) { hits[i] += 1; });
  CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("parallel_for rethrows the lowest-index error") {
  CHECK_THROWS_WITH_AS(
      parallel_for(64, Exec::parallel,
                   [&](std::int64_t i) {
                     if (i >= 5) throw validation_error("boom at " + std::to_string(i));
                   }),
      "boom at 5", Error);
}

TEST_CASE("spectrum: parallel equals serial") {
  AbelianGroup h({2, 5});
  Symbol s(h, 3);
  s.set_entry(0, 1, {{0, 1}, {1, 4}});
  s.set_entry(1, 0, {{1, 3}});
  s.set_entry(2, 2, {{0, 2}, {1, 1}});
  s.set_entry(1, 2, {{0, 3}});
  SpectrumResult serial = spectrum(s, 1e-8, Exec::serial);
  SpectrumResult parallel = spectrum(s, 1e-8, Exec::parallel);
  REQUIRE(serial.entries.size() == parallel.entries.size());
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    CHECK(serial.entries[i].lambda == parallel.entries[i].lambda);
    CHECK(serial.entries[i].k_set == parallel.entries[i].k_set);
    CHECK(serial.entries[i].multiplicity == parallel.entries[i].multiplicity);
  }
}

TEST_CASE("spectral block system: parallel equals serial") {
  GPGraph cube = gp_graph(4, 1);
  Symbol s = cube.symbol.to_symbol(cube.frame.abstract());
  PermGroup aut = automorphism_group_oracle(cube.graph);
  auto serial = spectral_block_system(aut, s, cube.frame, {-1, 0}, 1e-8, kDefaultCap,
                                      Exec::serial);
  auto parallel = spectral_block_system(aut, s, cube.frame, {-1, 0}, 1e-8, kDefaultCap,
                                        Exec::parallel);
  CHECK(serial.blocks == parallel.blocks);
  CHECK(serial.kernel.elements() == parallel.kernel.elements());
  CHECK(serial.triple.k_elements == parallel.triple.k_elements);
}

TEST_CASE("gp_classify: parallel equals serial") {
  GPClassifyResult serial = gp_classify(10, Exec::serial);
  GPClassifyResult parallel = gp_classify(10, Exec::parallel);
  CHECK(serial.edge_transitive == parallel.edge_transitive);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].oracle_edge_transitive == parallel.rows[i].oracle_edge_transitive);
    CHECK(serial.rows[i].filter_passes == parallel.rows[i].filter_passes);
  }
}
