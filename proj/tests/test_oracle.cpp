#include <doctest.h>

#include <random>

#include "latcount/oracle.hpp"

using namespace latcount;

namespace {

// Occupied columns of a connected set of G x P_n form a run.
bool columns_contiguous(const VertexSet& s, std::size_t m, std::size_t n) {
  std::size_t first = n, last = 0, hit = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) any = any || s.contains(j * m + i);
    if (any) {
      first = std::min(first, j);
      last = j;
      ++hit;
    }
  }
  return hit == last - first + 1;
}

}  // namespace

TEST_CASE("small counts") {
  CHECK(oracle::count_connected_sets(build_family(Family::Path, 2)) == 3);
  CHECK(oracle::count_connected_sets(build_family(Family::Cycle, 4)) == 13);
  CHECK(oracle::count_connected_sets(build_family(Family::Cycle, 5)) == 21);
  CHECK(oracle::count_connected_sets(build_family(Family::Complete, 4)) == 15);
  CHECK(oracle::count_connected_sets(build_family(Family::Star, 4)) == 11);
  CHECK(oracle::count_connected_sets(product_with_path(build_family(Family::Cycle, 4), 2)) == 167);
}

TEST_CASE("threaded and single-threaded counts agree") {
  const Graph g = product_with_path(build_family(Family::Cycle, 5), 4);
  CHECK(oracle::count_connected_sets(g, 1) == oracle::count_connected_sets(g, 7));
  CHECK(oracle::count_connected_sets(g) == 269630);
}

TEST_CASE("enumeration of P_3 in mask order") {
  const auto sets = oracle::enumerate_connected_sets(build_family(Family::Path, 3));
  std::vector<std::uint64_t> masks;
  for (const auto& s : sets) masks.push_back(s.mask64());
  CHECK(masks == std::vector<std::uint64_t>{0b001, 0b010, 0b011, 0b100, 0b110, 0b111});
}

TEST_CASE("refuses graphs over the cap") {
  CHECK_THROWS_AS(oracle::count_connected_sets(build_family(Family::Path, 27)), CountError);
}

TEST_CASE("column support is contiguous") {
  for (auto [kind, m] : {std::pair{Family::Cycle, std::size_t{4}}, std::pair{Family::Path, std::size_t{3}}}) {
    const Graph g = product_with_path(build_family(kind, m), 3);
    std::size_t seen = 0;
    oracle::for_each_connected_set(g, [&](const VertexSet& s) {
      CHECK(columns_contiguous(s, m, 3));
      ++seen;
    });
    CHECK(seen > 0);
  }
}

TEST_CASE("adding an edge never removes connected sets") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 6;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t e = 0; e < n; ++e) {
      const auto u = pick(rng), v = pick(rng);
      if (u != v) edges.emplace_back(u, v);
    }
    const Graph before(n, edges);
    auto u = pick(rng), v = pick(rng);
    if (u == v) v = (u + 1) % n;
    edges.emplace_back(u, v);
    const Graph after(n, edges);
    CHECK(oracle::count_connected_sets(before) <= oracle::count_connected_sets(after));
  }
}

TEST_CASE("locally dense sets") {
  const Graph p3 = build_family(Family::Path, 3);
  CHECK(oracle::count_locally_dense_sets(p3, 1) == 6);
  CHECK(oracle::count_locally_dense_sets(p3, 2) == 40);
  CHECK(oracle::count_locally_dense_sets(p3, 3) == 208);
  CHECK(oracle::count_locally_dense_sets(p3, 3) < oracle::count_connected_sets(product_with_path(p3, 3)));
  const Graph k3 = build_family(Family::Complete, 3);
  CHECK(oracle::count_locally_dense_sets(k3, 4) == oracle::count_connected_sets(product_with_path(k3, 4)));
}

TEST_CASE("c of a single graph") {
  CHECK(oracle::c_value(build_family(Family::Cycle, 4)) == doctest::Approx(1.898829).epsilon(1e-6));
}
