#include "latcount/oracle.hpp"

#include <algorithm>
#include <thread>

namespace latcount::oracle {

namespace {

std::vector<std::uint64_t> checked_masks(const Graph& g) {
  if (g.vertex_count() > kMaxVertices) {
    throw CountError(ErrorKind::GraphTooLarge,
                     "oracle accepts at most " + std::to_string(kMaxVertices) + " vertices, got " +
                         std::to_string(g.vertex_count()));
  }
  std::vector<std::uint64_t> masks(g.vertex_count());
  for (std::size_t v = 0; v < masks.size(); ++v) masks[v] = g.neighbor_mask(v);
  return masks;
}

std::uint64_t count_range(std::uint64_t first, std::uint64_t last, const std::vector<std::uint64_t>& masks) {
  std::uint64_t total = 0;
  for (std::uint64_t s = first; s < last; ++s) {
    if (mask_is_connected(s, masks)) ++total;
  }
  return total;
}

}  // namespace

BigCount count_connected_sets(const Graph& g, unsigned threads) {
  const auto masks = checked_masks(g);
  const std::uint64_t end = std::uint64_t{1} << g.vertex_count();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  // Not worth spawning for small graphs.
  if (end < (std::uint64_t{1} << 16)) threads = 1;

  std::vector<std::uint64_t> partial(threads, 0);
  const std::uint64_t chunk = (end - 1 + threads - 1) / threads;
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t first = 1 + t * chunk;
    const std::uint64_t last = std::min(end, first + chunk);
    if (first >= last) break;
    if (threads == 1) {
      partial[t] = count_range(first, last, masks);
    } else {
      workers.emplace_back([&, t, first, last] { partial[t] = count_range(first, last, masks); });
    }
  }
  workers.clear();

  BigCount total = 0;
  for (auto p : partial) total += BigCount(static_cast<unsigned long>(p));
  return total;
}

void for_each_connected_set(const Graph& g, const std::function<void(const VertexSet&)>& visit) {
  const auto masks = checked_masks(g);
  const std::uint64_t end = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t s = 1; s < end; ++s) {
    if (mask_is_connected(s, masks)) visit(VertexSet::from_mask(s, g.vertex_count()));
  }
}

std::vector<VertexSet> enumerate_connected_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_connected_set(g, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

BigCount count_locally_dense_sets(const Graph& base, std::size_t n) {
  const Graph product = product_with_path(base, n);
  const auto masks = checked_masks(product);
  const std::size_t m = base.vertex_count();
  const std::uint64_t column_mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t end = std::uint64_t{1} << product.vertex_count();
  std::uint64_t total = 0;
  for (std::uint64_t s = 1; s < end; ++s) {
    if (!mask_is_connected(s, masks)) continue;
    bool dense = true;
    for (std::size_t j = 0; dense && j + 1 < n; ++j) {
      const std::uint64_t pair = s & (column_mask << (j * m) | column_mask << ((j + 1) * m));
      const bool both = (s >> (j * m) & column_mask) != 0 && (s >> ((j + 1) * m) & column_mask) != 0;
      if (both) dense = mask_is_connected(pair, masks);
    }
    if (dense) ++total;
  }
  return BigCount(static_cast<unsigned long>(total));
}

double c_value(const Graph& g) {
  return nth_root(count_connected_sets(g), static_cast<double>(g.vertex_count()));
}

}  // namespace latcount::oracle
