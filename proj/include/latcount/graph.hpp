#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latcount/bigcount.hpp"

namespace latcount {

/// Subset of a graph's vertices, stored as a bitmask of fixed width.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t width);

  static VertexSet from_mask(std::uint64_t mask, std::size_t width);
  static VertexSet from_indices(std::span<const std::size_t> indices, std::size_t width);
  static VertexSet full(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  bool contains(std::size_t v) const;
  void insert(std::size_t v);
  void erase(std::size_t v);
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  /// Low 64 bits of the mask. Throws if the width exceeds 64.
  std::uint64_t mask64() const;

  std::vector<std::size_t> indices() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t width_ = 0;
};

enum class Family { Path, Cycle, Complete, Star };

std::string_view family_name(Family kind);
std::optional<Family> parse_family(std::string_view name);

/// Base size and path length recorded when a graph is built as G x P_n.
struct ProductMeta {
  std::size_t base_size;
  std::size_t path_length;
};

/// Finite simple undirected graph on vertices 0..vertex_count-1.
/// Immutable after construction.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints throw.
  Graph(std::size_t vertex_count,
        std::span<const std::pair<std::size_t, std::size_t>> edges,
        std::optional<ProductMeta> meta = std::nullopt);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const std::uint32_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  /// Neighbour bitmask of v. Only valid when vertex_count() <= 64.
  std::uint64_t neighbor_mask(std::size_t v) const;
  bool fits_mask64() const noexcept { return vertex_count() <= 64; }

  const std::optional<ProductMeta>& product_meta() const noexcept { return meta_; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::uint64_t> masks_;
  std::size_t edge_count_ = 0;
  std::optional<ProductMeta> meta_;
};

/// P_n, C_n, K_n, or the star with `order` vertices (centre at index 0).
Graph build_family(Family kind, std::size_t order);

/// Parses the edge-list text format: vertex count on the first
/// non-comment line, then one "u v" pair per line. '#' starts a comment line.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

/// G x P_n. Vertex (i, j), 0-based, lands at index j * m + i.
Graph product_with_path(const Graph& base, std::size_t n);

/// Column I_j of a product graph, 1-based j.
VertexSet column(const Graph& product, std::size_t j);

bool induced_is_connected(const Graph& g, const VertexSet& s);
std::size_t component_count(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Mask-level connectivity test for graphs with at most 64 vertices.
/// `neighbor_masks[v]` is the neighbourhood of v.
inline bool mask_is_connected(std::uint64_t set, std::span<const std::uint64_t> neighbor_masks) {
  if (set == 0) return false;
  std::uint64_t reach = set & (~set + 1);
  std::uint64_t frontier = reach;
  while (frontier != 0) {
    const int v = __builtin_ctzll(frontier);
    frontier &= frontier - 1;
    const std::uint64_t fresh = neighbor_masks[v] & set & ~reach;
    reach |= fresh;
    frontier |= fresh;
  }
  return reach == set;
}

}  // namespace latcount
