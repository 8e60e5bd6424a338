#include "latcount/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

namespace latcount {

double log_count(const BigCount& value) {
  if (sgn(value) <= 0) {
    throw CountError(ErrorKind::InvalidArgument, "logarithm of a non-positive count");
  }
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double nth_root(const BigCount& value, double root) {
  return std::exp(log_count(value) / root);
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t width) : words_((width + 63) / 64, 0), width_(width) {}

VertexSet VertexSet::from_mask(std::uint64_t mask, std::size_t width) {
  if (width < 64 && (mask >> width) != 0) {
    throw CountError(ErrorKind::InvalidArgument, "mask has bits beyond set width");
  }
  VertexSet s(width);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::from_indices(std::span<const std::size_t> indices, std::size_t width) {
  VertexSet s(width);
  for (auto v : indices) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t width) {
  VertexSet s(width);
  for (std::size_t v = 0; v < width; ++v) s.insert(v);
  return s;
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= width_) return false;
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(std::size_t v) {
  if (v >= width_) {
    throw CountError(ErrorKind::InvalidArgument,
                     "vertex " + std::to_string(v) + " outside set of width " + std::to_string(width_));
  }
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(std::size_t v) {
  if (v < width_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::uint64_t VertexSet::mask64() const {
  if (width_ > 64) throw CountError(ErrorKind::InvalidArgument, "vertex set wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> VertexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.width_ != width_) throw CountError(ErrorKind::InvalidArgument, "vertex set width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.width_ != width_) throw CountError(ErrorKind::InvalidArgument, "vertex set width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// -------------------------------------------------------------------- Graph

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle" || name == "cylinder") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "star") return Family::Star;
  return std::nullopt;
}

Graph::Graph(std::size_t vertex_count,
             std::span<const std::pair<std::size_t, std::size_t>> edges,
             std::optional<ProductMeta> meta)
    : adjacency_(vertex_count), meta_(meta) {
  if (vertex_count == 0) throw CountError(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  if (meta_ && meta_->base_size * meta_->path_length != vertex_count) {
    throw CountError(ErrorKind::InvalidArgument, "product metadata does not match vertex count");
  }
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw CountError(ErrorKind::InvalidArgument,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) + ") index out of range");
    }
    if (u == v) throw CountError(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(static_cast<std::uint32_t>(v));
    adjacency_[v].push_back(static_cast<std::uint32_t>(u));
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
  if (vertex_count <= 64) {
    masks_.assign(vertex_count, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) {
      for (auto w : adjacency_[v]) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(v));
}

std::uint64_t Graph::neighbor_mask(std::size_t v) const {
  if (!fits_mask64()) throw CountError(ErrorKind::GraphTooLarge, "graph exceeds 64 vertices for mask access");
  return masks_.at(v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (auto v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_family(Family kind, std::size_t order) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (kind) {
    case Family::Path:
      if (order < 1) throw CountError(ErrorKind::InvalidArgument, "path needs order >= 1");
      for (std::size_t i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Cycle:
      if (order < 3) throw CountError(ErrorKind::InvalidArgument, "cycle needs order >= 3");
      for (std::size_t i = 0; i < order; ++i) edges.emplace_back(i, (i + 1) % order);
      break;
    case Family::Complete:
      if (order < 1) throw CountError(ErrorKind::InvalidArgument, "complete graph needs order >= 1");
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j) edges.emplace_back(i, j);
      break;
    case Family::Star:
      if (order < 2) throw CountError(ErrorKind::InvalidArgument, "star needs order >= 2");
      for (std::size_t i = 1; i < order; ++i) edges.emplace_back(0, i);
      break;
  }
  return Graph(order, edges);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t value = 0;
    const auto* begin = line.data() + pos;
    const auto* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t')) {
      throw CountError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": malformed number");
    }
    out.push_back(value);
    pos += static_cast<std::size_t>(ptr - begin);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> vertex_count;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto numbers = parse_numbers(line, line_no);
    if (!vertex_count) {
      if (numbers.size() != 1) {
        throw CountError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected vertex count");
      }
      vertex_count = numbers[0];
      continue;
    }
    if (numbers.size() != 2) {
      throw CountError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    edges.emplace_back(numbers[0], numbers[1]);
  }
  if (!vertex_count) throw CountError(ErrorKind::ParseError, "missing vertex count");
  return Graph(*vertex_count, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph product_with_path(const Graph& base, std::size_t n) {
  if (n < 1) throw CountError(ErrorKind::InvalidArgument, "path length must be >= 1");
  const std::size_t m = base.vertex_count();
  const auto base_edges = base.edges();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(n * base_edges.size() + (n - 1) * m);
  for (std::size_t j = 0; j < n; ++j) {
    for (auto [u, v] : base_edges) edges.emplace_back(j * m + u, j * m + v);
    if (j + 1 < n) {
      for (std::size_t i = 0; i < m; ++i) edges.emplace_back(j * m + i, (j + 1) * m + i);
    }
  }
  return Graph(m * n, edges, ProductMeta{m, n});
}

VertexSet column(const Graph& product, std::size_t j) {
  const auto& meta = product.product_meta();
  if (!meta) throw CountError(ErrorKind::InvalidArgument, "graph is not a product with a path");
  if (j < 1 || j > meta->path_length) {
    throw CountError(ErrorKind::InvalidArgument, "column " + std::to_string(j) + " out of range");
  }
  VertexSet s(product.vertex_count());
  for (std::size_t i = 0; i < meta->base_size; ++i) s.insert((j - 1) * meta->base_size + i);
  return s;
}

std::size_t component_count(const Graph& g, const VertexSet& s) {
  if (s.width() != g.vertex_count()) throw CountError(ErrorKind::InvalidArgument, "vertex set width mismatch");
  VertexSet seen(g.vertex_count());
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  for (auto start : s.indices()) {
    if (seen.contains(start)) continue;
    ++components;
    seen.insert(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(v)) {
        if (s.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool induced_is_connected(const Graph& g, const VertexSet& s) {
  if (s.width() != g.vertex_count()) throw CountError(ErrorKind::InvalidArgument, "vertex set width mismatch");
  if (g.fits_mask64()) {
    std::vector<std::uint64_t> masks(g.vertex_count());
    for (std::size_t v = 0; v < masks.size(); ++v) masks[v] = g.neighbor_mask(v);
    return mask_is_connected(s.mask64(), masks);
  }
  return component_count(g, s) == 1;
}

bool is_connected(const Graph& g) { return component_count(g, VertexSet::full(g.vertex_count())) == 1; }

bool is_complete(const Graph& g) {
  const auto n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace latcount
