#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latcount/bigcount.hpp"
#include "latcount/graph.hpp"

namespace latcount::oracle {

/// Largest graph the brute-force oracle accepts (2^26 - 1 masks).
inline constexpr std::size_t kMaxVertices = 26;

/// N(G): number of nonempty vertex subsets inducing a connected subgraph.
/// Exhaustive over every mask; splits the mask range across
/// `threads` workers (0 = hardware concurrency).
BigCount count_connected_sets(const Graph& g, unsigned threads = 0);

/// Calls `visit` for every connected set in ascending mask order.
void for_each_connected_set(const Graph& g, const std::function<void(const VertexSet&)>& visit);

std::vector<VertexSet> enumerate_connected_sets(const Graph& g);

/// N(G)^(1/|V(G)|).
double c_value(const Graph& g);

/// Connected sets C of G x P_n such that C restricted to any two
/// consecutive occupied columns is itself connected. Direct enumeration;
/// independent of the subset transfer matrix.
BigCount count_locally_dense_sets(const Graph& base, std::size_t n);

}  // namespace latcount::oracle
