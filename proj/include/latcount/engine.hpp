#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcount/bigcount.hpp"
#include "latcount/graph.hpp"

namespace latcount {

enum class Engine { Auto, Recurrence, Complete, ProfileDp, Oracle };

std::string_view engine_name(Engine e);
std::optional<Engine> parse_engine(std::string_view name);

/// A base graph G together with how it was described: either a standard
/// family and order, or an arbitrary graph (e.g. read from an edge list).
struct BaseGraph {
  Graph graph;
  std::optional<Family> family;
  std::string label;       ///< human-readable, e.g. "C_4"
  std::string descriptor;  ///< stable cache descriptor, e.g. "cycle:4"

  static BaseGraph from_family(Family kind, std::size_t order);
  static BaseGraph from_graph(Graph g, const std::string& label);

  std::size_t m() const { return graph.vertex_count(); }
};

/// Whether `engine` can produce exact counts of G x P_n for n up to n_max.
bool engine_applicable(const BaseGraph& base, Engine engine, std::size_t n_max);

/// The concrete engine `auto` resolves to: recurrence > complete >
/// profile-dp > oracle, first applicable wins. Explicit engines are checked
/// and returned unchanged.
Engine resolve_engine(const BaseGraph& base, Engine requested, std::size_t n_max);

/// N(G x P_n) for n = 1..n_max with a concrete (non-auto) engine.
std::vector<BigCount> exact_sequence(const BaseGraph& base, Engine engine, std::size_t n_max);

}  // namespace latcount
