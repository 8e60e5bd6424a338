#include "latcount/engine.hpp"

#include "latcount/cache.hpp"
#include "latcount/closed_forms.hpp"
#include "latcount/cylinder.hpp"
#include "latcount/oracle.hpp"
#include "latcount/profile_dp.hpp"

namespace latcount {

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Recurrence: return "recurrence";
    case Engine::Complete: return "complete";
    case Engine::ProfileDp: return "profile-dp";
    case Engine::Oracle: return "oracle";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
  for (auto e : {Engine::Auto, Engine::Recurrence, Engine::Complete, Engine::ProfileDp, Engine::Oracle}) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

BaseGraph BaseGraph::from_family(Family kind, std::size_t order) {
  auto graph = build_family(kind, order);
  std::string label;
  switch (kind) {
    case Family::Path: label = "P_" + std::to_string(order); break;
    case Family::Cycle: label = "C_" + std::to_string(order); break;
    case Family::Complete: label = "K_" + std::to_string(order); break;
    case Family::Star: label = "K_{1," + std::to_string(order - 1) + "}"; break;
  }
  return BaseGraph{std::move(graph), kind, std::move(label),
                   std::string(family_name(kind)) + ":" + std::to_string(order)};
}

BaseGraph BaseGraph::from_graph(Graph g, const std::string& label) {
  auto descriptor = "graph:" + hash_text(to_edge_list(g));
  return BaseGraph{std::move(g), std::nullopt, label, std::move(descriptor)};
}

bool engine_applicable(const BaseGraph& base, Engine engine, std::size_t n_max) {
  switch (engine) {
    case Engine::Auto: return true;
    case Engine::Recurrence:
      return base.family == Family::Cycle && (base.m() == 4 || base.m() == 5);
    case Engine::Complete:
      return base.family == Family::Complete && base.m() <= closed::kMaxCompleteOrder;
    case Engine::ProfileDp:
      return base.m() <= profile::kMaxBaseVertices && is_connected(base.graph);
    case Engine::Oracle:
      return base.m() * n_max <= oracle::kMaxVertices;
  }
  return false;
}

Engine resolve_engine(const BaseGraph& base, Engine requested, std::size_t n_max) {
  if (requested != Engine::Auto) {
    if (!engine_applicable(base, requested, n_max)) {
      throw CountError(ErrorKind::EngineUnavailable, "engine '" + std::string(engine_name(requested)) +
                                                         "' does not apply to " + base.label +
                                                         " with n = " + std::to_string(n_max));
    }
    return requested;
  }
  for (auto e : {Engine::Recurrence, Engine::Complete, Engine::ProfileDp, Engine::Oracle}) {
    if (engine_applicable(base, e, n_max)) return e;
  }
  throw CountError(ErrorKind::EngineUnavailable, "no exact engine covers " + base.label);
}

std::vector<BigCount> exact_sequence(const BaseGraph& base, Engine engine, std::size_t n_max) {
  if (n_max < 1) throw CountError(ErrorKind::InvalidArgument, "n must be >= 1");
  switch (resolve_engine(base, engine, n_max)) {
    case Engine::Recurrence:
      return base.m() == 4 ? cylinder::c4_counts(n_max) : cylinder::c5_counts(n_max);
    case Engine::Complete:
      return profile::accumulate_windows(closed::complete_column_counts(base.m(), n_max));
    case Engine::ProfileDp:
      return profile::exact_counts(base.graph, n_max);
    case Engine::Oracle: {
      std::vector<BigCount> out;
      for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(oracle::count_connected_sets(product_with_path(base.graph, n)));
      }
      return out;
    }
    case Engine::Auto: break;
  }
  throw CountError(ErrorKind::EngineUnavailable, "engine did not resolve");
}

}  // namespace latcount
