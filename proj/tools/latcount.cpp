#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latcount/cache.hpp"
#include "latcount/engine.hpp"
#include "latcount/sequence_table.hpp"
#include "latcount/spectral.hpp"
#include "latcount/validation.hpp"

namespace fs = std::filesystem;
using namespace latcount;

namespace {

struct Options {
  std::string family;
  std::size_t m = 0;
  std::string graph_file;
  std::size_t n = 0;
  std::string engine = "auto";
  std::string format = "csv";
  std::string cache_dir;
  bool no_cache = false;
  std::string plot_out;
  std::string scope = "quick";
};

// Extrapolated limits quoted only as context next to computed values.
std::optional<double> conjectured_limit(const BaseGraph& base) {
  if (!base.family) return std::nullopt;
  if (*base.family == Family::Cycle && base.m() == 4) return 1.8374;
  if (*base.family == Family::Cycle && base.m() == 5) return 1.8670;
  if (*base.family == Family::Path && base.m() == 3) return 1.7196;
  if (*base.family == Family::Star && base.m() == 4) return 1.7914;
  return std::nullopt;
}

BaseGraph load_base(const Options& opt) {
  if (!opt.graph_file.empty()) {
    if (!opt.family.empty()) throw CountError(ErrorKind::InvalidArgument, "--family and --graph are exclusive");
    std::ifstream in(opt.graph_file, std::ios::binary);
    if (!in) throw CountError(ErrorKind::IoError, "cannot read " + opt.graph_file);
    std::ostringstream text;
    text << in.rdbuf();
    return BaseGraph::from_graph(parse_edge_list(text.str()), fs::path(opt.graph_file).stem().string());
  }
  if (opt.family.empty()) throw CountError(ErrorKind::InvalidArgument, "one of --family or --graph is required");
  const auto kind = parse_family(opt.family);
  if (!kind) throw CountError(ErrorKind::InvalidArgument, "unknown family '" + opt.family + "'");
  if (opt.m == 0) throw CountError(ErrorKind::InvalidArgument, "-m is required with --family");
  return BaseGraph::from_family(*kind, opt.m);
}

class Session {
 public:
  explicit Session(const Options& opt) {
    if (!opt.no_cache) cache_.emplace(opt.cache_dir.empty() ? default_cache_dir() : fs::path(opt.cache_dir));
  }

  std::vector<std::string> notes;

  template <typename Compute>
  std::vector<BigCount> cached(const BaseGraph& base, const std::string& method, std::size_t n_max,
                               Compute compute) {
    const CacheKey key{base.descriptor, method, "n_max=" + std::to_string(n_max)};
    if (cache_) {
      if (auto hit = cache_->load(key)) {
        notes.push_back("cache: hit " + cache_->path_for(key).string());
        return from_terms(hit->terms);
      }
    }
    auto values = compute();
    if (cache_) {
      try {
        cache_->store(CacheEntry{key, to_terms(values), LATCOUNT_VERSION, utc_timestamp()});
        notes.push_back("cache: stored " + cache_->path_for(key).string());
      } catch (const CountError& e) {
        notes.push_back(std::string("cache: write skipped, ") + e.what());
      }
    }
    return values;
  }

 private:
  std::optional<SequenceCache> cache_;
};

std::vector<BigCount> exact_terms(Session& session, const BaseGraph& base, Engine engine, std::size_t n_max) {
  return session.cached(base, std::string(engine_name(engine)), n_max,
                        [&] { return exact_sequence(base, engine, n_max); });
}

std::vector<BigCount> bound_terms(Session& session, const BaseGraph& base, std::size_t n_max) {
  return session.cached(base, "lower-bound", n_max, [&] { return spectral::lower_bound_counts(base.graph, n_max); });
}

void note_recurrence_gap(const BaseGraph& base, std::vector<std::string>& notes) {
  if (base.family == Family::Cycle && base.m() >= 8) {
    notes.push_back("note: no recurrence bound is available for cycles with m >= 8; counts come from the profile engine");
  }
}

int emit_report(RunReport& report, const std::vector<std::string>& notes,
                std::chrono::steady_clock::time_point start) {
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << report.render();
  for (const auto& line : notes) std::cerr << line << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_exact(const Options& opt, RunReport& report, Session& session) {
  if (opt.n == 0) throw CountError(ErrorKind::InvalidArgument, "exact needs -n >= 1");
  const auto base = load_base(opt);
  const auto requested = parse_engine(opt.engine);
  if (!requested) throw CountError(ErrorKind::InvalidArgument, "unknown engine '" + opt.engine + "'");
  const Engine engine = resolve_engine(base, *requested, opt.n);
  report.engine = std::string(engine_name(engine));
  if (*requested == Engine::Auto) report.engine += " (auto)";
  note_recurrence_gap(base, session.notes);
  const auto terms = exact_terms(session, base, engine, opt.n);
  std::cout << to_decimal(terms.back()) << '\n';
  return 0;
}

int cmd_bound(const Options& opt, RunReport& report, Session& session) {
  const auto base = load_base(opt);
  report.engine = "subset-transfer";
  const auto a = spectral::build_transfer_matrix(base.graph);
  const auto estimate = spectral::dominant_eigenvalue(a);
  if (opt.n > 0) std::cout << "N_L: " << to_decimal(bound_terms(session, base, opt.n).back()) << '\n';
  std::cout << "lambda: " << format_fixed(estimate.lambda, 6) << '\n';
  std::cout << "c_limit: " << format_fixed4(std::pow(estimate.lambda, 1.0 / static_cast<double>(base.m()))) << '\n';
  report.verdicts.push_back({"power iteration converged", estimate.converged,
                             std::to_string(estimate.iterations) + " iterations"});
  return 0;
}

int cmd_table(const Options& opt, RunReport& report, Session& session) {
  if (opt.n == 0) throw CountError(ErrorKind::InvalidArgument, "table needs --n-max >= 1");
  if (opt.format != "csv" && opt.format != "json") {
    throw CountError(ErrorKind::InvalidArgument, "unknown format '" + opt.format + "'");
  }
  const auto base = load_base(opt);
  const auto requested = parse_engine(opt.engine);
  if (!requested) throw CountError(ErrorKind::InvalidArgument, "unknown engine '" + opt.engine + "'");
  const Engine engine = resolve_engine(base, *requested, opt.n);
  report.engine = std::string(engine_name(engine));
  note_recurrence_gap(base, session.notes);

  const auto exact = exact_terms(session, base, engine, opt.n);
  std::optional<std::vector<BigCount>> bound;
  if (base.m() >= 2 && base.m() <= spectral::kMaxBaseVertices) {
    bound = bound_terms(session, base, opt.n);
  } else {
    session.notes.push_back("note: bound column omitted, base outside 2..16 vertices");
  }
  const auto table = make_sequence_table(base.label, base.m(), exact, bound);
  std::cout << (opt.format == "json" ? to_json(table, LATCOUNT_VERSION) : to_csv(table));

  if (bound) {
    bool below = true;
    for (const auto& row : table.rows) below = below && *row.bound <= *row.exact;
    report.verdicts.push_back({"bound <= exact in every row", below, {}});
  }
  if (!opt.plot_out.empty()) {
    std::ofstream out(opt.plot_out, std::ios::binary);
    out << to_plot_csv(table);
    if (!out) throw CountError(ErrorKind::IoError, "cannot write " + opt.plot_out);
    session.notes.push_back("plot data: " + opt.plot_out);
  }
  return 0;
}

int cmd_spectral(const Options& opt, RunReport& report, Session&) {
  const auto base = load_base(opt);
  report.engine = "subset-transfer";
  const auto a = spectral::build_transfer_matrix(base.graph);
  const auto estimate = spectral::dominant_eigenvalue(a);
  std::cout << "base: " << base.label << '\n'
            << "dimension: " << a.dim() << '\n'
            << "symmetric: " << (a.is_symmetric() ? "yes" : "no") << '\n'
            << "lambda: " << format_fixed(estimate.lambda, 6) << '\n'
            << "iterations: " << estimate.iterations << '\n'
            << "residual: " << estimate.residual << '\n'
            << "c_limit_lower: " << format_fixed4(std::pow(estimate.lambda, 1.0 / static_cast<double>(base.m())))
            << '\n';
  if (auto limit = conjectured_limit(base)) {
    std::cout << "extrapolated_limit_context: " << format_fixed4(*limit) << " (extrapolated estimate, not computed here)\n";
  }
  report.verdicts.push_back({"power iteration converged", estimate.converged, {}});
  return 0;
}

int cmd_validate(const Options& opt, RunReport& report) {
  ValidationScope scope;
  if (opt.scope == "quick") {
    scope = ValidationScope::Quick;
  } else if (opt.scope == "full") {
    scope = ValidationScope::Full;
  } else {
    throw CountError(ErrorKind::InvalidArgument, "scope must be quick or full");
  }
  auto result = run_validation(scope, [](const Verdict& v) {
    std::cout << (v.passed ? "PASS " : "FAIL ") << v.name;
    if (!v.details.empty()) std::cout << "  (" << v.details << ')';
    std::cout << std::endl;
  });
  report.verdicts = std::move(result.verdicts);
  report.engine = "all";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected set counts for G x P_n"};
  app.set_version_flag("--version", LATCOUNT_VERSION);
  app.require_subcommand(1);
  Options opt;

  auto base_flags = [&opt](CLI::App* sub, bool with_engine) {
    sub->add_option("--family", opt.family, "path, cycle, complete, star or cylinder");
    sub->add_option("-m", opt.m, "order of the base graph");
    sub->add_option("--graph", opt.graph_file, "edge list file for an arbitrary base graph");
    sub->add_option("-n,--n-max", opt.n, "path length, or largest n for tables");
    sub->add_option("--cache-dir", opt.cache_dir, "cache directory");
    sub->add_flag("--no-cache", opt.no_cache, "neither read nor write the cache");
    if (with_engine) sub->add_option("--engine", opt.engine, "auto, recurrence, complete, profile-dp or oracle");
  };

  auto* exact = app.add_subcommand("exact", "exact N(G x P_n)");
  base_flags(exact, true);
  auto* bound = app.add_subcommand("bound", "lower bound N_L, lambda and limit");
  base_flags(bound, false);
  auto* table = app.add_subcommand("table", "count and bound rows for n = 1..n_max");
  base_flags(table, true);
  table->add_option("--format", opt.format, "csv or json");
  table->add_option("--plot-out", opt.plot_out, "write n,c,c_bound series to this file");
  auto* spectral_cmd = app.add_subcommand("spectral", "transfer matrix diagnostics");
  base_flags(spectral_cmd, false);
  auto* validate = app.add_subcommand("validate", "cross-engine and reproduction checks");
  validate->add_option("scope", opt.scope, "quick or full");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  for (int i = 0; i < argc; ++i) report.command += (i ? " " : "") + std::string(argv[i]);

  try {
    Session session(opt);
    if (*exact) cmd_exact(opt, report, session);
    if (*bound) cmd_bound(opt, report, session);
    if (*table) cmd_table(opt, report, session);
    if (*spectral_cmd) cmd_spectral(opt, report, session);
    if (*validate) cmd_validate(opt, report);
    return emit_report(report, session.notes, start);
  } catch (const CountError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
