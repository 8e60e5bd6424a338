#include "latcount/validation.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "latcount/closed_forms.hpp"
#include "latcount/cylinder.hpp"
#include "latcount/graph.hpp"
#include "latcount/oracle.hpp"
#include "latcount/profile_dp.hpp"
#include "latcount/sequence_table.hpp"
#include "latcount/spectral.hpp"

namespace latcount {

bool RunReport::ok() const {
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

std::string RunReport::render() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  if (!engine.empty()) out << "engine: " << engine << '\n';
  std::size_t passed = 0;
  for (const auto& v : verdicts) {
    if (v.passed) {
      ++passed;
      continue;
    }
    out << "FAIL " << v.name;
    if (!v.details.empty()) out << "  (" << v.details << ')';
    out << '\n';
  }
  if (!verdicts.empty()) out << "checks: " << passed << '/' << verdicts.size() << " passed\n";
  out << "wall_time_s: " << format_fixed(wall_seconds, 3) << '\n';
  out << "status: " << (ok() ? "ok" : "failed") << '\n';
  return out.str();
}

namespace {

using Row = std::array<double, 11>;

// Reference 4-decimal c-values for n = 1..11.
constexpr Row kC4Exact{1.8988, 1.8960, 1.8796, 1.8690, 1.8624, 1.8580, 1.8548, 1.8525, 1.8506, 1.8492, 1.8480};
constexpr Row kC4Bound{1.8988, 1.8960, 1.8706, 1.8534, 1.8430, 1.8360, 1.8310, 1.8273, 1.8244, 1.8221, 1.8202};
constexpr Row kC5Exact{1.8384, 1.8628, 1.8687, 1.8687, 1.8683, 1.8681, 1.8679, 1.8678, 1.8677, 1.8676, 1.8676};
constexpr Row kC5Bound{1.8384, 1.8628, 1.8466, 1.8308, 1.8224, 1.8165, 1.8124, 1.8093, 1.8069, 1.8049, 1.8034};
constexpr Row kP3Exact{1.8171, 1.8493, 1.8190, 1.7960, 1.7804, 1.7697, 1.7620, 1.7563, 1.7518, 1.7482, 1.7453};
constexpr Row kP3Bound{1.8171, 1.8493, 1.8095, 1.7772, 1.7560, 1.7414, 1.7310, 1.7231, 1.7171, 1.7123, 1.7083};
constexpr Row kStarExact{1.8212, 1.8322, 1.8224, 1.8148, 1.8098, 1.8065, 1.8042, 1.8025, 1.8011, 1.8001, 1.7992};
constexpr Row kStarBound{1.8212, 1.8322, 1.8075, 1.7875, 1.7757, 1.7677, 1.7621, 1.7579, 1.7547, 1.7521, 1.7499};

constexpr double kTableTol = 5e-5;

class Checker {
 public:
  Checker(RunReport& report, const std::function<void(const Verdict&)>& progress)
      : report_(report), progress_(progress) {}

  void add(std::string name, bool passed, std::string details = {}) {
    report_.verdicts.push_back(Verdict{std::move(name), passed, std::move(details)});
    if (progress_) progress_(report_.verdicts.back());
  }

  void equal(const std::string& name, const BigCount& got, const BigCount& want) {
    add(name, got == want, to_decimal(got) + " vs " + to_decimal(want));
  }

  void near(const std::string& name, double got, double want, double tol) {
    add(name, std::abs(got - want) <= tol, format_fixed(got, 6) + " vs " + format_fixed(want, 4));
  }

  void row(const std::string& name, const std::vector<BigCount>& counts, std::size_t m, const Row& want) {
    double worst = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
      const double c = nth_root(counts[i], static_cast<double>(m * (i + 1)));
      worst = std::max(worst, std::abs(c - want[i]));
    }
    add(name, worst <= kTableTol, "max deviation " + format_fixed(worst, 6));
  }

 private:
  RunReport& report_;
  const std::function<void(const Verdict&)>& progress_;
};

Graph product(const Graph& base, std::size_t n) { return product_with_path(base, n); }

}  // namespace

RunReport run_validation(ValidationScope scope, const std::function<void(const Verdict&)>& progress) {
  const auto start = std::chrono::steady_clock::now();
  const bool full = scope == ValidationScope::Full;
  RunReport report;
  report.command = full ? "validate full" : "validate quick";
  Checker check(report, progress);

  const Graph c4 = build_family(Family::Cycle, 4);
  const Graph c5 = build_family(Family::Cycle, 5);
  const Graph p3 = build_family(Family::Path, 3);
  const Graph star = build_family(Family::Star, 4);

  // Recurrence systems against brute force.
  for (std::size_t n = 1; n <= 3; ++n) {
    check.equal("count_c4(" + std::to_string(n) + ") == oracle(C_4xP_" + std::to_string(n) + ")",
                cylinder::count_c4(n), oracle::count_connected_sets(product(c4, n)));
    check.equal("count_c5(" + std::to_string(n) + ") == oracle(C_5xP_" + std::to_string(n) + ")",
                cylinder::count_c5(n), oracle::count_connected_sets(product(c5, n)));
  }

  // Profile engine against brute force.
  const std::vector<std::pair<std::string, Graph>> bases{
      {"P_2", build_family(Family::Path, 2)},  {"P_3", p3},
      {"P_4", build_family(Family::Path, 4)},  {"P_5", build_family(Family::Path, 5)},
      {"C_3", build_family(Family::Cycle, 3)}, {"C_4", c4},
      {"C_5", c5},                             {"K_4", build_family(Family::Complete, 4)},
      {"K_{1,3}", star}};
  const std::size_t oracle_n = full ? 3 : 2;
  for (const auto& [label, g] : bases) {
    const auto dp = profile::exact_counts(g, oracle_n);
    for (std::size_t n = 1; n <= oracle_n; ++n) {
      check.equal("profile_dp(" + label + "," + std::to_string(n) + ") == oracle", dp[n - 1],
                  oracle::count_connected_sets(product(g, n)));
    }
  }

  // Spectral radii.
  check.near("lambda(A_1) ~ 10.5318 +- 5e-5 (C_4)", spectral::dominant_eigenvalue(spectral::build_transfer_matrix(c4)).lambda,
             10.5318, kTableTol);
  check.near("lambda(A_2) ~ 18.2600 +- 5e-5 (C_5)", spectral::dominant_eigenvalue(spectral::build_transfer_matrix(c5)).lambda,
             18.2600, kTableTol);
  check.near("lambda(A_3) ~ 4.6524 +- 5e-5 (P_3)", spectral::dominant_eigenvalue(spectral::build_transfer_matrix(p3)).lambda,
             4.6524, kTableTol);

  // Transfer-matrix bound against the definition.
  for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{{"P_3", p3}, {"C_4", c4}, {"K_{1,3}", star}}) {
    const std::size_t n_max = full ? 4 : 3;
    const auto bound = spectral::lower_bound_counts(g, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (g.vertex_count() * n > oracle::kMaxVertices) continue;
      check.equal("N_L(" + label + "," + std::to_string(n) + ") == locally dense enumeration", bound[n - 1],
                  oracle::count_locally_dense_sets(g, n));
    }
  }

  // Reference c-rows.
  check.row("table C_4 exact c, n=1..11", cylinder::c4_counts(11), 4, kC4Exact);
  check.row("table C_4 bound c_1, n=1..11", spectral::lower_bound_counts(c4, 11), 4, kC4Bound);
  if (full) {
    check.row("table C_5 exact c, n=1..11", cylinder::c5_counts(11), 5, kC5Exact);
    check.row("table C_5 bound c_2, n=1..11", spectral::lower_bound_counts(c5, 11), 5, kC5Bound);
    check.row("table P_3 exact c, n=1..11", profile::exact_counts(p3, 11), 3, kP3Exact);
    check.row("table P_3 bound c_3, n=1..11", spectral::lower_bound_counts(p3, 11), 3, kP3Bound);
    check.row("table K_{1,3} exact c, n=1..11", profile::exact_counts(star, 11), 4, kStarExact);
    check.row("table K_{1,3} bound c_4, n=1..11", spectral::lower_bound_counts(star, 11), 4, kStarBound);
    check.near("lambda(A_4) ~ 8.9322 +- 5e-5 (K_{1,3})",
               spectral::dominant_eigenvalue(spectral::build_transfer_matrix(star)).lambda, 8.9322, kTableTol);
  }

  // Two-row closed forms.
  for (std::size_t n = 1; n <= 6; ++n) {
    check.equal("vince_path2(" + std::to_string(n) + ") == oracle", closed::vince_path2(n),
                oracle::count_connected_sets(product(build_family(Family::Path, n), 2)));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    check.equal("vince_cycle2(" + std::to_string(n) + ") == oracle", closed::vince_cycle2(n),
                oracle::count_connected_sets(product(build_family(Family::Cycle, n), 2)));
  }

  if (full) {
    const auto dp4 = profile::exact_counts(c4, 30);
    const auto dp5 = profile::exact_counts(c5, 30);
    check.add("count_c4(n) == profile_dp(C_4,n) for n <= 30", cylinder::c4_counts(30) == dp4);
    check.add("count_c5(n) == profile_dp(C_5,n) for n <= 30", cylinder::c5_counts(30) == dp5);
    for (std::size_t m = 1; m <= 5; ++m) {
      const auto closed_counts = profile::accumulate_windows(closed::complete_column_counts(m, 10));
      check.add("count_complete_product(" + std::to_string(m) + ",n) == profile_dp(K_" + std::to_string(m) +
                    ",n) for n <= 10",
                closed_counts == profile::exact_counts(build_family(Family::Complete, m), 10));
    }
    for (std::size_t m = 2; m <= 4; ++m) {
      const Graph k = build_family(Family::Complete, m);
      check.add("N_L(K_" + std::to_string(m) + ",n) == exact for n <= 8",
                spectral::lower_bound_counts(k, 8) == profile::exact_counts(k, 8));
    }
    for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{
             {"P_3", p3}, {"C_4", c4}, {"C_5", c5}, {"K_{1,3}", star}}) {
      const auto bound = spectral::lower_bound_counts(g, 10);
      const auto exact = profile::exact_counts(g, 10);
      bool sharp = bound[0] == exact[0] && bound[1] == exact[1];
      bool strict = true;
      for (std::size_t n = 3; n <= 10; ++n) strict = strict && bound[n - 1] < exact[n - 1];
      check.add("N_L(" + label + ",n) == exact for n in {1,2}, < exact for n in 3..10", sharp && strict);
    }
  }

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace latcount
