#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latcount/closed_forms.hpp"
#include "latcount/cylinder.hpp"
#include "latcount/oracle.hpp"
#include "latcount/profile_dp.hpp"
#include "latcount/sequence_table.hpp"
#include "latcount/spectral.hpp"

using namespace latcount;

namespace {

constexpr double kTol = 5e-5;
using Row = std::array<double, 11>;

struct Outcome {
  bool passed = true;
  std::ostringstream details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      details << (details.tellp() > 0 ? "; " : "") << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every c-value and SequenceTable row produced along the way, for criterion 10.
std::vector<double> g_c_values;
std::vector<SequenceTable> g_tables;

std::vector<double> c_row(const std::vector<BigCount>& counts, std::size_t m) {
  std::vector<double> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.push_back(nth_root(counts[i], static_cast<double>(m * (i + 1))));
    g_c_values.push_back(out.back());
  }
  return out;
}

void compare_row(Outcome& o, const std::string& label, const std::vector<BigCount>& counts, std::size_t m,
                 const Row& want) {
  const auto got = c_row(counts, m);
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (std::abs(got[i] - want[i]) > kTol) {
      o.require(false, label + " n=" + std::to_string(i + 1) + ": " + format_fixed(got[i], 6) + " vs " +
                           format_fixed4(want[i]));
    }
  }
}

void within_time(Outcome& o, Clock::time_point t0, double limit, const std::string& what) {
  const double s = seconds_since(t0);
  o.require(s < limit, what + " took " + format_fixed(s, 3) + " s, limit " + format_fixed(limit, 0) + " s");
}

const Graph& c4() {
  static const Graph g = build_family(Family::Cycle, 4);
  return g;
}
const Graph& c5() {
  static const Graph g = build_family(Family::Cycle, 5);
  return g;
}
const Graph& p3() {
  static const Graph g = build_family(Family::Path, 3);
  return g;
}
const Graph& star() {
  static const Graph g = build_family(Family::Star, 4);
  return g;
}

Outcome c4_exact_row() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto counts = cylinder::c4_counts(11);
  within_time(o, t0, 1.0, "C_4 recurrence");
  compare_row(o, "c(C_4 x P_n)",
              counts, 4, {1.8988, 1.8960, 1.8796, 1.8690, 1.8624, 1.8580, 1.8548, 1.8525, 1.8506, 1.8492, 1.8480});
  return o;
}

Outcome c4_bound_row() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto bound = spectral::lower_bound_counts(c4(), 11);
  within_time(o, t0, 5.0, "C_4 bound");
  compare_row(o, "c_1", bound, 4,
              {1.8988, 1.8960, 1.8706, 1.8534, 1.8430, 1.8360, 1.8310, 1.8273, 1.8244, 1.8221, 1.8202});
  g_tables.push_back(make_sequence_table("C_4", 4, cylinder::c4_counts(11), bound));
  return o;
}

Outcome c5_rows() {
  Outcome o;
  const auto exact = cylinder::c5_counts(11);
  const auto bound = spectral::lower_bound_counts(c5(), 11);
  compare_row(o, "c(C_5 x P_n)", exact, 5,
              {1.8384, 1.8628, 1.8687, 1.8687, 1.8683, 1.8681, 1.8679, 1.8678, 1.8677, 1.8676, 1.8676});
  compare_row(o, "c_2", bound, 5,
              {1.8384, 1.8628, 1.8466, 1.8308, 1.8224, 1.8165, 1.8124, 1.8093, 1.8069, 1.8049, 1.8034});
  g_tables.push_back(make_sequence_table("C_5", 5, exact, bound));
  return o;
}

Outcome p3_star_rows() {
  Outcome o;
  const auto p3_exact = profile::exact_counts(p3(), 11);
  const auto p3_bound = spectral::lower_bound_counts(p3(), 11);
  compare_row(o, "c(P_3 x P_n)", p3_exact, 3,
              {1.8171, 1.8493, 1.8190, 1.7960, 1.7804, 1.7697, 1.7620, 1.7563, 1.7518, 1.7482, 1.7453});
  compare_row(o, "c_3", p3_bound, 3,
              {1.8171, 1.8493, 1.8095, 1.7772, 1.7560, 1.7414, 1.7310, 1.7231, 1.7171, 1.7123, 1.7083});
  const auto star_exact = profile::exact_counts(star(), 11);
  const auto star_bound = spectral::lower_bound_counts(star(), 11);
  compare_row(o, "c(K_{1,3} x P_n)", star_exact, 4,
              {1.8212, 1.8322, 1.8224, 1.8148, 1.8098, 1.8065, 1.8042, 1.8025, 1.8011, 1.8001, 1.7992});
  compare_row(o, "c_4", star_bound, 4,
              {1.8212, 1.8322, 1.8075, 1.7875, 1.7757, 1.7677, 1.7621, 1.7579, 1.7547, 1.7521, 1.7499});
  g_tables.push_back(make_sequence_table("P_3", 3, p3_exact, p3_bound));
  g_tables.push_back(make_sequence_table("K_{1,3}", 4, star_exact, star_bound));
  return o;
}

std::vector<spectral::SubsetTransferMatrix> g_matrices;

Outcome spectral_values() {
  Outcome o;
  struct Case {
    std::string label;
    const Graph& g;
    double lambda;
    double limit;
  };
  const std::vector<Case> cases{{"C_4", c4(), 10.5318, 1.8014},
                                {"C_5", c5(), 18.2600, 1.7877},
                                {"P_3", p3(), 4.6524, 1.6694},
                                {"K_{1,3}", star(), 8.9322, 1.7288}};
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    g_matrices.push_back(spectral::build_transfer_matrix(c.g));
    const auto est = spectral::dominant_eigenvalue(g_matrices.back());
    const double limit = std::pow(est.lambda, 1.0 / static_cast<double>(c.g.vertex_count()));
    within_time(o, t0, 1.0, c.label);
    o.require(est.converged, c.label + " power iteration did not converge");
    o.require(std::abs(est.lambda - c.lambda) <= kTol,
              "lambda " + c.label + ": " + format_fixed(est.lambda, 6) + " vs " + format_fixed4(c.lambda));
    o.require(std::abs(limit - c.limit) <= kTol,
              "limit " + c.label + ": " + format_fixed(limit, 6) + " vs " + format_fixed4(c.limit));
    g_c_values.push_back(limit);
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 3; ++n) {
    o.require(cylinder::count_c4(n) == oracle::count_connected_sets(product_with_path(c4(), n)),
              "count_c4(" + std::to_string(n) + ")");
    o.require(cylinder::count_c5(n) == oracle::count_connected_sets(product_with_path(c5(), n)),
              "count_c5(" + std::to_string(n) + ")");
  }
  const std::vector<std::pair<std::string, Graph>> bases{
      {"P_2", build_family(Family::Path, 2)},  {"P_3", p3()},
      {"P_4", build_family(Family::Path, 4)},  {"P_5", build_family(Family::Path, 5)},
      {"C_3", build_family(Family::Cycle, 3)}, {"C_4", c4()},
      {"C_5", c5()},                           {"K_4", build_family(Family::Complete, 4)},
      {"K_{1,3}", star()}};
  for (const auto& [label, g] : bases) {
    for (std::size_t n = 1; n <= 3; ++n) {
      if (g.vertex_count() * n > oracle::kMaxVertices) continue;
      o.require(profile::exact_count(g, n) == oracle::count_connected_sets(product_with_path(g, n)),
                "profile " + label + " n=" + std::to_string(n));
    }
  }
  within_time(o, t0, 300.0, "oracle sweep");
  return o;
}

Outcome cross_engine() {
  Outcome o;
  const auto r4 = cylinder::c4_counts(30);
  const auto r5 = cylinder::c5_counts(30);
  const auto d4 = profile::exact_counts(c4(), 30);
  const auto d5 = profile::exact_counts(c5(), 30);
  for (std::size_t n = 1; n <= 30; ++n) {
    o.require(r4[n - 1] == d4[n - 1], "C_4 n=" + std::to_string(n));
    o.require(r5[n - 1] == d5[n - 1], "C_5 n=" + std::to_string(n));
  }
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto dp = profile::exact_counts(build_family(Family::Complete, m), 10);
    for (std::size_t n = 1; n <= 10; ++n) {
      o.require(closed::count_complete_product(m, n) == dp[n - 1],
                "K_" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome sharpness() {
  Outcome o;
  for (std::size_t m = 2; m <= 4; ++m) {
    const Graph k = build_family(Family::Complete, m);
    g_matrices.push_back(spectral::build_transfer_matrix(k));
    const auto bound = spectral::lower_bound_counts(k, 8);
    const auto exact = profile::exact_counts(k, 8);
    for (std::size_t n = 1; n <= 8; ++n) {
      o.require(bound[n - 1] == exact[n - 1], "K_" + std::to_string(m) + " n=" + std::to_string(n) + " not equal");
    }
    g_tables.push_back(make_sequence_table("K_" + std::to_string(m), m, exact, bound));
    c_row(exact, m);
  }
  for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{
           {"P_3", p3()}, {"C_4", c4()}, {"C_5", c5()}, {"K_{1,3}", star()}}) {
    const auto bound = spectral::lower_bound_counts(g, 10);
    const auto exact = profile::exact_counts(g, 10);
    for (std::size_t n = 1; n <= 2; ++n) {
      o.require(bound[n - 1] == exact[n - 1], label + " n=" + std::to_string(n) + " not equal");
    }
    for (std::size_t n = 3; n <= 10; ++n) {
      o.require(bound[n - 1] < exact[n - 1], label + " n=" + std::to_string(n) + " not strict");
    }
    g_tables.push_back(make_sequence_table(label, g.vertex_count(), exact, bound));
  }
  return o;
}

Outcome vince() {
  Outcome o;
  std::vector<BigCount> path, cycle;
  for (std::size_t n = 1; n <= 6; ++n) {
    path.push_back(oracle::count_connected_sets(product_with_path(build_family(Family::Path, n), 2)));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    cycle.push_back(oracle::count_connected_sets(product_with_path(build_family(Family::Cycle, n), 2)));
  }
  const auto found = closed::calibrate_pell_indexing(path, cycle);
  o.require(found.size() == 1, std::to_string(found.size()) + " index conventions fit");
  if (found.size() == 1) {
    o.require(found[0].pell == closed::kCalibratedPell && found[0].pell_lucas == closed::kCalibratedPellLucas,
              "calibration differs from the shipped convention");
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    o.require(closed::vince_path2(n) == path[n - 1], "path n=" + std::to_string(n));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    o.require(closed::vince_cycle2(n) == cycle[n - 3], "cycle n=" + std::to_string(n));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (const auto& [label, g] : std::vector<std::pair<std::string, Graph>>{{"C_4", c4()}, {"P_3", p3()}}) {
    const std::size_t m = g.vertex_count();
    const std::uint64_t col = (std::uint64_t{1} << m) - 1;
    bool contiguous = true;
    oracle::for_each_connected_set(product_with_path(g, 3), [&](const VertexSet& s) {
      const auto mask = s.mask64();
      const bool a = (mask & col) != 0, b = ((mask >> m) & col) != 0, c = ((mask >> (2 * m)) & col) != 0;
      if (a && c && !b) contiguous = false;
    });
    o.require(contiguous, label + " x P_3 has a set with a column gap");
  }
  for (const auto& a : g_matrices) {
    o.require(a.is_symmetric(), "asymmetric A for m=" + std::to_string(a.base_size()));
    o.require(a.row_sum(a.dim() - 1) == a.dim(), "full-set row not all ones for m=" + std::to_string(a.base_size()));
  }
  for (const auto& t : g_tables) {
    for (const auto& row : t.rows) {
      for (auto c : {row.c_exact, row.c_bound}) {
        if (c) g_c_values.push_back(*c);
      }
      if (row.exact && row.bound) {
        o.require(*row.bound <= *row.exact, t.base_label + " n=" + std::to_string(row.n) + " bound above exact");
      }
    }
  }
  std::size_t outside = 0;
  for (double c : g_c_values) {
    if (!(c > 1.0 && c < 2.0)) ++outside;
  }
  o.require(outside == 0, std::to_string(outside) + " c-values outside (1, 2)");
  o.details << (o.details.tellp() > 0 ? "; " : "") << g_c_values.size() << " c-values, " << g_matrices.size()
            << " matrices, " << g_tables.size() << " tables checked";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C_4 exact c-row from the recurrence, n=1..11, < 1 s", c4_exact_row},
      {"C_4 bound c-row, n=1..11, < 5 s", c4_bound_row},
      {"C_5 exact and bound c-rows, n=1..11", c5_rows},
      {"P_3 and K_{1,3} exact and bound c-rows, n=1..11", p3_star_rows},
      {"spectral radii and limits for C_4, C_5, P_3, K_{1,3}, each < 1 s", spectral_values},
      {"recurrences and profile engine equal brute force, < 5 min", oracle_equivalence},
      {"cross-engine equality, cylinders n <= 30, complete m <= 5, n <= 10", cross_engine},
      {"bound sharpness: equal for K_m, strict for n = 3..10, equal for n <= 2", sharpness},
      {"two-row closed forms and Pell index calibration", vince},
      {"properties: column contiguity, A symmetry, 1 < c < 2, bound <= exact", properties},
  };
  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << "  ["
              << format_fixed(seconds_since(t0), 2) << " s]";
    const auto details = o.details.str();
    if (!details.empty()) std::cout << "\n      " << details;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
