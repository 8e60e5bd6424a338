#include "latcount/cylinder.hpp"

#include "latcount/closed_forms.hpp"
#include "latcount/graph.hpp"
#include "latcount/profile_dp.hpp"

namespace latcount::cylinder {

namespace {

void check_k(std::size_t k) {
  if (k < 1) throw CountError(ErrorKind::InvalidArgument, "column count must be >= 1");
}

BigCount cprime(const C4State& s) { return 4 * s.a + 4 * s.b1 + 2 * s.b2 + 4 * s.c + s.d; }

BigCount cprime(const C5State& s) { return 5 * (s.a + s.b1 + s.b2 + s.c1 + s.c2 + s.d) + s.g; }

// Spanning counts in C_m x P_k are the K_m spanning counts minus the defect.
template <typename State>
std::vector<BigCount> windowed_totals(std::size_t m, const std::vector<State>& states) {
  const auto spanning = closed::complete_column_counts(m, states.size());
  std::vector<BigCount> windows;
  windows.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) windows.push_back(spanning[k] - cprime(states[k]));
  return profile::accumulate_windows(windows);
}

}  // namespace

std::vector<C4State> c4_states(std::size_t k_max) {
  check_k(k_max);
  const auto f = closed::f_vectors(4, k_max);
  std::vector<C4State> out;
  out.reserve(k_max);
  out.push_back(C4State{1, 0, 0, 1, 0, 0, 0});
  for (std::size_t k = 2; k <= k_max; ++k) {
    const auto& p = out[k - 2];
    const auto& fp = f[k - 2].f;
    C4State s;
    s.k = k;
    if (k >= 3) {
      const auto& q = out[k - 3];
      s.x = 2 * q.a + 4 * q.b1 + p.x + 4 * q.c + q.d;
    }
    s.a = p.a + 2 * p.b1 + p.b2 + 3 * p.c + p.d;
    s.b1 = 2 * p.a + 3 * p.b1 + 2 * p.b2 + 4 * p.c + p.d;
    s.b2 = 2 * fp[0] + 4 * fp[1] + p.b2 + 2 * p.c + 2 * fp[2] + p.d;
    s.c = 3 * p.a + 4 * p.b1 + p.b2 + s.x + 4 * p.c + p.d;
    s.d = 4 * p.a + 4 * p.b1 + 2 * s.x + 4 * p.c + p.d;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<C5State> c5_states(std::size_t k_max) {
  check_k(k_max);
  const auto f = closed::f_vectors(5, k_max);
  std::vector<C5State> out;
  out.reserve(k_max);
  out.push_back(C5State{1, 0, 0, 1, 0, 1, 0, 0, 0, 0});
  for (std::size_t k = 2; k <= k_max; ++k) {
    const auto& p = out[k - 2];
    const auto& fp = f[k - 2].f;
    C5State s;
    s.k = k;
    if (k >= 3) {
      const auto& q = out[k - 3];
      s.x = 2 * q.a + 4 * q.b1 + p.x + 2 * q.b2 + 5 * q.c1 + 2 * q.c2 + 2 * p.y + 5 * q.d + q.g;
      s.y = 3 * q.a + 5 * q.b1 + 2 * p.x + 2 * q.b2 + 5 * q.c1 + 2 * q.c2 + 3 * p.y + 5 * q.d + q.g;
    }
    s.a = p.a + 2 * p.b1 + 2 * p.b2 + 3 * p.c1 + 3 * p.c2 + 4 * p.d + p.g;
    s.b1 = 2 * p.a + 3 * p.b1 + 4 * p.b2 + 4 * p.c1 + 5 * p.c2 + 5 * p.d + p.g;
    s.b2 = 2 * fp[0] + 6 * fp[1] + p.b2 + 6 * fp[2] + p.c1 + 2 * p.c2 + 2 * fp[3] + 3 * p.d + p.g;
    s.c1 = 3 * p.a + 4 * p.b1 + s.x + 4 * p.b2 + 5 * p.c1 + 3 * p.c2 + 2 * s.y + 5 * p.d + p.g;
    s.c2 = 3 * fp[0] + 7 * fp[1] + 2 * p.b2 + 5 * fp[2] + 2 * p.c1 + 3 * p.c2 + fp[3] + 4 * p.d + p.g;
    s.d = 4 * p.a + 5 * p.b1 + 2 * p.b2 + 3 * s.x + 5 * p.c1 + 4 * s.y + p.c2 + 5 * p.d + p.g;
    s.g = 5 * p.a + 5 * p.b1 + 5 * s.x + 5 * s.y + 5 * p.c1 + 5 * p.d + p.g;
    out.push_back(std::move(s));
  }
  return out;
}

BigCount c4_cprime(std::size_t k) { return cprime(c4_states(k).back()); }
BigCount c5_cprime(std::size_t k) { return cprime(c5_states(k).back()); }

std::vector<BigCount> c4_counts(std::size_t n_max) { return windowed_totals(4, c4_states(n_max)); }
std::vector<BigCount> c5_counts(std::size_t n_max) { return windowed_totals(5, c5_states(n_max)); }

BigCount count_c4(std::size_t n) { return c4_counts(n).back(); }
BigCount count_c5(std::size_t n) { return c5_counts(n).back(); }

CylinderEngine cylinder_engine(std::size_t m) {
  return m == 4 || m == 5 ? CylinderEngine::Recurrence : CylinderEngine::ProfileDp;
}

std::vector<BigCount> cylinder_counts(std::size_t m, std::size_t n_max) {
  if (m < 3 || m > 12) throw CountError(ErrorKind::InvalidArgument, "cylinder base length must be in 3..12");
  check_k(n_max);
  if (m == 4) return c4_counts(n_max);
  if (m == 5) return c5_counts(n_max);
  return profile::exact_counts(build_family(Family::Cycle, m), n_max);
}

BigCount count_cylinder_exact(std::size_t m, std::size_t n) { return cylinder_counts(m, n).back(); }

}  // namespace latcount::cylinder
