#pragma once

#include <cstddef>
#include <vector>

#include "latcount/bigcount.hpp"

namespace latcount::cylinder {

/// Defect counts for C_4 x P_k, indexed by the k-th column's slice (up to
/// rotation): a = one vertex, b1 = adjacent pair, b2 = opposite pair,
/// c = three vertices, d = full column. x is the auxiliary count of the full
/// column plus an opposite pair in column k-1 (defined from k = 2).
struct C4State {
  std::size_t k = 0;
  BigCount a, b1, b2, c, d, x;
};

/// As C4State, for C_5: c1 = three consecutive vertices, c2 = an adjacent
/// pair plus the vertex opposite it, d = four vertices, g = full column; x and y
/// are the two auxiliary counts that close the system.
struct C5State {
  std::size_t k = 0;
  BigCount a, b1, b2, c1, c2, d, g, x, y;
};

std::vector<C4State> c4_states(std::size_t k_max);
std::vector<C5State> c5_states(std::size_t k_max);

/// |C'_{4,k}|: spanning connected sets of K_4 x P_k that are not connected
/// in C_4 x P_k.
BigCount c4_cprime(std::size_t k);
BigCount c5_cprime(std::size_t k);

BigCount count_c4(std::size_t n);
BigCount count_c5(std::size_t n);

/// N(C_m x P_n) for n = 1..n_max.
std::vector<BigCount> c4_counts(std::size_t n_max);
std::vector<BigCount> c5_counts(std::size_t n_max);

enum class CylinderEngine { Recurrence, ProfileDp };

/// Which engine count_cylinder_exact uses for base cycle length m.
CylinderEngine cylinder_engine(std::size_t m);

/// Exact N(C_m x P_n) for 3 <= m <= 12. m = 4, 5 run the hand-derived
/// recurrence systems; every other m runs the profile engine on C_m.
BigCount count_cylinder_exact(std::size_t m, std::size_t n);
std::vector<BigCount> cylinder_counts(std::size_t m, std::size_t n_max);

}  // namespace latcount::cylinder
