#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latcount/bigcount.hpp"

namespace latcount::closed {

inline constexpr std::size_t kMaxCompleteOrder = 12;

/// Column transfer matrix for K_m x P_n. Entry (i, j), 1-based, is
/// C(m, j) - C(m - i, j) when j <= m - i, otherwise C(m, j).
struct CompleteTransfer {
  std::size_t m = 0;
  std::vector<std::vector<BigCount>> t;
  std::vector<BigCount> u;  ///< [C(m,1), ..., C(m,m)]
};

BigCount binomial(std::size_t n, std::size_t k);

CompleteTransfer complete_transfer(std::size_t m);

/// [|C_{m,1}|, ..., |C_{m,k_max}|]: connected sets of K_m x P_k meeting every
/// column, as u * T^(k-1) * 1, one vector-matrix product per step.
std::vector<BigCount> complete_column_counts(std::size_t m, std::size_t k_max);

/// N(K_m x P_n).
BigCount count_complete_product(std::size_t m, std::size_t n);

/// f[i-1] = number of sets in C_{m,n} whose last-column slice is one fixed
/// i-subset, i = 1..m.
struct FVector {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<BigCount> f;
};

FVector f_vector(std::size_t m, std::size_t n);

/// f-vectors for n = 1..n_max in one sweep.
std::vector<FVector> f_vectors(std::size_t m, std::size_t n_max);

// ------------------------------------------------------------------ Pell

/// Seeds of a sequence x_k = 2 x_{k-1} + x_{k-2}, given as (x_0, x_1).
struct PellSeeds {
  long x0;
  long x1;
  friend bool operator==(const PellSeeds&, const PellSeeds&) = default;
};

inline constexpr PellSeeds kPellSeeds{0, 1};          ///< 0, 1, 2, 5, 12, 29, ...
inline constexpr PellSeeds kPellLucasSeeds{2, 2};     ///< 2, 2, 6, 14, 34, ...
inline constexpr PellSeeds kHalfPellLucasSeeds{1, 1}; ///< 1, 1, 3, 7, 17, 41, ...

/// Index convention of one sequence: value at formula index k is x_{k + offset}.
struct PellIndexing {
  PellSeeds seeds;
  int offset;
  friend bool operator==(const PellIndexing&, const PellIndexing&) = default;
};

/// Shipped conventions, fixed by matching the two-row closed forms against
/// brute-force counts (see calibrate_pell_indexing).
inline constexpr PellIndexing kCalibratedPell{kPellSeeds, 0};
inline constexpr PellIndexing kCalibratedPellLucas{kHalfPellLucasSeeds, 0};

/// x_k for k >= 0 under the given seeds (negative k via backward recurrence).
BigCount pell_like(const PellSeeds& seeds, long k);

BigCount pell_at(const PellIndexing& indexing, long index);

struct PellPair {
  std::size_t index;
  BigCount pell;
  BigCount pell_lucas;
};

std::vector<PellPair> pell_sequences(std::size_t k_max);

/// N(P_n x P_2) = (beta(n+3) - 4n - 7) / 2.
BigCount vince_path2(std::size_t n, const PellIndexing& lucas = kCalibratedPellLucas);

/// N(C_n x P_2) = 1 - 3n + 2 beta(n) + 3n pell(n).
BigCount vince_cycle2(std::size_t n, const PellIndexing& pell = kCalibratedPell,
                      const PellIndexing& lucas = kCalibratedPellLucas);

struct PellCalibration {
  PellIndexing pell;
  PellIndexing pell_lucas;
};

/// Finds every (Pell, Pell-Lucas) index convention, over the standard seed
/// families and offsets in [-max_offset, max_offset], for which vince_path2
/// reproduces `path_counts[i]` = N(P_{i+1} x P_2) and vince_cycle2 reproduces
/// `cycle_counts[i]` = N(C_{i+3} x P_2).
std::vector<PellCalibration> calibrate_pell_indexing(const std::vector<BigCount>& path_counts,
                                                     const std::vector<BigCount>& cycle_counts,
                                                     int max_offset = 4);

}  // namespace latcount::closed
