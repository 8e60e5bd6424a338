#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latcount/bigcount.hpp"
#include "latcount/graph.hpp"
#include "latcount/sequence_table.hpp"

namespace latcount::spectral {

inline constexpr std::size_t kMaxBaseVertices = 16;

/// Symmetric 0/1 matrix over the nonempty subsets of V(G). Row r stands for
/// the subset whose bitmask is r + 1. Entry (r, s) is 1 iff subset r in one
/// column and subset s in the next induce a connected subgraph of G x P_2.
class SubsetTransferMatrix {
 public:
  SubsetTransferMatrix() = default;

  /// Dense 0/1 rows; dimension must be 2^m - 1 for some m.
  static SubsetTransferMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t base_size() const noexcept { return m_; }
  std::size_t dim() const noexcept { return dim_; }
  bool at(std::size_t r, std::size_t s) const {
    return (bits_[r * words_per_row_ + s / 64] >> (s % 64)) & 1U;
  }
  std::size_t row_sum(std::size_t r) const;
  bool is_symmetric() const;

  /// y = A x over exact counts.
  std::vector<BigCount> multiply(const std::vector<BigCount>& x) const;
  /// y = A x in floating point.
  std::vector<double> multiply(const std::vector<double>& x) const;

 private:
  friend SubsetTransferMatrix build_transfer_matrix(const Graph& base);
  SubsetTransferMatrix(std::size_t m, std::size_t dim);
  void set(std::size_t r, std::size_t s) { bits_[r * words_per_row_ + s / 64] |= std::uint64_t{1} << (s % 64); }

  std::size_t m_ = 0;
  std::size_t dim_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

SubsetTransferMatrix build_transfer_matrix(const Graph& base);

/// Row sums sorted ascending; invariant under relabelling of subsets.
std::vector<std::size_t> sorted_row_sums(const SubsetTransferMatrix& a);

/// [1^T A^0 1, 1^T A^1 1, ..., 1^T A^(k_max) 1].
std::vector<BigCount> ones_forms(const SubsetTransferMatrix& a, std::size_t k_max);

/// N_L(G x P_n) for n = 1..n_max: n N(G) + sum_{k=2..n} (n-k+1) 1^T A^(k-1) 1.
/// N(G) comes from the brute-force oracle.
std::vector<BigCount> lower_bound_counts(const Graph& base, std::size_t n_max);
BigCount lower_bound_NL(const Graph& base, std::size_t n);

struct SpectralEstimate {
  double lambda = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Power iteration from the all-ones vector. Stops when the relative change
/// of the eigenvalue estimate drops to `tol`; on hitting `max_iter` returns
/// the last iterate with converged = false.
SpectralEstimate dominant_eigenvalue(const SubsetTransferMatrix& a, double tol = 1e-12,
                                     std::size_t max_iter = 100000);

/// lambda_A^(1/m). Throws on non-convergence.
double c_lower_limit(const Graph& base);

enum class SequenceMethod { Exact, LowerBound };

/// Rows (n, count, count^(1/(m n))) for n = 1..n_max. The exact method runs
/// the profile engine on `base`.
SequenceTable c_sequence(const Graph& base, std::size_t n_max, SequenceMethod method,
                         const std::string& label = "G");

}  // namespace latcount::spectral
