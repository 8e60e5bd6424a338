#include "latcount/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "latcount/oracle.hpp"
#include "latcount/profile_dp.hpp"

namespace latcount::spectral {

SubsetTransferMatrix::SubsetTransferMatrix(std::size_t m, std::size_t dim)
    : m_(m), dim_(dim), words_per_row_((dim + 63) / 64), bits_(dim * ((dim + 63) / 64), 0) {}

SubsetTransferMatrix SubsetTransferMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t dim = rows.size();
  if (!std::has_single_bit(dim + 1)) {
    throw CountError(ErrorKind::InvalidArgument, "matrix dimension must be 2^m - 1");
  }
  SubsetTransferMatrix a(static_cast<std::size_t>(std::countr_zero(dim + 1)), dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw CountError(ErrorKind::InvalidArgument, "matrix is not square");
    for (std::size_t s = 0; s < dim; ++s) {
      if (rows[r][s] != 0) a.set(r, s);
    }
  }
  return a;
}

std::size_t SubsetTransferMatrix::row_sum(std::size_t r) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    total += static_cast<std::size_t>(std::popcount(bits_[r * words_per_row_ + w]));
  }
  return total;
}

bool SubsetTransferMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t s = r + 1; s < dim_; ++s) {
      if (at(r, s) != at(s, r)) return false;
    }
  }
  return true;
}

std::vector<BigCount> SubsetTransferMatrix::multiply(const std::vector<BigCount>& x) const {
  std::vector<BigCount> y(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      for (std::uint64_t bits = bits_[r * words_per_row_ + w]; bits != 0; bits &= bits - 1) {
        y[r] += x[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
  }
  return y;
}

std::vector<double> SubsetTransferMatrix::multiply(const std::vector<double>& x) const {
  std::vector<double> y(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    double sum = 0.0;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      for (std::uint64_t bits = bits_[r * words_per_row_ + w]; bits != 0; bits &= bits - 1) {
        sum += x[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
    y[r] = sum;
  }
  return y;
}

SubsetTransferMatrix build_transfer_matrix(const Graph& base) {
  const std::size_t m = base.vertex_count();
  if (m < 2 || m > kMaxBaseVertices) {
    throw CountError(ErrorKind::InvalidArgument,
                     "transfer matrix needs 2 <= |V(G)| <= " + std::to_string(kMaxBaseVertices));
  }
  if (!is_connected(base)) throw CountError(ErrorKind::GraphDisconnected, "base graph must be connected");

  const Graph two_columns = product_with_path(base, 2);
  std::vector<std::uint64_t> masks(2 * m);
  for (std::size_t v = 0; v < 2 * m; ++v) masks[v] = two_columns.neighbor_mask(v);

  const std::size_t dim = (std::size_t{1} << m) - 1;
  SubsetTransferMatrix a(m, dim);

  // Upper triangle by row, rows dealt round-robin to workers; each worker
  // only writes its own rows, the mirror pass runs afterwards.
  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < dim; r += stride) {
      const std::uint64_t left = r + 1;
      for (std::size_t s = r; s < dim; ++s) {
        const std::uint64_t right = static_cast<std::uint64_t>(s + 1) << m;
        if (mask_is_connected(left | right, masks)) a.set(r, s);
      }
    }
  };
  const unsigned workers = dim < 256 ? 1U : std::max(1U, std::thread::hardware_concurrency());
  if (workers == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(fill_rows, t, workers);
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = r + 1; s < dim; ++s) {
      if (a.at(r, s)) a.set(s, r);
    }
  }
  return a;
}

std::vector<std::size_t> sorted_row_sums(const SubsetTransferMatrix& a) {
  std::vector<std::size_t> sums(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) sums[r] = a.row_sum(r);
  std::sort(sums.begin(), sums.end());
  return sums;
}

std::vector<BigCount> ones_forms(const SubsetTransferMatrix& a, std::size_t k_max) {
  std::vector<BigCount> v(a.dim(), 1);
  std::vector<BigCount> out;
  for (std::size_t k = 0;; ++k) {
    BigCount sum = 0;
    for (const auto& x : v) sum += x;
    out.push_back(std::move(sum));
    if (k == k_max) break;
    v = a.multiply(v);
  }
  return out;
}

std::vector<BigCount> lower_bound_counts(const Graph& base, std::size_t n_max) {
  if (n_max < 1) throw CountError(ErrorKind::InvalidArgument, "n must be >= 1");
  const auto a = build_transfer_matrix(base);
  auto windows = ones_forms(a, n_max - 1);
  // A single column contributes every connected set of G, not 1^T 1.
  windows[0] = oracle::count_connected_sets(base);
  return profile::accumulate_windows(windows);
}

BigCount lower_bound_NL(const Graph& base, std::size_t n) { return lower_bound_counts(base, n).back(); }

SpectralEstimate dominant_eigenvalue(const SubsetTransferMatrix& a, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw CountError(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (max_iter < 1) throw CountError(ErrorKind::InvalidArgument, "max_iter must be >= 1");
  std::vector<double> v(a.dim(), 1.0 / std::sqrt(static_cast<double>(a.dim())));
  SpectralEstimate est;
  double previous = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    auto w = a.multiply(v);
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw CountError(ErrorKind::NonConvergence, "power iteration hit the zero vector");
    for (auto& x : w) x /= norm;
    v = std::move(w);
    est.lambda = norm;
    est.iterations = it;
    est.residual = std::abs(norm - previous) / norm;
    if (it > 1 && est.residual <= tol) {
      est.converged = true;
      break;
    }
    previous = norm;
  }
  return est;
}

double c_lower_limit(const Graph& base) {
  const auto est = dominant_eigenvalue(build_transfer_matrix(base));
  if (!est.converged) {
    throw CountError(ErrorKind::NonConvergence, "power iteration did not converge (lambda ~ " +
                                                    std::to_string(est.lambda) + ")");
  }
  return std::pow(est.lambda, 1.0 / static_cast<double>(base.vertex_count()));
}

SequenceTable c_sequence(const Graph& base, std::size_t n_max, SequenceMethod method, const std::string& label) {
  if (method == SequenceMethod::Exact) {
    return make_sequence_table(label, base.vertex_count(), profile::exact_counts(base, n_max), std::nullopt);
  }
  return make_sequence_table(label, base.vertex_count(), std::nullopt, lower_bound_counts(base, n_max));
}

}  // namespace latcount::spectral
