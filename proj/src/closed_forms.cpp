#include "latcount/closed_forms.hpp"

#include <array>

#include "latcount/profile_dp.hpp"

namespace latcount::closed {

namespace {

void check_order(std::size_t m) {
  if (m < 1 || m > kMaxCompleteOrder) {
    throw CountError(ErrorKind::InvalidArgument,
                     "complete-graph order must be in 1.." + std::to_string(kMaxCompleteOrder));
  }
}

}  // namespace

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

CompleteTransfer complete_transfer(std::size_t m) {
  check_order(m);
  CompleteTransfer tr;
  tr.m = m;
  tr.t.assign(m, std::vector<BigCount>(m));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      tr.t[i - 1][j - 1] = j <= m - i ? binomial(m, j) - binomial(m - i, j) : binomial(m, j);
    }
  }
  for (std::size_t j = 1; j <= m; ++j) tr.u.push_back(binomial(m, j));
  return tr;
}

std::vector<BigCount> complete_column_counts(std::size_t m, std::size_t k_max) {
  if (k_max < 1) throw CountError(ErrorKind::InvalidArgument, "k_max must be >= 1");
  const auto tr = complete_transfer(m);
  std::vector<BigCount> row = tr.u;
  std::vector<BigCount> out;
  out.reserve(k_max);
  for (std::size_t k = 1;; ++k) {
    BigCount sum = 0;
    for (const auto& x : row) sum += x;
    out.push_back(sum);
    if (k == k_max) break;
    std::vector<BigCount> next(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) next[j] += row[i] * tr.t[i][j];
    }
    row = std::move(next);
  }
  return out;
}

BigCount count_complete_product(std::size_t m, std::size_t n) {
  if (n < 1) throw CountError(ErrorKind::InvalidArgument, "n must be >= 1");
  return profile::accumulate_windows(complete_column_counts(m, n)).back();
}

std::vector<FVector> f_vectors(std::size_t m, std::size_t n_max) {
  check_order(m);
  if (n_max < 1) throw CountError(ErrorKind::InvalidArgument, "n must be >= 1");
  std::vector<FVector> out;
  out.push_back(FVector{m, 1, std::vector<BigCount>(m, 1)});
  BigCount spanning_prev = 0;
  for (std::size_t i = 1; i <= m; ++i) spanning_prev += binomial(m, i);

  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto& prev = out.back().f;
    FVector cur{m, n, std::vector<BigCount>(m)};
    for (std::size_t i = 1; i <= m; ++i) {
      BigCount value = spanning_prev;
      for (std::size_t j = 1; j <= m - i; ++j) value -= binomial(m - i, j) * prev[j - 1];
      cur.f[i - 1] = value;
    }
    spanning_prev = 0;
    for (std::size_t i = 1; i <= m; ++i) spanning_prev += binomial(m, i) * cur.f[i - 1];
    out.push_back(std::move(cur));
  }
  return out;
}

FVector f_vector(std::size_t m, std::size_t n) { return f_vectors(m, n).back(); }

// ------------------------------------------------------------------ Pell

BigCount pell_like(const PellSeeds& seeds, long k) {
  BigCount a = seeds.x0;
  BigCount b = seeds.x1;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      BigCount c = 2 * b + a;
      a = std::move(b);
      b = std::move(c);
    }
    return a;
  }
  // x_{j-1} = x_{j+1} - 2 x_j
  for (long i = 0; i > k; --i) {
    BigCount prev = b - 2 * a;
    b = std::move(a);
    a = std::move(prev);
  }
  return a;
}

BigCount pell_at(const PellIndexing& indexing, long index) {
  return pell_like(indexing.seeds, index + indexing.offset);
}

std::vector<PellPair> pell_sequences(std::size_t k_max) {
  std::vector<PellPair> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto index = static_cast<long>(k);
    out.push_back(PellPair{k, pell_at(kCalibratedPell, index), pell_at(kCalibratedPellLucas, index)});
  }
  return out;
}

BigCount vince_path2(std::size_t n, const PellIndexing& lucas) {
  if (n < 1) throw CountError(ErrorKind::InvalidArgument, "n must be >= 1");
  const auto nn = static_cast<long>(n);
  BigCount numerator = pell_at(lucas, nn + 3) - 4 * nn - 7;
  if (mpz_odd_p(numerator.get_mpz_t())) {
    throw CountError(ErrorKind::ConsistencyFailure, "path closed form is not integral for n = " + std::to_string(n));
  }
  return numerator / 2;
}

BigCount vince_cycle2(std::size_t n, const PellIndexing& pell, const PellIndexing& lucas) {
  if (n < 3) throw CountError(ErrorKind::InvalidArgument, "cycle closed form needs n >= 3");
  const auto nn = static_cast<long>(n);
  return 1 - 3 * nn + 2 * pell_at(lucas, nn) + 3 * nn * pell_at(pell, nn);
}

std::vector<PellCalibration> calibrate_pell_indexing(const std::vector<BigCount>& path_counts,
                                                     const std::vector<BigCount>& cycle_counts,
                                                     int max_offset) {
  constexpr std::array<PellSeeds, 3> families{kPellSeeds, kPellLucasSeeds, kHalfPellLucasSeeds};

  std::vector<PellIndexing> lucas_candidates;
  for (const auto& seeds : families) {
    for (int offset = -max_offset; offset <= max_offset; ++offset) {
      const PellIndexing lucas{seeds, offset};
      bool ok = true;
      for (std::size_t i = 0; ok && i < path_counts.size(); ++i) {
        const auto nn = static_cast<long>(i + 1);
        BigCount numerator = pell_at(lucas, nn + 3) - 4 * nn - 7;
        ok = mpz_even_p(numerator.get_mpz_t()) && numerator / 2 == path_counts[i];
      }
      if (ok) lucas_candidates.push_back(lucas);
    }
  }

  std::vector<PellCalibration> out;
  for (const auto& lucas : lucas_candidates) {
    for (const auto& seeds : families) {
      for (int offset = -max_offset; offset <= max_offset; ++offset) {
        const PellIndexing pell{seeds, offset};
        bool ok = true;
        for (std::size_t i = 0; ok && i < cycle_counts.size(); ++i) {
          ok = vince_cycle2(i + 3, pell, lucas) == cycle_counts[i];
        }
        if (ok) out.push_back(PellCalibration{pell, lucas});
      }
    }
  }
  return out;
}

}  // namespace latcount::closed
