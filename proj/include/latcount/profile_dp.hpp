#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "latcount/bigcount.hpp"
#include "latcount/graph.hpp"

namespace latcount::profile {

/// Largest base graph the profile engine accepts.
inline constexpr std::size_t kMaxBaseVertices = 20;

/// Connectivity profile of the current column: which base vertices are
/// occupied, and which of them are already joined through earlier columns.
///
/// `block[v]` is meaningful only for occupied v. Block ids are canonical:
/// assigned 0, 1, 2, ... in order of first occurrence over ascending vertex
/// index.
struct ProfileState {
  std::uint32_t occupied = 0;
  std::array<std::uint8_t, kMaxBaseVertices> block{};

  std::size_t block_count() const;

  friend bool operator==(const ProfileState&, const ProfileState&) = default;
};

/// Relabels blocks into first-occurrence order. Idempotent.
ProfileState canonicalize(ProfileState state);

/// Initial state for a first column `occupied`: blocks are the components
/// of G[occupied].
ProfileState initial_state(const Graph& base, std::uint32_t occupied);

/// Result of extending `from` by a next column `next`. Empty when some block
/// of `from` has no occupied vertex in `next` and would be stranded.
struct Transition {
  bool accepted = false;
  ProfileState to;
};
Transition advance(const Graph& base, const ProfileState& from, std::uint32_t next);

/// w[k-1] = number of connected sets of G x P_k that meet both end columns.
struct SpanCounts {
  std::vector<BigCount> w;
};

struct Options {
  /// Estimated memory budget for the state table and transition lists.
  std::size_t memory_budget_bytes = std::size_t{8} << 30;
};

/// The reachable profile states of one base graph and the sparse transition
/// relation between them. Built once, reusable for any number of columns.
class TransferSystem {
 public:
  explicit TransferSystem(const Graph& base, const Options& options = {});

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t transition_count() const noexcept { return targets_.size(); }
  const std::vector<ProfileState>& states() const noexcept { return states_; }

  SpanCounts span_counts(std::size_t k_max) const;

 private:
  std::vector<ProfileState> states_;
  std::vector<std::uint32_t> initial_;
  std::vector<std::uint8_t> single_block_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

SpanCounts span_counts(const Graph& base, std::size_t k_max, const Options& options = {});

/// N(G x P_n) = sum over k of (n - k + 1) * w[k].
BigCount exact_count(const Graph& base, std::size_t n, const Options& options = {});

/// Exact counts for n = 1..n_max from a single sweep.
std::vector<BigCount> exact_counts(const Graph& base, std::size_t n_max, const Options& options = {});

/// Windowed sum shared by every engine that produces per-window counts.
std::vector<BigCount> accumulate_windows(const std::vector<BigCount>& window_counts);

std::size_t state_space_size(const Graph& base, const Options& options = {});

}  // namespace latcount::profile
