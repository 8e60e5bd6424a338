#include "latcount/profile_dp.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace latcount::profile {

namespace {

constexpr std::size_t kStateBytes = 128;
constexpr std::size_t kTransitionBytes = sizeof(std::uint32_t);

struct Key {
  std::uint64_t lo;
  std::uint64_t hi;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL;
    h ^= (k.hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// 20 occupancy bits, then 5 bits of block id per vertex.
Key encode(const ProfileState& s) {
  Key k{s.occupied, 0};
  for (std::size_t v = 0; v < kMaxBaseVertices; ++v) {
    const std::uint64_t label = ((s.occupied >> v) & 1U) ? s.block[v] : 0;
    if (v < 8) {
      k.lo |= label << (20 + 5 * v);
    } else {
      k.hi |= label << (5 * (v - 8));
    }
  }
  return k;
}

struct UnionFind {
  std::array<std::uint8_t, 2 * kMaxBaseVertices> parent{};

  explicit UnionFind(std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  std::uint8_t find(std::uint8_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint8_t a, std::uint8_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_base(const Graph& base) {
  if (base.vertex_count() > kMaxBaseVertices) {
    throw CountError(ErrorKind::GraphTooLarge, "profile engine accepts base graphs with at most " +
                                                   std::to_string(kMaxBaseVertices) + " vertices");
  }
  if (!is_connected(base)) throw CountError(ErrorKind::GraphDisconnected, "base graph must be connected");
}

}  // namespace

std::size_t ProfileState::block_count() const {
  std::size_t count = 0;
  for (std::uint32_t bits = occupied; bits != 0; bits &= bits - 1) {
    count = std::max<std::size_t>(count, block[std::countr_zero(bits)] + 1U);
  }
  return count;
}

ProfileState canonicalize(ProfileState state) {
  std::array<int, 256> relabel;
  relabel.fill(-1);
  int next = 0;
  for (std::uint32_t bits = state.occupied; bits != 0; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    auto& slot = relabel[state.block[v]];
    if (slot < 0) slot = next++;
    state.block[v] = static_cast<std::uint8_t>(slot);
  }
  for (std::size_t v = 0; v < kMaxBaseVertices; ++v) {
    if (((state.occupied >> v) & 1U) == 0) state.block[v] = 0;
  }
  return state;
}

ProfileState initial_state(const Graph& base, std::uint32_t occupied) {
  const auto m = base.vertex_count();
  UnionFind uf(m);
  for (std::uint32_t bits = occupied; bits != 0; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    for (auto w : base.neighbors(v)) {
      if ((occupied >> w) & 1U) uf.unite(static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(w));
    }
  }
  ProfileState s;
  s.occupied = occupied;
  for (std::uint32_t bits = occupied; bits != 0; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    s.block[v] = uf.find(static_cast<std::uint8_t>(v));
  }
  return canonicalize(s);
}

Transition advance(const Graph& base, const ProfileState& from, std::uint32_t next) {
  const std::size_t blocks = from.block_count();
  const std::uint32_t kept = from.occupied & next;

  std::uint32_t hit = 0;
  for (std::uint32_t bits = kept; bits != 0; bits &= bits - 1) hit |= 1U << from.block[std::countr_zero(bits)];
  if (hit != (blocks >= 32 ? ~0U : (1U << blocks) - 1U)) return {};

  // Nodes 0..blocks-1 are the old blocks; node blocks + v is vertex v of the
  // new column.
  UnionFind uf(blocks + base.vertex_count());
  const auto offset = static_cast<std::uint8_t>(blocks);
  for (std::uint32_t bits = next; bits != 0; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    const auto node = static_cast<std::uint8_t>(offset + v);
    if ((kept >> v) & 1U) uf.unite(node, from.block[v]);
    for (auto w : base.neighbors(v)) {
      if ((next >> w) & 1U) uf.unite(node, static_cast<std::uint8_t>(offset + w));
    }
  }
  Transition t;
  t.accepted = true;
  t.to.occupied = next;
  for (std::uint32_t bits = next; bits != 0; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    t.to.block[v] = uf.find(static_cast<std::uint8_t>(offset + v));
  }
  t.to = canonicalize(t.to);
  return t;
}

TransferSystem::TransferSystem(const Graph& base, const Options& options) {
  check_base(base);
  const auto m = base.vertex_count();
  const std::uint32_t subsets = (1U << m) - 1U;

  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  std::size_t budget_used = 0;
  auto intern = [&](const ProfileState& s) -> std::uint32_t {
    auto [it, inserted] = index.try_emplace(encode(s), static_cast<std::uint32_t>(states_.size()));
    if (inserted) {
      budget_used += kStateBytes;
      if (budget_used > options.memory_budget_bytes) {
        throw CountError(ErrorKind::StateSpaceOverflow, "profile state space exceeds the memory budget");
      }
      states_.push_back(s);
    }
    return it->second;
  };

  for (std::uint32_t s = 1; s <= subsets; ++s) initial_.push_back(intern(initial_state(base, s)));

  // States are appended while the frontier is scanned, so the index loop
  // doubles as the BFS queue and fills CSR rows in order.
  offsets_.push_back(0);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const ProfileState from = states_[i];
    for (std::uint32_t next = 1; next <= subsets; ++next) {
      const auto t = advance(base, from, next);
      if (!t.accepted) continue;
      targets_.push_back(intern(t.to));
      budget_used += kTransitionBytes;
      if (budget_used > options.memory_budget_bytes) {
        throw CountError(ErrorKind::StateSpaceOverflow, "profile transition table exceeds the memory budget");
      }
    }
    offsets_.push_back(targets_.size());
  }

  single_block_.resize(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) single_block_[i] = states_[i].block_count() == 1;
}

SpanCounts TransferSystem::span_counts(std::size_t k_max) const {
  if (k_max < 1) throw CountError(ErrorKind::InvalidArgument, "k_max must be >= 1");
  SpanCounts out;
  out.w.reserve(k_max);
  std::vector<BigCount> current(states_.size(), 0);
  std::vector<BigCount> next(states_.size(), 0);
  for (auto s : initial_) current[s] += 1;

  for (std::size_t k = 1;; ++k) {
    BigCount spanning = 0;
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (single_block_[i]) spanning += current[i];
    }
    out.w.push_back(std::move(spanning));
    if (k == k_max) break;

    for (auto& value : next) value = 0;
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (sgn(current[i]) == 0) continue;
      for (std::size_t e = offsets_[i]; e < offsets_[i + 1]; ++e) next[targets_[e]] += current[i];
    }
    std::swap(current, next);
  }
  return out;
}

SpanCounts span_counts(const Graph& base, std::size_t k_max, const Options& options) {
  return TransferSystem(base, options).span_counts(k_max);
}

std::vector<BigCount> accumulate_windows(const std::vector<BigCount>& window_counts) {
  // N(n) - N(n-1) = sum of w[1..n], so totals follow from two prefix sums.
  std::vector<BigCount> totals;
  totals.reserve(window_counts.size());
  BigCount prefix = 0;
  BigCount total = 0;
  for (const auto& w : window_counts) {
    prefix += w;
    total += prefix;
    totals.push_back(total);
  }
  return totals;
}

std::vector<BigCount> exact_counts(const Graph& base, std::size_t n_max, const Options& options) {
  return accumulate_windows(span_counts(base, n_max, options).w);
}

BigCount exact_count(const Graph& base, std::size_t n, const Options& options) {
  if (n < 1) throw CountError(ErrorKind::InvalidArgument, "n must be >= 1");
  return exact_counts(base, n, options).back();
}

std::size_t state_space_size(const Graph& base, const Options& options) {
  return TransferSystem(base, options).state_count();
}

}  // namespace latcount::profile
