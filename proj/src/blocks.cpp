#include "ladderne/blocks.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>

#include "ladderne/errors.hpp"

namespace ladderne {
namespace {

using Cells = std::array<std::array<Strategy, 2>, 2>;

constexpr Strategy A = Strategy::a;
constexpr Strategy B = Strategy::b;

// Blocks are given with their predecessor sets, i.e. which blocks may sit
// immediately to the left.
struct BlockSpec {
  Cells cells;
  bool special;
  std::initializer_list<int> predecessors;
};

BlockSystem make_system(BlockCase which, std::initializer_list<BlockSpec> specs,
                        std::initializer_list<int> start, std::initializer_list<int> end_even,
                        std::initializer_list<int> end_odd, std::vector<std::string> specials) {
  BlockSystem sys;
  sys.which = which;
  const auto count = specs.size();
  sys.left_adjacency.assign(count, std::vector<bool>(count, false));
  int id = 0;
  for (const BlockSpec& spec : specs) {
    sys.blocks.push_back({id, spec.cells, spec.special});
    for (int pred : spec.predecessors) {
      sys.left_adjacency[static_cast<std::size_t>(pred)][static_cast<std::size_t>(id)] = true;
    }
    ++id;
  }
  auto to_set = [count](std::initializer_list<int> ids) {
    std::vector<bool> set(count, false);
    for (int i : ids) set[static_cast<std::size_t>(i)] = true;
    return set;
  };
  sys.start_allowed = to_set(start);
  sys.end_allowed_even_n = to_set(end_even);
  sys.end_allowed_odd_n = to_set(end_odd);
  sys.specials = std::move(specials);
  return sys;
}

BlockSystem make_case1() {
  return make_system(BlockCase::case1,
                     {
                         {{{{A, B}, {B, A}}}, false, {0, 1, 3}},
                         {{{{B, A}, {A, B}}}, false, {0, 1, 2}},
                         {{{{A, A}, {B, B}}}, false, {0, 3}},
                         {{{{B, B}, {A, A}}}, false, {1, 2}},
                         {{{{B, A}, {B, A}}}, true, {4}},
                     },
                     {0, 1}, {0, 1}, {0, 1, 2, 3},
                     {"ladder, odd n: block 4 repeated, closed by a b|b semi-block",
                      "circular, even n: block 4 cycle", "circular, even n: swapped block 4 cycle"});
}

BlockSystem make_case2() {
  return make_system(BlockCase::case2,
                     {
                         {{{{A, B}, {B, A}}}, false, {0, 3, 5}},
                         {{{{A, B}, {B, B}}}, false, {0, 3, 5}},
                         {{{{B, A}, {A, B}}}, false, {1, 2, 4}},
                         {{{{B, B}, {A, B}}}, false, {1, 2, 4}},
                         {{{{B, A}, {B, B}}}, false, {0, 5}},
                         {{{{B, B}, {B, A}}}, false, {2, 4}},
                     },
                     {0, 1, 2, 3}, {0, 2, 4, 5}, {0, 2, 4, 5}, {});
}

CountMatrix identity(std::size_t size) {
  CountMatrix m(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

CountMatrix multiply(const CountMatrix& lhs, const CountMatrix& rhs) {
  const std::size_t size = lhs.size();
  CountMatrix out(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < size; ++k) {
      if (lhs[i][k] == 0) continue;
      for (std::size_t j = 0; j < size; ++j) out[i][j] += lhs[i][k] * rhs[k][j];
    }
  }
  return out;
}

void require_k(int k, int minimum) {
  if (k < minimum) throw Error("chain length must be at least " + std::to_string(minimum));
}

using Column = std::array<Strategy, 2>;

Column column_of(const StrategyProfile& profile, int col) { return {profile.top(col), profile.bottom(col)}; }

void append_column(std::vector<Strategy>& top, std::vector<Strategy>& bottom, Column c) {
  top.push_back(c[0]);
  bottom.push_back(c[1]);
}

bool chain_links(const BlockSystem& sys, const std::vector<int>& blocks) {
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (!sys.may_precede(blocks[i], blocks[i + 1])) return false;
  }
  return true;
}

std::optional<Chain> decompose_direct(const BlockSystem& sys, const StrategyProfile& profile) {
  const int n = profile.rungs();
  Chain chain;
  int full_columns = n;
  if (n % 2 == 1) {
    if (sys.which != BlockCase::case1 || n < 3) return std::nullopt;
    const Column last = column_of(profile, n - 1);
    const Column before = column_of(profile, n - 2);
    if (last[0] != swap(before[0]) || last[1] != swap(before[1])) return std::nullopt;
    chain.semi_block = true;
    full_columns = n - 1;
  }
  for (int col = 0; col < full_columns; col += 2) {
    const Cells tile{{{profile.top(col), profile.top(col + 1)}, {profile.bottom(col), profile.bottom(col + 1)}}};
    const auto it = std::find_if(sys.blocks.begin(), sys.blocks.end(),
                                 [&](const Block& b) { return b.cells == tile; });
    if (it == sys.blocks.end()) return std::nullopt;
    chain.blocks.push_back(it->id);
  }
  if (!chain_links(sys, chain.blocks)) return std::nullopt;
  return chain;
}

}  // namespace

int case_number(BlockCase c) noexcept { return c == BlockCase::case1 ? 1 : 2; }

BlockCase block_case_for(Regime regime) noexcept {
  return regime == Regime::minority_a || regime == Regime::minority_b ? BlockCase::case1
                                                                      : BlockCase::case2;
}

Regime base_regime(BlockCase c) noexcept {
  return c == BlockCase::case1 ? Regime::minority_a : Regime::lone_a;
}

int BlockSystem::regular_count() const noexcept {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                        [](const Block& b) { return !b.special; }));
}

bool BlockSystem::may_precede(int left, int right) const {
  if (left < 0 || right < 0 || left >= size() || right >= size()) return false;
  return left_adjacency[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)];
}

std::vector<bool> BlockSystem::start_set(Boundary boundary) const {
  if (boundary != Boundary::open) return start_allowed;
  std::vector<bool> set(blocks.size());
  for (const Block& b : blocks) set[static_cast<std::size_t>(b.id)] = !b.special;
  return set;
}

std::vector<bool> BlockSystem::end_set(Boundary boundary) const {
  switch (boundary) {
    case Boundary::ladder_even: return end_allowed_even_n;
    case Boundary::ladder_odd: return end_allowed_odd_n;
    case Boundary::open: break;
  }
  return start_set(Boundary::open);
}

const BlockSystem& block_system(BlockCase which) {
  static const BlockSystem case1 = make_case1();
  static const BlockSystem case2 = make_case2();
  return which == BlockCase::case1 ? case1 : case2;
}

CountMatrix transfer_matrix(const BlockSystem& sys) {
  const auto size = static_cast<std::size_t>(sys.regular_count());
  CountMatrix m(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) m[i][j] = sys.left_adjacency[i][j] ? 1 : 0;
  }
  return m;
}

CountMatrix matrix_power(const CountMatrix& m, unsigned exponent) {
  CountMatrix result = identity(m.size());
  CountMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(result, base);
    exponent >>= 1;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

BigInt chain_count(const BlockSystem& sys, int k, Boundary start, Boundary end) {
  require_k(k, 1);
  const CountMatrix power = matrix_power(transfer_matrix(sys), static_cast<unsigned>(k - 1));
  const auto starts = sys.start_set(start);
  const auto ends = sys.end_set(end);
  BigInt total = 0;
  for (std::size_t i = 0; i < power.size(); ++i) {
    if (!starts[i]) continue;
    for (std::size_t j = 0; j < power.size(); ++j) {
      if (ends[j]) total += power[i][j];
    }
  }
  return total;
}

std::vector<BigInt> chain_count_sequence(const BlockSystem& sys, int max_k, Boundary start,
                                         Boundary end) {
  require_k(max_k, 1);
  const auto size = static_cast<std::size_t>(sys.regular_count());
  const auto starts = sys.start_set(start);
  const auto ends = sys.end_set(end);
  // ending[j]: chains of the current length that start in `starts` and end in j.
  std::vector<BigInt> ending(size, 0);
  for (std::size_t j = 0; j < size; ++j) ending[j] = starts[j] ? 1 : 0;

  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) {
    if (k > 1) {
      std::vector<BigInt> next(size, 0);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          if (sys.left_adjacency[i][j]) next[j] += ending[i];
        }
      }
      ending = std::move(next);
    }
    BigInt total = 0;
    for (std::size_t j = 0; j < size; ++j) {
      if (ends[j]) total += ending[j];
    }
    out.push_back(std::move(total));
  }
  return out;
}

const BigInt& ChainCounts::pair(int start, int end) const {
  return pairs.at(static_cast<std::size_t>(start)).at(static_cast<std::size_t>(end));
}

ChainCounts pair_counts(const BlockSystem& sys, int k) {
  require_k(k, 1);
  ChainCounts counts{k, 0, {}, {}, matrix_power(transfer_matrix(sys), static_cast<unsigned>(k - 1))};
  const std::size_t size = counts.pairs.size();
  counts.per_start.assign(size, 0);
  counts.per_end.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      counts.per_start[i] += counts.pairs[i][j];
      counts.per_end[j] += counts.pairs[i][j];
      counts.total += counts.pairs[i][j];
    }
  }
  return counts;
}

BigInt ladder_count_blocks(BlockCase which, int n) {
  if (n < 2) throw TooSmall("ladder needs at least 2 rungs");
  const BlockSystem& sys = block_system(which);
  if (n % 2 == 0) return chain_count(sys, n / 2, Boundary::ladder_even, Boundary::ladder_even);
  if (which == BlockCase::case2) {
    throw UnsupportedParity("case 2 block counting covers even n only");
  }
  // The block-4 chain closed by a semi-block is the one extra solution.
  return chain_count(sys, (n - 1) / 2, Boundary::ladder_odd, Boundary::ladder_odd) + 1;
}

BigInt circular_count_blocks(BlockCase which, int k) {
  require_k(k, 2);
  const BlockSystem& sys = block_system(which);
  const ChainCounts counts = pair_counts(sys, k);
  BigInt total = 0;
  for (std::size_t first = 0; first < counts.pairs.size(); ++first) {
    for (std::size_t last = 0; last < counts.pairs.size(); ++last) {
      if (sys.left_adjacency[last][first]) total += counts.pairs[first][last];
    }
  }
  // Block 4 cycle and its swapped twin.
  if (which == BlockCase::case1) total += 2;
  return total;
}

BigInt unrestricted_count_blocks(BlockCase which, int k) {
  return chain_count(block_system(which), k, Boundary::open, Boundary::open);
}

std::string Chain::to_string() const {
  std::string out = swapped ? "~" : "";
  for (int b : blocks) out += std::to_string(b);
  if (semi_block) out += "+S";
  return out;
}

Chain Chain::parse(std::string_view text) {
  Chain chain;
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '~') {
    chain.swapped = true;
    ++pos;
  }
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    chain.blocks.push_back(text[pos] - '0');
    ++pos;
  }
  if (chain.blocks.empty()) throw ParseError("expected block ids", pos);
  if (text.substr(pos) == "+S") {
    chain.semi_block = true;
    pos += 2;
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return chain;
}

std::vector<std::vector<int>> enumerate_chains(const BlockSystem& sys, int k, Boundary start,
                                               Boundary end, std::size_t limit) {
  require_k(k, 1);
  if (chain_count(sys, k, start, end) > limit) {
    throw SizeLimit("more than " + std::to_string(limit) + " chains of length " + std::to_string(k));
  }
  const int regular = sys.regular_count();
  const auto starts = sys.start_set(start);
  const auto ends = sys.end_set(end);

  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) == k) {
      if (ends[static_cast<std::size_t>(current.back())]) out.push_back(current);
      return;
    }
    for (int b = 0; b < regular; ++b) {
      if (current.empty() ? !starts[static_cast<std::size_t>(b)] : !sys.may_precede(current.back(), b)) continue;
      current.push_back(b);
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

StrategyProfile chain_to_profile(const BlockSystem& sys, const Chain& chain) {
  if (chain.blocks.empty()) throw InvalidChain("empty chain");
  for (int b : chain.blocks) {
    if (b < 0 || b >= sys.size()) throw InvalidChain("unknown block " + std::to_string(b));
  }
  if (!chain_links(sys, chain.blocks)) throw InvalidChain("adjacent blocks do not stick: " + chain.to_string());
  if (chain.semi_block && sys.which != BlockCase::case1) {
    throw InvalidChain("semi-blocks exist only in case 1");
  }

  std::vector<Strategy> top;
  std::vector<Strategy> bottom;
  for (int id : chain.blocks) {
    const Cells& cells = sys.blocks[static_cast<std::size_t>(id)].cells;
    for (int col = 0; col < 2; ++col) append_column(top, bottom, {cells[0][col], cells[1][col]});
  }
  if (chain.semi_block) {
    append_column(top, bottom, {swap(top.back()), swap(bottom.back())});
  }
  top.insert(top.end(), bottom.begin(), bottom.end());
  StrategyProfile profile(std::move(top));
  return chain.swapped ? profile.swapped() : profile;
}

std::optional<Chain> decompose(const BlockSystem& sys, const StrategyProfile& profile) {
  if (auto chain = decompose_direct(sys, profile)) return chain;
  if (auto chain = decompose_direct(sys, profile.swapped())) {
    chain->swapped = true;
    return chain;
  }
  return std::nullopt;
}

std::vector<std::pair<StrategyProfile, Chain>> materialize(BlockCase which, GraphKind kind, int n,
                                                           std::size_t limit) {
  const BlockSystem& sys = block_system(which);
  std::vector<Chain> chains;
  auto add_all = [&](const std::vector<std::vector<int>>& seqs, bool semi) {
    for (const auto& s : seqs) chains.push_back(Chain{s, semi, false});
  };
  const int special_id = which == BlockCase::case1 ? 4 : -1;

  if (kind == GraphKind::ladder) {
    if (n < 2) throw TooSmall("ladder needs at least 2 rungs");
    if (n % 2 == 0) {
      add_all(enumerate_chains(sys, n / 2, Boundary::ladder_even, Boundary::ladder_even, limit), false);
    } else {
      if (which == BlockCase::case2) throw UnsupportedParity("case 2 block counting covers even n only");
      const int k = (n - 1) / 2;
      add_all(enumerate_chains(sys, k, Boundary::ladder_odd, Boundary::ladder_odd, limit), true);
      chains.push_back(Chain{std::vector<int>(static_cast<std::size_t>(k), special_id), true, false});
    }
  } else {
    if (n < 4 || n % 2 != 0) throw UnsupportedParity("circular block counting covers even n >= 4 only");
    const int k = n / 2;
    for (auto& s : enumerate_chains(sys, k, Boundary::open, Boundary::open, limit)) {
      if (sys.may_precede(s.back(), s.front())) chains.push_back(Chain{std::move(s), false, false});
    }
    if (special_id >= 0) {
      const std::vector<int> cycle(static_cast<std::size_t>(k), special_id);
      chains.push_back(Chain{cycle, false, false});
      chains.push_back(Chain{cycle, false, true});
    }
  }

  std::vector<std::pair<StrategyProfile, Chain>> out;
  out.reserve(chains.size());
  for (auto& c : chains) out.emplace_back(chain_to_profile(sys, c), std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

bool recurrence_check(std::span<const BigInt> sequence) {
  if (sequence.size() < 3) throw Error("recurrence check needs at least three terms");
  for (std::size_t i = 2; i < sequence.size(); ++i) {
    if (sequence[i] != 3 * sequence[i - 1] - sequence[i - 2]) return false;
  }
  return true;
}

}  // namespace ladderne
