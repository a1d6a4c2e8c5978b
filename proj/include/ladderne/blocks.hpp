#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ladderne/game.hpp"
#include "ladderne/numeric.hpp"
#include "ladderne/topology.hpp"

namespace ladderne {

/// case1 covers MINORITY_A, case2 covers LONE_A. The B regimes map onto these
/// through the a <-> b swap.
enum class BlockCase : std::uint8_t { case1, case2 };

int case_number(BlockCase c) noexcept;  // 1 or 2
BlockCase block_case_for(Regime regime) noexcept;
Regime base_regime(BlockCase c) noexcept;  // MINORITY_A or LONE_A

/// A 2x2 tile covering two adjacent rungs. cells[row][col], row 0 = top.
struct Block {
  int id;
  std::array<std::array<Strategy, 2>, 2> cells;
  bool special;  // only chains of itself (block 4 of case1)
};

enum class Boundary : std::uint8_t {
  open,         // no restriction on the boundary block
  ladder_even,  // open ladder, n even
  ladder_odd,   // open ladder, n odd (a semi-block follows the last block)
};

struct BlockSystem {
  BlockCase which;
  std::vector<Block> blocks;                    // regular blocks first, ids 0..regular-1
  std::vector<std::vector<bool>> left_adjacency;  // [i][j]: block i may immediately precede j
  std::vector<bool> start_allowed;
  std::vector<bool> end_allowed_even_n;
  std::vector<bool> end_allowed_odd_n;
  std::vector<std::string> specials;  // descriptions of the fixed extra solutions

  int size() const noexcept { return static_cast<int>(blocks.size()); }
  int regular_count() const noexcept;
  bool may_precede(int left, int right) const;
  std::vector<bool> start_set(Boundary boundary) const;
  std::vector<bool> end_set(Boundary boundary) const;
};

const BlockSystem& block_system(BlockCase which);

using CountMatrix = std::vector<std::vector<BigInt>>;

/// Transfer matrix over the regular blocks.
CountMatrix transfer_matrix(const BlockSystem& sys);
CountMatrix matrix_power(const CountMatrix& m, unsigned exponent);

/// Number of length-k chains of regular blocks that respect the adjacency and
/// boundary rules. Requires k >= 1.
BigInt chain_count(const BlockSystem& sys, int k, Boundary start, Boundary end);

/// chain_count for k = 1..max_k, computed by forward propagation.
std::vector<BigInt> chain_count_sequence(const BlockSystem& sys, int max_k, Boundary start,
                                         Boundary end);

/// Pair counts N_{j..m}(k) over regular blocks, with marginals.
struct ChainCounts {
  int k;
  BigInt total;
  std::vector<BigInt> per_start;  // N_{j..}
  std::vector<BigInt> per_end;    // N_{..j}
  CountMatrix pairs;              // pairs[j][m] = N_{j..m}

  const BigInt& pair(int start, int end) const;
};

ChainCounts pair_counts(const BlockSystem& sys, int k);

/// Equilibria on the open ladder with n rungs. case1: any n >= 2;
/// case2: even n >= 2 only (UnsupportedParity otherwise).
BigInt ladder_count_blocks(BlockCase which, int n);

/// Equilibria on the circular ladder with 2k rungs, k >= 2: cyclic chains plus
/// the fixed extra solutions of the case.
BigInt circular_count_blocks(BlockCase which, int k);

/// Unrestricted chain count of length k (both boundaries open).
BigInt unrestricted_count_blocks(BlockCase which, int k);

/// Block decomposition of a profile. Text form: ids without separator, "+S"
/// for a trailing semi-block, leading "~" when the materialized profile is
/// a <-> b swapped (e.g. "021", "01+S", "~44").
struct Chain {
  std::vector<int> blocks;
  bool semi_block = false;
  bool swapped = false;

  std::string to_string() const;
  static Chain parse(std::string_view text);

  bool operator==(const Chain&) const = default;
};

/// All valid chains in lexicographic block-id order. Throws SizeLimit if the
/// chain count exceeds `limit`.
std::vector<std::vector<int>> enumerate_chains(const BlockSystem& sys, int k, Boundary start,
                                               Boundary end, std::size_t limit = 1u << 20);

/// Concatenates block columns left to right. The semi-block column is the a <-> b
/// swap of the final block's last column. Throws InvalidChain.
StrategyProfile chain_to_profile(const BlockSystem& sys, const Chain& chain);

/// Inverse of chain_to_profile when the profile splits into valid blocks.
std::optional<Chain> decompose(const BlockSystem& sys, const StrategyProfile& profile);

/// Every equilibrium the block engine produces for the topology, sorted by
/// profile. case2 supports even n only; circular requires even n.
std::vector<std::pair<StrategyProfile, Chain>> materialize(BlockCase which, GraphKind kind, int n,
                                                           std::size_t limit = 1u << 20);

/// True iff every consecutive triple obeys s[i] = 3 s[i-1] - s[i-2].
/// Requires at least three terms.
bool recurrence_check(std::span<const BigInt> sequence);

}  // namespace ladderne
