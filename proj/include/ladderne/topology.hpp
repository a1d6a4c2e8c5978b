#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ladderne/game.hpp"

namespace ladderne {

enum class GraphKind : std::uint8_t { ladder, circular };

std::string_view graph_name(GraphKind kind) noexcept;
GraphKind parse_graph(std::string_view name);

enum class EdgeClass : std::uint8_t { rung, top_rail, bottom_rail };

struct Neighbor {
  int player;
  EdgeClass edge;
};

struct Edge {
  int u;
  int v;
  EdgeClass edge;
};

/// Ladder or circular ladder on 2n players.
///
/// Players 0..n-1 form the top row left to right and n..2n-1 the bottom row;
/// rung i joins players i and n+i. Neighbor lists are ordered left, right,
/// across, with missing ends omitted on the open ladder.
class LadderTopology {
 public:
  /// Throws TooSmall for n < 2 (ladder) or n < 3 (circular).
  static LadderTopology build(GraphKind kind, int n);

  GraphKind kind() const noexcept { return kind_; }
  int rungs() const noexcept { return n_; }
  int players() const noexcept { return 2 * n_; }

  std::span<const Neighbor> neighbors(int player) const;
  int degree(int player) const { return static_cast<int>(neighbors(player).size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  LadderTopology(GraphKind kind, int n);

  GraphKind kind_;
  int n_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Edge> edges_;
};

/// One pure strategy per player, in canonical index order.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  /// `assignment` must have even, non-zero length.
  explicit StrategyProfile(std::vector<Strategy> assignment);

  /// Parses "top|bottom", e.g. "abaaba|babbab". Throws ParseError.
  static StrategyProfile parse(std::string_view text);

  int rungs() const noexcept { return static_cast<int>(cells_.size() / 2); }
  int players() const noexcept { return static_cast<int>(cells_.size()); }

  Strategy operator[](int player) const { return cells_[static_cast<std::size_t>(player)]; }
  Strategy top(int column) const { return (*this)[column]; }
  Strategy bottom(int column) const { return (*this)[rungs() + column]; }

  std::span<const Strategy> cells() const noexcept { return cells_; }

  std::string to_string() const;

  StrategyProfile swapped() const;            // a <-> b everywhere
  StrategyProfile rows_exchanged() const;     // top row <-> bottom row
  StrategyProfile left_right_mirrored() const;

  auto operator<=>(const StrategyProfile&) const = default;

 private:
  std::vector<Strategy> cells_;
};

}  // namespace ladderne
