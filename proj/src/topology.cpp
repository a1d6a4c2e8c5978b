#include "ladderne/topology.hpp"

#include <algorithm>

#include "ladderne/errors.hpp"

namespace ladderne {

std::string_view graph_name(GraphKind kind) noexcept {
  return kind == GraphKind::ladder ? "ladder" : "circular";
}

GraphKind parse_graph(std::string_view name) {
  if (name == "ladder") return GraphKind::ladder;
  if (name == "circular") return GraphKind::circular;
  throw ParseError("unknown graph '" + std::string(name) + "'", 0);
}

LadderTopology LadderTopology::build(GraphKind kind, int n) {
  const int minimum = kind == GraphKind::ladder ? 2 : 3;
  if (n < minimum) {
    throw TooSmall(std::string(graph_name(kind)) + " needs at least " + std::to_string(minimum) +
                   " rungs, got " + std::to_string(n));
  }
  return LadderTopology(kind, n);
}

LadderTopology::LadderTopology(GraphKind kind, int n)
    : kind_(kind), n_(n), adjacency_(static_cast<std::size_t>(2 * n)) {
  const bool wrap = kind == GraphKind::circular;
  for (int row = 0; row < 2; ++row) {
    const EdgeClass rail = row == 0 ? EdgeClass::top_rail : EdgeClass::bottom_rail;
    for (int col = 0; col < n; ++col) {
      const int self = row * n + col;
      auto& adj = adjacency_[static_cast<std::size_t>(self)];
      if (col > 0) {
        adj.push_back({self - 1, rail});
      } else if (wrap) {
        adj.push_back({row * n + n - 1, rail});
      }
      if (col < n - 1) {
        adj.push_back({self + 1, rail});
      } else if (wrap) {
        adj.push_back({row * n, rail});
      }
      adj.push_back({(1 - row) * n + col, EdgeClass::rung});
    }
  }

  for (int col = 0; col < n; ++col) edges_.push_back({col, n + col, EdgeClass::rung});
  for (int row = 0; row < 2; ++row) {
    const EdgeClass rail = row == 0 ? EdgeClass::top_rail : EdgeClass::bottom_rail;
    for (int col = 0; col + 1 < n; ++col) edges_.push_back({row * n + col, row * n + col + 1, rail});
    if (wrap) edges_.push_back({row * n + n - 1, row * n, rail});
  }
}

std::span<const Neighbor> LadderTopology::neighbors(int player) const {
  return adjacency_.at(static_cast<std::size_t>(player));
}

StrategyProfile::StrategyProfile(std::vector<Strategy> assignment) : cells_(std::move(assignment)) {
  if (cells_.empty() || cells_.size() % 2 != 0) {
    throw Error("profile needs an even, non-zero number of players");
  }
}

StrategyProfile StrategyProfile::parse(std::string_view text) {
  const auto bar = text.find('|');
  std::vector<Strategy> top;
  std::vector<Strategy> bottom;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == bar) continue;
    Strategy s;
    if (text[i] == 'a') {
      s = Strategy::a;
    } else if (text[i] == 'b') {
      s = Strategy::b;
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    (bar == std::string_view::npos || i < bar ? top : bottom).push_back(s);
  }
  if (bar == std::string_view::npos) throw ParseError("missing '|'", text.size());
  if (top.empty()) throw ParseError("empty top row", 0);
  if (bottom.size() != top.size()) {
    // Offset of the first byte that breaks the equal-length rule.
    const std::size_t offset = bottom.size() < top.size() ? text.size() : bar + 1 + top.size();
    throw ParseError("row length mismatch", offset);
  }
  top.insert(top.end(), bottom.begin(), bottom.end());
  return StrategyProfile(std::move(top));
}

std::string StrategyProfile::to_string() const {
  std::string out;
  out.reserve(cells_.size() + 1);
  for (int i = 0; i < players(); ++i) {
    if (i == rungs()) out.push_back('|');
    out.push_back(to_char((*this)[i]));
  }
  return out;
}

StrategyProfile StrategyProfile::swapped() const {
  std::vector<Strategy> out(cells_);
  for (auto& s : out) s = swap(s);
  return StrategyProfile(std::move(out));
}

StrategyProfile StrategyProfile::rows_exchanged() const {
  std::vector<Strategy> out(cells_.begin() + rungs(), cells_.end());
  out.insert(out.end(), cells_.begin(), cells_.begin() + rungs());
  return StrategyProfile(std::move(out));
}

StrategyProfile StrategyProfile::left_right_mirrored() const {
  std::vector<Strategy> out(cells_);
  std::reverse(out.begin(), out.begin() + rungs());
  std::reverse(out.begin() + rungs(), out.end());
  return StrategyProfile(std::move(out));
}

}  // namespace ladderne
