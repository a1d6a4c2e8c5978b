#include "ladderne/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <thread>

#include "ladderne/errors.hpp"

namespace ladderne {
namespace {

constexpr std::uint8_t kNoStrictBest = 2;

Rational mean_payoff(const LadderTopology& topology, const PayoffAssignment& payoffs, int player,
                     Strategy own, const StrategyProfile& profile) {
  Rational total = 0;
  const auto nbrs = topology.neighbors(player);
  for (const Neighbor& nb : nbrs) {
    total += edge_payoff(payoffs.for_edge(nb.edge), own, profile[nb.player]);
  }
  return total / static_cast<int>(nbrs.size());
}

// Per player: the neighbors' bit shifts and, for every neighbor configuration,
// the strictly best strategy (or kNoStrictBest on a tie).
struct ResponseTable {
  struct Entry {
    std::array<int, 3> shifts{};
    int degree = 0;
    int own_shift = 0;
    std::array<std::uint8_t, 8> best{};
  };
  std::vector<Entry> players;
};

ResponseTable build_table(const LadderTopology& topology, const PayoffAssignment& payoffs) {
  const int total = topology.players();
  ResponseTable table;
  table.players.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) {
    auto& entry = table.players[static_cast<std::size_t>(i)];
    const auto nbrs = topology.neighbors(i);
    entry.degree = static_cast<int>(nbrs.size());
    entry.own_shift = total - 1 - i;
    for (int j = 0; j < entry.degree; ++j) entry.shifts[static_cast<std::size_t>(j)] = total - 1 - nbrs[static_cast<std::size_t>(j)].player;
    for (unsigned cfg = 0; cfg < (1u << entry.degree); ++cfg) {
      Rational pay_a = 0;
      Rational pay_b = 0;
      for (int j = 0; j < entry.degree; ++j) {
        const Strategy other = (cfg >> j) & 1u ? Strategy::b : Strategy::a;
        const PayoffParams& game = payoffs.for_edge(nbrs[static_cast<std::size_t>(j)].edge);
        pay_a += edge_payoff(game, Strategy::a, other);
        pay_b += edge_payoff(game, Strategy::b, other);
      }
      entry.best[cfg] = pay_a > pay_b ? 0 : (pay_b > pay_a ? 1 : kNoStrictBest);
    }
  }
  return table;
}

bool passes(const ResponseTable& table, std::uint64_t code) {
  for (const auto& p : table.players) {
    unsigned cfg = 0;
    for (int j = 0; j < p.degree; ++j) {
      cfg |= static_cast<unsigned>((code >> p.shifts[static_cast<std::size_t>(j)]) & 1u) << j;
    }
    if (p.best[cfg] != ((code >> p.own_shift) & 1u)) return false;
  }
  return true;
}

void check_limit(const LadderTopology& topology, const OracleOptions& options) {
  if (topology.players() > options.max_players) {
    throw SizeLimit(std::to_string(topology.players()) + " players exceeds the oracle limit of " +
                    std::to_string(options.max_players));
  }
  if (topology.players() > 62) throw SizeLimit("profile codes are limited to 62 players");
}

unsigned worker_count(const OracleOptions& options, std::uint64_t space) {
  unsigned w = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  w = std::max(1u, w);
  if (space < (1u << 16)) w = 1;
  return w;
}

// Runs `body(lo, hi, slot)` over contiguous slices of [0, space), one slice per worker.
template <class Body>
void split_range(std::uint64_t space, unsigned workers, Body body) {
  if (workers == 1) {
    body(0, space, 0u);
    return;
  }
  std::vector<std::thread> threads;
  const std::uint64_t step = space / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = step * w;
    const std::uint64_t hi = w + 1 == workers ? space : lo + step;
    threads.emplace_back(body, lo, hi, w);
  }
  for (auto& t : threads) t.join();
}

}  // namespace

PayoffAssignment::PayoffAssignment(bool uniform, PayoffParams rung, PayoffParams top,
                                   PayoffParams bottom)
    : uniform_(uniform), rung_(std::move(rung)), top_(std::move(top)), bottom_(std::move(bottom)) {
  validate(rung_);
  validate(top_);
  validate(bottom_);
}

PayoffAssignment PayoffAssignment::uniform(PayoffParams params) {
  return PayoffAssignment(true, params, params, params);
}

PayoffAssignment PayoffAssignment::per_edge_class(PayoffParams rung, PayoffParams top_rail,
                                                  PayoffParams bottom_rail) {
  return PayoffAssignment(false, std::move(rung), std::move(top_rail), std::move(bottom_rail));
}

const PayoffParams& PayoffAssignment::for_edge(EdgeClass edge) const {
  switch (edge) {
    case EdgeClass::rung: return rung_;
    case EdgeClass::top_rail: return top_;
    case EdgeClass::bottom_rail: return bottom_;
  }
  return rung_;
}

PayoffParams representative_payoffs(Regime regime) {
  switch (regime) {
    case Regime::minority_a: return {0, 2, 3, 0};
    case Regime::lone_a: return {0, 1, 3, 0};
    case Regime::minority_b: return {0, 3, 2, 0};
    case Regime::lone_b: return {0, 3, 1, 0};
  }
  return {};
}

int default_player_limit() {
  if (const char* env = std::getenv("LADDERNE_MAX_PLAYERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 26;
}

bool is_equilibrium(const LadderTopology& topology, const PayoffAssignment& payoffs,
                    const StrategyProfile& profile) {
  if (profile.players() != topology.players()) {
    throw Error("profile has " + std::to_string(profile.players()) + " players, topology " +
                std::to_string(topology.players()));
  }
  for (int i = 0; i < topology.players(); ++i) {
    const Strategy played = profile[i];
    if (mean_payoff(topology, payoffs, i, played, profile) <=
        mean_payoff(topology, payoffs, i, swap(played), profile)) {
      return false;
    }
  }
  return true;
}

EquilibriumSet enumerate_equilibria(const LadderTopology& topology,
                                    const PayoffAssignment& payoffs,
                                    const OracleOptions& options) {
  check_limit(topology, options);
  const ResponseTable table = build_table(topology, payoffs);
  const std::uint64_t space = std::uint64_t{1} << topology.players();
  const unsigned workers = worker_count(options, space);

  std::vector<std::vector<std::uint64_t>> found(workers);
  split_range(space, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    auto& out = found[slot];
    for (std::uint64_t code = lo; code < hi; ++code) {
      if (passes(table, code)) out.push_back(code);
    }
  });

  EquilibriumSet result{topology.kind(), topology.rungs(), {}, 0};
  for (const auto& part : found) {
    for (std::uint64_t code : part) result.profiles.push_back(decode_profile(code, topology.rungs()));
  }
  result.count = result.profiles.size();
  return result;
}

BigInt count_equilibria(const LadderTopology& topology, const PayoffAssignment& payoffs,
                        const OracleOptions& options) {
  check_limit(topology, options);
  const ResponseTable table = build_table(topology, payoffs);
  const std::uint64_t space = std::uint64_t{1} << topology.players();
  const unsigned workers = worker_count(options, space);

  std::vector<std::uint64_t> partial(workers, 0);
  split_range(space, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    std::uint64_t c = 0;
    for (std::uint64_t code = lo; code < hi; ++code) c += passes(table, code) ? 1 : 0;
    partial[slot] = c;
  });

  BigInt total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

std::uint64_t encode_profile(const StrategyProfile& profile) {
  std::uint64_t code = 0;
  for (Strategy s : profile.cells()) code = (code << 1) | (s == Strategy::b ? 1u : 0u);
  return code;
}

StrategyProfile decode_profile(std::uint64_t code, int rungs) {
  const int total = 2 * rungs;
  std::vector<Strategy> cells(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) {
    cells[static_cast<std::size_t>(i)] = (code >> (total - 1 - i)) & 1u ? Strategy::b : Strategy::a;
  }
  return StrategyProfile(std::move(cells));
}

}  // namespace ladderne
