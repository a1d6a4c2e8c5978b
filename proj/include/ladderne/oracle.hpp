#pragma once

#include <cstdint>
#include <vector>

#include "ladderne/game.hpp"
#include "ladderne/numeric.hpp"
#include "ladderne/topology.hpp"

namespace ladderne {

/// Payoffs either shared by every edge or chosen per edge class.
class PayoffAssignment {
 public:
  static PayoffAssignment uniform(PayoffParams params);
  static PayoffAssignment per_edge_class(PayoffParams rung, PayoffParams top_rail,
                                         PayoffParams bottom_rail);

  bool is_uniform() const noexcept { return uniform_; }
  const PayoffParams& for_edge(EdgeClass edge) const;

 private:
  PayoffAssignment(bool uniform, PayoffParams rung, PayoffParams top, PayoffParams bottom);

  bool uniform_;
  PayoffParams rung_;
  PayoffParams top_;
  PayoffParams bottom_;
};

/// A representative payoff set for each regime, with integer entries:
/// MINORITY_A (x=3,y=2), LONE_A (x=3,y=1), MINORITY_B (x=2,y=3), LONE_B (x=1,y=3).
PayoffParams representative_payoffs(Regime regime);

struct EquilibriumSet {
  GraphKind kind;
  int rungs;
  std::vector<StrategyProfile> profiles;  // strictly increasing
  BigInt count;
};

struct OracleOptions {
  int max_players = 26;
  unsigned workers = 0;  // 0: one per hardware thread
};

/// Player limit from LADDERNE_MAX_PLAYERS if set and valid, else 26.
int default_player_limit();

/// True iff every player's played strategy strictly beats the alternative,
/// payoffs being the mean of the per-edge payoffs over incident edges.
bool is_equilibrium(const LadderTopology& topology, const PayoffAssignment& payoffs,
                    const StrategyProfile& profile);

/// Exhaustive search over all 2^(2n) profiles. Throws SizeLimit above
/// options.max_players.
EquilibriumSet enumerate_equilibria(const LadderTopology& topology,
                                    const PayoffAssignment& payoffs,
                                    const OracleOptions& options = {});

BigInt count_equilibria(const LadderTopology& topology, const PayoffAssignment& payoffs,
                        const OracleOptions& options = {});

/// Player 0 is the most significant of the 2n bits; a bit set means `b`.
/// Numeric order of the codes matches lexicographic order of profile strings.
std::uint64_t encode_profile(const StrategyProfile& profile);
StrategyProfile decode_profile(std::uint64_t code, int rungs);

}  // namespace ladderne
