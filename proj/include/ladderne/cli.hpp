#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladderne/blocks.hpp"
#include "ladderne/game.hpp"
#include "ladderne/numeric.hpp"
#include "ladderne/oracle.hpp"
#include "ladderne/topology.hpp"

namespace ladderne::cli {

enum class Method : std::uint8_t { oracle, blocks, closed, all };

Method parse_method(std::string_view name);

struct CountRequest {
  GraphKind kind = GraphKind::ladder;
  int rungs = 2;
  Regime regime = Regime::minority_a;
  PayoffParams payoffs = representative_payoffs(Regime::minority_a);
  Method method = Method::all;
  OracleOptions oracle;
};

struct CountReport {
  GraphKind kind;
  int rungs;
  Regime regime;
  BlockCase block_case;
  bool via_swap;  // B regimes are counted on their A mirror
  std::optional<BigInt> oracle;
  std::optional<BigInt> blocks;
  std::optional<BigInt> closed_paper;
  std::map<std::string, double> timings_ms;
  std::vector<std::string> notes;

  /// closed_paper - blocks when both exist.
  std::optional<BigInt> discrepancy() const;
  /// False only when oracle and blocks were both computed and differ.
  bool consistent() const;
};

/// Throws SizeLimit when the oracle is requested explicitly beyond its limit;
/// under Method::all the oracle is skipped with a note instead.
CountReport run_count(const CountRequest& request);

nlohmann::ordered_json to_json(const CountReport& report, bool include_timings);

/// One verify row per (graph, regime, players); players from 4 (ladder) or
/// 6 (circular) to max_players in steps of 2. Rows also compare the oracle's
/// equilibrium set with the materialized block chains where both exist.
struct VerifyResult {
  nlohmann::ordered_json report;
  int mismatches = 0;
};

VerifyResult run_verify(int max_players, const OracleOptions& oracle);

/// CSV text with header players,count_exact,count_closed,log_count.
/// `graph` is ladder, circular or unrestricted.
std::string scaling_csv(std::string_view graph, BlockCase which, int max_n);

/// Exit codes: 0 ok, 1 verify/count mismatch, 2 usage, 3 size limit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ladderne::cli
