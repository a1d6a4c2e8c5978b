#include "ladderne/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ladderne/closed_forms.hpp"
#include "ladderne/errors.hpp"

namespace ladderne::cli {
namespace {

using Json = nlohmann::ordered_json;

template <class F>
auto timed(std::map<std::string, double>& timings, const std::string& key, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  timings[key] = elapsed.count();
  return result;
}

Json count_or_null(const std::optional<BigInt>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

bool blocks_cover(GraphKind kind, BlockCase which, int n) {
  if (kind == GraphKind::circular) return n % 2 == 0;
  return n % 2 == 0 || which == BlockCase::case1;
}

std::optional<BigInt> closed_for(GraphKind kind, BlockCase which, int n) {
  if (!blocks_cover(kind, which, n)) return std::nullopt;
  return kind == GraphKind::ladder ? ladder_closed(which, n) : circular_closed(which, n / 2);
}

// Regime selection shared by count and enumerate: --p/--q/--r/--s beat
// --regime, which beats --case.
struct RegimeOptions {
  std::string case_text;
  std::string regime_text;
  std::string p, q, r, s;

  void attach(CLI::App* app) {
    app->add_option("--case", case_text, "1 (MINORITY_A) or 2 (LONE_A)");
    app->add_option("--regime", regime_text, "LONE_A, MINORITY_A, MINORITY_B or LONE_B");
    app->add_option("--p", p);
    app->add_option("--q", q);
    app->add_option("--r", r);
    app->add_option("--s", s);
  }

  std::pair<Regime, PayoffParams> resolve() const {
    const int given = !p.empty() + !q.empty() + !r.empty() + !s.empty();
    if (given == 4) {
      PayoffParams params{parse_rational(p), parse_rational(q), parse_rational(r), parse_rational(s)};
      return {regime_of(reduce(params)), params};
    }
    if (given != 0) throw ParseError("--p, --q, --r and --s go together", 0);
    Regime regime = Regime::minority_a;
    if (!regime_text.empty()) {
      regime = parse_regime(regime_text);
    } else if (case_text == "1") {
      regime = Regime::minority_a;
    } else if (case_text == "2") {
      regime = Regime::lone_a;
    } else {
      throw ParseError("need --case 1|2, --regime or --p/--q/--r/--s", 0);
    }
    return {regime, representative_payoffs(regime)};
  }
};

bool is_b_regime(Regime r) { return r == Regime::minority_b || r == Regime::lone_b; }

std::vector<std::pair<StrategyProfile, std::optional<Chain>>> blocks_listing(BlockCase which,
                                                                             GraphKind kind, int n,
                                                                             bool swapped) {
  std::vector<std::pair<StrategyProfile, std::optional<Chain>>> out;
  for (auto& [profile, chain] : materialize(which, kind, n)) {
    if (swapped) chain.swapped = !chain.swapped;
    out.emplace_back(swapped ? profile.swapped() : profile, chain);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "oracle") return Method::oracle;
  if (name == "blocks") return Method::blocks;
  if (name == "closed") return Method::closed;
  if (name == "all") return Method::all;
  throw ParseError("unknown method '" + std::string(name) + "'", 0);
}

std::optional<BigInt> CountReport::discrepancy() const {
  if (!closed_paper || !blocks) return std::nullopt;
  return *closed_paper - *blocks;
}

bool CountReport::consistent() const { return !(oracle && blocks && *oracle != *blocks); }

CountReport run_count(const CountRequest& request) {
  const LadderTopology topology = LadderTopology::build(request.kind, request.rungs);
  const int n = request.rungs;
  CountReport report{request.kind, n, request.regime, block_case_for(request.regime),
                     is_b_regime(request.regime), {}, {}, {}, {}, {}};
  const bool all = request.method == Method::all;

  if (all || request.method == Method::oracle) {
    if (topology.players() <= request.oracle.max_players || !all) {
      const auto payoffs = PayoffAssignment::uniform(request.payoffs);
      report.oracle = timed(report.timings_ms, "oracle",
                            [&] { return count_equilibria(topology, payoffs, request.oracle); });
    } else {
      report.notes.push_back("oracle skipped: " + std::to_string(topology.players()) +
                             " players exceeds limit " + std::to_string(request.oracle.max_players));
    }
  }
  const bool covered = blocks_cover(request.kind, report.block_case, n);
  if (!covered && (request.method == Method::blocks || request.method == Method::closed)) {
    throw UnsupportedParity("no block decomposition or closed form for this graph and parity");
  }
  if (all || request.method == Method::blocks) {
    if (covered) {
      report.blocks = timed(report.timings_ms, "blocks", [&] {
        return request.kind == GraphKind::ladder ? ladder_count_blocks(report.block_case, n)
                                                 : circular_count_blocks(report.block_case, n / 2);
      });
    } else {
      report.notes.push_back("blocks: no block decomposition for this graph and parity");
    }
  }
  if (all || request.method == Method::closed) {
    if (covered) {
      report.closed_paper = timed(report.timings_ms, "closed",
                                  [&] { return *closed_for(request.kind, report.block_case, n); });
    } else {
      report.notes.push_back("closed: no closed form for this graph and parity");
    }
  }
  if (report.via_swap && (report.blocks || report.closed_paper)) {
    report.notes.push_back(std::string("blocks and closed counted on ") +
                           std::string(regime_name(base_regime(report.block_case))) +
                           " through the a<->b swap");
  }
  return report;
}

Json to_json(const CountReport& report, bool include_timings) {
  Json j;
  j["graph"] = graph_name(report.kind);
  j["players"] = 2 * report.rungs;
  j["n"] = report.rungs;
  j["regime"] = regime_name(report.regime);
  j["case"] = case_number(report.block_case);
  j["via_swap"] = report.via_swap;
  Json counts = Json::object();
  counts["oracle"] = count_or_null(report.oracle);
  counts["blocks"] = count_or_null(report.blocks);
  counts["closed_paper"] = count_or_null(report.closed_paper);
  j["counts"] = counts;
  j["discrepancy"] = count_or_null(report.discrepancy());
  j["consistent"] = report.consistent();
  if (include_timings) {
    Json t = Json::object();
    for (const auto& [k, v] : report.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  j["notes"] = report.notes;
  return j;
}

VerifyResult run_verify(int max_players, const OracleOptions& oracle) {
  VerifyResult result;
  Json rows = Json::array();
  const Regime regimes[] = {Regime::minority_a, Regime::lone_a, Regime::minority_b, Regime::lone_b};
  for (GraphKind kind : {GraphKind::ladder, GraphKind::circular}) {
    for (Regime regime : regimes) {
      const int first = kind == GraphKind::ladder ? 4 : 6;
      for (int players = first; players <= max_players; players += 2) {
        CountRequest request{kind, players / 2, regime, representative_payoffs(regime), Method::all, oracle};
        CountReport report = run_count(request);
        Json row = to_json(report, false);

        Json sets_match = nullptr;
        if (report.oracle && report.blocks) {
          const auto topology = LadderTopology::build(kind, players / 2);
          const auto set = enumerate_equilibria(topology, PayoffAssignment::uniform(request.payoffs), oracle);
          const auto listing = blocks_listing(report.block_case, kind, players / 2, report.via_swap);
          bool same = set.profiles.size() == listing.size();
          for (std::size_t i = 0; same && i < listing.size(); ++i) same = set.profiles[i] == listing[i].first;
          sets_match = same;
          if (!same) ++result.mismatches;
        }
        row["sets_match"] = sets_match;
        if (!report.consistent()) ++result.mismatches;
        rows.push_back(std::move(row));
      }
    }
  }
  result.report["max_players"] = max_players;
  result.report["oracle_limit"] = oracle.max_players;
  result.report["rows"] = std::move(rows);
  result.report["mismatches"] = result.mismatches;
  result.report["status"] = result.mismatches == 0 ? "ok" : "mismatch";
  return result;
}

std::string scaling_csv(std::string_view graph, BlockCase which, int max_n) {
  Family family;
  int first = 2;
  if (graph == "ladder") {
    family = Family::ladder;
  } else if (graph == "circular") {
    family = Family::circular;
    first = 4;
  } else if (graph == "unrestricted") {
    family = Family::unrestricted;
  } else {
    throw ParseError("unknown graph '" + std::string(graph) + "'", 0);
  }
  std::ostringstream csv;
  csv << "players,count_exact,count_closed,log_count\n";
  csv << std::fixed << std::setprecision(9);
  for (int n = first; n <= max_n; n += 2) {
    const BigInt exact = family_count({family, which}, n);
    BigInt closed;
    switch (family) {
      case Family::ladder: closed = ladder_closed(which, n); break;
      case Family::circular: closed = circular_closed(which, n / 2); break;
      case Family::unrestricted: closed = unrestricted_closed(which, n / 2); break;
    }
    const long double log_count = std::log(exact.convert_to<long double>());
    csv << 2 * n << ',' << exact << ',' << closed << ',' << log_count << '\n';
  }
  return csv.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pure Nash equilibria of anti-coordination games on ladder graphs"};
  app.require_subcommand(1);

  std::string p, q, r, s;
  auto* regime_cmd = app.add_subcommand("regime", "classify payoffs (p,q,r,s)");
  regime_cmd->add_option("--p", p)->required();
  regime_cmd->add_option("--q", q)->required();
  regime_cmd->add_option("--r", r)->required();
  regime_cmd->add_option("--s", s)->required();

  std::string graph = "ladder";
  std::string method = "all";
  int players = 0;
  RegimeOptions count_regime;
  auto* count_cmd = app.add_subcommand("count", "count equilibria by oracle, blocks or closed form");
  count_cmd->add_option("--graph", graph)->required();
  count_cmd->add_option("--players", players, "2n")->required();
  count_cmd->add_option("--method", method, "oracle|blocks|closed|all");
  count_regime.attach(count_cmd);

  std::string enum_graph = "ladder";
  std::string enum_method = "oracle";
  int enum_players = 0;
  RegimeOptions enum_regime;
  auto* enum_cmd = app.add_subcommand("enumerate", "list equilibria with block decompositions");
  enum_cmd->add_option("--graph", enum_graph)->required();
  enum_cmd->add_option("--players", enum_players, "2n")->required();
  enum_cmd->add_option("--method", enum_method, "oracle|blocks");
  enum_regime.attach(enum_cmd);

  int max_players = 20;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check all methods up to M players");
  verify_cmd->add_option("--max-players", max_players)->required();

  std::string scale_graph = "ladder";
  std::string scale_case = "1";
  int max_n = 40;
  std::string out_path;
  auto* scaling_cmd = app.add_subcommand("scaling", "CSV of exact and closed counts for even n");
  scaling_cmd->add_option("--graph", scale_graph, "ladder|circular|unrestricted")->required();
  scaling_cmd->add_option("--case", scale_case, "1|2")->required();
  scaling_cmd->add_option("--max-n", max_n)->required();
  scaling_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  OracleOptions oracle;
  oracle.max_players = default_player_limit();

  try {
    if (*regime_cmd) {
      const PayoffParams params{parse_rational(p), parse_rational(q), parse_rational(r), parse_rational(s)};
      const ReducedParams rp = reduce(params);
      Json j;
      j["x"] = to_string(rp.x());
      j["y"] = to_string(rp.y());
      j["regime"] = regime_name(regime_of(rp));
      out << j.dump() << '\n';
      return 0;
    }
    if (*count_cmd) {
      auto [regime, payoffs] = count_regime.resolve();
      CountRequest request{parse_graph(graph), rungs_for_players(players), regime, payoffs,
                           parse_method(method), oracle};
      const CountReport report = run_count(request);
      out << to_json(report, true).dump(2) << '\n';
      return report.consistent() ? 0 : 1;
    }
    if (*enum_cmd) {
      auto [regime, payoffs] = enum_regime.resolve();
      const GraphKind kind = parse_graph(enum_graph);
      const int n = rungs_for_players(enum_players);
      const BlockCase which = block_case_for(regime);
      const auto topology = LadderTopology::build(kind, n);
      std::vector<std::pair<StrategyProfile, std::optional<Chain>>> listing;
      if (enum_method == "blocks") {
        listing = blocks_listing(which, kind, n, is_b_regime(regime));
      } else if (enum_method == "oracle") {
        const auto set = enumerate_equilibria(topology, PayoffAssignment::uniform(payoffs), oracle);
        const bool decomposable = kind == GraphKind::ladder || n % 2 == 0;
        for (const auto& profile : set.profiles) {
          std::optional<Chain> chain;
          if (decomposable) chain = decompose(block_system(which), profile);
          listing.emplace_back(profile, chain);
        }
      } else {
        throw ParseError("enumerate supports --method oracle|blocks", 0);
      }
      for (const auto& [profile, chain] : listing) {
        out << profile.to_string();
        if (chain) out << ' ' << chain->to_string();
        out << '\n';
      }
      return 0;
    }
    if (*verify_cmd) {
      const VerifyResult result = run_verify(max_players, oracle);
      out << result.report.dump(2) << '\n';
      return result.mismatches == 0 ? 0 : 1;
    }
    if (*scaling_cmd) {
      BlockCase which;
      if (scale_case == "1") {
        which = BlockCase::case1;
      } else if (scale_case == "2") {
        which = BlockCase::case2;
      } else {
        throw ParseError("--case must be 1 or 2", 0);
      }
      const std::string csv = scaling_csv(scale_graph, which, max_n);
      if (out_path.empty()) {
        out << csv;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error("cannot open " + out_path);
        file << csv;
      }
      return 0;
    }
  } catch (const SizeLimit& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ladderne::cli
