#pragma once

#include <boost/rational.hpp>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dgms/digraph.hpp"

namespace dgms {

// Payoffs are exact rationals; values always stay inside the finite input
// value set, so no tolerances anywhere.
using Rational = boost::rational<long long>;

// One outcome per component with a dicycle (terminal loops included).
struct Outcome {
  std::string id;
  int component;
  bool is_terminal;
};

// Positional game structure over a normalized digraph. Players are
// numbered 1..num_players; terminals carry owner -1.
struct PositionalStructure {
  Digraph graph;
  int num_players = 0;
  std::vector<int> owner;        // per vertex; -1 for terminals
  SccDecomposition scc;
  std::vector<Outcome> outcomes;
  std::vector<int> outcome_of;   // component -> outcome index, -1 for J0 components

  bool is_terminal(int v) const { return owner[v] < 0; }

  // Outcome index by id; throws GameError for unknown ids.
  int outcome_index(const std::string& id) const;
};

PositionalStructure build_structure(const Digraph& g, int players,
                                    const std::unordered_map<std::string, int>& owners);

// Total choice of one outgoing edge per owned vertex. choice[v] is an
// edge id; -1 at terminals. A single vector covers all players; player
// i's strategy is the restriction to the vertices it owns.
struct StrategyProfile {
  std::vector<int> choice;
};

// The play of a profile: a simple stem followed by a dicycle repeated
// forever, all cycle vertices inside one component.
struct Lasso {
  std::vector<int> stem;
  std::vector<int> cycle;
  int outcome;
};

Lasso trace_play(const PositionalStructure& s, const StrategyProfile& x, int v0);

// DG projection: all non-terminal cyclic outcomes merge into one outcome
// named "c"; outcome_merge maps original outcome index to projected index.
struct DgProjection {
  PositionalStructure structure;
  std::vector<int> outcome_merge;
};

DgProjection dg_project(const PositionalStructure& s);

// Outcomes player `player`'s fixed strategy can run into from v0 over all
// opponent strategies (two-person structures only).
std::set<int> reachable_outcomes(const PositionalStructure& s, int player,
                                 const StrategyProfile& x, int v0);

// Mixed-radix enumeration of one player's pure positional strategies:
// one digit per owned vertex (vertex order), radix = out-degree.
struct StrategySpace {
  std::vector<int> vertices;
  long long count = 1;  // saturating product of out-degrees

  // Writes strategy number k (0 <= k < count) into the profile.
  void apply(const PositionalStructure& s, long long k, StrategyProfile& x) const;
};

StrategySpace strategy_space(const PositionalStructure& s, int player);

// Saturating total profile count over all players.
long long profile_count(const PositionalStructure& s);

StrategyProfile empty_profile(const PositionalStructure& s);

// Explicit two-person game form, row player 1 x column player 2.
struct GameFormTable {
  long long rows = 0;
  long long cols = 0;
  std::vector<int> cell;                  // row-major outcome index
  std::vector<std::string> outcome_ids;   // outcome index -> id

  int at(long long r, long long c) const { return cell[r * cols + c]; }
};

GameFormTable expand_game_form(const PositionalStructure& s, int v0,
                               long long cap = 1000000);

struct UtilityFunction {
  std::vector<std::vector<Rational>> values;  // [player-1][outcome index]

  const Rational& u(int player, int outcome) const { return values[player - 1][outcome]; }
};

// True iff u(1,a) + u(2,a) is the same for every outcome.
bool is_zero_sum(const PositionalStructure& s, const UtilityFunction& u);

}  // namespace dgms
