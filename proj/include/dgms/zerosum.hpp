#pragma once

#include <unordered_map>
#include <vector>

#include "dgms/game.hpp"

namespace dgms {

struct ZeroSumSolution {
  std::vector<Rational> value;  // per vertex, player 1's guaranteed payoff
  StrategyProfile profile;      // subgame perfect saddle point
  std::vector<int> outcome_at;  // per vertex, outcome reached under the profile
};

// Backward induction with a per-component solve. The utility must be
// zero-sum up to an additive constant.
ZeroSumSolution solve_zerosum(const PositionalStructure& s, const UtilityFunction& u);

// One component whose every exit enters an already-valued vertex: game
// value and optimal strategies on the component. The value of each vertex
// is the largest threshold t (over the sorted distinct reachable values)
// such that player 1 wins the win/lose game with A1 = {value >= t}.
struct ComponentSolve {
  std::unordered_map<int, Rational> value;
  std::unordered_map<int, int> choice;  // edge id per owned component vertex
};

ComponentSolve solve_dg_component(const PositionalStructure& s, int component,
                                  const std::unordered_map<int, Rational>& exit_value,
                                  const Rational& cycle_value);

}  // namespace dgms
