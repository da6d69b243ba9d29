#pragma once

#include <vector>

#include "dgms/game.hpp"

namespace dgms {

// Outcome partition A = A1 u A2 for a win/lose game.
struct WinLosePartition {
  std::vector<bool> player1_wins;  // per outcome index
};

WinLosePartition partition_from_ids(const PositionalStructure& s,
                                    const std::vector<std::string>& a1_ids);

// +1/-1 zero-sum utility matching a partition.
UtilityFunction winlose_utility(const PositionalStructure& s, const WinLosePartition& p);

// Least set of positions from which `player` can force reaching `targets`,
// computed layer by layer inside `candidates`. Targets sit at layer 0;
// strategy[v] is the layer-decreasing edge at attracted player-owned vertices.
struct AttractorResult {
  std::vector<int> region;    // attracted vertices, targets included
  std::vector<int> layer;     // per graph vertex, -1 outside the region
  std::vector<int> strategy;  // per graph vertex, edge id or -1
};

AttractorResult attract(const PositionalStructure& s, const std::vector<int>& candidates,
                        const std::vector<int>& targets, int player);

struct WinLoseSolution {
  std::vector<int> winner;   // per vertex, 1 or 2
  StrategyProfile profile;   // subgame perfect for both players
  std::vector<int> layer;    // per vertex, attractor layer or -1 (diagnostic)
};

// Backward induction over the condensation, sinks first, one attractor
// per component. Linear in |V| + |E|.
WinLoseSolution solve_winlose(const PositionalStructure& s, const WinLosePartition& p);

// Removes every edge leaving the component and gives each of its vertices
// a terminal loop.
Digraph eliminate_component(const Digraph& g, const std::vector<int>& component);

}  // namespace dgms
