#pragma once

#include <set>
#include <vector>

#include "dgms/game.hpp"

namespace dgms {

// One partition A = W u W1 u W2 visited by the construction.
struct PartitionStep {
  std::set<int> w;
  std::set<int> w1;
  std::set<int> w2;
};

struct NashCertificate {
  StrategyProfile profile;
  int equilibrium_outcome = -1;
  std::vector<PartitionStep> trace;
  int solve_count = 0;
  bool simple = false;
};

// Nash equilibrium at v0 for an arbitrary two-person utility, built from
// at most 2|A| win/lose solves. The result is certified at v0 only;
// subgame perfection is not claimed.
NashCertificate build_nash(const PositionalStructure& s, const UtilityFunction& u, int v0);

// Simple-NE property: the two strategies alone pin the reachable outcome
// sets down to the single equilibrium outcome.
bool check_simple(const PositionalStructure& s, const NashCertificate& cert, int v0);

}  // namespace dgms
