#pragma once

#include <cstdint>
#include <vector>

#include "dgms/game.hpp"

namespace dgms {

constexpr long long kDefaultProfileCap = 100000;

// True iff no player can strictly improve by a unilateral strategy change.
bool is_nash(const PositionalStructure& s, int v0, const UtilityFunction& u,
             const StrategyProfile& x, long long cap = kDefaultProfileCap);

// Nash with respect to every initial position simultaneously.
bool is_subgame_perfect(const PositionalStructure& s, const UtilityFunction& u,
                        const StrategyProfile& x, long long cap = kDefaultProfileCap);

// max over x1 of min over x2 of u1; asserts equality with min-max.
Rational brute_force_value(const PositionalStructure& s, int v0, const UtilityFunction& u,
                           long long cap = kDefaultProfileCap);

struct SolvabilityReport {
  bool winlose_solvable = false;
  std::vector<bool> counterexample_a1;  // a saddle-free partition when not solvable
  bool zerosum_solvable_sampled = false;
  bool nash_solvable_sampled = false;
  long long zerosum_samples = 0;
  long long nash_samples = 0;
  // All three bits agree; a false here on a solvable form means the
  // sampled bits missed something and must never be accepted silently.
  bool agreement = false;
};

struct SolvabilityOptions {
  int max_exact_orderings = 5040;  // enumerate orderings while |A|! stays below
  int random_samples = 200;
  std::uint64_t seed = 1;
};

// Exact win/lose solvability by enumerating all 2^|A| partitions; the
// zero-sum and Nash bits are decided over sampled utilities.
SolvabilityReport check_solvability(const GameFormTable& t, const SolvabilityOptions& opt = {});

}  // namespace dgms
