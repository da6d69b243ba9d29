#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgms/game.hpp"
#include "dgms/rng.hpp"
#include "dgms/winlose.hpp"

namespace dgms::test {

using Row = std::vector<std::pair<std::string, Rational>>;

inline UtilityFunction make_utility(const PositionalStructure& s,
                                    const std::vector<Row>& per_player) {
  UtilityFunction u;
  u.values.assign(per_player.size(), std::vector<Rational>(s.outcomes.size()));
  for (size_t p = 0; p < per_player.size(); ++p) {
    for (const auto& [id, value] : per_player[p]) {
      u.values[p][s.outcome_index(id)] = value;
    }
  }
  return u;
}

// Exhaustive two-person win/lose winner: player 1 wins from v0 iff some
// strategy of player 1 beats every strategy of player 2.
inline int enumerate_winner(const PositionalStructure& s, const WinLosePartition& p, int v0) {
  StrategySpace s1 = strategy_space(s, 1);
  StrategySpace s2 = strategy_space(s, 2);
  StrategyProfile x = empty_profile(s);
  for (long long k1 = 0; k1 < s1.count; ++k1) {
    s1.apply(s, k1, x);
    bool wins = true;
    for (long long k2 = 0; k2 < s2.count && wins; ++k2) {
      s2.apply(s, k2, x);
      wins = p.player1_wins[trace_play(s, x, v0).outcome];
    }
    if (wins) {
      return 1;
    }
  }
  return 2;
}

// Does `player`'s half of the profile win from v0 against every opponent
// strategy?
inline bool profile_half_wins(const PositionalStructure& s, const WinLosePartition& p,
                              const StrategyProfile& x, int player, int v0) {
  int opponent = 3 - player;
  StrategySpace opp = strategy_space(s, opponent);
  StrategyProfile probe = x;
  for (long long k = 0; k < opp.count; ++k) {
    opp.apply(s, k, probe);
    bool won = p.player1_wins[trace_play(s, probe, v0).outcome];
    if ((player == 1) != won) {
      return false;
    }
  }
  return true;
}

// Seeded random small structure for property tests; retries seeds until
// the profile count fits the cap.
inline PositionalStructure random_structure(std::uint64_t seed, int max_vertices = 8,
                                            long long max_profiles = 10000);

}  // namespace dgms::test

#include "dgms/io.hpp"

namespace dgms::test {

inline PositionalStructure random_structure(std::uint64_t seed, int max_vertices,
                                            long long max_profiles) {
  SplitMix64 rng(seed * 7919 + 17);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int nv = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices - 2)));
    double density = 0.15 + 0.05 * static_cast<double>(rng.below(6));
    double terminals = 0.2 + 0.1 * static_cast<double>(rng.below(4));
    try {
      PositionalStructure s = gen_random(nv, 2, density, terminals, rng.next());
      if (profile_count(s) <= max_profiles && !s.outcomes.empty()) {
        return s;
      }
    } catch (const GameError&) {
      // infeasible draw; try again
    }
  }
  throw std::runtime_error("could not draw a random structure");
}

// Random utility over outcomes, integer values in [-range, range];
// with_ties keeps the value set small so ties occur.
inline UtilityFunction random_utility(const PositionalStructure& s, SplitMix64& rng,
                                      bool with_ties) {
  UtilityFunction u;
  int span = with_ties ? 3 : 1000;
  u.values.assign(s.num_players, std::vector<Rational>(s.outcomes.size()));
  for (int p = 0; p < s.num_players; ++p) {
    for (size_t a = 0; a < s.outcomes.size(); ++a) {
      u.values[p][a] = Rational(static_cast<long long>(rng.below(2 * span + 1)) - span);
    }
  }
  return u;
}

// Random zero-sum utility: u2 = -u1.
inline UtilityFunction random_zero_sum_utility(const PositionalStructure& s, SplitMix64& rng) {
  UtilityFunction u;
  u.values.assign(2, std::vector<Rational>(s.outcomes.size()));
  for (size_t a = 0; a < s.outcomes.size(); ++a) {
    Rational v(static_cast<long long>(rng.below(21)) - 10, 1 + static_cast<long long>(rng.below(3)));
    u.values[0][a] = v;
    u.values[1][a] = -v;
  }
  return u;
}

inline WinLosePartition random_partition(const PositionalStructure& s, SplitMix64& rng) {
  WinLosePartition p;
  p.player1_wins.assign(s.outcomes.size(), false);
  for (size_t a = 0; a < s.outcomes.size(); ++a) {
    p.player1_wins[a] = rng.below(2) == 1;
  }
  return p;
}

}  // namespace dgms::test
