#include "dgms/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dgms/rng.hpp"

namespace dgms {

namespace {

void require_within_cap(const PositionalStructure& s, long long cap) {
  if (profile_count(s) > cap) {
    throw GameError("instance exceeds the profile enumeration cap");
  }
}

bool nash_at(const PositionalStructure& s, int v0, const UtilityFunction& u,
             const StrategyProfile& x) {
  int base_outcome = trace_play(s, x, v0).outcome;
  for (int player = 1; player <= s.num_players; ++player) {
    StrategySpace space = strategy_space(s, player);
    if (space.vertices.empty()) {
      continue;
    }
    StrategyProfile deviated = x;
    for (long long k = 0; k < space.count; ++k) {
      space.apply(s, k, deviated);
      int o = trace_play(s, deviated, v0).outcome;
      if (u.u(player, o) > u.u(player, base_outcome)) {
        return false;
      }
    }
  }
  return true;
}

// Saddle existence in the win/lose game where A1 = outcomes in `mask`.
bool winlose_saddle(const GameFormTable& t, std::uint32_t mask) {
  for (long long r = 0; r < t.rows; ++r) {
    bool wins = true;
    for (long long c = 0; c < t.cols && wins; ++c) {
      wins = (mask >> t.at(r, c)) & 1;
    }
    if (wins) {
      return true;
    }
  }
  for (long long c = 0; c < t.cols; ++c) {
    bool wins = true;
    for (long long r = 0; r < t.rows && wins; ++r) {
      wins = !((mask >> t.at(r, c)) & 1);
    }
    if (wins) {
      return true;
    }
  }
  return false;
}

bool zerosum_saddle(const GameFormTable& t, const std::vector<long long>& u1) {
  long long maxmin = std::numeric_limits<long long>::min();
  for (long long r = 0; r < t.rows; ++r) {
    long long row_min = std::numeric_limits<long long>::max();
    for (long long c = 0; c < t.cols; ++c) {
      row_min = std::min(row_min, u1[t.at(r, c)]);
    }
    maxmin = std::max(maxmin, row_min);
  }
  long long minmax = std::numeric_limits<long long>::max();
  for (long long c = 0; c < t.cols; ++c) {
    long long col_max = std::numeric_limits<long long>::min();
    for (long long r = 0; r < t.rows; ++r) {
      col_max = std::max(col_max, u1[t.at(r, c)]);
    }
    minmax = std::min(minmax, col_max);
  }
  return maxmin == minmax;
}

bool has_pure_nash(const GameFormTable& t, const std::vector<long long>& u1,
                   const std::vector<long long>& u2) {
  std::vector<long long> col_best(t.cols, std::numeric_limits<long long>::min());
  std::vector<long long> row_best(t.rows, std::numeric_limits<long long>::min());
  for (long long r = 0; r < t.rows; ++r) {
    for (long long c = 0; c < t.cols; ++c) {
      col_best[c] = std::max(col_best[c], u1[t.at(r, c)]);
      row_best[r] = std::max(row_best[r], u2[t.at(r, c)]);
    }
  }
  for (long long r = 0; r < t.rows; ++r) {
    for (long long c = 0; c < t.cols; ++c) {
      int o = t.at(r, c);
      if (u1[o] == col_best[c] && u2[o] == row_best[r]) {
        return true;
      }
    }
  }
  return false;
}

long long factorial_capped(int n, long long cap) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) {
      return cap + 1;
    }
  }
  return f;
}

}  // namespace

bool is_nash(const PositionalStructure& s, int v0, const UtilityFunction& u,
             const StrategyProfile& x, long long cap) {
  require_within_cap(s, cap);
  return nash_at(s, v0, u, x);
}

bool is_subgame_perfect(const PositionalStructure& s, const UtilityFunction& u,
                        const StrategyProfile& x, long long cap) {
  require_within_cap(s, cap);
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (!nash_at(s, v, u, x)) {
      return false;
    }
  }
  return true;
}

Rational brute_force_value(const PositionalStructure& s, int v0, const UtilityFunction& u,
                           long long cap) {
  if (s.num_players != 2) {
    throw GameError("brute_force_value requires a two-person structure");
  }
  if (!is_zero_sum(s, u)) {
    throw GameError("brute_force_value requires a zero-sum utility");
  }
  require_within_cap(s, cap);
  StrategySpace s1 = strategy_space(s, 1);
  StrategySpace s2 = strategy_space(s, 2);
  StrategyProfile x = empty_profile(s);
  bool first = true;
  Rational maxmin;
  for (long long k1 = 0; k1 < s1.count; ++k1) {
    s1.apply(s, k1, x);
    bool row_first = true;
    Rational row_min;
    for (long long k2 = 0; k2 < s2.count; ++k2) {
      s2.apply(s, k2, x);
      Rational payoff = u.u(1, trace_play(s, x, v0).outcome);
      if (row_first || payoff < row_min) {
        row_min = payoff;
        row_first = false;
      }
    }
    if (first || row_min > maxmin) {
      maxmin = row_min;
      first = false;
    }
  }
  first = true;
  Rational minmax;
  for (long long k2 = 0; k2 < s2.count; ++k2) {
    s2.apply(s, k2, x);
    bool col_first = true;
    Rational col_max;
    for (long long k1 = 0; k1 < s1.count; ++k1) {
      s1.apply(s, k1, x);
      Rational payoff = u.u(1, trace_play(s, x, v0).outcome);
      if (col_first || payoff > col_max) {
        col_max = payoff;
        col_first = false;
      }
    }
    if (first || col_max < minmax) {
      minmax = col_max;
      first = false;
    }
  }
  if (maxmin != minmax) {
    throw ContractViolation("pure positional saddle missing: max-min differs from min-max");
  }
  return maxmin;
}

SolvabilityReport check_solvability(const GameFormTable& t, const SolvabilityOptions& opt) {
  int na = static_cast<int>(t.outcome_ids.size());
  if (na > 25) {
    throw GameError("too many outcomes for exact 2^|A| partition enumeration");
  }
  SolvabilityReport report;

  report.winlose_solvable = true;
  for (std::uint32_t mask = 0; mask < (1u << na); ++mask) {
    if (!winlose_saddle(t, mask)) {
      report.winlose_solvable = false;
      report.counterexample_a1.assign(na, false);
      for (int a = 0; a < na; ++a) {
        report.counterexample_a1[a] = (mask >> a) & 1;
      }
      break;
    }
  }

  long long fact = factorial_capped(na, opt.max_exact_orderings);
  SplitMix64 rng(opt.seed);
  auto random_utility = [&]() {
    std::vector<long long> u(na);
    for (int a = 0; a < na; ++a) {
      u[a] = static_cast<long long>(rng.below(4 * static_cast<std::uint64_t>(na) + 1));
    }
    return u;
  };

  report.zerosum_solvable_sampled = true;
  if (fact <= opt.max_exact_orderings) {
    std::vector<long long> ranks(na);
    std::iota(ranks.begin(), ranks.end(), 0);
    do {
      ++report.zerosum_samples;
      if (!zerosum_saddle(t, ranks)) {
        report.zerosum_solvable_sampled = false;
        break;
      }
    } while (std::next_permutation(ranks.begin(), ranks.end()));
  } else {
    for (int i = 0; i < opt.random_samples; ++i) {
      ++report.zerosum_samples;
      if (!zerosum_saddle(t, random_utility())) {
        report.zerosum_solvable_sampled = false;
        break;
      }
    }
  }

  report.nash_solvable_sampled = true;
  if (fact <= opt.max_exact_orderings && fact * fact <= opt.max_exact_orderings) {
    std::vector<long long> u1(na), u2(na);
    std::iota(u1.begin(), u1.end(), 0);
    do {
      std::iota(u2.begin(), u2.end(), 0);
      bool ok = true;
      do {
        ++report.nash_samples;
        if (!has_pure_nash(t, u1, u2)) {
          report.nash_solvable_sampled = false;
          ok = false;
          break;
        }
      } while (std::next_permutation(u2.begin(), u2.end()));
      if (!ok) {
        break;
      }
    } while (std::next_permutation(u1.begin(), u1.end()));
  } else {
    for (int i = 0; i < opt.random_samples; ++i) {
      ++report.nash_samples;
      if (!has_pure_nash(t, random_utility(), random_utility())) {
        report.nash_solvable_sampled = false;
        break;
      }
    }
  }

  report.agreement = report.winlose_solvable == report.zerosum_solvable_sampled &&
                     report.winlose_solvable == report.nash_solvable_sampled;
  return report;
}

}  // namespace dgms
