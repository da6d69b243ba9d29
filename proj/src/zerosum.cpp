#include "dgms/zerosum.hpp"

#include <algorithm>
#include <set>

#include "dgms/winlose.hpp"

namespace dgms {

namespace {

// Solves one component whose exits are all valued. Writes values and edge
// choices for the component vertices into the global arrays.
//
// Descending threshold sweep: for threshold t, player 1 wins iff it can
// force an outcome of value >= t. If the cycle value clears t, player 1
// only needs to stay outside player 2's attractor to the low exits;
// otherwise player 1 must attract the play to a high exit. A vertex's
// value is the highest threshold at which it falls into player 1's region.
// Player 2's move at a vertex of value t comes from the game one threshold
// up, where player 2 wins and thereby caps the payoff at t.
void sweep_component(const PositionalStructure& s, int j,
                     const std::vector<Rational>& thresholds,  // descending, relevant only
                     const Rational& cycle_value, bool has_cycle,
                     std::vector<Rational>& value, std::vector<char>& valued,
                     std::vector<int>& choice) {
  const Digraph& g = s.graph;
  const std::vector<int>& comp = s.scc.components[j];

  if (!has_cycle) {
    // Singleton without a loop: plain one-step max/min.
    int v = comp[0];
    int o = s.owner[v];
    int pick = -1;
    for (int e : g.out[v]) {
      int w = g.edges[e].dst;
      if (pick < 0 ||
          (o == 1 ? value[w] > value[g.edges[pick].dst] : value[w] < value[g.edges[pick].dst])) {
        pick = e;
      }
    }
    value[v] = value[g.edges[pick].dst];
    valued[v] = 1;
    choice[v] = pick;
    return;
  }

  std::vector<char> in_comp(g.num_vertices(), 0);
  for (int v : comp) {
    in_comp[v] = 1;
  }

  // Player 2's strategy from the previous (higher) threshold game; the
  // sentinel above the top threshold is "stay in the component".
  std::vector<int> prev_strat2(g.num_vertices(), -1);
  for (int v : comp) {
    if (s.owner[v] != 2) {
      continue;
    }
    int pick = g.out[v][0];
    for (int e : g.out[v]) {
      if (in_comp[g.edges[e].dst]) {
        pick = e;
        break;
      }
    }
    prev_strat2[v] = pick;
  }

  std::vector<char> assigned(g.num_vertices(), 0);
  for (const Rational& t : thresholds) {
    std::vector<int> low_exits, high_exits;
    for (int v : comp) {
      for (int e : g.out[v]) {
        int w = g.edges[e].dst;
        if (in_comp[w]) {
          continue;
        }
        if (!valued[w]) {
          throw GameError("component has an exit to a non-valued vertex: " + g.ids[w]);
        }
        (value[w] >= t ? high_exits : low_exits).push_back(w);
      }
    }

    std::vector<int> strat2(g.num_vertices(), -1);
    std::vector<char> region1(g.num_vertices(), 0);
    std::vector<int> strat1(g.num_vertices(), -1);
    if (cycle_value >= t) {
      AttractorResult a = attract(s, comp, low_exits, 2);
      for (int v : comp) {
        if (a.layer[v] >= 0) {
          strat2[v] = s.owner[v] == 2 ? a.strategy[v] : -1;
          continue;
        }
        region1[v] = 1;
        if (s.owner[v] == 1) {
          int pick = -1, fallback = -1;
          for (int e : g.out[v]) {
            int w = g.edges[e].dst;
            if (in_comp[w] && a.layer[w] < 0) {
              pick = e;
              break;
            }
            if (fallback < 0 && !in_comp[w] && value[w] >= t) {
              fallback = e;
            }
          }
          strat1[v] = pick >= 0 ? pick : fallback;
        }
      }
    } else {
      AttractorResult a = attract(s, comp, high_exits, 1);
      for (int v : comp) {
        if (a.layer[v] >= 0) {
          region1[v] = 1;
          strat1[v] = s.owner[v] == 1 ? a.strategy[v] : -1;
          continue;
        }
        if (s.owner[v] == 2) {
          int pick = -1, fallback = -1;
          for (int e : g.out[v]) {
            int w = g.edges[e].dst;
            if (in_comp[w] && a.layer[w] < 0) {
              pick = e;
              break;
            }
            if (fallback < 0 && !in_comp[w] && value[w] < t) {
              fallback = e;
            }
          }
          strat2[v] = pick >= 0 ? pick : fallback;
        }
      }
    }

    for (int v : comp) {
      if (assigned[v] || !region1[v]) {
        continue;
      }
      assigned[v] = 1;
      value[v] = t;
      valued[v] = 1;
      choice[v] = s.owner[v] == 1 ? strat1[v] : prev_strat2[v];
      if (choice[v] < 0) {
        throw ContractViolation("no optimal move assembled at " + g.ids[v]);
      }
    }
    prev_strat2 = std::move(strat2);
  }
  for (int v : comp) {
    if (!assigned[v]) {
      throw ContractViolation("vertex left unvalued by threshold sweep: " + g.ids[v]);
    }
  }
}

void resolve_outcomes(const PositionalStructure& s, const StrategyProfile& x,
                      std::vector<int>& outcome_at) {
  const Digraph& g = s.graph;
  outcome_at.assign(g.num_vertices(), -1);
  std::vector<char> on_path(g.num_vertices(), 0);
  std::vector<int> path;
  for (int start = 0; start < g.num_vertices(); ++start) {
    if (outcome_at[start] >= 0) {
      continue;
    }
    path.clear();
    int v = start;
    while (outcome_at[v] < 0 && !on_path[v]) {
      on_path[v] = 1;
      path.push_back(v);
      int e = s.is_terminal(v) ? g.loop[v] : x.choice[v];
      v = g.edges[e].dst;
    }
    int o = outcome_at[v] >= 0 ? outcome_at[v]
                               : s.outcome_of[s.scc.component_of[v]];
    for (int u : path) {
      on_path[u] = 0;
      outcome_at[u] = o;
    }
  }
}

}  // namespace

ComponentSolve solve_dg_component(const PositionalStructure& s, int component,
                                  const std::unordered_map<int, Rational>& exit_value,
                                  const Rational& cycle_value) {
  const Digraph& g = s.graph;
  std::vector<Rational> value(g.num_vertices());
  std::vector<char> valued(g.num_vertices(), 0);
  std::vector<int> choice(g.num_vertices(), -1);
  for (const auto& [v, val] : exit_value) {
    value[v] = val;
    valued[v] = 1;
  }
  bool has_cycle = s.scc.has_dicycle[component];
  std::set<Rational> relevant;
  if (has_cycle) {
    relevant.insert(cycle_value);
  }
  for (int v : s.scc.components[component]) {
    for (int e : g.out[v]) {
      int w = g.edges[e].dst;
      if (s.scc.component_of[w] != component && valued[w]) {
        relevant.insert(value[w]);
      }
    }
  }
  std::vector<Rational> thresholds(relevant.rbegin(), relevant.rend());
  sweep_component(s, component, thresholds, cycle_value, has_cycle, value, valued, choice);
  ComponentSolve out;
  for (int v : s.scc.components[component]) {
    out.value.emplace(v, value[v]);
    if (choice[v] >= 0) {
      out.choice.emplace(v, choice[v]);
    }
  }
  return out;
}

ZeroSumSolution solve_zerosum(const PositionalStructure& s, const UtilityFunction& u) {
  if (s.num_players != 2) {
    throw GameError("solve_zerosum requires a two-person structure");
  }
  if (!is_zero_sum(s, u)) {
    throw GameError("utility is not zero-sum up to an additive constant");
  }
  const Digraph& g = s.graph;
  ZeroSumSolution sol;
  sol.value.assign(g.num_vertices(), Rational(0));
  sol.profile = empty_profile(s);
  std::vector<char> valued(g.num_vertices(), 0);

  // One global sort of the distinct outcome values; components filter it.
  std::set<Rational> all_values;
  for (size_t a = 0; a < s.outcomes.size(); ++a) {
    all_values.insert(u.u(1, static_cast<int>(a)));
  }
  std::vector<Rational> global(all_values.rbegin(), all_values.rend());

  for (int j = 0; j < s.scc.num_components(); ++j) {
    if (s.scc.in_j_terminal[j]) {
      int v = s.scc.components[j][0];
      sol.value[v] = u.u(1, s.outcome_of[j]);
      valued[v] = 1;
      continue;
    }
    bool has_cycle = s.scc.has_dicycle[j];
    Rational cycle_value = has_cycle ? u.u(1, s.outcome_of[j]) : Rational(0);
    std::set<Rational> relevant;
    if (has_cycle) {
      relevant.insert(cycle_value);
    }
    for (int v : s.scc.components[j]) {
      for (int e : g.out[v]) {
        int w = g.edges[e].dst;
        if (s.scc.component_of[w] != j) {
          if (!valued[w]) {
            throw ContractViolation("exit not yet valued in sinks-first order");
          }
          relevant.insert(sol.value[w]);
        }
      }
    }
    std::vector<Rational> thresholds;
    for (const Rational& t : global) {
      if (relevant.count(t)) {
        thresholds.push_back(t);
      }
    }
    sweep_component(s, j, thresholds, cycle_value, has_cycle, sol.value, valued,
                    sol.profile.choice);
  }

  resolve_outcomes(s, sol.profile, sol.outcome_at);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (sol.value[v] != u.u(1, sol.outcome_at[v])) {
      throw ContractViolation("profile play does not realize the computed value at " +
                              g.ids[v]);
    }
  }
  return sol;
}

}  // namespace dgms
