#include "dgms/winlose.hpp"

#include <algorithm>
#include <deque>

namespace dgms {

namespace {

// Scratch shared across all per-component attractor runs of one solve.
// Epoch stamps replace per-component clearing, keeping the total cost
// linear in |V| + |E|.
struct AttractorWorkspace {
  // Reverse adjacency in compressed form: in-edge ids of vertex v live at
  // in_list[in_offset[v] .. in_offset[v + 1]).
  std::vector<int> in_offset;
  std::vector<int> in_list;
  std::vector<int> cand_stamp;
  std::vector<int> w_stamp;
  std::vector<int> counter;
  std::vector<int> layer;
  std::vector<int> strat;
  int epoch = 0;

  explicit AttractorWorkspace(const Digraph& g)
      : in_offset(g.num_vertices() + 1, 0),
        in_list(g.num_edges()),
        cand_stamp(g.num_vertices(), 0),
        w_stamp(g.num_vertices(), 0),
        counter(g.num_vertices(), 0),
        layer(g.num_vertices(), -1),
        strat(g.num_vertices(), -1) {
    for (const Edge& e : g.edges) {
      ++in_offset[e.dst + 1];
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      in_offset[v + 1] += in_offset[v];
    }
    std::vector<int> cursor(in_offset.begin(), in_offset.end() - 1);
    for (const Edge& e : g.edges) {
      in_list[cursor[e.dst]++] = e.id;
    }
  }

  bool in_region(int v) const { return w_stamp[v] == epoch; }

  // Queue-based fixpoint with per-opponent-vertex out-degree counters.
  void run(const PositionalStructure& s, const std::vector<int>& candidates,
           const std::vector<int>& targets, int player) {
    ++epoch;
    const Digraph& g = s.graph;
    for (int v : candidates) {
      cand_stamp[v] = epoch;
      counter[v] = static_cast<int>(g.out[v].size());
    }
    std::deque<int> queue;
    for (int t : targets) {
      if (w_stamp[t] != epoch) {
        w_stamp[t] = epoch;
        layer[t] = 0;
        strat[t] = -1;
        queue.push_back(t);
      }
    }
    drain(s, queue, player);
  }

  // Component-local variant: attracts inside component j toward the edges
  // that leave it into `player`-won vertices. The exits themselves stay
  // outside the region, so their (possibly huge) in-edge lists are never
  // scanned and the whole solve stays linear.
  void run_component(const PositionalStructure& s, int j, const std::vector<int>& winner,
                     int player) {
    ++epoch;
    const Digraph& g = s.graph;
    const std::vector<int>& comp = s.scc.components[j];
    for (int v : comp) {
      cand_stamp[v] = epoch;
      counter[v] = static_cast<int>(g.out[v].size());
    }
    std::deque<int> queue;
    for (int v : comp) {
      for (int e : g.out[v]) {
        int w = g.edges[e].dst;
        if (s.scc.component_of[w] == j || winner[w] != player) {
          continue;
        }
        if (s.owner[v] == player) {
          w_stamp[v] = epoch;
          layer[v] = 1;
          strat[v] = e;
          queue.push_back(v);
          break;
        }
        if (--counter[v] == 0) {
          w_stamp[v] = epoch;
          layer[v] = 1;
          strat[v] = -1;
          queue.push_back(v);
          break;
        }
      }
    }
    drain(s, queue, player);
  }

  void drain(const PositionalStructure& s, std::deque<int>& queue, int player) {
    const Digraph& g = s.graph;
    while (!queue.empty()) {
      int w = queue.front();
      queue.pop_front();
      for (int k = in_offset[w]; k < in_offset[w + 1]; ++k) {
        int e = in_list[k];
        int v = g.edges[e].src;
        if (cand_stamp[v] != epoch || w_stamp[v] == epoch) {
          continue;
        }
        if (s.owner[v] == player) {
          w_stamp[v] = epoch;
          layer[v] = layer[w] + 1;
          strat[v] = e;
          queue.push_back(v);
        } else if (--counter[v] == 0) {
          w_stamp[v] = epoch;
          layer[v] = layer[w] + 1;
          strat[v] = -1;
          queue.push_back(v);
        }
      }
    }
  }
};

}  // namespace

WinLosePartition partition_from_ids(const PositionalStructure& s,
                                    const std::vector<std::string>& a1_ids) {
  WinLosePartition p;
  p.player1_wins.assign(s.outcomes.size(), false);
  for (const std::string& id : a1_ids) {
    p.player1_wins[s.outcome_index(id)] = true;
  }
  return p;
}

UtilityFunction winlose_utility(const PositionalStructure& s, const WinLosePartition& p) {
  UtilityFunction u;
  u.values.assign(2, std::vector<Rational>(s.outcomes.size()));
  for (size_t a = 0; a < s.outcomes.size(); ++a) {
    int sign = p.player1_wins[a] ? 1 : -1;
    u.values[0][a] = Rational(sign);
    u.values[1][a] = Rational(-sign);
  }
  return u;
}

AttractorResult attract(const PositionalStructure& s, const std::vector<int>& candidates,
                        const std::vector<int>& targets, int player) {
  AttractorWorkspace ws(s.graph);
  ws.run(s, candidates, targets, player);
  AttractorResult r;
  r.layer.assign(s.graph.num_vertices(), -1);
  r.strategy.assign(s.graph.num_vertices(), -1);
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (ws.in_region(v)) {
      r.region.push_back(v);
      r.layer[v] = ws.layer[v];
      r.strategy[v] = ws.strat[v];
    }
  }
  return r;
}

WinLoseSolution solve_winlose(const PositionalStructure& s, const WinLosePartition& p) {
  if (s.num_players != 2) {
    throw GameError("solve_winlose requires a two-person structure");
  }
  const Digraph& g = s.graph;
  const SccDecomposition& scc = s.scc;
  WinLoseSolution sol;
  sol.winner.assign(g.num_vertices(), 0);
  sol.layer.assign(g.num_vertices(), -1);
  sol.profile = empty_profile(s);
  AttractorWorkspace ws(g);

  // Components are indexed sinks-first, so every exit is already labeled.
  for (int j = 0; j < scc.num_components(); ++j) {
    const std::vector<int>& comp = scc.components[j];
    if (scc.in_j_terminal[j]) {
      sol.winner[comp[0]] = p.player1_wins[s.outcome_of[j]] ? 1 : 2;
      sol.layer[comp[0]] = 0;
      continue;
    }
    if (scc.in_j_zero[j]) {
      int v = comp[0];
      int o = s.owner[v];
      int pick = -1;
      for (int e : g.out[v]) {
        if (sol.winner[g.edges[e].dst] == o) {
          pick = e;
          break;
        }
      }
      sol.winner[v] = pick >= 0 ? o : 3 - o;
      sol.profile.choice[v] = pick >= 0 ? pick : g.out[v][0];
      continue;
    }
    int oc = s.outcome_of[j];
    int cycle_player = p.player1_wins[oc] ? 1 : 2;  // wins by just staying in G^j
    int exit_player = 3 - cycle_player;             // must force an already-won exit
    ws.run_component(s, j, sol.winner, exit_player);
    for (int v : comp) {
      if (ws.in_region(v)) {
        sol.winner[v] = exit_player;
        sol.layer[v] = ws.layer[v];
        sol.profile.choice[v] =
            s.owner[v] == exit_player ? ws.strat[v] : g.out[v][0];
      } else {
        sol.winner[v] = cycle_player;
        if (s.owner[v] == cycle_player) {
          // Stay in the component outside W; failing that, exit to an
          // already-won exit; one of the two always exists here.
          int pick = -1;
          int fallback = -1;
          for (int e : g.out[v]) {
            int w = g.edges[e].dst;
            if (scc.component_of[w] == j && !ws.in_region(w)) {
              pick = e;
              break;
            }
            if (fallback < 0 && scc.component_of[w] != j &&
                sol.winner[w] == cycle_player) {
              fallback = e;
            }
          }
          if (pick < 0) {
            pick = fallback;
          }
          if (pick < 0) {
            throw ContractViolation("no safe move outside the attractor at " + g.ids[v]);
          }
          sol.profile.choice[v] = pick;
        } else {
          sol.profile.choice[v] = g.out[v][0];
        }
      }
    }
  }
  return sol;
}

Digraph eliminate_component(const Digraph& g, const std::vector<int>& component) {
  std::vector<bool> in_comp(g.num_vertices(), false);
  for (int v : component) {
    in_comp[v] = true;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges) {
    if (!in_comp[e.src]) {
      edges.emplace_back(g.ids[e.src], g.ids[e.dst]);
    }
  }
  for (int v : component) {
    edges.emplace_back(g.ids[v], g.ids[v]);
  }
  return build_digraph(g.ids, edges);
}

}  // namespace dgms
