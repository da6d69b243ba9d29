#include "dgms/game.hpp"

#include <algorithm>
#include <deque>

namespace dgms {

namespace {

const long long kCountCap = 1000000000000000000LL;  // saturation for profile counts

long long sat_mul(long long a, long long b) {
  if (a > kCountCap / b) {
    return kCountCap;
  }
  return a * b;
}

std::string cyclic_outcome_id(const Digraph& g, const std::vector<int>& comp) {
  const std::string* min_id = &g.ids[comp[0]];
  for (int v : comp) {
    if (g.ids[v] < *min_id) {
      min_id = &g.ids[v];
    }
  }
  return "c:" + *min_id;
}

void attach_outcomes(PositionalStructure& s) {
  s.outcome_of.assign(s.scc.num_components(), -1);
  s.outcomes.clear();
  for (int j = 0; j < s.scc.num_components(); ++j) {
    if (!s.scc.has_dicycle[j]) {
      continue;
    }
    Outcome o;
    o.component = j;
    o.is_terminal = s.scc.in_j_terminal[j];
    o.id = o.is_terminal ? s.graph.ids[s.scc.components[j][0]]
                         : cyclic_outcome_id(s.graph, s.scc.components[j]);
    s.outcome_of[j] = static_cast<int>(s.outcomes.size());
    s.outcomes.push_back(std::move(o));
  }
}

}  // namespace

int PositionalStructure::outcome_index(const std::string& id) const {
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].id == id) {
      return static_cast<int>(i);
    }
  }
  throw GameError("unknown outcome id: " + id);
}

PositionalStructure build_structure(const Digraph& g, int players,
                                    const std::unordered_map<std::string, int>& owners) {
  if (players < 1) {
    throw GameError("player count must be at least 1");
  }
  PositionalStructure s;
  s.graph = normalize_terminals(g);
  s.num_players = players;
  s.owner.assign(s.graph.num_vertices(), -1);
  for (const auto& [id, player] : owners) {
    int v = s.graph.vertex(id);
    if (player < 1 || player > players) {
      throw GameError("player index out of range for vertex " + id);
    }
    if (s.graph.is_terminal(v)) {
      throw GameError("owner assigned to terminal vertex " + id);
    }
    s.owner[v] = player;
  }
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (!s.graph.is_terminal(v) && s.owner[v] < 0) {
      throw GameError("non-terminal vertex without owner: " + s.graph.ids[v]);
    }
  }
  s.scc = scc_decompose(s.graph);
  attach_outcomes(s);
  return s;
}

Lasso trace_play(const PositionalStructure& s, const StrategyProfile& x, int v0) {
  const Digraph& g = s.graph;
  std::vector<int> visit_pos(g.num_vertices(), -1);
  std::vector<int> walk;
  int v = v0;
  while (visit_pos[v] < 0) {
    visit_pos[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int e = s.is_terminal(v) ? g.loop[v] : x.choice[v];
    if (e < 0 || g.edges[e].src != v) {
      throw GameError("profile has no valid choice at vertex " + g.ids[v]);
    }
    v = g.edges[e].dst;
  }
  Lasso l;
  int split = visit_pos[v];
  l.stem.assign(walk.begin(), walk.begin() + split);
  l.cycle.assign(walk.begin() + split, walk.end());
  l.outcome = s.outcome_of[s.scc.component_of[v]];
  if (l.outcome < 0) {
    throw ContractViolation("play cycle landed in a component without outcome");
  }
  return l;
}

DgProjection dg_project(const PositionalStructure& s) {
  DgProjection p;
  p.structure = s;
  p.outcome_merge.assign(s.outcomes.size(), -1);
  std::vector<Outcome> merged;
  int c_index = -1;
  for (size_t i = 0; i < s.outcomes.size(); ++i) {
    if (s.outcomes[i].is_terminal) {
      p.outcome_merge[i] = static_cast<int>(merged.size());
      merged.push_back(s.outcomes[i]);
    } else {
      if (c_index < 0) {
        c_index = static_cast<int>(merged.size());
        merged.push_back({"c", -1, false});
      }
      p.outcome_merge[i] = c_index;
    }
  }
  p.structure.outcomes = std::move(merged);
  for (int j = 0; j < s.scc.num_components(); ++j) {
    int o = s.outcome_of[j];
    p.structure.outcome_of[j] = o < 0 ? -1 : p.outcome_merge[o];
  }
  return p;
}

std::set<int> reachable_outcomes(const PositionalStructure& s, int player,
                                 const StrategyProfile& x, int v0) {
  if (s.num_players != 2) {
    throw GameError("reachable_outcomes requires a two-person structure");
  }
  const Digraph& g = s.graph;
  // Restricted graph: the fixed player's choice only, everything else intact.
  std::vector<std::pair<std::string, std::string>> restricted;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (s.owner[v] == player) {
      int e = x.choice[v];
      if (e < 0 || g.edges[e].src != v) {
        throw GameError("strategy has no valid choice at vertex " + g.ids[v]);
      }
      restricted.emplace_back(g.ids[v], g.ids[g.edges[e].dst]);
    } else {
      for (int e : g.out[v]) {
        restricted.emplace_back(g.ids[v], g.ids[g.edges[e].dst]);
      }
    }
  }
  Digraph r = build_digraph(g.ids, restricted);
  std::vector<bool> reachable(r.num_vertices(), false);
  std::deque<int> queue{v0};
  reachable[v0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : r.out[v]) {
      int w = r.edges[e].dst;
      if (!reachable[w]) {
        reachable[w] = true;
        queue.push_back(w);
      }
    }
  }
  SccDecomposition rscc = scc_decompose(r);
  std::set<int> result;
  for (int j = 0; j < rscc.num_components(); ++j) {
    if (!rscc.has_dicycle[j]) {
      continue;
    }
    int v = rscc.components[j][0];
    if (reachable[v]) {
      result.insert(s.outcome_of[s.scc.component_of[v]]);
    }
  }
  return result;
}

StrategySpace strategy_space(const PositionalStructure& s, int player) {
  StrategySpace sp;
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (s.owner[v] == player) {
      sp.vertices.push_back(v);
      sp.count = sat_mul(sp.count, static_cast<long long>(s.graph.out[v].size()));
    }
  }
  return sp;
}

void StrategySpace::apply(const PositionalStructure& s, long long k, StrategyProfile& x) const {
  for (int v : vertices) {
    long long radix = static_cast<long long>(s.graph.out[v].size());
    x.choice[v] = s.graph.out[v][static_cast<size_t>(k % radix)];
    k /= radix;
  }
}

long long profile_count(const PositionalStructure& s) {
  long long count = 1;
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (!s.is_terminal(v)) {
      count = sat_mul(count, static_cast<long long>(s.graph.out[v].size()));
    }
  }
  return count;
}

StrategyProfile empty_profile(const PositionalStructure& s) {
  StrategyProfile x;
  x.choice.assign(s.graph.num_vertices(), -1);
  return x;
}

GameFormTable expand_game_form(const PositionalStructure& s, int v0, long long cap) {
  if (s.num_players != 2) {
    throw GameError("expand_game_form requires a two-person structure");
  }
  StrategySpace s1 = strategy_space(s, 1);
  StrategySpace s2 = strategy_space(s, 2);
  if (sat_mul(s1.count, s2.count) > cap) {
    throw GameError("game form exceeds profile cap");
  }
  GameFormTable t;
  t.rows = s1.count;
  t.cols = s2.count;
  t.cell.reserve(static_cast<size_t>(t.rows * t.cols));
  for (const Outcome& o : s.outcomes) {
    t.outcome_ids.push_back(o.id);
  }
  StrategyProfile x = empty_profile(s);
  for (long long r = 0; r < t.rows; ++r) {
    s1.apply(s, r, x);
    for (long long c = 0; c < t.cols; ++c) {
      s2.apply(s, c, x);
      t.cell.push_back(trace_play(s, x, v0).outcome);
    }
  }
  return t;
}

bool is_zero_sum(const PositionalStructure& s, const UtilityFunction& u) {
  if (s.outcomes.empty()) {
    return true;
  }
  Rational sum = u.u(1, 0) + u.u(2, 0);
  for (size_t a = 1; a < s.outcomes.size(); ++a) {
    if (u.u(1, static_cast<int>(a)) + u.u(2, static_cast<int>(a)) != sum) {
      return false;
    }
  }
  return true;
}

}  // namespace dgms
