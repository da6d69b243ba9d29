#include "dgms/digraph.hpp"

#include <algorithm>

namespace dgms {

int Digraph::vertex(const std::string& id) const {
  auto it = index.find(id);
  if (it == index.end()) {
    throw GameError("unknown vertex id: " + id);
  }
  return it->second;
}

bool Digraph::has_nonloop_out(int v) const {
  for (int e : out[v]) {
    if (edges[e].dst != v) {
      return true;
    }
  }
  return false;
}

Digraph build_digraph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edge_list) {
  Digraph g;
  g.ids.reserve(vertices.size());
  for (const std::string& id : vertices) {
    if (g.index.count(id)) {
      throw GameError("duplicate vertex id: " + id);
    }
    g.index.emplace(id, static_cast<int>(g.ids.size()));
    g.ids.push_back(id);
  }
  g.out.resize(g.ids.size());
  g.loop.assign(g.ids.size(), -1);
  for (const auto& [src_id, dst_id] : edge_list) {
    auto si = g.index.find(src_id);
    auto di = g.index.find(dst_id);
    if (si == g.index.end()) {
      throw GameError("edge source references unknown vertex: " + src_id);
    }
    if (di == g.index.end()) {
      throw GameError("edge target references unknown vertex: " + dst_id);
    }
    int src = si->second, dst = di->second;
    int id = static_cast<int>(g.edges.size());
    if (src == dst) {
      if (g.loop[src] >= 0) {
        throw GameError("second loop on vertex: " + src_id);
      }
      g.loop[src] = id;
    }
    g.edges.push_back({id, src, dst});
    g.out[src].push_back(id);
  }
  return g;
}

Digraph normalize_terminals(const Digraph& g) {
  Digraph n = g;
  for (int v = 0; v < n.num_vertices(); ++v) {
    if (!n.has_nonloop_out(v) && n.loop[v] < 0) {
      int id = static_cast<int>(n.edges.size());
      n.edges.push_back({id, v, v});
      n.out[v].push_back(id);
      n.loop[v] = id;
    }
  }
  return n;
}

namespace {

// Iterative Tarjan; emission order is reverse topological (sinks first).
struct TarjanState {
  const Digraph& g;
  std::vector<int> low, num, stack_pos, stack;
  std::vector<std::vector<int>>& components;
  std::vector<int>& component_of;
  int counter = 0;

  explicit TarjanState(const Digraph& g_, std::vector<std::vector<int>>& comps,
                       std::vector<int>& comp_of)
      : g(g_),
        low(g_.num_vertices(), -1),
        num(g_.num_vertices(), -1),
        stack_pos(g_.num_vertices(), -1),
        components(comps),
        component_of(comp_of) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t edge_pos;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.edge_pos == 0) {
        num[v] = low[v] = counter++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
      }
      bool descended = false;
      while (f.edge_pos < g.out[v].size()) {
        int w = g.edges[g.out[v][f.edge_pos]].dst;
        ++f.edge_pos;
        if (num[w] < 0) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (stack_pos[w] >= 0) {
          low[v] = std::min(low[v], num[w]);
        }
      }
      if (descended) {
        continue;
      }
      if (low[v] == num[v]) {
        std::vector<int> comp;
        int j = static_cast<int>(components.size());
        size_t base = static_cast<size_t>(stack_pos[v]);
        for (size_t i = base; i < stack.size(); ++i) {
          comp.push_back(stack[i]);
          stack_pos[stack[i]] = -1;
          component_of[stack[i]] = j;
        }
        stack.resize(base);
        components.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
};

}  // namespace

SccDecomposition scc_decompose(const Digraph& g) {
  SccDecomposition d;
  d.component_of.assign(g.num_vertices(), -1);
  TarjanState state(g, d.components, d.component_of);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (state.num[v] < 0) {
      state.run(v);
    }
  }
  int nc = d.num_components();
  d.in_j_zero.assign(nc, false);
  d.in_j_terminal.assign(nc, false);
  d.has_dicycle.assign(nc, false);
  for (int j = 0; j < nc; ++j) {
    const auto& comp = d.components[j];
    if (comp.size() >= 2) {
      d.has_dicycle[j] = true;
    } else {
      int v = comp[0];
      if (g.loop[v] >= 0) {
        d.has_dicycle[j] = true;
        if (g.is_terminal(v)) {
          d.in_j_terminal[j] = true;
        }
      } else {
        d.in_j_zero[j] = true;
      }
    }
  }
  return d;
}

Condensation condense(const Digraph& g, const SccDecomposition& scc) {
  if (static_cast<int>(scc.component_of.size()) != g.num_vertices()) {
    throw GameError("decomposition does not belong to this digraph");
  }
  Condensation c;
  int nc = scc.num_components();
  c.quotient.ids.reserve(nc);
  for (int j = 0; j < nc; ++j) {
    c.quotient.index.emplace(std::to_string(j), j);
    c.quotient.ids.push_back(std::to_string(j));
  }
  c.quotient.out.resize(nc);
  c.quotient.loop.assign(nc, -1);
  std::vector<int> seen(nc, -1);  // last source component that emitted an edge to [target]
  for (int j = 0; j < nc; ++j) {
    for (int v : scc.components[j]) {
      for (int e : g.out[v]) {
        int k = scc.component_of[g.edges[e].dst];
        if (k == j || seen[k] == j) {
          continue;
        }
        seen[k] = j;
        int id = static_cast<int>(c.quotient.edges.size());
        c.quotient.edges.push_back({id, j, k});
        c.quotient.out[j].push_back(id);
        c.lift.push_back(e);
      }
    }
  }
  return c;
}

}  // namespace dgms
