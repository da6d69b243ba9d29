#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dgms {

// Invalid input (bad file, bad parameters, violated preconditions).
struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure; must never fire on valid input.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Edge {
  int id;
  int src;
  int dst;
};

// Finite digraph. Parallel edges are allowed, at most one loop per vertex.
// Instances come from build_digraph / normalize_terminals and are treated
// as immutable afterwards.
struct Digraph {
  std::vector<std::string> ids;                 // vertex index -> id
  std::unordered_map<std::string, int> index;   // id -> vertex index
  std::vector<Edge> edges;                      // insertion order, id == position
  std::vector<std::vector<int>> out;            // per vertex, out-edge ids in insertion order
  std::vector<int> loop;                        // per vertex, loop edge id or -1

  int num_vertices() const { return static_cast<int>(ids.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  // Index of a known vertex id; throws GameError for unknown ids.
  int vertex(const std::string& id) const;

  bool has_nonloop_out(int v) const;

  // A vertex is terminal when it has no outgoing edge besides its loop.
  bool is_terminal(int v) const { return !has_nonloop_out(v); }
};

Digraph build_digraph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edge_list);

// Adds the missing loop at every terminal vertex. Edge ids of existing
// edges are preserved; idempotent.
Digraph normalize_terminals(const Digraph& g);

// Strongly connected components. Components are indexed sinks-first
// (reverse topological order of the condensation), so component j only
// has edges into components with smaller indices.
struct SccDecomposition {
  std::vector<std::vector<int>> components;  // j -> vertices of V^j
  std::vector<int> component_of;             // vertex -> j
  std::vector<bool> in_j_zero;               // singleton without loop
  std::vector<bool> in_j_terminal;           // terminal-loop component
  std::vector<bool> has_dicycle;             // |V^j| >= 2 or loop present

  int num_components() const { return static_cast<int>(components.size()); }
};

SccDecomposition scc_decompose(const Digraph& g);

// Acyclic quotient. Quotient vertex j is named by its component index;
// lift maps each quotient edge id to one witnessing original edge id.
struct Condensation {
  Digraph quotient;
  std::vector<int> lift;
};

Condensation condense(const Digraph& g, const SccDecomposition& scc);

}  // namespace dgms
