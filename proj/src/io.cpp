#include "dgms/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "dgms/rng.hpp"

namespace dgms {

namespace {

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw GameError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::vector<std::string>> tokenize(const std::string& text,
                                               std::vector<int>& line_numbers) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) {
      tokens.push_back(tok);
    }
    if (!tokens.empty()) {
      rows.push_back(std::move(tokens));
      line_numbers.push_back(number);
    }
  }
  return rows;
}

long long parse_int(const std::string& text, int line, const std::string& what) {
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    fail_at(line, "expected an integer for " + what + ", got '" + text + "'");
  }
  if (pos != text.size()) {
    fail_at(line, "expected an integer for " + what + ", got '" + text + "'");
  }
  return value;
}

// "key=value" fields; returns the value or fails.
std::string expect_field(const std::string& token, const std::string& key, int line) {
  std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    fail_at(line, "expected " + key + "=<...>, got '" + token + "'");
  }
  return token.substr(prefix.size());
}

Rational parse_rational(const std::string& text, int line) {
  auto slash = text.find('/');
  if (text.find('.') != std::string::npos) {
    fail_at(line, "decimal values are rejected; use <p>/<q> rationals");
  }
  if (slash == std::string::npos) {
    return Rational(parse_int(text, line, "value"));
  }
  long long p = parse_int(text.substr(0, slash), line, "numerator");
  long long q = parse_int(text.substr(slash + 1), line, "denominator");
  if (q == 0) {
    fail_at(line, "zero denominator");
  }
  return Rational(p, q);
}

}  // namespace

PositionalStructure parse_game(const std::string& text) {
  std::vector<int> lines;
  auto rows = tokenize(text, lines);
  if (rows.empty() || rows[0][0] != "players") {
    throw GameError("players directive required before any other line");
  }
  int players = -1;
  std::vector<std::string> vertices;
  std::vector<std::string> declared_terminal;
  std::unordered_map<std::string, int> owners;
  std::vector<std::pair<std::string, std::string>> edges;
  std::unordered_map<std::string, int> seen;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    int line = lines[i];
    if (row[0] == "players") {
      if (players >= 0) {
        fail_at(line, "duplicate players directive");
      }
      if (row.size() != 2) {
        fail_at(line, "usage: players <n>");
      }
      long long n = parse_int(row[1], line, "players");
      if (n < 1) {
        fail_at(line, "player count must be at least 1");
      }
      players = static_cast<int>(n);
    } else if (row[0] == "node") {
      if (row.size() != 3) {
        fail_at(line, "usage: node <id> player=<i> | node <id> terminal");
      }
      if (seen.count(row[1])) {
        fail_at(line, "duplicate node id: " + row[1]);
      }
      seen.emplace(row[1], line);
      vertices.push_back(row[1]);
      if (row[2] == "terminal") {
        declared_terminal.push_back(row[1]);
      } else {
        long long p = parse_int(expect_field(row[2], "player", line), line, "player");
        if (p < 1 || p > players) {
          fail_at(line, "player index out of range: " + std::to_string(p));
        }
        owners.emplace(row[1], static_cast<int>(p));
      }
    } else if (row[0] == "edge") {
      if (row.size() != 3) {
        fail_at(line, "usage: edge <src> <dst>");
      }
      edges.emplace_back(row[1], row[2]);
    } else {
      fail_at(line, "unknown directive: " + row[0]);
    }
  }
  Digraph g = build_digraph(vertices, edges);
  for (const std::string& id : declared_terminal) {
    if (g.has_nonloop_out(g.vertex(id))) {
      throw GameError("node " + id + " is declared terminal but has an outgoing edge");
    }
  }
  return build_structure(g, players, owners);
}

std::string render_game(const PositionalStructure& s) {
  std::ostringstream out;
  out << "players " << s.num_players << "\n";
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    out << "node " << s.graph.ids[v];
    if (s.is_terminal(v)) {
      out << " terminal\n";
    } else {
      out << " player=" << s.owner[v] << "\n";
    }
  }
  for (const Edge& e : s.graph.edges) {
    out << "edge " << s.graph.ids[e.src] << " " << s.graph.ids[e.dst] << "\n";
  }
  return out.str();
}

UtilityFunction parse_utilities(const std::string& text, const PositionalStructure& s) {
  std::vector<int> lines;
  auto rows = tokenize(text, lines);
  UtilityFunction u;
  u.values.assign(s.num_players, std::vector<Rational>(s.outcomes.size()));
  std::vector<std::vector<bool>> filled(s.num_players,
                                        std::vector<bool>(s.outcomes.size(), false));
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    int line = lines[i];
    if (row[0] != "utility" || row.size() != 4) {
      fail_at(line, "usage: utility player=<i> outcome=<id> value=<p>/<q>");
    }
    long long p = parse_int(expect_field(row[1], "player", line), line, "player");
    if (p < 1 || p > s.num_players) {
      fail_at(line, "player index out of range: " + std::to_string(p));
    }
    std::string outcome_id = expect_field(row[2], "outcome", line);
    int a = -1;
    try {
      a = s.outcome_index(outcome_id);
    } catch (const GameError&) {
      fail_at(line, "unknown outcome id: " + outcome_id);
    }
    if (filled[p - 1][a]) {
      fail_at(line, "duplicate utility row for player " + std::to_string(p) +
                        ", outcome " + outcome_id);
    }
    filled[p - 1][a] = true;
    u.values[p - 1][a] = parse_rational(expect_field(row[3], "value", line), line);
  }
  for (int p = 0; p < s.num_players; ++p) {
    for (size_t a = 0; a < s.outcomes.size(); ++a) {
      if (!filled[p][a]) {
        throw GameError("missing utility for player " + std::to_string(p + 1) +
                        ", outcome " + s.outcomes[a].id);
      }
    }
  }
  return u;
}

StrategyProfile parse_profile(const std::string& text, const PositionalStructure& s) {
  std::vector<int> lines;
  auto rows = tokenize(text, lines);
  StrategyProfile x = empty_profile(s);
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    int line = lines[i];
    std::string src_id, dst_id;
    if (row.size() == 3 && row[1] == "->") {
      src_id = row[0];
      dst_id = row[2];
    } else if (row.size() == 2) {
      src_id = row[0];
      dst_id = row[1];
    } else {
      fail_at(line, "usage: <vertex> -> <target>");
    }
    int v = s.graph.vertex(src_id);
    int w = s.graph.vertex(dst_id);
    if (s.is_terminal(v)) {
      fail_at(line, "terminal vertex has no strategy: " + src_id);
    }
    int pick = -1;
    for (int e : s.graph.out[v]) {
      if (s.graph.edges[e].dst == w) {
        pick = e;
        break;
      }
    }
    if (pick < 0) {
      fail_at(line, "no edge " + src_id + " -> " + dst_id);
    }
    x.choice[v] = pick;
  }
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (!s.is_terminal(v) && x.choice[v] < 0) {
      throw GameError("profile misses a choice at vertex " + s.graph.ids[v]);
    }
  }
  return x;
}

PositionalStructure gen_household(int n) {
  if (n < 1) {
    throw GameError("household size must be at least 1");
  }
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::unordered_map<std::string, int> owners;
  for (int i = 1; i <= n; ++i) {
    vertices.push_back("v" + std::to_string(i));
    owners.emplace("v" + std::to_string(i), i);
  }
  for (int i = 1; i <= n; ++i) {
    vertices.push_back("t" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i % n + 1));
  }
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back("v" + std::to_string(i), "t" + std::to_string(i));
  }
  return build_structure(build_digraph(vertices, edges), n, owners);
}

PositionalStructure gen_random(int num_vertices, int num_players, double edge_density,
                               double terminal_fraction, std::uint64_t seed) {
  if (num_vertices < 1 || num_players < 1) {
    throw GameError("vertex and player counts must be at least 1");
  }
  if (edge_density < 0.0 || edge_density > 1.0 || terminal_fraction < 0.0 ||
      terminal_fraction > 1.0) {
    throw GameError("edge density and terminal fraction must lie in [0, 1]");
  }
  int num_terminals = static_cast<int>(static_cast<double>(num_vertices) * terminal_fraction);
  int num_owned = num_vertices - num_terminals;
  if (num_owned < 1) {
    throw GameError("parameters leave no non-terminal vertex");
  }
  if (num_vertices < 2) {
    throw GameError("a non-terminal vertex needs a distinct target; use >= 2 vertices");
  }
  SplitMix64 rng(seed);
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> owners;
  for (int i = 0; i < num_owned; ++i) {
    vertices.push_back("x" + std::to_string(i));
    owners.emplace(vertices.back(), 1 + static_cast<int>(rng.below(num_players)));
  }
  for (int i = 0; i < num_terminals; ++i) {
    vertices.push_back("t" + std::to_string(i));
  }
  std::uint64_t threshold =
      static_cast<std::uint64_t>(edge_density * 4294967296.0);  // density * 2^32
  std::vector<std::pair<std::string, std::string>> edges;
  for (int u = 0; u < num_owned; ++u) {
    // Guaranteed non-loop edge, then the density pass over all pairs.
    int r = static_cast<int>(rng.below(num_vertices - 1));
    int target = r >= u ? r + 1 : r;
    edges.emplace_back(vertices[u], vertices[target]);
    for (int w = 0; w < num_vertices; ++w) {
      if ((rng.next() >> 32) < threshold) {
        edges.emplace_back(vertices[u], vertices[w]);
      }
    }
  }
  // Drop surplus loops: at most one per vertex.
  std::vector<bool> has_loop(num_vertices, false);
  std::vector<std::pair<std::string, std::string>> kept;
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < num_vertices; ++i) {
    index.emplace(vertices[i], i);
  }
  for (const auto& e : edges) {
    if (e.first == e.second) {
      int v = index[e.first];
      if (has_loop[v]) {
        continue;
      }
      has_loop[v] = true;
    }
    kept.push_back(e);
  }
  return build_structure(build_digraph(vertices, kept), num_players, owners);
}

PositionalStructure gen_bench_chain(int num_components) {
  if (num_components < 1) {
    throw GameError("chain needs at least one component");
  }
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> owners;
  std::vector<std::pair<std::string, std::string>> edges;
  auto a = [](int i) { return "a" + std::to_string(i); };
  auto b = [](int i) { return "b" + std::to_string(i); };
  for (int i = 0; i < num_components; ++i) {
    vertices.push_back(a(i));
    vertices.push_back(b(i));
    owners.emplace(a(i), 1);
    owners.emplace(b(i), 2);
  }
  vertices.push_back("T1");
  vertices.push_back("T2");
  for (int i = 0; i < num_components; ++i) {
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), a(i));
    edges.emplace_back(a(i), i + 1 < num_components ? a(i + 1) : std::string("T1"));
    edges.emplace_back(b(i), "T2");
  }
  return build_structure(build_digraph(vertices, edges), 2, owners);
}

}  // namespace dgms
