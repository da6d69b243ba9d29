#include "dgms/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <sstream>

#include "dgms/io.hpp"
#include "dgms/nash.hpp"
#include "dgms/oracle.hpp"
#include "dgms/winlose.hpp"
#include "dgms/zerosum.hpp"

namespace dgms {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw GameError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string rational_str(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += "/" + std::to_string(r.denominator());
  }
  return s;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      parts.push_back(item);
    }
  }
  return parts;
}

void print_strategy_lines(const PositionalStructure& s, const StrategyProfile& x,
                          std::ostream& out) {
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (x.choice[v] >= 0 && !s.is_terminal(v)) {
      out << s.graph.ids[v] << " -> " << s.graph.ids[s.graph.edges[x.choice[v]].dst] << "\n";
    }
  }
}

int cmd_solve_winlose(const std::string& game_text, const std::string& win_list,
                      const std::string& from, std::ostream& out) {
  PositionalStructure s = parse_game(game_text);
  WinLosePartition p = partition_from_ids(s, split_commas(win_list));
  WinLoseSolution sol = solve_winlose(s, p);
  out << "win/lose solution (A1 = {" << win_list << "})\n";
  out << "vertex\twinner\tmove\n";
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    out << s.graph.ids[v] << "\t" << sol.winner[v] << "\t"
        << (sol.profile.choice[v] >= 0
               ? s.graph.ids[s.graph.edges[sol.profile.choice[v]].dst]
               : std::string("-"))
        << "\n";
  }
  if (!from.empty()) {
    int v0 = s.graph.vertex(from);
    out << "from " << from << ": player " << sol.winner[v0] << " wins\n";
  }
  out << "\n";
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    out << "winner(" << s.graph.ids[v] << ")=" << sol.winner[v] << "\n";
  }
  print_strategy_lines(s, sol.profile, out);
  return 0;
}

int cmd_solve_zerosum(const std::string& game_text, const std::string& utils_text,
                      const std::string& from, std::ostream& out) {
  PositionalStructure s = parse_game(game_text);
  UtilityFunction u = parse_utilities(utils_text, s);
  ZeroSumSolution sol = solve_zerosum(s, u);
  out << "zero-sum solution\n";
  out << "vertex\tvalue\toutcome\tmove\n";
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    out << s.graph.ids[v] << "\t" << rational_str(sol.value[v]) << "\t"
        << s.outcomes[sol.outcome_at[v]].id << "\t"
        << (sol.profile.choice[v] >= 0
               ? s.graph.ids[s.graph.edges[sol.profile.choice[v]].dst]
               : std::string("-"))
        << "\n";
  }
  if (!from.empty()) {
    int v0 = s.graph.vertex(from);
    out << "from " << from << ": value " << rational_str(sol.value[v0]) << "\n";
  }
  out << "\n";
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    out << "value(" << s.graph.ids[v] << ")=" << rational_str(sol.value[v]) << "\n";
  }
  print_strategy_lines(s, sol.profile, out);
  return 0;
}

int cmd_nash(const std::string& game_text, const std::string& utils_text,
             const std::string& from, std::ostream& out) {
  PositionalStructure s = parse_game(game_text);
  UtilityFunction u = parse_utilities(utils_text, s);
  int v0 = s.graph.vertex(from);
  NashCertificate cert = build_nash(s, u, v0);
  out << "Nash equilibrium at " << from << ": outcome "
      << s.outcomes[cert.equilibrium_outcome].id << " after " << cert.solve_count
      << " win/lose solves" << (cert.simple ? " (simple)" : "") << "\n\n";
  out << "outcome=" << s.outcomes[cert.equilibrium_outcome].id << "\n";
  out << "solve_count=" << cert.solve_count << "\n";
  out << "simple=" << (cert.simple ? "true" : "false") << "\n";
  print_strategy_lines(s, cert.profile, out);
  return 0;
}

int cmd_oracle(const std::string& game_text, const std::string& utils_text,
               const std::string& profile_text, const std::string& check,
               const std::string& from, long long cap, std::ostream& out) {
  PositionalStructure s = parse_game(game_text);
  UtilityFunction u = parse_utilities(utils_text, s);
  if ((check == "ne" || check == "value") && from.empty()) {
    throw GameError("--from is required for check '" + check + "'");
  }
  if ((check == "ne" || check == "spne") && profile_text.empty()) {
    throw GameError("--profile is required for check '" + check + "'");
  }
  if (check == "ne") {
    StrategyProfile x = parse_profile(profile_text, s);
    bool ok = is_nash(s, s.graph.vertex(from), u, x, cap);
    out << "ne=" << (ok ? "true" : "false") << "\n";
  } else if (check == "spne") {
    StrategyProfile x = parse_profile(profile_text, s);
    bool ok = is_subgame_perfect(s, u, x, cap);
    out << "spne=" << (ok ? "true" : "false") << "\n";
  } else if (check == "value") {
    Rational v = brute_force_value(s, s.graph.vertex(from), u, cap);
    out << "value=" << rational_str(v) << "\n";
  } else {
    throw GameError("unknown check: " + check + " (expected ne|spne|value)");
  }
  return 0;
}

int cmd_bench(int max_size, std::ostream& out) {
  out << "size\tsolve_ms\n";
  for (int size = 1000; size <= max_size; size *= 10) {
    int components = size / 2;
    PositionalStructure s = gen_bench_chain(components);
    WinLosePartition p;
    p.player1_wins.assign(s.outcomes.size(), false);
    for (size_t a = 0; a < s.outcomes.size(); a += 2) {
      p.player1_wins[a] = true;
    }
    int repeats = size <= 100000 ? 5 : 1;
    double best_ms = 0.0;
    for (int i = 0; i < repeats; ++i) {
      auto start = std::chrono::steady_clock::now();
      WinLoseSolution sol = solve_winlose(s, p);
      auto stop = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      if (i == 0 || ms < best_ms) {
        best_ms = ms;
      }
      if (sol.winner[0] == 0) {
        throw ContractViolation("bench solve left a vertex unassigned");
      }
    }
    out << size << "\t" << best_ms << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"DGMS game solver suite"};
  app.require_subcommand(1);

  std::string game_path, utils_path, profile_path, from, win_list, check, out_path;
  long long max_profiles = kDefaultProfileCap;
  int max_size = 1000000;

  CLI::App* wl = app.add_subcommand("solve-winlose", "solve a win/lose game");
  wl->add_option("--game", game_path, "game file (default: stdin)");
  wl->add_option("--win", win_list, "comma list of outcomes forming A1")->required();
  wl->add_option("--from", from, "initial vertex to report");

  CLI::App* zs = app.add_subcommand("solve-zerosum", "solve a zero-sum game");
  zs->add_option("--game", game_path, "game file (default: stdin)");
  zs->add_option("--utils", utils_path, "utility file")->required();
  zs->add_option("--from", from, "initial vertex to report");

  CLI::App* ne = app.add_subcommand("nash", "construct a Nash equilibrium");
  ne->add_option("--game", game_path, "game file (default: stdin)");
  ne->add_option("--utils", utils_path, "utility file")->required();
  ne->add_option("--from", from, "initial vertex")->required();

  CLI::App* orc = app.add_subcommand("oracle", "brute-force checks");
  orc->add_option("--game", game_path, "game file (default: stdin)");
  orc->add_option("--utils", utils_path, "utility file")->required();
  orc->add_option("--profile", profile_path, "strategy profile file");
  orc->add_option("--check", check, "ne | spne | value")->required();
  orc->add_option("--from", from, "initial vertex (ne, value)");
  orc->add_option("--max-profiles", max_profiles, "enumeration cap override");

  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  int household_n = 2;
  CLI::App* hh = gen->add_subcommand("household", "the delegation example");
  hh->add_option("--n", household_n, "number of players")->required();
  hh->add_option("--out", out_path, "output file (default: stdout)");
  int rv = 6, rp = 2;
  double density = 0.25, terminals = 0.25;
  std::uint64_t seed = 1;
  CLI::App* rnd = gen->add_subcommand("random", "seeded random structure");
  rnd->add_option("--vertices", rv, "vertex count")->required();
  rnd->add_option("--players", rp, "player count");
  rnd->add_option("--density", density, "edge density in [0,1]");
  rnd->add_option("--terminals", terminals, "terminal fraction in [0,1]");
  rnd->add_option("--seed", seed, "random seed");
  rnd->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* bench = app.add_subcommand("bench", "win/lose scaling benchmark");
  bench->add_option("--max-size", max_size, "largest chain size (default 1000000)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (wl->parsed()) {
      return cmd_solve_winlose(read_input(game_path, in), win_list, from, out);
    }
    if (zs->parsed()) {
      return cmd_solve_zerosum(read_input(game_path, in), read_input(utils_path, in), from,
                               out);
    }
    if (ne->parsed()) {
      return cmd_nash(read_input(game_path, in), read_input(utils_path, in), from, out);
    }
    if (orc->parsed()) {
      std::string profile_text =
          profile_path.empty() ? std::string() : read_input(profile_path, in);
      return cmd_oracle(read_input(game_path, in), read_input(utils_path, in), profile_text,
                        check, from, max_profiles, out);
    }
    if (gen->parsed()) {
      PositionalStructure s = hh->parsed() ? gen_household(household_n)
                                           : gen_random(rv, rp, density, terminals, seed);
      std::string text = render_game(s);
      if (out_path.empty() || out_path == "-") {
        out << text;
      } else {
        std::ofstream file(out_path);
        if (!file) {
          throw GameError("cannot open file: " + out_path);
        }
        file << text;
      }
      return 0;
    }
    if (bench->parsed()) {
      return cmd_bench(max_size, out);
    }
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dgms
