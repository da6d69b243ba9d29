#include <doctest.h>

#include <set>

#include "dgms/io.hpp"
#include "helpers.hpp"

using namespace dgms;
using namespace dgms::test;

TEST_CASE("build_structure") {
  SUBCASE("household n=2 outcome set and owners") {
    PositionalStructure s = gen_household(2);
    REQUIRE(s.outcomes.size() == 3);
    std::set<std::string> ids;
    for (const Outcome& o : s.outcomes) {
      ids.insert(o.id);
    }
    CHECK(ids == std::set<std::string>{"c:v1", "t1", "t2"});
    CHECK(s.owner[s.graph.vertex("v1")] == 1);
    CHECK(s.owner[s.graph.vertex("v2")] == 2);
    CHECK(!s.outcomes[s.outcome_index("c:v1")].is_terminal);
    CHECK(s.outcomes[s.outcome_index("t1")].is_terminal);
  }
  SUBCASE("vertex with no exit is normalized to a terminal") {
    Digraph g = build_digraph({"v", "w"}, {{"v", "w"}});
    PositionalStructure s = build_structure(g, 1, {{"v", 1}});
    CHECK(s.is_terminal(s.graph.vertex("w")));
    CHECK(s.graph.loop[s.graph.vertex("w")] >= 0);
  }
  SUBCASE("missing owner is an error") {
    Digraph g = build_digraph({"v", "w"}, {{"v", "w"}, {"w", "v"}});
    CHECK_THROWS_AS(build_structure(g, 2, {{"v", 1}}), GameError);
  }
  SUBCASE("owner on terminal and out-of-range player are errors") {
    Digraph g = build_digraph({"v", "t"}, {{"v", "t"}});
    CHECK_THROWS_AS(build_structure(g, 2, {{"v", 1}, {"t", 2}}), GameError);
    CHECK_THROWS_AS(build_structure(g, 2, {{"v", 3}}), GameError);
  }
}

TEST_CASE("trace_play") {
  PositionalStructure s = gen_household(2);
  int v1 = s.graph.vertex("v1"), v2 = s.graph.vertex("v2");
  int t1 = s.graph.vertex("t1"), t2 = s.graph.vertex("t2");

  auto choose = [&](StrategyProfile& x, int v, int target) {
    for (int e : s.graph.out[v]) {
      if (s.graph.edges[e].dst == target) {
        x.choice[v] = e;
      }
    }
  };

  SUBCASE("immediate termination") {
    StrategyProfile x = empty_profile(s);
    choose(x, v1, t1);
    choose(x, v2, t2);
    Lasso l = trace_play(s, x, v1);
    CHECK(l.stem == std::vector<int>{v1});
    CHECK(l.cycle == std::vector<int>{t1});
    CHECK(s.outcomes[l.outcome].id == "t1");
  }
  SUBCASE("mutual refusal yields the long dicycle") {
    StrategyProfile x = empty_profile(s);
    choose(x, v1, v2);
    choose(x, v2, v1);
    Lasso l = trace_play(s, x, v1);
    CHECK(l.stem.empty());
    CHECK(l.cycle == std::vector<int>{v1, v2});
    CHECK(s.outcomes[l.outcome].id == "c:v1");
  }
  SUBCASE("terminal start") {
    StrategyProfile x = empty_profile(s);
    choose(x, v1, v2);
    choose(x, v2, v1);
    Lasso l = trace_play(s, x, t1);
    CHECK(l.stem.empty());
    CHECK(l.cycle == std::vector<int>{t1});
    CHECK(s.outcomes[l.outcome].id == "t1");
  }
  SUBCASE("cycle always lies inside one component; stem is short") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      PositionalStructure r = random_structure(seed);
      SplitMix64 rng(seed);
      StrategyProfile x = empty_profile(r);
      for (int v = 0; v < r.graph.num_vertices(); ++v) {
        if (!r.is_terminal(v)) {
          x.choice[v] = r.graph.out[v][rng.below(r.graph.out[v].size())];
        }
      }
      for (int v0 = 0; v0 < r.graph.num_vertices(); ++v0) {
        Lasso l = trace_play(r, x, v0);
        CHECK(static_cast<int>(l.stem.size()) < r.graph.num_vertices());
        int comp = r.scc.component_of[l.cycle[0]];
        for (int v : l.cycle) {
          CHECK(r.scc.component_of[v] == comp);
        }
        CHECK(l.outcome == r.outcome_of[comp]);
      }
    }
  }
}

TEST_CASE("dg_project") {
  SUBCASE("household merge renames the single cycle outcome") {
    PositionalStructure s = gen_household(3);
    DgProjection p = dg_project(s);
    CHECK(p.structure.outcomes.size() == s.outcomes.size());
    CHECK(p.outcome_merge[s.outcome_index("c:v1")] == p.structure.outcome_index("c"));
    for (int i = 1; i <= 3; ++i) {
      std::string t = "t" + std::to_string(i);
      CHECK(p.structure.outcomes[p.outcome_merge[s.outcome_index(t)]].id == t);
    }
  }
  SUBCASE("two disjoint 2-cycles merge into one outcome") {
    Digraph g = build_digraph({"a", "b", "c", "d", "t"},
                              {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"a", "c"}, {"c", "t"}});
    PositionalStructure s =
        build_structure(g, 2, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}});
    REQUIRE(s.outcomes.size() == 3);
    DgProjection p = dg_project(s);
    CHECK(p.structure.outcomes.size() == 2);
    CHECK(p.outcome_merge[s.outcome_index("c:a")] == p.outcome_merge[s.outcome_index("c:c")]);
  }
  SUBCASE("terminal-only structures project to themselves") {
    Digraph g = build_digraph({"v", "t"}, {{"v", "t"}});
    PositionalStructure s = build_structure(g, 1, {{"v", 1}});
    DgProjection p = dg_project(s);
    CHECK(p.structure.outcomes.size() == s.outcomes.size());
    for (size_t i = 0; i < s.outcomes.size(); ++i) {
      CHECK(p.outcome_merge[i] == static_cast<int>(i));
    }
  }
}

TEST_CASE("reachable_outcomes") {
  PositionalStructure s = gen_household(2);
  int v1 = s.graph.vertex("v1");
  auto with_choice = [&](int v, const std::string& target) {
    StrategyProfile x = empty_profile(s);
    for (int e : s.graph.out[v]) {
      if (s.graph.ids[s.graph.edges[e].dst] == target) {
        x.choice[v] = e;
      }
    }
    return x;
  };

  SUBCASE("terminating strategy pins the outcome") {
    std::set<int> r = reachable_outcomes(s, 1, with_choice(v1, "t1"), v1);
    CHECK(r == std::set<int>{s.outcome_index("t1")});
  }
  SUBCASE("cycling strategy leaves the opponent a choice") {
    std::set<int> r = reachable_outcomes(s, 1, with_choice(v1, "v2"), v1);
    CHECK(r == std::set<int>{s.outcome_index("c:v1"), s.outcome_index("t2")});
  }
  SUBCASE("terminal start") {
    std::set<int> r = reachable_outcomes(s, 1, with_choice(v1, "t1"), s.graph.vertex("t1"));
    CHECK(r == std::set<int>{s.outcome_index("t1")});
  }
  SUBCASE("agrees with opponent-strategy enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      PositionalStructure r = random_structure(seed, 7, 2000);
      SplitMix64 rng(seed);
      for (int player : {1, 2}) {
        StrategySpace mine = strategy_space(r, player);
        StrategySpace theirs = strategy_space(r, 3 - player);
        StrategyProfile x = empty_profile(r);
        mine.apply(r, static_cast<long long>(rng.below(mine.count)), x);
        int v0 = static_cast<int>(rng.below(r.graph.num_vertices()));
        std::set<int> enumerated;
        StrategyProfile probe = x;
        for (long long k = 0; k < theirs.count; ++k) {
          theirs.apply(r, k, probe);
          enumerated.insert(trace_play(r, probe, v0).outcome);
        }
        CHECK(reachable_outcomes(r, player, x, v0) == enumerated);
      }
    }
  }
}

TEST_CASE("expand_game_form") {
  SUBCASE("household n=2 is the 2x2 form") {
    PositionalStructure s = gen_household(2);
    GameFormTable t = expand_game_form(s, s.graph.vertex("v1"));
    REQUIRE(t.rows == 2);
    REQUIRE(t.cols == 2);
    int t1 = s.outcome_index("t1"), t2 = s.outcome_index("t2"), c = s.outcome_index("c:v1");
    // one row is constant t1, the other mixes the cycle and t2
    std::set<std::pair<int, int>> rows;
    for (long long r = 0; r < 2; ++r) {
      rows.insert({t.at(r, 0), t.at(r, 1)});
    }
    bool has_const_t1 = rows.count({t1, t1}) == 1;
    bool has_mixed = rows.count({c, t2}) == 1 || rows.count({t2, c}) == 1;
    CHECK(has_const_t1);
    CHECK(has_mixed);
  }
  SUBCASE("one choice vertex gives a 2x1 form") {
    Digraph g = build_digraph({"v", "a", "b"}, {{"v", "a"}, {"v", "b"}});
    PositionalStructure s = build_structure(g, 2, {{"v", 1}});
    GameFormTable t = expand_game_form(s, s.graph.vertex("v"));
    CHECK(t.rows == 2);
    CHECK(t.cols == 1);
    CHECK(t.at(0, 0) != t.at(1, 0));
  }
  SUBCASE("cap is enforced") {
    PositionalStructure s = gen_household(2);
    CHECK_THROWS_AS(expand_game_form(s, s.graph.vertex("v1"), 1), GameError);
  }
  SUBCASE("profile count matches the out-degree product") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      PositionalStructure r = random_structure(seed);
      long long expected = 1;
      for (int v = 0; v < r.graph.num_vertices(); ++v) {
        if (!r.is_terminal(v)) {
          expected *= static_cast<long long>(r.graph.out[v].size());
        }
      }
      CHECK(profile_count(r) == expected);
      CHECK(strategy_space(r, 1).count * strategy_space(r, 2).count == expected);
    }
  }
}
