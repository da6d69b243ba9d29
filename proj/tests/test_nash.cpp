#include <doctest.h>

#include "dgms/io.hpp"
#include "dgms/nash.hpp"
#include "dgms/oracle.hpp"
#include "helpers.hpp"

using namespace dgms;
using namespace dgms::test;

TEST_CASE("build_nash on the household game") {
  PositionalStructure s = gen_household(2);
  int v1 = s.graph.vertex("v1"), v2 = s.graph.vertex("v2");
  UtilityFunction u = make_utility(
      s, {{{"c:v1", Rational(0)}, {"t1", Rational(-1)}, {"t2", Rational(2)}},
          {{"c:v1", Rational(0)}, {"t1", Rational(2)}, {"t2", Rational(-1)}}});
  NashCertificate cert = build_nash(s, u, v1);

  // both players refuse to terminate and the play cycles forever
  CHECK(s.graph.edges[cert.profile.choice[v1]].dst == v2);
  CHECK(s.graph.edges[cert.profile.choice[v2]].dst == v1);
  CHECK(s.outcomes[cert.equilibrium_outcome].id == "c:v1");
  CHECK(cert.solve_count == 3);
  CHECK(is_nash(s, v1, u, cert.profile));

  // the construction probes t1 first (worst for player 1), rejects it, and
  // then certifies the cycle outcome
  REQUIRE(cert.trace.size() >= 2);
  CHECK(cert.trace.front().w.size() == 3);
  CHECK(cert.trace.back().w1.count(s.outcome_index("t1")) == 1);
  CHECK(cert.trace.back().w.count(s.outcome_index("c:v1")) == 1);
}

TEST_CASE("build_nash with a single outcome") {
  Digraph g = build_digraph({"v", "w"}, {{"v", "w"}, {"w", "v"}});
  PositionalStructure s = build_structure(g, 2, {{"v", 1}, {"w", 2}});
  REQUIRE(s.outcomes.size() == 1);
  UtilityFunction u = make_utility(s, {{{"c:v", Rational(7)}}, {{"c:v", Rational(-2)}}});
  NashCertificate cert = build_nash(s, u, s.graph.vertex("v"));
  CHECK(cert.equilibrium_outcome == 0);
  CHECK(cert.solve_count <= 2);
  CHECK(is_nash(s, s.graph.vertex("v"), u, cert.profile));
}

TEST_CASE("build_nash certificates are equilibria") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    PositionalStructure s = random_structure(seed, 7, 3000);
    SplitMix64 rng(seed * 7 + 3);
    UtilityFunction u = random_utility(s, rng, seed % 2 == 0);
    long long bound = 2 * static_cast<long long>(s.outcomes.size());
    for (int v0 = 0; v0 < s.graph.num_vertices(); ++v0) {
      NashCertificate cert = build_nash(s, u, v0);
      CHECK(is_nash(s, v0, u, cert.profile));
      CHECK(cert.solve_count <= bound);
      CHECK(trace_play(s, cert.profile, v0).outcome == cert.equilibrium_outcome);
      CHECK(cert.simple == check_simple(s, cert, v0));
    }
  }
}

TEST_CASE("check_simple") {
  PositionalStructure s = gen_household(2);
  int v1 = s.graph.vertex("v1");
  UtilityFunction u = make_utility(
      s, {{{"c:v1", Rational(0)}, {"t1", Rational(-1)}, {"t2", Rational(2)}},
          {{"c:v1", Rational(0)}, {"t1", Rational(2)}, {"t2", Rational(-1)}}});
  NashCertificate cert = build_nash(s, u, v1);

  SUBCASE("the cycling household equilibrium is simple") {
    // each player's cycling half already rules the terminals out
    CHECK(check_simple(s, cert, v1));
    CHECK(cert.simple);
  }
  SUBCASE("corrupting one half breaks simplicity") {
    NashCertificate bad = cert;
    int v2 = s.graph.vertex("v2");
    for (int e : s.graph.out[v2]) {
      if (s.graph.ids[s.graph.edges[e].dst] == "t2") {
        bad.profile.choice[v2] = e;
      }
    }
    // player 2's half now reaches t2, which is not the recorded outcome
    CHECK(!check_simple(s, bad, v1));
  }
}
