#include "dgms/nash.hpp"

#include <algorithm>

#include "dgms/winlose.hpp"

namespace dgms {

namespace {

// Worst outcome of W for the player; ties break to the smallest outcome id.
int worst_for(const PositionalStructure& s, const UtilityFunction& u, int player,
              const std::set<int>& w) {
  int best = -1;
  for (int a : w) {
    if (best < 0 || u.u(player, a) < u.u(player, best) ||
        (u.u(player, a) == u.u(player, best) && s.outcomes[a].id < s.outcomes[best].id)) {
      best = a;
    }
  }
  return best;
}

WinLosePartition partition_with_a2(size_t num_outcomes, const std::set<int>& a2) {
  WinLosePartition p;
  p.player1_wins.assign(num_outcomes, true);
  for (int a : a2) {
    p.player1_wins[a] = false;
  }
  return p;
}

}  // namespace

NashCertificate build_nash(const PositionalStructure& s, const UtilityFunction& u, int v0) {
  if (s.num_players != 2) {
    throw GameError("build_nash requires a two-person structure");
  }
  NashCertificate cert;
  size_t na = s.outcomes.size();
  std::set<int> w, w1, w2;
  for (size_t a = 0; a < na; ++a) {
    w.insert(static_cast<int>(a));
  }
  cert.trace.push_back({w, w1, w2});

  while (!w.empty()) {
    int a_star = worst_for(s, u, 1, w);

    // Can player 2 punish player 1 down to W1 u {a*}? If not, a* is safe
    // to discard for player 1.
    std::set<int> a2 = w1;
    a2.insert(a_star);
    WinLoseSolution sol2 = solve_winlose(s, partition_with_a2(na, a2));
    ++cert.solve_count;
    if (sol2.winner[v0] != 2) {
      w.erase(a_star);
      w1.insert(a_star);
      cert.trace.push_back({w, w1, w2});
      continue;
    }

    // Player 2 punishes; can player 1 counter-punish into W2 u W2(a*)?
    std::set<int> w2a;
    for (int a : w) {
      if (u.u(2, a) <= u.u(2, a_star)) {
        w2a.insert(a);
      }
    }
    std::set<int> a1 = w2;
    a1.insert(w2a.begin(), w2a.end());
    WinLosePartition p1;
    p1.player1_wins.assign(na, false);
    for (int a : a1) {
      p1.player1_wins[a] = true;
    }
    WinLoseSolution sol1 = solve_winlose(s, p1);
    ++cert.solve_count;
    if (sol1.winner[v0] != 1) {
      for (int a : w2a) {
        w.erase(a);
        w2.insert(a);
      }
      cert.trace.push_back({w, w1, w2});
      continue;
    }

    // Both punishments exist: the pair of punishing strategies meets at a*.
    cert.profile = empty_profile(s);
    for (int v = 0; v < s.graph.num_vertices(); ++v) {
      if (s.owner[v] == 1) {
        cert.profile.choice[v] = sol1.profile.choice[v];
      } else if (s.owner[v] == 2) {
        cert.profile.choice[v] = sol2.profile.choice[v];
      }
    }
    cert.equilibrium_outcome = a_star;
    cert.simple = check_simple(s, cert, v0);
    return cert;
  }
  throw ContractViolation("partition loop emptied W; game form not solvable");
}

bool check_simple(const PositionalStructure& s, const NashCertificate& cert, int v0) {
  std::set<int> g1 = reachable_outcomes(s, 1, cert.profile, v0);
  std::set<int> g2 = reachable_outcomes(s, 2, cert.profile, v0);
  std::set<int> both;
  std::set_intersection(g1.begin(), g1.end(), g2.begin(), g2.end(),
                        std::inserter(both, both.begin()));
  return both == std::set<int>{cert.equilibrium_outcome};
}

}  // namespace dgms
