#pragma once

#include <cstdint>
#include <string>

#include "dgms/game.hpp"

namespace dgms {

// Game file format (line-oriented, '#' comments, case-sensitive ids):
//   players <n>
//   node <id> player=<i>   |   node <id> terminal
//   edge <src> <dst>              ("edge x x" declares the at-most-one loop)
PositionalStructure parse_game(const std::string& text);

std::string render_game(const PositionalStructure& s);

// Utility file format, one row per (player, outcome):
//   utility player=<i> outcome=<outcome-id> value=<p>/<q>   (or an integer)
// Decimal values are rejected; rationals stay exact.
UtilityFunction parse_utilities(const std::string& text, const PositionalStructure& s);

// Strategy profile, one "<vertex> -> <target>" (or "<vertex> <target>")
// line per owned vertex; parallel edges canonicalize to the first edge
// with the given target.
StrategyProfile parse_profile(const std::string& text, const PositionalStructure& s);

// The household delegation game: an n-dicycle v1..vn with one terminal
// exit per player, player i owning v_i.
PositionalStructure gen_household(int n);

// Seeded random structure; bit-identical across platforms for a fixed
// parameter tuple (integer-only generation path).
PositionalStructure gen_random(int num_vertices, int num_players, double edge_density,
                               double terminal_fraction, std::uint64_t seed);

// Scaling benchmark input: a chain of 2-cycle components, two exits each
// (next component and a terminal). Roughly num_components * 2 vertices.
PositionalStructure gen_bench_chain(int num_components);

}  // namespace dgms
