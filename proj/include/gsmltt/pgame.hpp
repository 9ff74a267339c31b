#pragma once

// Predicate games: a carrier game together with a family assigning to
// every strategy on the carrier a subgame (or the undefined sentinel).
// Includes the liveness ordering between subgames, strategy closures,
// and the product/tensor/exponential constructions on p-games.

#include "gsmltt/strategy.hpp"

namespace gsm {

struct PGame {
  Game carrier;
  // gamma |-> the subgame the family prescribes at gamma
  std::function<Game(const Strategy&)> family;
  // sample strategies on the carrier, used wherever a construction has to
  // quantify over "all" strategies within bounds
  std::vector<Strategy> catalog;
};

// A position of the p-game protocol: the declared strategy answers the
// opening protocol question, the actual play then lives in its closure.
struct PGamePosition {
  Strategy declared;
  JSeq actual;
};

// ---------------------------------------------------------------- core

// The closure of s against h: every O-extension inside h is kept, and
// s's own responses extend even positions.
Game closure(const Strategy& s, const Game& h);

// Both clauses of the liveness order g <= h over positions enumerable
// within the bounds; fail carries the violating extension.
CheckResult liveness_leq(const Game& g, const Game& h, const EnumConfig& cfg);

// closure(s, carrier) <= family(s), cross-validated by checking that the
// even part of closure(s, family(s)) lies inside family(s).
CheckResult is_pgame_strategy(const Strategy& s, const PGame& p, const EnumConfig& cfg);

bool is_pgame_position(const PGame& p, const PGamePosition& pos, const EnumConfig& cfg);

// ---------------------------------------------------------------- builders

PGame constant_pgame(const Game& g, std::vector<Strategy> catalog = {});
PGame product_pgame(const PGame& a, const PGame& b);
PGame tensor_pgame(const PGame& a, const PGame& b, const EnumConfig& cfg);
PGame expo_pgame(const PGame& a, const EnumConfig& cfg);

// Constant p-games over the standard base games, with point catalogs.
PGame pgame_nat(int points = 4);
PGame pgame_terminal();
PGame pgame_tick();
PGame pgame_empty();

// ---------------------------------------------------------------- carrier strategies

Strategy silent_strategy();          // responds nowhere
Strategy point_on_flat(long n);      // answers n to the opening question
Strategy check_point();              // answers the check-mark
// componentwise play on a product or tensor carrier
Strategy carrier_pair(const Strategy& l, const Strategy& r);
// plays s uniformly in every thread of an exponential carrier
Strategy carrier_bang(const Strategy& s);

// Thread extraction s|i on !G and component extraction on G&H / G(x)H,
// by bounded play enumeration; nullopt when the projections do not form
// a deterministic strategy.
std::optional<Strategy> restrict_thread(const Strategy& s, int i, const Game& bang,
                                        const EnumConfig& cfg);
std::optional<Strategy> restrict_component(const Strategy& s, Seg side,
                                           const Game& pair, const EnumConfig& cfg);

}  // namespace gsm
