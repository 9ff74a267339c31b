#pragma once

// Strategies as pure next-move oracles, the usual combinators (copy-cat,
// dereliction, pairing, tensor, promotion), composition by synchronising
// two strategies over the shared middle game and hiding the internal
// moves, and bounded checkers for totality, innocence, noetherianity and
// well-bracketing.

#include "gsmltt/kernel.hpp"

#include <cstdint>

namespace gsm {

struct InternalLoopBudget : std::runtime_error {
  explicit InternalLoopBudget(const std::string& w) : std::runtime_error(w) {}
};

struct Strategy {
  // Response (move, justifier) on an odd-length position; nullopt when
  // the strategy has none (partiality) or the position is foreign to it.
  std::function<std::optional<std::pair<Move, int>>(const JSeq&)> next;
  // Exhaustive table of even-length plays, when the strategy is finite.
  std::shared_ptr<const std::vector<JSeq>> table;
  std::string label;
};

std::optional<std::pair<Move, int>> apply(const Strategy& s, const JSeq& pos);

// ---------------------------------------------------------------- builders

// Finite strategy given by its even-length plays (even prefixes included).
Strategy table_strategy(std::vector<JSeq> plays, std::string label = "table");

// Copy-cat core: P answers the last O-move with its image under a move
// bijection, pointing at the partner of the O-move's justifier.
Strategy mirror_strategy(std::function<std::optional<Move>(const Move&)> mirror,
                         std::string label);

// Mirror exchanging Cod.<cp>.rest and Dom.<dp>.rest.
Strategy prefix_mirror(Path cod_prefix, Path dom_prefix, std::string label);

Strategy copycat();      // on G -o G
Strategy dereliction();  // on !G -o G

// The n-step numeral on T => N, and handy arithmetic strategies on N => N.
Strategy numeral(long n);
Strategy successor();
Strategy doubling();
Strategy addition();  // on (N & N) => N: probes both components, answers the sum
Strategy pazo();      // on (N => N) => N: answers f(0) + f(1)

// ---------------------------------------------------------------- combinators

Strategy pairing(const Strategy& f, const Strategy& g);    // A-oB, A-oC |- A-o(B&C)
Strategy tensor(const Strategy& f, const Strategy& g);     // A-oC, B-oD |- A(x)B -o C(x)D
Strategy promotion(const Strategy& f);                     // !A-oB |- !A-o!B

// ---------------------------------------------------------------- composition

// f : A-oB, g : B-oC |- A-oC by the interaction machine; internal moves
// are hidden, pointers into them rewired by justifier chasing.
Strategy compose_linear(const Strategy& f, const Strategy& g,
                        long step_budget = 10000);

// Co-Kleisli composite g . f! for f : !A-oB, g : !B-oC.
Strategy bullet(const Strategy& f, const Strategy& g, long step_budget = 10000);

struct TraceEntry {
  enum Comp : uint8_t { A, B0, B1, C } comp;  // B0: played by f, B1: by g
  Move move;  // A/C in composite coordinates; B in the middle game's own
  int just = 0;
  bool hidden = false;
};

struct InteractionTrace {
  std::vector<TraceEntry> full;
  JSeq visible;           // projection to A, C
  bool budget_hit = false;
  bool stuck = false;     // a side had no response mid-interaction
};

// Drives the machine with the given O-moves (composite coordinates).
InteractionTrace interaction_trace(const Strategy& f, const Strategy& g,
                                   const std::vector<std::pair<Move, int>>& o_script,
                                   long step_budget = 10000);

// Projections of a full interaction back to the two sides and the
// visible composite, for cross-checking hiding.
JSeq trace_side_f(const InteractionTrace& t);  // on A-oB
JSeq trace_side_g(const InteractionTrace& t);  // on B-oC
JSeq trace_visible(const InteractionTrace& t);

// ---------------------------------------------------------------- checkers

enum class Verdict : uint8_t { Holds, Fails, Inconclusive };

struct CheckResult {
  Verdict verdict = Verdict::Holds;
  std::string witness;
};

enum class Constraint : uint8_t { Total, Innocent, Noetherian, WellBracketed };

CheckResult check_constraint(const Game& g, const Strategy& s, Constraint c,
                             const EnumConfig& cfg);
// Total + innocent + noetherian.
CheckResult check_winning(const Game& g, const Strategy& s, const EnumConfig& cfg);

// Bounded equality: both strategies answer identically on every position
// of g consistent with both, of length < 2*depth.
bool strategy_eq(const Game& g, const Strategy& a, const Strategy& b, int depth,
                 int branch_bound);

// All even-length plays of s within g under the bounds.
std::vector<JSeq> plays(const Game& g, const Strategy& s, const EnumConfig& cfg);

// Seeded random finite strategy on g (may be partial at some positions).
Strategy random_table_strategy(const Game& g, const EnumConfig& cfg, uint64_t seed);

}  // namespace gsm
