#pragma once

// Moves, arenas, justified sequences, views, legality and the game
// constructions (tensor, product, linear implication, exponential,
// implication). Games are intensional: membership oracles plus bounded
// enumerators, so infinite games (N, universes) stay exact.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsm {

// ---------------------------------------------------------------- errors

struct MalformedPointer : std::runtime_error {
  explicit MalformedPointer(const std::string& w) : std::runtime_error(w) {}
};
struct NotInitial : std::runtime_error {
  explicit NotInitial(const std::string& w) : std::runtime_error(w) {}
};
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct UndefinedOperand : std::runtime_error {
  explicit UndefinedOperand(const std::string& w) : std::runtime_error(w) {}
};
struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& w) : std::runtime_error(w) {}
};

// ---------------------------------------------------------------- moves

enum class Op : uint8_t { O, P };
enum class Qa : uint8_t { Q, A };

inline Op flip(Op x) { return x == Op::O ? Op::P : Op::O; }

// Component address segment. Bang carries the thread index.
struct Seg {
  enum Kind : uint8_t { Left, Right, Bang, Dom, Cod } kind;
  int index = 0;

  friend bool operator==(const Seg& a, const Seg& b) {
    return a.kind == b.kind && (a.kind != Bang || a.index == b.index);
  }
  friend auto operator<=>(const Seg& a, const Seg& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (a.kind != Bang) return std::strong_ordering::equal;
    return a.index <=> b.index;
  }
};

inline Seg seg_left() { return {Seg::Left}; }
inline Seg seg_right() { return {Seg::Right}; }
inline Seg seg_dom() { return {Seg::Dom}; }
inline Seg seg_cod() { return {Seg::Cod}; }
inline Seg seg_bang(int i) { return {Seg::Bang, i}; }

using Path = std::vector<Seg>;

// Symbolic payloads: the question `q`, a natural number (also used for
// universe codes) and the check-mark answer of the unit-like game T'.
struct Name {
  enum Kind : uint8_t { Query, Nat, Check } kind = Query;
  long value = 0;

  static Name q() { return {Query, 0}; }
  static Name nat(long n) { return {Nat, n}; }
  static Name check() { return {Check, 0}; }

  friend bool operator==(const Name& a, const Name& b) {
    return a.kind == b.kind && (a.kind != Nat || a.value == b.value);
  }
  friend auto operator<=>(const Name& a, const Name& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (a.kind != Nat) return std::strong_ordering::equal;
    return a.value <=> b.value;
  }
};

struct Move {
  Name name;
  Op op = Op::O;
  Qa qa = Qa::Q;
  Path path;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move& a, const Move& b) {
    if (auto c = a.path <=> b.path; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    if (auto c = a.op <=> b.op; c != 0) return c;
    return a.qa <=> b.qa;
  }
};

inline Move mv(Name n, Op op, Qa qa, Path p = {}) { return {n, op, qa, std::move(p)}; }

// Pushes a segment on the front of the move's address.
inline Move retag(Move m, Seg s) {
  m.path.insert(m.path.begin(), s);
  return m;
}
inline Move flip_op(Move m) {
  m.op = flip(m.op);
  return m;
}

std::string to_string(const Seg& s);
std::string to_string(const Path& p);  // "-" for the empty path
std::string to_string(const Name& n);
std::string to_string(const Move& m);

// ---------------------------------------------------------------- j-sequences

// Justifier indices are 1-based; 0 marks an initial occurrence.
struct JSeq {
  std::vector<Move> moves;
  std::vector<int> just;

  int size() const { return static_cast<int>(moves.size()); }
  bool empty() const { return moves.empty(); }
  const Move& at(int i) const { return moves.at(i - 1); }  // 1-based
  int justifier(int i) const { return just.at(i - 1); }    // 1-based

  JSeq extended(const Move& m, int j) const {
    JSeq t = *this;
    t.moves.push_back(m);
    t.just.push_back(j);
    return t;
  }
  void validate() const;  // throws MalformedPointer

  friend bool operator==(const JSeq&, const JSeq&) = default;
  friend auto operator<=>(const JSeq&, const JSeq&) = default;
};

// One line per move: `index path move op qa justifier`, tab-separated.
std::string serialize(const JSeq& s);

// ---------------------------------------------------------------- arenas

struct Arena {
  // Membership of the move universe.
  std::function<bool(const Move&)> has_move;
  // Enabling oracle; nullopt stands for the distinguished root.
  std::function<bool(const std::optional<Move>&, const Move&)> enables;
  // Bounded enumerators of the enabling relation.
  std::function<std::vector<Move>(int bound)> initials;
  std::function<std::vector<Move>(const Move&, int bound)> enabled_from;
};

// Scans for E1/E2/E3 violations among pairs enumerable within the bound.
std::vector<std::string> check_arena(const Arena& a, int sample_bound);

bool pointers_respect_arena(const Arena& a, const JSeq& s);
bool alternates(const JSeq& s);
bool satisfies_visibility(const JSeq& s);
bool is_legal(const Arena& a, const JSeq& s);

// ---------------------------------------------------------------- views & projection

// J-subsequence selected by a keep-mask (1-based positions); pointers are
// rewired by chasing the justifier chain through deleted occurrences.
JSeq project(const JSeq& s, const std::vector<bool>& keep);
JSeq project(const JSeq& s, const std::function<bool(const Move&, int)>& keep);
// Variant reporting the 1-based source index of every kept occurrence.
JSeq project(const JSeq& s, const std::vector<bool>& keep, std::vector<int>& kept_indices);

JSeq pview(const JSeq& s);
JSeq oview(const JSeq& s);
// 1-based source indices of the occurrences in the P-view of s.
std::vector<int> pview_indices(const JSeq& s);

// Occurrences whose justifier chain reaches the given initial occurrence.
JSeq hereditary_thread(const JSeq& s, int init_index);
std::vector<bool> hereditary_mask(const JSeq& s, int init_index);
// 1-based indices of initial occurrences, in order.
std::vector<int> initial_indices(const JSeq& s);

// Component projection: keep moves whose path starts with `s`, strip it,
// optionally flipping polarity (for the domain of a linear implication).
JSeq strip_component(const JSeq& j, Seg s, bool flip_polarity);
bool has_prefix(const Move& m, Seg s);

// ---------------------------------------------------------------- games

struct Game {
  Arena arena;
  std::function<bool(const JSeq&)> contains;
  // optional extra extension candidates beyond what the arena enumerators
  // reach under the branching bound (e.g. a closure's own responses)
  std::function<std::vector<std::pair<Move, int>>(const JSeq&)> ext_hint;
  bool well_opened = false;
  bool well_founded = false;
  bool undefined = false;  // the sentinel game of an undefined family value

  static Game undefined_game();
};

// All (move, justifier) extensions of `s` contained in `g`, enumerated
// under the branching bound, in canonical order.
std::vector<std::pair<Move, int>> extensions(const Game& g, const JSeq& s, int branch_bound);

struct FlatSpec {
  std::vector<Name> answers;   // finite part
  bool all_naturals = false;   // admit every natural answer (the game N)
};

Game flat_game(const FlatSpec& spec);
Game terminal_game();
Game nat_game();
Game tick_game();  // flat({check})
Game empty_flat_game();

Game tensor_game(const Game& g, const Game& h);
Game product_game(const Game& g, const Game& h);
Game limp_game(const Game& g, const Game& h);  // linear implication
Game expo_game(const Game& g);
Game implication_game(const Game& g, const Game& h);  // !g -o h

// Union of position sets over a shared move alphabet (used by universes).
Game union_game(std::vector<Game> gs);

// ---------------------------------------------------------------- enumeration

struct EnumConfig {
  int max_len = 8;
  int branch_bound = 3;
  long node_limit = 200000;
};

// All positions of length <= max_len reachable under the bounds, verified
// by the membership oracle, in (length, move order) lexicographic order.
std::vector<JSeq> enumerate_positions(const Game& g, const EnumConfig& cfg);

bool games_equal_bounded(const Game& g, const Game& h, const EnumConfig& cfg,
                         bool erase_paths = false);

// Membership re-test of a prefix chain: every prefix of s is in g.
bool prefix_chain_in(const Game& g, const JSeq& s);

}  // namespace gsm
