#pragma once
// The cumulative hierarchy of universe p-games, the code table, the
// encoder (a code is a strategy that spells out a type former move by
// move) and the decoder (rebuild a type by probing a code strategy).

#include "gsmltt/cwf.hpp"

#include <memory>
#include <string>

namespace gsm {

// ---------------------------------------------------------------- codes

enum class Code : uint8_t { One, Zero, Nat, Pi, Sigma, Id, U };

// fixed injective table: 1->0, 0->1, N->2, Pi->3, Sigma->4, Id->5, U_j->6+j
long sharp(Code c, int j = 0);

// ---------------------------------------------------------------- type expressions

struct TypeExpr;
using TypeExprPtr = std::shared_ptr<const TypeExpr>;

struct TypeExpr {
  enum Kind { One, Zero, Nat, U, Pi, Sigma, Id, El, Opaque } kind = One;
  int index = 0;            // U level
  TypeExprPtr a, b;         // Pi/Sigma children; a = Id's index type
  Strategy lhs, rhs;        // Id endpoints, as terms over the ambient context
  Strategy code;            // El payload
  bool uses_var = false;    // binder body mentions the bound variable
  std::string observed;     // Opaque nodes: finite behaviour seen while probing
  int el_level = 0;         // El: the universe level of the payload
};

TypeExprPtr te_one();
TypeExprPtr te_zero();
TypeExprPtr te_nat();
TypeExprPtr te_u(int j);
TypeExprPtr te_pi(TypeExprPtr a, TypeExprPtr b);
TypeExprPtr te_sigma(TypeExprPtr a, TypeExprPtr b);
TypeExprPtr te_id(TypeExprPtr d, Strategy lhs, Strategy rhs);
TypeExprPtr te_el(Strategy code, int level);
TypeExprPtr te_opaque(std::string observed);

// max/successor recurrence over the constructor tree
int level_of(const TypeExpr& a);

bool type_expr_equal(const TypeExpr& a, const TypeExpr& b);
std::string to_string(const TypeExpr& a);

// indented one-constructor-per-line tree; opaque handles shown as
// `@handle(observed: ...)`
std::string decode_report(const TypeExpr& a, int indent = 0);

// ---------------------------------------------------------------- universe games

// the carrier game of the level-k universe (lazily stratified membership)
Game universe_carrier(int k);
// the constant p-game on it
PGame universe_game(int k);
// the nesting level a position requires (0 for atomic answers)
int position_level(const JSeq& pos);

// ---------------------------------------------------------------- interpretation

// the direct semantic reading of a type expression over a context;
// binder bodies live over the comprehension of the ambient context
DependentPGame interp(const PGame& ctx, const TypeExpr& a, const EnumConfig& cfg);
// carrier only (context-free shape)
Game carrier_of(const TypeExpr& a);

// ---------------------------------------------------------------- En / El

struct UnsupportedExpr : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedCode : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProbeBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SelfCoding : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// the code strategy of A as a term of the level-(level_of A) universe
Term en(const PGame& ctx, const TypeExpr& a);

// decode a point strategy of the universe into a p-game
PGame decode_point(const Strategy& point, const EnumConfig& cfg);

// the dependent p-game gamma |-> decode(psi . gamma)
DependentPGame el(const PGame& ctx, const Term& psi, const EnumConfig& cfg);

// reconstruct the code tree as far as `budget` probing moves allow
TypeExprPtr decode_probe(const Strategy& point, int budget);

// the same strategy re-certified one level up (k = the current level)
Term cumulate(const Term& psi, int k);

}  // namespace gsm
