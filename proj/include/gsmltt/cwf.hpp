#pragma once

// Dependent p-games and the category-with-families structure on them:
// Pi and Sigma p-games, substitution, comprehension, the semantic type
// formers (Pi, Sigma, Id, One, Zero, Nat) and the primitive-recursion
// combinator used by the list examples.

#include "gsmltt/pgame.hpp"

namespace gsm {

struct DependentPGame {
  PGame base;     // Gamma
  Game carrier;   // |L|, shared by every family value
  // gamma (a strategy on |Gamma|) |-> the p-game L(gamma) with carrier |L|
  std::function<PGame(const Strategy&)> at;
  // former payload (e.g. the Pi components, recovered by app)
  std::shared_ptr<const void> meta;
};

struct PiMeta {
  DependentPGame a, b;
};

struct Morphism {
  PGame src, dst;
  Strategy strat;  // on |src| => |dst|
};

struct Term {
  PGame ctx;
  DependentPGame ty;
  Strategy strat;  // on |ctx| => |ty carrier|
};

// ---------------------------------------------------------------- coordinate helpers

// A point gamma on |G| viewed as a term T => G, and back.
Strategy as_term(const Strategy& point);
Strategy from_term(const Strategy& term);
// phi applied to a point: the point phi . gamma on the codomain carrier.
Strategy comp_point(const Strategy& phi, const Strategy& gamma,
                    long step_budget = 10000);

// ---------------------------------------------------------------- p-game formers

// The Pi p-game: carrier |L|^{|Gamma|} (linear) or |Gamma| => |L|; the
// family at phi reveals the game gradually, quantifying over the base
// catalog: odd extensions need some compatible gamma to admit them, even
// extensions need all remaining compatible gammas to agree.
PGame pi(const PGame& gamma, const DependentPGame& l, bool linear,
         const EnumConfig& cfg);
PGame sigma(const PGame& gamma, const DependentPGame& a, const EnumConfig& cfg);

DependentPGame constant_dep(const PGame& base, const PGame& value);

// ---------------------------------------------------------------- CwF core

DependentPGame subst_ty(const DependentPGame& a, const PGame& new_base,
                        const Strategy& phi);
Term subst_tm(const Term& t, const PGame& new_base, const Strategy& phi);
PGame comprehension(const PGame& gamma, const DependentPGame& a,
                    const EnumConfig& cfg);
Strategy proj_ctx();   // p: the context projection (first component copy-cat)
Strategy proj_var();   // v: the variable projection (second component copy-cat)
Strategy identity();   // id = dereliction
Strategy extend(const Strategy& phi, const Strategy& alpha);  // <phi, alpha>

// ---------------------------------------------------------------- type formers

DependentPGame pi_former(const DependentPGame& a, const DependentPGame& b,
                         const EnumConfig& cfg);
Term lambda(const Term& beta, const PGame& gamma, const DependentPGame& pi_ty);
Strategy curry(const Strategy& s);    // !(G&A)-oB  ->  !G-o(A=>B)
Strategy uncurry(const Strategy& s);  // and back
Term app(const Term& kappa, const Term& alpha, const EnumConfig& cfg);

DependentPGame sigma_former(const DependentPGame& a, const DependentPGame& b,
                            const EnumConfig& cfg);
Strategy pair_iso();      // Sigma(Sigma(G,A),B) -> Sigma(G,Sigma(A,B))
Strategy pair_iso_inv();
Term sigma_elim(const Term& rho, const PGame& new_ctx, const DependentPGame& ty);

DependentPGame atomic_one(const PGame& base);
DependentPGame atomic_zero(const PGame& base);
DependentPGame atomic_nat(const PGame& base);

// ---------------------------------------------------------------- identity types

enum class EqVerdict : uint8_t { EqualUpTo, DistinguishedAt, Unknown };

// Bounded strategy equality over g; EqualUpTo is conclusive only when the
// enumeration shows g has no positions at the depth horizon.
// global counter backing the effectivity audit: code evaluation must
// never consult this bounded equality oracle
long& equality_oracle_calls();
void audit_reset();

EqVerdict bounded_equal(const Game& g, const Strategy& a, const Strategy& b,
                        const EnumConfig& cfg);

DependentPGame id_former(const DependentPGame& d, const Term& lhs, const Term& rhs,
                         const EnumConfig& cfg);
// The verdict the Id family reached at a particular base point.
EqVerdict id_point_verdict(const DependentPGame& d, const Term& lhs, const Term& rhs,
                           const Strategy& gamma, const EnumConfig& cfg);
Strategy refl_strategy();  // answers the check-mark
Term refl(const Term& alpha, const EnumConfig& cfg);

// ---------------------------------------------------------------- recursion

// Primitive recursion on the N component of the context: queries N once
// per thread, then plays the n-fold composite step . ... . step . base.
Term nat_rec(const Term& base, const Term& step, const PGame& ctx_with_nat,
             const DependentPGame& motive);

// ---------------------------------------------------------------- law harness

// One line per checked equation instance: `law sample verdict depth`.
std::vector<std::string> cwf_law_report(const EnumConfig& cfg);
bool cwf_laws_hold(const std::vector<std::string>& report);

}  // namespace gsm
