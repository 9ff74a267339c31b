#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsmltt/universe.hpp"

using namespace gsm;

namespace {

JSeq upos(std::initializer_list<std::pair<Move, int>> ms) {
  JSeq s;
  for (const auto& [m, j] : ms) s = s.extended(m, j);
  return s;
}

Move uq(Path p = {}) { return mv(Name::q(), Op::O, Qa::Q, std::move(p)); }
Move ua(long c, Path p = {}) { return mv(Name::nat(c), Op::P, Qa::A, std::move(p)); }

}  // namespace

TEST_CASE("the code table is fixed and injective") {
  // [TRIVIAL] fixed by the table decision
  CHECK(sharp(Code::One) == 0);
  CHECK(sharp(Code::Zero) == 1);
  CHECK(sharp(Code::Nat) == 2);
  CHECK(sharp(Code::Pi) == 3);
  CHECK(sharp(Code::Sigma) == 4);
  CHECK(sharp(Code::Id) == 5);
  CHECK(sharp(Code::U, 0) == 6);
  CHECK(sharp(Code::U, 9) == 15);
  std::set<long> seen;
  for (Code c : {Code::One, Code::Zero, Code::Nat, Code::Pi, Code::Sigma, Code::Id})
    seen.insert(sharp(c));
  for (int j = 0; j < 10; ++j) seen.insert(sharp(Code::U, j));
  CHECK(seen.size() == 16);
}

TEST_CASE("universe membership: atomic and stratified positions") {
  Game u0 = universe_carrier(0), u1 = universe_carrier(1);
  CHECK(u0.contains(upos({{uq(), 0}, {ua(2), 1}})));
  CHECK(u1.contains(upos({{uq(), 0}, {ua(2), 1}})));
  // the code of a lower universe needs k at least 1
  CHECK(u1.contains(upos({{uq(), 0}, {ua(6), 1}})));
  CHECK(!u0.contains(upos({{uq(), 0}, {ua(6), 1}})));
  // one unfolding of the inductive level
  JSeq lvl1 = upos({{uq(), 0},
                    {ua(3), 1},
                    {uq({seg_left()}), 2},
                    {ua(2, {seg_left()}), 3}});
  CHECK(u0.contains(lvl1));
  CHECK(position_level(lvl1) == 1);
  CHECK(position_level(upos({{uq(), 0}, {ua(2), 1}})) == 0);
  // garbage answers are rejected
  CHECK(!u0.contains(upos({{uq(), 0}, {ua(99), 1}})));
}

TEST_CASE("cumulativity of the hierarchy") {
  // [DERIVED] every enumerated position of U0 lies in U1
  EnumConfig cfg{6, 3, 200000};
  Game u0 = universe_carrier(0), u1 = universe_carrier(1);
  std::vector<JSeq> pos = enumerate_positions(u0, cfg);
  CHECK(pos.size() > 5);
  for (const JSeq& p : pos) CHECK(u1.contains(p));
}

TEST_CASE("atomic codes answer their table entry") {
  PGame T = pgame_terminal();
  for (auto [expr, want] : std::initializer_list<std::pair<TypeExprPtr, long>>{
           {te_one(), 0}, {te_zero(), 1}, {te_nat(), 2}, {te_u(0), 6}}) {
    Term c = en(T, *expr);
    auto r = c.strat.next(JSeq{}.extended(uq({seg_cod()}), 0));
    REQUIRE(r.has_value());
    CHECK(r->first.name.value == want);
  }
  CHECK(level_of(*te_u(0)) == 1);
  CHECK(level_of(*te_pi(te_nat(), te_u(1))) == 2);
}

TEST_CASE("decoding a code recovers the type") {
  // [DERIVED] el(T, en(T, A)) has the same carrier as the direct reading
  EnumConfig cfg{8, 3, 200000};
  PGame T = pgame_terminal();
  for (TypeExprPtr a : {te_nat(), te_pi(te_nat(), te_nat()),
                        te_sigma(te_nat(), te_nat()), te_one(), te_zero()}) {
    Term c = en(T, *a);
    DependentPGame d = el(T, c, cfg);
    DependentPGame direct = interp(T, *a, cfg);
    INFO(to_string(*a));
    CHECK(games_equal_bounded(d.carrier, direct.carrier, cfg));
  }
}

TEST_CASE("probing reconstructs code trees") {
  EnumConfig cfg{8, 3, 200000};
  PGame T = pgame_terminal();
  TypeExprPtr s = te_sigma(te_nat(), te_nat());
  TypeExprPtr got = decode_probe(en(T, *s).strat, 16);
  CHECK(type_expr_equal(*got, *s));
  CHECK(to_string(*got) == "Sigma(Nat, Nat)");
  // a silent code probes to an opaque root
  CHECK(decode_probe(silent_strategy(), 16)->kind == TypeExpr::Opaque);
  // identity codes keep their endpoints as observed handles
  TypeExprPtr idc = te_id(te_nat(), as_term(point_on_flat(3)), as_term(point_on_flat(3)));
  TypeExprPtr gid = decode_probe(en(T, *idc).strat, 16);
  REQUIRE(gid->kind == TypeExpr::Id);
  CHECK(type_expr_equal(*gid->a, *te_nat()));
  CHECK(gid->lhs.label == "q->3");
  CHECK(gid->rhs.label == "q->3");
  CHECK(decode_report(*gid).find("@handle(observed: q->3)") != std::string::npos);
}

TEST_CASE("identity codes decode through the equality verdict") {
  EnumConfig cfg{8, 3, 200000};
  PGame T = pgame_terminal();
  TypeExprPtr eq = te_id(te_nat(), as_term(point_on_flat(3)), as_term(point_on_flat(3)));
  TypeExprPtr ne = te_id(te_nat(), as_term(point_on_flat(3)), as_term(point_on_flat(4)));
  PGame deq = decode_point(comp_point(en(T, *eq).strat, silent_strategy()), cfg);
  PGame dne = decode_point(comp_point(en(T, *ne).strat, silent_strategy()), cfg);
  CHECK(games_equal_bounded(deq.family(check_point()), tick_game(), cfg));
  for (const JSeq& p : enumerate_positions(dne.family(check_point()), cfg))
    for (const Move& m : p.moves) CHECK(m.qa == Qa::Q);
}

TEST_CASE("an identity code between functions copy-cats its argument") {
  // the endpoint component of the code forwards probes to the context
  PGame NN = product_pgame(pgame_nat(), pgame_nat());
  PGame fns;  // (N => N) & (N => N)
  fns.carrier = product_game(implication_game(nat_game(), nat_game()),
                             implication_game(nat_game(), nat_game()));
  fns.family = [](const Strategy&) { return Game::undefined_game(); };
  fns.catalog = {silent_strategy()};
  Strategy p1 = prefix_mirror({}, {seg_bang(0), seg_left()}, "p1");
  Strategy p2 = prefix_mirror({}, {seg_bang(0), seg_right()}, "p2");
  TypeExprPtr idc = te_id(te_pi(te_nat(), te_nat()), p1, p2);
  Term c = en(fns, *idc);

  JSeq s;
  s = s.extended(uq({seg_cod()}), 0);
  auto r = c.strat.next(s);
  REQUIRE(r.has_value());
  CHECK(r->first == ua(5, {seg_cod()}));
  s = s.extended(r->first, r->second);
  // probe the first endpoint: its output question is forwarded to f
  Move probe = mv(Name::q(), Op::O, Qa::Q,
                  {seg_cod(), seg_right(), seg_left(), seg_cod()});
  s = s.extended(probe, 2);
  r = c.strat.next(s);
  REQUIRE(r.has_value());
  CHECK(r->first.path ==
        Path({seg_dom(), seg_bang(0), seg_left(), seg_cod()}));
  CHECK(r->first.op == Op::P);
  s = s.extended(r->first, r->second);
  // f answers 7; the answer is echoed on the universe side
  Move fans = mv(Name::nat(7), Op::O, Qa::A,
                 {seg_dom(), seg_bang(0), seg_left(), seg_cod()});
  s = s.extended(fans, s.size());
  r = c.strat.next(s);
  REQUIRE(r.has_value());
  CHECK(r->first == mv(Name::nat(7), Op::P, Qa::A,
                       {seg_cod(), seg_right(), seg_left(), seg_cod()}));
  (void)NN;
}

TEST_CASE("cumulation re-certifies the same strategy") {
  PGame T = pgame_terminal();
  Term c = en(T, *te_nat());
  Term up = cumulate(c, 0);
  auto r0 = c.strat.next(JSeq{}.extended(uq({seg_cod()}), 0));
  auto r1 = up.strat.next(JSeq{}.extended(uq({seg_cod()}), 0));
  REQUIRE(r0.has_value());
  REQUIRE(r1.has_value());
  CHECK(r0->first == r1->first);
  Term upup = cumulate(up, 1);
  CHECK(upup.strat.next(JSeq{}.extended(uq({seg_cod()}), 0)).has_value());
}

TEST_CASE("codes substitute along context morphisms") {
  // [DERIVED] en(N-ctx, A) . phi agrees with en(T, A) at depth 8
  PGame T = pgame_terminal(), N = pgame_nat();
  Strategy phi = as_term(point_on_flat(2));  // T -> N
  for (TypeExprPtr a : {te_nat(), te_pi(te_nat(), te_nat())}) {
    Strategy lhs = bullet(phi, en(N, *a).strat);
    Strategy rhs = en(T, *a).strat;
    Game g = implication_game(T.carrier, universe_carrier(0));
    CHECK(strategy_eq(g, lhs, rhs, 8, 3));
  }
}

TEST_CASE("code evaluation never consults the equality oracle") {
  PGame T = pgame_terminal();
  audit_reset();
  for (TypeExprPtr a : {te_nat(), te_pi(te_nat(), te_nat()),
                        te_sigma(te_one(), te_nat())}) {
    Term c = en(T, *a);
    JSeq s = JSeq{}.extended(uq({seg_cod()}), 0);
    auto r = c.strat.next(s);
    REQUIRE(r.has_value());
    if (r->first.name.value >= 3) {
      s = s.extended(r->first, r->second);
      s = s.extended(uq({seg_cod(), seg_left()}), 2);
      CHECK(c.strat.next(s).has_value());
    }
  }
  CHECK(equality_oracle_calls() == 0);
  // decoding an identity code, by contrast, does use it
  EnumConfig cfg{8, 3, 200000};
  TypeExprPtr idc = te_id(te_nat(), as_term(point_on_flat(3)), as_term(point_on_flat(3)));
  decode_point(comp_point(en(T, *idc).strat, silent_strategy()), cfg);
  CHECK(equality_oracle_calls() > 0);
  audit_reset();
}

TEST_CASE("two distinct codes of the unit type decode equally") {
  // a code may look at its context and still denote the same type: the
  // recursor-built code queries its numeric input before answering
  EnumConfig cfg{8, 3, 200000};
  PGame T = pgame_terminal();
  DependentPGame Nty = atomic_nat(T);
  PGame TN = comprehension(T, Nty, cfg);
  DependentPGame motive = constant_dep(TN, universe_game(0));

  Term direct = en(TN, *te_one());
  Term base{T, constant_dep(T, universe_game(0)), en(T, *te_one()).strat};
  Term step{TN, motive, bullet(proj_ctx(), en(T, *te_one()).strat)};
  Term psi = nat_rec(base, step, TN, motive);

  // distinguished within three moves: one answers, the other asks
  JSeq s = JSeq{}.extended(uq({seg_cod()}), 0);
  auto rd = direct.strat.next(s);
  auto rp = psi.strat.next(s);
  REQUIRE(rd.has_value());
  REQUIRE(rp.has_value());
  CHECK(rd->first.path == Path({seg_cod()}));
  CHECK(rp->first.path.front().kind == Seg::Dom);

  // yet both decode to the unit family at every sampled context point
  for (long n = 0; n < 3; ++n) {
    Strategy gamma = carrier_pair(silent_strategy(), point_on_flat(n));
    PGame a = decode_point(comp_point(direct.strat, gamma), cfg);
    PGame b = decode_point(comp_point(psi.strat, gamma), cfg);
    CHECK(games_equal_bounded(a.carrier, b.carrier, cfg));
    CHECK(games_equal_bounded(a.carrier, terminal_game(), cfg));
  }
}

TEST_CASE("codes are disciplined strategies") {
  // [DERIVED] winning-style checks at bounded depth on the universe game
  EnumConfig cfg{6, 2, 200000};
  PGame T = pgame_terminal();
  Game g = implication_game(T.carrier, universe_carrier(0));
  for (TypeExprPtr a : {te_nat(), te_pi(te_nat(), te_nat())}) {
    Term c = en(T, *a);
    INFO(to_string(*a));
    CHECK(check_constraint(g, c.strat, Constraint::WellBracketed, cfg).verdict !=
          Verdict::Fails);
    CHECK(check_constraint(g, c.strat, Constraint::Innocent, cfg).verdict !=
          Verdict::Fails);
  }
}
