#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsmltt/pgame.hpp"

using namespace gsm;

namespace {

Move oq() { return mv(Name::q(), Op::O, Qa::Q); }
Move pa(long n) { return mv(Name::nat(n), Op::P, Qa::A); }

Game flat_of(std::vector<long> ns) {
  FlatSpec f;
  for (long n : ns) f.answers.push_back(Name::nat(n));
  return flat_game(f);
}

EnumConfig cfg{8, 3, 200000};

std::set<std::string> keys(const Game& g, const EnumConfig& c) {
  std::set<std::string> out;
  for (const JSeq& p : enumerate_positions(g, c)) out.insert(serialize(p));
  return out;
}

}  // namespace

TEST_CASE("closure of a point on N") {
  Game c = closure(point_on_flat(5), nat_game());
  CHECK(keys(c, cfg) ==
        std::set<std::string>{"", "1\t-\tq\tO\tQ\t0\n",
                              "1\t-\tq\tO\tQ\t0\n2\t-\t5\tP\tA\t1\n"});
  Game cb = closure(silent_strategy(), nat_game());
  CHECK(keys(cb, cfg) == std::set<std::string>{"", "1\t-\tq\tO\tQ\t0\n"});
  Game ct = closure(silent_strategy(), terminal_game());
  CHECK(keys(ct, cfg) == std::set<std::string>{""});
}

TEST_CASE("liveness ordering clauses") {
  Game c5 = closure(point_on_flat(5), nat_game());
  CHECK(liveness_leq(c5, c5, cfg).verdict == Verdict::Holds);
  CHECK(liveness_leq(c5, flat_of({5}), cfg).verdict == Verdict::Holds);
  auto bad = liveness_leq(c5, flat_of({6}), cfg);
  CHECK(bad.verdict == Verdict::Fails);
  CHECK(bad.witness.find("even extension missing") != std::string::npos);
  // clause 1: N admits q but the empty subgame does not
  auto odd = liveness_leq(terminal_game(), nat_game(), cfg);
  CHECK(odd.verdict == Verdict::Fails);
  CHECK(odd.witness.find("odd extension missing") != std::string::npos);
}

TEST_CASE("liveness is transitive on sampled subgames") {
  std::vector<Game> gs{closure(point_on_flat(1), nat_game()),
                       closure(silent_strategy(), nat_game()), flat_of({1}),
                       flat_of({1, 2}), nat_game()};
  for (const Game& a : gs)
    for (const Game& b : gs)
      for (const Game& c : gs) {
        bool ab = liveness_leq(a, b, cfg).verdict == Verdict::Holds;
        bool bc = liveness_leq(b, c, cfg).verdict == Verdict::Holds;
        bool ac = liveness_leq(a, c, cfg).verdict == Verdict::Holds;
        if (ab && bc) CHECK(ac);
      }
}

TEST_CASE("p-game strategies on constant families") {
  PGame n = pgame_nat();
  CHECK(is_pgame_strategy(point_on_flat(5), n, cfg).verdict == Verdict::Holds);
  CHECK(is_pgame_strategy(silent_strategy(), n, cfg).verdict == Verdict::Holds);
}

TEST_CASE("protocol positions") {
  PGame n = pgame_nat();
  PGamePosition ok{point_on_flat(5), JSeq{}.extended(oq(), 0).extended(pa(5), 1)};
  CHECK(is_pgame_position(n, ok, cfg));
  PGamePosition bad{point_on_flat(5), JSeq{}.extended(oq(), 0).extended(pa(6), 1)};
  CHECK_FALSE(is_pgame_position(n, bad, cfg));
}

TEST_CASE("product and tensor p-games") {
  PGame nn_prod = product_pgame(pgame_nat(), pgame_nat());
  Strategy p73 = carrier_pair(point_on_flat(7), point_on_flat(3));
  Game fam = nn_prod.family(p73);
  CHECK(games_equal_bounded(fam, product_game(nat_game(), nat_game()), cfg));
  CHECK(is_pgame_strategy(p73, nn_prod, cfg).verdict == Verdict::Holds);

  EnumConfig small{6, 2, 200000};
  PGame nn_tens = tensor_pgame(pgame_nat(), pgame_nat(), small);
  Game tfam = nn_tens.family(p73);
  CHECK_FALSE(tfam.undefined);
  CHECK(is_pgame_strategy(p73, nn_tens, small).verdict == Verdict::Holds);

  // a cross-component dependency is not tensor-shaped
  Strategy sneaky;
  sneaky.label = "sneaky";
  sneaky.next = [](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& m = pos.at(pos.size());
    if (m.name.kind != Name::Query || m.path.empty()) return std::nullopt;
    bool other_seen = pos.size() > 1;  // answer depends on the other side
    long v = other_seen ? 9 : 1;
    return std::make_pair(mv(Name::nat(v), Op::P, Qa::A, m.path), pos.size());
  };
  CHECK(nn_tens.family(sneaky).undefined);
  CHECK(is_pgame_strategy(sneaky, nn_tens, small).verdict == Verdict::Fails);
}

TEST_CASE("exponential p-game") {
  EnumConfig small{6, 2, 500000};
  PGame bn = expo_pgame(pgame_nat(), small);
  Strategy five = carrier_bang(point_on_flat(5));
  Game fam = bn.family(five);
  REQUIRE_FALSE(fam.undefined);
  JSeq two_threads = JSeq{}
                         .extended(mv(Name::q(), Op::O, Qa::Q, {seg_bang(0)}), 0)
                         .extended(mv(Name::nat(5), Op::P, Qa::A, {seg_bang(0)}), 1)
                         .extended(mv(Name::q(), Op::O, Qa::Q, {seg_bang(1)}), 0)
                         .extended(mv(Name::nat(5), Op::P, Qa::A, {seg_bang(1)}), 3);
  CHECK(fam.contains(two_threads));
  JSeq wrong = JSeq{}
                   .extended(mv(Name::q(), Op::O, Qa::Q, {seg_bang(0)}), 0)
                   .extended(mv(Name::nat(4), Op::P, Qa::A, {seg_bang(0)}), 1);
  CHECK(fam.contains(wrong));  // constant family: any thread play of N
  CHECK(is_pgame_strategy(five, bn, small).verdict == Verdict::Holds);
}

TEST_CASE("closure identity against the strategy's own game") {
  // closure against the full game equals the strategy's plays plus all
  // one-step O-extensions inside the game
  Strategy s = point_on_flat(2);
  Game c = closure(s, nat_game());
  for (const JSeq& p : enumerate_positions(c, cfg)) {
    if (p.size() % 2 == 0 && !p.empty()) {
      // even positions are exactly the strategy's plays
      JSeq odd = p;
      odd.moves.pop_back();
      odd.just.pop_back();
      auto r = apply(s, odd);
      REQUIRE(r);
      CHECK(r->first == p.at(p.size()));
    }
  }
}

TEST_CASE("closure-vs-liveness equivalence on sampled triples") {
  // the two characterizations agree: the even part of closure(s, H) is a
  // strategy on H exactly when closure(s, G) <= H
  std::vector<Strategy> sigmas{point_on_flat(0), point_on_flat(1), point_on_flat(5),
                               silent_strategy()};
  std::vector<Game> hs{flat_of({0}), flat_of({1}), flat_of({0, 1}), flat_of({5, 6}),
                       nat_game(), terminal_game()};
  int checked = 0;
  for (const Strategy& s : sigmas)
    for (const Game& h : hs) {
      Game g = nat_game();
      bool lhs = liveness_leq(closure(s, g), h, cfg).verdict == Verdict::Holds;
      bool rhs = true;
      for (const JSeq& q : enumerate_positions(closure(s, h), cfg))
        if (q.size() % 2 == 0 && !h.contains(q)) rhs = false;
      CHECK(lhs == rhs);
      if (lhs) {
        // and then the even closure part equals plays-of-s intersect H
        std::set<std::string> ec, si;
        for (const JSeq& q : enumerate_positions(closure(s, h), cfg))
          if (q.size() % 2 == 0) ec.insert(serialize(q));
        for (const JSeq& q : plays(g, s, cfg))
          if (h.contains(q)) si.insert(serialize(q));
        CHECK(ec == si);
      }
      ++checked;
    }
  CHECK(checked >= 20);
}
