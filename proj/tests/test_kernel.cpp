#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsmltt/kernel.hpp"

using namespace gsm;

static JSeq seq(std::vector<std::pair<Move, int>> xs) {
  JSeq s;
  for (auto& [m, j] : xs) s = s.extended(m, j);
  return s;
}

static Move oq(Path p = {}) { return mv(Name::q(), Op::O, Qa::Q, std::move(p)); }
static Move pq(Path p = {}) { return mv(Name::q(), Op::P, Qa::Q, std::move(p)); }
static Move pa(long n, Path p = {}) { return mv(Name::nat(n), Op::P, Qa::A, std::move(p)); }
static Move oa(long n, Path p = {}) { return mv(Name::nat(n), Op::O, Qa::A, std::move(p)); }

TEST_CASE("flat game of naturals") {
  Game n = nat_game();
  CHECK(n.contains(seq({})));
  CHECK(n.contains(seq({{oq(), 0}})));
  CHECK(n.contains(seq({{oq(), 0}, {pa(7), 1}})));
  CHECK_FALSE(n.contains(seq({{oq(), 0}, {pa(7), 1}, {oq(), 0}})));
  CHECK_FALSE(n.contains(seq({{pa(7), 0}})));
  // branching bound only limits numeric answers
  EnumConfig cfg{4, 2, 100000};
  CHECK(enumerate_positions(n, cfg).size() == 4);  // eps, q, q0, q1
}

TEST_CASE("arena sanity for N -o N") {
  Game g = limp_game(nat_game(), nat_game());
  CHECK(check_arena(g.arena, 3).empty());
  CHECK(check_arena(nat_game().arena, 3).empty());
  CHECK(check_arena(implication_game(nat_game(), nat_game()).arena, 2).empty());
}

TEST_CASE("positions of N -o N, bounded") {
  // Hand count at maxLen 4, branch bound 2:
  //   eps; Cq; Cq.C0 Cq.C1 Cq.Dq; Cq.Dq.D0 Cq.Dq.D1; then 4 answers in Cod.
  Game g = limp_game(nat_game(), nat_game());
  EnumConfig cfg{4, 2, 100000};
  auto ps = enumerate_positions(g, cfg);
  CHECK(ps.size() == 11);

  JSeq full = seq({{oq({seg_cod()}), 0},
                   {pq({seg_dom()}), 1},
                   {oa(5, {seg_dom()}), 2},
                   {pa(5, {seg_cod()}), 1}});
  CHECK(g.contains(full));
  CHECK(prefix_chain_in(g, full));
  // second codomain question is not a position of a well-opened codomain
  CHECK_FALSE(g.contains(full.extended(oq({seg_cod()}), 0)));
}

TEST_CASE("projection rewires pointers by chasing") {
  JSeq s = seq({{oq({seg_cod()}), 0},
                {pq({seg_dom()}), 1},
                {oa(3, {seg_dom()}), 2},
                {pa(4, {seg_cod()}), 1}});
  JSeq cod = strip_component(s, seg_cod(), false);
  REQUIRE(cod.size() == 2);
  CHECK(cod.at(1) == oq());
  CHECK(cod.at(2) == pa(4));
  CHECK(cod.justifier(2) == 1);
  JSeq dom = strip_component(s, seg_dom(), true);
  REQUIRE(dom.size() == 2);
  CHECK(dom.at(1) == oq());
  CHECK(dom.at(2) == pa(3));
  CHECK(dom.justifier(2) == 1);
}

TEST_CASE("p-view and o-view") {
  // In N -o N after Cq Dq D3: the P-view of the whole is the whole;
  // the P-view after an answered domain block drops it.
  JSeq s = seq({{oq({seg_cod()}), 0},
                {pq({seg_dom()}), 1},
                {oa(3, {seg_dom()}), 2},
                {pa(4, {seg_cod()}), 1}});
  JSeq v = pview(seq({{oq({seg_cod()}), 0}, {pq({seg_dom()}), 1}, {oa(3, {seg_dom()}), 2}}));
  CHECK(v.size() == 3);
  JSeq w = pview(s);
  CHECK(w.size() == 4);
  // O-view of Cq Dq: O jumps over the P move to the opening question? No:
  // the O-view keeps O moves one at a time and jumps along P pointers.
  JSeq u = oview(seq({{oq({seg_cod()}), 0}, {pq({seg_dom()}), 1}}));
  CHECK(u.size() == 2);
}

TEST_CASE("visibility is enforced") {
  // A P-move pointing at a question absent from the P-view is illegal.
  Game g = limp_game(nat_game(), limp_game(nat_game(), nat_game()));
  JSeq bad = seq({{oq({seg_cod(), seg_cod()}), 0},
                  {pq({seg_dom()}), 1},
                  {oa(0, {seg_dom()}), 2},
                  {pq({seg_cod(), seg_dom()}), 1},
                  {oa(1, {seg_cod(), seg_dom()}), 4},
                  {pq({seg_dom()}), 1}});
  // after the first domain block is answered, its question left the P-view
  CHECK(alternates(bad));
  SUBCASE("projection-level membership") {
    CHECK_FALSE(g.contains(bad));
  }
}

TEST_CASE("tensor vs product") {
  Game t = tensor_game(nat_game(), nat_game());
  Game p = product_game(nat_game(), nat_game());
  JSeq mixed = seq({{oq({seg_left()}), 0},
                    {pa(1, {seg_left()}), 1},
                    {oq({seg_right()}), 0},
                    {pa(2, {seg_right()}), 3}});
  CHECK(t.contains(mixed));
  CHECK_FALSE(p.contains(mixed));
  JSeq single = seq({{oq({seg_right()}), 0}, {pa(2, {seg_right()}), 1}});
  CHECK(t.contains(single));
  CHECK(p.contains(single));
  // tensor switching: only O may change component, so P answering in the
  // other component right away is ruled out by component membership
  JSeq cross = seq({{oq({seg_left()}), 0}, {pa(2, {seg_right()}), 0}});
  CHECK_FALSE(t.contains(cross));
}

TEST_CASE("exponential threads") {
  Game b = expo_game(nat_game());
  JSeq two = seq({{oq({seg_bang(0)}), 0},
                  {pa(4, {seg_bang(0)}), 1},
                  {oq({seg_bang(1)}), 0},
                  {pa(9, {seg_bang(1)}), 3}});
  CHECK(b.contains(two));
  // non-canonical thread numbering is rejected
  JSeq skew = seq({{oq({seg_bang(1)}), 0}});
  CHECK_FALSE(b.contains(skew));
  JSeq t0 = hereditary_thread(two, 1);
  CHECK(t0.size() == 2);
  CHECK(t0.at(2) == pa(4, {seg_bang(0)}));
  CHECK(strip_component(two, seg_bang(1), false).at(2) == pa(9));
  CHECK_THROWS_AS(hereditary_thread(two, 2), NotInitial);
}

TEST_CASE("T => N agrees with N up to addressing") {
  Game g = implication_game(terminal_game(), nat_game());
  EnumConfig cfg{6, 3, 100000};
  CHECK(games_equal_bounded(g, nat_game(), cfg, /*erase_paths=*/true));
  CHECK_FALSE(games_equal_bounded(g, tick_game(), cfg, true));
}

TEST_CASE("pointer validation") {
  JSeq s;
  s.moves.push_back(oq());
  s.just.push_back(2);  // forward pointer
  CHECK_THROWS_AS(s.validate(), MalformedPointer);
}

TEST_CASE("undefined game sentinel") {
  Game u = Game::undefined_game();
  CHECK(u.undefined);
  CHECK_THROWS_AS(u.contains(JSeq{}), UndefinedOperand);
  CHECK_THROWS_AS(tensor_game(u, nat_game()), UndefinedOperand);
}

TEST_CASE("serialization format") {
  JSeq s = seq({{oq({seg_cod()}), 0}, {pa(2, {seg_cod()}), 1}});
  CHECK(serialize(s) == "1\tCod\tq\tO\tQ\t0\n2\tCod\t2\tP\tA\t1\n");
}

TEST_CASE("enumeration budget") {
  Game g = expo_game(nat_game());
  EnumConfig cfg{8, 3, 10};
  CHECK_THROWS_AS(enumerate_positions(g, cfg), BudgetExceeded);
}
