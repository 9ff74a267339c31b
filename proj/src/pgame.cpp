#include "gsmltt/pgame.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsm {

// ---------------------------------------------------------------- closure

Game closure(const Strategy& s, const Game& h) {
  Game g;
  g.arena = h.arena;
  g.well_opened = h.well_opened;
  g.well_founded = h.well_founded;
  Strategy sc = s;
  auto hc = h.contains;
  g.contains = [sc, hc](const JSeq& pos) -> bool {
    JSeq p;
    for (int i = 1; i <= pos.size(); ++i) {
      JSeq q = p.extended(pos.at(i), pos.justifier(i));
      if (i % 2 == 1) {
        if (!hc(q)) return false;  // O may extend only inside h
      } else {
        auto r = apply(sc, p);
        if (!r || !(r->first == pos.at(i)) || r->second != pos.justifier(i))
          return false;
      }
      p = std::move(q);
    }
    return true;
  };
  g.ext_hint = [sc](const JSeq& pos) -> std::vector<std::pair<Move, int>> {
    if (pos.size() % 2 != 1) return {};
    auto r = apply(sc, pos);
    if (!r) return {};
    return {*r};
  };
  return g;
}

// ---------------------------------------------------------------- liveness

static JSeq drop_last(const JSeq& s) {
  JSeq t = s;
  t.moves.pop_back();
  t.just.pop_back();
  return t;
}

CheckResult liveness_leq(const Game& g, const Game& h, const EnumConfig& cfg) {
  std::map<std::string, JSeq> pool;
  try {
    for (const JSeq& p : enumerate_positions(g, cfg)) pool.emplace(serialize(p), p);
    for (const JSeq& p : enumerate_positions(h, cfg)) pool.emplace(serialize(p), p);
  } catch (const BudgetExceeded&) {
    return {Verdict::Inconclusive, "enumeration budget exhausted"};
  }
  for (const auto& [key, p] : pool) {
    if (p.empty()) continue;
    JSeq pre = drop_last(p);
    if (p.size() % 2 == 1) {
      if (g.contains(pre) && h.contains(pre) && h.contains(p) && !g.contains(p))
        return {Verdict::Fails, "odd extension missing on the left:\n" + serialize(p)};
    } else {
      if (g.contains(pre) && h.contains(pre) && g.contains(p) && !h.contains(p))
        return {Verdict::Fails, "even extension missing on the right:\n" + serialize(p)};
    }
  }
  return {};
}

CheckResult is_pgame_strategy(const Strategy& s, const PGame& p, const EnumConfig& cfg) {
  Game fam = p.family(s);
  if (fam.undefined) return {Verdict::Fails, "family value undefined at this strategy"};
  CheckResult main = liveness_leq(closure(s, p.carrier), fam, cfg);
  if (main.verdict == Verdict::Inconclusive) return main;
  // cross-check: the even part of the closure against fam is a strategy
  // on fam exactly when the liveness check passes
  bool cross = true;
  try {
    for (const JSeq& q : enumerate_positions(closure(s, fam), cfg))
      if (q.size() % 2 == 0 && !fam.contains(q)) {
        cross = false;
        break;
      }
  } catch (const BudgetExceeded&) {
    return {Verdict::Inconclusive, "closure enumeration budget exhausted"};
  }
  if (cross != (main.verdict == Verdict::Holds))
    return {Verdict::Fails, "liveness and closure checks disagree: " + main.witness};
  return main;
}

bool is_pgame_position(const PGame& p, const PGamePosition& pos, const EnumConfig& cfg) {
  Game fam = p.family(pos.declared);
  if (fam.undefined) return false;
  (void)cfg;
  return closure(pos.declared, fam).contains(pos.actual);
}

// ---------------------------------------------------------------- carrier strategies

Strategy silent_strategy() {
  Strategy s;
  s.label = "bot";
  s.table = std::make_shared<std::vector<JSeq>>(std::vector<JSeq>{JSeq{}});
  s.next = [](const JSeq&) { return std::optional<std::pair<Move, int>>{}; };
  return s;
}

static Strategy flat_answer(Name n, std::string label) {
  Strategy s;
  s.label = std::move(label);
  s.next = [n](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& m = pos.at(pos.size());
    if (pos.size() == 1 && m.path.empty() && m.name.kind == Name::Query)
      return std::make_pair(mv(n, Op::P, Qa::A), 1);
    return std::nullopt;
  };
  JSeq play;
  play = play.extended(mv(Name::q(), Op::O, Qa::Q), 0).extended(mv(n, Op::P, Qa::A), 1);
  s.table = std::make_shared<std::vector<JSeq>>(std::vector<JSeq>{JSeq{}, play});
  return s;
}

Strategy point_on_flat(long n) { return flat_answer(Name::nat(n), std::to_string(n)); }
Strategy check_point() { return flat_answer(Name::check(), "chk"); }

Strategy carrier_pair(const Strategy& l, const Strategy& r) {
  Strategy lc = l, rc = r;
  Strategy s;
  s.label = "<" + l.label + "," + r.label + ">";
  s.next = [lc, rc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& last = pos.at(pos.size());
    if (last.path.empty()) return std::nullopt;
    Seg side = last.path.front();
    if (side.kind != Seg::Left && side.kind != Seg::Right) return std::nullopt;
    std::vector<bool> mask(pos.size());
    for (int i = 1; i <= pos.size(); ++i) mask[i - 1] = has_prefix(pos.at(i), side);
    std::vector<int> kept;
    JSeq local = project(pos, mask, kept);
    for (Move& m : local.moves) m.path.erase(m.path.begin());
    auto resp = (side.kind == Seg::Left ? lc : rc).next(local);
    if (!resp) return std::nullopt;
    int j = resp->second == 0 ? 0 : kept[resp->second - 1];
    return std::make_pair(retag(resp->first, side), j);
  };
  return s;
}

Strategy carrier_bang(const Strategy& inner) {
  Strategy ic = inner;
  Strategy s;
  s.label = inner.label + "!";
  s.next = [ic](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& last = pos.at(pos.size());
    if (last.path.empty() || last.path.front().kind != Seg::Bang) return std::nullopt;
    Seg tag = last.path.front();
    std::vector<bool> mask(pos.size());
    for (int i = 1; i <= pos.size(); ++i) mask[i - 1] = has_prefix(pos.at(i), tag);
    std::vector<int> kept;
    JSeq local = project(pos, mask, kept);
    for (Move& m : local.moves) m.path.erase(m.path.begin());
    auto resp = ic.next(local);
    if (!resp) return std::nullopt;
    int j = resp->second == 0 ? 0 : kept[resp->second - 1];
    return std::make_pair(retag(resp->first, tag), j);
  };
  return s;
}

// ---------------------------------------------------------------- extraction

// Builds a deterministic table from projected plays, or nullopt.
static std::optional<Strategy> table_from_projections(std::vector<JSeq> projs,
                                                      std::string label) {
  std::set<std::string> seen;
  std::vector<JSeq> tbl;
  for (JSeq& p : projs) {
    if (p.size() % 2 != 0) continue;  // incomplete tail, covered by a prefix
    if (seen.insert(serialize(p)).second) tbl.push_back(std::move(p));
  }
  for (const JSeq& a : tbl)
    for (const JSeq& b : tbl) {
      if (a.size() != b.size() || a.size() == 0) continue;
      bool same_odd =
          std::equal(a.moves.begin(), a.moves.end() - 1, b.moves.begin()) &&
          std::equal(a.just.begin(), a.just.end() - 1, b.just.begin());
      if (same_odd && !(a == b)) return std::nullopt;  // nondeterministic
    }
  return table_strategy(std::move(tbl), std::move(label));
}

std::optional<Strategy> restrict_thread(const Strategy& s, int i, const Game& bang,
                                        const EnumConfig& cfg) {
  std::vector<JSeq> projs;
  for (const JSeq& p : plays(bang, s, cfg))
    projs.push_back(strip_component(p, seg_bang(i), false));
  return table_from_projections(std::move(projs),
                                s.label + "|" + std::to_string(i));
}

std::optional<Strategy> restrict_component(const Strategy& s, Seg side,
                                           const Game& pair, const EnumConfig& cfg) {
  std::vector<JSeq> projs;
  for (const JSeq& p : plays(pair, s, cfg))
    projs.push_back(strip_component(p, side, false));
  return table_from_projections(std::move(projs), s.label + "|" + to_string(side));
}

// ---------------------------------------------------------------- builders

PGame constant_pgame(const Game& g, std::vector<Strategy> catalog) {
  PGame p;
  p.carrier = g;
  p.family = [g](const Strategy&) { return g; };
  p.catalog = std::move(catalog);
  return p;
}

PGame pgame_nat(int points) {
  std::vector<Strategy> cat{silent_strategy()};
  for (int n = 0; n < points; ++n) cat.push_back(point_on_flat(n));
  return constant_pgame(nat_game(), std::move(cat));
}

PGame pgame_terminal() { return constant_pgame(terminal_game(), {silent_strategy()}); }
PGame pgame_tick() {
  return constant_pgame(tick_game(), {silent_strategy(), check_point()});
}
PGame pgame_empty() { return constant_pgame(empty_flat_game(), {silent_strategy()}); }

// A product strategy restricted to one side, without play enumeration:
// product positions live wholly in one component.
static Strategy product_side(const Strategy& s, Seg side) {
  Strategy sc = s;
  Strategy out;
  out.label = s.label + "." + to_string(side);
  out.next = [sc, side](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    JSeq global = pos;
    for (Move& m : global.moves) m.path.insert(m.path.begin(), side);
    auto r = sc.next(global);
    if (!r || !has_prefix(r->first, side)) return std::nullopt;
    Move m = r->first;
    m.path.erase(m.path.begin());
    return std::make_pair(m, r->second);
  };
  return out;
}

PGame product_pgame(const PGame& a, const PGame& b) {
  PGame p;
  p.carrier = product_game(a.carrier, b.carrier);
  auto fa = a.family, fb = b.family;
  p.family = [fa, fb](const Strategy& s) -> Game {
    Game l = fa(product_side(s, seg_left()));
    Game r = fb(product_side(s, seg_right()));
    if (l.undefined || r.undefined) return Game::undefined_game();
    return product_game(l, r);
  };
  for (const Strategy& l : a.catalog)
    for (const Strategy& r : b.catalog) p.catalog.push_back(carrier_pair(l, r));
  return p;
}

PGame tensor_pgame(const PGame& a, const PGame& b, const EnumConfig& cfg) {
  PGame p;
  p.carrier = tensor_game(a.carrier, b.carrier);
  Game carrier = p.carrier;
  auto fa = a.family, fb = b.family;
  p.family = [fa, fb, carrier, cfg](const Strategy& s) -> Game {
    auto l = restrict_component(s, seg_left(), carrier, cfg);
    auto r = restrict_component(s, seg_right(), carrier, cfg);
    if (!l || !r) return Game::undefined_game();
    // tensor-shaped: s must agree with the componentwise recombination
    if (!strategy_eq(carrier, s, carrier_pair(*l, *r), cfg.max_len / 2 + 1,
                     cfg.branch_bound))
      return Game::undefined_game();
    Game lg = fa(*l), rg = fb(*r);
    if (lg.undefined || rg.undefined) return Game::undefined_game();
    return tensor_game(lg, rg);
  };
  for (const Strategy& l : a.catalog)
    for (const Strategy& r : b.catalog) p.catalog.push_back(carrier_pair(l, r));
  return p;
}

PGame expo_pgame(const PGame& a, const EnumConfig& cfg) {
  PGame p;
  p.carrier = expo_game(a.carrier);
  Game carrier = p.carrier;
  auto fa = a.family;
  p.family = [fa, carrier, cfg](const Strategy& s) -> Game {
    // countable tensor of the family values, one per thread; threads the
    // bounds can reach are extracted up front, the rest on demand
    auto memo = std::make_shared<std::map<int, Game>>();
    for (int i = 0; i < cfg.branch_bound; ++i) {
      auto ti = restrict_thread(s, i, carrier, cfg);
      if (!ti) return Game::undefined_game();  // thread is not a strategy
      memo->emplace(i, fa(*ti));
      if (memo->at(i).undefined) return Game::undefined_game();
    }
    Strategy sc = s;
    Game g;
    g.arena = carrier.arena;
    auto cc = carrier.contains;
    g.contains = [fa, cc, carrier, sc, cfg, memo](const JSeq& pos) -> bool {
      if (!cc(pos)) return false;
      int nthreads = 0;
      for (const Move& m : pos.moves)
        nthreads = std::max(nthreads, m.path.front().index + 1);
      for (int i = 0; i < nthreads; ++i) {
        auto it = memo->find(i);
        if (it == memo->end()) {
          auto ti = restrict_thread(sc, i, carrier, cfg);
          it = memo->emplace(i, ti ? fa(*ti) : Game::undefined_game()).first;
        }
        if (it->second.undefined) return false;
        if (!it->second.contains(strip_component(pos, seg_bang(i), false)))
          return false;
      }
      return true;
    };
    return g;
  };
  for (const Strategy& c : a.catalog) p.catalog.push_back(carrier_bang(c));
  return p;
}

}  // namespace gsm
