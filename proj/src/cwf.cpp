#include "gsmltt/cwf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gsm {

// ---------------------------------------------------------------- coordinates

Strategy as_term(const Strategy& point) {
  Strategy pc = point;
  Strategy s;
  s.label = pc.label + "^";
  s.next = [pc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    JSeq local = pos;
    for (Move& m : local.moves) {
      if (!has_prefix(m, seg_cod())) return std::nullopt;
      m.path.erase(m.path.begin());
    }
    auto r = pc.next(local);
    if (!r) return std::nullopt;
    return std::make_pair(retag(r->first, seg_cod()), r->second);
  };
  s.table = pc.table ? std::make_shared<std::vector<JSeq>>([&] {
    std::vector<JSeq> t;
    for (JSeq p : *pc.table) {
      for (Move& m : p.moves) m.path.insert(m.path.begin(), seg_cod());
      t.push_back(std::move(p));
    }
    return t;
  }()) : nullptr;
  return s;
}

Strategy from_term(const Strategy& term) {
  Strategy tc = term;
  Strategy s;
  s.label = tc.label + "v";
  s.next = [tc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    JSeq global = pos;
    for (Move& m : global.moves) m.path.insert(m.path.begin(), seg_cod());
    auto r = tc.next(global);
    if (!r || !has_prefix(r->first, seg_cod())) return std::nullopt;
    Move m = r->first;
    m.path.erase(m.path.begin());
    return std::make_pair(m, r->second);
  };
  return s;
}

Strategy comp_point(const Strategy& phi, const Strategy& gamma, long step_budget) {
  return from_term(bullet(as_term(gamma), phi, step_budget));
}

// ---------------------------------------------------------------- pi

// The family value of L at gamma, lifted to the function carrier: the
// domain is pinned to gamma's closure, the codomain to the family game.
static Game lift_over(const Strategy& gamma, const Game& fam_value,
                      const Game& base_carrier, bool linear) {
  if (linear) return limp_game(closure(gamma, base_carrier), fam_value);
  return limp_game(closure(carrier_bang(gamma), expo_game(base_carrier)), fam_value);
}

PGame pi(const PGame& gamma, const DependentPGame& l, bool linear,
         const EnumConfig& cfg) {
  PGame p;
  p.carrier = linear ? limp_game(gamma.carrier, l.carrier)
                     : implication_game(gamma.carrier, l.carrier);
  PGame base = gamma;
  DependentPGame lc = l;
  p.family = [base, lc, linear, cfg](const Strategy& phi) -> Game {
    // one lifted game per catalog witness; computed on first use
    auto lifts = std::make_shared<std::vector<std::optional<Game>>>(
        base.catalog.size());
    Strategy pc = phi;
    Game g;
    auto lift_at = [base, lc, linear, pc, cfg, lifts](size_t i) -> const Game& {
      auto& slot = (*lifts)[i];
      if (!slot) {
        const Strategy& ga = base.catalog[i];
        Strategy pt = linear ? from_term(compose_linear(as_term(ga), pc))
                             : comp_point(pc, ga);
        Game fam = lc.at(ga).family(pt);
        slot = fam.undefined
                   ? Game::undefined_game()
                   : lift_over(ga, fam, base.carrier, linear);
      }
      return *slot;
    };
    Game carrier_game = linear ? limp_game(base.carrier, lc.carrier)
                               : implication_game(base.carrier, lc.carrier);
    g.arena = carrier_game.arena;
    size_t ncat = base.catalog.size();
    g.contains = [lift_at, ncat](const JSeq& pos) -> bool {
      std::vector<char> alive(ncat, 1);
      JSeq p;
      for (int i = 1; i <= pos.size(); ++i) {
        p = p.extended(pos.at(i), pos.justifier(i));
        if (i % 2 == 1) {
          bool any = false;
          for (size_t k = 0; k < ncat; ++k) {
            if (!alive[k]) continue;
            const Game& lg = lift_at(k);
            if (!lg.undefined && lg.contains(p)) {
              any = true;
            } else {
              alive[k] = 0;
            }
          }
          if (!any) return false;
        } else {
          for (size_t k = 0; k < ncat; ++k)
            if (alive[k] && !lift_at(k).contains(p)) return false;
        }
      }
      return true;
    };
    g.well_opened = carrier_game.well_opened;
    return g;
  };
  // function catalog: silence plus the constant functions into the value
  p.catalog.push_back(silent_strategy());
  if (!base.catalog.empty())
    for (const Strategy& a : l.at(base.catalog.front()).catalog)
      p.catalog.push_back(as_term(a));
  return p;
}

// ---------------------------------------------------------------- sigma

// A product-carrier strategy restricted to one side.
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

PGame sigma(const PGame& gamma, const DependentPGame& a, const EnumConfig& cfg) {
  (void)cfg;
  PGame p;
  p.carrier = product_game(gamma.carrier, a.carrier);
  auto gfam = gamma.family;
  DependentPGame ac = a;
  p.family = [gfam, ac](const Strategy& s) -> Game {
    Strategy g0 = product_side(s, seg_left());
    Strategy a0 = product_side(s, seg_right());
    Game lg = gfam(g0);
    if (lg.undefined) return Game::undefined_game();
    Game rg = ac.at(g0).family(a0);
    if (rg.undefined) return Game::undefined_game();
    return product_game(lg, rg);
  };
  for (const Strategy& g0 : gamma.catalog)
    for (const Strategy& a0 : a.at(g0).catalog)
      p.catalog.push_back(carrier_pair(g0, a0));
  return p;
}

DependentPGame constant_dep(const PGame& base, const PGame& value) {
  DependentPGame d;
  d.base = base;
  d.carrier = value.carrier;
  PGame v = value;
  d.at = [v](const Strategy&) { return v; };
  return d;
}

// ---------------------------------------------------------------- cwf core

DependentPGame subst_ty(const DependentPGame& a, const PGame& new_base,
                        const Strategy& phi) {
  DependentPGame d;
  d.base = new_base;
  d.carrier = a.carrier;
  DependentPGame ac = a;
  Strategy pc = phi;
  d.at = [ac, pc](const Strategy& g0) { return ac.at(comp_point(pc, g0)); };
  d.meta = a.meta;
  return d;
}

Term subst_tm(const Term& t, const PGame& new_base, const Strategy& phi) {
  Term out;
  out.ctx = new_base;
  out.ty = subst_ty(t.ty, new_base, phi);
  out.strat = bullet(phi, t.strat);
  return out;
}

PGame comprehension(const PGame& gamma, const DependentPGame& a,
                    const EnumConfig& cfg) {
  return sigma(gamma, a, cfg);
}

Strategy proj_ctx() { return prefix_mirror({}, {seg_bang(0), seg_left()}, "p"); }
Strategy proj_var() { return prefix_mirror({}, {seg_bang(0), seg_right()}, "v"); }
Strategy identity() { return dereliction(); }
Strategy extend(const Strategy& phi, const Strategy& alpha) {
  return pairing(phi, alpha);
}

// ---------------------------------------------------------------- currying

namespace {

// Bijection between the two coordinate systems of a curried strategy:
//   kappa side: Cod.Cod (B) | Cod.Dom.Bang(i) (A) | Dom.Bang(j) (G)
//   beta  side: Cod (B) | Dom.Bang(k).Right (A) | Dom.Bang(k).Left (G)
// The combined thread k enumerates (class, index) pairs by first use, so
// justifier indices carry over unchanged.
struct CurryMap {
  std::vector<std::pair<char, int>> threads;  // k -> ('G'/'A', class index)

  int find(char cls, int idx) const {
    for (size_t k = 0; k < threads.size(); ++k)
      if (threads[k] == std::make_pair(cls, idx)) return static_cast<int>(k);
    return -1;
  }
  int count(char cls) const {
    int n = 0;
    for (auto& [c, i] : threads) n += (c == cls);
    return n;
  }
  int intern(char cls, int idx) {
    int k = find(cls, idx);
    if (k >= 0) return k;
    threads.push_back({cls, idx});
    return static_cast<int>(threads.size()) - 1;
  }
};

std::optional<Move> kappa_to_beta(const Move& m, CurryMap& cm) {
  Move r = m;
  if (m.path.size() >= 2 && m.path[0].kind == Seg::Cod && m.path[1].kind == Seg::Cod) {
    r.path.assign(m.path.begin() + 1, m.path.end());
    return r;
  }
  if (m.path.size() >= 3 && m.path[0].kind == Seg::Cod && m.path[1].kind == Seg::Dom &&
      m.path[2].kind == Seg::Bang) {
    int k = cm.intern('A', m.path[2].index);
    r.path = {seg_dom(), seg_bang(k), seg_right()};
    r.path.insert(r.path.end(), m.path.begin() + 3, m.path.end());
    return r;
  }
  if (m.path.size() >= 2 && m.path[0].kind == Seg::Dom && m.path[1].kind == Seg::Bang) {
    int k = cm.intern('G', m.path[1].index);
    r.path = {seg_dom(), seg_bang(k), seg_left()};
    r.path.insert(r.path.end(), m.path.begin() + 2, m.path.end());
    return r;
  }
  return std::nullopt;
}

std::optional<Move> beta_to_kappa(const Move& m, CurryMap& cm) {
  Move r = m;
  if (has_prefix(m, seg_cod())) {
    r.path = {seg_cod()};
    r.path.insert(r.path.end(), m.path.begin(), m.path.end());
    return r;
  }
  if (m.path.size() >= 3 && m.path[0].kind == Seg::Dom && m.path[1].kind == Seg::Bang) {
    int k = m.path[1].index;
    char cls = m.path[2].kind == Seg::Left    ? 'G'
               : m.path[2].kind == Seg::Right ? 'A'
                                              : '?';
    if (cls == '?') return std::nullopt;
    int idx;
    if (k < static_cast<int>(cm.threads.size())) {
      if (cm.threads[k].first != cls) return std::nullopt;
      idx = cm.threads[k].second;
    } else {
      idx = cm.count(cls);
      cm.intern(cls, idx);  // k must equal threads.size() by canonicity
    }
    if (cls == 'A') {
      r.path = {seg_cod(), seg_dom(), seg_bang(idx)};
    } else {
      r.path = {seg_dom(), seg_bang(idx)};
    }
    r.path.insert(r.path.end(), m.path.begin() + 3, m.path.end());
    return r;
  }
  return std::nullopt;
}

}  // namespace

Strategy curry(const Strategy& s) {
  Strategy sc = s;
  Strategy out;
  out.label = "lam(" + s.label + ")";
  out.next = [sc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    CurryMap cm;
    JSeq local;
    for (int i = 1; i <= pos.size(); ++i) {
      auto m = kappa_to_beta(pos.at(i), cm);
      if (!m) return std::nullopt;
      local = local.extended(*m, pos.justifier(i));
    }
    auto r = sc.next(local);
    if (!r) return std::nullopt;
    auto back = beta_to_kappa(r->first, cm);
    if (!back) return std::nullopt;
    return std::make_pair(*back, r->second);
  };
  return out;
}

Strategy uncurry(const Strategy& s) {
  Strategy sc = s;
  Strategy out;
  out.label = "unlam(" + s.label + ")";
  out.next = [sc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    CurryMap cm;
    JSeq local;
    for (int i = 1; i <= pos.size(); ++i) {
      auto m = beta_to_kappa(pos.at(i), cm);
      if (!m) return std::nullopt;
      local = local.extended(*m, pos.justifier(i));
    }
    auto r = sc.next(local);
    if (!r) return std::nullopt;
    auto back = kappa_to_beta(r->first, cm);
    if (!back) return std::nullopt;
    return std::make_pair(*back, r->second);
  };
  return out;
}

// ---------------------------------------------------------------- pi former

DependentPGame pi_former(const DependentPGame& a, const DependentPGame& b,
                         const EnumConfig& cfg) {
  DependentPGame d;
  d.base = a.base;
  d.carrier = implication_game(a.carrier, b.carrier);
  DependentPGame ac = a, bc = b;
  d.at = [ac, bc, cfg](const Strategy& g0) -> PGame {
    PGame dom = ac.at(g0);
    DependentPGame fib;
    fib.base = dom;
    fib.carrier = bc.carrier;
    DependentPGame bcc = bc;
    Strategy g0c = g0;
    fib.at = [bcc, g0c](const Strategy& a0) {
      return bcc.at(carrier_pair(g0c, a0));
    };
    return pi(dom, fib, false, cfg);
  };
  d.meta = std::make_shared<PiMeta>(PiMeta{a, b});
  return d;
}

Term lambda(const Term& beta, const PGame& gamma, const DependentPGame& pi_ty) {
  Term t;
  t.ctx = gamma;
  t.ty = pi_ty;
  t.strat = curry(beta.strat);
  return t;
}

Term app(const Term& kappa, const Term& alpha, const EnumConfig& cfg) {
  Term t;
  t.ctx = kappa.ctx;
  if (auto meta = std::static_pointer_cast<const PiMeta>(kappa.ty.meta)) {
    // B instantiated at alpha: substitute along <id, alpha>
    t.ty = subst_ty(meta->b, kappa.ctx, extend(identity(), alpha.strat));
  } else {
    t.ty = constant_dep(kappa.ctx, constant_pgame(terminal_game()));
  }
  (void)cfg;
  t.strat = bullet(extend(identity(), alpha.strat), uncurry(kappa.strat));
  return t;
}

// ---------------------------------------------------------------- sigma former

DependentPGame sigma_former(const DependentPGame& a, const DependentPGame& b,
                            const EnumConfig& cfg) {
  DependentPGame d;
  d.base = a.base;
  d.carrier = product_game(a.carrier, b.carrier);
  DependentPGame ac = a, bc = b;
  d.at = [ac, bc, cfg](const Strategy& g0) -> PGame {
    PGame dom = ac.at(g0);
    DependentPGame fib;
    fib.base = dom;
    fib.carrier = bc.carrier;
    DependentPGame bcc = bc;
    Strategy g0c = g0;
    fib.at = [bcc, g0c](const Strategy& a0) {
      return bcc.at(carrier_pair(g0c, a0));
    };
    return sigma(dom, fib, cfg);
  };
  return d;
}

static Strategy multi_mirror(std::vector<std::pair<Path, Path>> pairs,
                             std::string label) {
  auto mirror = [pairs](const Move& m) -> std::optional<Move> {
    for (const auto& [cp, dp] : pairs) {
      Path cod{seg_cod()};
      cod.insert(cod.end(), cp.begin(), cp.end());
      Path dom{seg_dom(), seg_bang(0)};
      dom.insert(dom.end(), dp.begin(), dp.end());
      auto starts = [](const Path& p, const Path& pre) {
        return p.size() >= pre.size() && std::equal(pre.begin(), pre.end(), p.begin());
      };
      Move r = m;
      if (starts(m.path, cod)) {
        r.path = dom;
        r.path.insert(r.path.end(), m.path.begin() + cod.size(), m.path.end());
        return r;
      }
      if (starts(m.path, dom)) {
        r.path = cod;
        r.path.insert(r.path.end(), m.path.begin() + dom.size(), m.path.end());
        return r;
      }
    }
    return std::nullopt;
  };
  return mirror_strategy(mirror, std::move(label));
}

Strategy pair_iso() {
  return multi_mirror({{{seg_left()}, {seg_left(), seg_left()}},
                       {{seg_right(), seg_left()}, {seg_left(), seg_right()}},
                       {{seg_right(), seg_right()}, {seg_right()}}},
                      "assoc");
}

Strategy pair_iso_inv() {
  return multi_mirror({{{seg_left(), seg_left()}, {seg_left()}},
                       {{seg_left(), seg_right()}, {seg_right(), seg_left()}},
                       {{seg_right()}, {seg_right(), seg_right()}}},
                      "assoc_inv");
}

Term sigma_elim(const Term& rho, const PGame& new_ctx, const DependentPGame& ty) {
  Term t;
  t.ctx = new_ctx;
  t.ty = ty;
  t.strat = bullet(pair_iso_inv(), rho.strat);
  return t;
}

// ---------------------------------------------------------------- atomics

DependentPGame atomic_one(const PGame& base) {
  return constant_dep(base, pgame_terminal());
}
DependentPGame atomic_zero(const PGame& base) {
  return constant_dep(base, pgame_empty());
}
DependentPGame atomic_nat(const PGame& base) {
  return constant_dep(base, pgame_nat());
}

// ---------------------------------------------------------------- identity types

long& equality_oracle_calls() {
  static long n = 0;
  return n;
}
void audit_reset() { equality_oracle_calls() = 0; }

EqVerdict bounded_equal(const Game& g, const Strategy& a, const Strategy& b,
                        const EnumConfig& cfg) {
  ++equality_oracle_calls();
  if (!strategy_eq(g, a, b, cfg.max_len / 2 + 1, cfg.branch_bound))
    return EqVerdict::DistinguishedAt;
  // conclusive only when the game itself has no positions at the horizon
  try {
    for (const JSeq& p : enumerate_positions(g, cfg))
      if (p.size() >= cfg.max_len) return EqVerdict::Unknown;
  } catch (const BudgetExceeded&) {
    return EqVerdict::Unknown;
  }
  return EqVerdict::EqualUpTo;
}

EqVerdict id_point_verdict(const DependentPGame& d, const Term& lhs, const Term& rhs,
                           const Strategy& gamma, const EnumConfig& cfg) {
  Strategy a = comp_point(lhs.strat, gamma);
  Strategy b = comp_point(rhs.strat, gamma);
  return bounded_equal(d.carrier, a, b, cfg);
}

DependentPGame id_former(const DependentPGame& d, const Term& lhs, const Term& rhs,
                         const EnumConfig& cfg) {
  DependentPGame out;
  out.base = d.base;
  out.carrier = tick_game();
  DependentPGame dc = d;
  Term l = lhs, r = rhs;
  out.at = [dc, l, r, cfg](const Strategy& g0) -> PGame {
    EqVerdict v = id_point_verdict(dc, l, r, g0, cfg);
    Game value = v == EqVerdict::EqualUpTo ? tick_game() : empty_flat_game();
    PGame p;
    p.carrier = tick_game();
    p.family = [value](const Strategy&) { return value; };
    p.catalog = {silent_strategy(), check_point()};
    return p;
  };
  return out;
}

Strategy refl_strategy() {
  Strategy s;
  s.label = "refl";
  Move q = mv(Name::q(), Op::O, Qa::Q, {seg_cod()});
  Move chk = mv(Name::check(), Op::P, Qa::A, {seg_cod()});
  JSeq play = JSeq{}.extended(q, 0).extended(chk, 1);
  s = table_strategy({JSeq{}, play}, "refl");
  return s;
}

Term refl(const Term& alpha, const EnumConfig& cfg) {
  Term t;
  t.ctx = alpha.ctx;
  t.ty = id_former(alpha.ty, alpha, alpha, cfg);
  t.strat = refl_strategy();
  return t;
}

// ---------------------------------------------------------------- recursion

Term nat_rec(const Term& base, const Term& step, const PGame& ctx_with_nat,
             const DependentPGame& motive) {
  Strategy b = base.strat, s = step.strat;
  // chi_0 = base weakened along the context projection; chi_{k+1} feeds
  // the previous stage to the step term
  auto memo = std::make_shared<std::map<long, Strategy>>();
  auto chi = [b, s, memo](long n) -> Strategy {
    auto it = memo->find(n);
    if (it != memo->end()) return it->second;
    Strategy cur;
    if (memo->empty() || memo->rbegin()->first > n) {
      cur = bullet(proj_ctx(), b);
      memo->emplace(0, cur);
      for (long k = 1; k <= n; ++k) {
        cur = bullet(extend(identity(), cur), s);
        memo->emplace(k, cur);
      }
    } else {
      cur = memo->rbegin()->second;
      for (long k = memo->rbegin()->first + 1; k <= n; ++k) {
        cur = bullet(extend(identity(), cur), s);
        memo->emplace(k, cur);
      }
    }
    return memo->at(n);
  };

  Strategy rec;
  rec.label = "natrec";
  Move ask_n = mv(Name::q(), Op::P, Qa::Q, {seg_dom(), seg_bang(0), seg_right()});
  rec.next = [chi, ask_n](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    if (pos.size() == 1) {
      if (!has_prefix(pos.at(1), seg_cod())) return std::nullopt;
      return std::make_pair(ask_n, 1);
    }
    // the N exchange must sit at occurrences 2 and 3
    if (pos.size() < 3) return std::nullopt;
    Move q2 = pos.at(2), a3 = pos.at(3);
    q2.op = Op::P;
    if (!(q2 == ask_n) || pos.justifier(2) != 1) return std::nullopt;
    if (a3.name.kind != Name::Nat || a3.path != ask_n.path || pos.justifier(3) != 2)
      return std::nullopt;
    long n = a3.name.value;

    // hand the rest of the play, minus the exchange, to chi_n; domain
    // threads are renumbered to stay canonical on both sides
    std::vector<bool> mask(pos.size(), true);
    mask[1] = mask[2] = false;
    std::vector<int> kept;
    JSeq local = project(pos, mask, kept);
    std::vector<int> thread_map;  // local index -> global index
    for (Move& m : local.moves) {
      if (!has_prefix(m, seg_dom())) continue;
      if (m.path.size() < 2 || m.path[1].kind != Seg::Bang) return std::nullopt;
      int g = m.path[1].index;
      auto it = std::find(thread_map.begin(), thread_map.end(), g);
      int l;
      if (it == thread_map.end()) {
        l = static_cast<int>(thread_map.size());
        thread_map.push_back(g);
      } else {
        l = static_cast<int>(it - thread_map.begin());
      }
      m.path[1] = seg_bang(l);
    }
    auto r = chi(n).next(local);
    if (!r) return std::nullopt;
    Move out = r->first;
    if (has_prefix(out, seg_dom())) {
      if (out.path.size() < 2 || out.path[1].kind != Seg::Bang) return std::nullopt;
      int l = out.path[1].index;
      int g;
      if (l < static_cast<int>(thread_map.size())) {
        g = thread_map[l];
      } else {
        std::set<int> used{0};  // thread 0 carried the N exchange
        for (const Move& m : pos.moves)
          if (has_prefix(m, seg_dom()) && m.path.size() >= 2 &&
              m.path[1].kind == Seg::Bang)
            used.insert(m.path[1].index);
        g = static_cast<int>(used.size());
      }
      out.path[1] = seg_bang(g);
    }
    int j = r->second == 0 ? 0 : kept[r->second - 1];
    return std::make_pair(out, j);
  };

  Term t;
  t.ctx = ctx_with_nat;
  t.ty = motive;
  t.strat = rec;
  return t;
}

// ---------------------------------------------------------------- law harness

namespace {

struct LawCtx {
  std::vector<std::string>& out;
  const EnumConfig& cfg;
  int depth;

  void record(const std::string& law, const std::string& sample, bool ok) {
    out.push_back(law + " " + sample + " " + (ok ? "pass" : "FAIL") + " depth=" +
                  std::to_string(depth));
  }
};

bool dep_eq(const DependentPGame& a, const DependentPGame& b, const EnumConfig& cfg) {
  if (!games_equal_bounded(a.carrier, b.carrier, cfg)) return false;
  for (const Strategy& g0 : a.base.catalog) {
    PGame pa = a.at(g0), pb = b.at(g0);
    for (size_t i = 0; i < pa.catalog.size() && i < 2; ++i) {
      Game ga = pa.family(pa.catalog[i]);
      Game gb = pb.family(pa.catalog[i]);
      if (ga.undefined != gb.undefined) return false;
      if (!ga.undefined && !games_equal_bounded(ga, gb, cfg)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> cwf_law_report(const EnumConfig& cfg) {
  std::vector<std::string> out;
  int depth = cfg.max_len / 2;
  LawCtx lc{out, cfg, depth};
  EnumConfig small{std::min(cfg.max_len, 6), std::min(cfg.branch_bound, 2),
                   cfg.node_limit};

  PGame T = pgame_terminal(), N = pgame_nat(),
        NN = product_pgame(pgame_nat(), pgame_nat());

  struct Sample {
    std::string name;
    PGame gam, del, tht;
    Strategy psi;  // gam -> del
    Strategy phi;  // del -> tht
  };
  std::vector<Sample> samples{
      {"t-n-n/const2-succ", T, N, N, as_term(point_on_flat(2)), successor()},
      {"n-n-n/succ-succ", N, N, N, successor(), successor()},
      {"n-n-n/id-double", N, N, N, identity(), doubling()},
      {"nn-n-n/fst-succ", NN, N, N, prefix_mirror({}, {seg_bang(0), seg_left()}, "fst"),
       successor()},
      {"t-n-n/const0-double", T, N, N, as_term(point_on_flat(0)), doubling()},
  };

  for (const Sample& smp : samples) {
    Game gam_tht = implication_game(smp.gam.carrier, smp.tht.carrier);
    Game gam_del = implication_game(smp.gam.carrier, smp.del.carrier);

    DependentPGame A = atomic_nat(smp.tht);
    Strategy alpha = as_term(point_on_flat(1));  // a term of A over del/tht

    // Ty-Id: A{id} = A
    lc.record("ty-id", smp.name,
              dep_eq(subst_ty(A, smp.tht, identity()), A, small));
    // Ty-Comp: A{phi . psi} = A{phi}{psi}
    {
      DependentPGame lhs = subst_ty(A, smp.gam, bullet(smp.psi, smp.phi));
      DependentPGame rhs =
          subst_ty(subst_ty(A, smp.del, smp.phi), smp.gam, smp.psi);
      lc.record("ty-comp", smp.name, dep_eq(lhs, rhs, small));
    }
    // Tm-Id / Tm-Comp on the term alpha over tht
    lc.record("tm-id", smp.name,
              strategy_eq(implication_game(smp.tht.carrier, nat_game()),
                          bullet(identity(), alpha), alpha, depth,
                          cfg.branch_bound));
    {
      Game g = implication_game(smp.gam.carrier, nat_game());
      Strategy lhs = bullet(bullet(smp.psi, smp.phi), alpha);
      Strategy rhs = bullet(smp.psi, bullet(smp.phi, alpha));
      lc.record("tm-comp", smp.name, strategy_eq(g, lhs, rhs, depth, cfg.branch_bound));
    }
    // Cons-L: p . <phi, a> = phi   (phi : del -> tht, a over del)
    DependentPGame Adel = atomic_nat(smp.del);
    Strategy a_del = as_term(point_on_flat(3));
    {
      Game g = implication_game(smp.del.carrier, smp.tht.carrier);
      Strategy lhs = bullet(extend(smp.phi, a_del), proj_ctx());
      lc.record("cons-l", smp.name, strategy_eq(g, lhs, smp.phi, depth, cfg.branch_bound));
    }
    // Cons-R: v{<phi, a>} = a
    {
      Game g = implication_game(smp.del.carrier, nat_game());
      Strategy lhs = bullet(extend(smp.phi, a_del), proj_var());
      lc.record("cons-r", smp.name, strategy_eq(g, lhs, a_del, depth, cfg.branch_bound));
    }
    // Cons-Nat: <phi, a> . psi = <phi . psi, a{psi}>
    {
      Game g = implication_game(
          smp.gam.carrier, product_game(smp.tht.carrier, nat_game()));
      Strategy lhs = bullet(smp.psi, extend(smp.phi, a_del));
      Strategy rhs = extend(bullet(smp.psi, smp.phi), bullet(smp.psi, a_del));
      lc.record("cons-nat", smp.name, strategy_eq(g, lhs, rhs, depth, cfg.branch_bound));
    }
    // Cons-Id: <p, v> = id on the comprehension
    {
      PGame compr = comprehension(smp.del, Adel, small);
      Game g = implication_game(compr.carrier, compr.carrier);
      Strategy lhs = extend(proj_ctx(), proj_var());
      lc.record("cons-id", smp.name, strategy_eq(g, lhs, identity(), depth,
                                                 cfg.branch_bound));
    }
    // Pi-Subst: Pi(A,B){psi} = Pi(A{psi}, B{psi+}) with constant A, B
    {
      DependentPGame Ad = atomic_nat(smp.del);
      DependentPGame Bd = atomic_nat(comprehension(smp.del, Ad, small));
      DependentPGame lhs = subst_ty(pi_former(Ad, Bd, small), smp.gam, smp.psi);
      DependentPGame Ag = subst_ty(Ad, smp.gam, smp.psi);
      Strategy psi_plus = extend(bullet(proj_ctx(), smp.psi), proj_var());
      DependentPGame Bg =
          subst_ty(Bd, comprehension(smp.gam, Ag, small), psi_plus);
      DependentPGame rhs = pi_former(Ag, Bg, small);
      EnumConfig tiny{4, 2, small.node_limit};
      lc.record("pi-subst", smp.name, dep_eq(lhs, rhs, tiny));
    }
    // Id-Subst: Id(a,a'){psi} = Id(a{psi}, a'{psi}) probed on base points
    {
      DependentPGame D = atomic_nat(smp.del);
      Term ta{smp.del, D, as_term(point_on_flat(1))};
      Term tb{smp.del, D, as_term(point_on_flat(1))};
      Term tc{smp.del, D, as_term(point_on_flat(2))};
      DependentPGame id_ab = id_former(D, ta, tb, small);
      DependentPGame id_ac = id_former(D, ta, tc, small);
      bool ok = true;
      for (const Strategy& g0 : smp.gam.catalog) {
        DependentPGame l1 = subst_ty(id_ab, smp.gam, smp.psi);
        DependentPGame r1 =
            id_former(subst_ty(D, smp.gam, smp.psi),
                      {smp.gam, D, bullet(smp.psi, ta.strat)},
                      {smp.gam, D, bullet(smp.psi, tb.strat)}, small);
        Game a1 = l1.at(g0).family(silent_strategy());
        Game b1 = r1.at(g0).family(silent_strategy());
        ok = ok && games_equal_bounded(a1, b1, small);
        DependentPGame l2 = subst_ty(id_ac, smp.gam, smp.psi);
        DependentPGame r2 =
            id_former(subst_ty(D, smp.gam, smp.psi),
                      {smp.gam, D, bullet(smp.psi, ta.strat)},
                      {smp.gam, D, bullet(smp.psi, tc.strat)}, small);
        Game a2 = l2.at(g0).family(silent_strategy());
        Game b2 = r2.at(g0).family(silent_strategy());
        ok = ok && games_equal_bounded(a2, b2, small);
      }
      lc.record("id-subst", smp.name, ok);
    }
    (void)gam_tht;
    (void)gam_del;
  }
  return out;
}

bool cwf_laws_hold(const std::vector<std::string>& report) {
  for (const std::string& line : report)
    if (line.find(" FAIL ") != std::string::npos) return false;
  return !report.empty();
}

}  // namespace gsm
