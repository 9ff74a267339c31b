#include "gsmltt/strategy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace gsm {

std::optional<std::pair<Move, int>> apply(const Strategy& s, const JSeq& pos) {
  if (pos.size() % 2 != 1) throw ShapeMismatch("strategy queried on even position");
  pos.validate();
  return s.next(pos);
}

// ---------------------------------------------------------------- tables

Strategy table_strategy(std::vector<JSeq> plays, std::string label) {
  auto tbl = std::make_shared<std::vector<JSeq>>(std::move(plays));
  Strategy s;
  s.table = tbl;
  s.label = std::move(label);
  s.next = [tbl](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    for (const JSeq& p : *tbl) {
      if (p.size() != pos.size() + 1) continue;
      bool pref = std::equal(pos.moves.begin(), pos.moves.end(), p.moves.begin()) &&
                  std::equal(pos.just.begin(), pos.just.end(), p.just.begin());
      if (pref) return std::make_pair(p.at(p.size()), p.justifier(p.size()));
    }
    return std::nullopt;
  };
  return s;
}

// ---------------------------------------------------------------- mirrors

// Index of the copy partner: the P-move at 2k copies the O-move at 2k-1.
static int partner(int j) { return j % 2 == 1 ? j + 1 : j - 1; }

Strategy mirror_strategy(std::function<std::optional<Move>(const Move&)> mirror,
                         std::string label) {
  Strategy s;
  s.label = std::move(label);
  s.next = [mirror](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    // only defined along the strategy's own plays: copies pair up strictly
    for (int i = 2; i <= pos.size(); i += 2) {
      auto img = mirror(pos.at(i - 1));
      if (!img || !(flip_op(*img) == pos.at(i))) return std::nullopt;
      int j = pos.justifier(i - 1);
      int want = j == 0 ? i - 1 : partner(j);
      if (pos.justifier(i) != want) return std::nullopt;
    }
    const Move& m = pos.at(pos.size());
    auto img = mirror(m);
    if (!img) return std::nullopt;
    int j = pos.justifier(pos.size());
    return std::make_pair(flip_op(*img), j == 0 ? pos.size() : partner(j));
  };
  return s;
}

static bool path_starts_with(const Path& p, const Path& pre) {
  return p.size() >= pre.size() && std::equal(pre.begin(), pre.end(), p.begin());
}

Strategy prefix_mirror(Path cod_prefix, Path dom_prefix, std::string label) {
  Path cp = std::move(cod_prefix), dp = std::move(dom_prefix);
  cp.insert(cp.begin(), seg_cod());
  dp.insert(dp.begin(), seg_dom());
  auto mirror = [cp, dp](const Move& m) -> std::optional<Move> {
    Move r = m;
    if (path_starts_with(m.path, cp)) {
      r.path = dp;
      r.path.insert(r.path.end(), m.path.begin() + cp.size(), m.path.end());
      return r;
    }
    if (path_starts_with(m.path, dp)) {
      r.path = cp;
      r.path.insert(r.path.end(), m.path.begin() + dp.size(), m.path.end());
      return r;
    }
    return std::nullopt;
  };
  return mirror_strategy(mirror, std::move(label));
}

Strategy copycat() { return prefix_mirror({}, {}, "cc"); }
Strategy dereliction() { return prefix_mirror({}, {seg_bang(0)}, "der"); }

// ---------------------------------------------------------------- arithmetic

Strategy numeral(long n) {
  Strategy s;
  s.label = std::to_string(n) + "_";
  Move q = mv(Name::q(), Op::O, Qa::Q, {seg_cod()});
  JSeq play;
  play = play.extended(q, 0).extended(mv(Name::nat(n), Op::P, Qa::A, {seg_cod()}), 1);
  s = table_strategy({JSeq{}, play}, s.label);
  return s;
}

// Shared shape of succ/double: probe the input once, answer a function of it.
static Strategy unary_numeric(std::string label, std::function<long(long)> fn) {
  Strategy s;
  s.label = label;
  s.next = [fn](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& m = pos.at(pos.size());
    if (m.path == Path{seg_cod()} && m.name.kind == Name::Query)
      return std::make_pair(mv(Name::q(), Op::P, Qa::Q, {seg_dom(), seg_bang(0)}),
                            pos.size());
    if (m.path == Path{seg_dom(), seg_bang(0)} && m.name.kind == Name::Nat) {
      int dq = pos.justifier(pos.size());
      if (dq == 0) return std::nullopt;
      int cq = pos.justifier(dq);  // the domain question's own justifier
      if (cq == 0) return std::nullopt;
      return std::make_pair(
          mv(Name::nat(fn(m.name.value)), Op::P, Qa::A, {seg_cod()}), cq);
    }
    return std::nullopt;
  };
  return s;
}

Strategy successor() {
  return unary_numeric("succ", [](long n) { return n + 1; });
}
Strategy doubling() {
  return unary_numeric("double", [](long n) { return 2 * n; });
}

// Root of the justifier chain of the last occurrence (the opening question).
static int chain_root(const JSeq& pos, int i) {
  while (pos.justifier(i) != 0) i = pos.justifier(i);
  return i;
}

Strategy addition() {
  Strategy s;
  s.label = "add";
  s.next = [](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& m = pos.at(pos.size());
    int n = pos.size();
    if (m.path == Path{seg_cod()} && m.name.kind == Name::Query)
      return std::make_pair(
          mv(Name::q(), Op::P, Qa::Q, {seg_dom(), seg_bang(0), seg_left()}), n);
    if (m.name.kind != Name::Nat) return std::nullopt;
    int root = chain_root(pos, n);
    if (m.path == Path{seg_dom(), seg_bang(0), seg_left()})
      return std::make_pair(
          mv(Name::q(), Op::P, Qa::Q, {seg_dom(), seg_bang(1), seg_right()}), root);
    if (m.path == Path{seg_dom(), seg_bang(1), seg_right()}) {
      long a = -1;
      for (const Move& x : pos.moves)
        if (x.path == Path{seg_dom(), seg_bang(0), seg_left()} &&
            x.name.kind == Name::Nat)
          a = x.name.value;
      if (a < 0) return std::nullopt;
      return std::make_pair(
          mv(Name::nat(a + m.name.value), Op::P, Qa::A, {seg_cod()}), root);
    }
    return std::nullopt;
  };
  return s;
}

Strategy pazo() {
  Strategy s;
  s.label = "pazo";
  s.next = [](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& m = pos.at(pos.size());
    int n = pos.size();
    if (m.path == Path{seg_cod()} && m.name.kind == Name::Query)
      return std::make_pair(
          mv(Name::q(), Op::P, Qa::Q, {seg_dom(), seg_bang(0), seg_cod()}), n);
    // the input function asks for its argument: feed it the thread index
    if (m.name.kind == Name::Query && m.path.size() == 4 &&
        m.path[0].kind == Seg::Dom && m.path[1].kind == Seg::Bang &&
        m.path[2].kind == Seg::Dom && m.path[3].kind == Seg::Bang)
      return std::make_pair(
          mv(Name::nat(m.path[1].index), Op::P, Qa::A, m.path), n);
    if (m.name.kind != Name::Nat) return std::nullopt;
    int root = chain_root(pos, n);
    if (m.path == Path{seg_dom(), seg_bang(0), seg_cod()})
      return std::make_pair(
          mv(Name::q(), Op::P, Qa::Q, {seg_dom(), seg_bang(1), seg_cod()}), root);
    if (m.path == Path{seg_dom(), seg_bang(1), seg_cod()}) {
      long a = -1;
      for (const Move& x : pos.moves)
        if (x.path == Path{seg_dom(), seg_bang(0), seg_cod()} &&
            x.name.kind == Name::Nat)
          a = x.name.value;
      if (a < 0) return std::nullopt;
      return std::make_pair(
          mv(Name::nat(a + m.name.value), Op::P, Qa::A, {seg_cod()}), root);
    }
    return std::nullopt;
  };
  return s;
}

// ---------------------------------------------------------------- combinators

Strategy pairing(const Strategy& f, const Strategy& g) {
  Strategy fc = f, gc = g;
  Strategy s;
  s.label = "<" + f.label + "," + g.label + ">";
  s.next = [fc, gc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    // a product position lives in one codomain component only
    std::optional<Seg> side;
    for (const Move& m : pos.moves)
      if (has_prefix(m, seg_cod()) && m.path.size() >= 2) {
        side = m.path[1];
        break;
      }
    if (!side || (side->kind != Seg::Left && side->kind != Seg::Right))
      return std::nullopt;
    bool left = side->kind == Seg::Left;
    JSeq local = pos;
    for (Move& m : local.moves)
      if (has_prefix(m, seg_cod())) {
        if (m.path.size() < 2 || !(m.path[1] == *side)) return std::nullopt;
        m.path.erase(m.path.begin() + 1);
      }
    auto r = (left ? fc : gc).next(local);
    if (!r) return std::nullopt;
    Move out = r->first;
    if (has_prefix(out, seg_cod())) out.path.insert(out.path.begin() + 1, *side);
    return std::make_pair(out, r->second);
  };
  return s;
}

Strategy tensor(const Strategy& f, const Strategy& g) {
  Strategy fc = f, gc = g;
  Strategy s;
  s.label = f.label + "(x)" + g.label;
  s.next = [fc, gc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    const Move& last = pos.at(pos.size());
    if (last.path.size() < 2) return std::nullopt;
    Seg side = last.path[1];
    if (side.kind != Seg::Left && side.kind != Seg::Right) return std::nullopt;
    std::vector<bool> mask(pos.size());
    for (int i = 1; i <= pos.size(); ++i)
      mask[i - 1] = pos.at(i).path.size() >= 2 && pos.at(i).path[1] == side;
    std::vector<int> kept;
    JSeq local = project(pos, mask, kept);
    for (Move& m : local.moves) m.path.erase(m.path.begin() + 1);
    auto r = (side.kind == Seg::Left ? fc : gc).next(local);
    if (!r) return std::nullopt;
    Move out = r->first;
    out.path.insert(out.path.begin() + 1, side);
    int j = r->second == 0 ? 0 : kept[r->second - 1];
    return std::make_pair(out, j);
  };
  return s;
}

Strategy promotion(const Strategy& f) {
  Strategy fc = f;
  Strategy s;
  s.label = f.label + "!";
  s.next = [fc](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    int n = pos.size();
    int root = n;
    while (pos.justifier(root) != 0) root = pos.justifier(root);
    if (!has_prefix(pos.at(root), seg_cod())) return std::nullopt;
    if (pos.at(root).path.size() < 2 || pos.at(root).path[1].kind != Seg::Bang)
      return std::nullopt;
    Seg cod_thread = pos.at(root).path[1];

    std::vector<int> kept;
    JSeq local = project(pos, hereditary_mask(pos, root), kept);

    // relabel into the single-thread coordinates the operand expects:
    // Cod.Bang(i) -> Cod, Dom.Bang(j) -> Dom.Bang(local j)
    std::vector<int> dom_local_to_global;
    for (Move& m : local.moves) {
      if (has_prefix(m, seg_cod())) {
        if (m.path.size() < 2 || !(m.path[1] == cod_thread)) return std::nullopt;
        m.path.erase(m.path.begin() + 1);
      } else if (has_prefix(m, seg_dom())) {
        if (m.path.size() < 2 || m.path[1].kind != Seg::Bang) return std::nullopt;
        int gj = m.path[1].index;
        auto it = std::find(dom_local_to_global.begin(), dom_local_to_global.end(), gj);
        int lj;
        if (it == dom_local_to_global.end()) {
          lj = static_cast<int>(dom_local_to_global.size());
          dom_local_to_global.push_back(gj);
        } else {
          lj = static_cast<int>(it - dom_local_to_global.begin());
        }
        m.path[1] = seg_bang(lj);
      } else {
        return std::nullopt;
      }
    }

    auto r = fc.next(local);
    if (!r) return std::nullopt;
    Move out = r->first;
    if (has_prefix(out, seg_cod())) {
      out.path.insert(out.path.begin() + 1, cod_thread);
    } else if (has_prefix(out, seg_dom())) {
      if (out.path.size() < 2 || out.path[1].kind != Seg::Bang) return std::nullopt;
      int lj = out.path[1].index;
      int gj;
      if (lj < static_cast<int>(dom_local_to_global.size())) {
        gj = dom_local_to_global[lj];
      } else {
        // a fresh domain thread gets the next free global index
        std::set<int> used;
        for (const Move& m : pos.moves)
          if (has_prefix(m, seg_dom()) && m.path.size() >= 2 &&
              m.path[1].kind == Seg::Bang)
            used.insert(m.path[1].index);
        gj = static_cast<int>(used.size());
      }
      out.path[1] = seg_bang(gj);
    } else {
      return std::nullopt;
    }
    int j = r->second == 0 ? 0 : kept[r->second - 1];
    return std::make_pair(out, j);
  };
  return s;
}

// ---------------------------------------------------------------- machine

namespace {

struct Inter {
  TraceEntry::Comp comp;
  Move move;  // A/C composite coordinates; B in the middle game's own
  int just = 0;
  int f_idx = 0, g_idx = 0, vis_idx = 0;
};

struct Machine {
  Strategy f, g;
  long budget;
  std::vector<Inter> inter;
  JSeq s_f, s_g, vis;
  bool stuck = false, budget_hit = false;

  static Move b_to_f(const Move& b) { return retag(b, seg_cod()); }
  static Move b_to_g(const Move& b) { return flip_op(retag(b, seg_dom())); }

  int chase_visible(int k) const {  // inter index -> visible justifier
    while (k > 0 && inter[k - 1].comp != TraceEntry::A && inter[k - 1].comp != TraceEntry::C)
      k = inter[k - 1].just;
    return k == 0 ? 0 : inter[k - 1].vis_idx;
  }

  void push_external(const Move& m, int inter_just, int vis_just) {
    Inter r;
    r.comp = has_prefix(m, seg_dom()) ? TraceEntry::A : TraceEntry::C;
    r.move = m;
    r.just = inter_just;
    vis = vis.extended(m, vis_just);
    r.vis_idx = vis.size();
    if (r.comp == TraceEntry::A) {
      int fj = inter_just > 0 ? inter[inter_just - 1].f_idx : 0;
      s_f = s_f.extended(m, fj);
      r.f_idx = s_f.size();
    } else {
      int gj = inter_just > 0 ? inter[inter_just - 1].g_idx : 0;
      s_g = s_g.extended(m, gj);
      r.g_idx = s_g.size();
    }
    inter.push_back(r);
  }

  void push_b(const Move& bare, int inter_just, bool by_f) {
    Inter r;
    r.comp = by_f ? TraceEntry::B0 : TraceEntry::B1;
    r.move = bare;
    r.just = inter_just;
    int fj = 0, gj = 0;
    if (inter_just > 0) {
      const Inter& p = inter[inter_just - 1];
      if (p.comp == TraceEntry::C) {
        fj = 0;  // middle-game initial: initial on the f side
        gj = p.g_idx;
      } else {
        fj = p.f_idx;
        gj = p.g_idx;
      }
    }
    s_f = s_f.extended(b_to_f(bare), fj);
    s_g = s_g.extended(b_to_g(bare), gj);
    r.f_idx = s_f.size();
    r.g_idx = s_g.size();
    inter.push_back(r);
  }

  // Finds the interaction justifier for an external O-move whose visible
  // justifier is vis index vj.
  int resolve_o_just(const Move& m, int vj) {
    if (vj == 0) return 0;
    // the record whose visible index is vj
    int direct = 0;
    for (int k = 1; k <= static_cast<int>(inter.size()); ++k)
      if (inter[k - 1].vis_idx == vj &&
          (inter[k - 1].comp == TraceEntry::A || inter[k - 1].comp == TraceEntry::C))
        direct = k;
    if (direct == 0) return -1;
    bool is_a = has_prefix(m, seg_dom());
    bool direct_a = inter[direct - 1].comp == TraceEntry::A;
    if (is_a == direct_a || !is_a) return direct;
    // an A-initial justified visibly by a C move: attach to the most
    // recent middle-game initial that hides over vj
    for (int k = static_cast<int>(inter.size()); k >= 1; --k) {
      const Inter& r = inter[k - 1];
      if ((r.comp == TraceEntry::B0 || r.comp == TraceEntry::B1) &&
          chase_visible(r.just) == vj && r.just > 0 &&
          inter[r.just - 1].comp == TraceEntry::C)
        return k;
    }
    return -1;
  }

  // Feeds one external O-move; returns the machine's visible P-response.
  std::optional<std::pair<Move, int>> step(const Move& m, int vj) {
    int ij = resolve_o_just(m, vj);
    if (ij < 0) return std::nullopt;
    push_external(m, ij, vj);
    bool f_turn = has_prefix(m, seg_dom());
    long steps = 0;
    for (;;) {
      if (++steps > budget) {
        budget_hit = true;
        throw InternalLoopBudget("interaction exceeded its step budget");
      }
      const Strategy& side = f_turn ? f : g;
      const JSeq& local = f_turn ? s_f : s_g;
      auto r = side.next(local);
      if (!r) {
        stuck = true;
        return std::nullopt;
      }
      auto [rm, lj] = *r;
      // translate the local justifier to an interaction index
      int ijust = 0;
      if (lj > 0) {
        for (int k = 1; k <= static_cast<int>(inter.size()); ++k)
          if ((f_turn ? inter[k - 1].f_idx : inter[k - 1].g_idx) == lj) ijust = k;
      }
      if (lj > 0 && ijust == 0) return std::nullopt;
      bool external = f_turn ? has_prefix(rm, seg_dom()) : has_prefix(rm, seg_cod());
      if (external) {
        int vjust = chase_visible(ijust);
        push_external(rm, ijust, vjust);
        return std::make_pair(rm, vjust);
      }
      Move bare = rm;
      bare.path.erase(bare.path.begin());
      if (!f_turn) bare = flip_op(bare);  // g's Dom coordinates carry B flipped
      push_b(bare, ijust, f_turn);
      f_turn = !f_turn;
    }
  }
};

}  // namespace

Strategy compose_linear(const Strategy& f, const Strategy& g, long step_budget) {
  Strategy fc = f, gc = g;
  Strategy s;
  s.label = gc.label + "o" + fc.label;
  s.next = [fc, gc, step_budget](const JSeq& pos) -> std::optional<std::pair<Move, int>> {
    Machine m{fc, gc, step_budget, {}, {}, {}, {}, false, false};
    for (int i = 1; i <= pos.size(); i += 2) {
      auto r = m.step(pos.at(i), pos.justifier(i));
      if (i + 1 <= pos.size()) {
        if (!r) return std::nullopt;  // off the composite's own plays
        if (!(r->first == pos.at(i + 1)) || r->second != pos.justifier(i + 1))
          return std::nullopt;
      } else {
        return r;
      }
    }
    return std::nullopt;
  };
  return s;
}

Strategy bullet(const Strategy& f, const Strategy& g, long step_budget) {
  Strategy s = compose_linear(promotion(f), g, step_budget);
  s.label = g.label + "." + f.label;
  return s;
}

InteractionTrace interaction_trace(const Strategy& f, const Strategy& g,
                                   const std::vector<std::pair<Move, int>>& o_script,
                                   long step_budget) {
  Machine m{f, g, step_budget, {}, {}, {}, {}, false, false};
  InteractionTrace out;
  try {
    for (const auto& [mv_, vj] : o_script) {
      auto r = m.step(mv_, vj);
      if (!r) break;
    }
  } catch (const InternalLoopBudget&) {
    out.budget_hit = true;
  }
  out.stuck = m.stuck;
  out.budget_hit = out.budget_hit || m.budget_hit;
  for (const Inter& r : m.inter) {
    TraceEntry e;
    e.comp = r.comp;
    e.move = r.move;
    e.just = r.just;
    e.hidden = r.comp == TraceEntry::B0 || r.comp == TraceEntry::B1;
    out.full.push_back(e);
  }
  out.visible = m.vis;
  return out;
}

static JSeq trace_project(const InteractionTrace& t,
                          const std::function<std::optional<Move>(const TraceEntry&)>& pick) {
  JSeq s;
  std::vector<int> renum(t.full.size() + 1, 0);
  std::vector<std::optional<Move>> picked(t.full.size());
  for (size_t i = 0; i < t.full.size(); ++i) picked[i] = pick(t.full[i]);
  for (size_t i = 0; i < t.full.size(); ++i) {
    if (!picked[i]) continue;
    int j = t.full[i].just;
    while (j > 0 && !picked[j - 1]) j = t.full[j - 1].just;
    s.moves.push_back(*picked[i]);
    s.just.push_back(j > 0 ? renum[j] : 0);
    renum[i + 1] = s.size();
  }
  return s;
}

JSeq trace_side_f(const InteractionTrace& t) {
  return trace_project(t, [](const TraceEntry& e) -> std::optional<Move> {
    if (e.comp == TraceEntry::A) return e.move;
    if (e.comp == TraceEntry::B0 || e.comp == TraceEntry::B1)
      return retag(e.move, seg_cod());
    return std::nullopt;
  });
}

JSeq trace_side_g(const InteractionTrace& t) {
  return trace_project(t, [](const TraceEntry& e) -> std::optional<Move> {
    if (e.comp == TraceEntry::C) return e.move;
    if (e.comp == TraceEntry::B0 || e.comp == TraceEntry::B1)
      return flip_op(retag(e.move, seg_dom()));
    return std::nullopt;
  });
}

JSeq trace_visible(const InteractionTrace& t) {
  return trace_project(t, [](const TraceEntry& e) -> std::optional<Move> {
    if (e.comp == TraceEntry::A || e.comp == TraceEntry::C) return e.move;
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- checkers

std::vector<JSeq> plays(const Game& g, const Strategy& s, const EnumConfig& cfg) {
  std::vector<JSeq> out{JSeq{}};
  std::deque<JSeq> frontier{JSeq{}};
  long nodes = 1;
  while (!frontier.empty()) {
    JSeq p = std::move(frontier.front());
    frontier.pop_front();
    if (p.size() + 2 > cfg.max_len) continue;
    for (const auto& [m, j] : extensions(g, p, cfg.branch_bound)) {
      JSeq odd = p.extended(m, j);
      auto r = apply(s, odd);
      if (!r) continue;
      JSeq even = odd.extended(r->first, r->second);
      if (!g.contains(even)) continue;
      if (++nodes > cfg.node_limit) throw BudgetExceeded("plays enumeration");
      out.push_back(even);
      frontier.push_back(std::move(even));
    }
  }
  return out;
}

CheckResult check_constraint(const Game& g, const Strategy& s, Constraint c,
                             const EnumConfig& cfg) {
  CheckResult res;
  std::map<std::string, std::string> innocence;  // pview key -> response pview
  std::deque<JSeq> frontier{JSeq{}};
  long nodes = 1;
  bool saw_long_pview = false;
  while (!frontier.empty()) {
    JSeq p = std::move(frontier.front());
    frontier.pop_front();
    if (p.size() + 1 > cfg.max_len) continue;
    for (const auto& [m, j] : extensions(g, p, cfg.branch_bound)) {
      JSeq odd = p.extended(m, j);
      auto r = apply(s, odd);
      if (!r) {
        if (c == Constraint::Total) {
          res.verdict = Verdict::Fails;
          res.witness = serialize(odd);
          return res;
        }
        continue;
      }
      JSeq even = odd.extended(r->first, r->second);
      if (!g.contains(even)) {
        res.verdict = Verdict::Fails;
        res.witness = "response leaves the game:\n" + serialize(even);
        return res;
      }
      if (c == Constraint::Innocent) {
        std::string key = serialize(pview(odd));
        std::string val = serialize(pview(even));
        auto [it, fresh] = innocence.emplace(key, val);
        if (!fresh && it->second != val) {
          res.verdict = Verdict::Fails;
          res.witness = "view-inconsistent responses at view:\n" + key;
          return res;
        }
      }
      if (c == Constraint::Noetherian &&
          static_cast<int>(pview(even).size()) >= cfg.max_len)
        saw_long_pview = true;
      if (c == Constraint::WellBracketed && r->first.qa == Qa::A) {
        // the answer must resolve the pending question of the P-view
        auto idx = pview_indices(odd);
        std::vector<int> stack;
        for (int k : idx) {
          if (odd.at(k).qa == Qa::Q) {
            stack.push_back(k);
          } else {
            auto it = std::find(stack.begin(), stack.end(), odd.justifier(k));
            if (it != stack.end()) stack.erase(it);
          }
        }
        if (stack.empty() || stack.back() != r->second) {
          res.verdict = Verdict::Fails;
          res.witness = "answer skips a pending question:\n" + serialize(even);
          return res;
        }
      }
      if (++nodes > cfg.node_limit) {
        res.verdict = Verdict::Inconclusive;
        res.witness = "node budget exhausted";
        return res;
      }
      frontier.push_back(std::move(even));
    }
  }
  if (c == Constraint::Noetherian && saw_long_pview) {
    res.verdict = Verdict::Inconclusive;
    res.witness = "views keep growing at the exploration depth";
  }
  return res;
}

CheckResult check_winning(const Game& g, const Strategy& s, const EnumConfig& cfg) {
  for (Constraint c : {Constraint::Total, Constraint::Innocent, Constraint::Noetherian}) {
    CheckResult r = check_constraint(g, s, c, cfg);
    if (r.verdict != Verdict::Holds) return r;
  }
  return {};
}

bool strategy_eq(const Game& g, const Strategy& a, const Strategy& b, int depth,
                 int branch_bound) {
  int max_odd = 2 * depth - 1;
  std::deque<JSeq> frontier{JSeq{}};
  while (!frontier.empty()) {
    JSeq p = std::move(frontier.front());
    frontier.pop_front();
    if (p.size() + 1 > max_odd) continue;
    for (const auto& [m, j] : extensions(g, p, branch_bound)) {
      JSeq odd = p.extended(m, j);
      auto ra = apply(a, odd);
      auto rb = apply(b, odd);
      if (ra != rb) return false;
      if (!ra) continue;
      frontier.push_back(odd.extended(ra->first, ra->second));
    }
  }
  return true;
}

Strategy random_table_strategy(const Game& g, const EnumConfig& cfg, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<JSeq> tbl{JSeq{}};
  std::deque<JSeq> frontier{JSeq{}};
  long nodes = 1;
  while (!frontier.empty()) {
    JSeq p = std::move(frontier.front());
    frontier.pop_front();
    if (p.size() + 2 > cfg.max_len) continue;
    for (const auto& [m, j] : extensions(g, p, cfg.branch_bound)) {
      JSeq odd = p.extended(m, j);
      auto opts = extensions(g, odd, cfg.branch_bound);
      if (opts.empty()) continue;
      if (rng() % 8 == 0) continue;  // stay partial here
      auto& [rm, rj] = opts[rng() % opts.size()];
      JSeq even = odd.extended(rm, rj);
      if (++nodes > cfg.node_limit) throw BudgetExceeded("random strategy generation");
      tbl.push_back(even);
      frontier.push_back(std::move(even));
    }
  }
  return table_strategy(std::move(tbl), "rnd" + std::to_string(seed));
}

}  // namespace gsm
