#include "gsmltt/universe.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gsm {

// ---------------------------------------------------------------- codes

long sharp(Code c, int j) {
  switch (c) {
    case Code::One: return 0;
    case Code::Zero: return 1;
    case Code::Nat: return 2;
    case Code::Pi: return 3;
    case Code::Sigma: return 4;
    case Code::Id: return 5;
    case Code::U: return 6 + j;
  }
  return -1;
}

// ---------------------------------------------------------------- type expressions

static TypeExprPtr mk(TypeExpr e) { return std::make_shared<TypeExpr>(std::move(e)); }

static TypeExprPtr atom(TypeExpr::Kind k) {
  TypeExpr e;
  e.kind = k;
  return mk(std::move(e));
}

TypeExprPtr te_one() { return atom(TypeExpr::One); }
TypeExprPtr te_zero() { return atom(TypeExpr::Zero); }
TypeExprPtr te_nat() { return atom(TypeExpr::Nat); }
TypeExprPtr te_u(int j) {
  TypeExpr e;
  e.kind = TypeExpr::U;
  e.index = j;
  return mk(std::move(e));
}
TypeExprPtr te_pi(TypeExprPtr a, TypeExprPtr b) {
  TypeExpr e;
  e.kind = TypeExpr::Pi;
  e.a = std::move(a);
  e.b = std::move(b);
  return mk(std::move(e));
}
TypeExprPtr te_sigma(TypeExprPtr a, TypeExprPtr b) {
  TypeExpr e;
  e.kind = TypeExpr::Sigma;
  e.a = std::move(a);
  e.b = std::move(b);
  return mk(std::move(e));
}
TypeExprPtr te_id(TypeExprPtr d, Strategy lhs, Strategy rhs) {
  TypeExpr e;
  e.kind = TypeExpr::Id;
  e.a = std::move(d);
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  return mk(std::move(e));
}
TypeExprPtr te_el(Strategy code, int level) {
  TypeExpr e;
  e.kind = TypeExpr::El;
  e.code = std::move(code);
  e.el_level = level;
  return mk(std::move(e));
}
TypeExprPtr te_opaque(std::string observed) {
  TypeExpr e;
  e.kind = TypeExpr::Opaque;
  e.observed = std::move(observed);
  return mk(std::move(e));
}

int level_of(const TypeExpr& a) {
  switch (a.kind) {
    case TypeExpr::One:
    case TypeExpr::Zero:
    case TypeExpr::Nat: return 0;
    case TypeExpr::U: return a.index + 1;
    case TypeExpr::Pi:
    case TypeExpr::Sigma: return std::max(level_of(*a.a), level_of(*a.b));
    case TypeExpr::Id: return level_of(*a.a);
    case TypeExpr::El: return a.el_level;
    case TypeExpr::Opaque: return 0;
  }
  return 0;
}

bool type_expr_equal(const TypeExpr& a, const TypeExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TypeExpr::U: return a.index == b.index;
    case TypeExpr::Pi:
    case TypeExpr::Sigma:
      return type_expr_equal(*a.a, *b.a) && type_expr_equal(*a.b, *b.b);
    case TypeExpr::Id: return type_expr_equal(*a.a, *b.a);
    default: return true;
  }
}

std::string to_string(const TypeExpr& a) {
  switch (a.kind) {
    case TypeExpr::One: return "One";
    case TypeExpr::Zero: return "Zero";
    case TypeExpr::Nat: return "Nat";
    case TypeExpr::U: return "U " + std::to_string(a.index);
    case TypeExpr::Pi: return "Pi(" + to_string(*a.a) + ", " + to_string(*a.b) + ")";
    case TypeExpr::Sigma:
      return "Sigma(" + to_string(*a.a) + ", " + to_string(*a.b) + ")";
    case TypeExpr::Id: return "Id(" + to_string(*a.a) + ", _, _)";
    case TypeExpr::El: return "El(_)";
    case TypeExpr::Opaque: return "@handle(observed: " + a.observed + ")";
  }
  return "?";
}

std::string decode_report(const TypeExpr& a, int indent) {
  std::string pad(indent * 2, ' ');
  switch (a.kind) {
    case TypeExpr::Pi:
    case TypeExpr::Sigma:
      return pad + (a.kind == TypeExpr::Pi ? "Pi\n" : "Sigma\n") +
             decode_report(*a.a, indent + 1) + decode_report(*a.b, indent + 1);
    case TypeExpr::Id:
      return pad + "Id\n" + decode_report(*a.a, indent + 1) + pad + "  " +
             "@handle(observed: " + a.lhs.label + ")\n" + pad + "  " +
             "@handle(observed: " + a.rhs.label + ")\n";
    default: return pad + to_string(a) + "\n";
  }
}

// ---------------------------------------------------------------- universe membership

namespace {

bool is_atomic_code(long c, int k) {
  if (c >= 0 && c <= 2) return true;
  return c >= 6 && c - 6 < k;
}
bool is_composite_code(long c) { return c >= 3 && c <= 5; }

// moves of one component: keep those whose path starts with `prefix`,
// strip it, optionally flipping polarity
JSeq component(const JSeq& s, const Path& prefix, bool flip) {
  std::vector<bool> keep(s.size(), false);
  for (int i = 1; i <= s.size(); ++i) {
    const Path& p = s.at(i).path;
    keep[i - 1] = p.size() >= prefix.size() &&
                  std::equal(prefix.begin(), prefix.end(), p.begin());
  }
  JSeq out = project(s, keep);
  for (Move& m : out.moves) {
    m.path.erase(m.path.begin(), m.path.begin() + prefix.size());
    if (flip) m = flip_op(m);
  }
  return out;
}

bool u_contains(int k, const JSeq& s);
Game el_component_game(const JSeq& left_upos);

bool alternates_ok(const JSeq& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s.at(i).op != (i % 2 == 1 ? Op::O : Op::P)) return false;
  return true;
}

// parse a (possibly partial) universe position into a code tree;
// nullptr while the head answer is still missing
TypeExprPtr code_from_upos(const JSeq& s) {
  if (s.size() < 2) return nullptr;
  const Move& a = s.at(2);
  if (a.name.kind != Name::Nat) return nullptr;
  long c = a.name.value;
  if (c == 0) return te_one();
  if (c == 1) return te_zero();
  if (c == 2) return te_nat();
  if (c >= 6) return te_u(static_cast<int>(c - 6));
  JSeq left = component(s, {seg_left()}, false);
  TypeExprPtr lc = code_from_upos(left);
  if (!lc) return nullptr;
  if (c == 3 || c == 4) {
    JSeq body = component(s, {seg_right(), seg_cod()}, false);
    TypeExprPtr bc = code_from_upos(body);
    if (!bc) bc = te_opaque("unexplored body");
    return c == 3 ? te_pi(lc, bc) : te_sigma(lc, bc);
  }
  return te_id(lc, silent_strategy(), silent_strategy());
}

// the game played in an El component, determined by the left code
Game el_component_game(const JSeq& left_upos) {
  TypeExprPtr c = code_from_upos(left_upos);
  if (!c) return Game::undefined_game();
  try {
    return carrier_of(*c);
  } catch (const std::runtime_error&) {
    return Game::undefined_game();
  }
}

bool u_contains(int k, const JSeq& s) {
  if (s.empty()) return true;
  if (!alternates_ok(s)) return false;
  Move q = mv(Name::q(), Op::O, Qa::Q);
  if (!(s.at(1) == q && s.justifier(1) == 0)) return false;
  if (s.size() == 1) return true;
  const Move& a = s.at(2);
  if (!(a.path.empty() && a.op == Op::P && a.qa == Qa::A &&
        a.name.kind == Name::Nat && s.justifier(2) == 1))
    return false;
  long c = a.name.value;
  if (is_atomic_code(c, k)) return s.size() == 2;
  if (!is_composite_code(c)) return false;
  // every later move lives in one of the inner components
  JSeq left = component(s, {seg_left()}, false);
  int accounted = 2 + left.size();
  if (!u_contains(k, left)) return false;
  if (c == 3 || c == 4) {  // Pi / Sigma: Sigma(U, El => U)
    JSeq body = component(s, {seg_right(), seg_cod()}, false);
    accounted += body.size();
    if (!u_contains(k, body)) return false;
    std::set<int> threads;
    for (const Move& m : s.moves)
      if (m.path.size() >= 3 && m.path[0].kind == Seg::Right &&
          m.path[1].kind == Seg::Dom && m.path[2].kind == Seg::Bang)
        threads.insert(m.path[2].index);
    if (!threads.empty()) {
      Game elg = el_component_game(left);
      if (elg.undefined) return false;
      for (int t : threads) {
        JSeq th = component(s, {seg_right(), seg_dom(), seg_bang(t)}, true);
        accounted += th.size();
        if (!elg.contains(th)) return false;
      }
    }
  } else {  // Id: Sigma(U, El & El) -- at most one endpoint explored
    JSeq l = component(s, {seg_right(), seg_left()}, false);
    JSeq r = component(s, {seg_right(), seg_right()}, false);
    if (!l.empty() && !r.empty()) return false;
    const JSeq& used = l.empty() ? r : l;
    accounted += used.size();
    if (!used.empty()) {
      Game elg = el_component_game(left);
      if (elg.undefined || !elg.contains(used)) return false;
    }
  }
  return accounted == s.size();
}

}  // namespace

int position_level(const JSeq& pos) {
  int lvl = 0;
  for (const Move& m : pos.moves) {
    int d = 0;
    size_t i = 0;
    const Path& p = m.path;
    while (i < p.size()) {
      if (p[i].kind == Seg::Left) {
        ++d;
        ++i;
      } else if (i + 1 < p.size() && p[i].kind == Seg::Right &&
                 p[i + 1].kind == Seg::Cod) {
        ++d;
        i += 2;
      } else {
        ++d;
        break;  // an El component or endpoint: one more unfolding, then stop
      }
    }
    lvl = std::max(lvl, d);
  }
  return lvl;
}

Game universe_carrier(int k) {
  Game g;
  Move q = mv(Name::q(), Op::O, Qa::Q);
  g.arena.has_move = [](const Move& m) {
    if (m.path.empty())
      return (m.qa == Qa::Q && m.name.kind == Name::Query) ||
             (m.qa == Qa::A && m.name.kind == Name::Nat);
    return true;  // inner components are validated by containment
  };
  g.arena.enables = [q](const std::optional<Move>& p, const Move& m) {
    if (!p) return m == q;
    return !(m == q);
  };
  g.arena.initials = [q](int) { return std::vector<Move>{q}; };
  g.arena.enabled_from = [k](const Move& m, int bound) {
    std::vector<Move> out;
    // root or inner code question: offer the code alphabet
    if (m.qa == Qa::Q && m.name.kind == Name::Query) {
      for (long c = 0; c <= 5; ++c)
        out.push_back(mv(Name::nat(c), Op::P, Qa::A, m.path));
      for (int j = 0; j < k; ++j)
        out.push_back(mv(Name::nat(6 + j), Op::P, Qa::A, m.path));
      // numerals for El components
      for (long n = 0; n < bound; ++n)
        out.push_back(mv(Name::nat(n), Op::P, Qa::A, m.path));
    }
    if (m.qa == Qa::A && m.name.kind == Name::Nat && is_composite_code(m.name.value)) {
      auto sub = [&](std::initializer_list<Seg> segs) {
        Path p = m.path;
        p.insert(p.end(), segs.begin(), segs.end());
        out.push_back(mv(Name::q(), Op::O, Qa::Q, p));
      };
      sub({seg_left()});
      if (m.name.value == 5) {
        sub({seg_right(), seg_left()});
        sub({seg_right(), seg_right()});
      } else {
        sub({seg_right(), seg_cod()});
        for (int t = 0; t < bound; ++t) {
          Path p = m.path;
          p.push_back(seg_right());
          p.push_back(seg_dom());
          p.push_back(seg_bang(t));
          out.push_back(mv(Name::q(), Op::P, Qa::Q, p));
        }
      }
    }
    return out;
  };
  g.contains = [k](const JSeq& s) { return u_contains(k, s); };
  g.well_opened = true;
  g.well_founded = false;
  return g;
}

PGame universe_game(int k) {
  return constant_pgame(universe_carrier(k), {silent_strategy()});
}

// ---------------------------------------------------------------- carriers

Game carrier_of(const TypeExpr& a) {
  switch (a.kind) {
    case TypeExpr::One: return terminal_game();
    case TypeExpr::Zero: return empty_flat_game();
    case TypeExpr::Nat: return nat_game();
    case TypeExpr::U: return universe_carrier(a.index);
    case TypeExpr::Pi: return implication_game(carrier_of(*a.a), carrier_of(*a.b));
    case TypeExpr::Sigma: return product_game(carrier_of(*a.a), carrier_of(*a.b));
    case TypeExpr::Id: return tick_game();
    case TypeExpr::El: {
      TypeExprPtr t = decode_probe(a.code, 64);
      if (t->kind == TypeExpr::Opaque) throw MalformedCode("opaque El payload");
      return carrier_of(*t);
    }
    case TypeExpr::Opaque: throw UnsupportedExpr("opaque type expression");
  }
  throw UnsupportedExpr("unknown constructor");
}

// ---------------------------------------------------------------- interpretation

DependentPGame interp(const PGame& ctx, const TypeExpr& a, const EnumConfig& cfg) {
  switch (a.kind) {
    case TypeExpr::One: return atomic_one(ctx);
    case TypeExpr::Zero: return atomic_zero(ctx);
    case TypeExpr::Nat: return atomic_nat(ctx);
    case TypeExpr::U: return constant_dep(ctx, universe_game(a.index));
    case TypeExpr::Pi:
    case TypeExpr::Sigma: {
      DependentPGame A = interp(ctx, *a.a, cfg);
      DependentPGame B = interp(comprehension(ctx, A, cfg), *a.b, cfg);
      return a.kind == TypeExpr::Pi ? pi_former(A, B, cfg) : sigma_former(A, B, cfg);
    }
    case TypeExpr::Id: {
      DependentPGame D = interp(ctx, *a.a, cfg);
      Term l{ctx, D, a.lhs}, r{ctx, D, a.rhs};
      return id_former(D, l, r, cfg);
    }
    case TypeExpr::El: {
      Term psi{ctx, constant_dep(ctx, universe_game(a.el_level)), a.code};
      return el(ctx, psi, cfg);
    }
    case TypeExpr::Opaque: throw UnsupportedExpr("opaque type expression");
  }
  throw UnsupportedExpr("unknown constructor");
}

// ---------------------------------------------------------------- En

namespace {

// A composite code strategy routes the play to per-component
// sub-strategies: universe moves by path prefix, shared context threads
// by ownership, established deterministically by replay.
struct Route {
  Path prefix;  // under Cod
  Strategy sub;
};

struct Router {
  long head;  // the code answered to the opening question
  std::vector<Route> routes;

  std::optional<std::pair<Move, int>> next(const JSeq& pos) const {
    Move q0 = mv(Name::q(), Op::O, Qa::Q, {seg_cod()});
    if (pos.size() == 1 && pos.at(1) == q0)
      return std::make_pair(mv(Name::nat(head), Op::P, Qa::A, {seg_cod()}), 1);
    if (pos.size() < 3 || pos.size() % 2 == 0) return std::nullopt;

    size_t nr = routes.size();
    std::vector<JSeq> sub(nr);                     // per-route sub-position
    std::vector<std::vector<int>> g2s(nr);         // global idx -> sub idx (0 = none)
    for (auto& v : g2s) v.assign(pos.size() + 1, 0);
    std::vector<std::vector<int>> th(nr);          // route-local -> global thread
    std::vector<int> owner(pos.size() + 1, -1);    // owner route of each move

    auto route_of_cod = [&](const Move& m) -> int {
      for (size_t r = 0; r < nr; ++r) {
        const Path& p = routes[r].prefix;
        if (m.path.size() >= p.size() + 1 && m.path[0].kind == Seg::Cod &&
            std::equal(p.begin(), p.end(), m.path.begin() + 1))
          return static_cast<int>(r);
      }
      return -1;
    };
    auto to_sub = [&](int r, Move m) -> std::optional<Move> {
      if (m.path.empty()) return std::nullopt;
      if (m.path[0].kind == Seg::Cod) {
        const Path& p = routes[r].prefix;
        Path np{seg_cod()};
        np.insert(np.end(), m.path.begin() + 1 + p.size(), m.path.end());
        m.path = np;
        return m;
      }
      // Dom.Bang(G).rest -> Dom.Bang(local).rest
      if (m.path.size() < 2 || m.path[1].kind != Seg::Bang) return std::nullopt;
      int g = m.path[1].index;
      auto& tm = th[r];
      auto it = std::find(tm.begin(), tm.end(), g);
      if (it == tm.end()) return std::nullopt;
      m.path[1] = seg_bang(static_cast<int>(it - tm.begin()));
      return m;
    };

    int last_owner = -1;
    for (int i = 3; i <= pos.size(); ++i) {
      const Move& m = pos.at(i);
      int r;
      if (i % 2 == 1) {  // opponent move
        if (m.path.empty()) return std::nullopt;
        if (m.path[0].kind == Seg::Cod) {
          r = route_of_cod(m);
        } else {
          int j = pos.justifier(i);
          r = (j >= 1 && j <= pos.size()) ? owner[j] : -1;
        }
      } else {  // our own earlier response: same route as the move it answers
        r = last_owner;
        if (r >= 0 && !m.path.empty() && m.path[0].kind == Seg::Dom &&
            m.path.size() >= 2 && m.path[1].kind == Seg::Bang) {
          int g = m.path[1].index;
          if (std::find(th[r].begin(), th[r].end(), g) == th[r].end())
            th[r].push_back(g);
        }
      }
      if (r < 0) return std::nullopt;
      owner[i] = r;
      last_owner = r;
      auto sm = to_sub(r, m);
      if (!sm) return std::nullopt;
      int gj = pos.justifier(i);
      int sj = (gj >= 1 && owner[gj] == r) ? g2s[r][gj] : 0;
      sub[r] = sub[r].extended(*sm, sj);
      g2s[r][i] = sub[r].size();
    }

    int r = owner[pos.size()];
    if (r < 0) return std::nullopt;
    auto resp = routes[r].sub.next(sub[r]);
    if (!resp) return std::nullopt;
    Move out = resp->first;
    if (!out.path.empty() && out.path[0].kind == Seg::Cod) {
      Path np{seg_cod()};
      np.insert(np.end(), routes[r].prefix.begin(), routes[r].prefix.end());
      np.insert(np.end(), out.path.begin() + 1, out.path.end());
      out.path = np;
    } else if (!out.path.empty() && out.path[0].kind == Seg::Dom &&
               out.path.size() >= 2 && out.path[1].kind == Seg::Bang) {
      int l = out.path[1].index;
      int g;
      if (l < static_cast<int>(th[r].size())) {
        g = th[r][l];
      } else {
        std::set<int> used;
        for (const Move& m : pos.moves)
          if (!m.path.empty() && m.path[0].kind == Seg::Dom &&
              m.path.size() >= 2 && m.path[1].kind == Seg::Bang)
            used.insert(m.path[1].index);
        g = 0;
        while (used.count(g)) ++g;
      }
      out.path[1] = seg_bang(g);
    } else {
      return std::nullopt;
    }
    int sj = resp->second;
    int gj = 0;
    if (sj >= 1)
      for (int i = 1; i <= pos.size(); ++i)
        if (owner[i] == r && g2s[r][i] == sj) gj = i;
    if (sj >= 1 && gj == 0) return std::nullopt;
    if (sj == 0) gj = 2;  // component initials hang off the code answer
    return std::make_pair(out, gj);
  }
};

Strategy atomic_code_strategy(long c, std::string label) {
  Strategy s;
  s.label = std::move(label);
  Move q0 = mv(Name::q(), Op::O, Qa::Q, {seg_cod()});
  Move a = mv(Name::nat(c), Op::P, Qa::A, {seg_cod()});
  s = table_strategy({JSeq{}, JSeq{}.extended(q0, 0).extended(a, 1)}, s.label);
  return s;
}

}  // namespace

Term en(const PGame& ctx, const TypeExpr& a) {
  int k = level_of(a);
  Term t;
  t.ctx = ctx;
  t.ty = constant_dep(ctx, universe_game(k));
  switch (a.kind) {
    case TypeExpr::One:
    case TypeExpr::Zero:
    case TypeExpr::Nat:
      t.strat = atomic_code_strategy(sharp(a.kind == TypeExpr::One ? Code::One
                                           : a.kind == TypeExpr::Zero
                                               ? Code::Zero
                                               : Code::Nat),
                                     "en:" + to_string(a));
      return t;
    case TypeExpr::U:
      t.strat = atomic_code_strategy(sharp(Code::U, a.index), "en:" + to_string(a));
      return t;
    case TypeExpr::Pi:
    case TypeExpr::Sigma: {
      if (a.b->uses_var)
        throw UnsupportedExpr("binder bodies using the bound variable");
      auto router = std::make_shared<Router>();
      router->head = sharp(a.kind == TypeExpr::Pi ? Code::Pi : Code::Sigma);
      router->routes.push_back({{seg_left()}, en(ctx, *a.a).strat});
      router->routes.push_back({{seg_right(), seg_cod()}, en(ctx, *a.b).strat});
      t.strat.label = "en:" + to_string(a);
      t.strat.next = [router](const JSeq& p) { return router->next(p); };
      return t;
    }
    case TypeExpr::Id: {
      auto router = std::make_shared<Router>();
      router->head = sharp(Code::Id);
      router->routes.push_back({{seg_left()}, en(ctx, *a.a).strat});
      router->routes.push_back({{seg_right(), seg_left()}, a.lhs});
      router->routes.push_back({{seg_right(), seg_right()}, a.rhs});
      t.strat.label = "en:" + to_string(a);
      t.strat.next = [router](const JSeq& p) { return router->next(p); };
      return t;
    }
    default: throw UnsupportedExpr("no code for " + to_string(a));
  }
}

// ---------------------------------------------------------------- El

namespace {

// view a universe-point strategy through an inner-component lens: the
// prelude q . code is replayed, inner moves carry `prefix`
Strategy sub_point(const Strategy& point, long code, Path prefix, bool flip) {
  Strategy pc = point;
  Strategy s;
  s.label = point.label + "/" + to_string(prefix);
  s.next = [pc, code, prefix, flip](const JSeq& pos)
      -> std::optional<std::pair<Move, int>> {
    JSeq global;
    global = global.extended(mv(Name::q(), Op::O, Qa::Q), 0);
    global = global.extended(mv(Name::nat(code), Op::P, Qa::A), 1);
    for (int i = 1; i <= pos.size(); ++i) {
      Move m = pos.at(i);
      if (flip) m = flip_op(m);
      m.path.insert(m.path.begin(), prefix.begin(), prefix.end());
      int j = pos.justifier(i);
      global = global.extended(m, j == 0 ? 2 : j + 2);
    }
    auto r = pc.next(global);
    if (!r) return std::nullopt;
    Move out = r->first;
    if (out.path.size() < prefix.size() ||
        !std::equal(prefix.begin(), prefix.end(), out.path.begin()))
      return std::nullopt;
    out.path.erase(out.path.begin(), out.path.begin() + prefix.size());
    if (flip) out = flip_op(out);
    int j = r->second <= 2 ? 0 : r->second - 2;
    return std::make_pair(out, j);
  };
  return s;
}

std::optional<long> probe_head(const Strategy& point) {
  JSeq s = JSeq{}.extended(mv(Name::q(), Op::O, Qa::Q), 0);
  auto r = point.next(s);
  if (!r || r->first.name.kind != Name::Nat || !r->first.path.empty())
    return std::nullopt;
  return r->first.name.value;
}

std::string observe(const Strategy& point) {
  for (Path p : {Path{}, Path{seg_cod()}}) {
    JSeq s = JSeq{}.extended(mv(Name::q(), Op::O, Qa::Q, p), 0);
    auto r = point.next(s);
    if (r) return "q->" + to_string(r->first.name);
  }
  return "silent";
}

}  // namespace

PGame decode_point(const Strategy& point, const EnumConfig& cfg) {
  auto head = probe_head(point);
  if (!head) throw MalformedCode("no code answer to the opening question");
  long c = *head;
  switch (c) {
    case 0: return pgame_terminal();
    case 1: return pgame_empty();
    case 2: return pgame_nat();
    default: break;
  }
  if (c >= 6) return universe_game(static_cast<int>(c - 6));
  Strategy left = sub_point(point, c, {seg_left()}, false);
  PGame dom = decode_point(left, cfg);
  if (c == 5) {  // identity code: compare the two endpoint strategies
    Strategy d1 = sub_point(point, c, {seg_right(), seg_left()}, false);
    Strategy d2 = sub_point(point, c, {seg_right(), seg_right()}, false);
    EqVerdict v = bounded_equal(dom.carrier, d1, d2, cfg);
    Game value = v == EqVerdict::EqualUpTo ? tick_game() : empty_flat_game();
    PGame p;
    p.carrier = tick_game();
    p.family = [value](const Strategy&) { return value; };
    p.catalog = {silent_strategy(), check_point()};
    return p;
  }
  // Pi / Sigma: the right component is the family code El(dom) => U
  Strategy pc = point;
  auto fib_at = [pc, c, cfg](const Strategy& b0) -> PGame {
    // answer the code's variable probes from b0 while reading the body code
    Strategy b0c = b0;
    Strategy body;
    body.label = "body";
    body.next = [pc, c, b0c](const JSeq& pos)
        -> std::optional<std::pair<Move, int>> {
      JSeq global;
      global = global.extended(mv(Name::q(), Op::O, Qa::Q), 0);
      global = global.extended(mv(Name::nat(c), Op::P, Qa::A), 1);
      std::vector<int> l2g;  // body-local index -> global index
      Path pre{seg_right(), seg_cod()};
      // replay local moves in order; after each local O move run the code,
      // answering its variable probes from b0, until it speaks in the body
      for (int i = 1; i <= pos.size(); i += 2) {
        Move m = pos.at(i);
        m.path.insert(m.path.begin(), pre.begin(), pre.end());
        int j = pos.justifier(i);
        global = global.extended(m, j == 0 ? 2 : l2g[j - 1]);
        l2g.push_back(global.size());
        for (;;) {
          auto r = pc.next(global);
          if (!r) return std::nullopt;
          Move out = r->first;
          if (out.path.size() >= 2 && out.path[0].kind == Seg::Right &&
              out.path[1].kind == Seg::Cod) {
            out.path.erase(out.path.begin(), out.path.begin() + 2);
            int gj = r->second;
            int lj = 0;
            for (size_t x = 0; x < l2g.size(); ++x)
              if (l2g[x] == gj) lj = static_cast<int>(x) + 1;
            if (i == pos.size()) return std::make_pair(out, lj);
            // intermediate turn: must match the recorded local P move
            if (!(out == pos.at(i + 1))) return std::nullopt;
            Move gm = pos.at(i + 1);
            gm.path.insert(gm.path.begin(), pre.begin(), pre.end());
            global = global.extended(gm, gj);
            l2g.push_back(global.size());
            break;
          }
          // a variable probe: answer it from b0 and continue
          if (!(out.path.size() >= 3 && out.path[0].kind == Seg::Right &&
                out.path[1].kind == Seg::Dom && out.path[2].kind == Seg::Bang))
            return std::nullopt;
          global = global.extended(out, r->second);
          Path th{out.path[0], out.path[1], out.path[2]};
          JSeq local = component(global, th, true);
          auto ans = b0c.next(local);
          if (!ans) return std::nullopt;
          Move am = flip_op(ans->first);
          am.path.insert(am.path.begin(), th.begin(), th.end());
          global = global.extended(am, global.size());
        }
      }
      return std::nullopt;
    };
    return decode_point(body, cfg);
  };
  DependentPGame fib;
  fib.base = dom;
  fib.at = fib_at;
  fib.carrier = fib_at(silent_strategy()).carrier;
  EnumConfig cfg2 = cfg;
  if (c == 3) return pi(dom, fib, false, cfg2);
  return sigma(dom, fib, cfg2);
}

DependentPGame el(const PGame& ctx, const Term& psi, const EnumConfig& cfg) {
  DependentPGame d;
  d.base = ctx;
  Strategy s = psi.strat;
  EnumConfig c = cfg;
  d.at = [s, c](const Strategy& g0) { return decode_point(comp_point(s, g0), c); };
  Strategy probe = ctx.catalog.empty() ? silent_strategy() : ctx.catalog.front();
  d.carrier = d.at(probe).carrier;
  return d;
}

TypeExprPtr decode_probe(const Strategy& point, int budget) {
  if (budget <= 0) throw ProbeBudgetExceeded("decode probe budget exhausted");
  auto head = probe_head(point);
  if (!head) return te_opaque(observe(point));
  long c = *head;
  switch (c) {
    case 0: return te_one();
    case 1: return te_zero();
    case 2: return te_nat();
    default: break;
  }
  if (c >= 6) return te_u(static_cast<int>(c - 6));
  if (!is_composite_code(c)) return te_opaque("answer " + std::to_string(c));
  TypeExprPtr left = decode_probe(sub_point(point, c, {seg_left()}, false),
                                  budget - 2);
  if (c == 5) {
    Strategy d1 = sub_point(point, c, {seg_right(), seg_left()}, false);
    Strategy d2 = sub_point(point, c, {seg_right(), seg_right()}, false);
    d1.label = observe(d1);
    d2.label = observe(d2);
    return te_id(left, d1, d2);
  }
  TypeExprPtr body = decode_probe(
      sub_point(point, c, {seg_right(), seg_cod()}, false), budget - 2);
  return c == 3 ? te_pi(left, body) : te_sigma(left, body);
}

Term cumulate(const Term& psi, int k) {
  Term t;
  t.ctx = psi.ctx;
  t.ty = constant_dep(psi.ctx, universe_game(k + 1));
  t.strat = psi.strat;
  return t;
}

}  // namespace gsm
