#include "gsmltt/kernel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace gsm {

// ---------------------------------------------------------------- printing

std::string to_string(const Seg& s) {
  switch (s.kind) {
    case Seg::Left: return "Left";
    case Seg::Right: return "Right";
    case Seg::Dom: return "Dom";
    case Seg::Cod: return "Cod";
    case Seg::Bang: return "Bang" + std::to_string(s.index);
  }
  return "?";
}

std::string to_string(const Path& p) {
  if (p.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += to_string(p[i]);
  }
  return out;
}

std::string to_string(const Name& n) {
  switch (n.kind) {
    case Name::Query: return "q";
    case Name::Nat: return std::to_string(n.value);
    case Name::Check: return "chk";
  }
  return "?";
}

std::string to_string(const Move& m) {
  return to_string(m.path) + ":" + to_string(m.name) + ":" +
         (m.op == Op::O ? "O" : "P") + (m.qa == Qa::Q ? "Q" : "A");
}

void JSeq::validate() const {
  if (moves.size() != just.size())
    throw MalformedPointer("move/pointer length mismatch");
  for (int i = 1; i <= size(); ++i) {
    int j = justifier(i);
    if (j < 0 || j >= i)
      throw MalformedPointer("pointer out of range at occurrence " + std::to_string(i));
  }
}

std::string serialize(const JSeq& s) {
  std::ostringstream out;
  for (int i = 1; i <= s.size(); ++i) {
    const Move& m = s.at(i);
    out << i << '\t' << to_string(m.path) << '\t' << to_string(m.name) << '\t'
        << (m.op == Op::O ? "O" : "P") << '\t' << (m.qa == Qa::Q ? "Q" : "A")
        << '\t' << s.justifier(i) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- legality

bool pointers_respect_arena(const Arena& a, const JSeq& s) {
  for (int i = 1; i <= s.size(); ++i) {
    const Move& m = s.at(i);
    if (!a.has_move(m)) return false;
    int j = s.justifier(i);
    if (j == 0) {
      if (!a.enables(std::nullopt, m)) return false;
    } else {
      if (!a.enables(s.at(j), m)) return false;
    }
  }
  return true;
}

bool alternates(const JSeq& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s.at(i).op != (i % 2 == 1 ? Op::O : Op::P)) return false;
  return true;
}

// Indices of the P-view (or O-view) of the prefix of s ending at `upto`.
static std::vector<int> view_indices(const JSeq& s, int upto, bool p_view) {
  std::vector<int> keep;
  Op walker = p_view ? Op::P : Op::O;  // moves we step over one at a time
  int i = upto;
  while (i >= 1) {
    keep.push_back(i);
    const Move& m = s.at(i);
    if (m.op == walker) {
      --i;
    } else if (s.justifier(i) == 0) {
      break;
    } else {
      int j = s.justifier(i);
      keep.push_back(j);
      i = j - 1;
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return keep;
}

bool satisfies_visibility(const JSeq& s) {
  for (int i = 2; i <= s.size(); ++i) {
    int j = s.justifier(i);
    if (j == 0) continue;
    auto vis = view_indices(s, i - 1, s.at(i).op == Op::P);
    if (!std::binary_search(vis.begin(), vis.end(), j)) return false;
  }
  return true;
}

bool is_legal(const Arena& a, const JSeq& s) {
  try {
    s.validate();
  } catch (const MalformedPointer&) {
    return false;
  }
  return pointers_respect_arena(a, s) && alternates(s) && satisfies_visibility(s);
}

// ---------------------------------------------------------------- projection

JSeq project(const JSeq& s, const std::vector<bool>& keep, std::vector<int>& kept_indices) {
  JSeq t;
  kept_indices.clear();
  std::vector<int> renum(s.size() + 1, 0);
  for (int i = 1; i <= s.size(); ++i) {
    if (!keep[i - 1]) continue;
    int j = s.justifier(i);
    while (j > 0 && !keep[j - 1]) j = s.justifier(j);
    t.moves.push_back(s.at(i));
    t.just.push_back(j > 0 ? renum[j] : 0);
    renum[i] = t.size();
    kept_indices.push_back(i);
  }
  return t;
}

JSeq project(const JSeq& s, const std::vector<bool>& keep) {
  std::vector<int> scratch;
  return project(s, keep, scratch);
}

JSeq project(const JSeq& s, const std::function<bool(const Move&, int)>& keep) {
  std::vector<bool> mask(s.size());
  for (int i = 1; i <= s.size(); ++i) mask[i - 1] = keep(s.at(i), i);
  return project(s, mask);
}

static JSeq view(const JSeq& s, bool p_view) {
  if (s.empty()) return {};
  auto idx = view_indices(s, s.size(), p_view);
  std::vector<bool> mask(s.size(), false);
  for (int i : idx) mask[i - 1] = true;
  return project(s, mask);
}

JSeq pview(const JSeq& s) { return view(s, true); }

std::vector<int> pview_indices(const JSeq& s) {
  if (s.empty()) return {};
  return view_indices(s, s.size(), true);
}
JSeq oview(const JSeq& s) { return view(s, false); }

std::vector<int> initial_indices(const JSeq& s) {
  std::vector<int> out;
  for (int i = 1; i <= s.size(); ++i)
    if (s.justifier(i) == 0) out.push_back(i);
  return out;
}

std::vector<bool> hereditary_mask(const JSeq& s, int init_index) {
  if (init_index < 1 || init_index > s.size() || s.justifier(init_index) != 0)
    throw NotInitial("occurrence " + std::to_string(init_index) + " is not initial");
  std::vector<bool> mask(s.size(), false);
  for (int i = 1; i <= s.size(); ++i) {
    int j = i;
    while (s.justifier(j) != 0) j = s.justifier(j);
    mask[i - 1] = (j == init_index);
  }
  return mask;
}

JSeq hereditary_thread(const JSeq& s, int init_index) {
  return project(s, hereditary_mask(s, init_index));
}

bool has_prefix(const Move& m, Seg s) { return !m.path.empty() && m.path.front() == s; }

JSeq strip_component(const JSeq& j, Seg s, bool flip_polarity) {
  JSeq t = project(j, [&](const Move& m, int) { return has_prefix(m, s); });
  for (Move& m : t.moves) {
    m.path.erase(m.path.begin());
    if (flip_polarity) m.op = flip(m.op);
  }
  return t;
}

// ---------------------------------------------------------------- arena checks

std::vector<std::string> check_arena(const Arena& a, int sample_bound) {
  std::vector<std::string> report;
  std::vector<Move> frontier = a.initials(sample_bound);
  for (const Move& m : frontier) {
    if (!a.has_move(m))
      report.push_back("initial enumerator emits foreign move " + to_string(m));
    if (!a.enables(std::nullopt, m))
      report.push_back("initial enumerator disagrees with oracle on " + to_string(m));
    if (m.op != Op::O || m.qa != Qa::Q)
      report.push_back("initial move is not an O-question: " + to_string(m));
  }
  // Two levels of descendants is enough to exercise E2/E3 on the samples.
  std::set<Move> seen(frontier.begin(), frontier.end());
  for (int depth = 0; depth < 2; ++depth) {
    std::vector<Move> next;
    for (const Move& m : frontier)
      for (const Move& n : a.enabled_from(m, sample_bound)) {
        if (!a.has_move(n))
          report.push_back("enumerator emits foreign move " + to_string(n));
        if (!a.enables(m, n))
          report.push_back("enumerator disagrees with oracle: " + to_string(m) +
                           " |- " + to_string(n));
        if (n.qa == Qa::A && m.qa != Qa::Q)
          report.push_back("answer enabled by non-question: " + to_string(n));
        if (n.op == m.op)
          report.push_back("enabling preserves polarity: " + to_string(m) +
                           " |- " + to_string(n));
        if (a.enables(std::nullopt, n))
          report.push_back("initial move has an enabler: " + to_string(n));
        if (seen.insert(n).second) next.push_back(n);
      }
    frontier = std::move(next);
  }
  return report;
}

// ---------------------------------------------------------------- games

Game Game::undefined_game() {
  Game g;
  g.undefined = true;
  g.arena.has_move = [](const Move&) { return false; };
  g.arena.enables = [](const std::optional<Move>&, const Move&) { return false; };
  g.arena.initials = [](int) { return std::vector<Move>{}; };
  g.arena.enabled_from = [](const Move&, int) { return std::vector<Move>{}; };
  g.contains = [](const JSeq&) -> bool {
    throw UndefinedOperand("membership query on the undefined game");
  };
  return g;
}

std::vector<std::pair<Move, int>> extensions(const Game& g, const JSeq& s, int branch_bound) {
  Op need = (s.size() % 2 == 0) ? Op::O : Op::P;
  std::set<std::pair<Move, int>> cands;
  for (const Move& m : g.arena.initials(branch_bound))
    if (m.op == need) cands.insert({m, 0});
  for (int j = 1; j <= s.size(); ++j)
    for (const Move& m : g.arena.enabled_from(s.at(j), branch_bound))
      if (m.op == need) cands.insert({m, j});
  if (g.ext_hint)
    for (const auto& [m, j] : g.ext_hint(s))
      if (m.op == need) cands.insert({m, j});
  std::vector<std::pair<Move, int>> out;
  for (const auto& [m, j] : cands)
    if (g.contains(s.extended(m, j))) out.push_back({m, j});
  return out;
}

Game flat_game(const FlatSpec& spec) {
  Game g;
  auto spec_copy = std::make_shared<FlatSpec>(spec);
  Move q = mv(Name::q(), Op::O, Qa::Q);
  auto is_answer = [spec_copy](const Name& n) {
    if (spec_copy->all_naturals && n.kind == Name::Nat) return true;
    return std::find(spec_copy->answers.begin(), spec_copy->answers.end(), n) !=
           spec_copy->answers.end();
  };
  g.arena.has_move = [q, is_answer](const Move& m) {
    if (m == q) return true;
    return m.path.empty() && m.op == Op::P && m.qa == Qa::A && is_answer(m.name);
  };
  g.arena.enables = [q, is_answer](const std::optional<Move>& p, const Move& m) {
    if (!p) return m == q;
    return *p == q && m.path.empty() && m.op == Op::P && m.qa == Qa::A &&
           is_answer(m.name);
  };
  g.arena.initials = [q](int) { return std::vector<Move>{q}; };
  g.arena.enabled_from = [q, spec_copy](const Move& m, int bound) {
    std::vector<Move> out;
    if (!(m == q)) return out;
    std::set<Name> names(spec_copy->answers.begin(), spec_copy->answers.end());
    if (spec_copy->all_naturals)
      for (long n = 0; n < bound; ++n) names.insert(Name::nat(n));
    for (const Name& n : names) out.push_back(mv(n, Op::P, Qa::A));
    return out;
  };
  g.contains = [q, is_answer](const JSeq& s) {
    if (s.empty()) return true;
    if (!(s.at(1) == q && s.justifier(1) == 0)) return false;
    if (s.size() == 1) return true;
    if (s.size() > 2) return false;
    const Move& a = s.at(2);
    return s.justifier(2) == 1 && a.path.empty() && a.op == Op::P &&
           a.qa == Qa::A && is_answer(a.name);
  };
  g.well_opened = true;
  g.well_founded = true;
  return g;
}

Game terminal_game() {
  Game g;
  g.arena.has_move = [](const Move&) { return false; };
  g.arena.enables = [](const std::optional<Move>&, const Move&) { return false; };
  g.arena.initials = [](int) { return std::vector<Move>{}; };
  g.arena.enabled_from = [](const Move&, int) { return std::vector<Move>{}; };
  g.contains = [](const JSeq& s) { return s.empty(); };
  g.well_opened = true;
  g.well_founded = true;
  return g;
}

Game nat_game() {
  FlatSpec s;
  s.all_naturals = true;
  return flat_game(s);
}

Game tick_game() {
  FlatSpec s;
  s.answers = {Name::check()};
  return flat_game(s);
}

Game empty_flat_game() { return flat_game(FlatSpec{}); }

// Shared arena of two retagged components.
static Arena pair_arena(const Arena& l, const Arena& r) {
  auto strip = [](Move m) {
    m.path.erase(m.path.begin());
    return m;
  };
  Arena a;
  a.has_move = [l, r, strip](const Move& m) {
    if (has_prefix(m, seg_left())) return l.has_move(strip(m));
    if (has_prefix(m, seg_right())) return r.has_move(strip(m));
    return false;
  };
  a.enables = [l, r, strip](const std::optional<Move>& p, const Move& m) {
    bool left = has_prefix(m, seg_left());
    if (!left && !has_prefix(m, seg_right())) return false;
    const Arena& c = left ? l : r;
    if (!p) return c.enables(std::nullopt, strip(m));
    if (has_prefix(*p, m.path.front()) == false) return false;
    return c.enables(strip(*p), strip(m));
  };
  a.initials = [l, r](int bound) {
    std::vector<Move> out;
    for (const Move& m : l.initials(bound)) out.push_back(retag(m, seg_left()));
    for (const Move& m : r.initials(bound)) out.push_back(retag(m, seg_right()));
    return out;
  };
  a.enabled_from = [l, r, strip](const Move& m, int bound) {
    std::vector<Move> out;
    bool left = has_prefix(m, seg_left());
    if (!left && !has_prefix(m, seg_right())) return out;
    const Arena& c = left ? l : r;
    Seg tag = m.path.front();
    for (const Move& n : c.enabled_from(strip(m), bound)) out.push_back(retag(n, tag));
    return out;
  };
  return a;
}

Game tensor_game(const Game& g, const Game& h) {
  if (g.undefined || h.undefined) throw UndefinedOperand("tensor of undefined game");
  Game t;
  t.arena = pair_arena(g.arena, h.arena);
  Arena a = t.arena;
  auto gc = g.contains, hc = h.contains;
  t.contains = [a, gc, hc](const JSeq& s) {
    return is_legal(a, s) && gc(strip_component(s, seg_left(), false)) &&
           hc(strip_component(s, seg_right(), false));
  };
  t.well_opened = false;
  t.well_founded = g.well_founded && h.well_founded;
  return t;
}

Game product_game(const Game& g, const Game& h) {
  if (g.undefined || h.undefined) throw UndefinedOperand("product of undefined game");
  Game t;
  t.arena = pair_arena(g.arena, h.arena);
  Arena a = t.arena;
  auto gc = g.contains, hc = h.contains;
  t.contains = [a, gc, hc](const JSeq& s) {
    if (!is_legal(a, s)) return false;
    bool any_l = false, any_r = false;
    for (const Move& m : s.moves) (has_prefix(m, seg_left()) ? any_l : any_r) = true;
    if (any_l && any_r) return false;
    return gc(strip_component(s, seg_left(), false)) &&
           hc(strip_component(s, seg_right(), false));
  };
  t.well_opened = g.well_opened && h.well_opened;
  t.well_founded = g.well_founded && h.well_founded;
  return t;
}

Game limp_game(const Game& g, const Game& h) {
  if (g.undefined || h.undefined)
    throw UndefinedOperand("linear implication over an undefined game");
  Arena dom = g.arena, cod = h.arena;
  auto strip = [](Move m) {
    m.path.erase(m.path.begin());
    return m;
  };
  auto strip_flip = [strip](Move m) { return flip_op(strip(std::move(m))); };
  Arena a;
  a.has_move = [dom, cod, strip, strip_flip](const Move& m) {
    if (has_prefix(m, seg_cod())) return cod.has_move(strip(m));
    if (has_prefix(m, seg_dom())) return dom.has_move(strip_flip(m));
    return false;
  };
  a.enables = [dom, cod, strip, strip_flip](const std::optional<Move>& p, const Move& m) {
    if (has_prefix(m, seg_cod())) {
      if (!p) return cod.enables(std::nullopt, strip(m));
      return has_prefix(*p, seg_cod()) && cod.enables(strip(*p), strip(m));
    }
    if (!has_prefix(m, seg_dom())) return false;
    Move m0 = strip_flip(m);
    if (dom.enables(std::nullopt, m0))
      // domain initials hang off codomain initials
      return p && has_prefix(*p, seg_cod()) && cod.enables(std::nullopt, strip(*p));
    if (!p || !has_prefix(*p, seg_dom())) return false;
    return dom.enables(strip_flip(*p), m0);
  };
  a.initials = [cod](int bound) {
    std::vector<Move> out;
    for (const Move& m : cod.initials(bound)) out.push_back(retag(m, seg_cod()));
    return out;
  };
  a.enabled_from = [dom, cod, strip, strip_flip](const Move& m, int bound) {
    std::vector<Move> out;
    if (has_prefix(m, seg_cod())) {
      for (const Move& n : cod.enabled_from(strip(m), bound))
        out.push_back(retag(n, seg_cod()));
      if (cod.enables(std::nullopt, strip(m)))
        for (const Move& n : dom.initials(bound))
          out.push_back(retag(flip_op(n), seg_dom()));
      return out;
    }
    if (!has_prefix(m, seg_dom())) return out;
    for (const Move& n : dom.enabled_from(strip_flip(m), bound))
      out.push_back(retag(flip_op(n), seg_dom()));
    return out;
  };
  Game t;
  t.arena = a;
  auto gc = g.contains, hc = h.contains;
  t.contains = [a, gc, hc](const JSeq& s) {
    return is_legal(a, s) && gc(strip_component(s, seg_dom(), true)) &&
           hc(strip_component(s, seg_cod(), false));
  };
  t.well_opened = h.well_opened;
  t.well_founded = g.well_founded && h.well_founded;
  return t;
}

// Canonical thread numbering: the i-th distinct thread index to appear
// must be i itself.
static bool threads_canonical(const JSeq& s) {
  std::vector<int> order;
  for (const Move& m : s.moves) {
    if (m.path.empty() || m.path.front().kind != Seg::Bang) return false;
    int i = m.path.front().index;
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
  }
  for (size_t k = 0; k < order.size(); ++k)
    if (order[k] != static_cast<int>(k)) return false;
  return true;
}

Game expo_game(const Game& g) {
  if (g.undefined) throw UndefinedOperand("exponential of undefined game");
  Arena c = g.arena;
  auto strip = [](Move m) {
    m.path.erase(m.path.begin());
    return m;
  };
  Arena a;
  a.has_move = [c, strip](const Move& m) {
    return !m.path.empty() && m.path.front().kind == Seg::Bang && c.has_move(strip(m));
  };
  a.enables = [c, strip](const std::optional<Move>& p, const Move& m) {
    if (m.path.empty() || m.path.front().kind != Seg::Bang) return false;
    if (!p) return c.enables(std::nullopt, strip(m));
    if (p->path.empty() || !(p->path.front() == m.path.front())) return false;
    return c.enables(strip(*p), strip(m));
  };
  a.initials = [c](int bound) {
    std::vector<Move> out;
    for (int i = 0; i < bound; ++i)
      for (const Move& m : c.initials(bound)) out.push_back(retag(m, seg_bang(i)));
    return out;
  };
  a.enabled_from = [c, strip](const Move& m, int bound) {
    std::vector<Move> out;
    if (m.path.empty() || m.path.front().kind != Seg::Bang) return out;
    for (const Move& n : c.enabled_from(strip(m), bound))
      out.push_back(retag(n, m.path.front()));
    return out;
  };
  Game t;
  t.arena = a;
  auto gc = g.contains;
  t.contains = [a, gc](const JSeq& s) {
    if (!is_legal(a, s) || !threads_canonical(s)) return false;
    int nthreads = 0;
    for (const Move& m : s.moves)
      nthreads = std::max(nthreads, m.path.front().index + 1);
    for (int i = 0; i < nthreads; ++i)
      if (!gc(strip_component(s, seg_bang(i), false))) return false;
    return true;
  };
  t.well_opened = false;
  t.well_founded = g.well_founded;
  return t;
}

Game implication_game(const Game& g, const Game& h) {
  return limp_game(expo_game(g), h);
}

Game union_game(std::vector<Game> gs) {
  auto shared = std::make_shared<std::vector<Game>>(std::move(gs));
  Game t;
  t.arena.has_move = [shared](const Move& m) {
    for (const Game& g : *shared)
      if (g.arena.has_move(m)) return true;
    return false;
  };
  t.arena.enables = [shared](const std::optional<Move>& p, const Move& m) {
    for (const Game& g : *shared)
      if (g.arena.enables(p, m)) return true;
    return false;
  };
  t.arena.initials = [shared](int bound) {
    std::set<Move> out;
    for (const Game& g : *shared)
      for (const Move& m : g.arena.initials(bound)) out.insert(m);
    return std::vector<Move>(out.begin(), out.end());
  };
  t.arena.enabled_from = [shared](const Move& m, int bound) {
    std::set<Move> out;
    for (const Game& g : *shared)
      for (const Move& n : g.arena.enabled_from(m, bound)) out.insert(n);
    return std::vector<Move>(out.begin(), out.end());
  };
  t.contains = [shared](const JSeq& s) {
    for (const Game& g : *shared)
      if (g.contains(s)) return true;
    return false;
  };
  for (const Game& g : *shared) {
    t.well_opened = t.well_opened || g.well_opened;
    t.well_founded = t.well_founded && g.well_founded;
  }
  return t;
}

// ---------------------------------------------------------------- enumeration

std::vector<JSeq> enumerate_positions(const Game& g, const EnumConfig& cfg) {
  if (g.undefined) throw UndefinedOperand("enumeration of undefined game");
  std::vector<JSeq> out;
  if (!g.contains(JSeq{})) return out;
  std::deque<JSeq> frontier{JSeq{}};
  out.push_back(JSeq{});
  long nodes = 1;
  while (!frontier.empty()) {
    JSeq s = std::move(frontier.front());
    frontier.pop_front();
    if (s.size() >= cfg.max_len) continue;
    for (const auto& [m, j] : extensions(g, s, cfg.branch_bound)) {
      if (++nodes > cfg.node_limit)
        throw BudgetExceeded("position enumeration exceeded node limit");
      JSeq t = s.extended(m, j);
      out.push_back(t);
      frontier.push_back(std::move(t));
    }
  }
  return out;
}

static std::string position_key(const JSeq& s, bool erase_paths) {
  if (!erase_paths) return serialize(s);
  JSeq t = s;
  for (Move& m : t.moves) m.path.clear();
  return serialize(t);
}

bool games_equal_bounded(const Game& g, const Game& h, const EnumConfig& cfg,
                         bool erase_paths) {
  std::set<std::string> a, b;
  for (const JSeq& s : enumerate_positions(g, cfg)) a.insert(position_key(s, erase_paths));
  for (const JSeq& s : enumerate_positions(h, cfg)) b.insert(position_key(s, erase_paths));
  return a == b;
}

bool prefix_chain_in(const Game& g, const JSeq& s) {
  JSeq p;
  if (!g.contains(p)) return false;
  for (int i = 1; i <= s.size(); ++i) {
    p = p.extended(s.at(i), s.justifier(i));
    if (!g.contains(p)) return false;
  }
  return true;
}

}  // namespace gsm
