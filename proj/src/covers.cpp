#include "minplus/covers.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace minplus {

namespace {

using Branches = std::vector<std::vector<Literal>>;

[[noreturn]] void fail(const std::string &what) {
  throw std::logic_error("cover: " + what);
}

void require(bool cond, const char *what) {
  if (!cond)
    fail(what);
}

Literal P(Atom a) { return Literal::pos(a); }
Literal N(Atom a) { return Literal::neg(a); }

Cover finish(CoverDiagnostics *diag, const std::string &id, int top,
             const Branches &branches) {
  Cover cover;
  for (const auto &b : branches) {
    LiteralSet set = make_literal_set(std::span<const Literal>(b));
    if (set.empty() || !is_consistent(set))
      fail("case " + id + " built an empty or inconsistent branch");
    cover.branches.push_back(std::move(set));
  }
  if (diag) {
    diag->case_id = id;
    diag->top_case = top;
  }
  return cover;
}

// The literal of a 2-clause other than x.
Literal other2(const Clause &c, Literal x) {
  require(c.size() == 2 && c.contains(x), "other2 on unexpected clause");
  return c[0] == x ? c[1] : c[0];
}

// The two literals of a 3-clause other than x, in clause order.
std::pair<Literal, Literal> rest3(const Clause &c, Literal x) {
  require(c.size() == 3 && c.contains(x), "rest3 on unexpected clause");
  if (c[0] == x)
    return {c[1], c[2]};
  if (c[1] == x)
    return {c[0], c[2]};
  return {c[0], c[1]};
}

// The literal of a 3-clause other than x and y.
Literal third(const Clause &c, Literal x, Literal y) {
  for (Literal l : c)
    if (l != x && l != y)
      return l;
  fail("third on unexpected clause");
}

Atom first_other_atom(const AtomSet &atoms, Atom not_this) {
  for (Atom a : atoms)
    if (a != not_this)
      return a;
  fail("no second atom");
}

bool atom_disjoint(const Clause &x, const Clause &y) {
  for (Literal l : x)
    if (y.has_atom(l.atom()))
      return false;
  return true;
}

void check_input(const Theory &s, std::size_t width, const char *who) {
  if (s.has_empty_clause())
    throw std::invalid_argument(std::string(who) + ": theory has an empty clause");
  if (s.empty())
    throw std::invalid_argument(std::string(who) + ": theory has no atoms");
  if (s.max_width() > width)
    throw std::invalid_argument(std::string(who) + ": clause too wide");
}

} // namespace

// ---------------------------------------------------------------------------
// 2-CNF

Cover cover2(const Theory &s, CoverDiagnostics *diag) {
  check_input(s, 2, "cover2");
  const AtomSet atoms = s.occurring_atoms();
  auto done = [&](const char *sub, int top, const Branches &b) {
    return finish(diag, std::string("2:") + sub, top, b);
  };

  if (atoms.size() == 1)
    return done("1", 1, {{s.clause(0)[0]}});

  for (const Clause &c : s.clauses())
    if (c.size() == 1) {
      Literal w = c[0];
      Atom y = first_other_atom(atoms, w.atom());
      return done("2", 2, {{w, P(y)}, {w, N(y)}});
    }

  for (Atom x : atoms)
    if (s.occurrences(P(x)).empty()) {
      Atom y = first_other_atom(atoms, x);
      return done("3", 3, {{N(x), P(y)}, {N(x), N(y)}});
    }

  for (Atom x : atoms) {
    auto negs = s.occurrences(N(x));
    if (negs.empty())
      continue;
    Literal w = other2(s.clause(negs[0]), N(x));
    Literal b = other2(s.clause(s.occurrences(P(x))[0]), P(x));
    return done("4", 4, {{P(x), w}, {N(x), b}});
  }

  // Every clause is now x | y with x, y distinct atoms.  Neighbour sets are
  // used instead of clause counts so that repeated clauses are harmless.
  std::map<Atom, std::vector<Atom>> nb;
  for (const Clause &c : s.clauses()) {
    nb[c[0].atom()].push_back(c[1].atom());
    nb[c[1].atom()].push_back(c[0].atom());
  }
  for (auto &[a, list] : nb) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  for (const auto &[x, list] : nb)
    if (list.size() == 1) {
      Atom y = list[0];
      return done("5(a)", 5, {{P(x), N(y)}, {N(x), P(y)}});
    }
  for (const auto &[x, list] : nb)
    if (list.size() >= 3)
      return done("5(b)", 5,
                  {{P(x)}, {N(x), P(list[0]), P(list[1]), P(list[2])}});

  const Atom w = atoms[0];
  const Atom u = nb[w][0], v = nb[w][1];
  const Atom u2 = nb[u][0] == w ? nb[u][1] : nb[u][0];
  const Atom v2 = nb[v][0] == w ? nb[v][1] : nb[v][0];
  return done("5(c)", 5,
              {{N(u), P(u2), P(w)}, {N(v), P(v2), P(w)}, {N(w), P(u), P(v)}});
}

// ---------------------------------------------------------------------------
// Gamma graphs

std::size_t GammaGraph::index_of(Literal v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    return vertices_.size();
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t GammaGraph::degree(Literal v) const {
  std::size_t i = index_of(v);
  return i == vertices_.size() ? 0 : adj_[i].size();
}

const std::vector<Literal> &GammaGraph::neighbors(Literal v) const {
  static const std::vector<Literal> none;
  std::size_t i = index_of(v);
  return i == vertices_.size() ? none : adj_[i];
}

bool GammaGraph::adjacent(Literal u, Literal v) const {
  const auto &n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t GammaGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto &n : adj_)
    d = std::max(d, n.size());
  return d;
}

Literal GammaGraph::max_degree_vertex() const {
  require(!vertices_.empty(), "empty gamma graph");
  std::size_t best = 0;
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (adj_[i].size() > adj_[best].size())
      best = i;
  return vertices_[best];
}

namespace {

// Vertex and edge counts of each connected component.
std::vector<std::pair<std::size_t, std::size_t>>
components(const std::vector<Literal> &vertices,
           const std::vector<std::vector<Literal>> &adj) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<char> seen(vertices.size(), 0);
  auto idx = [&](Literal v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) -
        vertices.begin());
  };
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (seen[s])
      continue;
    std::size_t nv = 0, deg_sum = 0;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      ++nv;
      deg_sum += adj[i].size();
      for (Literal w : adj[i]) {
        std::size_t j = idx(w);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    out.emplace_back(nv, deg_sum / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::size_t GammaGraph::matching_number() const {
  if (max_degree() <= 2) {
    // Paths and cycles on v vertices both have matching number floor(v/2).
    std::size_t m = 0;
    for (auto [nv, ne] : components(vertices_, adj_))
      m += nv / 2;
    return m;
  }
  std::vector<char> used(vertices_.size(), 0);
  std::size_t m = 0;
  for (auto [x, y] : edges_) {
    std::size_t i = index_of(x), j = index_of(y);
    if (!used[i] && !used[j]) {
      used[i] = used[j] = 1;
      ++m;
    }
  }
  return m;
}

GammaGraph::Shape GammaGraph::shape() const {
  if (max_degree() > 2)
    return Shape::Other;
  using C = std::vector<std::pair<std::size_t, std::size_t>>;
  C comps = components(vertices_, adj_);
  if (comps == C{{2, 1}, {3, 3}})
    return Shape::C3P1;
  if (comps == C{{2, 1}, {4, 3}})
    return Shape::P3P1;
  if (comps == C{{2, 1}, {2, 1}, {2, 1}})
    return Shape::ThreeP1;
  return Shape::Other;
}

GammaGraph build_gamma(const Theory &s, Atom a) {
  GammaGraph g;
  g.anchor = a;
  for (std::uint32_t ci : s.occurrences(P(a))) {
    const Clause &c = s.clause(ci);
    if (c.size() != 3)
      continue;
    auto [x, y] = rest3(c, P(a));
    g.edges_.emplace_back(std::min(x, y), std::max(x, y));
    g.vertices_.push_back(x);
    g.vertices_.push_back(y);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()),
                    g.vertices_.end());
  g.adj_.assign(g.vertices_.size(), {});
  for (auto [x, y] : g.edges_) {
    g.adj_[g.index_of(x)].push_back(y);
    g.adj_[g.index_of(y)].push_back(x);
  }
  for (auto &n : g.adj_)
    std::sort(n.begin(), n.end());
  return g;
}

const char *to_string(GammaGraph::Shape shape) {
  switch (shape) {
  case GammaGraph::Shape::C3P1:
    return "C3+P1";
  case GammaGraph::Shape::P3P1:
    return "P3+P1";
  case GammaGraph::Shape::ThreeP1:
    return "3P1";
  case GammaGraph::Shape::Other:
    break;
  }
  return "other";
}

// ---------------------------------------------------------------------------
// 3-CNF

namespace {

struct Ctx {
  const Theory &s;
  CoverDiagnostics *diag;
  AtomSet atoms;
  // Index of the unique 2-clause containing an atom, or -1.  Valid once the
  // 2-clauses are known to be pairwise atom-disjoint.
  std::vector<long> two_of;
  std::vector<GammaGraph> gamma;

  Ctx(const Theory &th, CoverDiagnostics *d)
      : s(th), diag(d), atoms(th.occurring_atoms()) {}

  const Clause &cl(std::uint32_t i) const { return s.clause(i); }
  std::span<const std::uint32_t> occ(Literal l) const {
    return s.occurrences(l);
  }
  std::size_t count(Literal l) const { return occ(l).size(); }
  bool in_two(Literal l) const { return two_of[l.atom()] >= 0; }
  const Clause &two(Literal l) const {
    return s.clause(static_cast<std::size_t>(two_of[l.atom()]));
  }

  Cover done(int top, const char *sub, const Branches &b) const {
    return finish(diag, "3:" + std::to_string(top) + sub, top, b);
  }
};

using Result = std::optional<Cover>;

Result case4(Ctx &x) {
  for (Atom o : x.atoms) {
    std::uint32_t pos = 0, neg = 0;
    bool have_pos = false, have_neg = false;
    for (std::uint32_t i : x.occ(P(o)))
      if (x.cl(i).size() == 2 && !have_pos) {
        pos = i;
        have_pos = true;
      }
    for (std::uint32_t i : x.occ(N(o)))
      if (x.cl(i).size() == 2 && !have_neg) {
        neg = i;
        have_neg = true;
      }
    if (have_pos && have_neg) {
      Literal g = other2(x.cl(neg), N(o));
      Literal b = other2(x.cl(pos), P(o));
      return x.done(4, "(i)", {{P(o), g}, {N(o), b}});
    }
  }
  for (Atom o : x.atoms)
    for (Literal w : {P(o), N(o)}) {
      std::vector<std::uint32_t> twos;
      for (std::uint32_t i : x.occ(w))
        if (x.cl(i).size() == 2)
          twos.push_back(i);
      if (twos.size() >= 2) {
        Literal b = other2(x.cl(twos[0]), w);
        Literal g = other2(x.cl(twos[1]), w);
        return x.done(4, "(ii)", {{w}, {~w, b, g}});
      }
    }
  return std::nullopt;
}

Result case5(Ctx &x) {
  for (std::uint32_t i2 = 0; i2 < x.s.num_clauses(); ++i2) {
    const Clause &c2 = x.cl(i2);
    if (c2.size() != 2)
      continue;
    for (int k = 0; k < 2; ++k) {
      const Literal beta = ~c2[k];
      const Literal delta = c2[1 - k];
      for (std::uint32_t i1 : x.occ(beta)) {
        const Clause &c1 = x.cl(i1);
        if (c1.size() != 3 || c1.has_atom(delta.atom()))
          continue;
        auto [w, g] = rest3(c1, beta);
        // 0: atom in no 2-clause, 1: 2-clause has the literal, 2: its dual
        auto status = [&](Literal l) {
          if (!x.in_two(l))
            return 0;
          return x.two(l).contains(l) ? 1 : 2;
        };
        int sw = status(w), sg = status(g);
        if (sw == 0 && sg == 0)
          return x.done(5, "(i)", {{beta, delta}, {~beta}});
        if (sw == 2 || sg == 2) {
          if (sw != 2)
            std::swap(w, g);
          Literal e = other2(x.two(w), ~w);
          return x.done(5, "(ii)",
                        {{beta, delta}, {~beta, w, e}, {~beta, ~w, g}});
        }
        if (sw == 0 || sg == 0) {
          if (sw == 0)
            std::swap(w, g);
          Literal e = other2(x.two(w), w);
          return x.done(5, "(iii)",
                        {{beta, delta}, {~beta, w}, {~beta, ~w, g, e}});
        }
        Literal e = other2(x.two(g), g);
        Literal lam = other2(x.two(w), w);
        return x.done(5, "(iv)",
                      {{w}, {~w, g, lam}, {~w, ~g, lam, e, beta, delta}});
      }
    }
  }
  return std::nullopt;
}

Result case6(Ctx &x) {
  for (std::uint32_t i1 = 0; i1 < x.s.num_clauses(); ++i1) {
    const Clause &c1 = x.cl(i1);
    if (c1.size() != 2)
      continue;
    const Atom probe = c1[0].atom();
    for (Literal pl : {P(probe), N(probe)})
      for (std::uint32_t i2 : x.occ(pl)) {
        const Clause &c2 = x.cl(i2);
        if (c2.size() != 3 || !c2.has_atom(c1[1].atom()))
          continue;
        int gi = c2.contains(~c1[0]) ? 0 : (c2.contains(~c1[1]) ? 1 : -1);
        require(gi >= 0, "case 6: 3-clause subsumed by a 2-clause");
        const Literal g = c1[gi];
        const Literal w = c1[1 - gi];
        const Literal w2 = c2.literal_of(w.atom());
        const Literal b = third(c2, w2, ~g);
        if (!x.in_two(b))
          return x.done(6, "(i)", {{~g, w}, {g}});
        require(x.two(b).contains(b), "case 6(ii): expected b | e");
        Literal e = other2(x.two(b), b);
        return x.done(6, "(ii)", {{b}, {~b, ~g, e, w}, {~b, g, e, w2}});
      }
  }
  return std::nullopt;
}

// Atoms of 2-clauses, ascending.
std::vector<Atom> two_clause_atoms(const Ctx &x) {
  std::vector<Atom> out;
  for (Atom a : x.atoms)
    if (x.two_of[a] >= 0)
      out.push_back(a);
  return out;
}

std::vector<std::uint32_t> others_with(const Ctx &x, Literal l,
                                       std::uint32_t skip) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i : x.occ(l))
    if (i != skip)
      out.push_back(i);
  return out;
}

Result case7(Ctx &x) {
  for (Atom a : two_clause_atoms(x))
    if (x.count(P(a)) + x.count(N(a)) == 1) {
      Literal b = other2(x.two(P(a)), P(a));
      return x.done(7, "", {{P(a), ~b}, {N(a), b}});
    }
  return std::nullopt;
}

Result case8(Ctx &x) {
  for (Atom a : two_clause_atoms(x))
    if (x.count(P(a)) == 2) {
      const auto c1 = static_cast<std::uint32_t>(x.two_of[a]);
      Literal b = other2(x.cl(c1), P(a));
      auto rest = others_with(x, P(a), c1);
      auto [g, d] = rest3(x.cl(rest[0]), P(a));
      return x.done(8, "", {{N(a), b}, {P(a), ~b}, {P(a), b, ~g, ~d}});
    }
  return std::nullopt;
}

std::size_t shared_atoms(const Clause &x, const Clause &y) {
  std::size_t n = 0;
  for (Literal l : x)
    n += y.has_atom(l.atom()) ? 1 : 0;
  return n;
}

Result case9(Ctx &x) {
  for (Atom a : two_clause_atoms(x)) {
    const Literal A = P(a);
    const auto c1 = static_cast<std::uint32_t>(x.two_of[a]);
    const Literal B = other2(x.cl(c1), A);
    const auto rest = others_with(x, A, c1);
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        const Clause &c2 = x.cl(rest[i]);
        const Clause &c3 = x.cl(rest[j]);
        if (shared_atoms(c2, c3) != 1)
          continue;
        auto [g, d] = rest3(c2, A);
        auto [e, l] = rest3(c3, A);
        auto T = [&](Literal v) { return x.in_two(v); };

        if (!T(g) && !T(d) && !T(e) && !T(l))
          return x.done(9, "(i)", {{A}, {~A, B}});

        if ((!T(e) && !T(l)) || (!T(g) && !T(d))) {
          if (T(e) || T(l)) {
            std::swap(g, e);
            std::swap(d, l);
          }
          if (!T(g))
            std::swap(g, d);
          Literal h = other2(x.two(g), g);
          require(h.atom() != d.atom(), "case 9(ii): h equals d");
          return x.done(9, "(ii)", {{A}, {~A, g, B}, {~A, ~g, B, h, d}});
        }

        for (Literal gx : {g, d}) {
          if (!T(gx) || !atom_disjoint(x.two(gx), c3))
            continue;
          for (Literal ey : {e, l}) {
            if (!T(ey) || !atom_disjoint(x.two(ey), c2))
              continue;
            Literal dd = third(c2, A, gx), ll = third(c3, A, ey);
            Literal h = other2(x.two(gx), gx), f = other2(x.two(ey), ey);
            return x.done(9, "(iii)",
                          {{A},
                           {~A, gx, ey, B},
                           {~A, gx, ~ey, B, f, ll},
                           {~A, ~gx, ey, B, h, dd},
                           {~A, ~gx, ~ey, B, h, f, dd, ll}});
          }
        }

        // A 2-clause now joins an atom of c2 to an atom of c3; name it g | e.
        bool joined = false;
        for (Literal gx : {g, d}) {
          if (!T(gx))
            continue;
          Literal y = other2(x.two(gx), gx);
          if (y.atom() == e.atom() || y.atom() == l.atom()) {
            Literal ey = c3.literal_of(y.atom());
            d = third(c2, A, gx);
            g = gx;
            l = third(c3, A, ey);
            e = ey;
            joined = true;
            break;
          }
        }
        require(joined, "case 9: no 2-clause joins c2 and c3");

        if (!T(d) && !T(l))
          return x.done(9, "(iv)", {{A}, {~A, g, B}, {~A, ~g, B, d, e}});
        if (T(d) != T(l)) {
          if (T(l)) {
            std::swap(g, e);
            std::swap(d, l);
          }
          Literal j5 = other2(x.two(d), d);
          return x.done(9, "(v)",
                        {{A},
                         {~A, d, e, B},
                         {~A, d, ~e, B, g, l},
                         {~A, ~d, e, B, j5, g},
                         {~A, ~d, ~e, B, j5, g, l}});
        }
        require(x.two(d).has_atom(l.atom()), "case 9(vi): expected d | l");
        if (x.count(A) == 3)
          return x.done(9, "(vi)",
                        {{~A, B},
                         {A, ~B},
                         {A, B, ~g, ~d, e, l},
                         {A, B, ~e, ~l, g, d}});
      }
  }
  return std::nullopt;
}

Result case10(Ctx &x) {
  for (Atom a : two_clause_atoms(x)) {
    const Literal A = P(a);
    const auto c1 = static_cast<std::uint32_t>(x.two_of[a]);
    const Literal B = other2(x.cl(c1), A);
    const auto rest = others_with(x, A, c1);
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        const Clause &c2 = x.cl(rest[i]);
        const Clause &c3 = x.cl(rest[j]);
        if (shared_atoms(c2, c3) < 2)
          continue;
        // Shared atom other than a, preferring one with opposite signs.
        std::optional<Literal> pick;
        for (Literal v : c2) {
          if (v == A || !c3.has_atom(v.atom()))
            continue;
          if (c3.contains(~v)) {
            pick = v;
            break;
          }
          if (!pick)
            pick = v;
        }
        const Literal g = *pick;
        const Literal e = c3.literal_of(g.atom());
        const Literal d = third(c2, A, g);
        const Literal l = third(c3, A, e);

        if (g == ~e)
          return x.done(10, "(i)", {{A}, {~A, g, B, l}, {~A, e, B, d}});
        if (x.in_two(g)) {
          Literal h = other2(x.two(g), g);
          return x.done(10, "(ii)", {{A}, {~A, g, B}, {~A, ~g, B, h, d, l}});
        }
        if (!(x.in_two(d) && x.in_two(l)))
          return x.done(10, "(iii)", {{A}, {~A, g, B}, {~A, ~g, B, d, l}});
        if (x.count(A) == 3)
          return x.done(10, "(iv)",
                        {{A, ~B}, {A, B, ~g}, {~A, g, B}, {~A, ~g, B, d, l}});
        for (std::uint32_t k : rest) {
          if (k == rest[i] || k == rest[j])
            continue;
          const Clause &c = x.cl(k);
          if (!c.contains(g))
            continue;
          Literal f = third(c, A, g);
          if (x.in_two(f) && f.atom() != d.atom() && f.atom() != l.atom())
            return x.done(10, "(iv)",
                          {{A}, {~A, g, B}, {~A, ~g, B, d, l, f}});
        }
      }
  }
  return std::nullopt;
}

struct DualPair {
  std::uint32_t c1, c2;
  Literal beta, gamma, delta;
};

// All (c1, c2, beta) with c1 = a | beta | gamma and c2 = a | ~beta | delta
// inside T(a), enumerated in a fixed order.
std::vector<DualPair> dual_pairs(const Ctx &x, Literal A,
                                 const std::vector<std::uint32_t> &ta) {
  std::vector<DualPair> out;
  for (std::size_t i = 0; i < ta.size(); ++i)
    for (std::size_t j = i + 1; j < ta.size(); ++j) {
      const Clause &c1 = x.cl(ta[i]);
      const Clause &c2 = x.cl(ta[j]);
      for (Literal b : c1) {
        if (b == A || !c2.contains(~b))
          continue;
        out.push_back({ta[i], ta[j], b, third(c1, A, b), third(c2, A, ~b)});
      }
    }
  return out;
}

Result case11(Ctx &x) {
  for (Atom a : x.atoms) {
    const Literal A = P(a);
    std::vector<std::uint32_t> ta(x.occ(A).begin(), x.occ(A).end());
    const auto pairs = dual_pairs(x, A, ta);
    if (pairs.empty())
      continue;

    for (const DualPair &p : pairs)
      if (p.gamma == p.delta)
        return x.done(11, "(i)", {{A}, {~A, p.gamma}});
    for (const DualPair &p : pairs) {
      const Literal b = p.beta, g = p.gamma, d = p.delta;
      for (std::uint32_t k : ta) {
        if (k == p.c1 || k == p.c2)
          continue;
        const Clause &c3 = x.cl(k);
        if (c3.contains(b)) {
          Literal e = third(c3, A, b);
          return x.done(11, "(ii)", {{A}, {~A, b, d}, {~A, ~b, g, e}});
        }
        if (c3.contains(~b)) {
          Literal e = third(c3, A, ~b);
          return x.done(11, "(ii)", {{A}, {~A, ~b, g}, {~A, b, d, e}});
        }
      }
      for (std::uint32_t k : ta) {
        if (k == p.c1 || k == p.c2)
          continue;
        const Clause &c3 = x.cl(k);
        if (!c3.has_atom(g.atom()) && !c3.has_atom(d.atom()))
          return x.done(11, "(iii)", {{A}, {~A, b, d}, {~A, ~b, g}});
      }
      if (ta.size() == 2)
        return x.done(11, "(iv)",
                      {{~A, b, d}, {~A, ~b, g}, {A, b, ~d}, {A, ~b, ~g}});
    }

    const DualPair &p = pairs.front();
    const Literal b = p.beta, g = p.gamma, d = p.delta;
    std::vector<std::uint32_t> rest;
    for (std::uint32_t k : ta)
      if (k != p.c1 && k != p.c2)
        rest.push_back(k);
    for (std::uint32_t k : rest) {
      const Clause &c3 = x.cl(k);
      if (c3.contains(~g)) {
        Literal e = third(c3, A, ~g);
        require(e.atom() != b.atom(), "case 11(v): e equals b");
        return x.done(11, "(v)", {{A}, {~A, ~b, g, e}, {~A, b, d}});
      }
      if (c3.contains(~d)) {
        Literal e = third(c3, A, ~d);
        require(e.atom() != b.atom(), "case 11(v): e equals b");
        return x.done(11, "(v)", {{A}, {~A, b, d, e}, {~A, ~b, g}});
      }
    }
    auto both = [&](std::uint32_t k) {
      return x.cl(k).contains(g) && x.cl(k).contains(d);
    };
    if (rest.size() == 1 && both(rest[0]))
      return x.done(11, "(vi)",
                    {{A, d, ~g, ~b}, {A, ~d}, {~A, g}, {~A, ~g, b, d}});
    for (std::uint32_t k : rest) {
      if (both(k))
        continue;
      const Clause &c4 = x.cl(k);
      if (c4.contains(g)) {
        Literal e = third(c4, A, g);
        return x.done(11, "(vi)",
                      {{A, d, ~g}, {A, ~d}, {~A, g}, {~A, ~g, e, b, d}});
      }
      require(c4.contains(d), "case 11(vi): clause misses gamma and delta");
      Literal e = third(c4, A, d);
      return x.done(11, "(vi)",
                    {{A, g, ~d}, {A, ~g}, {~A, d}, {~A, ~d, e, ~b, g}});
    }
    fail("case 11: no subcase applies");
  }
  return std::nullopt;
}

std::vector<Literal> first_n(const std::vector<Literal> &v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<long>(std::min(n, v.size()))};
}

std::vector<Literal> concat(std::vector<Literal> head,
                            const std::vector<Literal> &tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// First pair (u, v), u < v, of non-adjacent degree-2 vertices.
std::optional<std::pair<Literal, Literal>>
nonadjacent_deg2(const GammaGraph &gm) {
  const auto &vs = gm.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (gm.degree(vs[i]) != 2)
      continue;
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (gm.degree(vs[j]) == 2 && !gm.adjacent(vs[i], vs[j]))
        return std::make_pair(vs[i], vs[j]);
  }
  return std::nullopt;
}

std::vector<Literal> deg2_vertices(const GammaGraph &gm) {
  std::vector<Literal> out;
  for (Literal v : gm.vertices())
    if (gm.degree(v) == 2)
      out.push_back(v);
  return out;
}

bool incident(std::pair<Literal, Literal> e, Literal v) {
  return e.first == v || e.second == v;
}

bool independent(std::pair<Literal, Literal> e, std::pair<Literal, Literal> f) {
  return !incident(f, e.first) && !incident(f, e.second);
}

Result case12(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    if (gm.max_degree() < 5)
      continue;
    const Literal A = P(gm.anchor);
    const Literal b = gm.max_degree_vertex();
    return x.done(12, "",
                  {{A}, {~A, b}, concat({~A, ~b}, first_n(gm.neighbors(b), 5))});
  }
  return std::nullopt;
}

Result case13(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    const std::size_t md = gm.max_degree();
    if (md != 3 && md != 4)
      continue;
    const Literal A = P(gm.anchor);
    const Literal b = gm.max_degree_vertex();
    const auto &nb = gm.neighbors(b);
    const std::size_t edges = gm.num_edges();
    if (md == 4 && edges >= 5)
      return x.done(13, "(i)", {{A}, {~A, b}, concat({~A, ~b}, nb)});
    if (edges == md)
      return x.done(13, "(ii)", {{A, ~b}, {~A, b}, concat({~A, ~b}, nb)});
    std::vector<std::pair<Literal, Literal>> away;
    for (auto e : gm.edges())
      if (!incident(e, b))
        away.push_back(e);
    if (md == 3 && edges >= 5) {
      for (std::size_t i = 0; i < away.size(); ++i)
        for (std::size_t j = i + 1; j < away.size(); ++j)
          if (independent(away[i], away[j]))
            return x.done(13, "(iii)", {{A}, {~A, b}, concat({~A, ~b}, nb)});
      auto e1 = away[0], e2 = away[1];
      Literal d = incident(e2, e1.first) ? e1.first : e1.second;
      Literal g1 = e1.first == d ? e1.second : e1.first;
      Literal g2 = e2.first == d ? e2.second : e2.first;
      return x.done(13, "(iii)",
                    {{A}, {~A, b, d}, {~A, b, ~d, g1, g2}, concat({~A, ~b}, nb)});
    }
    if (md == 3 && edges == 4) {
      auto [g, d] = away.at(0);
      return x.done(13, "(iv)",
                    {{A, ~b}, {A, b, ~g, ~d}, {~A, b}, concat({~A, ~b}, nb)});
    }
    fail("case 13: no subcase applies");
  }
  return std::nullopt;
}

Result case14(Ctx &x) {
  for (const GammaGraph &gm : x.gamma)
    if (gm.matching_number() >= 4) {
      const Literal A = P(gm.anchor);
      return x.done(14, "", {{A}, {~A}});
    }
  return std::nullopt;
}

Result case15(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    if (gm.num_edges() < 5)
      continue;
    const Literal A = P(gm.anchor);
    if (auto pr = nonadjacent_deg2(gm)) {
      auto [b, g] = *pr;
      const auto &nb = gm.neighbors(b);
      const auto &ng = gm.neighbors(g);
      return x.done(15, "(i)",
                    {{A}, {~A, ~b, nb[0], nb[1]}, {~A, b, g},
                     {~A, b, ~g, ng[0], ng[1]}});
    }
    auto d2 = deg2_vertices(gm);
    require(!d2.empty(), "case 15(ii): no degree-2 vertex");
    const Literal b = d2[0];
    const auto &nb = gm.neighbors(b);
    return x.done(15, "(ii)", {{A}, {~A, b}, {~A, ~b, nb[0], nb[1]}});
  }
  return std::nullopt;
}

Result case16(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    if (gm.num_edges() != 4)
      continue;
    auto pr = nonadjacent_deg2(gm);
    if (!pr)
      continue;
    const Literal A = P(gm.anchor);
    auto [b, g] = *pr;
    const auto &nb = gm.neighbors(b);
    const auto &ng = gm.neighbors(g);
    return x.done(16, "",
                  {{A, ~b}, {A, b, ~g}, {~A, ~b, nb[0], nb[1]}, {~A, b, g},
                   {~A, b, ~g, ng[0], ng[1]}});
  }
  return std::nullopt;
}

Result case17(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    if (gm.num_edges() != 4)
      continue;
    auto d2 = deg2_vertices(gm);
    if (d2.size() != 1)
      continue;
    const Literal A = P(gm.anchor);
    const Literal b = d2[0];
    const auto &nb = gm.neighbors(b);
    return x.done(17, "", {{A}, {~A, b}, {~A, ~b, nb[0], nb[1]}});
  }
  return std::nullopt;
}

Result case18(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    if (gm.num_edges() != 3)
      continue;
    auto d2 = deg2_vertices(gm);
    if (d2.empty())
      continue;
    const Literal A = P(gm.anchor);
    const Literal b = d2[0];
    const auto &nb = gm.neighbors(b);
    std::optional<std::pair<Literal, Literal>> away;
    for (auto e : gm.edges())
      if (!incident(e, b))
        away = e;
    require(away.has_value(), "case 18: no edge away from beta");
    auto [g, g1] = *away;
    return x.done(18, "",
                  {{A, ~b}, {A, b, ~g, ~g1}, {~A, ~b, nb[0], nb[1]},
                   {~A, b, g}, {~A, b, ~g, g1}});
  }
  return std::nullopt;
}

Result case19(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    if (gm.num_edges() != 2 || !independent(gm.edges()[0], gm.edges()[1]))
      continue;
    const Literal A = P(gm.anchor);
    auto [b1, b2] = gm.edges()[0];
    auto [g1, g2] = gm.edges()[1];
    return x.done(19, "", {{A, ~b1, ~b2}, {A, ~g1, ~g2}, {~A}});
  }
  return std::nullopt;
}

Result case20(Ctx &x) {
  for (const GammaGraph &gm : x.gamma) {
    const std::size_t edges = gm.num_edges();
    if (edges != 1 && edges != 2)
      continue;
    const Literal A = P(gm.anchor);
    Literal b = gm.edges()[0].first;
    if (edges == 2) {
      auto d2 = deg2_vertices(gm);
      if (d2.empty())
        continue;
      b = d2[0];
    }
    return x.done(20, "", {{~A}, {A, ~b}});
  }
  return std::nullopt;
}

Cover case21(Ctx &x) {
  for (const GammaGraph &gm : x.gamma)
    require(gm.shape() != GammaGraph::Shape::Other,
            "case 21: gamma graph of unexpected shape");

  for (const GammaGraph &gm : x.gamma) {
    const Atom a = gm.anchor;
    if (x.count(N(a)) == 0)
      continue;
    const Literal A = P(a);
    if (gm.shape() != GammaGraph::Shape::C3P1)
      return x.done(21, "(i)", {{A}, {~A}});
    const Literal b = deg2_vertices(gm).at(0);
    const auto &nb = gm.neighbors(b);
    return x.done(21, "(i)", {{A}, {~A, b}, {~A, ~b, nb[0], nb[1]}});
  }

  auto isolated_edge = [](const GammaGraph &gm) {
    for (auto e : gm.edges())
      if (gm.degree(e.first) == 1 && gm.degree(e.second) == 1)
        return e;
    fail("case 21: no isolated edge");
  };

  for (const GammaGraph &gm : x.gamma) {
    if (gm.shape() != GammaGraph::Shape::P3P1)
      continue;
    const Literal A = P(gm.anchor);
    auto inner = deg2_vertices(gm);
    require(inner.size() == 2, "case 21(ii): path without two inner vertices");
    const Literal b = inner[0], c = inner[1];
    const auto &nb = gm.neighbors(b);
    const Literal d = nb[0] == c ? nb[1] : nb[0];
    auto [f, g] = isolated_edge(gm);
    return x.done(21, "(ii)",
                  {{A, b, c, ~f, ~g}, {A, b, ~c}, {A, ~b}, {~A, b},
                   {~A, ~b, c, d}});
  }

  for (const GammaGraph &gm : x.gamma) {
    if (gm.shape() != GammaGraph::Shape::C3P1)
      continue;
    const Literal a1 = P(gm.anchor);
    const auto tri = deg2_vertices(gm);
    const auto pend1 = isolated_edge(gm);
    Literal a2 = tri[0];
    for (Literal cand : tri) {
      require(cand.positive(), "case 21(ii): negative triangle vertex");
      auto it = std::find_if(x.gamma.begin(), x.gamma.end(),
                             [&](const GammaGraph &h) {
                               return h.anchor == cand.atom();
                             });
      if (it == x.gamma.end() || it->shape() != GammaGraph::Shape::C3P1)
        continue;
      auto pend = isolated_edge(*it);
      if (independent(pend, pend1)) {
        a2 = cand;
        break;
      }
    }
    std::vector<Literal> others;
    for (Literal v : tri)
      if (v != a2)
        others.push_back(v);
    return x.done(21, "(ii)",
                  {{a1}, {~a1, a2}, {~a1, ~a2, others[0], others[1]}});
  }

  const GammaGraph &gm = x.gamma.front();
  const Literal A = P(gm.anchor);
  Branches out{{~A}};
  for (auto [b, c] : gm.edges())
    out.push_back({A, ~b, ~c});
  return x.done(21, "(ii)", out);
}

} // namespace

Cover cover3(const Theory &s, CoverDiagnostics *diag) {
  check_input(s, 3, "cover3");
  Ctx x(s, diag);

  if (x.atoms.size() == 1)
    return x.done(1, "", {{s.clause(0)[0]}});

  for (const Clause &c : s.clauses())
    if (c.size() == 1) {
      Literal w = c[0];
      Atom y = first_other_atom(x.atoms, w.atom());
      return x.done(2, "", {{w, P(y)}, {w, N(y)}});
    }

  for (Atom a : x.atoms)
    if (x.count(P(a)) == 0) {
      Atom y = first_other_atom(x.atoms, a);
      return x.done(3, "", {{N(a), P(y)}, {N(a), N(y)}});
    }

  if (auto r = case4(x))
    return *r;

  x.two_of.assign(s.num_atoms(), -1);
  for (std::uint32_t i = 0; i < s.num_clauses(); ++i) {
    const Clause &c = s.clause(i);
    if (c.size() != 2)
      continue;
    for (Literal l : c) {
      require(x.two_of[l.atom()] < 0, "2-clauses share an atom after case 4");
      x.two_of[l.atom()] = i;
    }
  }

  if (auto r = case5(x))
    return *r;
  if (auto r = case6(x))
    return *r;

  for (Atom a : two_clause_atoms(x))
    require(x.count(N(a)) == 0, "atom of a 2-clause occurs negatively");

  for (auto fn : {case7, case8, case9, case10})
    if (auto r = fn(x))
      return *r;

  for (const Clause &c : s.clauses())
    require(c.size() == 3, "clause shorter than 3 after case 10");

  if (auto r = case11(x))
    return *r;

  for (Atom a : x.atoms) {
    x.gamma.push_back(build_gamma(s, a));
    const auto &vs = x.gamma.back().vertices();
    for (std::size_t i = 1; i < vs.size(); ++i)
      require(vs[i].atom() != vs[i - 1].atom(),
              "dual literals in a gamma graph after case 11");
  }

  for (auto fn : {case12, case13, case14})
    if (auto r = fn(x))
      return *r;

  for (const GammaGraph &gm : x.gamma)
    require(gm.max_degree() <= 2, "gamma degree above 2 after case 13");

  for (auto fn : {case15, case16, case17, case18, case19, case20})
    if (auto r = fn(x))
      return *r;

  return case21(x);
}

// ---------------------------------------------------------------------------
// generic width

Cover cover_t(const Theory &s, CoverDiagnostics *diag) {
  if (s.has_empty_clause())
    throw std::invalid_argument("cover_t: theory has an empty clause");
  if (s.empty())
    throw std::invalid_argument("cover_t: theory has no atoms");
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.num_clauses(); ++i)
    if (s.clause(i).size() > s.clause(best).size())
      best = i;
  const Clause &c = s.clause(best);
  if (c.size() == 1) {
    const AtomSet atoms = s.occurring_atoms();
    if (atoms.size() == 1)
      return finish(diag, "t:1", 0, {{c[0]}});
    Atom y = first_other_atom(atoms, c[0].atom());
    return finish(diag, "t:unit", 0, {{c[0], P(y)}, {c[0], N(y)}});
  }
  Branches out;
  std::vector<Literal> prefix;
  for (Literal l : c) {
    out.push_back(concat(prefix, {l}));
    prefix.push_back(~l);
  }
  return finish(diag, "t:" + std::to_string(c.size()), 0, out);
}

CoverKind resolve_cover_kind(CoverKind kind, std::size_t max_width) {
  if (kind != CoverKind::Auto)
    return kind;
  if (max_width <= 2)
    return CoverKind::Two;
  if (max_width <= 3)
    return CoverKind::Three;
  return CoverKind::Generic;
}

Cover apply_cover(CoverKind kind, const Theory &s, CoverDiagnostics *diag) {
  switch (resolve_cover_kind(kind, s.max_width())) {
  case CoverKind::Two:
    return cover2(s, diag);
  case CoverKind::Three:
    return cover3(s, diag);
  default:
    return cover_t(s, diag);
  }
}

} // namespace minplus
