#include "minplus/checkers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minplus {

// ---------------------------------------------------------------------------
// DPLL

namespace {

class Dpll {
public:
  Dpll(const Theory &t, SatStats *stats)
      : t_(t), val_(t.num_atoms(), 0), stats_(stats) {}

  std::optional<AtomSet> run() {
    if (t_.has_empty_clause() || !solve())
      return std::nullopt;
    AtomSet out;
    for (Atom a = 0; a < val_.size(); ++a)
      if (val_[a] == 1)
        out.push_back(a);
    return out;
  }

private:
  int value(Literal l) const {
    int v = val_[l.atom()];
    if (v == 0)
      return 0;
    return (v == 1) == l.positive() ? 1 : -1;
  }

  void assign(Literal l) {
    val_[l.atom()] = l.positive() ? 1 : -1;
    trail_.push_back(l.atom());
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  // Returns false on conflict.
  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (const Clause &c : t_.clauses()) {
        std::size_t open = 0;
        Literal last;
        bool sat = false;
        for (Literal l : c) {
          int v = value(l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++open;
            last = l;
          }
        }
        if (sat)
          continue;
        if (open == 0)
          return false;
        if (open == 1) {
          assign(last);
          if (stats_)
            ++stats_->propagations;
          changed = true;
        }
      }
    }
    return true;
  }

  // Occurrence counts of unassigned literals in unsatisfied clauses, indexed
  // by literal code.  Returns false if every clause is satisfied.
  bool open_counts(std::vector<std::size_t> &count) const {
    count.assign(2 * t_.num_atoms(), 0);
    bool any = false;
    for (const Clause &c : t_.clauses()) {
      if (std::any_of(c.begin(), c.end(),
                      [&](Literal l) { return value(l) == 1; }))
        continue;
      any = true;
      for (Literal l : c)
        if (value(l) == 0)
          ++count[l.code()];
    }
    return any;
  }

  bool solve() {
    const std::size_t mark = trail_.size();
    std::vector<std::size_t> count;
    for (;;) {
      if (!propagate()) {
        undo(mark);
        return false;
      }
      if (!open_counts(count))
        return true;
      bool pure = false;
      for (Atom a = 0; a < val_.size(); ++a) {
        std::size_t p = count[2 * a], n = count[2 * a + 1];
        if ((p == 0) != (n == 0)) {
          assign(p ? Literal::pos(a) : Literal::neg(a));
          pure = true;
        }
      }
      if (!pure)
        break;
    }
    // Strict maximum over ascending codes: ties go to the smallest atom,
    // positive before negative.
    std::uint32_t best = 0;
    for (std::uint32_t code = 1; code < count.size(); ++code)
      if (count[code] > count[best])
        best = code;
    const Literal pick = Literal::from_code(best);
    for (Literal l : {pick, ~pick}) {
      if (stats_)
        ++stats_->decisions;
      const std::size_t inner = trail_.size();
      assign(l);
      if (solve())
        return true;
      undo(inner);
    }
    undo(mark);
    return false;
  }

  const Theory &t_;
  std::vector<int> val_;
  std::vector<Atom> trail_;
  SatStats *stats_;
};

// Negative literals of every atom outside m.
std::vector<Literal> outside(const Theory &t, const AtomSet &m) {
  std::vector<Literal> l;
  for (Atom a = 0; a < t.num_atoms(); ++a)
    if (!std::binary_search(m.begin(), m.end(), a))
      l.push_back(Literal::neg(a));
  return l;
}

bool valid_atom_set(const Theory &t, const AtomSet &m) {
  return std::is_sorted(m.begin(), m.end()) &&
         std::adjacent_find(m.begin(), m.end()) == m.end() &&
         (m.empty() || m.back() < t.num_atoms());
}

} // namespace

std::optional<AtomSet> sat_decide(const Theory &t, SatStats *stats) {
  return Dpll(t, stats).run();
}

// ---------------------------------------------------------------------------
// minimality

bool test_min_2cnf(const Theory &t, const AtomSet &m) {
  if (t.max_width() > 2)
    throw std::invalid_argument("test_min_2cnf needs a 2-CNF theory");
  if (!valid_atom_set(t, m) || !is_model(t, std::span<const Atom>(m)))
    return false;
  const Theory r = reduce(t, outside(t, m));
  if (r.occurring_atoms() != m)
    return false;

  // Implication graph on the atoms of m: a clause a | -b is the edge b -> a.
  const std::size_t n = t.num_atoms();
  std::vector<std::vector<Atom>> fwd(n), rev(n);
  for (const Clause &c : r.clauses()) {
    if (c.size() == 2 && c[0].positive() != c[1].positive()) {
      Literal p = c[0].positive() ? c[0] : c[1];
      Literal q = c[0].positive() ? c[1] : c[0];
      fwd[q.atom()].push_back(p.atom());
      rev[p.atom()].push_back(q.atom());
    } else if (!c[0].positive() || (c.size() == 2 && !c[1].positive())) {
      throw std::logic_error("test_min_2cnf: unexpected clause shape");
    }
  }

  // Kosaraju: finishing order on fwd, then components on rev.
  std::vector<char> seen(n, 0);
  std::vector<Atom> order;
  for (Atom s : m) {
    if (seen[s])
      continue;
    std::vector<std::pair<Atom, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto &[v, i] = stack.back();
      if (i < fwd[v].size()) {
        Atom w = fwd[v][i++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, none);
  std::size_t ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != none)
      continue;
    std::vector<Atom> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      Atom v = stack.back();
      stack.pop_back();
      for (Atom w : rev[v])
        if (comp[w] == none) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  std::vector<char> incoming(ncomp, 0), anchored(ncomp, 0);
  for (Atom v : m)
    for (Atom w : fwd[v])
      if (comp[v] != comp[w])
        incoming[comp[w]] = 1;
  for (const Clause &c : r.clauses()) {
    if (c.size() == 1)
      anchored[comp[c[0].atom()]] = 1;
    else if (c[0].positive() && c[1].positive() &&
             comp[c[0].atom()] == comp[c[1].atom()])
      anchored[comp[c[0].atom()]] = 1;
  }
  for (std::size_t k = 0; k < ncomp; ++k)
    if (!incoming[k] && !anchored[k])
      return false;
  return true;
}

bool test_min_sat(const Theory &t, const AtomSet &m) {
  if (!valid_atom_set(t, m) || !is_model(t, std::span<const Atom>(m)))
    return false;
  const Theory r = reduce(t, outside(t, m));
  for (Atom a : m) {
    Theory probe = r;
    probe.add_clause({Literal::neg(a)});
    if (sat_decide(probe))
      return false;
  }
  return true;
}

bool test_min(const Theory &t, const AtomSet &m) {
  return t.max_width() <= 2 ? test_min_2cnf(t, m) : test_min_sat(t, m);
}

// ---------------------------------------------------------------------------
// exhaustive references

namespace {

struct MaskClause {
  std::uint32_t pos = 0, neg = 0;
  bool satisfied_by(std::uint32_t m) const {
    return (m & pos) != 0 || (~m & neg) != 0;
  }
};

std::vector<MaskClause> masks_of(const Theory &t) {
  std::vector<MaskClause> out;
  for (const Clause &c : t.clauses()) {
    MaskClause mc;
    for (Literal l : c)
      (l.positive() ? mc.pos : mc.neg) |= 1u << l.atom();
    out.push_back(mc);
  }
  return out;
}

bool satisfies(const std::vector<MaskClause> &cs, std::uint32_t m) {
  for (const MaskClause &c : cs)
    if (!c.satisfied_by(m))
      return false;
  return true;
}

AtomSet atoms_of(std::uint32_t m) {
  AtomSet out;
  for (Atom a = 0; m; ++a, m >>= 1)
    if (m & 1u)
      out.push_back(a);
  return out;
}

void check_cap(std::size_t n, std::size_t cap) {
  cap = std::min(cap, kBruteHardCap);
  if (n > cap)
    throw std::length_error("brute force limited to " + std::to_string(cap) +
                            " atoms, got " + std::to_string(n));
}

std::vector<AtomSet> sorted_sets(std::vector<std::uint32_t> masks) {
  std::vector<AtomSet> out;
  for (std::uint32_t m : masks)
    out.push_back(atoms_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<AtomSet> brute_minimal_models(const Theory &t, std::size_t cap) {
  check_cap(t.num_atoms(), cap);
  const auto cs = masks_of(t);
  const std::uint32_t total = 1u << t.num_atoms();
  std::vector<std::uint32_t> by_size(total);
  for (std::uint32_t m = 0; m < total; ++m)
    by_size[m] = m;
  std::stable_sort(by_size.begin(), by_size.end(), [](auto x, auto y) {
    return std::popcount(x) < std::popcount(y);
  });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : by_size) {
    if (!satisfies(cs, m))
      continue;
    bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                 [&](std::uint32_t s) { return (s & m) == s; });
    if (!dominated)
      minimal.push_back(m);
  }
  return sorted_sets(std::move(minimal));
}

std::vector<AtomSet> brute_stable_models(const Program &p, std::size_t cap) {
  check_cap(p.num_atoms(), cap);
  std::vector<std::uint32_t> found;
  for (std::uint32_t m = 0; m < (1u << p.num_atoms()); ++m)
    if (least_model(reduct(p, atoms_of(m))) == atoms_of(m))
      found.push_back(m);
  return sorted_sets(std::move(found));
}

std::vector<AtomSet> brute_answer_sets(const Program &p, std::size_t cap) {
  check_cap(p.num_atoms(), cap);
  std::vector<std::uint32_t> found;
  for (std::uint32_t m = 0; m < (1u << p.num_atoms()); ++m) {
    const auto cs = masks_of(translate(reduct(p, atoms_of(m))));
    if (!satisfies(cs, m))
      continue;
    bool minimal = true;
    // Proper submasks of m, largest first.
    for (std::uint32_t s = (m - 1) & m; minimal; s = (s - 1) & m) {
      if (s != m && satisfies(cs, s))
        minimal = false;
      if (s == 0)
        break;
    }
    if (minimal)
      found.push_back(m);
  }
  return sorted_sets(std::move(found));
}

} // namespace minplus
