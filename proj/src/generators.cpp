#include "minplus/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace minplus {

GenMode parse_gen_mode(const std::string &s) {
  if (s == "cnf")
    return GenMode::Cnf;
  if (s == "normal")
    return GenMode::Normal;
  if (s == "disjunctive")
    return GenMode::Disjunctive;
  throw std::invalid_argument("unknown generator mode '" + s + "'");
}

const char *to_string(GenMode mode) {
  switch (mode) {
  case GenMode::Cnf:
    return "cnf";
  case GenMode::Normal:
    return "normal";
  case GenMode::Disjunctive:
    return "disjunctive";
  }
  return "?";
}

namespace {

class Builder {
public:
  explicit Builder(GenMode mode) : mode_(mode) {}

  Atom add_atom(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Atom>(names_.size() - 1);
  }
  std::size_t num_atoms() const { return names_.size(); }

  void clause(std::vector<Literal> c) { clauses_.push_back(std::move(c)); }
  void rule(Rule r) { rules_.push_back(std::move(r)); }

  // Appends E_t over the given atoms.
  void block_E(std::size_t t, const std::vector<Atom> &xs) {
    if (t == 0)
      throw std::invalid_argument("E needs t >= 1");
    if (xs.size() < t)
      throw std::invalid_argument("E needs at least t atoms (t=" +
                                  std::to_string(t) + ", atoms=" +
                                  std::to_string(xs.size()) + ")");
    std::vector<char> pick(xs.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(t), 1);
    // prev_permutation over a 1...10...0 mask walks subsets in
    // lexicographic order.
    do {
      std::vector<Atom> s;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (pick[i])
          s.push_back(xs[i]);
      switch (mode_) {
      case GenMode::Cnf: {
        std::vector<Literal> c;
        for (Atom a : s)
          c.push_back(Literal::pos(a));
        clause(std::move(c));
        break;
      }
      case GenMode::Disjunctive:
        rule({s, {}, {}});
        break;
      case GenMode::Normal:
        for (Atom h : s) {
          AtomSet rest;
          for (Atom a : s)
            if (a != h)
              rest.push_back(a);
          rule({{h}, {}, rest});
        }
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  void fact(Atom a) {
    if (mode_ == GenMode::Cnf)
      clause({Literal::pos(a)});
    else
      rule({{a}, {}, {}});
  }

  Instance finish() {
    Instance out;
    out.mode = mode_;
    if (mode_ == GenMode::Cnf) {
      out.theory = Theory::from_clauses(names_.size(), clauses_);
      out.theory.set_names(names_);
      return out;
    }
    out.program = Program(names_.size(), mode_ == GenMode::Normal
                                             ? ProgramKind::Normal
                                             : ProgramKind::Disjunctive);
    for (Rule &r : rules_)
      out.program.add_rule(std::move(r));
    out.program.set_names(names_);
    out.theory = translate(out.program);
    return out;
  }

private:
  GenMode mode_;
  std::vector<std::string> names_;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<Rule> rules_;
};

} // namespace

Instance gen_E(std::size_t t, const std::vector<std::string> &atoms,
               GenMode mode) {
  Builder b(mode);
  std::vector<Atom> xs;
  for (const std::string &name : atoms)
    xs.push_back(b.add_atom(name));
  b.block_E(t, xs);
  return b.finish();
}

Instance gen_F(std::size_t t, std::size_t k, GenMode mode,
               std::optional<std::size_t> pad_to) {
  if (t == 0)
    throw std::invalid_argument("F needs t >= 1");
  const std::size_t width = 2 * t - 1;
  if (pad_to && *pad_to < k * width)
    throw std::invalid_argument("padding target below the size of F");
  Builder b(mode);
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<Atom> xs;
    for (std::size_t j = 1; j <= width; ++j)
      xs.push_back(
          b.add_atom("x" + std::to_string(i) + "_" + std::to_string(j)));
    b.block_E(t, xs);
  }
  if (pad_to) {
    const std::size_t extra = *pad_to - b.num_atoms();
    std::vector<Atom> xs;
    for (std::size_t j = 1; j <= extra; ++j)
      xs.push_back(b.add_atom("p_" + std::to_string(j)));
    if (extra >= t)
      b.block_E(t, xs);
    else
      for (Atom a : xs)
        b.fact(a);
  }
  return b.finish();
}

Instance gen_random(std::size_t n, std::size_t m, std::size_t t, GenMode mode,
                    std::uint64_t seed) {
  if (t == 0)
    throw std::invalid_argument("random instances need t >= 1");
  if (n == 0 && m > 0)
    throw std::invalid_argument("random clauses need at least one atom");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> any_width(1, t);

  Builder b(mode);
  for (std::size_t i = 1; i <= n; ++i)
    b.add_atom("a" + std::to_string(i));
  std::vector<Atom> universe(n);
  std::iota(universe.begin(), universe.end(), Atom{0});

  std::set<std::vector<Literal>> seen_clauses;
  std::set<Rule> seen_rules;
  const std::size_t max_tries = 1000 * (m + 1);
  std::size_t made = 0;
  for (std::size_t tries = 0; made < m; ++tries) {
    if (tries >= max_tries)
      throw std::invalid_argument("cannot draw " + std::to_string(m) +
                                  " distinct clauses over " +
                                  std::to_string(n) + " atoms");
    std::size_t w = std::min(coin(rng) ? t : any_width(rng), n);
    std::vector<Atom> xs = universe;
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(w);

    if (mode == GenMode::Cnf) {
      std::vector<Literal> c;
      for (Atom a : xs)
        c.push_back(coin(rng) ? Literal::pos(a) : Literal::neg(a));
      std::sort(c.begin(), c.end());
      if (!seen_clauses.insert(c).second)
        continue;
      b.clause(std::move(c));
    } else {
      std::size_t heads = 1;
      if (mode == GenMode::Disjunctive)
        heads = std::uniform_int_distribution<std::size_t>(1, w)(rng);
      Rule r;
      r.head.assign(xs.begin(), xs.begin() + static_cast<long>(heads));
      for (std::size_t i = heads; i < w; ++i)
        (coin(rng) ? r.pos_body : r.neg_body).push_back(xs[i]);
      for (AtomSet *part : {&r.head, &r.pos_body, &r.neg_body})
        std::sort(part->begin(), part->end());
      if (!seen_rules.insert(r).second)
        continue;
      b.rule(std::move(r));
    }
    ++made;
  }
  return b.finish();
}

} // namespace minplus
