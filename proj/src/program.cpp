#include "minplus/program.hpp"

#include "minplus/checkers.hpp"

#include <algorithm>
#include <stdexcept>

namespace minplus {

namespace {

void canonical(AtomSet &s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

} // namespace

Program::Program(std::size_t num_atoms, ProgramKind kind)
    : num_atoms_(num_atoms), kind_(kind) {}

void Program::add_rule(Rule rule) {
  canonical(rule.head);
  canonical(rule.pos_body);
  canonical(rule.neg_body);
  if (rule.head.empty())
    throw std::invalid_argument("rule with empty head");
  if (kind_ == ProgramKind::Normal && rule.head.size() > 1)
    throw std::invalid_argument("disjunctive head in a normal program");
  for (const AtomSet *part : {&rule.head, &rule.pos_body, &rule.neg_body})
    if (!part->empty() && part->back() >= num_atoms_)
      throw std::invalid_argument("rule refers to atom outside universe");
  rules_.push_back(std::move(rule));
}

void Program::set_names(std::vector<std::string> names) {
  if (names.size() != num_atoms_)
    throw std::invalid_argument("name table size does not match atom count");
  names_ = std::move(names);
}

std::string Program::atom_name(Atom a) const {
  if (a < names_.size())
    return names_[a];
  return "a" + std::to_string(a + 1);
}

Theory translate(const Program &p) {
  Theory t(p.num_atoms());
  std::vector<Literal> buf;
  for (const Rule &r : p.rules()) {
    buf.clear();
    for (Atom a : r.pos_body)
      buf.push_back(Literal::neg(a));
    for (Atom a : r.neg_body)
      buf.push_back(Literal::pos(a));
    for (Atom a : r.head)
      buf.push_back(Literal::pos(a));
    t.add_clause(std::span<const Literal>(buf));
  }
  if (!p.names().empty())
    t.set_names(p.names());
  return t;
}

Program reduct(const Program &p, const AtomSet &m) {
  Program out(p.num_atoms(), p.kind());
  for (const Rule &r : p.rules()) {
    bool blocked = std::any_of(r.neg_body.begin(), r.neg_body.end(), [&](Atom a) {
      return std::binary_search(m.begin(), m.end(), a);
    });
    if (!blocked)
      out.add_rule({r.head, r.pos_body, {}});
  }
  if (!p.names().empty())
    out.set_names(p.names());
  return out;
}

AtomSet least_model(const Program &p, std::size_t *operations) {
  const std::size_t n = p.num_atoms();
  std::vector<std::vector<std::uint32_t>> watch(n);
  std::vector<std::size_t> missing(p.num_rules());
  std::vector<char> in(n, 0);
  std::vector<Atom> queue;
  std::size_t ops = 0;

  auto derive = [&](Atom a) {
    if (!in[a]) {
      in[a] = 1;
      queue.push_back(a);
    }
  };

  for (std::uint32_t i = 0; i < p.num_rules(); ++i) {
    const Rule &r = p.rules()[i];
    if (r.head.size() != 1 || !r.neg_body.empty())
      throw std::invalid_argument("least_model needs a definite normal program");
    missing[i] = r.pos_body.size();
    for (Atom a : r.pos_body)
      watch[a].push_back(i);
    if (missing[i] == 0) {
      ++ops;
      derive(r.head[0]);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::uint32_t ri : watch[queue[qi]]) {
      ++ops;
      if (--missing[ri] == 0) {
        ++ops;
        derive(p.rules()[ri].head[0]);
      }
    }

  if (operations)
    *operations = ops;
  AtomSet out;
  for (Atom a = 0; a < n; ++a)
    if (in[a])
      out.push_back(a);
  return out;
}

bool test_stb(const Program &p, const AtomSet &m) {
  return least_model(reduct(p, m)) == m;
}

bool test_anset(const Program &p, const AtomSet &m) {
  Theory t = translate(reduct(p, m));
  if (!is_model(t, std::span<const Atom>(m)))
    return false;
  return t.max_width() <= 2 ? test_min_2cnf(t, m) : test_min_sat(t, m);
}

} // namespace minplus
