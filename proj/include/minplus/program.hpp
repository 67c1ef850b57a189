#ifndef MINPLUS_PROGRAM_HPP
#define MINPLUS_PROGRAM_HPP

#include "minplus/theory.hpp"

#include <string>
#include <vector>

namespace minplus {

/// head_1 | ... | head_k :- pos_1, ..., pos_m, not neg_1, ..., not neg_n.
/// All three parts are sorted atom sets; the head is never empty.
struct Rule {
  AtomSet head;
  AtomSet pos_body;
  AtomSet neg_body;

  friend bool operator==(const Rule &, const Rule &) = default;
  friend auto operator<=>(const Rule &, const Rule &) = default;
};

enum class ProgramKind { Normal, Disjunctive };

/// Ground propositional program over atoms [0, num_atoms).
class Program {
public:
  Program() = default;
  Program(std::size_t num_atoms, ProgramKind kind);

  // Sorts and deduplicates the three parts.  Throws std::invalid_argument for
  // an empty head, an out-of-range atom, or a multi-atom head in a normal
  // program.
  void add_rule(Rule rule);

  std::size_t num_atoms() const { return num_atoms_; }
  ProgramKind kind() const { return kind_; }
  const std::vector<Rule> &rules() const { return rules_; }
  std::size_t num_rules() const { return rules_.size(); }

  void set_names(std::vector<std::string> names);
  const std::vector<std::string> &names() const { return names_; }
  std::string atom_name(Atom a) const;

  friend bool operator==(const Program &, const Program &) = default;

private:
  std::size_t num_atoms_ = 0;
  ProgramKind kind_ = ProgramKind::Normal;
  std::vector<Rule> rules_;
  std::vector<std::string> names_;
};

/// Clause form: each rule becomes -pos | neg | head.  Rules whose clause is a
/// tautology (an atom both in the head and the positive body, say) are
/// dropped.  Names are carried over.
Theory translate(const Program &p);

/// Gelfond-Lifschitz reduct: rules whose negative body meets m are deleted,
/// negative bodies are removed from the rest.
Program reduct(const Program &p, const AtomSet &m);

/// Least model of a negation-free normal program, computed with per-rule
/// counters of unsatisfied body atoms.  `operations`, when given, receives the
/// number of counter decrements plus rule firings.
AtomSet least_model(const Program &p, std::size_t *operations = nullptr);

/// m is a stable model of the normal program p.
bool test_stb(const Program &p, const AtomSet &m);

/// m is an answer set of p: a minimal model of reduct(p, m).
bool test_anset(const Program &p, const AtomSet &m);

} // namespace minplus

#endif
