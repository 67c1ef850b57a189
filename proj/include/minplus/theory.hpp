#ifndef MINPLUS_THEORY_HPP
#define MINPLUS_THEORY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minplus {

using Atom = std::uint32_t;

// Sorted, duplicate-free list of atom ids.  Used for models and candidates.
using AtomSet = std::vector<Atom>;

/// Signed reference to an atom.  Encoded as 2*atom + (negative ? 1 : 0) so
/// that a literal and its dual are neighbours in the code space.
class Literal {
public:
  constexpr Literal() = default;
  constexpr Literal(Atom atom, bool positive)
      : code_((atom << 1) | (positive ? 0u : 1u)) {}

  static constexpr Literal pos(Atom atom) { return Literal(atom, true); }
  static constexpr Literal neg(Atom atom) { return Literal(atom, false); }
  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr Atom atom() const { return code_ >> 1; }
  constexpr bool positive() const { return (code_ & 1u) == 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Literal dual() const { return from_code(code_ ^ 1u); }
  constexpr Literal operator~() const { return dual(); }

  constexpr auto operator<=>(const Literal &) const = default;

private:
  std::uint32_t code_ = 0;
};

/// A clause is a set of literals.  Literals are kept sorted by code, so two
/// clauses are equal iff they contain the same literals.
class Clause {
public:
  Clause() = default;

  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  std::span<const Literal> literals() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal l) const;
  bool has_atom(Atom a) const;
  // Literal of `a` in this clause; requires has_atom(a).
  Literal literal_of(Atom a) const;

  friend bool operator==(const Clause &, const Clause &) = default;
  friend auto operator<=>(const Clause &a, const Clause &b) {
    return a.lits_ <=> b.lits_;
  }

private:
  friend std::optional<Clause> normalize_clause(std::span<const Literal>);
  std::vector<Literal> lits_;
};

/// Removes duplicate literals.  Returns nullopt when the literals contain a
/// complementary pair (the clause is a tautology).
std::optional<Clause> normalize_clause(std::span<const Literal> lits);

/// Literal sets used as assumptions and cover branches: sorted by code.
using LiteralSet = std::vector<Literal>;

LiteralSet make_literal_set(std::initializer_list<Literal> lits);
LiteralSet make_literal_set(std::span<const Literal> lits);
bool is_consistent(std::span<const Literal> lits);
// Positive part L+ of a literal set, as a sorted atom list.
AtomSet positive_atoms(std::span<const Literal> lits);

/// Clause database with a per-literal occurrence index.
///
/// The atom universe is [0, num_atoms()).  At(T), the set of atoms that
/// actually occur in some clause, is available through occurring_atoms().
/// Tautologies are dropped and duplicate literals merged on insertion, so
/// every stored clause is a proper set of non-complementary literals.
class Theory {
public:
  Theory() = default;
  explicit Theory(std::size_t num_atoms);

  // Builds a theory from raw literal lists, normalizing each one.
  static Theory from_clauses(std::size_t num_atoms,
                             const std::vector<std::vector<Literal>> &clauses);

  // Returns false (and stores nothing) if `lits` is a tautology.
  bool add_clause(std::span<const Literal> lits);
  bool add_clause(std::initializer_list<Literal> lits) {
    return add_clause(std::span<const Literal>(lits.begin(), lits.size()));
  }
  void add_clause(Clause clause);

  std::size_t num_atoms() const { return num_atoms_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  // Total number of literal occurrences.
  std::size_t size() const { return size_; }
  bool empty() const { return clauses_.empty(); }
  bool has_empty_clause() const { return empty_clauses_ > 0; }
  std::size_t max_width() const;

  const std::vector<Clause> &clauses() const { return clauses_; }
  const Clause &clause(std::size_t i) const { return clauses_[i]; }
  std::span<const std::uint32_t> occurrences(Literal l) const;

  AtomSet occurring_atoms() const;
  std::size_t occurring_atom_count() const;
  bool occurs(Atom a) const;

  // Optional external names.  Without names, atom i renders as "a<i+1>".
  void set_names(std::vector<std::string> names);
  const std::shared_ptr<const std::vector<std::string>> &names() const {
    return names_;
  }
  std::string atom_name(Atom a) const;

  // Recomputes the occurrence index from scratch and compares; used by tests
  // to audit structural consistency after transformations.
  bool audit() const;

  friend bool operator==(const Theory &a, const Theory &b) {
    return a.num_atoms_ == b.num_atoms_ && a.clauses_ == b.clauses_;
  }

private:
  void index_clause(std::size_t idx);

  std::size_t num_atoms_ = 0;
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::size_t size_ = 0;
  std::size_t empty_clauses_ = 0;
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// T_L: drops every clause that meets L and deletes the duals of L's
/// literals from the remaining clauses.  Throws std::invalid_argument if L
/// is inconsistent or mentions an atom outside the universe.
Theory reduce(const Theory &theory, std::span<const Literal> assumptions);

/// Removes repeated clauses and every 3-clause subsumed by a 2-clause.  The
/// result has exactly the same models.  Clause order follows first
/// occurrence in the input.
Theory sigma_simplify(const Theory &theory);

/// True iff the atom set `model` (sorted) satisfies every clause.
bool is_model(const Theory &theory, std::span<const Atom> model);
bool is_model(const Theory &theory, const std::vector<char> &membership);

std::vector<char> membership(std::size_t num_atoms, std::span<const Atom> atoms);

std::string to_string(Literal l, const Theory *names = nullptr);
std::string to_string(const Clause &c, const Theory *names = nullptr);

} // namespace minplus

#endif
