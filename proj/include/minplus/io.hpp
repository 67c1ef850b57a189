#ifndef MINPLUS_IO_HPP
#define MINPLUS_IO_HPP

#include "minplus/program.hpp"
#include "minplus/theory.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minplus {

/// Input error with a 1-based source position (0 when not applicable).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

struct DimacsResult {
  Theory theory;
  std::vector<std::string> warnings;
};

/// DIMACS CNF.  Variables 1..n become atoms named a1..an.  A clause count
/// that differs from the header is reported as a warning; a malformed
/// header, an out-of-range literal or a clause without its terminating 0 is
/// an error.  Tautological clauses are dropped.
DimacsResult parse_dimacs(std::string_view text);
std::string emit_dimacs(const Theory &t);

/// Ground rules in the usual textual syntax:
///   rule  := head [":-" body] "."
///   head  := atom ("|" atom)*
///   body  := elem ("," elem)*
///   elem  := atom | "not" atom
///   atom  := [a-z][A-Za-z0-9_]*
/// "%" starts a comment running to the end of the line.  Atom ids follow
/// first appearance.  The program is disjunctive iff some head has more than
/// one atom.  Constraints (rules without a head) are rejected.
Program parse_program(std::string_view text);
std::string emit_program(const Program &p);

/// Space-separated atom names; the empty model renders as "".
std::string format_model(const AtomSet &m, const std::vector<std::string> &names);
std::vector<std::string> model_names(const AtomSet &m,
                                     const std::vector<std::string> &names);

/// Names of a theory's atoms, defaulting to a1..an.
std::vector<std::string> atom_names(const Theory &t);

} // namespace minplus

#endif
