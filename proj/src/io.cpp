#include "minplus/io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace minplus {

namespace {

std::string located(const std::string &msg, std::size_t line,
                    std::size_t column) {
  if (line == 0)
    return msg;
  std::string where = "line " + std::to_string(line);
  if (column)
    where += ", column " + std::to_string(column);
  return where + ": " + msg;
}

} // namespace

ParseError::ParseError(const std::string &msg, std::size_t line,
                       std::size_t column)
    : std::runtime_error(located(msg, line, column)), line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// DIMACS

DimacsResult parse_dimacs(std::string_view text) {
  DimacsResult out;
  bool header = false;
  long long declared_vars = 0, declared_clauses = 0, seen_clauses = 0;
  std::vector<Literal> current;
  std::size_t line_no = 0, open_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == 'c')
      continue;
    if (line[first] == '%')
      break;

    std::istringstream in{std::string(line)};
    if (line[first] == 'p') {
      if (header)
        throw ParseError("duplicate problem line", line_no, first + 1);
      std::string p, fmt, extra;
      if (!(in >> p >> fmt >> declared_vars >> declared_clauses) || p != "p" ||
          fmt != "cnf" || declared_vars < 0 || declared_clauses < 0 ||
          (in >> extra))
        throw ParseError("malformed problem line, expected 'p cnf <vars> "
                         "<clauses>'",
                         line_no, first + 1);
      header = true;
      out.theory = Theory(static_cast<std::size_t>(declared_vars));
      continue;
    }
    if (!header)
      throw ParseError("clause before problem line", line_no, first + 1);

    std::string tok;
    while (in >> tok) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("invalid literal '" + tok + "'", line_no, 0);
      if (v == 0) {
        ++seen_clauses;
        out.theory.add_clause(std::span<const Literal>(current));
        current.clear();
        continue;
      }
      long long var = v < 0 ? -v : v;
      if (var > declared_vars)
        throw ParseError("literal " + tok + " outside declared range 1.." +
                             std::to_string(declared_vars),
                         line_no, 0);
      if (current.empty())
        open_line = line_no;
      current.push_back(Literal(static_cast<Atom>(var - 1), v > 0));
    }
  }
  if (!header)
    throw ParseError("missing problem line", 0, 0);
  if (!current.empty())
    throw ParseError("clause not terminated by 0", open_line, 0);
  if (seen_clauses != declared_clauses)
    out.warnings.push_back("header declares " +
                           std::to_string(declared_clauses) +
                           " clauses, found " + std::to_string(seen_clauses));
  std::vector<std::string> names;
  for (long long i = 1; i <= declared_vars; ++i)
    names.push_back("a" + std::to_string(i));
  out.theory.set_names(std::move(names));
  return out;
}

std::string emit_dimacs(const Theory &t) {
  std::string s = "p cnf " + std::to_string(t.num_atoms()) + " " +
                  std::to_string(t.num_clauses()) + "\n";
  for (const Clause &c : t.clauses()) {
    for (Literal l : c) {
      if (!l.positive())
        s += '-';
      s += std::to_string(l.atom() + 1);
      s += ' ';
    }
    s += "0\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// rule syntax

namespace {

class RuleParser {
public:
  explicit RuleParser(std::string_view text) : text_(text) {}

  Program parse() {
    std::vector<Rule> rules;
    bool disjunctive = false;
    for (skip(); pos_ < text_.size(); skip()) {
      rules.push_back(rule());
      disjunctive = disjunctive || rules.back().head.size() > 1;
    }
    Program p(names_.size(),
              disjunctive ? ProgramKind::Disjunctive : ProgramKind::Normal);
    for (Rule &r : rules)
      p.add_rule(std::move(r));
    p.set_names(names_);
    return p;
  }

private:
  [[noreturn]] void error(const std::string &msg) const {
    throw ParseError(msg, line_, col_);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Skips whitespace and comments.
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool peek(std::string_view s) {
    skip();
    return text_.substr(pos_, s.size()) == s;
  }

  void expect(std::string_view s) {
    if (!peek(s))
      error("expected '" + std::string(s) + "'" + found());
    for (std::size_t i = 0; i < s.size(); ++i)
      advance();
  }

  std::string found() const {
    if (pos_ >= text_.size())
      return " but reached end of input";
    return std::string(" but found '") + text_[pos_] + "'";
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string word() {
    skip();
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_])))
      error("expected an atom" + found());
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_]))
      advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  Atom atom() {
    skip();
    const std::size_t line = line_, col = col_;
    std::string w = word();
    if (w == "not")
      throw ParseError("'not' cannot be used as an atom", line, col);
    auto [it, fresh] = ids_.emplace(w, static_cast<Atom>(names_.size()));
    if (fresh)
      names_.push_back(w);
    return it->second;
  }

  // "not" followed by a separator, as opposed to an atom such as "nota".
  bool at_not() {
    if (!peek("not"))
      return false;
    std::size_t after = pos_ + 3;
    return after >= text_.size() || !ident_char(text_[after]);
  }

  Rule rule() {
    if (peek(":-"))
      error("constraints (rules without head) are not supported");
    Rule r;
    r.head.push_back(atom());
    while (peek("|")) {
      expect("|");
      r.head.push_back(atom());
    }
    if (peek(":-")) {
      expect(":-");
      do {
        if (at_not()) {
          expect("not");
          r.neg_body.push_back(atom());
        } else {
          r.pos_body.push_back(atom());
        }
      } while (peek(",") && (expect(","), true));
    }
    expect(".");
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::map<std::string, Atom> ids_;
  std::vector<std::string> names_;
};

} // namespace

Program parse_program(std::string_view text) { return RuleParser(text).parse(); }

std::string emit_program(const Program &p) {
  std::string s;
  for (const Rule &r : p.rules()) {
    for (std::size_t i = 0; i < r.head.size(); ++i)
      s += (i ? " | " : "") + p.atom_name(r.head[i]);
    if (!r.pos_body.empty() || !r.neg_body.empty()) {
      s += " :- ";
      bool first = true;
      for (Atom a : r.pos_body) {
        s += (first ? "" : ", ") + p.atom_name(a);
        first = false;
      }
      for (Atom a : r.neg_body) {
        s += (first ? "not " : ", not ") + p.atom_name(a);
        first = false;
      }
    }
    s += ".\n";
  }
  return s;
}

// ---------------------------------------------------------------------------
// models

std::vector<std::string> model_names(const AtomSet &m,
                                     const std::vector<std::string> &names) {
  std::vector<std::string> out;
  for (Atom a : m)
    out.push_back(a < names.size() ? names[a] : "a" + std::to_string(a + 1));
  return out;
}

std::string format_model(const AtomSet &m,
                         const std::vector<std::string> &names) {
  std::string s;
  auto ns = model_names(m, names);
  for (std::size_t i = 0; i < ns.size(); ++i)
    s += (i ? " " : "") + ns[i];
  return s;
}

std::vector<std::string> atom_names(const Theory &t) {
  std::vector<std::string> out;
  for (Atom a = 0; a < t.num_atoms(); ++a)
    out.push_back(t.atom_name(a));
  return out;
}

} // namespace minplus
