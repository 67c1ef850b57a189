#include "minplus/theory.hpp"

#include <algorithm>
#include <unordered_set>

namespace minplus {

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::has_atom(Atom a) const {
  return contains(Literal::pos(a)) || contains(Literal::neg(a));
}

Literal Clause::literal_of(Atom a) const {
  if (contains(Literal::pos(a)))
    return Literal::pos(a);
  if (contains(Literal::neg(a)))
    return Literal::neg(a);
  throw std::logic_error("clause does not mention atom");
}

std::optional<Clause> normalize_clause(std::span<const Literal> lits) {
  Clause c;
  c.lits_.assign(lits.begin(), lits.end());
  std::sort(c.lits_.begin(), c.lits_.end());
  c.lits_.erase(std::unique(c.lits_.begin(), c.lits_.end()), c.lits_.end());
  // A literal and its dual differ only in the low bit, so they end up next to
  // each other after sorting.
  for (std::size_t i = 1; i < c.lits_.size(); ++i)
    if (c.lits_[i].atom() == c.lits_[i - 1].atom())
      return std::nullopt;
  return c;
}

LiteralSet make_literal_set(std::span<const Literal> lits) {
  LiteralSet s(lits.begin(), lits.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

LiteralSet make_literal_set(std::initializer_list<Literal> lits) {
  return make_literal_set(std::span<const Literal>(lits.begin(), lits.size()));
}

bool is_consistent(std::span<const Literal> lits) {
  LiteralSet s = make_literal_set(lits);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].atom() == s[i - 1].atom())
      return false;
  return true;
}

AtomSet positive_atoms(std::span<const Literal> lits) {
  AtomSet out;
  for (Literal l : lits)
    if (l.positive())
      out.push_back(l.atom());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Theory::Theory(std::size_t num_atoms)
    : num_atoms_(num_atoms), occ_(2 * num_atoms) {}

Theory Theory::from_clauses(std::size_t num_atoms,
                            const std::vector<std::vector<Literal>> &clauses) {
  Theory t(num_atoms);
  for (const auto &c : clauses)
    t.add_clause(std::span<const Literal>(c));
  return t;
}

bool Theory::add_clause(std::span<const Literal> lits) {
  auto c = normalize_clause(lits);
  if (!c)
    return false;
  add_clause(std::move(*c));
  return true;
}

void Theory::add_clause(Clause clause) {
  for (Literal l : clause)
    if (l.atom() >= num_atoms_)
      throw std::invalid_argument("literal refers to atom outside universe");
  clauses_.push_back(std::move(clause));
  index_clause(clauses_.size() - 1);
}

void Theory::index_clause(std::size_t idx) {
  const Clause &c = clauses_[idx];
  for (Literal l : c)
    occ_[l.code()].push_back(static_cast<std::uint32_t>(idx));
  size_ += c.size();
  if (c.empty())
    ++empty_clauses_;
}

std::size_t Theory::max_width() const {
  std::size_t w = 0;
  for (const auto &c : clauses_)
    w = std::max(w, c.size());
  return w;
}

std::span<const std::uint32_t> Theory::occurrences(Literal l) const {
  if (l.code() >= occ_.size())
    return {};
  return occ_[l.code()];
}

bool Theory::occurs(Atom a) const {
  return a < num_atoms_ && (!occ_[2 * a].empty() || !occ_[2 * a + 1].empty());
}

AtomSet Theory::occurring_atoms() const {
  AtomSet out;
  for (Atom a = 0; a < num_atoms_; ++a)
    if (occurs(a))
      out.push_back(a);
  return out;
}

std::size_t Theory::occurring_atom_count() const {
  std::size_t n = 0;
  for (Atom a = 0; a < num_atoms_; ++a)
    n += occurs(a) ? 1 : 0;
  return n;
}

void Theory::set_names(std::vector<std::string> names) {
  if (names.size() != num_atoms_)
    throw std::invalid_argument("name table size does not match atom count");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::string Theory::atom_name(Atom a) const {
  if (names_ && a < names_->size())
    return (*names_)[a];
  return "a" + std::to_string(a + 1);
}

bool Theory::audit() const {
  std::vector<std::vector<std::uint32_t>> fresh(2 * num_atoms_);
  std::size_t size = 0, empties = 0;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause &c = clauses_[i];
    if (!std::is_sorted(c.begin(), c.end()))
      return false;
    for (std::size_t j = 1; j < c.size(); ++j)
      if (c[j].atom() == c[j - 1].atom())
        return false;
    for (Literal l : c) {
      if (l.atom() >= num_atoms_)
        return false;
      fresh[l.code()].push_back(static_cast<std::uint32_t>(i));
    }
    size += c.size();
    empties += c.empty() ? 1 : 0;
  }
  return fresh == occ_ && size == size_ && empties == empty_clauses_;
}

Theory reduce(const Theory &theory, std::span<const Literal> assumptions) {
  const std::size_t n = theory.num_atoms();
  // 0 = unassigned, 1 = literal in L, 2 = dual in L
  std::vector<std::uint8_t> mark(2 * n, 0);
  for (Literal l : assumptions) {
    if (l.atom() >= n)
      throw std::invalid_argument("assumption refers to atom outside universe");
    if (mark[l.code()] == 2)
      throw std::invalid_argument("inconsistent assumption set");
    mark[l.code()] = 1;
    mark[l.dual().code()] = 2;
  }

  std::vector<char> satisfied(theory.num_clauses(), 0);
  for (Literal l : assumptions)
    for (std::uint32_t ci : theory.occurrences(l))
      satisfied[ci] = 1;

  Theory out(n);
  std::vector<Literal> buf;
  for (std::size_t i = 0; i < theory.num_clauses(); ++i) {
    if (satisfied[i])
      continue;
    buf.clear();
    for (Literal l : theory.clause(i))
      if (mark[l.code()] != 2)
        buf.push_back(l);
    // Removing literals from a normalized clause keeps it normalized.
    out.add_clause(*normalize_clause(buf));
  }
  if (theory.names())
    out.set_names(*theory.names());
  return out;
}

namespace {

// LSD radix sort of clause indices by their literal sequences.  Clauses are
// compared as code sequences padded with 0 at the end; codes are shifted by
// one so that the padding sorts before every literal.
std::vector<std::uint32_t> radix_order(const Theory &t) {
  const std::size_t k = t.num_clauses();
  std::vector<std::uint32_t> order(k), tmp(k);
  for (std::uint32_t i = 0; i < k; ++i)
    order[i] = i;
  const std::size_t width = t.max_width();
  const std::size_t buckets = 2 * t.num_atoms() + 1;
  std::vector<std::size_t> count(buckets + 1);
  auto key = [&](std::uint32_t ci, std::size_t pos) -> std::size_t {
    const Clause &c = t.clause(ci);
    return pos < c.size() ? c[pos].code() + 1 : 0;
  };
  for (std::size_t pos = width; pos-- > 0;) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t ci : order)
      ++count[key(ci, pos) + 1];
    for (std::size_t b = 1; b <= buckets; ++b)
      count[b] += count[b - 1];
    for (std::uint32_t ci : order)
      tmp[count[key(ci, pos)]++] = ci;
    order.swap(tmp);
  }
  return order;
}

std::uint64_t pair_key(Literal x, Literal y) {
  return (static_cast<std::uint64_t>(x.code()) << 32) | y.code();
}

} // namespace

Theory sigma_simplify(const Theory &theory) {
  const std::size_t k = theory.num_clauses();
  std::vector<char> keep(k, 1);

  // Duplicates are adjacent in radix order; keep the first occurrence.
  std::vector<std::uint32_t> order = radix_order(theory);
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    std::uint32_t first = order[i];
    while (j < order.size() &&
           theory.clause(order[j]) == theory.clause(order[i])) {
      first = std::min(first, order[j]);
      ++j;
    }
    for (std::size_t r = i; r < j; ++r)
      if (order[r] != first)
        keep[order[r]] = 0;
    i = j;
  }

  std::unordered_set<std::uint64_t> twos;
  for (std::size_t i = 0; i < k; ++i) {
    const Clause &c = theory.clause(i);
    if (c.size() == 2)
      twos.insert(pair_key(c[0], c[1]));
  }
  if (!twos.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      const Clause &c = theory.clause(i);
      if (c.size() != 3 || !keep[i])
        continue;
      if (twos.count(pair_key(c[0], c[1])) || twos.count(pair_key(c[0], c[2])) ||
          twos.count(pair_key(c[1], c[2])))
        keep[i] = 0;
    }
  }

  Theory out(theory.num_atoms());
  for (std::size_t i = 0; i < k; ++i)
    if (keep[i])
      out.add_clause(theory.clause(i));
  if (theory.names())
    out.set_names(*theory.names());
  return out;
}

std::vector<char> membership(std::size_t num_atoms, std::span<const Atom> atoms) {
  std::vector<char> in(num_atoms, 0);
  for (Atom a : atoms) {
    if (a >= num_atoms)
      throw std::invalid_argument("atom outside universe");
    in[a] = 1;
  }
  return in;
}

bool is_model(const Theory &theory, const std::vector<char> &in) {
  for (const Clause &c : theory.clauses()) {
    bool sat = false;
    for (Literal l : c)
      if (static_cast<bool>(in[l.atom()]) == l.positive()) {
        sat = true;
        break;
      }
    if (!sat)
      return false;
  }
  return true;
}

bool is_model(const Theory &theory, std::span<const Atom> model) {
  return is_model(theory, membership(theory.num_atoms(), model));
}

std::string to_string(Literal l, const Theory *names) {
  std::string base = names ? names->atom_name(l.atom())
                           : "a" + std::to_string(l.atom() + 1);
  return l.positive() ? base : "-" + base;
}

std::string to_string(const Clause &c, const Theory *names) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i)
      s += " | ";
    s += to_string(c[i], names);
  }
  return c.empty() ? "<empty>" : s;
}

} // namespace minplus
