#ifndef MINPLUS_CHECKERS_HPP
#define MINPLUS_CHECKERS_HPP

#include "minplus/program.hpp"
#include "minplus/theory.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace minplus {

struct SatStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
};

/// DPLL with unit propagation, pure literal elimination and a
/// most-frequent-literal branching rule.  Returns a satisfying atom set, or
/// nullopt if the theory is unsatisfiable.
std::optional<AtomSet> sat_decide(const Theory &t, SatStats *stats = nullptr);

/// Minimality test for 2-CNF theories through the implication graph of the
/// reduced theory.  Linear in |T| apart from sorting.
bool test_min_2cnf(const Theory &t, const AtomSet &m);

/// Minimality test for arbitrary CNF through |m| satisfiability calls.
bool test_min_sat(const Theory &t, const AtomSet &m);

/// Dispatches to test_min_2cnf or test_min_sat by clause width.
bool test_min(const Theory &t, const AtomSet &m);

/// Exhaustive reference implementations, for small universes only.  They
/// throw std::length_error when the atom universe exceeds the cap, which
/// itself may not exceed kBruteHardCap.
constexpr std::size_t kBruteMinimalCap = 14;
constexpr std::size_t kBruteProgramCap = 12;
constexpr std::size_t kBruteHardCap = 24;

std::vector<AtomSet> brute_minimal_models(const Theory &t,
                                          std::size_t cap = kBruteMinimalCap);
std::vector<AtomSet> brute_stable_models(const Program &p,
                                         std::size_t cap = kBruteProgramCap);
std::vector<AtomSet> brute_answer_sets(const Program &p,
                                       std::size_t cap = kBruteProgramCap);

} // namespace minplus

#endif
