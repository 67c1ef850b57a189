#ifndef MINPLUS_GENERATORS_HPP
#define MINPLUS_GENERATORS_HPP

#include "minplus/program.hpp"
#include "minplus/theory.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minplus {

enum class GenMode { Cnf, Normal, Disjunctive };

GenMode parse_gen_mode(const std::string &s);
const char *to_string(GenMode mode);

/// A generated instance.  `theory` is always filled (for program modes it is
/// translate(program)); `program` only for Normal and Disjunctive.
struct Instance {
  GenMode mode = GenMode::Cnf;
  Theory theory;
  Program program;
};

/// E_{t,X}: the positive t-clauses over X.  In Normal mode each t-subset S
/// yields, for every h in S, the rule h :- not (S - {h}).  In Disjunctive
/// mode each t-subset becomes a disjunctive fact.  Its minimal models are
/// the (|X|-t+1)-subsets of X.
Instance gen_E(std::size_t t, const std::vector<std::string> &atoms,
               GenMode mode);

/// F_{t,k}: k disjoint copies of E_t over 2t-1 atoms each, named xI_J.  With
/// `pad_to`, atoms are appended until the universe has exactly that size:
/// an extra E_t block when at least t atoms remain, facts otherwise.
Instance gen_F(std::size_t t, std::size_t k, GenMode mode,
               std::optional<std::size_t> pad_to = std::nullopt);

/// Random instance with m distinct clauses over n atoms.  Each clause has
/// width t with probability 1/2, otherwise a uniform width in [1, t].  Atoms
/// within a clause are distinct; repeated clauses are redrawn.  Program
/// modes turn one atom (Normal) or a random non-empty subset (Disjunctive)
/// into the head and split the rest into positive and negative body.
Instance gen_random(std::size_t n, std::size_t m, std::size_t t, GenMode mode,
                    std::uint64_t seed);

} // namespace minplus

#endif
