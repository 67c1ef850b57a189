#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include "minplus/engine.hpp"
#include "minplus/generators.hpp"

#include <cmath>

using namespace minplus;
using oracle::cnf;

namespace {

Program normal(std::size_t n, std::vector<Rule> rules) {
  Program p(n, ProgramKind::Normal);
  for (Rule &r : rules)
    p.add_rule(std::move(r));
  return p;
}

Program disjunctive(std::size_t n, std::vector<Rule> rules) {
  Program p(n, ProgramKind::Disjunctive);
  for (Rule &r : rules)
    p.add_rule(std::move(r));
  return p;
}

bool includes_all(const std::vector<AtomSet> &sup,
                  const std::vector<AtomSet> &sub) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

void check_invariants(const BranchStats &s) {
  CHECK(s.leaves <= s.nodes);
  CHECK(s.candidates_emitted <= s.leaves);
  CHECK(s.candidates_after_dedup <= s.candidates_emitted);
}

} // namespace

TEST_CASE("min_plus examples") {
  CandidateFamily empty = min_plus(Theory(0));
  CHECK(empty.sets == std::vector<AtomSet>{{}});
  CHECK(empty.stats.leaves == 1);

  CandidateFamily ab = min_plus(cnf(2, {{1, 2}}));
  CHECK(ab.sets == std::vector<AtomSet>{{0}, {1}});
  CHECK(ab.stats.leaves == 2);

  CandidateFamily bottom = min_plus(cnf(1, {{1}, {-1}}));
  CHECK(bottom.sets.empty());
  CHECK(bottom.stats.leaves == 1);

  Instance f = gen_F(2, 3, GenMode::Cnf);
  CandidateFamily fam = min_plus(f.theory);
  CHECK(fam.sets.size() == 27);
  CHECK(fam.stats.leaves == 27);
  check_invariants(fam.stats);
}

TEST_CASE("root assumptions") {
  Theory t = cnf(3, {{1, 2}, {2, 3}});
  CandidateFamily fam = min_plus(t, oracle::lits({-2}));
  // Only a and c remain forced.
  CHECK(fam.sets == std::vector<AtomSet>{{0, 2}});
  CandidateFamily pos = min_plus(t, oracle::lits({1}));
  for (const AtomSet &s : pos.sets)
    CHECK(std::binary_search(s.begin(), s.end(), Atom{0}));
}

TEST_CASE("dispatch by width") {
  Dispatch d2 = resolve_dispatch(cnf(2, {{1, 2}}), CoverKind::Auto, SigmaKind::Auto);
  CHECK(d2.cover == CoverKind::Two);
  CHECK(d2.sigma == SigmaKind::Identity);
  Dispatch d3 = resolve_dispatch(cnf(3, {{1, 2, 3}}), CoverKind::Auto, SigmaKind::Auto);
  CHECK(d3.cover == CoverKind::Three);
  CHECK(d3.sigma == SigmaKind::Simplify);
  Dispatch d4 = resolve_dispatch(cnf(4, {{1, 2, 3, 4}}), CoverKind::Auto, SigmaKind::Auto);
  CHECK(d4.cover == CoverKind::Generic);
  CHECK(d4.sigma == SigmaKind::Identity);
  Dispatch forced = resolve_dispatch(cnf(2, {{1, 2}}), CoverKind::Generic,
                                     SigmaKind::Simplify);
  CHECK(forced.cover == CoverKind::Generic);
  CHECK(forced.sigma == SigmaKind::Simplify);
}

TEST_CASE("min_mod, stb_mod and ans_set examples") {
  Instance e = gen_E(2, {"a", "b", "c"}, GenMode::Cnf);
  CHECK(min_mod(e.theory).models ==
        std::vector<AtomSet>{{0, 1}, {0, 2}, {1, 2}});

  // a :- not b.  b :- not a.
  Program choice = normal(2, {{{0}, {}, {1}}, {{1}, {}, {0}}});
  CHECK(stb_mod(choice).models == std::vector<AtomSet>{{0}, {1}});

  // a :- a.
  CHECK(stb_mod(normal(1, {{{0}, {0}, {}}})).models ==
        std::vector<AtomSet>{{}});

  // a :- not a.
  CHECK(stb_mod(normal(1, {{{0}, {}, {0}}})).models.empty());

  Program fact = disjunctive(2, {{{0, 1}, {}, {}}});
  CHECK(ans_set(fact).models == std::vector<AtomSet>{{0}, {1}});

  Program loop = disjunctive(
      2, {{{0, 1}, {}, {}}, {{0}, {1}, {}}, {{1}, {0}, {}}});
  CHECK(ans_set(loop).models == std::vector<AtomSet>{{0, 1}});

  CHECK_THROWS_AS(stb_mod(fact), std::invalid_argument);
}

TEST_CASE("candidates contain every minimal model") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t width = 2 + rng() % 3;
    Theory t = oracle::random_cnf(rng, n, rng() % 16, width);
    CandidateFamily fam = min_plus(t);
    const auto minimal = oracle::minimal_models(t);
    CHECK(includes_all(fam.sets, minimal));
    CHECK(std::is_sorted(fam.sets.begin(), fam.sets.end()));
    CHECK(std::adjacent_find(fam.sets.begin(), fam.sets.end()) ==
          fam.sets.end());
    CHECK(fam.stats.candidates_after_dedup == fam.sets.size());
    check_invariants(fam.stats);
    ModelResult exact = min_mod(t);
    CHECK(exact.models == minimal);
  }
}

TEST_CASE("every cover and simplification is sound") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 8;
    Theory t = oracle::random_cnf(rng, n, rng() % 12, 2 + rng() % 2);
    const auto minimal = oracle::minimal_models(t);
    for (CoverKind k : {CoverKind::Auto, CoverKind::Generic}) {
      for (SigmaKind s : {SigmaKind::Identity, SigmaKind::Simplify}) {
        if (k == CoverKind::Auto && t.max_width() == 3 && s == SigmaKind::Identity)
          continue; // cover3 requires simplified input
        EngineOptions o;
        o.cover = k;
        o.sigma = s;
        CHECK(min_mod(t, o).models == minimal);
      }
    }
  }
}

TEST_CASE("leaf bounds") {
  CHECK(leaf_bound_base(2) == doctest::Approx(std::cbrt(3.0)));
  CHECK(leaf_bound_base(3) == doctest::Approx(1.6702));
  CHECK(leaf_bound_base(4) == doctest::Approx(1.9276).epsilon(1e-4));
  CHECK(leaf_bound_base(5) == doctest::Approx(1.9659).epsilon(1e-4));
  for (std::size_t t = 4; t <= 8; ++t) {
    const double x = leaf_bound_base(t);
    double rhs = 0;
    for (std::size_t i = 0; i < t; ++i)
      rhs += std::pow(x, static_cast<double>(i));
    CHECK(std::pow(x, static_cast<double>(t)) == doctest::Approx(rhs));
  }

  std::mt19937_64 rng(47);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t width = 2 + rng() % 3;
    Theory t = oracle::random_cnf(rng, n, rng() % 20, width);
    if (width == 3)
      t = sigma_simplify(t);
    const std::size_t w = t.max_width();
    CandidateFamily fam = min_plus(t);
    const std::size_t atoms = t.occurring_atom_count();
    const double leaves = static_cast<double>(fam.stats.leaves);
    if (w <= 2)
      CHECK(leaves * leaves * leaves <= std::pow(3.0, double(atoms)) + 1e-9);
    else
      CHECK(leaves <= leaf_bound(w, atoms) + 1e-9);
  }
}

TEST_CASE("F_{2,k} meets the 2-CNF bound with equality") {
  for (std::size_t k = 1; k <= 4; ++k) {
    Instance f = gen_F(2, k, GenMode::Cnf);
    CandidateFamily fam = min_plus(f.theory);
    CHECK(fam.stats.leaves == static_cast<std::uint64_t>(std::pow(3, k)));
  }
}

TEST_CASE("parallel search matches the sequential one") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 40; ++round) {
    Theory t = oracle::random_cnf(rng, 10, 14, 3);
    EngineOptions par;
    par.jobs = 4;
    CandidateFamily a = min_plus(t), b = min_plus(t, {}, par);
    CHECK(a.sets == b.sets);
    CHECK(a.stats.leaves == b.stats.leaves);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.max_depth == b.stats.max_depth);
  }
}

TEST_CASE("first stops at a verified model") {
  Instance f = gen_F(2, 3, GenMode::Cnf);
  ModelResult all = min_mod(f.theory);
  ModelResult one = min_mod(f.theory, {}, true);
  REQUIRE(one.models.size() == 1);
  CHECK(std::binary_search(all.models.begin(), all.models.end(),
                           one.models[0]));
  CHECK(one.stats.leaves < all.stats.leaves);

  // a :- not a has no stable model, so `first` still reports none.
  Program odd(1, ProgramKind::Normal);
  odd.add_rule({{0}, {}, {0}});
  CHECK(stb_mod(odd, {}, true).models.empty());
}

TEST_CASE("trace events") {
  std::vector<TraceEvent> events;
  EngineOptions o;
  o.trace = [&](const TraceEvent &e) { events.push_back(e); };
  CandidateFamily fam = min_plus(cnf(2, {{1, 2}}), {}, o);
  REQUIRE(events.size() == fam.stats.nodes);
  CHECK(events[0].depth == 0);
  CHECK(events[0].branches == 2);
  CHECK(events[0].label.rfind("2:", 0) == 0);
  std::size_t emits = 0;
  for (const TraceEvent &e : events)
    emits += e.label == "leaf:emit";
  CHECK(emits == fam.stats.candidates_emitted);
}
