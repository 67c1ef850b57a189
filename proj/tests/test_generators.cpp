#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include "minplus/engine.hpp"
#include "minplus/generators.hpp"

#include <set>

using namespace minplus;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::size_t program_size(const Program &p) {
  std::size_t s = 0;
  for (const Rule &r : p.rules())
    s += r.head.size() + r.pos_body.size() + r.neg_body.size();
  return s;
}

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

} // namespace

TEST_CASE("gen_E examples") {
  Instance e = gen_E(2, {"a", "b", "c"}, GenMode::Cnf);
  CHECK(e.theory == oracle::cnf(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(e.theory.atom_name(2) == "c");

  Instance n = gen_E(2, {"a", "b"}, GenMode::Normal);
  std::set<Rule> rules(n.program.rules().begin(), n.program.rules().end());
  CHECK(rules == std::set<Rule>{{{1}, {}, {0}}, {{0}, {}, {1}}});
  CHECK(n.program.kind() == ProgramKind::Normal);

  Instance one = gen_E(3, {"a", "b", "c"}, GenMode::Cnf);
  CHECK(one.theory == oracle::cnf(3, {{1, 2, 3}}));

  Instance d = gen_E(2, {"a", "b", "c"}, GenMode::Disjunctive);
  CHECK(d.program.num_rules() == 3);
  CHECK(d.program.kind() == ProgramKind::Disjunctive);
  CHECK(d.theory == e.theory);

  CHECK_THROWS_AS(gen_E(4, {"a", "b", "c"}, GenMode::Cnf), std::invalid_argument);
  CHECK_THROWS_AS(gen_E(0, {"a"}, GenMode::Cnf), std::invalid_argument);
}

TEST_CASE("E has the predicted minimal models") {
  for (std::size_t x = 1; x <= 7; ++x) {
    for (std::size_t t = 1; t <= x; ++t) {
      Instance e = gen_E(t, letters(x), GenMode::Cnf);
      const auto minimal = oracle::minimal_models(e.theory);
      CHECK(minimal.size() == binom(x, t - 1));
      for (const AtomSet &m : minimal)
        CHECK(m.size() == x - t + 1);
    }
  }
}

TEST_CASE("gen_F shapes") {
  Instance f23 = gen_F(2, 3, GenMode::Cnf);
  CHECK(f23.theory.num_atoms() == 9);
  CHECK(f23.theory.num_clauses() == 9);
  CHECK(f23.theory.size() == 18);
  CHECK(f23.theory.atom_name(0) == "x1_1");
  CHECK(f23.theory.atom_name(8) == "x3_3");

  Instance f21 = gen_F(2, 1, GenMode::Cnf);
  CHECK(f21.theory == gen_E(2, {"a", "b", "c"}, GenMode::Cnf).theory);

  Instance f32 = gen_F(3, 2, GenMode::Cnf);
  CHECK(f32.theory.num_atoms() == 10);
  const auto minimal = oracle::minimal_models(f32.theory);
  CHECK(minimal.size() == 100);
  for (const AtomSet &m : minimal)
    CHECK(m.size() == 6);

  for (std::size_t t = 1; t <= 3; ++t)
    for (std::size_t k = 1; k <= 3; ++k) {
      Instance nf = gen_F(t, k, GenMode::Normal);
      CHECK(program_size(nf.program) == k * t * t * binom(2 * t - 1, t));
    }
}

TEST_CASE("gen_F padding") {
  Instance padded = gen_F(2, 1, GenMode::Cnf, 6);
  CHECK(padded.theory.num_atoms() == 6);
  CHECK(padded.theory.atom_name(3) == "p_1");
  // Two blocks of E_2 over three atoms.
  CHECK(oracle::minimal_models(padded.theory).size() == 9);

  Instance facts = gen_F(3, 1, GenMode::Cnf, 7);
  CHECK(facts.theory.num_atoms() == 7);
  CHECK(oracle::minimal_models(facts.theory).size() == 10);

  CHECK(gen_F(2, 2, GenMode::Cnf, 6).theory == gen_F(2, 2, GenMode::Cnf).theory);
  CHECK_THROWS_AS(gen_F(2, 2, GenMode::Cnf, 5), std::invalid_argument);
  CHECK_THROWS_AS(gen_F(0, 2, GenMode::Cnf), std::invalid_argument);
}

TEST_CASE("the three semantics coincide on E and F") {
  for (std::size_t t = 1; t <= 3; ++t) {
    for (std::size_t x = t; x <= 6; ++x) {
      const auto names = letters(x);
      const auto cnf = oracle::minimal_models(gen_E(t, names, GenMode::Cnf).theory);
      const auto stb =
          oracle::stable_models(gen_E(t, names, GenMode::Normal).program);
      const auto ans =
          oracle::answer_sets(gen_E(t, names, GenMode::Disjunctive).program);
      CHECK(cnf == stb);
      CHECK(cnf == ans);
    }
  }
  const Instance fc = gen_F(2, 2, GenMode::Cnf);
  const Instance fn = gen_F(2, 2, GenMode::Normal);
  const Instance fd = gen_F(2, 2, GenMode::Disjunctive);
  const auto m = min_mod(fc.theory).models;
  CHECK(m.size() == 9);
  CHECK(stb_mod(fn.program).models == m);
  CHECK(ans_set(fd.program).models == m);
}

TEST_CASE("gen_random") {
  Instance empty = gen_random(0, 0, 3, GenMode::Cnf, 1);
  CHECK(empty.theory.num_atoms() == 0);
  CHECK(empty.theory.empty());

  Instance r = gen_random(8, 20, 3, GenMode::Cnf, 1);
  CHECK(r.theory.num_atoms() == 8);
  CHECK(r.theory.num_clauses() == 20);
  CHECK(r.theory.max_width() <= 3);
  CHECK(gen_random(8, 20, 3, GenMode::Cnf, 1).theory == r.theory);
  CHECK_FALSE(gen_random(8, 20, 3, GenMode::Cnf, 2).theory == r.theory);
  std::set<Clause> distinct(r.theory.clauses().begin(), r.theory.clauses().end());
  CHECK(distinct.size() == 20);

  Instance p = gen_random(6, 10, 3, GenMode::Normal, 5);
  CHECK(p.program.num_rules() == 10);
  CHECK(p.program.kind() == ProgramKind::Normal);
  CHECK(gen_random(6, 10, 3, GenMode::Normal, 5).program == p.program);
  CHECK(p.theory == translate(p.program));

  Instance q = gen_random(6, 10, 3, GenMode::Disjunctive, 5);
  CHECK(q.program.num_rules() == 10);

  // Only 2 distinct 1-clauses exist over one atom.
  CHECK_THROWS_AS(gen_random(1, 3, 1, GenMode::Cnf, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(0, 1, 3, GenMode::Cnf, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(3, 1, 0, GenMode::Cnf, 1), std::invalid_argument);
}

TEST_CASE("generator modes") {
  CHECK(parse_gen_mode("cnf") == GenMode::Cnf);
  CHECK(parse_gen_mode("normal") == GenMode::Normal);
  CHECK(parse_gen_mode("disjunctive") == GenMode::Disjunctive);
  CHECK_THROWS_AS(parse_gen_mode("horn"), std::invalid_argument);
  CHECK(std::string(to_string(GenMode::Normal)) == "normal");
}
