#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include "minplus/checkers.hpp"

using namespace minplus;
using oracle::cnf;

namespace {

Program make(std::size_t n, ProgramKind kind, std::vector<Rule> rules) {
  Program p(n, kind);
  for (Rule &r : rules)
    p.add_rule(std::move(r));
  return p;
}

Program normal(std::size_t n, std::vector<Rule> rules) {
  return make(n, ProgramKind::Normal, std::move(rules));
}

// Letters a..d as atom ids.
enum : Atom { a, b, c, d };

} // namespace

TEST_CASE("program construction") {
  Program p(2, ProgramKind::Normal);
  CHECK_THROWS_AS(p.add_rule({{}, {a}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(p.add_rule({{a, b}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(p.add_rule({{c}, {}, {}}), std::invalid_argument);
  p.add_rule({{b}, {b, a, a}, {}});
  CHECK(p.rules()[0].pos_body == AtomSet{a, b});
}

TEST_CASE("translate") {
  // a | b :- c, not d.
  Program p = make(4, ProgramKind::Disjunctive, {{{a, b}, {c}, {d}}});
  CHECK(translate(p) == cnf(4, {{-3, 4, 1, 2}}));
  CHECK(translate(normal(1, {{{a}, {}, {}}})) == cnf(1, {{1}}));
  // a :- not a.
  CHECK(translate(normal(1, {{{a}, {}, {a}}})) == cnf(1, {{1}}));
  // a :- a is a tautology.
  CHECK(translate(normal(1, {{{a}, {a}, {}}})).empty());
}

TEST_CASE("reduct") {
  Program p = normal(2, {{{a}, {}, {b}}});
  CHECK(reduct(p, {}) == normal(2, {{{a}, {}, {}}}));
  CHECK(reduct(p, {b}).num_rules() == 0);
}

TEST_CASE("least_model") {
  CHECK(least_model(normal(2, {{{a}, {}, {}}, {{b}, {a}, {}}})) == AtomSet{a, b});
  CHECK(least_model(normal(2, {{{a}, {b}, {}}, {{b}, {a}, {}}})).empty());
  CHECK(least_model(Program(0, ProgramKind::Normal)).empty());
}

TEST_CASE("least_model agrees with naive iteration and stays linear") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 12;
    Program p(n, ProgramKind::Normal);
    const std::size_t m = rng() % 30;
    for (std::size_t i = 0; i < m; ++i) {
      Rule r;
      r.head = {static_cast<Atom>(rng() % n)};
      for (Atom x = 0; x < n; ++x)
        if (rng() % 4 == 0)
          r.pos_body.push_back(x);
      p.add_rule(r);
    }
    std::size_t ops = 0;
    const AtomSet lm = least_model(p, &ops);
    CHECK(oracle::to_mask(lm) == oracle::least_of_reduct(p, 0));
    std::size_t size = 0;
    for (const Rule &r : p.rules())
      size += r.pos_body.size() + 1;
    CHECK(ops <= size);
  }
}

TEST_CASE("test_stb and test_anset examples") {
  Program choice = normal(2, {{{a}, {}, {b}}, {{b}, {}, {a}}});
  CHECK(test_stb(choice, {a}));
  CHECK_FALSE(test_stb(choice, {a, b}));
  CHECK_FALSE(test_stb(choice, {}));

  Program fact = make(2, ProgramKind::Disjunctive, {{{a, b}, {}, {}}});
  CHECK(test_anset(fact, {a}));
  CHECK_FALSE(test_anset(fact, {a, b}));
  CHECK_FALSE(test_anset(fact, {}));
}

TEST_CASE("stable models and answer sets coincide on normal programs") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 8;
    Program p = oracle::random_program(rng, n, rng() % 12, 3, false);
    for (oracle::Mask m = 0; m < (1u << n); ++m) {
      const AtomSet set = oracle::to_set(m);
      CHECK(test_stb(p, set) == test_anset(p, set));
    }
  }
}

TEST_CASE("checkers match the oracles") {
  std::mt19937_64 rng(89);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 8;
    Program p = oracle::random_program(rng, n, rng() % 12, 3, false);
    Program q = oracle::random_program(rng, n, rng() % 12, 3, true);
    const auto stable = oracle::stable_models(p);
    const auto answers = oracle::answer_sets(q);
    for (oracle::Mask m = 0; m < (1u << n); ++m) {
      const AtomSet set = oracle::to_set(m);
      CHECK(test_stb(p, set) ==
            std::binary_search(stable.begin(), stable.end(), set));
      CHECK(test_anset(q, set) ==
            std::binary_search(answers.begin(), answers.end(), set));
    }
  }
}

TEST_CASE("stable models and answer sets are minimal models of the translation") {
  std::mt19937_64 rng(97);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const bool disj = rng() % 2;
    Program p = oracle::random_program(rng, n, rng() % 12, 3, disj);
    const Theory t = translate(p);
    const auto models = disj ? oracle::answer_sets(p) : oracle::stable_models(p);
    for (const AtomSet &m : models)
      CHECK(oracle::is_minimal(t, oracle::to_mask(m)));
  }
}
