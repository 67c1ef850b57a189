#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include "minplus/cli.hpp"
#include "minplus/generators.hpp"
#include "minplus/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace minplus;
using oracle::cnf;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / ("minplus_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

// Rules rendered with atom names, for comparisons that ignore atom ids.
std::multiset<std::string> named_rules(const Program &p) {
  std::multiset<std::string> out;
  for (const Rule &r : p.rules()) {
    std::string s;
    std::set<std::string> head, pos, neg;
    for (Atom a : r.head)
      head.insert(p.atom_name(a));
    for (const auto &x : head)
      s += x + "|";
    for (Atom a : r.pos_body)
      pos.insert(p.atom_name(a));
    for (Atom a : r.neg_body)
      neg.insert(p.atom_name(a));
    for (const auto &x : pos)
      s += "+" + x;
    for (const auto &x : neg)
      s += "-" + x;
    out.insert(s);
  }
  return out;
}

std::size_t count_lines(const std::string &s, const std::string &prefix) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    n += line.rfind(prefix, 0) == 0;
  return n;
}

} // namespace

TEST_CASE("DIMACS parsing") {
  DimacsResult r = parse_dimacs("p cnf 2 1\n1 2 0\n");
  CHECK(r.theory == cnf(2, {{1, 2}}));
  CHECK(r.theory.atom_name(1) == "a2");
  CHECK(r.warnings.empty());

  DimacsResult taut = parse_dimacs("p cnf 1 1\n1 -1 0\n");
  CHECK(taut.theory.empty());
  CHECK(taut.theory.num_atoms() == 1);

  DimacsResult none = parse_dimacs("p cnf 0 0\n");
  CHECK(none.theory.num_atoms() == 0);
  CHECK(none.theory.empty());

  DimacsResult multi =
      parse_dimacs("c comment\np cnf 3 2\n1 -2\n 3 0 -1 0\n%\n0\n");
  CHECK(multi.theory == cnf(3, {{1, -2, 3}, {-1}}));

  DimacsResult warn = parse_dimacs("p cnf 2 3\n1 0\n");
  CHECK(warn.warnings.size() == 1);
}

TEST_CASE("DIMACS errors carry positions") {
  auto fails_at = [](const std::string &text, std::size_t line) {
    try {
      parse_dimacs(text);
    } catch (const ParseError &e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(fails_at("1 2 0\n", 1));
  CHECK(fails_at("c x\np cnf 2 1\n1 3 0\n", 3));
  CHECK(fails_at("p cnf 2 1\n1 x 0\n", 2));
  CHECK(fails_at("p cnf two 1\n", 1));
  CHECK(fails_at("p cnf 2 1\np cnf 2 1\n", 2));
  CHECK(fails_at("p cnf 2 1\n1 2\n", 2));
  CHECK_THROWS_AS(parse_dimacs(""), ParseError);
}

TEST_CASE("program parsing") {
  Program p = parse_program("a :- not b. b :- not a.");
  CHECK(p.num_rules() == 2);
  CHECK(p.kind() == ProgramKind::Normal);
  CHECK(p.names() == std::vector<std::string>{"a", "b"});
  CHECK(p.rules()[0] == Rule{{0}, {}, {1}});

  Program d = parse_program("a | b.");
  CHECK(d.kind() == ProgramKind::Disjunctive);
  REQUIRE(d.num_rules() == 1);
  CHECK(d.rules()[0] == Rule{{0, 1}, {}, {}});

  Program c = parse_program("% facts\nq :- p, not r. % trailing\np.\n");
  CHECK(c.num_rules() == 2);
  CHECK(c.names() == std::vector<std::string>{"q", "p", "r"});

  CHECK(parse_program("").num_rules() == 0);
}

TEST_CASE("program errors") {
  try {
    parse_program("a.\n:- a.");
    FAIL("constraint accepted");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
  CHECK_THROWS_AS(parse_program("a :- not."), ParseError);
  CHECK_THROWS_AS(parse_program("A."), ParseError);
  CHECK_THROWS_AS(parse_program("not."), ParseError);
  CHECK_THROWS_AS(parse_program("a | ."), ParseError);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 9;
    Theory t = oracle::random_cnf(rng, n, rng() % 12, 4);
    CHECK(parse_dimacs(emit_dimacs(t)).theory == t);

    Program p = oracle::random_program(rng, n, 1 + rng() % 8, 3, rng() % 2);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("v" + std::to_string(i));
    p.set_names(names);
    Program q = parse_program(emit_program(p));
    CHECK(named_rules(q) == named_rules(p));
    CHECK(emit_program(q) == emit_program(parse_program(emit_program(q))));
  }
  Instance f = gen_F(2, 2, GenMode::Normal);
  CHECK(named_rules(parse_program(emit_program(f.program))) ==
        named_rules(f.program));
}

TEST_CASE("model formatting") {
  std::vector<std::string> names{"p", "q", "r"};
  CHECK(format_model({0, 2}, names) == "p r");
  CHECK(format_model({}, names).empty());
  CHECK(atom_names(cnf(2, {})) == std::vector<std::string>{"a1", "a2"});
}

TEST_CASE("cli solve") {
  Run gen = cli({"gen", "--family", "F", "--t", "2", "--k", "3"});
  REQUIRE(gen.code == kExitOk);
  const std::string f23 = temp_file("f23.cnf", gen.out);
  Run solve = cli({"solve", "--mode", "minimal", "--input", f23});
  CHECK(solve.code == kExitOk);
  CHECK(solve.out.find("models: 27\n") != std::string::npos);
  CHECK(count_lines(solve.out, "a") == 27);

  Run json = cli({"solve", "--mode", "minimal", "--input", f23, "--output",
                  "json", "--jobs", "2"});
  REQUIRE(json.code == kExitOk);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["mode"] == "minimal");
  CHECK(j["count"] == 27);
  CHECK(j["models"].size() == 27);
  CHECK(j["models"][0].is_array());
  for (const char *key : {"leaves", "nodes", "max_depth", "candidates"})
    CHECK(j["stats"].contains(key));
  CHECK(j["stats"]["leaves"] == 27);
  CHECK(j.contains("wall_ms"));

  const std::string odd = temp_file("odd.lp", "a :- not a.\n");
  Run none = cli({"solve", "--mode", "stable", "--format", "asp", "--input", odd});
  CHECK(none.code == kExitNoModels);
  CHECK(none.out == "models: 0\n");

  const std::string ab = temp_file("ab.lp", "a | b.\n");
  Run ans = cli({"solve", "--mode", "answer", "--format", "asp", "--input", ab});
  CHECK(ans.code == kExitOk);
  CHECK(ans.out == "a\nb\nmodels: 2\n");

  Run first = cli({"solve", "--mode", "answer", "--format", "asp", "--input",
                   ab, "--first", "--stats"});
  CHECK(first.out.find("models: 1\n") != std::string::npos);
  CHECK(first.out.find("leaves: ") != std::string::npos);

  Run trace = cli({"solve", "--mode", "answer", "--format", "asp", "--input",
                   ab, "--trace"});
  CHECK(trace.err.find("leaf:emit") != std::string::npos);
}

TEST_CASE("cli input errors") {
  const std::string ab = temp_file("ab2.lp", "a | b.\n");
  CHECK(cli({"solve", "--mode", "stable", "--format", "asp", "--input", ab}).code ==
        kExitInputError);
  CHECK(cli({"solve", "--mode", "minimal", "--format", "asp", "--input", ab}).code ==
        kExitInputError);
  CHECK(cli({"solve", "--mode", "minimal", "--input", "/nonexistent/x.cnf"}).code ==
        kExitInputError);
  const std::string bad = temp_file("bad.lp", "a.\n:- a.\n");
  Run r = cli({"solve", "--mode", "answer", "--format", "asp", "--input", bad});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("line 2, column 1") != std::string::npos);
  CHECK(cli({"solve", "--mode", "fast", "--input", ab}).code == kExitInputError);
  CHECK(cli({}).code == kExitInputError);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli verify") {
  Run gen = cli({"gen", "--family", "F", "--t", "2", "--k", "2", "--mode", "normal"});
  REQUIRE(gen.code == kExitOk);
  const std::string f22 = temp_file("f22.lp", gen.out);
  Run v = cli({"verify", "--mode", "stable", "--format", "asp", "--input", f22});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("solver: 9 models\n") != std::string::npos);
  CHECK(v.out.find("oracle: 9 models\n") != std::string::npos);
  CHECK(v.out.find("agree\n") != std::string::npos);

  Run capped = cli({"verify", "--mode", "stable", "--format", "asp", "--input",
                    f22, "--max-atoms", "5"});
  CHECK(capped.code == kExitInputError);
}

TEST_CASE("cli gen") {
  Run f = cli({"gen", "--family", "F", "--t", "2", "--k", "3"});
  CHECK(f.code == kExitOk);
  DimacsResult d = parse_dimacs(f.out);
  CHECK(d.theory.num_atoms() == 9);
  CHECK(d.theory.num_clauses() == 9);

  CHECK(cli({"gen", "--family", "E", "--t", "4", "--atoms", "3"}).code ==
        kExitInputError);

  Run e = cli({"gen", "--family", "E", "--t", "2", "--atoms", "3", "--mode",
               "disjunctive"});
  CHECK(e.out == "x1 | x2.\nx1 | x3.\nx2 | x3.\n");

  Run r1 = cli({"gen", "--family", "random", "--t", "3", "--atoms", "8",
                "--clauses", "20", "--seed", "1"});
  Run r2 = cli({"gen", "--family", "random", "--t", "3", "--atoms", "8",
                "--clauses", "20", "--seed", "1"});
  CHECK(r1.out == r2.out);
  CHECK(parse_dimacs(r1.out).theory.num_clauses() == 20);

  const auto path = std::filesystem::temp_directory_path() / "minplus_test_gen.cnf";
  CHECK(cli({"gen", "--family", "F", "--k", "1", "--out", path.string()}).code ==
        kExitOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_dimacs(ss.str()).theory.num_clauses() == 3);
}

TEST_CASE("cli bench") {
  Run b = cli({"bench", "--family", "F", "--t", "2", "--max", "4", "--output", "csv"});
  REQUIRE(b.code == kExitOk);
  std::istringstream in(b.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,leaves,bound,models,wall_ms");
  std::uint64_t expected = 3;
  for (int k = 1; k <= 4; ++k, expected *= 3) {
    REQUIRE(std::getline(in, line));
    std::istringstream row(line);
    std::string n, leaves;
    std::getline(row, n, ',');
    std::getline(row, leaves, ',');
    CHECK(n == std::to_string(3 * k));
    CHECK(leaves == std::to_string(expected));
  }
  Run text = cli({"bench", "--family", "random", "--count", "2", "--atoms", "6",
                  "--clauses", "8", "--t", "3"});
  CHECK(text.code == kExitOk);
  CHECK(count_lines(text.out, " ") == 3);
}
