#include "minplus/cli.hpp"

#include "minplus/checkers.hpp"
#include "minplus/engine.hpp"
#include "minplus/generators.hpp"
#include "minplus/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace minplus {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Minimal, Stable, Answer };

struct Loaded {
  bool is_program = false;
  Theory theory;
  Program program;
  std::vector<std::string> names;
};

std::string read_all(const std::string &path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const std::string &path, const std::string &format,
            std::ostream &err) {
  const std::string text = read_all(path);
  Loaded l;
  if (format == "dimacs") {
    DimacsResult r = parse_dimacs(text);
    for (const auto &w : r.warnings)
      err << "warning: " << w << "\n";
    l.theory = std::move(r.theory);
    l.names = atom_names(l.theory);
  } else {
    l.is_program = true;
    l.program = parse_program(text);
    l.theory = translate(l.program);
    l.names = l.program.names();
  }
  return l;
}

void check_mode(Mode mode, const Loaded &in) {
  if (mode == Mode::Minimal && in.is_program)
    throw InputError("mode 'minimal' needs --format dimacs");
  if (mode != Mode::Minimal && !in.is_program)
    throw InputError("modes 'stable' and 'answer' need --format asp");
  if (mode == Mode::Stable && in.program.kind() != ProgramKind::Normal)
    throw InputError("mode 'stable' needs a normal program (no '|' in heads)");
}

const char *mode_name(Mode m) {
  switch (m) {
  case Mode::Minimal:
    return "minimal";
  case Mode::Stable:
    return "stable";
  case Mode::Answer:
    return "answer";
  }
  return "?";
}

ModelResult run_mode(Mode mode, const Loaded &in, EngineOptions opts,
                     bool first) {
  switch (mode) {
  case Mode::Minimal:
    return min_mod(in.theory, std::move(opts), first);
  case Mode::Stable:
    return stb_mod(in.program, std::move(opts), first);
  case Mode::Answer:
    break;
  }
  return ans_set(in.program, std::move(opts), first);
}

std::vector<AtomSet> run_oracle(Mode mode, const Loaded &in, std::size_t cap) {
  switch (mode) {
  case Mode::Minimal:
    return brute_minimal_models(in.theory, cap);
  case Mode::Stable:
    return brute_stable_models(in.program, cap);
  case Mode::Answer:
    break;
  }
  return brute_answer_sets(in.program, cap);
}

std::string literal_name(Literal l, const std::vector<std::string> &names) {
  std::string base = l.atom() < names.size() ? names[l.atom()]
                                             : "a" + std::to_string(l.atom() + 1);
  return l.positive() ? base : "-" + base;
}

TraceSink trace_printer(std::ostream &err, const std::vector<std::string> &names) {
  return [&err, &names](const TraceEvent &ev) {
    err << std::string(2 * ev.depth, ' ') << "[";
    for (std::size_t i = 0; i < ev.assumptions.size(); ++i)
      err << (i ? " " : "") << literal_name(ev.assumptions[i], names);
    err << "] " << ev.label;
    if (ev.branches)
      err << " -> " << ev.branches;
    err << "\n";
  };
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

struct SolveArgs {
  std::string mode, input, format = "dimacs", output = "text";
  bool stats = false, first = false, trace = false;
  unsigned jobs = 1;
};

Mode to_mode(const std::string &s) {
  if (s == "minimal")
    return Mode::Minimal;
  if (s == "stable")
    return Mode::Stable;
  return Mode::Answer;
}

int cmd_solve(const SolveArgs &a, std::ostream &out, std::ostream &err) {
  const Mode mode = to_mode(a.mode);
  const Loaded in = load(a.input, a.format, err);
  check_mode(mode, in);

  EngineOptions opts;
  opts.jobs = std::max(1u, a.jobs);
  if (a.trace)
    opts.trace = trace_printer(err, in.names);
  const auto t0 = std::chrono::steady_clock::now();
  const ModelResult r = run_mode(mode, in, std::move(opts), a.first);
  const double wall = ms_since(t0);

  if (a.output == "json") {
    nlohmann::json j;
    j["mode"] = mode_name(mode);
    j["models"] = nlohmann::json::array();
    for (const AtomSet &m : r.models)
      j["models"].push_back(model_names(m, in.names));
    j["count"] = r.models.size();
    j["stats"] = {{"leaves", r.stats.leaves},
                  {"nodes", r.stats.nodes},
                  {"max_depth", r.stats.max_depth},
                  {"candidates", r.stats.candidates_after_dedup}};
    j["wall_ms"] = wall;
    out << j.dump(2) << "\n";
  } else {
    for (const AtomSet &m : r.models)
      out << format_model(m, in.names) << "\n";
    out << "models: " << r.models.size() << "\n";
    if (a.stats)
      out << "leaves: " << r.stats.leaves << "\nnodes: " << r.stats.nodes
          << "\nmax_depth: " << r.stats.max_depth
          << "\ncandidates: " << r.stats.candidates_after_dedup
          << "\nwall_ms: " << fixed(wall, 3) << "\n";
  }
  return r.models.empty() ? kExitNoModels : kExitOk;
}

struct VerifyArgs {
  std::string mode, input, format = "dimacs";
  // 0 selects the default cap of the mode.
  std::size_t max_atoms = 0;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err) {
  const Mode mode = to_mode(a.mode);
  const Loaded in = load(a.input, a.format, err);
  check_mode(mode, in);
  const std::size_t n = in.theory.num_atoms();
  std::size_t cap = a.max_atoms;
  if (cap == 0)
    cap = mode == Mode::Minimal ? kBruteMinimalCap : kBruteProgramCap;
  cap = std::min(cap, kBruteHardCap);
  if (n > cap)
    throw InputError("instance has " + std::to_string(n) +
                     " atoms, exhaustive check limited to " +
                     std::to_string(cap));

  const ModelResult r = run_mode(mode, in, {}, false);
  const std::vector<AtomSet> oracle = run_oracle(mode, in, cap);
  std::vector<AtomSet> only_solver, only_oracle;
  std::set_difference(r.models.begin(), r.models.end(), oracle.begin(),
                      oracle.end(), std::back_inserter(only_solver));
  std::set_difference(oracle.begin(), oracle.end(), r.models.begin(),
                      r.models.end(), std::back_inserter(only_oracle));

  out << "solver: " << r.models.size() << " models\n";
  out << "oracle: " << oracle.size() << " models\n";
  for (const AtomSet &m : only_solver)
    out << "only solver: {" << format_model(m, in.names) << "}\n";
  for (const AtomSet &m : only_oracle)
    out << "only oracle: {" << format_model(m, in.names) << "}\n";
  const bool agree = only_solver.empty() && only_oracle.empty();
  out << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? kExitOk : kExitMismatch;
}

struct GenArgs {
  std::string family, mode = "cnf", out;
  std::size_t t = 2, k = 1, atoms = 0, clauses = 0;
  std::optional<std::size_t> pad;
  std::uint64_t seed = 1;
};

Instance make_instance(const GenArgs &a) {
  const GenMode mode = parse_gen_mode(a.mode);
  if (a.family == "E") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= a.atoms; ++i)
      names.push_back("x" + std::to_string(i));
    return gen_E(a.t, names, mode);
  }
  if (a.family == "F")
    return gen_F(a.t, a.k, mode, a.pad);
  return gen_random(a.atoms, a.clauses, a.t, mode, a.seed);
}

std::string render(const Instance &inst) {
  return inst.mode == GenMode::Cnf ? emit_dimacs(inst.theory)
                                   : emit_program(inst.program);
}

int cmd_gen(const GenArgs &a, std::ostream &out) {
  const std::string text = render(make_instance(a));
  if (a.out.empty() || a.out == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f || !(f << text))
    throw InputError("cannot write '" + a.out + "'");
  return kExitOk;
}

struct BenchArgs {
  std::string family = "F", output = "text";
  std::size_t t = 2, max = 4, atoms = 10, clauses = 20, count = 5;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs &a, std::ostream &out) {
  std::vector<Instance> instances;
  if (a.family == "F") {
    for (std::size_t k = 1; k <= a.max; ++k)
      instances.push_back(gen_F(a.t, k, GenMode::Cnf));
  } else if (a.family == "E") {
    for (std::size_t n = a.t; n <= a.max; ++n) {
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
      instances.push_back(gen_E(a.t, names, GenMode::Cnf));
    }
  } else {
    for (std::size_t i = 0; i < a.count; ++i)
      instances.push_back(
          gen_random(a.atoms, a.clauses, a.t, GenMode::Cnf, a.seed + i));
  }

  const bool csv = a.output == "csv";
  if (csv)
    out << "n,leaves,bound,models,wall_ms\n";
  else
    out << "       n      leaves        bound      models     wall_ms\n";
  for (const Instance &inst : instances) {
    const Theory &t = inst.theory;
    const auto t0 = std::chrono::steady_clock::now();
    const ModelResult r = min_mod(t);
    const double wall = ms_since(t0);
    const std::size_t n = t.occurring_atom_count();
    const double bound = leaf_bound(t.max_width(), n);
    if (csv) {
      out << n << "," << r.stats.leaves << "," << fixed(bound, 2) << ","
          << r.models.size() << "," << fixed(wall, 3) << "\n";
    } else {
      char line[160];
      std::snprintf(line, sizeof line, "%8zu %11llu %12.2f %11zu %11.3f\n", n,
                    static_cast<unsigned long long>(r.stats.leaves), bound,
                    r.models.size(), wall);
      out << line;
    }
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Minimal models, stable models and answer sets by branching "
               "on covers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto *s = app.add_subcommand("solve", "Enumerate models of an instance");
  s->add_option("--mode", solve.mode, "minimal | stable | answer")
      ->required()
      ->check(CLI::IsMember({"minimal", "stable", "answer"}));
  s->add_option("--input", solve.input, "Input file, '-' for stdin")->required();
  s->add_option("--format", solve.format, "dimacs | asp")
      ->check(CLI::IsMember({"dimacs", "asp"}));
  s->add_flag("--stats", solve.stats, "Print search statistics");
  s->add_flag("--first", solve.first, "Stop after the first model");
  s->add_flag("--trace", solve.trace, "Print the search tree to stderr");
  s->add_option("--output", solve.output, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  s->add_option("--jobs", solve.jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  VerifyArgs verify;
  auto *v = app.add_subcommand(
      "verify", "Compare the solver with exhaustive enumeration");
  v->add_option("--mode", verify.mode, "minimal | stable | answer")
      ->required()
      ->check(CLI::IsMember({"minimal", "stable", "answer"}));
  v->add_option("--input", verify.input, "Input file, '-' for stdin")
      ->required();
  v->add_option("--format", verify.format, "dimacs | asp")
      ->check(CLI::IsMember({"dimacs", "asp"}));
  v->add_option("--max-atoms", verify.max_atoms,
                "Refuse instances with more atoms");

  GenArgs gen;
  auto *g = app.add_subcommand("gen", "Generate benchmark instances");
  g->add_option("--family", gen.family, "E | F | random")
      ->required()
      ->check(CLI::IsMember({"E", "F", "random"}));
  g->add_option("--t", gen.t, "Clause width");
  g->add_option("--k", gen.k, "Number of blocks (F)");
  g->add_option("--atoms", gen.atoms, "Number of atoms (E, random)");
  g->add_option("--clauses", gen.clauses, "Number of clauses (random)");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--pad", gen.pad, "Pad F to exactly this many atoms");
  g->add_option("--mode", gen.mode, "cnf | normal | disjunctive")
      ->check(CLI::IsMember({"cnf", "normal", "disjunctive"}));
  g->add_option("--out", gen.out, "Output file (default stdout)");

  BenchArgs bench;
  auto *b = app.add_subcommand("bench", "Leaf counts against the bound");
  b->add_option("--family", bench.family, "E | F | random")
      ->check(CLI::IsMember({"E", "F", "random"}));
  b->add_option("--t", bench.t, "Clause width");
  b->add_option("--max", bench.max, "Largest k (F) or atom count (E)");
  b->add_option("--atoms", bench.atoms, "Atoms per random instance");
  b->add_option("--clauses", bench.clauses, "Clauses per random instance");
  b->add_option("--count", bench.count, "Number of random instances");
  b->add_option("--seed", bench.seed, "First random seed");
  b->add_option("--output", bench.output, "text | csv")
      ->check(CLI::IsMember({"text", "csv"}));

  std::vector<std::string> argv_store{"minplus"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (s->parsed())
      return cmd_solve(solve, out, err);
    if (v->parsed())
      return cmd_verify(verify, out, err);
    if (g->parsed())
      return cmd_gen(gen, out);
    return cmd_bench(bench, out);
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::length_error &e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

} // namespace minplus
