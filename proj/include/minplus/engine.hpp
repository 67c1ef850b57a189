#ifndef MINPLUS_ENGINE_HPP
#define MINPLUS_ENGINE_HPP

#include "minplus/covers.hpp"
#include "minplus/program.hpp"
#include "minplus/theory.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace minplus {

struct BranchStats {
  std::uint64_t leaves = 0;
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t candidates_emitted = 0;
  std::uint64_t candidates_after_dedup = 0;

  BranchStats &operator+=(const BranchStats &o);
};

/// Candidate atom sets, sorted lexicographically and duplicate-free.
struct CandidateFamily {
  std::vector<AtomSet> sets;
  BranchStats stats;
};

enum class SigmaKind { Auto, Identity, Simplify };

struct TraceEvent {
  std::size_t depth = 0;
  LiteralSet assumptions;
  // Case id of the cover, "leaf:empty-clause" or "leaf:emit".
  std::string label;
  std::size_t branches = 0;
};
using TraceSink = std::function<void(const TraceEvent &)>;

struct EngineOptions {
  CoverKind cover = CoverKind::Auto;
  SigmaKind sigma = SigmaKind::Auto;
  // Called for every emitted candidate; returning true stops the search.
  std::function<bool(const AtomSet &)> on_candidate;
  // Worker count.  Values above 1 split the tree at shallow depth across
  // std::async tasks; results are identical to the sequential run unless
  // on_candidate stops early.
  unsigned jobs = 1;
  std::size_t parallel_depth = 4;
  TraceSink trace;
};

/// Resolved cover and simplification for a theory, by its maximal width:
/// at most 2 uses cover2 without simplification, 3 uses cover3 with
/// sigma_simplify, wider uses cover_t without simplification.
struct Dispatch {
  CoverKind cover;
  SigmaKind sigma;
};
Dispatch resolve_dispatch(const Theory &t, CoverKind cover, SigmaKind sigma);

/// Branching search: every minimal model of t that extends the literal set
/// `root` (restricted to its positive part plus atoms chosen below) appears
/// among the returned candidates.  Each node recomputes sigma(reduce(t, L))
/// from the original theory.
CandidateFamily min_plus(const Theory &t, const LiteralSet &root = {},
                         const EngineOptions &opts = {});

struct ModelResult {
  std::vector<AtomSet> models;
  BranchStats stats;
};

/// Filters for the three semantics.  With `first`, the search stops at the
/// first verified model.
ModelResult min_mod(const Theory &t, EngineOptions opts = {}, bool first = false);
ModelResult stb_mod(const Program &p, EngineOptions opts = {}, bool first = false);
ModelResult ans_set(const Program &p, EngineOptions opts = {}, bool first = false);

/// Growth rate for the leaf bound of a width class: 3^(1/3) for width 2,
/// 1.6702 for width 3 and the root of x^t = x^(t-1) + ... + 1 above.
double leaf_bound_base(std::size_t max_width);
double leaf_bound(std::size_t max_width, std::size_t n);

} // namespace minplus

#endif
