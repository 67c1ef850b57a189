#ifndef MINPLUS_COVERS_HPP
#define MINPLUS_COVERS_HPP

#include "minplus/theory.hpp"

#include <string>
#include <utility>
#include <vector>

namespace minplus {

/// A family of consistent, non-empty literal sets such that every minimal
/// model of the covered theory is consistent with at least one member.
struct Cover {
  std::vector<LiteralSet> branches;

  std::size_t size() const { return branches.size(); }
  friend bool operator==(const Cover &, const Cover &) = default;
};

/// Which case of the cascade produced a cover, e.g. "2:5(c)" or "3:9(iii)".
struct CoverDiagnostics {
  std::string case_id;
  // Top-level case number within the cascade (0 for the generic cover).
  int top_case = 0;
};

/// Cover for 2-CNF theories.  Requires At(S) non-empty, no empty clause and
/// clause width at most 2.
Cover cover2(const Theory &s, CoverDiagnostics *diag = nullptr);

/// Cover for 3-CNF theories.  Additionally requires S to be a fixpoint of
/// sigma_simplify.  Throws std::logic_error if an internal invariant of the
/// case cascade fails.
Cover cover3(const Theory &s, CoverDiagnostics *diag = nullptr);

/// Generic cover for clauses of any width: branches on a longest clause.
Cover cover_t(const Theory &s, CoverDiagnostics *diag = nullptr);

enum class CoverKind { Auto, Two, Three, Generic };

/// Cover function for a given width class.  Auto picks by max_width().
CoverKind resolve_cover_kind(CoverKind kind, std::size_t max_width);
Cover apply_cover(CoverKind kind, const Theory &s,
                  CoverDiagnostics *diag = nullptr);

/// Graph on the literals that co-occur with the positive literal of `anchor`
/// in 3-clauses: a | x | y contributes the edge xy.
class GammaGraph {
public:
  enum class Shape { C3P1, P3P1, ThreeP1, Other };

  Atom anchor = 0;

  const std::vector<Literal> &vertices() const { return vertices_; }
  const std::vector<std::pair<Literal, Literal>> &edges() const {
    return edges_;
  }
  std::size_t num_edges() const { return edges_.size(); }

  std::size_t degree(Literal v) const;
  // Sorted neighbour list.
  const std::vector<Literal> &neighbors(Literal v) const;
  bool adjacent(Literal u, Literal v) const;
  std::size_t max_degree() const;
  // Smallest vertex of maximum degree.
  Literal max_degree_vertex() const;

  // Size of a maximum set of pairwise vertex-disjoint edges.  Exact when
  // max_degree() <= 2; a greedy lower bound otherwise.
  std::size_t matching_number() const;
  Shape shape() const;

  friend GammaGraph build_gamma(const Theory &s, Atom a);

private:
  std::size_t index_of(Literal v) const;

  std::vector<Literal> vertices_;
  std::vector<std::vector<Literal>> adj_;
  std::vector<std::pair<Literal, Literal>> edges_;
};

GammaGraph build_gamma(const Theory &s, Atom a);
const char *to_string(GammaGraph::Shape shape);

} // namespace minplus

#endif
