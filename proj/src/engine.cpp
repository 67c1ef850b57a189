#include "minplus/engine.hpp"

#include "minplus/checkers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <mutex>
#include <optional>

namespace minplus {

BranchStats &BranchStats::operator+=(const BranchStats &o) {
  leaves += o.leaves;
  nodes += o.nodes;
  max_depth = std::max(max_depth, o.max_depth);
  candidates_emitted += o.candidates_emitted;
  candidates_after_dedup += o.candidates_after_dedup;
  return *this;
}

Dispatch resolve_dispatch(const Theory &t, CoverKind cover, SigmaKind sigma) {
  const CoverKind kind = resolve_cover_kind(cover, t.max_width());
  if (sigma == SigmaKind::Auto)
    sigma = kind == CoverKind::Three ? SigmaKind::Simplify : SigmaKind::Identity;
  return {kind, sigma};
}

namespace {

class Search {
public:
  Search(const Theory &t, const EngineOptions &opts)
      : t_(t), opts_(opts),
        dispatch_(resolve_dispatch(t, opts.cover, opts.sigma)) {}

  struct Part {
    BranchStats stats;
    std::vector<AtomSet> out;
  };

  void node(const LiteralSet &l, std::size_t depth, Part &part) {
    if (stop_.load(std::memory_order_relaxed))
      return;
    ++part.stats.nodes;
    part.stats.max_depth = std::max<std::uint64_t>(part.stats.max_depth, depth);

    Theory s = reduce(t_, l);
    if (dispatch_.sigma == SigmaKind::Simplify)
      s = sigma_simplify(s);

    if (s.has_empty_clause()) {
      ++part.stats.leaves;
      trace(depth, l, "leaf:empty-clause", 0);
      return;
    }
    if (s.empty()) {
      ++part.stats.leaves;
      ++part.stats.candidates_emitted;
      trace(depth, l, "leaf:emit", 0);
      part.out.push_back(positive_atoms(l));
      if (opts_.on_candidate) {
        std::lock_guard lock(callback_mu_);
        if (!stop_ && opts_.on_candidate(part.out.back()))
          stop_ = true;
      }
      return;
    }

    CoverDiagnostics diag;
    const Cover cover = apply_cover(dispatch_.cover, s, &diag);
    trace(depth, l, diag.case_id, cover.size());

    std::vector<LiteralSet> children;
    children.reserve(cover.size());
    for (const LiteralSet &a : cover.branches) {
      LiteralSet next = l;
      next.insert(next.end(), a.begin(), a.end());
      children.push_back(make_literal_set(std::span<const Literal>(next)));
    }

    if (opts_.jobs <= 1 || depth >= opts_.parallel_depth) {
      for (const LiteralSet &c : children)
        node(c, depth + 1, part);
      return;
    }

    // Offload children while workers are available; the rest run inline.
    std::vector<std::future<Part>> futures;
    std::vector<std::size_t> offloaded;
    for (std::size_t i = 0; i + 1 < children.size(); ++i) {
      unsigned active = active_.load();
      if (active + 1 >= opts_.jobs ||
          !active_.compare_exchange_strong(active, active + 1))
        continue;
      offloaded.push_back(i);
      futures.push_back(std::async(std::launch::async, [this, &children, i,
                                                        depth] {
        Part p;
        node(children[i], depth + 1, p);
        --active_;
        return p;
      }));
    }
    std::size_t next = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (next < offloaded.size() && offloaded[next] == i) {
        ++next;
        continue;
      }
      node(children[i], depth + 1, part);
    }
    for (auto &f : futures) {
      Part p = f.get();
      part.stats += p.stats;
      part.out.insert(part.out.end(), p.out.begin(), p.out.end());
    }
  }

private:
  void trace(std::size_t depth, const LiteralSet &l, const std::string &label,
             std::size_t branches) {
    if (!opts_.trace)
      return;
    std::lock_guard lock(trace_mu_);
    opts_.trace(TraceEvent{depth, l, label, branches});
  }

  const Theory &t_;
  const EngineOptions &opts_;
  const Dispatch dispatch_;
  std::atomic<bool> stop_{false};
  std::atomic<unsigned> active_{0};
  std::mutex callback_mu_, trace_mu_;
};

} // namespace

CandidateFamily min_plus(const Theory &t, const LiteralSet &root,
                         const EngineOptions &opts) {
  Search search(t, opts);
  Search::Part part;
  search.node(make_literal_set(std::span<const Literal>(root)), 0, part);
  std::sort(part.out.begin(), part.out.end());
  part.out.erase(std::unique(part.out.begin(), part.out.end()), part.out.end());
  part.stats.candidates_after_dedup = part.out.size();
  return {std::move(part.out), part.stats};
}

namespace {

template <class Pred>
ModelResult filtered(const Theory &t, EngineOptions opts, bool first,
                     Pred accept) {
  std::optional<AtomSet> hit;
  if (first) {
    auto user = opts.on_candidate;
    opts.on_candidate = [&](const AtomSet &m) {
      bool stop = user && user(m);
      if (!hit && accept(m))
        hit = m;
      return stop || hit.has_value();
    };
  }
  CandidateFamily fam = min_plus(t, {}, opts);
  ModelResult r{{}, fam.stats};
  if (first) {
    if (hit)
      r.models.push_back(*hit);
    return r;
  }
  for (AtomSet &m : fam.sets)
    if (accept(m))
      r.models.push_back(std::move(m));
  return r;
}

} // namespace

ModelResult min_mod(const Theory &t, EngineOptions opts, bool first) {
  const bool two = t.max_width() <= 2;
  return filtered(t, std::move(opts), first, [&](const AtomSet &m) {
    return two ? test_min_2cnf(t, m) : test_min_sat(t, m);
  });
}

ModelResult stb_mod(const Program &p, EngineOptions opts, bool first) {
  if (p.kind() != ProgramKind::Normal)
    throw std::invalid_argument("stable models need a normal program");
  return filtered(translate(p), std::move(opts), first,
                  [&](const AtomSet &m) { return test_stb(p, m); });
}

ModelResult ans_set(const Program &p, EngineOptions opts, bool first) {
  return filtered(translate(p), std::move(opts), first,
                  [&](const AtomSet &m) { return test_anset(p, m); });
}

double leaf_bound_base(std::size_t max_width) {
  if (max_width <= 2)
    return std::cbrt(3.0);
  if (max_width == 3)
    return 1.6702;
  // Largest root of x^w - x^(w-1) - ... - 1, which lies in (1, 2).
  auto f = [&](double x) {
    double lhs = std::pow(x, static_cast<double>(max_width)), rhs = 0;
    for (std::size_t i = 0; i < max_width; ++i)
      rhs += std::pow(x, static_cast<double>(i));
    return lhs - rhs;
  };
  double lo = 1.0, hi = 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return hi;
}

double leaf_bound(std::size_t max_width, std::size_t n) {
  return std::pow(leaf_bound_base(max_width), static_cast<double>(n));
}

} // namespace minplus
