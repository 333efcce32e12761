#include "dommove/pareto.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace dommove {

bool weakly_dominates(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw validation_error("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                           std::to_string(q.size()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) return false;
  }
  return true;
}

bool dominates(std::span<const double> p, std::span<const double> q) {
  if (!weakly_dominates(p, q)) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < q[i]) return true;
  }
  return false;
}

namespace detail {

bool any_weakly_dominates(const SolutionSet& s, std::span<const double> q) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (weakly_dominates(s[i], q)) return true;
  }
  return false;
}

namespace {

bool same_point(std::span<const double> a, std::span<const double> b) {
  return std::equal(a.begin(), a.end(), b.begin());
}

// Sort-and-sweep for two objectives: after ordering by (f1, f2, index) a
// point survives iff its f2 is strictly below everything seen so far.
std::vector<std::size_t> nondominated_indices_2d(const SolutionSet& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (s.coord(a, 0) != s.coord(b, 0)) return s.coord(a, 0) < s.coord(b, 0);
    if (s.coord(a, 1) != s.coord(b, 1)) return s.coord(a, 1) < s.coord(b, 1);
    return a < b;
  });
  std::vector<std::size_t> kept;
  kept.reserve(s.size());
  double best_f2 = std::numeric_limits<double>::infinity();
  for (std::size_t idx : order) {
    if (s.coord(idx, 1) < best_f2) {
      kept.push_back(idx);
      best_f2 = s.coord(idx, 1);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<char> pairwise_dropped(const SolutionSet& s, bool parallel) {
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  std::vector<char> dropped(s.size(), 0);
  auto is_dropped = [&](std::int64_t i) {
    const auto pi = s[static_cast<std::size_t>(i)];
    for (std::int64_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto pj = s[static_cast<std::size_t>(j)];
      if (dominates(pj, pi)) return true;
      if (j < i && same_point(pj, pi)) return true;  // duplicate: first kept
    }
    return false;
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      dropped[static_cast<std::size_t>(i)] = is_dropped(i) ? 1 : 0;
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      dropped[static_cast<std::size_t>(i)] = is_dropped(i) ? 1 : 0;
    }
  }
  return dropped;
}

std::vector<std::size_t> indices_from_dropped(const std::vector<char>& dropped) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < dropped.size(); ++i) {
    if (!dropped[i]) kept.push_back(i);
  }
  return kept;
}

SolutionSet select(const SolutionSet& s, const std::vector<std::size_t>& idx) {
  SolutionSet out(s.dim(), s.label());
  for (std::size_t i : idx) out.add_point(s[i]);
  return out;
}

constexpr std::size_t kParallelPairwiseThreshold = 512;

// A staircase here is a 2-D nondominated set sorted ascending on f1 (and
// therefore strictly descending on f2).
struct Staircase {
  std::vector<double> f1;
  std::vector<double> f2;

  explicit Staircase(const SolutionSet& s) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return s.coord(a, 0) < s.coord(b, 0); });
    f1.reserve(order.size());
    f2.reserve(order.size());
    for (std::size_t i : order) {
      f1.push_back(s.coord(i, 0));
      f2.push_back(s.coord(i, 1));
    }
  }

  // Some member weakly dominates (x, y): the lowest f2 among members with
  // f1 <= x belongs to the rightmost such member.
  [[nodiscard]] bool covers(double x, double y) const {
    auto it = std::upper_bound(f1.begin(), f1.end(), x);
    if (it == f1.begin()) return false;
    const std::size_t last = static_cast<std::size_t>(it - f1.begin()) - 1;
    return f2[last] <= y;
  }
};

}  // namespace

std::vector<std::size_t> nondominated_indices(const SolutionSet& s) {
  if (s.dim() == 2) return nondominated_indices_2d(s);
  return indices_from_dropped(pairwise_dropped(s, s.size() >= kParallelPairwiseThreshold));
}

}  // namespace detail

SolutionSet nondominated_filter(const SolutionSet& s) {
  if (s.empty()) throw validation_error("cannot filter an empty set");
  return detail::select(s, detail::nondominated_indices(s));
}

SolutionSet nondominated_filter_pairwise_serial(const SolutionSet& s) {
  if (s.empty()) throw validation_error("cannot filter an empty set");
  return detail::select(s, detail::indices_from_dropped(detail::pairwise_dropped(s, false)));
}

SetRelation classify_relation(const SolutionSet& p, const SolutionSet& q) {
  if (p.empty() || q.empty()) throw validation_error("classify_relation needs nonempty sets");
  if (p.dim() != q.dim()) {
    throw validation_error("dimension mismatch between sets: " + std::to_string(p.dim()) +
                           " vs " + std::to_string(q.dim()));
  }
  bool p_covers_q = true;
  for (std::size_t i = 0; i < q.size() && p_covers_q; ++i) {
    p_covers_q = detail::any_weakly_dominates(p, q[i]);
  }
  bool q_covers_p = true;
  for (std::size_t i = 0; i < p.size() && q_covers_p; ++i) {
    q_covers_p = detail::any_weakly_dominates(q, p[i]);
  }
  if (p_covers_q && q_covers_p) return SetRelation::equal;
  if (p_covers_q) return SetRelation::p_better;
  if (q_covers_p) return SetRelation::q_better;
  return SetRelation::incomparable;
}

ReducedPair reduce_pair_indexed(const SolutionSet& p, const SolutionSet& q) {
  if (p.empty() || q.empty()) throw validation_error("reduce_pair needs nonempty sets");
  if (p.dim() != q.dim()) {
    throw validation_error("dimension mismatch between sets: " + std::to_string(p.dim()) +
                           " vs " + std::to_string(q.dim()));
  }
  ReducedPair out;
  out.p_index = detail::nondominated_indices(p);
  out.p = detail::select(p, out.p_index);

  const std::vector<std::size_t> q_front = detail::nondominated_indices(q);
  std::vector<std::size_t> survivors;
  if (q.dim() == 2) {
    const detail::Staircase stair(out.p);
    for (std::size_t i : q_front) {
      if (!stair.covers(q.coord(i, 0), q.coord(i, 1))) survivors.push_back(i);
    }
  } else {
    const std::int64_t n = static_cast<std::int64_t>(q_front.size());
    std::vector<char> covered(q_front.size(), 0);
    const bool parallel = out.p.size() * q_front.size() >= detail::kParallelPairwiseThreshold *
                                                               detail::kParallelPairwiseThreshold;
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) {
        covered[static_cast<std::size_t>(i)] =
            detail::any_weakly_dominates(out.p, q[q_front[static_cast<std::size_t>(i)]]) ? 1 : 0;
      }
    } else {
      for (std::int64_t i = 0; i < n; ++i) {
        covered[static_cast<std::size_t>(i)] =
            detail::any_weakly_dominates(out.p, q[q_front[static_cast<std::size_t>(i)]]) ? 1 : 0;
      }
    }
    for (std::size_t i = 0; i < q_front.size(); ++i) {
      if (!covered[i]) survivors.push_back(q_front[i]);
    }
  }
  out.q_index = std::move(survivors);
  out.q = SolutionSet(q.dim(), q.label());
  for (std::size_t i : out.q_index) out.q.add_point(q[i]);
  return out;
}

std::pair<SolutionSet, SolutionSet> reduce_pair(const SolutionSet& p, const SolutionSet& q) {
  ReducedPair r = reduce_pair_indexed(p, q);
  return {std::move(r.p), std::move(r.q)};
}

}  // namespace dommove
