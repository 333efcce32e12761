/**
 * @file pareto.hpp
 * @brief Dominance relations, nondominated filtering and pair reduction.
 *
 * All comparisons are exact coordinate comparisons on 64-bit floats; there
 * is no internal tolerance. Filtering keeps the first occurrence of exact
 * duplicates and preserves input order, so results are deterministic for a
 * fixed input.
 */

#ifndef DOMMOVE_PARETO_HPP
#define DOMMOVE_PARETO_HPP

#include <span>
#include <utility>
#include <vector>

#include "dommove/types.hpp"

namespace dommove {

/// p is no worse than q on every objective (p^i <= q^i for all i).
[[nodiscard]] bool weakly_dominates(std::span<const double> p, std::span<const double> q);

/// p weakly dominates q and is strictly better on at least one objective.
[[nodiscard]] bool dominates(std::span<const double> p, std::span<const double> q);

/**
 * @brief Classifies the relation between two nonempty sets.
 *
 * Expects both sets already reduced to their nondominated subsets. The tags
 * follow the set-level weak dominance relation: equal when each set weakly
 * dominates the other, P_better / Q_better when the dominance is one-sided,
 * incomparable otherwise.
 */
[[nodiscard]] SetRelation classify_relation(const SolutionSet& p, const SolutionSet& q);

/**
 * @brief Subset of s not dominated by any other member.
 *
 * First-occurrence order is preserved and exact duplicates collapse to the
 * first copy. Uses an O(N log N) sort-and-sweep for two objectives and an
 * O(m N^2) pairwise scan otherwise.
 */
[[nodiscard]] SolutionSet nondominated_filter(const SolutionSet& s);

/// Pairwise reference filter (any dimension, serial). Kept for tests and
/// benchmarks as the independent check on the sweep and the parallel scan.
[[nodiscard]] SolutionSet nondominated_filter_pairwise_serial(const SolutionSet& s);

/**
 * @brief Removes all points that cannot affect the dominance move D(P,Q).
 *
 * P' is the nondominated subset of P; Q' is the nondominated subset of Q
 * minus every point weakly dominated by a member of P' (an exactly equal
 * point contributes zero move, so dropping it preserves the value). After
 * reduction the only cross-set dominance left is a Q point dominating a
 * P point. Q' may be empty.
 */
[[nodiscard]] std::pair<SolutionSet, SolutionSet> reduce_pair(const SolutionSet& p,
                                                              const SolutionSet& q);

/// Reduction result that remembers where each surviving point came from.
struct ReducedPair {
  SolutionSet p;                      ///< Nondominated subset of P.
  SolutionSet q;                      ///< Surviving Q points (may be empty).
  std::vector<std::size_t> p_index;   ///< Row in p -> index in the original P.
  std::vector<std::size_t> q_index;   ///< Row in q -> index in the original Q.
};

[[nodiscard]] ReducedPair reduce_pair_indexed(const SolutionSet& p, const SolutionSet& q);

namespace detail {

/// Indices (into s) of the nondominated subset, ascending.
[[nodiscard]] std::vector<std::size_t> nondominated_indices(const SolutionSet& s);

/// True if some point of the set weakly dominates q. For dim = 2 the set
/// must be passed through as a staircase (handled by the callers here);
/// general dimension falls back to a linear scan.
[[nodiscard]] bool any_weakly_dominates(const SolutionSet& s, std::span<const double> q);

}  // namespace detail

}  // namespace dommove

#endif  // DOMMOVE_PARETO_HPP
