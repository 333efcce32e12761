/**
 * @file oracle.hpp
 * @brief Exact dominance move by exhaustive partition enumeration.
 *
 * Enumerates every assignment of the surviving Q points to P anchors and
 * returns the minimum total group move. Works for any number of objectives
 * and is the ground truth the fast biobjective algorithm is tested against,
 * as well as the only exact method available beyond two objectives.
 */

#ifndef DOMMOVE_ORACLE_HPP
#define DOMMOVE_ORACLE_HPP

#include <cstddef>

#include "dommove/types.hpp"

namespace dommove {

/// Default cap on the number of enumerated assignments (n^L after reduction).
inline constexpr std::size_t kDefaultOracleBudget = 10'000'000;

/**
 * @brief Exact D(P,Q) by enumerating all n^L anchor assignments.
 *
 * Assignments are walked as a mixed-radix counter over the Q indices with
 * the last index varying fastest; the first minimizer encountered is
 * returned, so the result is deterministic. The enumeration fans out over
 * threads for large counters but always reports the same minimizer the
 * serial order would find.
 *
 * @throws budget_error when n^L exceeds the limit (never approximates).
 */
[[nodiscard]] DomResult dom_brute_force(const SolutionSet& p, const SolutionSet& q,
                                        std::size_t limit = kDefaultOracleBudget);

/// Single-threaded reference enumeration; same contract and same result.
[[nodiscard]] DomResult dom_brute_force_serial(const SolutionSet& p, const SolutionSet& q,
                                               std::size_t limit = kDefaultOracleBudget);

}  // namespace dommove

#endif  // DOMMOVE_ORACLE_HPP
