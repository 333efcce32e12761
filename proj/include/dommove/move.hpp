/**
 * @file move.hpp
 * @brief Manhattan dominance-move primitives.
 *
 * The move distance of p to q is the minimum l1 distance p has to travel to
 * weakly dominate q: sum over objectives of (p^j - min(p^j, q^j)). The move
 * to a group is the move to the ideal point of the group and p itself, and
 * is order-independent when a group is accumulated point by point.
 */

#ifndef DOMMOVE_MOVE_HPP
#define DOMMOVE_MOVE_HPP

#include <span>
#include <vector>

#include "dommove/types.hpp"

namespace dommove {

/// Coordinate-wise minimum of a nonempty list of points.
[[nodiscard]] ObjectiveVector ideal_point(const std::vector<ObjectiveVector>& points);

/// Move distance of p to a single point q; zero iff p weakly dominates q.
[[nodiscard]] double move_point_to_point(std::span<const double> p, std::span<const double> q);

/// Move distance of p to a nonempty group of points.
[[nodiscard]] double move_point_to_group(std::span<const double> p,
                                         const std::vector<ObjectiveVector>& group);

}  // namespace dommove

#endif  // DOMMOVE_MOVE_HPP
