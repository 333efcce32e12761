/**
 * @file dom2d.hpp
 * @brief Exact O(N log N) dominance move for two objectives.
 *
 * The computation follows four steps: reduce the pair to the points that
 * matter, find the inward neighbor of every Q point in P union Q, merge
 * mutually-neighboring Q pairs into supernodes at their ideal point until
 * every group is anchored at a P point, then sum the group moves.
 *
 * MergeEngine exposes the step machinery so tests can audit neighbors,
 * merges and the invariants behind them; compute_dom_2d is the front door.
 */

#ifndef DOMMOVE_DOM2D_HPP
#define DOMMOVE_DOM2D_HPP

#include <cstddef>
#include <deque>
#include <span>
#include <utility>
#include <vector>

#include "dommove/types.hpp"

namespace dommove {

/// Target of an inward-neighbor edge: a P anchor or another Q node.
struct NeighborRef {
  enum class Kind { anchor, node };
  Kind kind = Kind::anchor;
  std::size_t index = 0;  ///< Anchor: position in the sorted P staircase; node: node id.

  friend bool operator==(const NeighborRef&, const NeighborRef&) = default;
};

/**
 * @brief Inward-neighbor graph and supernode merging over a reduced pair.
 *
 * Both inputs must be internally nondominated. Node ids 0..l-1 are the Q
 * points in ascending first-objective order; supernodes get fresh ids in
 * creation order. Neighbor ties are broken in favor of a P anchor, then the
 * lowest index, so runs are reproducible.
 */
class MergeEngine {
 public:
  MergeEngine(const SolutionSet& reduced_p, const SolutionSet& reduced_q);

  /// Inward neighbor of an alive node over the current universe, found by
  /// expanding outward from the node's sorted position. Pruning uses the
  /// bound d(r,a) >= max(0, r1-a1) and the staircase monotonicity of the
  /// second objective, so only a small window is ever inspected.
  [[nodiscard]] NeighborRef inward_neighbor(std::size_t node) const;

  /// Same result by scanning every candidate; the reference the pruned scan
  /// is checked against.
  [[nodiscard]] NeighborRef inward_neighbor_full_scan(std::size_t node) const;

  /// Performs the next circle merge. Returns false once no two nodes are
  /// each other's inward neighbor, i.e. the partition is complete.
  bool step();

  /// Runs step() to completion.
  void run();

  [[nodiscard]] std::size_t initial_count() const { return initial_; }
  [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
  [[nodiscard]] std::size_t alive_count() const { return alive_count_; }
  [[nodiscard]] bool alive(std::size_t node) const { return nodes_[node].alive; }
  [[nodiscard]] std::pair<double, double> node_coords(std::size_t node) const;
  [[nodiscard]] NeighborRef neighbor_of(std::size_t node) const;

  /// Alive node that currently contains the given (possibly merged) node.
  [[nodiscard]] std::size_t resolve(std::size_t node) const;

  /// Anchor of the component containing the node; valid after run().
  [[nodiscard]] std::size_t anchor_of(std::size_t node) const;

  [[nodiscard]] std::size_t anchor_count() const { return anchor_f1_.size(); }
  [[nodiscard]] std::pair<double, double> anchor_coords(std::size_t pos) const {
    return {anchor_f1_[pos], anchor_f2_[pos]};
  }
  /// Row of the reduced P set that sits at a staircase position.
  [[nodiscard]] std::size_t anchor_row(std::size_t pos) const { return anchor_row_[pos]; }
  /// Row of the reduced Q set behind an initial node id.
  [[nodiscard]] std::size_t node_row(std::size_t node) const { return node_row_[node]; }

  [[nodiscard]] const std::vector<MergeEvent>& events() const { return events_; }

  /// Length of the longest inward-neighbor cycle among Q nodes, following
  /// current edges (2 for a mutual pair, 0 when all chains reach an anchor).
  [[nodiscard]] std::size_t longest_cycle() const;

 private:
  struct Node {
    double f1 = 0.0;
    double f2 = 0.0;
    std::size_t lo = 0;  ///< Member interval in sorted node-id space.
    std::size_t hi = 0;
    NeighborRef nb;
    std::size_t prev = 0;
    std::size_t next = 0;
    bool alive = true;
  };

  void consider(NeighborRef candidate, double dist, double& best_dist,
                NeighborRef& best, bool& found) const;
  [[nodiscard]] bool mutual(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::size_t node_target(std::size_t node) const;  // kNone if anchor
  void merge(std::size_t a, std::size_t b);

  std::vector<double> anchor_f1_;
  std::vector<double> anchor_f2_;
  std::vector<std::size_t> anchor_row_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> node_row_;
  mutable std::vector<std::size_t> repr_;
  mutable std::vector<std::size_t> anchor_memo_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
  std::vector<MergeEvent> events_;
  std::size_t head_ = 0;
  std::size_t initial_ = 0;
  std::size_t alive_count_ = 0;
};

/**
 * @brief Exact dominance move D(P,Q) for two objectives.
 *
 * Returns the optimal-partition value together with the partition itself
 * (original P/Q indices) and the supernode merge trace. P weakly dominating
 * Q yields value 0 with an empty partition. Deterministic for identical
 * inputs; O((n+l) log(n+l)) comparisons.
 */
[[nodiscard]] DomResult compute_dom_2d(const SolutionSet& p, const SolutionSet& q);

}  // namespace dommove

#endif  // DOMMOVE_DOM2D_HPP
