/**
 * @file types.hpp
 * @brief Core domain types shared by all dominance-move components.
 *
 * A SolutionSet is an ordered list of objective vectors (minimization
 * orientation, 64-bit floats, no internal tolerance). Partition, DomResult
 * and ComparisonReport carry the outputs of the indicator computations.
 */

#ifndef DOMMOVE_TYPES_HPP
#define DOMMOVE_TYPES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dommove {

/// One point in m-dimensional objective space.
using ObjectiveVector = std::vector<double>;

/// Input data failed validation (non-finite values, ragged rows, bad files).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Operation is not available for the requested dimension or mode.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration budget would be exceeded; never silently approximated.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * @brief Ordered collection of objective vectors with a common dimension.
 *
 * Points are stored row-major and kept exactly as constructed: duplicates
 * and dominated points are retained until a filter is applied explicitly.
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class SolutionSet {
 public:
  SolutionSet() = default;

  /// Empty set with a fixed dimension (points added via add_point).
  SolutionSet(std::size_t dim, std::string label)
      : dim_(dim), label_(std::move(label)) {}

  void add_point(std::span<const double> coords);

  [[nodiscard]] std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] bool empty() const { return coords_.empty(); }
  [[nodiscard]] const std::string& label() const { return label_; }

  [[nodiscard]] std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  [[nodiscard]] double coord(std::size_t i, std::size_t j) const {
    return coords_[i * dim_ + j];
  }

  /// Copies the points back out row by row (bitwise identical to the input).
  [[nodiscard]] std::vector<ObjectiveVector> rows() const;

  /// Point-wise equality; labels are not compared.
  friend bool operator==(const SolutionSet& a, const SolutionSet& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

 private:
  std::vector<double> coords_;
  std::size_t dim_ = 0;
  std::string label_;
};

/**
 * @brief Builds a SolutionSet from rows of objective values.
 *
 * Rows must be nonempty, rectangular and finite; input order is preserved
 * and no filtering is applied.
 *
 * @throws validation_error on ragged rows or non-finite values (the message
 *         names the offending row/column, 1-based).
 */
[[nodiscard]] SolutionSet make_set(const std::vector<ObjectiveVector>& rows,
                                   std::string label = "");

/// One group of an optimal partition: a P anchor plus the Q points it covers.
struct PartitionGroup {
  std::size_t anchor_index = 0;              ///< Index into the original P.
  std::vector<std::size_t> member_indices;   ///< Indices into the original Q.
  double group_move = 0.0;                   ///< Move of the anchor to cover the members.
};

/**
 * @brief Assignment of every retained Q point to exactly one P anchor.
 *
 * Member sets are disjoint and cover exactly the Q points that survive the
 * dominance reduction; total_move is the sum of the group moves in ascending
 * anchor order.
 */
struct Partition {
  std::vector<PartitionGroup> groups;
  double total_move = 0.0;
};

/// A supernode merge performed by the biobjective algorithm (audit trail).
struct MergeEvent {
  std::size_t node_a = 0;       ///< Merged node ids (initial nodes are 0..l-1
  std::size_t node_b = 0;       ///< in ascending first-objective order).
  std::size_t result_node = 0;  ///< Id of the created supernode.
  double ideal_f1 = 0.0;        ///< Coordinates of the supernode.
  double ideal_f2 = 0.0;
};

/// Dominance move value together with the partition that realizes it.
struct DomResult {
  double value = 0.0;
  Partition partition;
  std::vector<MergeEvent> trace;       ///< Empty for the brute-force path.
  std::vector<std::size_t> node_to_q;  ///< Initial node id -> original Q index.
};

/// Set-level relation between two solution sets.
enum class SetRelation { equal, p_better, q_better, incomparable };

[[nodiscard]] const char* to_string(SetRelation r);

/// All indicator values for one ordered pair of sets.
struct ComparisonReport {
  SetRelation relation = SetRelation::incomparable;
  double dom_pq = 0.0;
  double dom_qp = 0.0;
  double eps_pq = 0.0;
  double eps_qp = 0.0;
  std::optional<double> hv_p;  ///< Present only when a reference point was given.
  std::optional<double> hv_q;
};

}  // namespace dommove

#endif  // DOMMOVE_TYPES_HPP
