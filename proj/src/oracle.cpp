#include "dommove/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "dommove/pareto.hpp"

namespace dommove {

namespace {

constexpr std::size_t kNoStamp = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kParallelThreshold = 1u << 15;

// Evaluates one assignment: digit j of the counter is the anchor of the
// j-th surviving Q point. Group moves are summed in ascending anchor order
// so the value matches the partition assembled afterwards bit for bit.
class AssignmentEvaluator {
 public:
  AssignmentEvaluator(const SolutionSet& p, const SolutionSet& q)
      : p_(p), q_(q), dim_(p.dim()), mins_(p.size() * dim_), stamp_(p.size(), kNoStamp) {}

  double operator()(std::size_t counter) {
    const std::size_t n = p_.size();
    const std::size_t l = q_.size();
    std::size_t k = counter;
    for (std::size_t j = l; j-- > 0;) {
      const std::size_t anchor = k % n;
      k /= n;
      double* mins = mins_.data() + anchor * dim_;
      if (stamp_[anchor] != counter) {
        stamp_[anchor] = counter;
        for (std::size_t d = 0; d < dim_; ++d) mins[d] = q_.coord(j, d);
      } else {
        for (std::size_t d = 0; d < dim_; ++d) mins[d] = std::min(mins[d], q_.coord(j, d));
      }
    }
    double total = 0.0;
    for (std::size_t anchor = 0; anchor < n; ++anchor) {
      if (stamp_[anchor] != counter) continue;
      const double* mins = mins_.data() + anchor * dim_;
      for (std::size_t d = 0; d < dim_; ++d) {
        total += std::max(0.0, p_.coord(anchor, d) - mins[d]);
      }
    }
    return total;
  }

 private:
  const SolutionSet& p_;
  const SolutionSet& q_;
  std::size_t dim_;
  std::vector<double> mins_;
  std::vector<std::size_t> stamp_;
};

std::size_t assignment_count_or_throw(std::size_t n, std::size_t l, std::size_t limit) {
  std::size_t total = 1;
  for (std::size_t j = 0; j < l; ++j) {
    if (total > limit / n) {
      throw budget_error("instance too large for oracle: " + std::to_string(n) + "^" +
                         std::to_string(l) + " assignments exceed the budget of " +
                         std::to_string(limit));
    }
    total *= n;
  }
  if (total > limit) {
    throw budget_error("instance too large for oracle: " + std::to_string(n) + "^" +
                       std::to_string(l) + " assignments exceed the budget of " +
                       std::to_string(limit));
  }
  return total;
}

DomResult assemble(const ReducedPair& reduced, std::size_t best_counter) {
  const std::size_t n = reduced.p.size();
  const std::size_t l = reduced.q.size();
  const std::size_t dim = reduced.p.dim();
  std::vector<std::vector<std::size_t>> members(n);  // rows of reduced.q per anchor
  std::size_t k = best_counter;
  for (std::size_t j = l; j-- > 0;) {
    members[k % n].push_back(j);
    k /= n;
  }
  DomResult result;
  for (std::size_t anchor = 0; anchor < n; ++anchor) {
    if (members[anchor].empty()) continue;
    PartitionGroup group;
    group.anchor_index = reduced.p_index[anchor];
    double move = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      double low = reduced.q.coord(members[anchor].front(), d);
      for (std::size_t i = 1; i < members[anchor].size(); ++i) {
        low = std::min(low, reduced.q.coord(members[anchor][i], d));
      }
      move += std::max(0.0, reduced.p.coord(anchor, d) - low);
    }
    group.group_move = move;
    for (std::size_t row : members[anchor]) {
      group.member_indices.push_back(reduced.q_index[row]);
    }
    std::sort(group.member_indices.begin(), group.member_indices.end());
    result.partition.groups.push_back(std::move(group));
  }
  double total = 0.0;
  for (const PartitionGroup& g : result.partition.groups) total += g.group_move;
  result.partition.total_move = total;
  result.value = total;
  return result;
}

DomResult brute_force_impl(const SolutionSet& p, const SolutionSet& q, std::size_t limit,
                           bool allow_parallel) {
  if (p.empty() || q.empty()) throw validation_error("dominance move needs nonempty sets");
  if (p.dim() != q.dim()) {
    throw validation_error("dimension mismatch between sets: " + std::to_string(p.dim()) +
                           " vs " + std::to_string(q.dim()));
  }
  if (limit == 0) throw validation_error("oracle budget must be positive");

  const ReducedPair reduced = reduce_pair_indexed(p, q);
  if (reduced.q.empty()) return DomResult{};  // P weakly dominates Q

  const std::size_t total =
      assignment_count_or_throw(reduced.p.size(), reduced.q.size(), limit);

  double best_value = std::numeric_limits<double>::infinity();
  std::size_t best_counter = 0;
  if (allow_parallel && total >= kParallelThreshold) {
#pragma omp parallel
    {
      AssignmentEvaluator eval(reduced.p, reduced.q);
      double local_value = std::numeric_limits<double>::infinity();
      std::size_t local_counter = 0;
#pragma omp for schedule(static) nowait
      for (long long k = 0; k < static_cast<long long>(total); ++k) {
        const double v = eval(static_cast<std::size_t>(k));
        if (v < local_value) {
          local_value = v;
          local_counter = static_cast<std::size_t>(k);
        }
      }
#pragma omp critical
      {
        if (local_value < best_value ||
            (local_value == best_value && local_counter < best_counter)) {
          best_value = local_value;
          best_counter = local_counter;
        }
      }
    }
  } else {
    AssignmentEvaluator eval(reduced.p, reduced.q);
    for (std::size_t k = 0; k < total; ++k) {
      const double v = eval(k);
      if (v < best_value) {
        best_value = v;
        best_counter = k;
      }
    }
  }
  return assemble(reduced, best_counter);
}

}  // namespace

DomResult dom_brute_force(const SolutionSet& p, const SolutionSet& q, std::size_t limit) {
  return brute_force_impl(p, q, limit, true);
}

DomResult dom_brute_force_serial(const SolutionSet& p, const SolutionSet& q,
                                 std::size_t limit) {
  return brute_force_impl(p, q, limit, false);
}

}  // namespace dommove
