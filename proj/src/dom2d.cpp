#include "dommove/dom2d.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dommove/pareto.hpp"

namespace dommove {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

double move_2d(double r1, double r2, double a1, double a2) {
  return std::max(0.0, r1 - a1) + std::max(0.0, r2 - a2);
}

// Sorts rows of a 2-D set ascending on f1 and verifies the staircase shape
// (strictly increasing f1, strictly decreasing f2) that an internally
// nondominated, duplicate-free set must have.
std::vector<std::size_t> sorted_staircase_rows(const SolutionSet& s, const char* which) {
  std::vector<std::size_t> rows(s.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::sort(rows.begin(), rows.end(),
            [&](std::size_t a, std::size_t b) { return s.coord(a, 0) < s.coord(b, 0); });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool strict = s.coord(rows[i - 1], 0) < s.coord(rows[i], 0) &&
                        s.coord(rows[i - 1], 1) > s.coord(rows[i], 1);
    if (!strict) {
      throw validation_error(std::string(which) +
                             " must be mutually nondominated and duplicate-free");
    }
  }
  return rows;
}

}  // namespace

MergeEngine::MergeEngine(const SolutionSet& reduced_p, const SolutionSet& reduced_q) {
  if (reduced_p.dim() != 2 || reduced_q.dim() != 2) {
    throw unsupported_error("inward-neighbor merging handles exactly two objectives");
  }
  if (reduced_p.empty()) throw validation_error("anchor set must be nonempty");
  if (reduced_q.empty()) throw validation_error("node set must be nonempty");

  anchor_row_ = sorted_staircase_rows(reduced_p, "anchor set");
  anchor_f1_.reserve(anchor_row_.size());
  anchor_f2_.reserve(anchor_row_.size());
  for (std::size_t row : anchor_row_) {
    anchor_f1_.push_back(reduced_p.coord(row, 0));
    anchor_f2_.push_back(reduced_p.coord(row, 1));
  }

  node_row_ = sorted_staircase_rows(reduced_q, "node set");
  initial_ = node_row_.size();
  alive_count_ = initial_;
  nodes_.reserve(2 * initial_);
  repr_.reserve(2 * initial_);
  for (std::size_t i = 0; i < initial_; ++i) {
    Node n;
    n.f1 = reduced_q.coord(node_row_[i], 0);
    n.f2 = reduced_q.coord(node_row_[i], 1);
    n.lo = n.hi = i;
    n.prev = i == 0 ? kNone : i - 1;
    n.next = i + 1 == initial_ ? kNone : i + 1;
    nodes_.push_back(n);
    repr_.push_back(i);
  }
  head_ = 0;

  for (std::size_t i = 0; i < initial_; ++i) {
    nodes_[i].nb = inward_neighbor(i);
  }
  for (std::size_t i = 0; i < initial_; ++i) {
    const NeighborRef& nb = nodes_[i].nb;
    if (nb.kind == NeighborRef::Kind::node && nb.index > i &&
        nodes_[nb.index].nb == NeighborRef{NeighborRef::Kind::node, i}) {
      pending_.emplace_back(i, nb.index);
    }
  }
}

void MergeEngine::consider(NeighborRef candidate, double dist, double& best_dist,
                           NeighborRef& best, bool& found) const {
  const bool better =
      !found || dist < best_dist ||
      (dist == best_dist && (static_cast<int>(candidate.kind) < static_cast<int>(best.kind) ||
                             (candidate.kind == best.kind && candidate.index < best.index)));
  if (better) {
    best = candidate;
    best_dist = dist;
    found = true;
  }
}

NeighborRef MergeEngine::inward_neighbor(std::size_t node) const {
  assert(nodes_[node].alive);
  const double x = nodes_[node].f1;
  const double y = nodes_[node].f2;
  NeighborRef best;
  double best_dist = 0.0;
  bool found = false;

  // Alive Q candidates: along the staircase the distance grows strictly with
  // every further step, so only the adjacent nodes can win.
  if (const std::size_t prev = nodes_[node].prev; prev != kNone) {
    consider({NeighborRef::Kind::node, prev},
             move_2d(nodes_[prev].f1, nodes_[prev].f2, x, y), best_dist, best, found);
  }
  if (const std::size_t next = nodes_[node].next; next != kNone) {
    consider({NeighborRef::Kind::node, next},
             move_2d(nodes_[next].f1, nodes_[next].f2, x, y), best_dist, best, found);
  }

  // Anchors left of the query: the first objective contributes nothing and
  // the second objective rises monotonically while walking left.
  const std::size_t split = static_cast<std::size_t>(
      std::upper_bound(anchor_f1_.begin(), anchor_f1_.end(), x) - anchor_f1_.begin());
  for (std::size_t i = split; i-- > 0;) {
    const double d = std::max(0.0, anchor_f2_[i] - y);
    if (found && d > best_dist) break;
    consider({NeighborRef::Kind::anchor, i}, d, best_dist, best, found);
  }
  // Anchors right of the query: the first-objective gap alone is a lower
  // bound on the distance and grows with every step.
  for (std::size_t i = split; i < anchor_f1_.size(); ++i) {
    const double gap = anchor_f1_[i] - x;
    if (found && gap > best_dist) break;
    consider({NeighborRef::Kind::anchor, i}, gap + std::max(0.0, anchor_f2_[i] - y),
             best_dist, best, found);
  }
  if (!found) throw validation_error("inward neighbor undefined: no other element");
  return best;
}

NeighborRef MergeEngine::inward_neighbor_full_scan(std::size_t node) const {
  assert(nodes_[node].alive);
  const double x = nodes_[node].f1;
  const double y = nodes_[node].f2;
  NeighborRef best;
  double best_dist = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < anchor_f1_.size(); ++i) {
    consider({NeighborRef::Kind::anchor, i}, move_2d(anchor_f1_[i], anchor_f2_[i], x, y),
             best_dist, best, found);
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i == node || !nodes_[i].alive) continue;
    consider({NeighborRef::Kind::node, i}, move_2d(nodes_[i].f1, nodes_[i].f2, x, y),
             best_dist, best, found);
  }
  if (!found) throw validation_error("inward neighbor undefined: no other element");
  return best;
}

std::pair<double, double> MergeEngine::node_coords(std::size_t node) const {
  return {nodes_[node].f1, nodes_[node].f2};
}

NeighborRef MergeEngine::neighbor_of(std::size_t node) const { return nodes_[node].nb; }

std::size_t MergeEngine::resolve(std::size_t node) const {
  std::size_t root = node;
  while (!nodes_[root].alive) root = repr_[root];
  while (!nodes_[node].alive) {
    const std::size_t next = repr_[node];
    repr_[node] = root;
    node = next;
  }
  return root;
}

std::size_t MergeEngine::node_target(std::size_t node) const {
  const NeighborRef& nb = nodes_[node].nb;
  if (nb.kind != NeighborRef::Kind::node) return kNone;
  return resolve(nb.index);
}

bool MergeEngine::mutual(std::size_t a, std::size_t b) const {
  return node_target(a) == b && node_target(b) == a;
}

bool MergeEngine::step() {
  while (!pending_.empty()) {
    const auto [raw_a, raw_b] = pending_.front();
    pending_.pop_front();
    const std::size_t a = resolve(raw_a);
    const std::size_t b = resolve(raw_b);
    if (a == b || !mutual(a, b)) continue;
    merge(a, b);
    return true;
  }
  return false;
}

void MergeEngine::run() {
  while (step()) {
  }
}

void MergeEngine::merge(std::size_t a, std::size_t b) {
  const std::size_t left = nodes_[a].f1 < nodes_[b].f1 ? a : b;
  const std::size_t right = left == a ? b : a;
  // Mutual neighbors have no alive node between them (Q is a staircase and
  // their ideal point would dominate it), so they are adjacent.
  if (nodes_[left].next != right || nodes_[left].hi + 1 != nodes_[right].lo) {
    throw std::logic_error("mutual inward neighbors are not adjacent");
  }
  const std::size_t id = nodes_.size();
  Node sn;
  sn.f1 = nodes_[left].f1;
  sn.f2 = nodes_[right].f2;
  sn.lo = nodes_[left].lo;
  sn.hi = nodes_[right].hi;
  sn.prev = nodes_[left].prev;
  sn.next = nodes_[right].next;
  events_.push_back({left, right, id, sn.f1, sn.f2});
  nodes_.push_back(sn);
  repr_.push_back(id);
  nodes_[left].alive = false;
  nodes_[right].alive = false;
  repr_[left] = id;
  repr_[right] = id;
  if (sn.prev != kNone) {
    nodes_[sn.prev].next = id;
  } else {
    head_ = id;
  }
  if (sn.next != kNone) nodes_[sn.next].prev = id;
  --alive_count_;

  nodes_[id].nb = inward_neighbor(id);
  if (nodes_[id].nb.kind == NeighborRef::Kind::node) {
    const std::size_t m = nodes_[id].nb.index;
    if (node_target(m) == id) pending_.emplace_back(id, m);
  }
}

std::size_t MergeEngine::anchor_of(std::size_t node) const {
  if (anchor_memo_.size() < nodes_.size()) anchor_memo_.resize(nodes_.size(), kNone);
  std::vector<std::size_t> path;
  std::size_t cur = resolve(node);
  while (anchor_memo_[cur] == kNone && nodes_[cur].nb.kind == NeighborRef::Kind::node) {
    path.push_back(cur);
    cur = resolve(nodes_[cur].nb.index);
    if (path.size() > nodes_.size()) {
      throw std::logic_error("unanchored cycle in the neighbor graph");
    }
  }
  const std::size_t anchor =
      anchor_memo_[cur] != kNone ? anchor_memo_[cur] : nodes_[cur].nb.index;
  anchor_memo_[cur] = anchor;
  for (std::size_t n : path) anchor_memo_[n] = anchor;
  return anchor;
}

std::size_t MergeEngine::longest_cycle() const {
  std::size_t longest = 0;
  for (std::size_t start = 0; start < nodes_.size(); ++start) {
    if (!nodes_[start].alive) continue;
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (true) {
      const auto seen = std::find(path.begin(), path.end(), cur);
      if (seen != path.end()) {
        longest = std::max(longest, static_cast<std::size_t>(path.end() - seen));
        break;
      }
      path.push_back(cur);
      const std::size_t next = node_target(cur);
      if (next == kNone) break;
      cur = next;
    }
  }
  return longest;
}

DomResult compute_dom_2d(const SolutionSet& p, const SolutionSet& q) {
  if (p.empty() || q.empty()) throw validation_error("dominance move needs nonempty sets");
  if (p.dim() != 2 || q.dim() != 2) {
    throw unsupported_error(
        "compute_dom_2d handles exactly two objectives; use the brute-force oracle "
        "for higher dimensions");
  }
  const ReducedPair reduced = reduce_pair_indexed(p, q);
  DomResult result;
  if (reduced.q.empty()) return result;  // P weakly dominates Q

  MergeEngine engine(reduced.p, reduced.q);
  engine.run();

  const std::size_t l = engine.initial_count();
  result.node_to_q.resize(l);
  struct Group {
    std::vector<std::size_t> members;
    double min1 = std::numeric_limits<double>::infinity();
    double min2 = std::numeric_limits<double>::infinity();
  };
  std::vector<Group> by_anchor(engine.anchor_count());
  for (std::size_t node = 0; node < l; ++node) {
    const std::size_t pos = engine.anchor_of(node);
    const std::size_t row = engine.node_row(node);
    const std::size_t original = reduced.q_index[row];
    result.node_to_q[node] = original;
    Group& g = by_anchor[pos];
    g.members.push_back(original);
    g.min1 = std::min(g.min1, reduced.q.coord(row, 0));
    g.min2 = std::min(g.min2, reduced.q.coord(row, 1));
  }

  for (std::size_t pos = 0; pos < by_anchor.size(); ++pos) {
    if (by_anchor[pos].members.empty()) continue;
    const std::size_t row = engine.anchor_row(pos);
    PartitionGroup group;
    group.anchor_index = reduced.p_index[row];
    group.member_indices = std::move(by_anchor[pos].members);
    std::sort(group.member_indices.begin(), group.member_indices.end());
    group.group_move = std::max(0.0, reduced.p.coord(row, 0) - by_anchor[pos].min1) +
                       std::max(0.0, reduced.p.coord(row, 1) - by_anchor[pos].min2);
    result.partition.groups.push_back(std::move(group));
  }
  std::sort(result.partition.groups.begin(), result.partition.groups.end(),
            [](const PartitionGroup& a, const PartitionGroup& b) {
              return a.anchor_index < b.anchor_index;
            });
  double total = 0.0;
  for (const PartitionGroup& g : result.partition.groups) total += g.group_move;
  result.partition.total_move = total;
  result.value = total;
  result.trace = engine.events();
  return result;
}

}  // namespace dommove
