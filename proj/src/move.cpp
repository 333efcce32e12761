#include "dommove/move.hpp"

#include <algorithm>
#include <string>

namespace dommove {

namespace {

void check_dims(std::size_t a, std::size_t b) {
  if (a != b) {
    throw validation_error("dimension mismatch: " + std::to_string(a) + " vs " +
                           std::to_string(b));
  }
}

}  // namespace

ObjectiveVector ideal_point(const std::vector<ObjectiveVector>& points) {
  if (points.empty()) throw validation_error("ideal point of an empty set is undefined");
  ObjectiveVector ideal = points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    check_dims(ideal.size(), points[i].size());
    for (std::size_t j = 0; j < ideal.size(); ++j) {
      ideal[j] = std::min(ideal[j], points[i][j]);
    }
  }
  return ideal;
}

double move_point_to_point(std::span<const double> p, std::span<const double> q) {
  check_dims(p.size(), q.size());
  double total = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    total += p[j] - std::min(p[j], q[j]);
  }
  return total;
}

double move_point_to_group(std::span<const double> p,
                           const std::vector<ObjectiveVector>& group) {
  if (group.empty()) throw validation_error("move to an empty group is undefined");
  for (const auto& member : group) check_dims(p.size(), member.size());
  double total = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    double low = group.front()[j];
    for (std::size_t i = 1; i < group.size(); ++i) {
      low = std::min(low, group[i][j]);
    }
    total += p[j] - std::min(p[j], low);
  }
  return total;
}

}  // namespace dommove
