#include "dommove/types.hpp"

#include <cmath>
#include <string>

namespace dommove {

void SolutionSet::add_point(std::span<const double> coords) {
  if (dim_ == 0) dim_ = coords.size();
  if (coords.size() != dim_) {
    throw validation_error("point of dimension " + std::to_string(coords.size()) +
                           " added to a set of dimension " + std::to_string(dim_));
  }
  coords_.insert(coords_.end(), coords.begin(), coords.end());
}

std::vector<ObjectiveVector> SolutionSet::rows() const {
  std::vector<ObjectiveVector> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.emplace_back(coords_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                     coords_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  }
  return out;
}

SolutionSet make_set(const std::vector<ObjectiveVector>& rows, std::string label) {
  if (rows.empty()) throw validation_error("cannot build a set from zero rows");
  const std::size_t dim = rows.front().size();
  if (dim == 0) throw validation_error("rows must have at least one objective");
  SolutionSet set(dim, std::move(label));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw validation_error("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " columns, expected " +
                             std::to_string(dim));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      if (!std::isfinite(rows[i][j])) {
        throw validation_error("non-finite value at row " + std::to_string(i + 1) +
                               ", column " + std::to_string(j + 1));
      }
    }
    set.add_point(rows[i]);
  }
  return set;
}

const char* to_string(SetRelation r) {
  switch (r) {
    case SetRelation::equal: return "equal";
    case SetRelation::p_better: return "P_better";
    case SetRelation::q_better: return "Q_better";
    case SetRelation::incomparable: return "incomparable";
  }
  return "incomparable";
}

}  // namespace dommove
