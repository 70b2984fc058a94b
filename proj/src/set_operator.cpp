#include "revlab/set_operator.hpp"

#include <string>

#include "revlab/error.hpp"

namespace revlab {

void SetOperator::check_size(int n, SizeLimit limit) {
  if (n > limit.max_universe) {
    throw SizeLimitError("universe of size " + std::to_string(n) +
                         " exceeds the operator-table cap of " +
                         std::to_string(limit.max_universe));
  }
}

SetOperator::SetOperator(Universe universe, std::vector<SubsetMask> table,
                         SizeLimit limit)
    : universe_(std::move(universe)), table_(std::move(table)) {
  const int n = universe_.size();
  check_size(n, limit);
  const std::size_t m = static_cast<std::size_t>(subset_count(n));
  if (table_.size() != m * m) {
    throw DimensionError("operator table needs " + std::to_string(m * m) +
                         " entries, got " + std::to_string(table_.size()));
  }
  for (std::size_t k = 0; k < table_.size(); ++k) {
    const SubsetMask entry = table_[k];
    if (entry.empty() || !entry.fits(n)) {
      throw DimensionError("operator entry " + to_string(subset_at(k / m)) + " | " +
                           to_string(subset_at(k % m)) + " = " + to_string(entry) +
                           " is not a nonempty subset of the universe");
    }
  }
}

SetOperator SetOperator::with_entry(SubsetMask left, SubsetMask right,
                                    SubsetMask result) const {
  std::vector<SubsetMask> table = table_;
  table[static_cast<std::size_t>(subset_index(left)) * family_size() +
        subset_index(right)] = result;
  return SetOperator(universe_, std::move(table), SizeLimit{kHardMaxUniverse});
}

SetOperator operator_from_distance(const PseudoDistance& d, SizeLimit limit) {
  return SetOperator::tabulate(
      d.universe(), [&](SubsetMask a, SubsetMask b) { return closest(d, a, b); },
      limit);
}

std::optional<std::pair<SubsetMask, SubsetMask>> first_difference(
    const SetOperator& a, const SetOperator& b) {
  if (a.size() != b.size()) {
    throw DimensionError("operators over universes of different size");
  }
  const int m = a.family_size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (a(subset_at(i), subset_at(j)) != b(subset_at(i), subset_at(j))) {
        return std::make_pair(subset_at(i), subset_at(j));
      }
    }
  }
  return std::nullopt;
}

}  // namespace revlab
