#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "revlab/distance.hpp"
#include "revlab/subset.hpp"

namespace revlab {

/// A total table (A, B) -> A | B over the nonempty subsets of a universe.
///
/// Entries are only required to be nonempty; containment in B is a
/// postulate checked elsewhere, so tables violating it can still be stored.
class SetOperator {
 public:
  /// `table[subset_index(A) * subset_count(n) + subset_index(B)]` is A | B.
  SetOperator(Universe universe, std::vector<SubsetMask> table,
              SizeLimit limit = {});
  SetOperator(int n, std::vector<SubsetMask> table, SizeLimit limit = {})
      : SetOperator(Universe(n), std::move(table), limit) {}

  /// Fills the table by calling f(A, B) for every pair, in canonical order.
  template <typename F>
  static SetOperator tabulate(Universe universe, F&& f, SizeLimit limit = {}) {
    check_size(universe.size(), limit);
    const int m = subset_count(universe.size());
    std::vector<SubsetMask> table;
    table.reserve(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) table.push_back(f(subset_at(i), subset_at(j)));
    }
    return SetOperator(std::move(universe), std::move(table), limit);
  }

  int size() const { return universe_.size(); }
  int family_size() const { return subset_count(size()); }
  const Universe& universe() const { return universe_; }
  const std::vector<SubsetMask>& table() const { return table_; }

  SubsetMask operator()(SubsetMask left, SubsetMask right) const {
    return table_[static_cast<std::size_t>(subset_index(left)) * family_size() +
                  subset_index(right)];
  }

  /// Copy with one entry replaced.
  SetOperator with_entry(SubsetMask left, SubsetMask right, SubsetMask result) const;

  /// Entrywise equality; labels are ignored.
  friend bool operator==(const SetOperator& a, const SetOperator& b) {
    return a.size() == b.size() && a.table_ == b.table_;
  }

  static void check_size(int n, SizeLimit limit);

 private:
  Universe universe_;
  std::vector<SubsetMask> table_;
};

/// A | B := closest(d, A, B) for every pair.
SetOperator operator_from_distance(const PseudoDistance& d, SizeLimit limit = {});

/// First pair, in canonical order, where the two tables disagree.
std::optional<std::pair<SubsetMask, SubsetMask>> first_difference(
    const SetOperator& a, const SetOperator& b);

}  // namespace revlab
