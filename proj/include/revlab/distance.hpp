#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "revlab/subset.hpp"

namespace revlab {

/// Values of a pseudo-distance. Only their order is significant.
using Rank = std::uint32_t;

/// A total map U x U -> Rank. No symmetry or triangle inequality is assumed;
/// both property flags are computed from the table at construction.
class PseudoDistance {
 public:
  /// `ranks` is row-major: ranks[a * n + b] is the distance from a to b.
  PseudoDistance(Universe universe, std::vector<Rank> ranks);
  PseudoDistance(int n, std::vector<Rank> ranks)
      : PseudoDistance(Universe(n), std::move(ranks)) {}

  static PseudoDistance from_matrix(const std::vector<std::vector<Rank>>& rows,
                                    std::vector<std::string> labels = {});

  int size() const { return universe_.size(); }
  const Universe& universe() const { return universe_; }
  Rank operator()(int from, int to) const { return ranks_[from * size() + to]; }
  const std::vector<Rank>& ranks() const { return ranks_; }

  /// d(a,b) = 0 iff a = b.
  bool respects_identity() const { return respects_identity_; }
  /// d(a,b) = d(b,a).
  bool symmetric() const { return symmetric_; }

  /// Same table and universe size; labels are ignored.
  friend bool operator==(const PseudoDistance& a, const PseudoDistance& b) {
    return a.size() == b.size() && a.ranks_ == b.ranks_;
  }

 private:
  Universe universe_;
  std::vector<Rank> ranks_;
  bool respects_identity_ = false;
  bool symmetric_ = false;
};

struct DistanceReport {
  bool symmetric = false;
  bool respects_identity = false;
  /// First (a,b) with d(a,b) != d(b,a).
  std::optional<std::pair<int, int>> asymmetric_pair;
  /// First (a,b) breaking "d(a,b) = 0 iff a = b".
  std::optional<std::pair<int, int>> identity_violation;
};

DistanceReport validate_distance(const PseudoDistance& d);

/// Minimum of d(a,b) over a in A, b in B.
Rank set_distance(const PseudoDistance& d, SubsetMask from, SubsetMask to);

/// The elements of `to` that are d-closest to `from`:
/// { b in to : min_{a in from} d(a,b) = set_distance(d, from, to) }.
SubsetMask closest(const PseudoDistance& d, SubsetMask from, SubsetMask to);

/// Rank = number of differing bits between two valuations of k atoms.
PseudoDistance hamming_distance(int atoms);

/// 0 on the diagonal, 1 elsewhere.
PseudoDistance trivial_distance(int n);

/// Applies `map` to every rank. Used to check that only rank order matters.
template <typename F>
PseudoDistance remap_ranks(const PseudoDistance& d, F&& map) {
  std::vector<Rank> out;
  out.reserve(d.ranks().size());
  for (Rank r : d.ranks()) out.push_back(static_cast<Rank>(map(r)));
  return PseudoDistance(d.universe(), std::move(out));
}

}  // namespace revlab
