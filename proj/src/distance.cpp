#include "revlab/distance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "revlab/error.hpp"

namespace revlab {

namespace {

void require_member(const PseudoDistance& d, SubsetMask m, const char* role) {
  if (m.empty()) {
    throw DimensionError(std::string(role) + " set must be nonempty");
  }
  if (!m.fits(d.size())) {
    throw DimensionError(std::string(role) + " set " + to_string(m) +
                         " lies outside a universe of size " +
                         std::to_string(d.size()));
  }
}

}  // namespace

PseudoDistance::PseudoDistance(Universe universe, std::vector<Rank> ranks)
    : universe_(std::move(universe)), ranks_(std::move(ranks)) {
  const int n = universe_.size();
  if (ranks_.size() != static_cast<std::size_t>(n * n)) {
    throw DimensionError("distance table needs " + std::to_string(n * n) +
                         " entries, got " + std::to_string(ranks_.size()));
  }
  DistanceReport report = validate_distance(*this);
  symmetric_ = report.symmetric;
  respects_identity_ = report.respects_identity;
}

PseudoDistance PseudoDistance::from_matrix(
    const std::vector<std::vector<Rank>>& rows, std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  std::vector<Rank> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionError("distance matrix must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return PseudoDistance(Universe(n, std::move(labels)), std::move(flat));
}

DistanceReport validate_distance(const PseudoDistance& d) {
  DistanceReport report;
  const int n = d.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!report.asymmetric_pair && d(a, b) != d(b, a)) {
        report.asymmetric_pair = {a, b};
      }
      if (!report.identity_violation && ((d(a, b) == 0) != (a == b))) {
        report.identity_violation = {a, b};
      }
    }
  }
  report.symmetric = !report.asymmetric_pair;
  // With natural-number ranks a zero diagonal is automatically the minimum.
  report.respects_identity = !report.identity_violation;
  return report;
}

Rank set_distance(const PseudoDistance& d, SubsetMask from, SubsetMask to) {
  require_member(d, from, "left");
  require_member(d, to, "right");
  Rank best = std::numeric_limits<Rank>::max();
  for (int a : elements(from)) {
    for (int b : elements(to)) best = std::min(best, d(a, b));
  }
  return best;
}

SubsetMask closest(const PseudoDistance& d, SubsetMask from, SubsetMask to) {
  const Rank best = set_distance(d, from, to);
  SubsetMask result;
  for (int b : elements(to)) {
    for (int a : elements(from)) {
      if (d(a, b) == best) {
        result = result | SubsetMask::singleton(b);
        break;
      }
    }
  }
  return result;
}

PseudoDistance hamming_distance(int atoms) {
  if (atoms < 1 || (1 << atoms) > kHardMaxUniverse) {
    throw SizeLimitError("hamming distance needs 1 <= atoms and 2^atoms <= " +
                         std::to_string(kHardMaxUniverse) + ", got " +
                         std::to_string(atoms));
  }
  const int n = 1 << atoms;
  std::vector<Rank> ranks(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ranks[a * n + b] = static_cast<Rank>(std::popcount(static_cast<unsigned>(a ^ b)));
    }
  }
  // Elements are valuations; label each by its atom values, atom 0 first.
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    std::string label;
    for (int j = 0; j < atoms; ++j) label += ((v >> j) & 1) ? '1' : '0';
    labels.push_back(std::move(label));
  }
  return PseudoDistance(Universe(n, std::move(labels)), std::move(ranks));
}

PseudoDistance trivial_distance(int n) {
  Universe universe(n);
  std::vector<Rank> ranks(n * n, 1);
  for (int a = 0; a < n; ++a) ranks[a * n + a] = 0;
  return PseudoDistance(std::move(universe), std::move(ranks));
}

}  // namespace revlab
