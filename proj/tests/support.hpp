#pragma once

// Adapters between library types and the raw oracle representation.

#include <vector>

#include "oracles.hpp"
#include "revlab/distance.hpp"
#include "revlab/set_operator.hpp"

namespace support {

inline oracle::Ranks ranks_of(const revlab::PseudoDistance& d) {
  return {d.size(), std::vector<unsigned>(d.ranks().begin(), d.ranks().end())};
}

inline revlab::PseudoDistance distance_of(const oracle::Ranks& r) {
  return revlab::PseudoDistance(r.n, std::vector<revlab::Rank>(r.r.begin(), r.r.end()));
}

inline oracle::OpFn fn_of(const revlab::SetOperator& op) {
  return [&op](oracle::Mask a, oracle::Mask b) {
    return op(revlab::SubsetMask{a}, revlab::SubsetMask{b}).bits;
  };
}

inline std::vector<oracle::Mask> table_of(const revlab::SetOperator& op) {
  std::vector<oracle::Mask> out;
  for (auto m : op.table()) out.push_back(m.bits);
  return out;
}

inline revlab::SetOperator operator_of(int n, const std::vector<oracle::Mask>& table) {
  std::vector<revlab::SubsetMask> t;
  for (auto m : table) t.push_back(revlab::SubsetMask{m});
  return revlab::SetOperator(revlab::Universe(n), std::move(t), revlab::SizeLimit{8});
}

}  // namespace support
