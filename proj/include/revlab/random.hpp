#pragma once

#include <cstdint>
#include <random>

#include "revlab/distance.hpp"
#include "revlab/set_operator.hpp"

namespace revlab {

/// Independent generator for trial `index` of a run seeded with `seed`.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Uniform draw in [0, bound). Uses plain modulo so results do not depend
/// on the standard library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

enum class DistanceShape { kAny, kSymmetric, kIdentity, kSymmetricIdentity };

/// Ranks in [0, max_rank]; identity shapes use 0 on the diagonal and
/// [1, max_rank] elsewhere.
PseudoDistance random_distance(int n, Rank max_rank, DistanceShape shape,
                               std::mt19937_64& rng);

SubsetMask random_nonempty_subset(SubsetMask of, std::mt19937_64& rng);

/// Random table whose entries are nonempty subsets of their right argument.
SetOperator random_contained_operator(int n, std::mt19937_64& rng, SizeLimit limit = {});

}  // namespace revlab
