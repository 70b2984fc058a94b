#include "revlab/random.hpp"

#include "revlab/error.hpp"

namespace revlab {

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

PseudoDistance random_distance(int n, Rank max_rank, DistanceShape shape,
                               std::mt19937_64& rng) {
  const bool identity =
      shape == DistanceShape::kIdentity || shape == DistanceShape::kSymmetricIdentity;
  const bool symmetric =
      shape == DistanceShape::kSymmetric || shape == DistanceShape::kSymmetricIdentity;
  if (identity && max_rank == 0) {
    throw PreconditionError("identity-respecting distances need max_rank >= 1");
  }
  std::vector<Rank> ranks(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = symmetric ? a : 0; b < n; ++b) {
      Rank r;
      if (identity && a == b) {
        r = 0;
      } else if (identity) {
        r = 1 + static_cast<Rank>(draw(rng, max_rank));
      } else {
        r = static_cast<Rank>(draw(rng, std::uint64_t{max_rank} + 1));
      }
      ranks[a * n + b] = r;
      if (symmetric) ranks[b * n + a] = r;
    }
  }
  return PseudoDistance(n, std::move(ranks));
}

SubsetMask random_nonempty_subset(SubsetMask of, std::mt19937_64& rng) {
  const auto members = elements(of);
  while (true) {
    SubsetMask picked;
    for (int e : members) {
      if (draw(rng, 2) == 1) picked = picked | SubsetMask::singleton(e);
    }
    if (!picked.empty()) return picked;
  }
}

SetOperator random_contained_operator(int n, std::mt19937_64& rng, SizeLimit limit) {
  return SetOperator::tabulate(
      Universe(n), [&](SubsetMask, SubsetMask b) { return random_nonempty_subset(b, rng); },
      limit);
}

}  // namespace revlab
