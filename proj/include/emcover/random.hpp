#ifndef EMCOVER_RANDOM_HPP
#define EMCOVER_RANDOM_HPP

#include <cstdint>
#include <random>

#include "emcover/setsys.hpp"

namespace emcover {

inline constexpr std::uint64_t kDefaultSeed = 1;

/// m distinct r-sets of {1..n}, uniformly at random.
Hypergraph random_hypergraph(int n, int r, int m, std::mt19937_64& rng);

/// Each pair independently absent, or oriented one way or the other, with
/// probability `density` of carrying an arc.
Digraph random_oriented(int n, double density, std::mt19937_64& rng);

}  // namespace emcover

#endif  // EMCOVER_RANDOM_HPP
