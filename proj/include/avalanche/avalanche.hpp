#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "avalanche/polynomial.hpp"
#include "avalanche/sandpile.hpp"

namespace avalanche {

// One principal avalanche: the stabilization of recurrent + one grain at
// vertex. The toppling vector is the exponent vector of its monomial.
struct AvalancheRecord {
    Grains recurrent;
    int vertex;  // non-sink compacted index
    Grains topplings;
    std::int64_t size;
    std::int64_t burst;
};

// Monomial x^{toppling vector of (c + 1_v)°} with coefficient 1. The empty
// avalanche contributes the constant monomial 1.
MultiPoly avalanche_monomial(const Graph& g, const Grains& recurrent, int vertex);

struct PolyOptions {
    std::uint64_t limit = kDefaultStateLimit;
    int threads = 1;
    // When set, receives every avalanche in deterministic order (recurrents
    // lexicographic, vertices ascending); forces single-threaded streaming.
    std::function<void(const AvalancheRecord&)> record_sink;
};

// Sum of avalanche monomials over every recurrent sandpile and every non-sink
// vertex, accumulated streamingly. Sharding across threads cannot change the
// result since polynomial addition is associative and commutative.
MultiPoly avalanche_polynomial(const Graph& g, const PolyOptions& options = {});

// Count of principal avalanches per size, tallied directly from simulation
// (deliberately not derived from the polynomial, so the two can be checked
// against each other).
using SizeDistribution = std::map<std::int64_t, BigInt>;
SizeDistribution size_distribution(const Graph& g, std::uint64_t limit = kDefaultStateLimit);

// Burst-size counts: the avalanche polynomial specialized per sink adjacency.
UniPoly burst_distribution(const Graph& g, const PolyOptions& options = {});

// Drop `drops` grains on uniformly random cells of a rows x cols grid
// (starting from the maximal stable sandpile), stabilizing after each drop;
// returns the histogram of avalanche sizes. SplitMix64-seeded and exactly
// reproducible for a fixed seed.
std::map<std::int64_t, std::uint64_t> grid_experiment(int rows, int cols, std::uint64_t drops,
                                                      std::uint64_t seed);

}  // namespace avalanche
