#pragma once

#include <cstdint>
#include <vector>

#include "avalanche/sandpile.hpp"

namespace avalanche {

using ParkingFunction = std::vector<std::int64_t>;

// True iff the non-decreasing rearrangement a_0 <= ... <= a_{n-1} satisfies
// a_i <= i (with all values non-negative).
bool is_parking(const ParkingFunction& p);

// On the complete graph, stable sandpiles and candidate parking functions are
// mirror images: p = max - c. The two maps below are mutually inverse, and c
// is recurrent exactly when max - c parks.
ParkingFunction recurrent_to_parking(const Grains& c);
Grains parking_to_recurrent(const ParkingFunction& p);  // rejects non-parking input

// (p_0..p_{m-1}, q_0+m..q_{n-1}+m); parks whenever both inputs do.
ParkingFunction concat_parking(const ParkingFunction& p, const ParkingFunction& q);

// Decomposition of a size-m principal avalanche on K_{n+1} into the added
// vertex, the other m-1 toppled vertices J (ascending index), a recurrent c1
// on K_m (c-values on J minus n-m+1, in J's order), and the untouched rest c2
// on K_{n-m+1}. All vertex fields use non-sink compacted indices.
struct PhiImage {
    int vertex;
    std::vector<int> toppled_others;
    Grains c1;
    Grains c2;
};

// Defined for avalanches of size m >= 1; rejects empty avalanches.
PhiImage phi(const Graph& g, const Grains& c, int vertex);

// Exact inverse: rebuilds (c, vertex) from the image. Validates that c1 and
// c2 are recurrent on their complete graphs.
std::pair<Grains, int> phi_inverse(const PhiImage& image);

}  // namespace avalanche
