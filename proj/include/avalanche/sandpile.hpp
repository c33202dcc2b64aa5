#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avalanche/errors.hpp"
#include "avalanche/graph.hpp"

namespace avalanche {

// Grain counts on the non-sink vertices, in compacted vertex order.
using Grains = std::vector<std::int64_t>;

struct StabilizationResult {
    Grains stable;
    Grains topplings;             // times each non-sink vertex toppled
    std::int64_t avalanche_size;  // sum of topplings
    std::int64_t burst;           // grains delivered to the sink
};

bool is_stable(const Graph& g, const Grains& c);

// Repeated toppling until stable. The result is independent of topple order;
// the worklist topples each popped vertex as many whole times as currently
// possible, which is a pure speedup.
StabilizationResult stabilize(const Graph& g, Grains c);

// Pointwise sum, then stabilize.
Grains stable_add(const Graph& g, const Grains& a, const Grains& b);

Grains max_sandpile(const Graph& g);

// One grain per sink-incident edge at each sink neighbor ("firing the sink").
Grains sink_firing(const Graph& g);

// Burning test: c is recurrent iff stabilizing c plus the sink firing returns
// c again, in which case every vertex topples exactly once. Rejects unstable
// input rather than silently stabilizing it.
bool is_recurrent(const Graph& g, const Grains& c);

inline constexpr std::uint64_t kDefaultStateLimit = 100'000'000;

// Number of stable states (product of degrees), capped at limit + 1.
std::uint64_t stable_state_count(const Graph& g, std::uint64_t cap);

// Streams the recurrent sandpiles in lexicographic grain-vector order by
// scanning all stable states through the burning filter. Construction throws
// LimitExceeded when the stable state space is larger than `limit`.
class RecurrentEnumerator {
public:
    explicit RecurrentEnumerator(const Graph& g, std::uint64_t limit = kDefaultStateLimit);

    std::optional<Grains> next();

private:
    const Graph& g_;
    Grains current_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<Grains> list_recurrents(const Graph& g, std::uint64_t limit = kDefaultStateLimit);
std::uint64_t count_recurrents(const Graph& g, std::uint64_t limit = kDefaultStateLimit);

// Parses "1,0,1,1" as well as the run-length shorthand "1^3 0 1^5" and plain
// digit strings like "11011" (whitespace-separated tokens).
Grains parse_grains(const std::string& text);
std::string grains_to_string(const Grains& c);

}  // namespace avalanche
