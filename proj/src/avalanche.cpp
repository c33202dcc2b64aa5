#include "avalanche/avalanche.hpp"

#include <future>
#include <stdexcept>
#include <thread>

#include "avalanche/rng.hpp"

namespace avalanche {

namespace {

Exponents to_exponents(const Grains& topplings) {
    Exponents e(topplings.size());
    for (std::size_t i = 0; i < topplings.size(); ++i) e[i] = static_cast<int>(topplings[i]);
    return e;
}

// Adds the n monomials of one recurrent sandpile to acc.
void accumulate_avalanches(const Graph& g, const Grains& c, MultiPoly& acc,
                           const std::function<void(const AvalancheRecord&)>& sink) {
    Grains bumped = c;
    for (int v = 0; v < g.n_nonsink(); ++v) {
        bumped[v] += 1;
        StabilizationResult res = stabilize(g, bumped);
        bumped[v] -= 1;
        acc.add_term(to_exponents(res.topplings), 1);
        if (sink) sink({c, v, res.topplings, res.avalanche_size, res.burst});
    }
}

// Recurrents whose grain vector starts with the given first coordinate, in
// lexicographic order (used to shard the scan across threads).
MultiPoly poly_for_first_value(const Graph& g, std::int64_t first) {
    const int n = g.n_nonsink();
    MultiPoly acc(n);
    Grains c(n, 0);
    c[0] = first;
    while (true) {
        if (is_recurrent(g, c)) accumulate_avalanches(g, c, acc, nullptr);
        int i = n - 1;
        while (i >= 1) {
            if (++c[i] < g.degree(g.vertex_at(i))) break;
            c[i] = 0;
            --i;
        }
        if (i < 1) break;
    }
    return acc;
}

}  // namespace

MultiPoly avalanche_monomial(const Graph& g, const Grains& recurrent, int vertex) {
    if (vertex < 0 || vertex >= g.n_nonsink())
        throw std::invalid_argument("vertex index out of range");
    if (!is_recurrent(g, recurrent))
        throw std::invalid_argument("avalanche monomials are defined for recurrent sandpiles");
    Grains bumped = recurrent;
    bumped[vertex] += 1;
    return MultiPoly::monomial(to_exponents(stabilize(g, std::move(bumped)).topplings), 1);
}

MultiPoly avalanche_polynomial(const Graph& g, const PolyOptions& options) {
    const int n = g.n_nonsink();
    int threads = options.threads;
    if (options.record_sink || n == 0) threads = 1;

    if (threads <= 1) {
        RecurrentEnumerator en(g, options.limit);
        MultiPoly acc(n);
        while (auto c = en.next()) accumulate_avalanches(g, *c, acc, options.record_sink);
        return acc;
    }

    std::uint64_t states = stable_state_count(g, options.limit);
    if (states > options.limit) throw LimitExceeded(states, options.limit);

    const std::int64_t shards = g.degree(g.vertex_at(0));
    std::int64_t next_shard = 0;
    MultiPoly acc(n);
    int workers = std::min<std::int64_t>(threads, shards);
    // simple bounded fan-out: at most `workers` shards in flight
    std::vector<std::future<MultiPoly>> inflight;
    while (next_shard < shards || !inflight.empty()) {
        while (static_cast<int>(inflight.size()) < workers && next_shard < shards) {
            std::int64_t first = next_shard++;
            inflight.push_back(std::async(std::launch::async,
                                          [&g, first] { return poly_for_first_value(g, first); }));
        }
        acc += inflight.front().get();
        inflight.erase(inflight.begin());
    }
    return acc;
}

SizeDistribution size_distribution(const Graph& g, std::uint64_t limit) {
    SizeDistribution dist;
    RecurrentEnumerator en(g, limit);
    while (auto c = en.next()) {
        Grains bumped = *c;
        for (int v = 0; v < g.n_nonsink(); ++v) {
            bumped[v] += 1;
            dist[stabilize(g, bumped).avalanche_size] += 1;
            bumped[v] -= 1;
        }
    }
    return dist;
}

UniPoly burst_distribution(const Graph& g, const PolyOptions& options) {
    return burst_specialize(avalanche_polynomial(g, options), g);
}

std::map<std::int64_t, std::uint64_t> grid_experiment(int rows, int cols, std::uint64_t drops,
                                                      std::uint64_t seed) {
    Graph g = Graph::grid(rows, cols);
    Grains c = max_sandpile(g);
    SplitMix64 rng(seed);
    const std::uint64_t cells = static_cast<std::uint64_t>(rows) * cols;
    std::map<std::int64_t, std::uint64_t> histogram;
    for (std::uint64_t d = 0; d < drops; ++d) {
        c[static_cast<std::size_t>(rng.bounded(cells))] += 1;
        StabilizationResult res = stabilize(g, std::move(c));
        histogram[res.avalanche_size] += 1;
        c = std::move(res.stable);
    }
    return histogram;
}

}  // namespace avalanche
