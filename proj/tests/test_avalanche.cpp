#include <random>
#include <sstream>

#include "doctest.h"

#include "avalanche/avalanche.hpp"
#include "test_util.hpp"

using namespace avalanche;

TEST_CASE("avalanche monomials on the triangle") {
    Graph g = Graph::cycle(3);
    CHECK(avalanche_monomial(g, {1, 0}, 0) == MultiPoly::monomial({1, 0}, 1));
    CHECK(avalanche_monomial(g, {0, 1}, 0) == MultiPoly::constant(2, 1));  // empty avalanche
    CHECK(avalanche_monomial(g, {1, 1}, 0) == MultiPoly::monomial({1, 1}, 1));
    CHECK(avalanche_monomial(g, {1, 1}, 1) == MultiPoly::monomial({1, 1}, 1));
    CHECK_THROWS_AS(avalanche_monomial(g, {0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(avalanche_monomial(g, {1, 0}, 5), std::invalid_argument);
}

TEST_CASE("avalanche monomial on the 6-cycle") {
    CHECK(avalanche_monomial(Graph::cycle(6), Grains(5, 1), 1) ==
          MultiPoly::monomial({1, 2, 2, 2, 1}, 1));
}

TEST_CASE("avalanche polynomial fixtures") {
    MultiPoly c3 = avalanche_polynomial(Graph::cycle(3));
    CHECK(c3.to_string() == "2*x1*x2 + x1 + x2 + 2");

    MultiPoly c2 = avalanche_polynomial(Graph::cycle(2));
    CHECK(c2.to_string() == "x1 + 1");

    MultiPoly k4 = avalanche_polynomial(Graph::complete(4));
    MultiPoly expect = elementary_symmetric(3, 3).scaled(9) + elementary_symmetric(3, 2).scaled(2) +
                       elementary_symmetric(3, 1).scaled(3) + MultiPoly::constant(3, 24);
    CHECK(k4 == expect);
}

TEST_CASE("evaluating at all ones counts avalanches") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = testutil::random_graph(rng, 6);
        MultiPoly a = avalanche_polynomial(g);
        CHECK(a.evaluate_ones() == g.spanning_tree_count() * g.n_nonsink());
    }
}

TEST_CASE("terms from sink-adjacent vertices are square-free") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_graph(rng, 6);
        for (const Grains& c : list_recurrents(g)) {
            for (int i = 0; i < g.n_nonsink(); ++i) {
                if (g.weight(g.vertex_at(i), g.sink()) == 0) continue;
                MultiPoly mono = avalanche_monomial(g, c, i);
                for (const auto& [exp, coef] : mono.terms())
                    for (int e : exp) CHECK(e <= 1);
            }
        }
    }
}

TEST_CASE("size distribution fixtures and consistency") {
    SizeDistribution c3 = size_distribution(Graph::cycle(3));
    CHECK(c3 == SizeDistribution{{0, 2}, {1, 2}, {2, 2}});

    SizeDistribution k4 = size_distribution(Graph::complete(4));
    CHECK(k4 == SizeDistribution{{0, 24}, {1, 9}, {2, 6}, {3, 9}});

    // the direct tally must match collapsing the polynomial
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_graph(rng, 6);
        SizeDistribution tally = size_distribution(g);
        UniPoly collapsed = univariate(avalanche_polynomial(g));
        BigInt total = 0;
        for (const auto& [size, count] : tally) {
            CHECK(count == collapsed.coeff(static_cast<std::size_t>(size)));
            total += count;
        }
        CHECK(total == g.spanning_tree_count() * g.n_nonsink());
    }
}

TEST_CASE("burst equals size when every vertex borders the sink") {
    for (int n = 3; n <= 6; ++n) {
        Graph k = Graph::complete(n);
        CHECK(burst_distribution(k) == univariate(avalanche_polynomial(k)));
    }
    for (int n = 3; n <= 6; ++n) {
        Graph w = Graph::wheel(n);
        CHECK(burst_distribution(w) == univariate(avalanche_polynomial(w)));
    }
}

TEST_CASE("burst distribution on a path keeps only the sink edge") {
    // s - v1 - v2: only v1 delivers grains to the sink
    Graph p3 = Graph::path(3);
    UniPoly b = burst_distribution(p3);
    BigInt total = 0;
    for (const BigInt& c : b.coeffs()) total += c;
    CHECK(total == p3.spanning_tree_count() * 2);
    CHECK(b.degree() <= 1);  // every avalanche sends at most one grain home
}

TEST_CASE("sharded scans agree with the sequential one") {
    for (int n : {5, 6}) {
        Graph k = Graph::complete(n);
        PolyOptions threaded;
        threaded.threads = 4;
        CHECK(avalanche_polynomial(k, threaded) == avalanche_polynomial(k));
    }
    Graph w = Graph::wheel(6);
    PolyOptions threaded;
    threaded.threads = 3;
    CHECK(avalanche_polynomial(w, threaded) == avalanche_polynomial(w));
}

TEST_CASE("record stream matches the polynomial") {
    Graph g = Graph::cycle(4);
    std::vector<AvalancheRecord> records;
    PolyOptions opts;
    opts.record_sink = [&records](const AvalancheRecord& r) { records.push_back(r); };
    MultiPoly a = avalanche_polynomial(g, opts);
    CHECK(records.size() == 4 * 3);
    MultiPoly rebuilt(3);
    for (const AvalancheRecord& r : records) {
        CHECK(is_recurrent(g, r.recurrent));
        std::int64_t size = 0;
        for (std::int64_t t : r.topplings) size += t;
        CHECK(size == r.size);
        Exponents e(r.topplings.begin(), r.topplings.end());
        rebuilt.add_term(e, 1);
    }
    CHECK(rebuilt == a);
}

TEST_CASE("grid experiment is deterministic and counts every drop") {
    CHECK(grid_experiment(5, 5, 0, 9).empty());

    auto h1 = grid_experiment(8, 8, 3000, 12345);
    auto h2 = grid_experiment(8, 8, 3000, 12345);
    CHECK(h1 == h2);

    std::uint64_t total = 0;
    for (const auto& [size, count] : h1) total += count;
    CHECK(total == 3000);

    auto h3 = grid_experiment(8, 8, 3000, 54321);
    CHECK(h1 != h3);  // different seed, different run
}
