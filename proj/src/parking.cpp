#include "avalanche/parking.hpp"

#include <algorithm>
#include <stdexcept>

namespace avalanche {

bool is_parking(const ParkingFunction& p) {
    ParkingFunction sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] < 0 || sorted[i] > static_cast<std::int64_t>(i)) return false;
    return true;
}

ParkingFunction recurrent_to_parking(const Grains& c) {
    const std::int64_t n = static_cast<std::int64_t>(c.size());
    ParkingFunction p(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] > n - 1)
            throw std::invalid_argument("sandpile is not stable on the complete graph");
        p[i] = n - 1 - c[i];
    }
    return p;
}

Grains parking_to_recurrent(const ParkingFunction& p) {
    if (!is_parking(p)) throw std::invalid_argument("not a parking function");
    const std::int64_t n = static_cast<std::int64_t>(p.size());
    Grains c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = n - 1 - p[i];
    return c;
}

ParkingFunction concat_parking(const ParkingFunction& p, const ParkingFunction& q) {
    if (!is_parking(p) || !is_parking(q))
        throw std::invalid_argument("concatenation needs two parking functions");
    const std::int64_t m = static_cast<std::int64_t>(p.size());
    ParkingFunction out = p;
    out.reserve(p.size() + q.size());
    for (std::int64_t v : q) out.push_back(v + m);
    return out;
}

namespace {

void require_complete(const Graph& g) {
    for (int u = 0; u < g.n_vertices(); ++u)
        for (int v = u + 1; v < g.n_vertices(); ++v)
            if (g.weight(u, v) != 1)
                throw std::invalid_argument("the avalanche decomposition is defined on complete graphs");
}

}  // namespace

PhiImage phi(const Graph& g, const Grains& c, int vertex) {
    require_complete(g);
    const int n = g.n_nonsink();
    if (vertex < 0 || vertex >= n) throw std::invalid_argument("vertex index out of range");
    if (!is_recurrent(g, c)) throw std::invalid_argument("decomposition needs a recurrent sandpile");

    Grains bumped = c;
    bumped[vertex] += 1;
    StabilizationResult res = stabilize(g, std::move(bumped));
    const std::int64_t m = res.avalanche_size;
    if (m == 0) throw std::invalid_argument("decomposition is defined for avalanches of size >= 1");

    PhiImage img;
    img.vertex = vertex;
    for (int j = 0; j < n; ++j) {
        if (res.topplings[j] > 1)
            throw std::logic_error("a vertex toppled twice on a complete graph");
        if (res.topplings[j] == 1 && j != vertex) img.toppled_others.push_back(j);
    }
    const std::int64_t offset = n - m + 1;
    for (int j : img.toppled_others) img.c1.push_back(c[j] - offset);
    for (int j = 0; j < n; ++j)
        if (res.topplings[j] == 0) img.c2.push_back(c[j]);

    if (!is_recurrent(Graph::complete(static_cast<int>(m)), img.c1) ||
        !is_recurrent(Graph::complete(static_cast<int>(n - m + 1)), img.c2))
        throw std::logic_error("decomposition produced a non-recurrent part");
    return img;
}

std::pair<Grains, int> phi_inverse(const PhiImage& image) {
    const std::int64_t m = static_cast<std::int64_t>(image.toppled_others.size()) + 1;
    const std::int64_t n = m + static_cast<std::int64_t>(image.c2.size());
    if (static_cast<std::int64_t>(image.c1.size()) != m - 1)
        throw std::invalid_argument("c1 needs one entry per toppled vertex besides the first");
    if (image.vertex < 0 || image.vertex >= n) throw std::invalid_argument("vertex index out of range");
    std::vector<char> toppled(n, 0);
    toppled[image.vertex] = 1;
    for (int j : image.toppled_others) {
        if (j < 0 || j >= n || toppled[j])
            throw std::invalid_argument("toppled vertices must be distinct and exclude the first");
        toppled[j] = 1;
    }
    for (std::size_t i = 1; i < image.toppled_others.size(); ++i)
        if (image.toppled_others[i - 1] >= image.toppled_others[i])
            throw std::invalid_argument("toppled vertices must be in ascending order");
    if (!is_recurrent(Graph::complete(static_cast<int>(m)), image.c1))
        throw std::invalid_argument("c1 is not recurrent on its complete graph");
    if (!is_recurrent(Graph::complete(static_cast<int>(n - m + 1)), image.c2))
        throw std::invalid_argument("c2 is not recurrent on its complete graph");

    Grains c(n, -1);
    c[image.vertex] = n - 1;
    const std::int64_t offset = n - m + 1;
    for (std::size_t i = 0; i < image.toppled_others.size(); ++i)
        c[image.toppled_others[i]] = image.c1[i] + offset;
    std::size_t k = 0;
    for (std::int64_t j = 0; j < n; ++j)
        if (!toppled[j]) c[j] = image.c2[k++];
    return {c, image.vertex};
}

}  // namespace avalanche
