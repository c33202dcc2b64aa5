#include "avalanche/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace avalanche {

Graph::Graph(int n_vertices, int sink, const std::vector<Edge>& edges) {
    if (n_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (sink < 0 || sink >= n_vertices) throw std::invalid_argument("sink index out of range");
    n_ = n_vertices;
    sink_ = sink;
    w_.assign(std::size_t(n_) * n_, 0);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
        if (e.weight < 0) throw std::invalid_argument("edge weight must be non-negative");
        w_[std::size_t(e.u) * n_ + e.v] += e.weight;
        w_[std::size_t(e.v) * n_ + e.u] += e.weight;
    }
    finalize();
}

void Graph::finalize() {
    degree_.assign(n_, 0);
    adj_.assign(n_, {});
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            std::int64_t w = weight(u, v);
            if (w > 0) {
                degree_[u] += w;
                adj_[u].push_back({v, w});
            }
        }
    }
    if (n_ > 1) {
        for (int v = 0; v < n_; ++v)
            if (degree_[v] == 0) throw std::invalid_argument("graph has an isolated vertex");
        std::vector<char> seen(n_, 0);
        std::queue<int> q;
        q.push(sink_);
        seen[sink_] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [u, w] : adj_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    q.push(u);
                }
            }
        }
        if (reached != n_) throw std::invalid_argument("graph must be connected");
    }
    if (labels_.empty()) {
        labels_.assign(n_, {});
        labels_[sink_] = "s";
        for (int i = 0; i < n_ - 1; ++i) labels_[vertex_at(i)] = "v" + std::to_string(i + 1);
    }
}

int Graph::vertex_by_label(const std::string& lbl) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == lbl) return v;
    return -1;
}

std::vector<std::string> Graph::variable_names() const {
    std::vector<std::string> names(n_ - 1);
    for (int i = 0; i < n_ - 1; ++i) names[i] = "x" + std::to_string(i + var_base_);
    return names;
}

IntMatrix Graph::laplacian() const {
    IntMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) m.at(i, j) = i == j ? degree_[i] : -weight(i, j);
    }
    return m;
}

IntMatrix Graph::reduced_laplacian() const {
    IntMatrix m(n_ - 1, n_ - 1);
    for (int i = 0; i < n_ - 1; ++i) {
        int u = vertex_at(i);
        for (int j = 0; j < n_ - 1; ++j) {
            int v = vertex_at(j);
            m.at(i, j) = i == j ? degree_[u] : -weight(u, v);
        }
    }
    return m;
}

BigInt Graph::spanning_tree_count() const { return reduced_laplacian().determinant(); }

nlohmann::ordered_json Graph::to_json() const {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (weight(u, v) > 0) edges.push_back({u, v, weight(u, v)});
        }
    }
    return {{"vertices", n_}, {"sink", sink_}, {"edges", edges}};
}

Graph Graph::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("sink") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs vertices, sink and edges");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge must be [u, v, weight]");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<std::int64_t>()});
    }
    return Graph(j.at("vertices").get<int>(), j.at("sink").get<int>(), edges);
}

Graph Graph::path(int n_vertices) {
    if (n_vertices < 2) throw std::invalid_argument("path needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n_vertices; ++i) edges.push_back({i, i + 1, 1});
    return Graph(n_vertices, 0, edges);
}

Graph Graph::cycle(int n_vertices) {
    if (n_vertices < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
    std::vector<Edge> edges;
    if (n_vertices == 2) {
        edges.push_back({0, 1, 2});  // two vertices joined by a double edge
    } else {
        for (int i = 0; i < n_vertices; ++i) edges.push_back({i, (i + 1) % n_vertices, 1});
    }
    return Graph(n_vertices, 0, edges);
}

Graph Graph::complete(int n_vertices) {
    if (n_vertices < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n_vertices; ++u)
        for (int v = u + 1; v < n_vertices; ++v) edges.push_back({u, v, 1});
    return Graph(n_vertices, 0, edges);
}

Graph Graph::wheel(int n_rim) {
    if (n_rim < 3) throw std::invalid_argument("wheel needs at least 3 rim vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n_rim; ++i) {
        edges.push_back({i, (i + 1) % n_rim, 1});
        edges.push_back({i, n_rim, 1});  // spoke to the hub
    }
    Graph g(n_rim + 1, n_rim, edges);
    for (int i = 0; i < n_rim; ++i) g.labels_[i] = "v" + std::to_string(i);
    g.labels_[n_rim] = "s";
    g.var_base_ = 0;
    return g;
}

Graph Graph::fan(int n_path) {
    if (n_path < 2) throw std::invalid_argument("fan needs a path of at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n_path; ++i) edges.push_back({i, i + 1, 1});
    for (int i = 0; i < n_path; ++i) edges.push_back({i, n_path, 1});
    return Graph(n_path + 1, n_path, edges);
}

Graph Graph::grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
    const int cells = rows * cols;
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1});
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1});
            // leaked grains go to the sink, so every cell has degree 4
            int in_grid = (r > 0) + (r + 1 < rows) + (c > 0) + (c + 1 < cols);
            if (in_grid < 4) edges.push_back({id(r, c), cells, 4 - in_grid});
        }
    }
    Graph g(cells + 1, cells, edges);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            g.labels_[id(r, c)] = "c" + std::to_string(r) + "," + std::to_string(c);
    g.labels_[cells] = "s";
    return g;
}

Graph Graph::tree_from_parents(const std::vector<int>& parents) {
    const int n = static_cast<int>(parents.size()) + 1;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        if (parents[i - 1] < 0 || parents[i - 1] >= n)
            throw std::invalid_argument("parent index out of range");
        edges.push_back({i, parents[i - 1], 1});
    }
    return Graph(n, 0, edges);  // connectivity check rejects cyclic parent arrays
}

Graph make_family(const std::string& kind, const FamilyParams& p) {
    if (kind == "path") return Graph::path(static_cast<int>(p.n));
    if (kind == "cycle") return Graph::cycle(static_cast<int>(p.n));
    if (kind == "complete") return Graph::complete(static_cast<int>(p.n));
    if (kind == "wheel") return Graph::wheel(static_cast<int>(p.n));
    if (kind == "fan") return Graph::fan(static_cast<int>(p.n));
    if (kind == "grid") return Graph::grid(static_cast<int>(p.rows), static_cast<int>(p.cols));
    if (kind == "tree-from-parents") return Graph::tree_from_parents(p.parents);
    throw std::invalid_argument("unknown family kind: " + kind);
}

}  // namespace avalanche
