#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "avalanche/bigint.hpp"
#include "avalanche/int_matrix.hpp"

namespace avalanche {

// Loop-free connected undirected multigraph with a designated sink vertex.
// Vertices are indexed 0..n-1; edge multiplicities live in a dense symmetric
// weight matrix (graphs here are small). Immutable after construction, so a
// single instance may be shared freely across threads.
class Graph {
public:
    struct Edge {
        int u;
        int v;
        std::int64_t weight;
    };

    Graph(int n_vertices, int sink, const std::vector<Edge>& edges);

    int n_vertices() const { return n_; }
    int sink() const { return sink_; }
    int n_nonsink() const { return n_ - 1; }

    std::int64_t weight(int u, int v) const { return w_[std::size_t(u) * n_ + v]; }
    std::int64_t degree(int v) const { return degree_[v]; }
    const std::vector<std::pair<int, std::int64_t>>& neighbors(int v) const { return adj_[v]; }

    // Non-sink vertices in index order, with the sink removed and the
    // remaining indices compacted (grain vectors and polynomial variables
    // are indexed by this order).
    int nonsink_index(int v) const { return v < sink_ ? v : v - 1; }
    int vertex_at(int nonsink_idx) const { return nonsink_idx < sink_ ? nonsink_idx : nonsink_idx + 1; }

    // Display labels ("s", "v1", ...) follow the usual conventions for each
    // family; wheel rims are v0..v{n-1}.
    const std::string& label(int v) const { return labels_[v]; }
    int vertex_by_label(const std::string& lbl) const;  // -1 if unknown
    std::vector<std::string> variable_names() const;    // one per non-sink slot

    IntMatrix laplacian() const;
    IntMatrix reduced_laplacian() const;
    BigInt spanning_tree_count() const;

    // {"vertices": n, "sink": s, "edges": [[u,v,w],...]} with u < v, sorted.
    nlohmann::ordered_json to_json() const;
    static Graph from_json(const nlohmann::json& j);

    static Graph path(int n_vertices);      // sink at one end
    static Graph cycle(int n_vertices);     // n = 2 is the double edge
    static Graph complete(int n_vertices);
    static Graph wheel(int n_rim);          // hub is the sink
    static Graph fan(int n_path);           // path plus dominating sink
    static Graph grid(int rows, int cols);  // boundary leaks wired to one sink
    static Graph tree_from_parents(const std::vector<int>& parents);

    bool same_structure(const Graph& o) const { return n_ == o.n_ && sink_ == o.sink_ && w_ == o.w_; }

private:
    void finalize();

    int n_ = 1;
    int sink_ = 0;
    std::vector<std::int64_t> w_;
    std::vector<std::int64_t> degree_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
    std::vector<std::string> labels_;
    int var_base_ = 1;  // wheels number variables from 0
};

struct FamilyParams {
    long n = -1;
    long rows = -1;
    long cols = -1;
    std::vector<int> parents;
};

// kind: path | cycle | complete | wheel | fan | grid | tree-from-parents
Graph make_family(const std::string& kind, const FamilyParams& params);

}  // namespace avalanche
