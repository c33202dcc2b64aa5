#pragma once

#include <functional>
#include <vector>

#include "avalanche/graph.hpp"
#include "avalanche/polynomial.hpp"
#include "avalanche/sandpile.hpp"

namespace avalanche {

// Labeled rooted tree; vertex 0 is the root (the sink), parents[i] is the
// parent of vertex i+1.
struct RootedTree {
    std::vector<int> parents;

    int n_vertices() const { return static_cast<int>(parents.size()) + 1; }
    void validate() const;  // throws std::invalid_argument on cycles/bad indices
    std::vector<std::vector<int>> children() const;
    Graph to_graph() const;

    bool operator==(const RootedTree& o) const { return parents == o.parents; }
};

// Same underlying tree re-rooted at new_root; vertices are relabeled so the
// new root is 0 and the remaining original vertices keep ascending order.
RootedTree reroot_tree(const RootedTree& t, int new_root);

// Closed-form avalanche polynomial of a tree, from the structural recursion:
// subtrees hanging off a common root add, and grafting the root under a new
// one multiplies by the product of all variables and adds that product once.
MultiPoly tree_poly(const RootedTree& t);

// The (n+1)-cycle has exactly n+1 recurrent sandpiles: p = 0 is the maximal
// word 1^n, and 1 <= p <= n is the word with the single hole at v_p.
Grains cycle_recurrent(int n, int p);

// Avalanche monomial of the maximal sandpile on the (n+1)-cycle at v_i:
// prod_{j=1}^{m} x_j...x_{n-j+1} with m = min(i, n-i+1).
MultiPoly cycle_monomial_max(int n, int i);

// Closed-form avalanche polynomials, each verified against brute-force
// simulation in the test suites.
MultiPoly cycle_poly(int n_vertices);     // C_{n+1} including the double-edge C_2
MultiPoly complete_poly(int n_vertices);  // K_{n+1} as a mix of elementary symmetric polys
MultiPoly wheel_poly(int n_rim);          // W_n as a mix of cyclic polys, n >= 3

// f_1 = f_2 = 1 (standard indexing; every downstream identity is verified
// numerically against simulation). Defined for k >= 1.
BigInt fib(long k);
// l_0 = 2, l_1 = 1. Defined for k >= 0.
BigInt lucas(long k);

// All labeled trees on n_vertices with vertex 0 as root, one callback per
// tree (n^{n-2} of them, enumerated through their Prufer sequences).
void for_each_labeled_tree(int n_vertices, const std::function<void(const RootedTree&)>& fn);

// Decode a Prufer sequence over {0..n-1} (length n-2) into the tree rooted
// at vertex 0.
RootedTree tree_from_prufer(const std::vector<int>& seq, int n_vertices);

}  // namespace avalanche
