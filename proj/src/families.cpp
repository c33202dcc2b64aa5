#include "avalanche/families.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace avalanche {

void RootedTree::validate() const {
    const int n = n_vertices();
    for (int i = 1; i < n; ++i) {
        int p = parents[i - 1];
        if (p < 0 || p >= n) throw std::invalid_argument("parent index out of range");
        if (p == i) throw std::invalid_argument("vertex cannot be its own parent");
    }
    // every chain must reach the root without revisiting a vertex
    for (int i = 1; i < n; ++i) {
        int v = i;
        int steps = 0;
        while (v != 0) {
            v = parents[v - 1];
            if (++steps > n) throw std::invalid_argument("parent array contains a cycle");
        }
    }
}

std::vector<std::vector<int>> RootedTree::children() const {
    std::vector<std::vector<int>> ch(n_vertices());
    for (int i = 1; i < n_vertices(); ++i) ch[parents[i - 1]].push_back(i);
    return ch;
}

Graph RootedTree::to_graph() const {
    validate();
    return Graph::tree_from_parents(parents);
}

RootedTree reroot_tree(const RootedTree& t, int new_root) {
    t.validate();
    const int n = t.n_vertices();
    if (new_root < 0 || new_root >= n) throw std::invalid_argument("root index out of range");
    if (new_root == 0) return t;
    std::vector<std::vector<int>> adj(n);
    for (int i = 1; i < n; ++i) {
        adj[i].push_back(t.parents[i - 1]);
        adj[t.parents[i - 1]].push_back(i);
    }
    // relabel: new root becomes 0, remaining old vertices keep ascending order
    std::vector<int> new_id(n, -1);
    new_id[new_root] = 0;
    int next = 1;
    for (int v = 0; v < n; ++v)
        if (v != new_root) new_id[v] = next++;
    std::vector<int> parents(n - 1, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(new_root);
    seen[new_root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v]) {
            if (seen[u]) continue;
            seen[u] = 1;
            parents[new_id[u] - 1] = new_id[v];
            q.push(u);
        }
    }
    return RootedTree{parents};
}

namespace {

// Exponent mask of all vertices in the subtree rooted at v (vertex k maps to
// variable k-1).
void collect_subtree(const std::vector<std::vector<int>>& ch, int v, Exponents& mask) {
    if (v != 0) mask[v - 1] = 1;
    for (int c : ch[v]) collect_subtree(ch, c, mask);
}

MultiPoly subtree_poly(const std::vector<std::vector<int>>& ch, int v, int n_vars) {
    MultiPoly acc(n_vars);
    for (int c : ch[v]) {
        Exponents mask(n_vars, 0);
        collect_subtree(ch, c, mask);
        MultiPoly inner = subtree_poly(ch, c, n_vars);
        inner.add_term(Exponents(n_vars, 0), 1);
        acc += MultiPoly::monomial(mask, 1) * inner;
    }
    return acc;
}

}  // namespace

MultiPoly tree_poly(const RootedTree& t) {
    t.validate();
    return subtree_poly(t.children(), 0, t.n_vertices() - 1);
}

Grains cycle_recurrent(int n, int p) {
    if (n < 1) throw std::invalid_argument("cycle recurrent needs n >= 1");
    if (p < 0 || p > n) throw std::invalid_argument("position out of range");
    Grains c(n, 1);
    if (p >= 1) c[p - 1] = 0;
    return c;
}

MultiPoly cycle_monomial_max(int n, int i) {
    if (n < 1) throw std::invalid_argument("cycle monomial needs n >= 1");
    if (i < 1 || i > n) throw std::invalid_argument("vertex index out of range");
    const int m = std::min(i, n - i + 1);
    Exponents e(n);
    for (int t = 1; t <= n; ++t) e[t - 1] = std::min({t, n + 1 - t, m});
    return MultiPoly::monomial(e, 1);
}

MultiPoly cycle_poly(int n_vertices) {
    if (n_vertices < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
    const int n = n_vertices - 1;
    MultiPoly acc(n);

    // avalanches on the maximal sandpile
    for (int i = 1; i <= n; ++i) acc += cycle_monomial_max(n, i);

    // a missing grain at v_p splits the cycle: left of the gap the avalanche
    // behaves like a (p-1)-cycle on x_1..x_{p-1} ...
    for (int p = 2; p <= n; ++p) {
        const int q = p - 1;
        for (int i = 1; i <= q; ++i) {
            const int m = std::min(i, q - i + 1);
            Exponents e(n, 0);
            for (int t = 1; t <= q; ++t) e[t - 1] = std::min({t, q + 1 - t, m});
            acc.add_term(e, 1);
        }
    }
    // ... and right of the gap like an (n-p)-cycle shifted onto x_{p+1}..x_n
    for (int p = 1; p <= n - 1; ++p) {
        const int q = n - p;
        for (int i = 1; i <= q; ++i) {
            const int m = std::min(i, q - i + 1);
            Exponents e(n, 0);
            for (int t = 1; t <= q; ++t) e[p + t - 1] = std::min({t, q + 1 - t, m});
            acc.add_term(e, 1);
        }
    }
    // adding the grain back at the gap is already stable
    acc.add_term(Exponents(n, 0), n);
    return acc;
}

MultiPoly complete_poly(int n_vertices) {
    if (n_vertices < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
    const long n = n_vertices - 1;
    MultiPoly acc(static_cast<int>(n));

    BigInt empty_count = n >= 2 ? BigInt(n) * (n - 1) * pow_or_one(n + 1, n - 2) : BigInt(0);
    acc += MultiPoly::constant(static_cast<int>(n), empty_count);

    for (long m = 1; m <= n; ++m) {
        BigInt choose = binomial(n, m);
        BigInt lambda = choose * pow_or_one(m, m - 1) * pow_or_one(n - m + 1, n - m - 1);
        // guard against transcription slips: the per-monomial coefficient
        // must come out integral
        BigInt coef = div_exact(lambda, choose);
        acc += elementary_symmetric(static_cast<int>(n), static_cast<int>(m)).scaled(coef);
    }
    return acc;
}

MultiPoly wheel_poly(int n_rim) {
    if (n_rim < 3) throw std::invalid_argument("wheel needs at least 3 rim vertices");
    const long n = n_rim;
    MultiPoly acc = cyclic_poly(n_rim, n_rim).scaled(BigInt(n) * n);
    for (long m = 1; m <= n - 1; ++m)
        acc += cyclic_poly(n_rim, static_cast<int>(m)).scaled(BigInt(m) * fib(2 * (n - m)));
    acc += MultiPoly::constant(n_rim, BigInt(2) * n * (fib(2 * n - 1) - 1));
    return acc;
}

BigInt fib(long k) {
    if (k < 1) throw std::invalid_argument("fibonacci index must be >= 1");
    BigInt a = 1, b = 1;  // f_1, f_2
    for (long i = 1; i < k; ++i) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

BigInt lucas(long k) {
    if (k < 0) throw std::invalid_argument("lucas index must be >= 0");
    BigInt a = 2, b = 1;  // l_0, l_1
    for (long i = 0; i < k; ++i) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

RootedTree tree_from_prufer(const std::vector<int>& seq, int n_vertices) {
    const int n = n_vertices;
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw std::invalid_argument("sequence length must be n - 2");
    if (n == 1) return RootedTree{{}};

    std::vector<int> degree(n, 1);
    for (int a : seq) {
        if (a < 0 || a >= n) throw std::invalid_argument("sequence entry out of range");
        ++degree[a];
    }
    std::vector<std::vector<int>> adj(n);
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    for (int a : seq) {
        int leaf = leaves.top();
        leaves.pop();
        adj[leaf].push_back(a);
        adj[a].push_back(leaf);
        if (--degree[a] == 1) leaves.push(a);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    adj[u].push_back(v);
    adj[v].push_back(u);

    std::vector<int> parents(n - 1, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x]) {
            if (seen[y]) continue;
            seen[y] = 1;
            parents[y - 1] = x;
            q.push(y);
        }
    }
    return RootedTree{parents};
}

void for_each_labeled_tree(int n_vertices, const std::function<void(const RootedTree&)>& fn) {
    if (n_vertices < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (n_vertices == 1) {
        fn(RootedTree{{}});
        return;
    }
    if (n_vertices == 2) {
        fn(RootedTree{{0}});
        return;
    }
    std::vector<int> seq(n_vertices - 2, 0);
    while (true) {
        fn(tree_from_prufer(seq, n_vertices));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n_vertices - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

}  // namespace avalanche
