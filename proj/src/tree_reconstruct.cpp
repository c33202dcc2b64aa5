#include "avalanche/tree_reconstruct.hpp"

#include <algorithm>

#include "avalanche/errors.hpp"

namespace avalanche {

namespace {

// Exact division by the product of the given variables; any term missing one
// of them disqualifies the input.
MultiPoly divide_by_support(const MultiPoly& p, const std::vector<int>& vars) {
    MultiPoly q(p.n_vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents reduced = e;
        for (int v : vars) {
            if (reduced[v] == 0)
                throw InvalidTreePolynomial("a term is not divisible by the support product",
                                            p.to_string());
            --reduced[v];
        }
        q.add_term(reduced, c);
    }
    return q;
}

// Processes one disjoint-support component: identifies the child vertex it
// hangs from, assigns parents inside it, and returns that child.
int peel_component(const MultiPoly& comp, int parent_vertex, std::vector<int>& parents,
                   ReconstructionTrace* trace) {
    std::vector<int> supp = comp.support();
    if (supp.empty())
        throw InvalidTreePolynomial("a component has no variables", comp.to_string());
    if (trace) trace->steps.push_back({comp, supp});

    MultiPoly rest = divide_by_support(comp, supp);
    rest = rest - MultiPoly::constant(rest.n_vars(), 1);
    for (const auto& [e, c] : rest.terms()) {
        if (c < 0)
            throw InvalidTreePolynomial("a negative coefficient appeared after peeling",
                                        comp.to_string());
    }

    std::vector<int> inner_supp;
    std::vector<MultiPoly> inner;
    if (!rest.is_zero()) {
        inner = support_components(rest);
        for (const MultiPoly& part : inner) {
            std::vector<int> s = part.support();
            if (s.empty())
                throw InvalidTreePolynomial("a constant term survived peeling", comp.to_string());
            inner_supp.insert(inner_supp.end(), s.begin(), s.end());
        }
    }
    std::sort(inner_supp.begin(), inner_supp.end());
    std::vector<int> missing;
    std::set_difference(supp.begin(), supp.end(), inner_supp.begin(), inner_supp.end(),
                        std::back_inserter(missing));
    if (missing.size() != 1 || inner_supp.size() + 1 != supp.size())
        throw InvalidTreePolynomial("the component does not peel to a single branch vertex",
                                    comp.to_string());

    const int child = missing.front();  // variable index == vertex - 1
    parents[child] = parent_vertex;
    for (const MultiPoly& part : inner) peel_component(part, child + 1, parents, trace);
    return child;
}

}  // namespace

RootedTree reconstruct_tree(const MultiPoly& p, ReconstructionTrace* trace) {
    const int n = p.n_vars();
    if (p.is_zero()) {
        if (n != 0)
            throw InvalidTreePolynomial("the zero polynomial only describes the bare root",
                                        p.to_string());
        return RootedTree{{}};
    }

    std::vector<int> parents(n, -1);
    std::size_t covered = 0;
    for (const MultiPoly& comp : support_components(p)) {
        covered += comp.support().size();
        peel_component(comp, 0, parents, trace);
    }
    if (covered != static_cast<std::size_t>(n))
        throw InvalidTreePolynomial("some variables never occur", p.to_string());
    RootedTree t{parents};
    t.validate();
    return t;
}

bool validate_tree_poly(const MultiPoly& p) {
    try {
        return tree_poly(reconstruct_tree(p)) == p;
    } catch (const InvalidTreePolynomial&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace avalanche
