#pragma once

#include <vector>

#include "avalanche/families.hpp"
#include "avalanche/polynomial.hpp"

namespace avalanche {

// Diagnostic log of the peeling steps: the component processed and the
// variable set divided out of it. Peeled sets at one level are pairwise
// disjoint by construction.
struct ReconstructionTrace {
    struct Step {
        MultiPoly component;
        std::vector<int> peeled_vars;
    };
    std::vector<Step> steps;
};

// Inverts tree_poly: recovers the unique labeled rooted tree whose avalanche
// polynomial is p. Splits p into disjoint-support components, divides each by
// the product of its support variables, subtracts 1, and recurses; the child
// vertex of a component is the one support variable missing from the
// remainder. Throws InvalidTreePolynomial when any step fails, making this a
// decision procedure rather than a partial inverse.
RootedTree reconstruct_tree(const MultiPoly& p, ReconstructionTrace* trace = nullptr);

// True iff reconstruction succeeds and round-trips to exactly p.
bool validate_tree_poly(const MultiPoly& p);

}  // namespace avalanche
