#pragma once

#include "sigbranch/semigroup.hpp"

namespace sigbranch {

// A binomial relation between generator multiplicity vectors: the two sides
// have equal signature sums. In a reduced basis the supports are disjoint.
struct Relation {
    IVec u, w;
};

struct SemigroupPresentation {
    std::vector<GenEntry> gens;
    std::vector<Relation> relations;
    bool reduced_groebner = true;
};

// Reduced Groebner basis of the lattice ideal of the generator signatures
// under the lexicographic order x_1 > x_2 > ... (generator order as given).
// Computed by binomial Buchberger with saturation by the product of the
// variables (one auxiliary variable, eliminated afterwards). Every emitted
// relation is verified as an exact signature identity.
SemigroupPresentation compute_relations(const RootSystem& g, const std::vector<GenEntry>& gens,
                                        long pair_budget = 2000000);

}  // namespace sigbranch
