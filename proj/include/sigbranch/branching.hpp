#pragma once

#include "sigbranch/embedding.hpp"
#include "sigbranch/essential.hpp"

namespace sigbranch {

// One lowest-vector functional of the restricted module: its subalgebra
// highest weight, its least-term signature, and its values on the module
// basis (per ambient weight).
struct SliceEntry {
    Signature sig;
    IVec hw_sub;
    std::map<IVec, QVec> functional;
};

struct BranchingSlice {
    IVec lambda;
    std::vector<SliceEntry> entries;

    // multiplicity of a given subalgebra highest weight
    long multiplicity(const IVec& hw_sub) const;
};

// Basis of the functionals on V(lambda) annihilating every f'_i V(lambda),
// echelonized against the order so the least-term signatures are pairwise
// distinct. This is branching_slice without the derived bookkeeping.
std::vector<SliceEntry> lowest_invariant_functionals(const HWModule& mod, const Embedding& emb,
                                                     const MonomialOrderSpec& order,
                                                     long budget = 2000000);

BranchingSlice branching_slice(const HWModule& mod, const Embedding& emb,
                               const MonomialOrderSpec& order, long budget = 2000000);

// exponents on subalgebra roots zeroed; defined for regular embeddings
Signature strip_subalgebra_exponents(const RootSystem& rs, const Embedding& emb,
                                     const Signature& sig);

// true when every subalgebra root precedes every complementary root in the
// display ordering
bool subalgebra_roots_precede(const RootSystem& rs, const Embedding& emb);

struct CompatibilityReport {
    bool roots_precede = false;
    bool order_respects_strip = false;  // sampling verdict
    long pairs_tested = 0;
    bool exhaustive = false;
    bool compatible() const { return roots_precede && order_respects_strip; }
};

CompatibilityReport check_order_compatibility(const RootSystem& rs, const Embedding& emb,
                                              const MonomialOrderSpec& order,
                                              long exhaustive_degree = 3, long samples = 2000);

// signatures of the essential basis fixed under stripping; rejects
// incompatible orderings
std::vector<Signature> strip_filter_signatures(const EssentialBasis& basis, const Embedding& emb,
                                               const MonomialOrderSpec& order);

// independent oracle: number of subalgebra highest vectors of the given
// subalgebra weight inside the module
Int highest_vector_count(const HWModule& mod, const Embedding& emb, const IVec& hw_sub);

}  // namespace sigbranch
