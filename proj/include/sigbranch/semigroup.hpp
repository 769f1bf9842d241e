#pragma once

#include "sigbranch/branching.hpp"
#include "sigbranch/pairs.hpp"

#include <set>

namespace sigbranch {

struct GenEntry {
    Signature sig;
    IVec hw_sub;
};

struct GeneratorSet {
    std::vector<GenEntry> gens;

    bool contains(const Signature& s) const;
};

struct CertificateReport {
    enum Verdict { CertifiedOnSimplex, CounterexampleFound, BudgetExhausted };
    Verdict verdict = CertifiedOnSimplex;
    long degree_bound = 0;
    long points_tested = 0;
    std::vector<IVec> failures;        // all failing weights found
    std::vector<IVec> first_failures;  // the failing weights of minimal total degree
    std::string note;
};

struct DiscoveryResult {
    GeneratorSet gens;
    CertificateReport cert;
    std::vector<IVec> added;  // weights appended beyond the initial set
    long iterations = 0;
    bool cap_reached = false;
};

// Orchestrates slice computation and semigroup queries for one pair, with
// memoization of modules and slices.
class BranchingEngine {
public:
    explicit BranchingEngine(PairContext ctx, long dim_cap = HWModule::kDefaultDimCap,
                             long enum_budget = 2000000);

    const PairContext& ctx() const { return ctx_; }
    HWModulePtr module(const IVec& lambda);
    const BranchingSlice& slice(const IVec& lambda);

    // all elements of the generated subsemigroup with the given highest
    // weight (combination budget shared per query)
    std::set<IVec> elements_of_weight(const GeneratorSet& gens, const IVec& lambda,
                                      long combo_budget = 5000000) const;

    // sum of subalgebra dimensions over the elements
    Int predicted_dimension(const GeneratorSet& gens, const IVec& lambda) const;

    // restricted weight of an element signature
    IVec restricted_weight(const Signature& sig) const;

    CertificateReport certify(const GeneratorSet& gens, long degree_bound, int threads = 1) const;

    DiscoveryResult discover(const std::vector<IVec>& initial, long degree_bound,
                             long iteration_cap = 8);

    Int multiplicity(const GeneratorSet& gens, const IVec& lambda, const IVec& hw_sub) const;

    long dim_cap() const { return dim_cap_; }
    void set_dim_cap(long cap) { dim_cap_ = cap; }
    void set_threads(int t) { threads_ = t; }

private:
    PairContext ctx_;
    long dim_cap_;
    long enum_budget_;
    int threads_ = 1;
    std::map<IVec, HWModulePtr> modules_;
    std::map<IVec, BranchingSlice> slices_;
};

// dominant weights with total fundamental degree <= bound, in graded order
std::vector<IVec> dominant_simplex(int rank, long bound);

}  // namespace sigbranch
