#pragma once

#include "sigbranch/hwmodule.hpp"
#include "sigbranch/order.hpp"

namespace sigbranch {

// Enumerate all exponent vectors (indexed by display position) with
// sum_i p_i alpha_i equal to the target, given in simple-root coordinates.
// Budget caps the number of generated vectors. An optional mask restricts
// the support to the allowed display positions.
std::vector<IVec> enumerate_exponents(const RootSystem& rs, const IVec& target_simple,
                                      long budget,
                                      const std::vector<bool>* allowed_positions = nullptr);

struct EssentialEntry {
    Signature sig;
    ModuleVector vec;
};

class EssentialBasis {
public:
    IVec lambda;
    // per weight, sorted increasing in the order used to build the basis
    std::map<IVec, std::vector<EssentialEntry>> by_weight;
    long total = 0;

    // all signatures across weights, sorted by the order
    std::vector<const EssentialEntry*> sorted(const MonomialOrderSpec& order) const;
    bool contains(const Signature& s) const;
};

// Essential signatures of V(lambda): per weight space, visit candidates in
// increasing order and keep those whose vector is independent of the
// previously kept ones.
EssentialBasis essential_signatures(const HWModule& mod, const MonomialOrderSpec& order,
                                    long budget_per_weight = 2000000);

// least essential signature on which the functional is nonzero; the
// functional is given by its values on the essential basis vectors.
Signature signature_of_functional(const EssentialBasis& basis, const MonomialOrderSpec& order,
                                  const std::map<IVec, QVec>& values_by_weight);

}  // namespace sigbranch
