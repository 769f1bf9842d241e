#pragma once

#include "sigbranch/rootsystem.hpp"
#include "sigbranch/signature.hpp"

#include <map>
#include <memory>
#include <set>

namespace sigbranch {

struct ModuleVector {
    IVec mu;      // weight (fundamental coordinates); empty if the vector is zero
    QVec coords;  // coordinates over the weight-space basis

    bool is_zero() const { return mu.empty() || qvec_is_zero(coords); }
};

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact weight-graded realization of the irreducible module V(lambda) with
// the action of every root vector e_{+-alpha}. Built once, then immutable.
class HWModule {
public:
    static constexpr long kDefaultDimCap = 20000;

    // keep_ops: when nonempty, only the listed signed root operators are
    // retained after construction (plus whatever their derivation needs
    // transiently); empty keeps every root vector. Large modules use this to
    // stay within memory.
    static std::shared_ptr<const HWModule> build(RootSystemPtr rs, const IVec& lambda,
                                                 long dim_cap = kDefaultDimCap,
                                                 const std::vector<int>& keep_ops = {});

    const RootSystem& rs() const { return *rs_; }
    RootSystemPtr rs_ptr() const { return rs_; }
    const IVec& highest_weight() const { return lambda_; }
    long dim() const { return dim_; }

    bool has_weight(const IVec& mu) const { return dims_.count(mu) > 0; }
    int weight_dim(const IVec& mu) const;
    const std::map<IVec, int>& weight_dims() const { return dims_; }
    const QMat& gram(const IVec& mu) const;

    // Block of e_{alpha} (signed canonical root index) from weight space mu
    // into mu + alpha; zero-dimensional result means zero map.
    const QMat* block(int signed_root, const IVec& mu) const;

    // v(sigma): apply lowering operators right-to-left, highest display
    // position first.
    ModuleVector apply_signature(const Signature& sig) const;

    // apply a single root vector to a module vector
    ModuleVector apply_root(int signed_root, const ModuleVector& v) const;

    // operator identity checks: [e_i, f_j] = delta_ij h_i and Serre
    // relations for the simple generators; bracket table against the
    // structure constants when full == true.
    bool verify_operators(bool full = false) const;

    // test aid: a copy with each lowering operator scaled by the given
    // nonzero rationals (indexed by canonical root)
    std::shared_ptr<const HWModule> rescaled_lowering(const std::vector<Rat>& scale) const;

    // versioned text serialization for the module cache
    static std::string serialize(const HWModule& m);
    static std::shared_ptr<const HWModule> deserialize(RootSystemPtr rs, const std::string& text);
    static std::string cache_key(const RootSystem& rs, const IVec& lambda);

private:
    RootSystemPtr rs_;
    IVec lambda_;
    long dim_ = 0;
    std::set<int> kept_ops_;  // empty: every root operator is present
    std::map<IVec, int> dims_;
    std::map<IVec, QMat> grams_;
    // ops_[signed root shifted] : source weight -> matrix
    std::map<int, std::map<IVec, QMat>> ops_;

    friend class ModuleBuilder;
    HWModule() = default;
};

using HWModulePtr = std::shared_ptr<const HWModule>;

// Freudenthal's recursion; independent of the module construction.
Int freudenthal_multiplicity(const RootSystem& rs, const IVec& lambda, const IVec& mu);

}  // namespace sigbranch
