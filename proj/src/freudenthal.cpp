#include "sigbranch/hwmodule.hpp"

#include <stdexcept>

namespace sigbranch {

namespace {

// Weight multiplicities of V(lambda) by Freudenthal's recursion. Kept fully
// independent of the module builder so the two can cross-check each other.
class Freudenthal {
public:
    Freudenthal(const RootSystem& rs, const IVec& lambda) : rs_(rs), lambda_(lambda) {
        lr_amb_ = qvec_add(rs_.ambient_of_weight(lambda_), rs_.rho());
        top_norm_ = dot(lr_amb_, lr_amb_);
    }

    Int mult(IVec mu) {
        dominantize(mu);
        auto it = memo_.find(mu);
        if (it != memo_.end()) return it->second;
        Int r = compute(mu);
        memo_[mu] = r;
        return r;
    }

private:
    const RootSystem& rs_;
    IVec lambda_;
    QVec lr_amb_;
    Rat top_norm_;
    std::map<IVec, Int> memo_;

    void dominantize(IVec& mu) {
        int guard = 0;
        while (true) {
            int neg = -1;
            for (int i = 0; i < rs_.rank(); ++i)
                if (mu[i] < 0) { neg = i; break; }
            if (neg < 0) return;
            long c = mu[neg];
            const Root& b = rs_.root(rs_.simple_indices()[neg]);
            for (int j = 0; j < rs_.rank(); ++j) mu[j] -= c * b.fund[j];
            if (++guard > 1000000) throw std::logic_error("dominantize: no convergence");
        }
    }

    Int compute(const IVec& mu) {
        if (mu == lambda_) return 1;
        auto diff = rs_.simple_coords_of_fund(lambda_ - mu);
        if (!diff || !all_nonneg(*diff)) return 0;
        QVec mu_amb = rs_.ambient_of_weight(mu);
        QVec mr = qvec_add(mu_amb, rs_.rho());
        Rat denom = top_norm_ - dot(mr, mr);
        if (denom == 0) throw std::logic_error("freudenthal: degenerate denominator");
        Rat num = 0;
        for (const Root& a : rs_.positive_roots()) {
            IVec step = mu;
            QVec amb = mu_amb;
            while (true) {
                step = step + a.fund;
                amb = qvec_add(amb, a.ambient);
                auto d2 = rs_.simple_coords_of_fund(lambda_ - step);
                if (!d2 || !all_nonneg(*d2)) break;
                Int m = mult(step);
                if (m != 0) num += Rat(m) * dot(amb, a.ambient);
            }
        }
        Rat r = 2 * num / denom;
        r.canonicalize();
        if (r.get_den() != 1) throw std::logic_error("freudenthal: non-integral multiplicity");
        return r.get_num();
    }
};

}  // namespace

Int freudenthal_multiplicity(const RootSystem& rs, const IVec& lambda, const IVec& mu) {
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("freudenthal: lambda not dominant");
    Freudenthal f(rs, lambda);
    return f.mult(mu);
}

}  // namespace sigbranch
