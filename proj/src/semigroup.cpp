#include "sigbranch/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>

namespace sigbranch {

bool GeneratorSet::contains(const Signature& s) const {
    for (const GenEntry& g : gens)
        if (g.sig == s) return true;
    return false;
}

BranchingEngine::BranchingEngine(PairContext ctx, long dim_cap, long enum_budget)
    : ctx_(std::move(ctx)), dim_cap_(dim_cap), enum_budget_(enum_budget) {}

HWModulePtr BranchingEngine::module(const IVec& lambda) {
    auto it = modules_.find(lambda);
    if (it != modules_.end()) return it->second;
    // very large modules retain only the operators the slice computation
    // uses: the lowering images of the embedding and the complementary
    // lowering root vectors
    std::vector<int> keep;
    if (ctx_.g->weyl_dim(lambda) > 4000) {
        std::set<int> s;
        for (const LieElt& elt : ctx_.emb.f_img)
            for (auto& [k, c] : elt.root_part) s.insert(k);
        bool mask = ctx_.emb.regular && subalgebra_roots_precede(*ctx_.g, ctx_.emb);
        for (int k = 1; k <= ctx_.g->num_positive(); ++k) {
            if (mask && ctx_.emb.is_sub_root(k)) continue;
            s.insert(-k);
        }
        keep.assign(s.begin(), s.end());
    }
    auto m = HWModule::build(ctx_.g, lambda, dim_cap_, keep);
    modules_[lambda] = m;
    return m;
}

const BranchingSlice& BranchingEngine::slice(const IVec& lambda) {
    auto it = slices_.find(lambda);
    if (it != slices_.end()) return it->second;
    auto m = module(lambda);
    slices_[lambda] = branching_slice(*m, ctx_.emb, ctx_.order, enum_budget_);
    return slices_.at(lambda);
}

std::set<IVec> BranchingEngine::elements_of_weight(const GeneratorSet& gens, const IVec& lambda,
                                                   long combo_budget) const {
    if (!ctx_.g->is_dominant(lambda)) throw std::invalid_argument("elements_of_weight: not dominant");
    std::set<IVec> out;
    int m = int(gens.gens.size());
    int N = ctx_.g->num_positive();
    IVec p(N, 0);
    long visited = 0;
    std::function<void(int, IVec&)> rec = [&](int i, IVec& rem) {
        if (++visited > combo_budget) throw budget_exceeded("semigroup combination budget exceeded");
        if (is_zero(rem)) {
            out.insert(p);
            // deeper combinations would add nonzero dominant weights
        }
        if (i == m) return;
        const GenEntry& g = gens.gens[i];
        // max count of this generator
        long maxc = -1;
        for (size_t c = 0; c < rem.size(); ++c)
            if (g.sig.hw[c] > 0) {
                long q = rem[c] / g.sig.hw[c];
                maxc = maxc < 0 ? q : std::min(maxc, q);
            }
        if (maxc < 0) maxc = 0;  // zero highest weight only for the zero signature
        for (long c = 0; c <= maxc; ++c) {
            rec(i + 1, rem);
            rem -= g.sig.hw;
            p += g.sig.p;
        }
        for (long c = 0; c <= maxc; ++c) {
            rem += g.sig.hw;
            p -= g.sig.p;
        }
    };
    IVec rem = lambda;
    rec(0, rem);
    return out;
}

IVec BranchingEngine::restricted_weight(const Signature& sig) const {
    IVec w = sig.hw;
    for (int pos = 0; pos < ctx_.g->num_positive(); ++pos) {
        if (sig.p[pos] == 0) continue;
        const Root& r = ctx_.g->root(ctx_.g->canonical_of_display(pos));
        w -= sig.p[pos] * r.fund;
    }
    return ctx_.emb.restrict_weight(w);
}

Int BranchingEngine::predicted_dimension(const GeneratorSet& gens, const IVec& lambda) const {
    std::set<IVec> elems = elements_of_weight(gens, lambda);
    Int total = 0;
    for (const IVec& p : elems) {
        Signature s(lambda, p);
        total += ctx_.emb.sub->weyl_dim(restricted_weight(s));
    }
    return total;
}

std::vector<IVec> dominant_simplex(int rank, long bound) {
    std::vector<IVec> out;
    IVec cur(rank, 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == rank) {
            out.push_back(cur);
            return;
        }
        for (long t = 0; t <= left; ++t) {
            cur[i] = t;
            rec(i + 1, left - t);
        }
        cur[i] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
        long sa = sum(a), sb = sum(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

CertificateReport BranchingEngine::certify(const GeneratorSet& gens, long degree_bound,
                                           int threads) const {
    CertificateReport rep;
    rep.degree_bound = degree_bound;
    std::vector<IVec> points = dominant_simplex(ctx_.g->rank(), degree_bound);
    rep.points_tested = long(points.size());
    std::vector<char> fails(points.size(), 0);
    bool budget_hit = false;
    std::string budget_note;

    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            try {
                if (predicted_dimension(gens, points[i]) != ctx_.g->weyl_dim(points[i]))
                    fails[i] = 1;
            } catch (const budget_exceeded& e) {
                fails[i] = 2;
            }
        }
    };
    if (threads <= 1) {
        run_range(0, points.size());
    } else {
        std::vector<std::future<void>> futs;
        size_t chunk = (points.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t lo = t * chunk, hi = std::min(points.size(), (t + 1) * chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& f : futs) f.get();
    }
    for (size_t i = 0; i < points.size(); ++i) {
        if (fails[i] == 1) rep.failures.push_back(points[i]);
        if (fails[i] == 2) budget_hit = true;
    }
    if (budget_hit) {
        rep.verdict = CertificateReport::BudgetExhausted;
        rep.note = "combination budget exhausted at some simplex points";
    } else if (!rep.failures.empty()) {
        rep.verdict = CertificateReport::CounterexampleFound;
    } else {
        rep.verdict = CertificateReport::CertifiedOnSimplex;
    }
    if (!rep.failures.empty()) {
        long min_deg = sum(rep.failures.front());
        for (const IVec& f : rep.failures) min_deg = std::min(min_deg, sum(f));
        for (const IVec& f : rep.failures)
            if (sum(f) == min_deg) rep.first_failures.push_back(f);
    }
    return rep;
}

DiscoveryResult BranchingEngine::discover(const std::vector<IVec>& initial, long degree_bound,
                                          long iteration_cap) {
    // the initial set must contain every fundamental weight
    for (int i = 0; i < ctx_.g->rank(); ++i) {
        IVec f(ctx_.g->rank(), 0);
        f[i] = 1;
        if (std::find(initial.begin(), initial.end(), f) == initial.end())
            throw std::invalid_argument("discover: initial weights must include the fundamentals");
    }
    DiscoveryResult res;
    std::vector<IVec> S = initial;
    size_t processed = 0;
    GeneratorSet gens;
    for (long iter = 0; iter < iteration_cap; ++iter) {
        res.iterations = iter + 1;
        // extend the generating set by the slice elements that are not
        // already generated (keeps the set minimal)
        for (; processed < S.size(); ++processed) {
            const IVec& lam = S[processed];
            for (const SliceEntry& e : slice(lam).entries) {
                bool generated =
                    !gens.gens.empty() && elements_of_weight(gens, lam).count(e.sig.p) > 0;
                if (!generated) gens.gens.push_back({e.sig, e.hw_sub});
            }
        }
        res.gens = gens;
        res.cert = certify(gens, degree_bound, threads_);
        if (res.cert.verdict != CertificateReport::CounterexampleFound) return res;
        for (const IVec& f : res.cert.first_failures) {
            if (std::find(S.begin(), S.end(), f) != S.end())
                throw std::logic_error("discover: failing weight already processed");
            S.push_back(f);
            res.added.push_back(f);
        }
    }
    res.cap_reached = true;
    return res;
}

Int BranchingEngine::multiplicity(const GeneratorSet& gens, const IVec& lambda,
                                  const IVec& hw_sub) const {
    std::set<IVec> elems = elements_of_weight(gens, lambda);
    Int count = 0;
    for (const IVec& p : elems)
        if (restricted_weight(Signature(lambda, p)) == hw_sub) ++count;
    return count;
}

}  // namespace sigbranch
