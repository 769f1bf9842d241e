#include "sigbranch/essential.hpp"

#include <algorithm>
#include <functional>

namespace sigbranch {

std::vector<IVec> enumerate_exponents(const RootSystem& rs, const IVec& target_simple,
                                      long budget, const std::vector<bool>* allowed_positions) {
    int N = rs.num_positive();
    int n = rs.rank();
    std::vector<IVec> roots(N);
    for (int pos = 0; pos < N; ++pos) roots[pos] = rs.root(rs.canonical_of_display(pos)).simple;
    std::vector<bool> allowed(N, true);
    if (allowed_positions) allowed = *allowed_positions;
    // suffix support: which simple coordinates are reachable from position >= pos
    std::vector<std::vector<bool>> suffix(N + 1, std::vector<bool>(n, false));
    for (int pos = N - 1; pos >= 0; --pos) {
        suffix[pos] = suffix[pos + 1];
        if (!allowed[pos]) continue;
        for (int c = 0; c < n; ++c)
            if (roots[pos][c] > 0) suffix[pos][c] = true;
    }
    std::vector<IVec> out;
    IVec current(N, 0);
    long produced = 0;

    auto feasible = [&](int pos, const IVec& rem) {
        for (int c = 0; c < n; ++c)
            if (rem[c] > 0 && !suffix[pos][c]) return false;
        return true;
    };

    std::function<void(int, IVec&)> rec = [&](int pos, IVec& rem) {
        if (is_zero(rem)) {
            if (++produced > budget)
                throw budget_exceeded("exponent enumeration budget exceeded");
            out.push_back(current);
            // continue: larger exponents at later positions cannot resum to zero,
            // so stop this branch
            return;
        }
        if (pos == N || !feasible(pos, rem)) return;
        if (!allowed[pos]) {
            rec(pos + 1, rem);
            return;
        }
        // max exponent of this root
        long maxk = -1;
        for (int c = 0; c < n; ++c)
            if (roots[pos][c] > 0) {
                long m = rem[c] / roots[pos][c];
                maxk = maxk < 0 ? m : std::min(maxk, m);
            }
        if (maxk < 0) maxk = 0;  // zero root cannot happen; guard
        for (long k = 0; k <= maxk; ++k) {
            current[pos] = k;
            rec(pos + 1, rem);
            rem -= roots[pos];
        }
        for (long k = 0; k <= maxk; ++k) rem += roots[pos];
        current[pos] = 0;
    };
    IVec rem = target_simple;
    if (!all_nonneg(rem)) return out;
    rec(0, rem);
    return out;
}

std::vector<const EssentialEntry*> EssentialBasis::sorted(const MonomialOrderSpec& order) const {
    std::vector<const EssentialEntry*> all;
    for (auto& [mu, entries] : by_weight)
        for (auto& e : entries) all.push_back(&e);
    std::sort(all.begin(), all.end(), [&](const EssentialEntry* a, const EssentialEntry* b) {
        return order.compare_exponents(a->sig.p, b->sig.p) < 0;
    });
    return all;
}

bool EssentialBasis::contains(const Signature& s) const {
    for (auto& [mu, entries] : by_weight)
        for (auto& e : entries)
            if (e.sig == s) return true;
    return false;
}

namespace {

// echelon accumulator over a single weight space
struct Echelon {
    std::vector<QVec> rows;  // reduced, each with a distinct pivot
    std::vector<int> pivots;

    // reduce v in place; returns false if it vanishes
    bool add(QVec v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            int p = pivots[r];
            if (v[p] == 0) continue;
            Rat f = v[p] / rows[r][p];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { piv = int(j); break; }
        if (piv < 0) return false;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

}  // namespace

EssentialBasis essential_signatures(const HWModule& mod, const MonomialOrderSpec& order,
                                    long budget_per_weight) {
    const RootSystem& rs = mod.rs();
    if (order.n_vars() != rs.num_positive())
        throw std::invalid_argument("essential_signatures: order has wrong arity");
    EssentialBasis basis;
    basis.lambda = mod.highest_weight();
    for (auto& [mu, d] : mod.weight_dims()) {
        auto target = rs.simple_coords_of_fund(basis.lambda - mu);
        if (!target) throw std::logic_error("weight not in the root lattice coset");
        std::vector<IVec> cands = enumerate_exponents(rs, *target, budget_per_weight);
        std::sort(cands.begin(), cands.end(),
                  [&](const IVec& a, const IVec& b) { return order.compare_exponents(a, b) < 0; });
        Echelon ech;
        std::vector<EssentialEntry> kept;
        for (IVec& p : cands) {
            Signature sig(basis.lambda, p);
            ModuleVector v = mod.apply_signature(sig);
            if (v.is_zero()) continue;
            if (ech.add(v.coords)) {
                kept.push_back({std::move(sig), std::move(v)});
                if (int(kept.size()) == d) break;
            }
        }
        if (int(kept.size()) != d)
            throw std::logic_error("essential signatures do not span a weight space");
        basis.total += d;
        basis.by_weight[mu] = std::move(kept);
    }
    return basis;
}

Signature signature_of_functional(const EssentialBasis& basis, const MonomialOrderSpec& order,
                                  const std::map<IVec, QVec>& values_by_weight) {
    const Signature* best = nullptr;
    for (auto& [mu, vals] : values_by_weight) {
        auto it = basis.by_weight.find(mu);
        if (it == basis.by_weight.end()) continue;
        const auto& entries = it->second;
        if (vals.size() != entries.size())
            throw std::invalid_argument("signature_of_functional: value row has wrong length");
        for (size_t k = 0; k < entries.size(); ++k) {
            if (vals[k] == 0) continue;
            // entries are sorted increasing within the weight
            if (!best || order.compare_exponents(entries[k].sig.p, best->p) < 0)
                best = &entries[k].sig;
            break;
        }
    }
    if (!best) throw std::invalid_argument("signature_of_functional: zero functional");
    return *best;
}

}  // namespace sigbranch
