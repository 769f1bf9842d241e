#include "sigbranch/branching.hpp"

#include <algorithm>
#include <random>

namespace sigbranch {

long BranchingSlice::multiplicity(const IVec& hw_sub) const {
    long m = 0;
    for (const SliceEntry& e : entries)
        if (e.hw_sub == hw_sub) ++m;
    return m;
}

namespace {

// coordinates of a weight-block functional: per ambient weight, a value row
using FuncMap = std::map<IVec, QVec>;

Rat pair_with_vector(const FuncMap& f, const ModuleVector& v) {
    auto it = f.find(v.mu);
    if (it == f.end()) return 0;
    Rat s = 0;
    for (size_t k = 0; k < v.coords.size(); ++k)
        if (v.coords[k] != 0 && it->second[k] != 0) s += it->second[k] * v.coords[k];
    return s;
}

}  // namespace

std::vector<SliceEntry> lowest_invariant_functionals(const HWModule& mod, const Embedding& emb,
                                                     const MonomialOrderSpec& order, long budget) {
    const RootSystem& g = mod.rs();
    if (order.n_vars() != g.num_positive())
        throw std::invalid_argument("branching: order arity mismatch");
    const IVec lambda = mod.highest_weight();

    // group ambient weights by restricted weight
    std::map<IVec, std::vector<IVec>> groups;
    for (auto& [mu, d] : mod.weight_dims()) groups[emb.restrict_weight(mu)].push_back(mu);

    // lowering images as block maps
    int r = emb.sub->rank();
    std::vector<Embedding::MixedBlocks> lowering;
    for (int i = 0; i < r; ++i) lowering.push_back(emb.operator_blocks(mod, emb.f_img[i]));

    // candidate support restriction: with the subalgebra roots in front of
    // the ordering, signatures with subalgebra-root support pair to zero
    // against every invariant functional
    std::vector<bool> mask;
    bool use_mask = emb.regular && subalgebra_roots_precede(g, emb);
    if (use_mask) {
        mask.assign(g.num_positive(), true);
        for (int c : emb.sub_root_canonical) mask[g.display_of_canonical(c)] = false;
    }

    std::vector<SliceEntry> out;
    for (auto& [nu, weights] : groups) {
        // offsets of each ambient weight inside the group coordinate vector
        std::map<IVec, int> offset;
        int total = 0;
        for (const IVec& mu : weights) {
            offset[mu] = total;
            total += mod.weight_dim(mu);
        }
        // constraints: for each subalgebra lowering generator, each basis
        // vector of the group at nu + gamma_i must be annihilated
        std::vector<QVec> rows;
        for (int i = 0; i < r; ++i) {
            IVec above = nu + emb.sub->root(emb.sub->simple_indices()[i]).fund;
            auto git = groups.find(above);
            if (git == groups.end()) continue;
            for (const IVec& mu : git->second) {
                auto bit = lowering[i].by_source.find(mu);
                if (bit == lowering[i].by_source.end()) continue;
                int dsrc = mod.weight_dim(mu);
                for (int col = 0; col < dsrc; ++col) {
                    QVec row(total, Rat(0));
                    bool nz = false;
                    for (auto& [target, m] : bit->second) {
                        auto oit = offset.find(target);
                        if (oit == offset.end())
                            throw std::logic_error("branching: lowering image leaves the block");
                        for (int t = 0; t < m.rows(); ++t) {
                            if (m.at(t, col) == 0) continue;
                            row[oit->second + t] = m.at(t, col);
                            nz = true;
                        }
                    }
                    if (nz) rows.push_back(std::move(row));
                }
            }
        }
        std::vector<QVec> funcs;
        if (rows.empty()) {
            // no constraints: every functional on the block is invariant
            for (int t = 0; t < total; ++t) {
                QVec v(total, Rat(0));
                v[t] = 1;
                funcs.push_back(std::move(v));
            }
        } else {
            QMat sys(int(rows.size()), total);
            for (size_t i = 0; i < rows.size(); ++i)
                for (int j = 0; j < total; ++j) sys.at(int(i), j) = rows[i][j];
            funcs = nullspace(sys);
        }
        if (funcs.empty()) continue;
        if (!emb.sub->is_dominant(nu))
            throw std::logic_error("branching: invariant functional at a non-dominant weight");

        // value maps per functional
        std::vector<FuncMap> fm(funcs.size());
        for (size_t j = 0; j < funcs.size(); ++j)
            for (const IVec& mu : weights) {
                int d = mod.weight_dim(mu);
                QVec row(funcs[j].begin() + offset[mu], funcs[j].begin() + offset[mu] + d);
                if (!qvec_is_zero(row)) fm[j][mu] = std::move(row);
            }

        // candidates across the group's ambient weights, in increasing order
        std::vector<IVec> cands;
        for (const IVec& mu : weights) {
            auto target = g.simple_coords_of_fund(lambda - mu);
            if (!target) throw std::logic_error("branching: weight outside the root coset");
            auto part = enumerate_exponents(g, *target, budget, use_mask ? &mask : nullptr);
            cands.insert(cands.end(), part.begin(), part.end());
        }
        std::sort(cands.begin(), cands.end(),
                  [&](const IVec& a, const IVec& b) { return order.compare_exponents(a, b) < 0; });

        // streaming row reduction: each pivot column is the least term of
        // its (fully reduced) functional
        std::vector<int> pivot_of(funcs.size(), -1);
        std::vector<Signature> pivot_sig(funcs.size());
        size_t assigned = 0;
        for (const IVec& p : cands) {
            if (assigned == funcs.size()) break;
            Signature sig(lambda, p);
            ModuleVector v = mod.apply_signature(sig);
            if (v.is_zero()) continue;
            QVec vals(funcs.size());
            bool any = false;
            for (size_t j = 0; j < funcs.size(); ++j) {
                vals[j] = pair_with_vector(fm[j], v);
                if (vals[j] != 0 && pivot_of[j] < 0) any = true;
            }
            if (!any) continue;
            size_t j0 = 0;
            while (pivot_of[j0] >= 0 || vals[j0] == 0) ++j0;
            pivot_of[j0] = 1;
            pivot_sig[j0] = sig;
            ++assigned;
            for (size_t j = 0; j < funcs.size(); ++j) {
                if (j == j0 || vals[j] == 0) continue;
                Rat f = vals[j] / vals[j0];
                for (auto& [mu, row0] : fm[j0]) {
                    QVec& rowj = fm[j][mu];
                    if (rowj.empty()) rowj.assign(row0.size(), Rat(0));
                    for (size_t t = 0; t < row0.size(); ++t) rowj[t] -= f * row0[t];
                }
            }
        }
        if (assigned != funcs.size())
            throw std::logic_error("branching: least terms not found for every functional");
        for (size_t j = 0; j < funcs.size(); ++j) {
            SliceEntry e;
            e.sig = pivot_sig[j];
            e.hw_sub = nu;
            e.functional = fm[j];
            out.push_back(std::move(e));
        }
    }
    return out;
}

BranchingSlice branching_slice(const HWModule& mod, const Embedding& emb,
                               const MonomialOrderSpec& order, long budget) {
    BranchingSlice slice;
    slice.lambda = mod.highest_weight();
    slice.entries = lowest_invariant_functionals(mod, emb, order, budget);
    // pairwise distinct signatures
    for (size_t a = 0; a < slice.entries.size(); ++a)
        for (size_t b = a + 1; b < slice.entries.size(); ++b)
            if (slice.entries[a].sig == slice.entries[b].sig)
                throw std::logic_error("branching: duplicate least-term signatures");
    // dimension conservation
    Int total = 0;
    for (const SliceEntry& e : slice.entries) total += emb.sub->weyl_dim(e.hw_sub);
    if (total != mod.rs().weyl_dim(slice.lambda))
        throw std::logic_error("branching: dimension conservation failed");
    std::sort(slice.entries.begin(), slice.entries.end(), [&](const SliceEntry& x, const SliceEntry& y) {
        if (x.hw_sub != y.hw_sub) return x.hw_sub < y.hw_sub;
        return x.sig.p < y.sig.p;
    });
    return slice;
}

Signature strip_subalgebra_exponents(const RootSystem& rs, const Embedding& emb,
                                     const Signature& sig) {
    if (!emb.regular)
        throw std::invalid_argument("strip_subalgebra_exponents: embedding is not regular");
    Signature out = sig;
    for (int c : emb.sub_root_canonical) out.p[rs.display_of_canonical(c)] = 0;
    return out;
}

bool subalgebra_roots_precede(const RootSystem& rs, const Embedding& emb) {
    if (!emb.regular) return false;
    int max_sub = -1, min_rest = rs.num_positive();
    std::vector<bool> is_sub(rs.num_positive() + 1, false);
    for (int c : emb.sub_root_canonical) is_sub[c] = true;
    for (int pos = 0; pos < rs.num_positive(); ++pos) {
        if (is_sub[rs.canonical_of_display(pos)])
            max_sub = std::max(max_sub, pos);
        else
            min_rest = std::min(min_rest, pos);
    }
    return max_sub < min_rest;
}

CompatibilityReport check_order_compatibility(const RootSystem& rs, const Embedding& emb,
                                              const MonomialOrderSpec& order,
                                              long exhaustive_degree, long samples) {
    if (!emb.regular) throw std::invalid_argument("compatibility: embedding is not regular");
    CompatibilityReport rep;
    rep.roots_precede = subalgebra_roots_precede(rs, emb);

    auto strip = [&](const IVec& p) {
        IVec q = p;
        for (int c : emb.sub_root_canonical) q[rs.display_of_canonical(c)] = 0;
        return q;
    };
    int N = rs.num_positive();
    rep.order_respects_strip = true;
    auto check_pair = [&](const IVec& p, const IVec& q) {
        IVec ps = strip(p), qs = strip(q);
        if (ps == qs) return;
        ++rep.pairs_tested;
        if (order.compare_exponents(ps, qs) < 0 && order.compare_exponents(p, q) >= 0)
            rep.order_respects_strip = false;
    };
    // exhaustive over low degrees when the space is small
    long count = 1;
    for (long d = 0; d < exhaustive_degree; ++d) count *= (N + d + 1), count /= (d + 1);
    if (count <= 3000) {
        std::vector<IVec> all;
        IVec cur(N, 0);
        std::function<void(int, long)> gen = [&](int pos, long left) {
            if (pos == N) {
                all.push_back(cur);
                return;
            }
            for (long k = 0; k <= left; ++k) {
                cur[pos] = k;
                gen(pos + 1, left - k);
            }
            cur[pos] = 0;
        };
        gen(0, exhaustive_degree);
        rep.exhaustive = true;
        for (const IVec& p : all)
            for (const IVec& q : all) check_pair(p, q);
    }
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> dist(0, 3);
    for (long t = 0; t < samples; ++t) {
        IVec p(N), q(N);
        for (int i = 0; i < N; ++i) {
            p[i] = dist(rng);
            q[i] = dist(rng);
        }
        check_pair(p, q);
    }
    return rep;
}

std::vector<Signature> strip_filter_signatures(const EssentialBasis& basis, const Embedding& emb,
                                               const MonomialOrderSpec& order) {
    const RootSystem& rs = *emb.ambient;
    auto rep = check_order_compatibility(rs, emb, order);
    if (!rep.compatible())
        throw std::invalid_argument(
            "strip filter: ordering/order is not compatible with the embedding");
    std::vector<Signature> out;
    for (auto& [mu, entries] : basis.by_weight)
        for (auto& e : entries)
            if (strip_subalgebra_exponents(rs, emb, e.sig) == e.sig) out.push_back(e.sig);
    std::sort(out.begin(), out.end());
    return out;
}

Int highest_vector_count(const HWModule& mod, const Embedding& emb, const IVec& hw_sub) {
    // vectors of restricted weight hw_sub killed by every raising image
    std::map<IVec, std::vector<IVec>> groups;
    for (auto& [mu, d] : mod.weight_dims()) groups[emb.restrict_weight(mu)].push_back(mu);
    auto git = groups.find(hw_sub);
    if (git == groups.end()) return 0;
    std::map<IVec, int> offset;
    int total = 0;
    for (const IVec& mu : git->second) {
        offset[mu] = total;
        total += mod.weight_dim(mu);
    }
    std::vector<QVec> rows;
    for (int i = 0; i < emb.sub->rank(); ++i) {
        auto blocks = emb.operator_blocks(mod, emb.e_img[i]);
        // one constraint per coordinate of each target weight space,
        // accumulated over every source weight of the group
        std::map<IVec, std::vector<QVec>> per_target;
        for (const IVec& mu : git->second) {
            auto bit = blocks.by_source.find(mu);
            if (bit == blocks.by_source.end()) continue;
            int dsrc = mod.weight_dim(mu);
            for (auto& [target, m] : bit->second) {
                auto& tr = per_target[target];
                if (tr.empty()) tr.assign(m.rows(), QVec(total, Rat(0)));
                for (int t = 0; t < m.rows(); ++t)
                    for (int col = 0; col < dsrc; ++col)
                        if (m.at(t, col) != 0) tr[t][offset[mu] + col] += m.at(t, col);
            }
        }
        for (auto& [target, tr] : per_target)
            for (QVec& row : tr)
                if (!qvec_is_zero(row)) rows.push_back(std::move(row));
    }
    if (rows.empty()) return total;
    QMat sys(int(rows.size()), total);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < total; ++j) sys.at(int(i), j) = rows[i][j];
    return Int(total - rank(sys));
}

}  // namespace sigbranch
