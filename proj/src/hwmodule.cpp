#include "sigbranch/hwmodule.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sigbranch {

namespace {

// Operator between weight spaces as a block map with a fixed weight shift.
struct BlockOp {
    IVec shift;
    std::map<IVec, QMat> blocks;
};

}  // namespace

std::string Signature::to_string() const {
    return "(" + ivec_to_string(hw) + "; " + ivec_to_string(p) + ")";
}

int HWModule::weight_dim(const IVec& mu) const {
    auto it = dims_.find(mu);
    return it == dims_.end() ? 0 : it->second;
}

const QMat& HWModule::gram(const IVec& mu) const { return grams_.at(mu); }

const QMat* HWModule::block(int signed_root, const IVec& mu) const {
    if (!kept_ops_.empty() && !kept_ops_.count(signed_root))
        throw std::logic_error("HWModule: operator was not retained by this build");
    auto it = ops_.find(signed_root);
    if (it == ops_.end()) return nullptr;
    auto jt = it->second.find(mu);
    return jt == it->second.end() ? nullptr : &jt->second;
}

ModuleVector HWModule::apply_root(int signed_root, const ModuleVector& v) const {
    if (v.is_zero()) return {};
    const QMat* m = block(signed_root, v.mu);
    if (!m) return {};
    const Root& r = rs_->root(std::abs(signed_root));
    IVec target = v.mu;
    for (int i = 0; i < rs_->rank(); ++i) target[i] += (signed_root > 0 ? r.fund[i] : -r.fund[i]);
    ModuleVector out;
    out.coords = m->apply(v.coords);
    if (qvec_is_zero(out.coords)) return {};
    out.mu = target;
    return out;
}

ModuleVector HWModule::apply_signature(const Signature& sig) const {
    if (sig.hw != lambda_) throw std::invalid_argument("apply_signature: highest weight mismatch");
    ModuleVector v;
    v.mu = lambda_;
    v.coords = {Rat(1)};
    int N = rs_->num_positive();
    for (int pos = N - 1; pos >= 0; --pos) {
        int c = rs_->canonical_of_display(pos);
        for (long k = 0; k < sig.p[pos]; ++k) {
            v = apply_root(-c, v);
            if (v.is_zero()) return {};
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

class ModuleBuilder {
public:
    ModuleBuilder(RootSystemPtr rs, const IVec& lambda, long cap, std::vector<int> keep)
        : rs_(std::move(rs)), lambda_(lambda), cap_(cap), keep_(std::move(keep)) {}

    std::shared_ptr<const HWModule> run() {
        if (!rs_->is_dominant(lambda_)) throw std::invalid_argument("build_module: weight not dominant");
        Int want = rs_->weyl_dim(lambda_);
        if (want > cap_)
            throw budget_exceeded("build_module: dimension " + want.get_str() +
                                  " exceeds cap " + std::to_string(cap_) +
                                  " (raise the module dimension cap)");
        auto m = std::shared_ptr<HWModule>(new HWModule());
        m->rs_ = rs_;
        m->lambda_ = lambda_;
        mod_ = m.get();

        int n = rs_->rank();
        simple_fund_.resize(n);
        for (int i = 0; i < n; ++i) simple_fund_[i] = rs_->root(rs_->simple_indices()[i]).fund;

        mod_->dims_[lambda_] = 1;
        QMat g0(1, 1);
        g0.at(0, 0) = 1;
        mod_->grams_[lambda_] = g0;
        origin_[lambda_] = {{-1, -1}};

        std::vector<IVec> frontier = {lambda_};
        while (!frontier.empty()) {
            std::map<IVec, bool> next_weights;
            for (const IVec& w : frontier)
                for (int i = 0; i < n; ++i) next_weights[w - simple_fund_[i]] = true;
            std::vector<IVec> created;
            for (auto& [mu, unused] : next_weights)
                if (process_weight(mu)) created.push_back(mu);
            frontier = std::move(created);
        }

        long total = 0;
        for (auto& [mu, d] : mod_->dims_) total += d;
        mod_->dim_ = total;
        if (Int(total) != want) throw std::logic_error("build_module: dimension mismatch against Weyl formula");

        derived_operators();
        return m;
    }

private:
    RootSystemPtr rs_;
    IVec lambda_;
    long cap_;
    std::vector<int> keep_;
    HWModule* mod_ = nullptr;
    std::vector<IVec> simple_fund_;
    // per weight: the (parent simple index, parent column) defining each kept
    // basis vector
    std::map<IVec, std::vector<std::pair<int, int>>> origin_;

    // <u_k, e_i(f_j u_l)> for u_k in space pi = mu+beta_i, u_l in pj.
    // Candidate pairing for the contravariant form.
    Rat cand_pairing(const IVec& mu, int i, int k, int j, int l) {
        const IVec pi = mu + simple_fund_[i];
        const IVec pj = mu + simple_fund_[j];
        int ci = rs_->simple_indices()[i];
        int cj = rs_->simple_indices()[j];
        Rat result = 0;
        // f_j(e_i u_l): e_i out of pj, then f_j back into pi
        const QMat* e_blk = mod_->block(ci, pj);
        if (e_blk) {
            QVec ul(e_blk->cols(), Rat(0));
            ul[l] = 1;
            QVec up = e_blk->apply(ul);
            const IVec high = pj + simple_fund_[i];
            const QMat* f_blk = mod_->block(-cj, high);
            if (f_blk && !qvec_is_zero(up)) {
                QVec down = f_blk->apply(up);
                const QMat& g = mod_->grams_.at(pi);
                for (int t = 0; t < int(down.size()); ++t)
                    if (down[t] != 0) result += g.at(k, t) * down[t];
            }
        }
        if (i == j) {
            const QMat& g = mod_->grams_.at(pi);
            result += Rat(pi[i]) * g.at(k, l);
        }
        return result;
    }

    bool process_weight(const IVec& mu) {
        int n = rs_->rank();
        // candidates: f_i applied to each basis vector of mu + beta_i
        std::vector<std::pair<int, int>> cands;
        for (int i = 0; i < n; ++i) {
            IVec pi = mu + simple_fund_[i];
            auto it = mod_->dims_.find(pi);
            if (it == mod_->dims_.end()) continue;
            for (int k = 0; k < it->second; ++k) cands.emplace_back(i, k);
        }
        if (cands.empty()) return false;
        int m = int(cands.size());
        QMat g(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                g.at(a, b) = cand_pairing(mu, cands[a].first, cands[a].second, cands[b].first,
                                          cands[b].second);
                g.at(b, a) = g.at(a, b);
            }
        // greedy rank selection via the (positive definite) form
        std::vector<int> kept;
        std::vector<QVec> coords(m);  // coords over kept for every candidate
        for (int c = 0; c < m; ++c) {
            int r = int(kept.size());
            QMat gk(r, r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) gk.at(a, b) = g.at(kept[a], kept[b]);
            QVec rhs(r);
            for (int a = 0; a < r; ++a) rhs[a] = g.at(kept[a], c);
            QVec x;
            Rat residual = g.at(c, c);
            if (r > 0) {
                auto sol = solve(gk, rhs);
                if (!sol) throw std::logic_error("gram solve failed");
                x = *sol;
                for (int a = 0; a < r; ++a) residual -= rhs[a] * x[a];
            }
            if (residual != 0) {
                kept.push_back(c);
            } else {
                coords[c] = std::move(x);
            }
        }
        if (kept.empty()) return false;
        int d = int(kept.size());

        mod_->dims_[mu] = d;
        QMat gk(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) gk.at(a, b) = g.at(kept[a], kept[b]);
        mod_->grams_[mu] = gk;
        auto& org = origin_[mu];
        for (int a = 0; a < d; ++a) org.push_back(cands[kept[a]]);

        // F blocks into mu, one per parent
        std::vector<int> kept_pos(m, -1);
        for (int a = 0; a < d; ++a) kept_pos[kept[a]] = a;
        for (int i = 0; i < n; ++i) {
            IVec pi = mu + simple_fund_[i];
            auto it = mod_->dims_.find(pi);
            if (it == mod_->dims_.end()) continue;
            QMat f(d, it->second);
            for (int c = 0; c < m; ++c) {
                if (cands[c].first != i) continue;
                int col = cands[c].second;
                if (kept_pos[c] >= 0) {
                    f.at(kept_pos[c], col) = 1;
                } else {
                    for (int a = 0; a < int(coords[c].size()); ++a) f.at(a, col) = coords[c][a];
                }
            }
            mod_->ops_[-rs_->simple_indices()[i]][pi] = std::move(f);
        }

        // E blocks out of mu
        for (int j = 0; j < n; ++j) {
            IVec up = mu + simple_fund_[j];
            auto it = mod_->dims_.find(up);
            if (it == mod_->dims_.end()) continue;
            int cj = rs_->simple_indices()[j];
            QMat e(it->second, d);
            for (int a = 0; a < d; ++a) {
                auto [i, k] = org[a];
                IVec pi = mu + simple_fund_[i];
                int ci = rs_->simple_indices()[i];
                // e_j f_i u_k = f_i (e_j u_k) + delta_ij <pi, h_i> u_k
                QVec col(it->second, Rat(0));
                const QMat* e_blk = mod_->block(cj, pi);
                if (e_blk) {
                    QVec uk(e_blk->cols(), Rat(0));
                    uk[k] = 1;
                    QVec raised = e_blk->apply(uk);
                    if (!qvec_is_zero(raised)) {
                        const QMat* f_blk = mod_->block(-ci, pi + simple_fund_[j]);
                        if (f_blk) {
                            QVec lowered = f_blk->apply(raised);
                            for (size_t t = 0; t < lowered.size(); ++t) col[t] += lowered[t];
                        }
                    }
                }
                if (i == j) col[k] += Rat(pi[i]);
                for (int t = 0; t < it->second; ++t) e.at(t, a) = col[t];
            }
            mod_->ops_[cj][mu] = std::move(e);
        }
        return true;
    }

    std::pair<int, int> extraspecial(int g) const {
        int N = rs_->num_positive();
        for (int cand = 1; cand <= N; ++cand) {
            IVec rest = rs_->root(g).simple - rs_->root(cand).simple;
            if (!all_nonneg(rest)) continue;
            int other = rs_->find_positive(rest);
            if (other > cand) return {cand, other};
        }
        throw std::logic_error("derived_operators: no decomposition");
    }

    // compose block maps: returns blocks of op(s1) o op(s2)
    void derived_operators() {
        int N = rs_->num_positive();
        auto root_fund_signed = [&](int s) {
            IVec f = rs_->root(std::abs(s)).fund;
            if (s < 0)
                for (auto& x : f) x = -x;
            return f;
        };
        std::set<int> wanted;
        if (keep_.empty()) {
            for (int g = 1; g <= N; ++g) {
                wanted.insert(g);
                wanted.insert(-g);
            }
        } else {
            std::function<void(int)> need = [&](int s) {
                if (wanted.count(s)) return;
                wanted.insert(s);
                int g = std::abs(s);
                if (rs_->root(g).height == 1) return;
                auto [a, b] = extraspecial(g);
                need(s > 0 ? a : -a);
                need(s > 0 ? b : -b);
            };
            for (int s : keep_) need(s);
        }
        for (int g = 1; g <= N; ++g) {
            if (rs_->root(g).height == 1) continue;
            auto [a, b] = extraspecial(g);
            long nval = rs_->constants().N(a, b);
            for (int sign : {+1, -1}) {
                if (!wanted.count(sign * g)) continue;
                int sa = sign * a, sb = sign * b, sg = sign * g;
                Rat scale = Rat(1) / Rat(sign > 0 ? nval : -nval);
                std::map<IVec, QMat> blocks;
                // collect over all source weights
                for (auto& [mu, dim_src] : mod_->dims_) {
                    IVec target = mu + root_fund_signed(sg);
                    auto ti = mod_->dims_.find(target);
                    if (ti == mod_->dims_.end()) continue;
                    QMat acc(ti->second, dim_src);
                    bool nonzero = false;
                    // e_sa e_sb
                    {
                        const QMat* b2 = mod_->block(sb, mu);
                        if (b2) {
                            const QMat* b1 = mod_->block(sa, mu + root_fund_signed(sb));
                            if (b1) {
                                acc = acc + (*b1) * (*b2);
                                nonzero = true;
                            }
                        }
                    }
                    // - e_sb e_sa
                    {
                        const QMat* b2 = mod_->block(sa, mu);
                        if (b2) {
                            const QMat* b1 = mod_->block(sb, mu + root_fund_signed(sa));
                            if (b1) {
                                acc = acc - (*b1) * (*b2);
                                nonzero = true;
                            }
                        }
                    }
                    if (!nonzero || acc.is_zero()) continue;
                    blocks[mu] = acc.scaled(scale);
                }
                if (!blocks.empty()) mod_->ops_[sg] = std::move(blocks);
            }
        }
        if (!keep_.empty()) {
            std::set<int> keepset(keep_.begin(), keep_.end());
            for (auto it = mod_->ops_.begin(); it != mod_->ops_.end();)
                it = keepset.count(it->first) ? std::next(it) : mod_->ops_.erase(it);
            mod_->kept_ops_ = std::move(keepset);
        }
    }
};

std::shared_ptr<const HWModule> HWModule::build(RootSystemPtr rs, const IVec& lambda, long dim_cap,
                                                const std::vector<int>& keep_ops) {
    return ModuleBuilder(std::move(rs), lambda, dim_cap, keep_ops).run();
}

std::shared_ptr<const HWModule> HWModule::rescaled_lowering(const std::vector<Rat>& scale) const {
    auto m = std::shared_ptr<HWModule>(new HWModule(*this));
    for (int k = 1; k <= rs_->num_positive(); ++k) {
        if (scale[k - 1] == 1 || scale[k - 1] == 0) continue;
        auto it = m->ops_.find(-k);
        if (it == m->ops_.end()) continue;
        for (auto& [mu, blk] : it->second) blk = blk.scaled(scale[k - 1]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

// generic block operator algebra for the checks
struct GenOp {
    IVec shift;
    std::map<IVec, QMat> blocks;
};

GenOp op_of_root(const HWModule& m, int s) {
    GenOp g;
    const Root& r = m.rs().root(std::abs(s));
    g.shift = r.fund;
    if (s < 0)
        for (auto& x : g.shift) x = -x;
    for (auto& [mu, d] : m.weight_dims()) {
        const QMat* b = m.block(s, mu);
        if (b) g.blocks[mu] = *b;
    }
    return g;
}

GenOp commutator(const HWModule& m, const GenOp& x, const GenOp& y) {
    GenOp r;
    r.shift = x.shift + y.shift;
    for (auto& [mu, d] : m.weight_dims()) {
        IVec target = mu + r.shift;
        auto ti = m.weight_dims().find(target);
        if (ti == m.weight_dims().end()) continue;
        QMat acc(ti->second, d);
        bool nz = false;
        auto yb = y.blocks.find(mu);
        if (yb != y.blocks.end()) {
            auto xb = x.blocks.find(mu + y.shift);
            if (xb != x.blocks.end()) {
                acc = acc + xb->second * yb->second;
                nz = true;
            }
        }
        auto xb2 = x.blocks.find(mu);
        if (xb2 != x.blocks.end()) {
            auto yb2 = y.blocks.find(mu + x.shift);
            if (yb2 != y.blocks.end()) {
                acc = acc - yb2->second * xb2->second;
                nz = true;
            }
        }
        if (nz && !acc.is_zero()) r.blocks[mu] = acc;
    }
    return r;
}

bool op_is_zero(const GenOp& g) { return g.blocks.empty(); }

}  // namespace

bool HWModule::verify_operators(bool full) const {
    int n = rs_->rank();
    // [e_i, f_j] = delta_ij h_i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ci = rs_->simple_indices()[i], cj = rs_->simple_indices()[j];
            GenOp comm = commutator(*this, op_of_root(*this, ci), op_of_root(*this, -cj));
            if (i != j) {
                if (!op_is_zero(comm)) return false;
            } else {
                for (auto& [mu, d] : dims_) {
                    QMat want(d, d);
                    for (int t = 0; t < d; ++t) want.at(t, t) = mu[i];
                    auto it = comm.blocks.find(mu);
                    QMat got = it == comm.blocks.end() ? QMat(d, d) : it->second;
                    if (!(got == want)) return false;
                }
            }
        }
    // Serre relations (ad e_i)^{1 - a_ij}(e_j) = 0, likewise for f
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            long a = rs_->cartan(i, j);
            for (int sgn : {+1, -1}) {
                GenOp x = op_of_root(*this, sgn * rs_->simple_indices()[i]);
                GenOp acc = op_of_root(*this, sgn * rs_->simple_indices()[j]);
                for (long k = 0; k < 1 - a; ++k) acc = commutator(*this, x, acc);
                if (!op_is_zero(acc)) return false;
            }
        }
    if (full) {
        int N = rs_->num_positive();
        for (int s1 = -N; s1 <= N; ++s1)
            for (int s2 = -N; s2 <= N; ++s2) {
                if (!s1 || !s2) continue;
                GenOp comm = commutator(*this, op_of_root(*this, s1), op_of_root(*this, s2));
                if (s1 == -s2) {
                    // h_{alpha}: acts on mu by the coroot pairing
                    int k = std::abs(s1);
                    long sign = s1 > 0 ? 1 : -1;
                    for (auto& [mu, d] : dims_) {
                        long val = sign * rs_->coroot_pairing(mu, k);
                        QMat want(d, d);
                        for (int t = 0; t < d; ++t) want.at(t, t) = val;
                        auto it = comm.blocks.find(mu);
                        QMat got = it == comm.blocks.end() ? QMat(d, d) : it->second;
                        if (!(got == want)) return false;
                    }
                } else {
                    int s = rs_->constants().sum_root(s1, s2);
                    if (!s) {
                        if (!op_is_zero(comm)) return false;
                        continue;
                    }
                    GenOp expect = op_of_root(*this, s);
                    Rat nval(rs_->constants().N(s1, s2));
                    for (auto& [mu, d] : dims_) {
                        auto g1 = comm.blocks.find(mu);
                        auto g2 = expect.blocks.find(mu);
                        QMat a1 = g1 == comm.blocks.end() ? QMat(0, 0) : g1->second;
                        QMat a2 = g2 == expect.blocks.end() ? QMat(0, 0) : g2->second.scaled(nval);
                        if (a1.rows() == 0 && a2.rows() == 0) continue;
                        if (a1.rows() == 0) {
                            if (!a2.is_zero()) return false;
                        } else if (a2.rows() == 0) {
                            if (!a1.is_zero()) return false;
                        } else if (!(a1 == a2)) {
                            return false;
                        }
                    }
                }
            }
    }
    return true;
}

}  // namespace sigbranch
