#include "sigbranch/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigbranch {

namespace {

struct WeightBasis {
    std::vector<IVec> weights;          // one entry per basis vector (all spaces 1-dim)
    std::map<IVec, int> index;
    long drop(const RootSystem& rs, const IVec& lambda, const IVec& mu) const {
        auto d = rs.simple_coords_of_fund(lambda - mu);
        return sum(*d);
    }
};

WeightBasis weight_basis(const HWModule& m) {
    WeightBasis wb;
    for (auto& [mu, d] : m.weight_dims()) {
        if (d != 1) throw std::logic_error("weight_basis: expected multiplicity-one module");
        wb.index[mu] = int(wb.weights.size());
        wb.weights.push_back(mu);
    }
    return wb;
}

// full matrix of a root vector on a multiplicity-one module over the global
// weight basis
QMat global_matrix(const HWModule& m, const WeightBasis& wb, int signed_root) {
    int n = int(wb.weights.size());
    QMat out(n, n);
    const Root& r = m.rs().root(std::abs(signed_root));
    for (int c = 0; c < n; ++c) {
        const QMat* b = m.block(signed_root, wb.weights[c]);
        if (!b) continue;
        IVec target = wb.weights[c];
        for (int i = 0; i < m.rs().rank(); ++i)
            target[i] += (signed_root > 0 ? r.fund[i] : -r.fund[i]);
        auto it = wb.index.find(target);
        if (it == wb.index.end()) continue;
        out.at(it->second, c) = b->at(0, 0);
    }
    return out;
}

// invariant symmetric bilinear form of a multiplicity-one self-dual module;
// solves S X + X^T S = 0 over the simple generators, normalized to the
// 1-dimensional solution space
QMat invariant_form(const HWModule& m, const WeightBasis& wb) {
    int n = int(wb.weights.size());
    int nsym = n * (n + 1) / 2;
    auto sym_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * n - a * (a - 1) / 2 + (b - a);
    };
    std::vector<QMat> gens;
    for (int i = 0; i < m.rs().rank(); ++i) {
        gens.push_back(global_matrix(m, wb, m.rs().simple_indices()[i]));
        gens.push_back(global_matrix(m, wb, -m.rs().simple_indices()[i]));
    }
    QMat sys(int(gens.size()) * n * n, nsym);
    int row = 0;
    for (const QMat& x : gens) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                // sum_c S(a,c) X(c,b) + X(c,a) S(c,b) = 0
                for (int c = 0; c < n; ++c) {
                    if (x.at(c, b) != 0) sys.at(row, sym_index(a, c)) += x.at(c, b);
                    if (x.at(c, a) != 0) sys.at(row, sym_index(c, b)) += x.at(c, a);
                }
                ++row;
            }
    }
    auto ns = nullspace(sys);
    if (ns.size() != 1) throw std::logic_error("invariant_form: solution space is not a line");
    QMat s(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.at(a, b) = ns[0][sym_index(a, b)];
    return s;
}

}  // namespace

Embedding build_g2_so7(RootSystemPtr b3) {
    if (b3->series() != 'B' || b3->rank() != 3)
        throw std::invalid_argument("build_g2_so7: ambient must be B3");
    RootSystemPtr g2 = RootSystem::build('G', 2);
    auto mg = HWModule::build(g2, {1, 0});
    auto mb = HWModule::build(b3, {1, 0, 0});
    WeightBasis wg = weight_basis(*mg);
    WeightBasis wb = weight_basis(*mb);

    // match weights by their height drop from the highest weight
    std::map<long, IVec> g_by_drop, b_by_drop;
    for (const IVec& mu : wg.weights) g_by_drop[wg.drop(*g2, {1, 0}, mu)] = mu;
    for (const IVec& mu : wb.weights) b_by_drop[wb.drop(*b3, {1, 0, 0}, mu)] = mu;
    if (g_by_drop.size() != 7 || b_by_drop.size() != 7)
        throw std::logic_error("build_g2_so7: unexpected weight ladder");

    QMat sg = invariant_form(*mg, wg);
    QMat sb = invariant_form(*mb, wb);

    auto negate = [](const IVec& v) {
        IVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
        return r;
    };
    auto pair_value = [&](const QMat& s, const WeightBasis& w, const IVec& mu) {
        return s.at(w.index.at(mu), w.index.at(negate(mu)));
    };

    IVec zero_b = b_by_drop.at(3);
    IVec zero_g = g_by_drop.at(3);
    Rat s0 = pair_value(sg, wg, zero_g);
    Rat t0 = pair_value(sb, wb, zero_b);
    Rat kappa = s0 * t0;

    // Phi: V_g2 -> C^7, u_{r(nu)} -> c_nu x_nu, transporting the form:
    // c_nu c_{-nu} t_nu = kappa s_{r(nu)}, c_0 = s_0.
    std::map<IVec, Rat> c;
    c[zero_b] = s0;
    for (auto& [drop, nu] : b_by_drop) {
        if (drop == 3) continue;
        if (c.count(nu)) continue;
        IVec m = negate(nu);
        Rat t = pair_value(sb, wb, nu);
        Rat s = pair_value(sg, wg, g_by_drop.at(drop));
        c[nu] = 1;
        c[m] = kappa * s / t;
    }

    // Phi and its inverse as global matrices (both diagonal in the matched bases)
    int n = 7;
    QMat phi(n, n), phi_inv(n, n);
    for (auto& [drop, nu] : b_by_drop) {
        int col = wg.index.at(g_by_drop.at(drop));
        int row = wb.index.at(nu);
        phi.at(row, col) = c.at(nu);
        phi_inv.at(col, row) = Rat(1) / c.at(nu);
    }

    // verify the form transport exactly
    {
        QMat lhs = phi.transposed() * sb * phi;
        QMat rhs = sg.scaled(kappa);
        if (!(lhs == rhs)) throw std::logic_error("build_g2_so7: form transport failed");
    }

    // expand the conjugated generators over so7 = span{E_k, F_k, H_j}
    std::vector<QMat> basis_ops;
    std::vector<int> basis_root;  // signed root index, 0 for Cartan
    for (int k = 1; k <= b3->num_positive(); ++k) {
        basis_ops.push_back(global_matrix(*mb, wb, k));
        basis_root.push_back(k);
        basis_ops.push_back(global_matrix(*mb, wb, -k));
        basis_root.push_back(-k);
    }
    for (int j = 0; j < 3; ++j) {
        QMat h(n, n);
        for (int col = 0; col < n; ++col) h.at(col, col) = wb.weights[col][j];
        basis_ops.push_back(h);
        basis_root.push_back(0);
    }
    int nb = int(basis_ops.size());

    Embedding emb;
    emb.ambient = b3;
    emb.sub = g2;
    emb.regular = false;

    auto expand = [&](const QMat& target) {
        QMat sys(n * n, nb);
        QVec rhs(size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int row = a * n + b;
                for (int k = 0; k < nb; ++k) sys.at(row, k) = basis_ops[k].at(a, b);
                rhs[row] = target.at(a, b);
            }
        auto sol = solve(sys, rhs);
        if (!sol) throw std::logic_error("build_g2_so7: image not inside so7");
        LieElt elt;
        int ncart = 2 * b3->num_positive();
        for (int k = 0; k < nb; ++k) {
            if ((*sol)[k] == 0) continue;
            if (basis_root[k] != 0) {
                elt.root_part[basis_root[k]] += (*sol)[k];
            } else {
                if (elt.cartan.empty()) elt.cartan.assign(3, Rat(0));
                elt.cartan[k - ncart] += (*sol)[k];
            }
        }
        return elt;
    };

    for (int i = 0; i < 2; ++i) {
        QMat eg = global_matrix(*mg, wg, g2->simple_indices()[i]);
        QMat fg = global_matrix(*mg, wg, -g2->simple_indices()[i]);
        emb.e_img.push_back(expand(phi * eg * phi_inv));
        emb.f_img.push_back(expand(phi * fg * phi_inv));
    }
    for (int i = 0; i < 2; ++i) {
        LieElt h = b3->bracket(emb.e_img[i], emb.f_img[i]);
        if (!h.root_part.empty()) throw std::logic_error("build_g2_so7: [e,f] not in Cartan");
        emb.h_img.push_back(h);
    }
    emb.restriction = QMat(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) emb.restriction.at(i, j) = emb.h_img[i].cartan[j];
    if (!emb.serre_check()) throw std::logic_error("build_g2_so7: Serre check failed");
    return emb;
}

}  // namespace sigbranch
