#include "sigbranch/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sigbranch {

namespace {

std::vector<QVec> simple_roots_for(char series, int rank, int& ambient_dim) {
    std::vector<QVec> s;
    auto e = [&](int i) {
        QVec v(ambient_dim, Rat(0));
        v[i] = 1;
        return v;
    };
    switch (series) {
        case 'A': {
            if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
            ambient_dim = rank + 1;
            for (int i = 0; i < rank; ++i) {
                QVec v(ambient_dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            break;
        }
        case 'B': {
            if (rank < 1) throw std::invalid_argument("B_n needs n >= 1");
            ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                QVec v(ambient_dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            s.push_back(e(rank - 1));
            break;
        }
        case 'C': {
            if (rank < 2) throw std::invalid_argument("C_n needs n >= 2");
            ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                QVec v(ambient_dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            QVec v(ambient_dim, Rat(0));
            v[rank - 1] = 2;
            s.push_back(v);
            break;
        }
        case 'D': {
            if (rank < 2) throw std::invalid_argument("D_n needs n >= 2");
            ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                QVec v(ambient_dim, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                s.push_back(v);
            }
            QVec v(ambient_dim, Rat(0));
            v[rank - 2] = 1;
            v[rank - 1] = 1;
            s.push_back(v);
            break;
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
            ambient_dim = 8;
            QVec b1(8, Rat(0));
            b1[0] = Rat(1, 2);
            b1[7] = Rat(1, 2);
            for (int i = 1; i <= 6; ++i) b1[i] = Rat(-1, 2);
            s.push_back(b1);
            QVec b2(8, Rat(0));
            b2[0] = 1;
            b2[1] = 1;
            s.push_back(b2);
            for (int i = 0; i + 3 <= rank; ++i) {
                QVec v(8, Rat(0));
                v[i] = -1;
                v[i + 1] = 1;
                s.push_back(v);
            }
            break;
        }
        case 'F': {
            if (rank != 4) throw std::invalid_argument("F series has rank 4 only");
            ambient_dim = 4;
            QVec b1(4);
            b1[0] = Rat(1, 2);
            b1[1] = Rat(-1, 2);
            b1[2] = Rat(-1, 2);
            b1[3] = Rat(-1, 2);
            s.push_back(b1);
            s.push_back(e(3));
            QVec b3(4, Rat(0));
            b3[2] = 1;
            b3[3] = -1;
            s.push_back(b3);
            QVec b4(4, Rat(0));
            b4[1] = 1;
            b4[2] = -1;
            s.push_back(b4);
            break;
        }
        case 'G': {
            if (rank != 2) throw std::invalid_argument("G series has rank 2 only");
            ambient_dim = 3;
            QVec b1(3, Rat(0));
            b1[0] = 1;
            b1[1] = -1;
            s.push_back(b1);
            QVec b2(3, Rat(0));
            b2[0] = -2;
            b2[1] = 1;
            b2[2] = 1;
            s.push_back(b2);
            break;
        }
        default:
            throw std::invalid_argument("unknown series");
    }
    return s;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(char series, int rank,
                                                    const std::vector<int>& display_order) {
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->series_ = series;
    rs->rank_ = rank;
    rs->simple_ambient_ = simple_roots_for(series, rank, rs->ambient_dim_);
    int n = rank;

    // Cartan matrix from the realization.
    rs->cartan_.assign(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) {
        Rat len2 = dot(rs->simple_ambient_[i], rs->simple_ambient_[i]);
        for (int j = 0; j < n; ++j) {
            Rat a = 2 * dot(rs->simple_ambient_[i], rs->simple_ambient_[j]) / len2;
            rs->cartan_[i][j] = rat_to_long(a);
        }
    }

    // Generate positive roots by height using root strings.
    std::map<IVec, Root> found;
    std::vector<IVec> frontier;
    for (int i = 0; i < n; ++i) {
        Root r;
        r.simple.assign(n, 0);
        r.simple[i] = 1;
        r.ambient = rs->simple_ambient_[i];
        r.height = 1;
        found[r.simple] = r;
        frontier.push_back(r.simple);
    }
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& bc : frontier) {
            const Root& beta = found[bc];
            for (int i = 0; i < n; ++i) {
                // alpha_i-string through beta: p = max{k : beta - k a_i root}
                int p = 0;
                IVec down = bc;
                while (true) {
                    down[i] -= 1;
                    bool ok = all_nonneg(down) && found.count(down);
                    if (!ok) break;
                    ++p;
                }
                long pairing = 0;
                for (int j = 0; j < n; ++j) pairing += rs->cartan_[i][j] * bc[j];
                long q = p - pairing;
                if (q <= 0) continue;
                IVec up = bc;
                up[i] += 1;
                if (found.count(up)) continue;
                Root r;
                r.simple = up;
                r.ambient = qvec_add(beta.ambient, rs->simple_ambient_[i]);
                r.height = beta.height + 1;
                found[up] = r;
                next.push_back(up);
            }
        }
        frontier = std::move(next);
    }

    // Canonical order: height, then lex on simple coordinates.
    std::vector<Root> roots;
    for (auto& [k, r] : found) roots.push_back(r);
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.simple < b.simple;
    });
    rs->positive_ = std::move(roots);
    int N = int(rs->positive_.size());

    for (int k = 0; k < N; ++k) {
        Root& r = rs->positive_[k];
        r.fund.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            long f = 0;
            for (int j = 0; j < n; ++j) f += rs->cartan_[i][j] * r.simple[j];
            r.fund[i] = f;
        }
        rs->by_simple_[r.simple] = k + 1;
    }

    rs->simple_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        IVec c(n, 0);
        c[i] = 1;
        rs->simple_[i] = rs->by_simple_.at(c);
    }

    // Coroots of all positive roots over the simple coroots.
    rs->coroots_.reserve(N);
    for (int k = 0; k < N; ++k) {
        const Root& r = rs->positive_[k];
        Rat len2 = dot(r.ambient, r.ambient);
        IVec cr(n, 0);
        for (int j = 0; j < n; ++j) {
            Rat lj = dot(rs->simple_ambient_[j], rs->simple_ambient_[j]);
            cr[j] = rat_to_long(Rat(r.simple[j]) * lj / len2);
        }
        rs->coroots_.push_back(cr);
    }

    // Fundamental weights inside the span of the roots: with
    // C[k][j] = <beta_j, beta_k^vee>, row i of C^{-1} gives pi_i over the
    // simple roots.
    {
        QMat ct(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ct.at(i, j) = rs->cartan_[i][j];
        for (int i = 0; i < n; ++i) {
            QVec rhs(n, Rat(0));
            rhs[i] = 1;
            auto sol = solve(ct, rhs);
            if (!sol) throw std::logic_error("Cartan matrix singular");
            QVec amb(rs->ambient_dim_, Rat(0));
            for (int j = 0; j < n; ++j) amb = qvec_add(amb, qvec_scale((*sol)[j], rs->simple_ambient_[j]));
            rs->fundamental_.push_back(amb);
        }
    }

    rs->rho_.assign(rs->ambient_dim_, Rat(0));
    for (const Root& r : rs->positive_) rs->rho_ = qvec_add(rs->rho_, r.ambient);
    rs->rho_ = qvec_scale(Rat(1, 2), rs->rho_);

    // Display order.
    if (display_order.empty()) {
        rs->display_.resize(N);
        for (int i = 0; i < N; ++i) rs->display_[i] = i + 1;
    } else {
        if (int(display_order.size()) != N) throw std::invalid_argument("root ordering has wrong length");
        std::vector<bool> seen(N, false);
        for (int c : display_order) {
            if (c < 1 || c > N || seen[c - 1]) throw std::invalid_argument("root ordering is not a permutation");
            seen[c - 1] = true;
        }
        rs->display_ = display_order;
    }
    rs->display_inv_.assign(N, 0);
    for (int i = 0; i < N; ++i) rs->display_inv_[rs->display_[i] - 1] = i;

    rs->sc_ = StructureConstants(rs.get());
    return rs;
}

QVec RootSystem::ambient_of_weight(const IVec& fund) const {
    QVec amb(ambient_dim_, Rat(0));
    for (int i = 0; i < rank_; ++i)
        if (fund[i] != 0) amb = qvec_add(amb, qvec_scale(Rat(fund[i]), fundamental_[i]));
    return amb;
}

IVec RootSystem::weight_of_ambient(const QVec& amb) const {
    IVec fund(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        Rat len2 = dot(simple_ambient_[i], simple_ambient_[i]);
        fund[i] = rat_to_long(2 * dot(amb, simple_ambient_[i]) / len2);
    }
    return fund;
}

long RootSystem::coroot_pairing(const IVec& mu_fund, int k) const {
    const IVec& cr = coroots_[k - 1];
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += cr[j] * mu_fund[j];
    return s;
}

std::optional<IVec> RootSystem::simple_coords_of_fund(const IVec& fund) const {
    QMat c(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) c.at(i, j) = cartan_[i][j];
    QVec rhs(rank_);
    for (int i = 0; i < rank_; ++i) rhs[i] = fund[i];
    auto sol = solve(c, rhs);
    if (!sol) return std::nullopt;
    IVec out(rank_);
    for (int i = 0; i < rank_; ++i) {
        Rat v = (*sol)[i];
        v.canonicalize();
        if (v.get_den() != 1) return std::nullopt;
        out[i] = v.get_num().get_si();
    }
    return out;
}

int RootSystem::find_positive(const IVec& simple_coords) const {
    auto it = by_simple_.find(simple_coords);
    return it == by_simple_.end() ? 0 : it->second;
}

int RootSystem::find_signed(const IVec& simple_coords) const {
    bool nonneg = true, nonpos = true;
    for (long x : simple_coords) {
        if (x < 0) nonneg = false;
        if (x > 0) nonpos = false;
    }
    if (nonneg && !nonpos) return find_positive(simple_coords);
    if (nonpos && !nonneg) {
        IVec neg(simple_coords.size());
        for (size_t i = 0; i < simple_coords.size(); ++i) neg[i] = -simple_coords[i];
        int k = find_positive(neg);
        return k ? -k : 0;
    }
    return 0;
}

Int RootSystem::weyl_dim(const IVec& lambda) const {
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim: weight not dominant");
    QVec lam = ambient_of_weight(lambda);
    QVec lr = qvec_add(lam, rho_);
    Rat prod = 1;
    for (const Root& a : positive_) prod *= dot(lr, a.ambient) / dot(rho_, a.ambient);
    prod.canonicalize();
    if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
    return prod.get_num();
}

std::string RootSystem::describe() const {
    std::ostringstream os;
    os << series_ << rank_;
    return os.str();
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

int StructureConstants::sum_root(int a, int b) const {
    const Root& ra = rs_->root(std::abs(a));
    const Root& rb = rs_->root(std::abs(b));
    IVec s(ra.simple.size());
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = (a > 0 ? ra.simple[i] : -ra.simple[i]) + (b > 0 ? rb.simple[i] : -rb.simple[i]);
    return rs_->find_signed(s);
}

int StructureConstants::string_down(int a, int b) const {
    // max k such that b - k*a is a root
    const Root& ra = rs_->root(std::abs(a));
    const Root& rb = rs_->root(std::abs(b));
    IVec cur(ra.simple.size());
    for (size_t i = 0; i < cur.size(); ++i)
        cur[i] = (b > 0 ? rb.simple[i] : -rb.simple[i]);
    int k = 0;
    while (true) {
        for (size_t i = 0; i < cur.size(); ++i)
            cur[i] -= (a > 0 ? ra.simple[i] : -ra.simple[i]);
        if (rs_->find_signed(cur) == 0) break;
        ++k;
        if (k > 4) throw std::logic_error("root string too long");
    }
    return k;
}

StructureConstants::StructureConstants(const RootSystem* rs) : rs_(rs) {
    int nroots = rs_->num_positive();
    // Process sums by increasing canonical index (height-sorted), fixing the
    // extraspecial pair of each non-simple root and propagating signs.
    for (int g = 1; g <= nroots; ++g) {
        const Root& gamma = rs_->root(g);
        if (gamma.height == 1) continue;
        // special pairs (i, j): i < j canonical, alpha_i + alpha_j = gamma
        std::vector<std::pair<int, int>> special;
        for (int i = 1; i <= nroots; ++i) {
            IVec rest(gamma.simple.size());
            const Root& ri = rs_->root(i);
            bool ok = true;
            for (size_t c = 0; c < rest.size(); ++c) {
                rest[c] = gamma.simple[c] - ri.simple[c];
                if (rest[c] < 0) ok = false;
            }
            if (!ok) continue;
            int j = rs_->find_positive(rest);
            if (j > i) special.emplace_back(i, j);
        }
        if (special.empty()) throw std::logic_error("no special pair for a non-simple root");
        auto [a1, b1] = special.front();  // minimal first component = extraspecial
        pos_[{a1, b1}] = string_down(a1, b1) + 1;
        Rat len_g = rs_->root_len2(g);
        for (size_t s = 1; s < special.size(); ++s) {
            auto [a, b] = special[s];
            // Jacobi-type four-root relation on (a1, b1, -a, -b).
            Rat t2 = 0, t3 = 0;
            if (sum_root(b1, -a) != 0) {
                int d = sum_root(b1, -a);
                t2 = Rat(N(b1, -a)) * Rat(N(a1, -b)) / rs_->root_len2(std::abs(d));
            }
            if (sum_root(a1, -a) != 0) {
                int d = sum_root(a1, -a);
                t3 = Rat(N(-a, a1)) * Rat(N(b1, -b)) / rs_->root_len2(std::abs(d));
            }
            Rat val = (t2 + t3) * len_g / Rat(pos_[{a1, b1}]);
            pos_[{a, b}] = rat_to_long(val);
        }
    }
}

long StructureConstants::pos_pair(int i, int j) const {
    if (i < j) {
        auto it = pos_.find({i, j});
        if (it == pos_.end()) throw std::logic_error("pos_pair: not a root sum");
        return it->second;
    }
    return -pos_pair(j, i);
}

long StructureConstants::N(int a, int b) const {
    if (a > 0 && b > 0) return pos_pair(a, b);
    if (a < 0 && b < 0) return -N(-a, -b);
    if (a < 0) return -N(b, a);
    // a > 0, b < 0
    int beta = -b;
    int g = sum_root(a, b);
    if (g == 0) throw std::logic_error("N: sum not a root");
    if (g > 0) {
        // a = beta + g: N(a, -beta) = -N(beta,g) * |g|^2 / |a|^2
        Rat v = -Rat(pos_pair(beta, g)) * rs_->root_len2(g) / rs_->root_len2(a);
        return rat_to_long(v);
    } else {
        // beta = a + d, d = -g: N(a, -beta) = -N(a,d) * |d|^2 / |beta|^2
        int d = -g;
        Rat v = -Rat(pos_pair(a, d)) * rs_->root_len2(d) / rs_->root_len2(beta);
        return rat_to_long(v);
    }
}

bool StructureConstants::jacobi_holds(int max_triples) const {
    int N = rs_->num_positive();
    std::vector<int> all;
    for (int k = 1; k <= N; ++k) {
        all.push_back(k);
        all.push_back(-k);
    }
    long tested = 0;
    for (int a : all)
        for (int b : all)
            for (int c : all) {
                if (max_triples >= 0 && tested >= max_triples) return true;
                ++tested;
                LieElt ea = RootSystem::elt_root(a), eb = RootSystem::elt_root(b), ec = RootSystem::elt_root(c);
                LieElt j1 = rs_->bracket(rs_->bracket(ea, eb), ec);
                LieElt j2 = rs_->bracket(rs_->bracket(eb, ec), ea);
                LieElt j3 = rs_->bracket(rs_->bracket(ec, ea), eb);
                LieElt s;
                s.cartan.assign(rs_->rank(), Rat(0));
                for (const LieElt* p : {&j1, &j2, &j3}) {
                    for (auto& [k, v] : p->root_part) s.root_part[k] += v;
                    if (!p->cartan.empty())
                        for (int i = 0; i < rs_->rank(); ++i) s.cartan[i] += p->cartan[i];
                }
                if (!s.is_zero()) return false;
            }
    return true;
}

bool LieElt::is_zero() const {
    for (auto& [k, v] : root_part)
        if (v != 0) return false;
    for (auto& v : cartan)
        if (v != 0) return false;
    return true;
}

LieElt RootSystem::elt_root(int signed_idx, const Rat& c) {
    LieElt e;
    e.root_part[signed_idx] = c;
    return e;
}

LieElt RootSystem::bracket(const LieElt& x, const LieElt& y) const {
    LieElt r;
    r.cartan.assign(rank_, Rat(0));
    auto fund_of_signed = [&](int k, int i) -> long {
        const Root& rt = root(std::abs(k));
        return k > 0 ? rt.fund[i] : -rt.fund[i];
    };
    for (auto& [a, ca] : x.root_part) {
        if (ca == 0) continue;
        for (auto& [b, cb] : y.root_part) {
            if (cb == 0) continue;
            if (a == -b) {
                const IVec& cr = coroots_[std::abs(a) - 1];
                Rat f = ca * cb * (a > 0 ? 1 : -1);
                for (int i = 0; i < rank_; ++i) r.cartan[i] += f * Rat(cr[i]);
            } else {
                int s = sc_.sum_root(a, b);
                if (s != 0) r.root_part[s] += ca * cb * Rat(sc_.N(a, b));
            }
        }
    }
    if (!x.cartan.empty()) {
        for (auto& [b, cb] : y.root_part) {
            if (cb == 0) continue;
            Rat f = 0;
            for (int i = 0; i < rank_; ++i) f += x.cartan[i] * Rat(fund_of_signed(b, i));
            if (f != 0) r.root_part[b] += f * cb;
        }
    }
    if (!y.cartan.empty()) {
        for (auto& [a, ca] : x.root_part) {
            if (ca == 0) continue;
            Rat f = 0;
            for (int i = 0; i < rank_; ++i) f += y.cartan[i] * Rat(fund_of_signed(a, i));
            if (f != 0) r.root_part[a] -= f * ca;
        }
    }
    for (auto it = r.root_part.begin(); it != r.root_part.end();)
        it = it->second == 0 ? r.root_part.erase(it) : std::next(it);
    return r;
}

// ---------------------------------------------------------------------------
// Weyl dimension polynomial
// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[IVec(nvars, 0)] = c;
    return p;
}

Polynomial Polynomial::linear(int nvars, const QVec& coeffs, const Rat& c0) {
    Polynomial p(nvars);
    if (c0 != 0) p.terms_[IVec(nvars, 0)] = c0;
    for (int i = 0; i < nvars; ++i) {
        if (coeffs[i] == 0) continue;
        IVec m(nvars, 0);
        m[i] = 1;
        p.terms_[m] = coeffs[i];
    }
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            IVec m = m1 + m2;
            Rat& slot = r.terms_[m];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(m);
        }
    return r;
}

Rat Polynomial::evaluate(const IVec& point) const {
    Rat s = 0;
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (long k = 0; k < m[i]; ++k) t *= point[i];
        s += t;
    }
    return s;
}

long Polynomial::total_degree() const {
    long d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, sum(m));
    return d;
}

Polynomial weyl_dim_polynomial(const RootSystem& rs) {
    int n = rs.rank();
    Polynomial p = Polynomial::constant(n, 1);
    for (const Root& a : rs.positive_roots()) {
        Rat ra = dot(rs.rho(), a.ambient);
        QVec coeffs(n);
        for (int i = 0; i < n; ++i) coeffs[i] = dot(rs.fundamental_weight(i), a.ambient) / ra;
        p = p * Polynomial::linear(n, coeffs, 1);
    }
    return p;
}

}  // namespace sigbranch
