#pragma once

#include "sigbranch/linalg.hpp"
#include "sigbranch/rational.hpp"

#include <map>
#include <memory>
#include <string>

namespace sigbranch {

// A positive root with its coordinates in the three bases we use.
struct Root {
    QVec ambient;  // orthonormal ambient coordinates (exact rationals)
    IVec simple;   // coordinates over the simple roots
    IVec fund;     // pairings with the simple coroots
    long height = 0;
};

class RootSystem;

// Chevalley structure constants N(a,b) for [e_a, e_b] = N(a,b) e_{a+b},
// indexed by signed root indices: +k / -k refer to the k-th canonical
// positive root (1-based) and its negative. Signs fixed by the
// extraspecial-pair convention.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(const RootSystem* rs);

    // Signed index of a+b if it is a root, 0 otherwise (0 is never a root).
    int sum_root(int a, int b) const;

    // N(a,b); requires a+b to be a root.
    long N(int a, int b) const;

    // p-value of the alpha-string through beta: max{k : beta - k*alpha is a root}.
    int string_down(int a, int b) const;

    bool jacobi_holds(int max_triples = -1) const;

private:
    const RootSystem* rs_ = nullptr;
    // key: (i,j) canonical positive indices (1-based), i < j, alpha_i+alpha_j a root
    std::map<std::pair<int, int>, long> pos_;

    long pos_pair(int i, int j) const;
};

// An element of the Lie algebra in the Chevalley basis: root-vector part
// (signed root index -> coefficient) plus a Cartan part over the simple
// coroots h_1..h_n.
struct LieElt {
    std::map<int, Rat> root_part;
    QVec cartan;  // size = rank, may be empty meaning zero

    bool is_zero() const;
};

class RootSystem {
public:
    // series in {'A','B','C','D','E','F','G'}. display_order, if nonempty,
    // is a permutation of 1..N giving the canonical index of each display
    // position; the default display order is the canonical one
    // (height, then lex on simple-root coordinates).
    static std::shared_ptr<const RootSystem> build(char series, int rank,
                                                   const std::vector<int>& display_order = {});

    char series() const { return series_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }
    int num_positive() const { return int(positive_.size()); }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& root(int canonical) const { return positive_[canonical - 1]; }  // 1-based
    const QVec& simple_root(int i) const { return positive_[simple_[i] - 1].ambient; }
    const std::vector<int>& simple_indices() const { return simple_; }

    // display position (0-based) -> canonical index (1-based)
    const std::vector<int>& display() const { return display_; }
    int canonical_of_display(int pos) const { return display_[pos]; }
    int display_of_canonical(int canonical) const { return display_inv_[canonical - 1]; }

    // Cartan matrix entry <alpha_j, alpha_i^vee>.
    long cartan(int i, int j) const { return cartan_[i][j]; }

    const QVec& fundamental_weight(int i) const { return fundamental_[i]; }
    const QVec& rho() const { return rho_; }

    // ambient vector of a weight given in fundamental coordinates
    QVec ambient_of_weight(const IVec& fund) const;
    // fundamental coordinates of an ambient vector (pairing with coroots)
    IVec weight_of_ambient(const QVec& amb) const;

    // <mu, alpha^vee> for the canonical positive root index k.
    long coroot_pairing(const IVec& mu_fund, int k) const;

    // coroot of canonical root k over the simple coroots (integer)
    const IVec& coroot(int k) const { return coroots_[k - 1]; }

    Rat root_len2(int k) const { return dot(root(k).ambient, root(k).ambient); }

    // canonical index of a positive root given by simple coordinates, or 0
    int find_positive(const IVec& simple_coords) const;
    // signed index lookup for a (possibly negative) root in simple coords, or 0
    int find_signed(const IVec& simple_coords) const;

    bool is_dominant(const IVec& fund) const { return all_nonneg(fund); }

    // Simple-root coordinates of a vector given in fundamental coordinates;
    // nullopt when the solution is not integral (not in the root lattice).
    std::optional<IVec> simple_coords_of_fund(const IVec& fund) const;

    // Weyl dimension formula, exact.
    Int weyl_dim(const IVec& lambda_fund) const;

    const StructureConstants& constants() const { return sc_; }

    LieElt bracket(const LieElt& x, const LieElt& y) const;
    static LieElt elt_root(int signed_idx, const Rat& c = 1);

    std::string describe() const;

private:
    char series_;
    int rank_;
    int ambient_dim_;
    std::vector<QVec> simple_ambient_;
    std::vector<Root> positive_;
    std::vector<int> simple_;       // canonical indices of the simple roots
    std::vector<int> display_;      // display pos -> canonical (1-based)
    std::vector<int> display_inv_;  // canonical-1 -> display pos
    std::vector<IVec> cartan_;
    std::vector<QVec> fundamental_;
    std::vector<IVec> coroots_;
    QVec rho_;
    std::map<IVec, int> by_simple_;
    StructureConstants sc_;

    friend class StructureConstants;
    RootSystem() = default;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Multivariate polynomial with rational coefficients, used for the Weyl
// dimension polynomial in the fundamental coordinates t_1..t_n.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial linear(int nvars, const QVec& coeffs, const Rat& c0);

    Polynomial operator*(const Polynomial& o) const;
    Rat evaluate(const IVec& point) const;
    long total_degree() const;
    int nvars() const { return nvars_; }

private:
    int nvars_;
    std::map<IVec, Rat> terms_;
};

// dim V(lambda) as a polynomial in the fundamental coordinates.
Polynomial weyl_dim_polynomial(const RootSystem& rs);

}  // namespace sigbranch
