#pragma once

#include "sigbranch/rational.hpp"
#include "sigbranch/signature.hpp"

#include <string>
#include <vector>

namespace sigbranch {

// Declarative monomial order on exponent vectors, built as a cascade of
// addition-compatible stages:
//   lex     — lexicographic on an index block
//   deglex  — total degree on the block, then lex within it
//   sumlex  — lexicographic on derived coordinates, each the sum of the
//             exponents over an index range
// Any stage may be reversed. The cascade must be total: the union of the
// lex/deglex blocks has to cover every index.
struct OrderStage {
    enum Kind { Lex, Deglex, SumLex } kind;
    std::vector<int> indices;                    // 0-based display positions (lex/deglex)
    std::vector<std::pair<int, int>> ranges;     // inclusive ranges (sumlex)
    bool reversed = false;
};

class MonomialOrderSpec {
public:
    MonomialOrderSpec() = default;
    MonomialOrderSpec(std::string name, int n_vars, std::vector<OrderStage> stages);

    const std::string& name() const { return name_; }
    int n_vars() const { return n_vars_; }
    const std::vector<OrderStage>& stages() const { return stages_; }

    // -1 / 0 / +1 for p < q / p == q / p > q
    int compare_exponents(const IVec& p, const IVec& q) const;

    // comparison of signatures; rejects distinct highest weights
    int compare(const Signature& a, const Signature& b) const;

    bool less(const IVec& p, const IVec& q) const { return compare_exponents(p, q) < 0; }

    // named built-ins
    static MonomialOrderSpec deglex(int n);
    static MonomialOrderSpec bn_cascade(int n);    // short roots, then the +-eps_k blocks downward
    static MonomialOrderSpec b3_g2();              // graded, ties by reversed lex
    static MonomialOrderSpec f4_suffix_sums();     // suffix sums over the tail block, then deglex
    static MonomialOrderSpec an_cascade(int n);    // tail block first, then subalgebra blocks

    std::string serialize() const;
    static MonomialOrderSpec parse(const std::string& text);

private:
    std::string name_;
    int n_vars_ = 0;
    std::vector<OrderStage> stages_;

    void validate() const;
};

}  // namespace sigbranch
