#include <doctest.h>

#include "sigbranch/essential.hpp"

#include <random>

using namespace sigbranch;

namespace {

// the G2 display ordering used for branching: long/short roots interleaved
// by angle, highest root first (see pairs.cpp for the same layout)
std::vector<int> g2_display(const RootSystem& rs) {
    // canonical roots sorted by height: b1, b2, b1+b2, 2b1+b2, 3b1+b2, 3b1+2b2
    // display: (3,2),(3,1),(2,1),(1,1),(0,1),(1,0) in simple coordinates
    std::vector<IVec> want = {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}, {1, 0}};
    std::vector<int> d;
    for (auto& w : want) d.push_back(rs.find_positive(w));
    return d;
}

}  // namespace

TEST_CASE("exponent enumeration") {
    auto g2 = RootSystem::build('G', 2);
    // target = alpha_3 = 2b1+b2: combos over the canonical display
    auto combos = enumerate_exponents(*g2, {2, 1}, 1000);
    // candidates: the root itself, b1+(b1+b2), 2*b1+b2
    CHECK(combos.size() == 3);
    auto zero = enumerate_exponents(*g2, {0, 0}, 1000);
    REQUIRE(zero.size() == 1);
    CHECK(is_zero(zero[0]));
    CHECK_THROWS_AS(enumerate_exponents(*g2, {6, 3}, 2), budget_exceeded);
}

TEST_CASE("essential signatures: sl2 strings are all essential") {
    auto a1 = RootSystem::build('A', 1);
    auto mod = HWModule::build(a1, {3});
    auto basis = essential_signatures(*mod, MonomialOrderSpec::deglex(1));
    CHECK(basis.total == 4);
    for (long p = 0; p <= 3; ++p) CHECK(basis.contains(Signature({3}, {p})));
}

TEST_CASE("trivial module has the zero signature only") {
    auto g2 = RootSystem::build('G', 2);
    auto mod = HWModule::build(g2, {0, 0});
    auto basis = essential_signatures(*mod, MonomialOrderSpec::deglex(6));
    CHECK(basis.total == 1);
    CHECK(basis.contains(Signature({0, 0}, IVec(6, 0))));
}

TEST_CASE("G2 standard module essentials") {
    auto base = RootSystem::build('G', 2);
    auto g2 = RootSystem::build('G', 2, g2_display(*base));
    auto mod = HWModule::build(g2, {1, 0});
    auto ord = MonomialOrderSpec::deglex(6);
    auto basis = essential_signatures(*mod, ord);
    CHECK(basis.total == 7);
    IVec p0(6, 0);
    CHECK(basis.contains(Signature({1, 0}, p0)));
    IVec p3(6, 0);
    p3[2] = 1;
    CHECK(basis.contains(Signature({1, 0}, p3)));
    IVec p6(6, 0);
    p6[5] = 1;
    CHECK(basis.contains(Signature({1, 0}, p6)));
    // per-weight counts match the weight multiplicities
    for (auto& [mu, entries] : basis.by_weight) CHECK(int(entries.size()) == mod->weight_dim(mu));
}

TEST_CASE("essential count equals dimension") {
    struct Case {
        char s;
        int r;
        IVec lam;
    };
    for (const Case& c : {Case{'B', 2, {1, 1}}, Case{'A', 2, {1, 1}}, Case{'G', 2, {0, 1}},
                          Case{'B', 3, {0, 0, 2}}}) {
        auto rs = RootSystem::build(c.s, c.r);
        auto mod = HWModule::build(rs, c.lam);
        auto basis = essential_signatures(*mod, MonomialOrderSpec::deglex(rs->num_positive()));
        CHECK(basis.total == mod->dim());
        for (auto& [mu, entries] : basis.by_weight) {
            CHECK(Int(entries.size()) == freudenthal_multiplicity(*rs, c.lam, mu));
        }
    }
}

TEST_CASE("additivity: sums of essential signatures are essential") {
    auto rs = RootSystem::build('A', 2);
    auto ord = MonomialOrderSpec::deglex(3);
    auto m1 = HWModule::build(rs, {1, 0});
    auto m2 = HWModule::build(rs, {0, 1});
    auto b1 = essential_signatures(*m1, ord);
    auto b2 = essential_signatures(*m2, ord);
    auto m12 = HWModule::build(rs, {1, 1});
    auto b12 = essential_signatures(*m12, ord);
    for (auto& [mu1, e1] : b1.by_weight)
        for (auto& s1 : e1)
            for (auto& [mu2, e2] : b2.by_weight)
                for (auto& s2 : e2) CHECK(b12.contains(s1.sig + s2.sig));
}

TEST_CASE("additivity sampled on G2") {
    auto base = RootSystem::build('G', 2);
    auto g2 = RootSystem::build('G', 2, g2_display(*base));
    auto ord = MonomialOrderSpec::deglex(6);
    auto m1 = HWModule::build(g2, {1, 0});
    auto b1 = essential_signatures(*m1, ord);
    auto m11 = HWModule::build(g2, {2, 0});
    auto b11 = essential_signatures(*m11, ord);
    std::mt19937 rng(99);
    std::vector<const EssentialEntry*> flat;
    for (auto& [mu, es] : b1.by_weight)
        for (auto& e : es) flat.push_back(&e);
    for (int t = 0; t < 100; ++t) {
        auto& x = *flat[rng() % flat.size()];
        auto& y = *flat[rng() % flat.size()];
        CHECK(b11.contains(x.sig + y.sig));
    }
}

TEST_CASE("rescaling lowering operators leaves the essential set unchanged") {
    auto base = RootSystem::build('G', 2);
    auto g2 = RootSystem::build('G', 2, g2_display(*base));
    auto ord = MonomialOrderSpec::deglex(6);
    for (IVec lam : {IVec{1, 0}, IVec{0, 1}}) {
        auto mod = HWModule::build(g2, lam);
        auto b0 = essential_signatures(*mod, ord);
        std::vector<Rat> scale = {Rat(2), Rat(1, 3), Rat(5), Rat(7, 2), Rat(1), Rat(-3)};
        auto mod2 = mod->rescaled_lowering(scale);
        auto b1 = essential_signatures(*mod2, ord);
        CHECK(b0.total == b1.total);
        for (auto& [mu, es] : b0.by_weight)
            for (auto& e : es) CHECK(b1.contains(e.sig));
    }
    auto b3 = RootSystem::build('B', 3);
    auto ord9 = MonomialOrderSpec::deglex(9);
    auto mod = HWModule::build(b3, {1, 0, 0});
    auto b0 = essential_signatures(*mod, ord9);
    std::vector<Rat> scale(9, Rat(1));
    scale[0] = Rat(3, 7);
    scale[4] = Rat(-2);
    scale[8] = Rat(11);
    auto b1 = essential_signatures(*mod->rescaled_lowering(scale), ord9);
    for (auto& [mu, es] : b0.by_weight)
        for (auto& e : es) CHECK(b1.contains(e.sig));
}

TEST_CASE("signature_of_functional") {
    auto a1 = RootSystem::build('A', 1);
    auto mod = HWModule::build(a1, {2});
    auto ord = MonomialOrderSpec::deglex(1);
    auto basis = essential_signatures(*mod, ord);
    // functional vanishing on all basis vectors except v(sigma0)
    Signature sigma0({2}, {1});
    std::map<IVec, QVec> vals;
    for (auto& [mu, es] : basis.by_weight) {
        QVec row(es.size(), Rat(0));
        for (size_t k = 0; k < es.size(); ++k)
            if (es[k].sig == sigma0) row[k] = 1;
        vals[mu] = row;
    }
    CHECK(signature_of_functional(basis, ord, vals) == sigma0);
    // the dual of the greatest essential vector returns the greatest signature
    auto sorted = basis.sorted(ord);
    const Signature& top = sorted.back()->sig;
    std::map<IVec, QVec> vals2;
    for (auto& [mu, es] : basis.by_weight) {
        QVec row(es.size(), Rat(0));
        for (size_t k = 0; k < es.size(); ++k)
            if (es[k].sig == top) row[k] = 1;
        vals2[mu] = row;
    }
    CHECK(signature_of_functional(basis, ord, vals2) == top);
    // zero functional rejected
    std::map<IVec, QVec> zero;
    for (auto& [mu, es] : basis.by_weight) zero[mu] = QVec(es.size(), Rat(0));
    CHECK_THROWS(signature_of_functional(basis, ord, zero));
}
