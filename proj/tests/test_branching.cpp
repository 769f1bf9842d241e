#include <doctest.h>

#include "sigbranch/branching.hpp"
#include "sigbranch/pairs.hpp"

using namespace sigbranch;

namespace {

Signature sig_at(const IVec& hw, int nvars, std::initializer_list<std::pair<int, long>> exps) {
    IVec p(nvars, 0);
    for (auto [pos, v] : exps) p[pos - 1] = v;  // 1-based positions
    return Signature(hw, p);
}

bool slice_has(const BranchingSlice& s, const Signature& sig, const IVec& hw_sub) {
    for (const SliceEntry& e : s.entries)
        if (e.sig == sig && e.hw_sub == hw_sub) return true;
    return false;
}

}  // namespace

TEST_CASE("trivial slice") {
    auto ctx = make_pair_context("g2-a2");
    auto mod = HWModule::build(ctx.g, {0, 0});
    auto slice = branching_slice(*mod, ctx.emb, ctx.order);
    REQUIRE(slice.entries.size() == 1);
    CHECK(slice.entries[0].hw_sub == IVec{0, 0});
    CHECK(is_zero(slice.entries[0].sig.p));
}

TEST_CASE("standard module of the long-root pair") {
    auto ctx = make_pair_context("g2-a2");
    auto mod = HWModule::build(ctx.g, {1, 0});
    auto slice = branching_slice(*mod, ctx.emb, ctx.order);
    REQUIRE(slice.entries.size() == 3);
    CHECK(slice_has(slice, sig_at({1, 0}, 6, {{6, 1}}), {1, 0}));  // omega1
    CHECK(slice_has(slice, sig_at({1, 0}, 6, {}), {0, 1}));        // omega2
    CHECK(slice_has(slice, sig_at({1, 0}, 6, {{3, 1}}), {0, 0}));  // trivial summand
}

TEST_CASE("adjoint module of the long-root pair") {
    auto ctx = make_pair_context("g2-a2");
    auto mod = HWModule::build(ctx.g, {0, 1});
    auto slice = branching_slice(*mod, ctx.emb, ctx.order);
    REQUIRE(slice.entries.size() == 3);
    CHECK(slice_has(slice, sig_at({0, 1}, 6, {}), {1, 1}));
    CHECK(slice_has(slice, sig_at({0, 1}, 6, {{3, 1}}), {1, 0}));
    CHECK(slice_has(slice, sig_at({0, 1}, 6, {{4, 1}}), {0, 1}));
}

TEST_CASE("orthogonal pair: fundamental slices") {
    auto ctx = make_pair_context("b3-g2");
    // pi_1 restricts irreducibly
    {
        auto mod = HWModule::build(ctx.g, {1, 0, 0});
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        REQUIRE(slice.entries.size() == 1);
        CHECK(slice_has(slice, sig_at({1, 0, 0}, 9, {}), {1, 0}));
    }
    // pi_2: omega_2 + omega_1
    {
        auto mod = HWModule::build(ctx.g, {0, 1, 0});
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        REQUIRE(slice.entries.size() == 2);
        CHECK(slice_has(slice, sig_at({0, 1, 0}, 9, {}), {0, 1}));
        CHECK(slice_has(slice, sig_at({0, 1, 0}, 9, {{6, 1}}), {1, 0}));
    }
    // pi_3: trivial + omega_1
    {
        auto mod = HWModule::build(ctx.g, {0, 0, 1});
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        REQUIRE(slice.entries.size() == 2);
        CHECK(slice_has(slice, sig_at({0, 0, 1}, 9, {}), {1, 0}));
        CHECK(slice_has(slice, sig_at({0, 0, 1}, 9, {{3, 1}}), {0, 0}));
    }
}

TEST_CASE("orthogonal pair: the two extra generators") {
    auto ctx = make_pair_context("b3-g2");
    {
        auto mod = HWModule::build(ctx.g, {1, 0, 1});
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        CHECK(slice_has(slice, sig_at({1, 0, 1}, 9, {{5, 1}}), {0, 1}));
    }
    {
        auto mod = HWModule::build(ctx.g, {1, 1, 0});
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        CHECK(slice_has(slice, sig_at({1, 1, 0}, 9, {{3, 1}}), {0, 1}));
    }
}

TEST_CASE("orthogonal series pairs: printed generator tables") {
    for (int n : {2, 3}) {
        auto ctx = make_pair_context("b" + std::to_string(n) + "-d" + std::to_string(n));
        int N = n * n;
        // omega_k for k = 1..n: sigma_{2k-1} = (omega_k; 0), sigma_{2k} = (omega_k; eps_k)
        for (int k = 1; k <= n; ++k) {
            IVec hw(n, 0);
            hw[k - 1] = 1;
            auto mod = HWModule::build(ctx.g, hw);
            auto slice = branching_slice(*mod, ctx.emb, ctx.order);
            REQUIRE(slice.entries.size() == 2);
            // hat-omega_k and omega_{k-1} in the subalgebra labels
            IVec hat(n, 0), low(n, 0);
            if (k <= n - 2)
                hat[k - 1] = 1;
            else if (k == n - 1) {
                hat[n - 2] = 1;
                hat[n - 1] = 1;
            } else {
                hat[n - 1] = 1;  // omega_n stays omega_n for the spin module
            }
            if (k >= 2) low[k - 2] = 1;
            if (k == n) {  // omega_{n-1} of the subalgebra
                low = IVec(n, 0);
                low[n - 2] = 1;
            }
            int eps_k_pos = n * (n - 1) + k;  // display position of eps_k (1-based)
            CHECK(slice_has(slice, sig_at(hw, N, {}), hat));
            CHECK(slice_has(slice, sig_at(hw, N, {{eps_k_pos, 1}}), low));
        }
        // 2*omega_n: three rows
        IVec hw(n, 0);
        hw[n - 1] = 2;
        auto mod = HWModule::build(ctx.g, hw);
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        REQUIRE(slice.entries.size() == 3);
        int eps_n_pos = n * n;
        IVec hat_n1(n, 0);
        hat_n1[n - 2] = 1;
        hat_n1[n - 1] = 1;
        IVec two_n1(n, 0);
        two_n1[n - 2] = 2;
        IVec two_n(n, 0);
        two_n[n - 1] = 2;
        CHECK(slice_has(slice, sig_at(hw, N, {{eps_n_pos, 1}}), hat_n1));
        CHECK(slice_has(slice, sig_at(hw, N, {{eps_n_pos, 2}}), two_n1));
        CHECK(slice_has(slice, sig_at(hw, N, {}), two_n));
    }
}

TEST_CASE("strip map and fixed points") {
    auto ctx = make_pair_context("b3-d3");
    Signature s({1, 0, 0}, {1, 0, 0, 0, 0, 0, 1, 0, 0});
    Signature t = strip_subalgebra_exponents(*ctx.g, ctx.emb, s);
    CHECK(t.p == IVec{0, 0, 0, 0, 0, 0, 1, 0, 0});
    Signature fixed({1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0});
    CHECK(strip_subalgebra_exponents(*ctx.g, ctx.emb, fixed) == fixed);
    auto g2 = make_pair_context("b3-g2");
    CHECK_THROWS(strip_subalgebra_exponents(*g2.g, g2.emb, s));
}

TEST_CASE("compatibility checks") {
    auto ctx = make_pair_context("b3-d3");
    auto rep = check_order_compatibility(*ctx.g, ctx.emb, ctx.order);
    CHECK(rep.roots_precede);
    CHECK(rep.order_respects_strip);
    CHECK(rep.pairs_tested > 0);

    // an ordering placing a complementary root first breaks condition (i)
    auto base = RootSystem::build('B', 3);
    auto perm = bn_display_order(*base);
    std::swap(perm.front(), perm.back());
    auto bad_rs = RootSystem::build('B', 3, perm);
    std::vector<int> simples;
    for (int i = 1; i < 3; ++i) {
        QVec v(3, Rat(0));
        v[i - 1] = 1;
        v[i] = -1;
        simples.push_back([&] {
            for (int k = 1; k <= 9; ++k)
                if (bad_rs->root(k).ambient == v) return k;
            return 0;
        }());
    }
    QVec w(3, Rat(0));
    w[1] = 1;
    w[2] = 1;
    simples.push_back([&] {
        for (int k = 1; k <= 9; ++k)
            if (bad_rs->root(k).ambient == w) return k;
        return 0;
    }());
    auto bad_emb = make_regular_embedding(bad_rs, 'D', 3, simples);
    auto bad_rep = check_order_compatibility(*bad_rs, bad_emb, MonomialOrderSpec::bn_cascade(3));
    CHECK_FALSE(bad_rep.roots_precede);
}

TEST_CASE("theorem route agrees with the direct route") {
    for (int n : {2, 3}) {
        auto ctx = make_pair_context("b" + std::to_string(n) + "-d" + std::to_string(n));
        std::vector<IVec> lams;
        for (int k = 0; k < n; ++k) {
            IVec hw(n, 0);
            hw[k] = 1;
            lams.push_back(hw);
        }
        IVec two(n, 0);
        two[n - 1] = 2;
        lams.push_back(two);
        for (const IVec& lam : lams) {
            auto mod = HWModule::build(ctx.g, lam);
            auto basis = essential_signatures(*mod, ctx.order);
            auto filtered = strip_filter_signatures(basis, ctx.emb, ctx.order);
            auto slice = branching_slice(*mod, ctx.emb, ctx.order);
            std::vector<Signature> direct;
            for (auto& e : slice.entries) direct.push_back(e.sig);
            std::sort(direct.begin(), direct.end());
            CHECK(filtered == direct);
        }
    }
}

TEST_CASE("filter rejects incompatible configurations") {
    auto ctx = make_pair_context("g2-a2");  // the shipped diagram order puts long roots late
    auto mod = HWModule::build(ctx.g, {1, 0});
    auto basis = essential_signatures(*mod, ctx.order);
    CHECK_THROWS(strip_filter_signatures(basis, ctx.emb, ctx.order));
}

TEST_CASE("identity embedding slices") {
    auto g = RootSystem::build('B', 2);
    auto emb = identity_embedding(g);
    auto ord = MonomialOrderSpec::deglex(4);
    auto mod = HWModule::build(g, {1, 1});
    auto slice = branching_slice(*mod, emb, ord);
    REQUIRE(slice.entries.size() == 1);
    CHECK(slice.entries[0].hw_sub == IVec{1, 1});
    CHECK(is_zero(slice.entries[0].sig.p));
}

TEST_CASE("dimension conservation across slices") {
    for (auto name : {"g2-a2", "b3-g2", "b3-d3", "a3-a2"}) {
        auto ctx = make_pair_context(name);
        IVec lam(ctx.g->rank(), 0);
        lam[0] = 1;
        if (ctx.g->rank() > 1) lam[1] = 1;
        auto mod = HWModule::build(ctx.g, lam);
        auto slice = branching_slice(*mod, ctx.emb, ctx.order);
        Int total = 0;
        for (auto& e : slice.entries) total += ctx.emb.sub->weyl_dim(e.hw_sub);
        CHECK(total == ctx.g->weyl_dim(lam));
    }
}

TEST_CASE("functional validity: annihilation is exact") {
    auto ctx = make_pair_context("g2-a2");
    auto mod = HWModule::build(ctx.g, {0, 1});
    auto entries = lowest_invariant_functionals(*mod, ctx.emb, ctx.order);
    for (int i = 0; i < ctx.emb.sub->rank(); ++i) {
        auto blocks = ctx.emb.operator_blocks(*mod, ctx.emb.f_img[i]);
        for (auto& e : entries) {
            // omega(f'_i x) = 0 for every basis vector x
            for (auto& [mu, parts] : blocks.by_source) {
                int d = mod->weight_dim(mu);
                for (int col = 0; col < d; ++col) {
                    Rat s = 0;
                    for (auto& [target, m] : parts) {
                        auto it = e.functional.find(target);
                        if (it == e.functional.end()) continue;
                        for (int t = 0; t < m.rows(); ++t)
                            if (m.at(t, col) != 0) s += it->second[t] * m.at(t, col);
                    }
                    CHECK(s == 0);
                }
            }
        }
    }
}

TEST_CASE("highest vector count oracle") {
    auto ctx = make_pair_context("g2-a2");
    auto mod = HWModule::build(ctx.g, {1, 0});
    CHECK(highest_vector_count(*mod, ctx.emb, {1, 0}) == 1);
    CHECK(highest_vector_count(*mod, ctx.emb, {0, 1}) == 1);
    CHECK(highest_vector_count(*mod, ctx.emb, {0, 0}) == 1);
    CHECK(highest_vector_count(*mod, ctx.emb, {2, 0}) == 0);
    auto b3 = make_pair_context("b3-g2");
    auto m8 = HWModule::build(b3.g, {0, 0, 1});
    CHECK(highest_vector_count(*m8, b3.emb, {1, 0}) == 1);
    CHECK(highest_vector_count(*m8, b3.emb, {0, 0}) == 1);
}

TEST_CASE("slices match the highest-vector oracle multiplicities") {
    auto ctx = make_pair_context("a3-a2");
    auto mod = HWModule::build(ctx.g, {1, 1, 0});
    auto slice = branching_slice(*mod, ctx.emb, ctx.order);
    std::map<IVec, long> mult;
    for (auto& e : slice.entries) ++mult[e.hw_sub];
    for (auto& [hw, m] : mult) CHECK(highest_vector_count(*mod, ctx.emb, hw) == m);
}

TEST_CASE("functional of a summand recovers its printed least term") {
    auto ctx = make_pair_context("g2-a2");
    auto mod = HWModule::build(ctx.g, {0, 1});
    auto basis = essential_signatures(*mod, ctx.order);
    auto slice = branching_slice(*mod, ctx.emb, ctx.order);
    for (const SliceEntry& e : slice.entries) {
        if (e.hw_sub != IVec{1, 0}) continue;  // the omega_1 summand
        // transfer the functional to values on the essential basis vectors
        std::map<IVec, QVec> values;
        for (auto& [mu, entries] : basis.by_weight) {
            QVec row(entries.size(), Rat(0));
            auto fit = e.functional.find(mu);
            if (fit != e.functional.end())
                for (size_t k = 0; k < entries.size(); ++k) {
                    Rat s = 0;
                    for (size_t t = 0; t < entries[k].vec.coords.size(); ++t)
                        s += fit->second[t] * entries[k].vec.coords[t];
                    row[k] = s;
                }
            values[mu] = row;
        }
        Signature got = signature_of_functional(basis, ctx.order, values);
        IVec p3(6, 0);
        p3[2] = 1;
        CHECK(got == Signature({0, 1}, p3));
    }
}

TEST_CASE("tail-order completion does not change the slices") {
    // the suffix-sum order is completed by a total tie-break; two different
    // completions must produce the same branching rows
    auto base = RootSystem::build('F', 4);
    auto g = RootSystem::build('F', 4, f4_display_order(*base));
    auto find4 = [&](int i, int j, int sign) {
        QVec v(4, Rat(0));
        v[i - 1] = 1;
        if (j) v[j - 1] = sign;
        for (int k = 1; k <= 24; ++k)
            if (g->root(k).ambient == v) return k;
        return 0;
    };
    std::vector<int> simples = {find4(1, 2, -1), find4(2, 3, -1), find4(3, 4, -1), find4(4, 0, 0)};
    auto emb = make_regular_embedding(g, 'B', 4, simples);

    OrderStage q{OrderStage::SumLex, {}, {}, false};
    for (int i = 1; i <= 8; ++i) q.ranges.push_back({16, 24 - i});
    std::vector<int> all;
    for (int i = 0; i < 24; ++i) all.push_back(i);
    MonomialOrderSpec with_deglex("f4-a", 24, {q, OrderStage{OrderStage::Deglex, all, {}, false}});
    MonomialOrderSpec with_revlex("f4-b", 24, {q, OrderStage{OrderStage::Lex, all, {}, true}});

    for (IVec lam : {IVec{1, 0, 0, 0}, IVec{0, 0, 0, 1}}) {
        auto mod = HWModule::build(g, lam);
        auto s1 = branching_slice(*mod, emb, with_deglex);
        auto s2 = branching_slice(*mod, emb, with_revlex);
        REQUIRE(s1.entries.size() == s2.entries.size());
        for (size_t i = 0; i < s1.entries.size(); ++i) {
            CHECK(s1.entries[i].sig == s2.entries[i].sig);
            CHECK(s1.entries[i].hw_sub == s2.entries[i].hw_sub);
        }
    }
}

TEST_CASE("permuting the subsystem block does not change the slices") {
    // the first sixteen roots may come in any order; the branching rows only
    // carry exponents on the complementary block
    auto base = RootSystem::build('F', 4);
    auto perm = f4_display_order(*base);
    std::reverse(perm.begin(), perm.begin() + 16);
    std::swap(perm[2], perm[9]);
    auto g = RootSystem::build('F', 4, perm);
    auto find4 = [&](int i, int j, int sign) {
        QVec v(4, Rat(0));
        v[i - 1] = 1;
        if (j) v[j - 1] = sign;
        for (int k = 1; k <= 24; ++k)
            if (g->root(k).ambient == v) return k;
        return 0;
    };
    std::vector<int> simples = {find4(1, 2, -1), find4(2, 3, -1), find4(3, 4, -1), find4(4, 0, 0)};
    auto emb = make_regular_embedding(g, 'B', 4, simples);
    auto ord = MonomialOrderSpec::f4_suffix_sums();
    auto ctx0 = make_pair_context("f4-b4");
    for (IVec lam : {IVec{1, 0, 0, 0}, IVec{0, 0, 0, 1}}) {
        auto mod = HWModule::build(g, lam);
        auto slice = branching_slice(*mod, emb, ord);
        auto mod0 = HWModule::build(ctx0.g, lam);
        auto slice0 = branching_slice(*mod0, ctx0.emb, ctx0.order);
        REQUIRE(slice.entries.size() == slice0.entries.size());
        for (size_t i = 0; i < slice.entries.size(); ++i) {
            CHECK(slice.entries[i].sig.p == slice0.entries[i].sig.p);
            CHECK(slice.entries[i].hw_sub == slice0.entries[i].hw_sub);
        }
    }
}
