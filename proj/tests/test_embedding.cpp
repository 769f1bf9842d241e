#include <doctest.h>

#include "sigbranch/embedding.hpp"

using namespace sigbranch;

namespace {

std::vector<int> g2_long_simples(const RootSystem& g2) {
    // long-root subsystem simple roots, in the order matching the printed
    // fundamental-weight labels: b2 first, then 3b1+b2
    return {g2.find_positive({0, 1}), g2.find_positive({3, 1})};
}

}  // namespace

TEST_CASE("regular embedding: long roots of G2 form A2") {
    auto g2 = RootSystem::build('G', 2);
    auto emb = make_regular_embedding(g2, 'A', 2, g2_long_simples(*g2));
    CHECK(emb.regular);
    CHECK(emb.sub_root_canonical.size() == 3);
    CHECK(emb.serre_check());
    // restriction of the two fundamental weights
    CHECK(emb.restrict_weight({1, 0}) == IVec{0, 1});  // 7-dim: omega_2 side of the pair
    CHECK(emb.restrict_weight({0, 1}) == IVec{1, 1});  // adjoint restricts to omega_1+omega_2
}

TEST_CASE("regular embedding: D subsystem of B") {
    for (int n : {2, 3}) {
        auto bn = RootSystem::build('B', n);
        std::vector<int> simples;
        for (int i = 0; i + 1 < n; ++i) {
            IVec c(n, 0);
            c[i] = 1;  // eps_i - eps_{i+1} is the i-th simple root of B_n
            simples.push_back(bn->simple_indices()[i]);
        }
        // eps_{n-1} + eps_n = beta_{n-1} + 2 beta_n
        IVec last(n, 0);
        if (n >= 2) {
            last[n - 2] = 1;
            last[n - 1] = 2;
        }
        simples.push_back(bn->find_positive(last));
        auto emb = make_regular_embedding(bn, 'D', n, simples);
        CHECK(emb.sub_root_canonical.size() == size_t(n * (n - 1)));
        CHECK(emb.serre_check());
    }
}

TEST_CASE("regular embedding: B4 inside F4") {
    auto f4 = RootSystem::build('F', 4);
    // simple roots eps1-eps2, eps2-eps3, eps3-eps4, eps4 located by ambient vectors
    auto find_amb = [&](QVec v) {
        for (int k = 1; k <= f4->num_positive(); ++k)
            if (f4->root(k).ambient == v) return k;
        return 0;
    };
    QVec e12(4, Rat(0)), e23(4, Rat(0)), e34(4, Rat(0)), e4(4, Rat(0));
    e12[0] = 1;
    e12[1] = -1;
    e23[1] = 1;
    e23[2] = -1;
    e34[2] = 1;
    e34[3] = -1;
    e4[3] = 1;
    std::vector<int> simples = {find_amb(e12), find_amb(e23), find_amb(e34), find_amb(e4)};
    for (int s : simples) CHECK(s > 0);
    auto emb = make_regular_embedding(f4, 'B', 4, simples);
    CHECK(emb.sub_root_canonical.size() == 16);
    CHECK(emb.serre_check());
    // the 26-dim fundamental restricts through the identity on the torus
    CHECK(emb.restrict_weight({1, 0, 0, 0}) == IVec{1, 0, 0, 0});
}

TEST_CASE("regular embedding rejects wrong type") {
    auto g2 = RootSystem::build('G', 2);
    // short simple + long simple do not span an A2
    std::vector<int> bad = {g2->find_positive({1, 0}), g2->find_positive({0, 1})};
    CHECK_THROWS(make_regular_embedding(g2, 'A', 2, bad));
}

TEST_CASE("identity embedding") {
    auto b3 = RootSystem::build('B', 3);
    auto emb = identity_embedding(b3);
    CHECK(emb.sub_root_canonical.size() == 9);
    CHECK(emb.restrict_weight({2, 1, 0}) == IVec{2, 1, 0});
}

TEST_CASE("the orthogonal embedding of the exceptional algebra") {
    auto b3 = RootSystem::build('B', 3);
    auto emb = build_g2_so7(b3);
    CHECK(emb.serre_check());
    CHECK_FALSE(emb.regular);
    // the 7-dim module restricts irreducibly: eps1 maps to the 7-dim
    // fundamental weight of the subalgebra
    CHECK(emb.restrict_weight({1, 0, 0}) == IVec{1, 0});
}

TEST_CASE("orthogonal embedding: torus alignment") {
    auto b3 = RootSystem::build('B', 3);
    auto emb = build_g2_so7(b3);
    // B3 fundamental coordinates of eps1, eps2, eps3
    IVec eps1 = {1, 0, 0};
    IVec eps2 = {-1, 1, 0};
    IVec eps3 = {0, -1, 2};
    IVec r1 = emb.restrict_weight(eps1);
    IVec r2 = emb.restrict_weight(eps2);
    IVec r3 = emb.restrict_weight(eps3);
    // images are the three positive short roots of the subalgebra in descending order
    auto g2 = emb.sub;
    CHECK(r1 == g2->root(g2->find_positive({2, 1})).fund);
    CHECK(r2 == g2->root(g2->find_positive({1, 1})).fund);
    CHECK(r3 == g2->root(g2->find_positive({1, 0})).fund);
}

TEST_CASE("embedding data file round trip") {
    auto b3 = RootSystem::build('B', 3);
    auto emb = build_g2_so7(b3);
    std::string text = embedding_to_text(emb);
    auto back = load_embedding(b3, text);
    CHECK(back.serre_check());
    CHECK(back.sub->series() == 'G');
    for (int i = 0; i < 2; ++i) {
        CHECK(back.e_img[i].root_part == emb.e_img[i].root_part);
        CHECK(back.f_img[i].root_part == emb.f_img[i].root_part);
    }
    // corrupt file: breaks [e1, f2] = 0
    std::string bad = text + "\ne1 E1 1\n";
    CHECK_THROWS(load_embedding(b3, bad));
}

TEST_CASE("identity data file accepted") {
    auto a2 = RootSystem::build('A', 2);
    auto emb = identity_embedding(a2);
    std::string text = embedding_to_text(emb);
    auto back = load_embedding(a2, text);
    CHECK(back.sub->series() == 'A');
    CHECK(back.restrict_weight({3, 4}) == IVec{3, 4});
}

TEST_CASE("generator images satisfy the subalgebra relations as operators") {
    auto b3 = RootSystem::build('B', 3);
    auto emb = build_g2_so7(b3);
    auto mod = HWModule::build(b3, {1, 0, 0});
    // assemble dense 7x7 matrices from the block maps
    std::vector<IVec> weights;
    std::map<IVec, int> index;
    for (auto& [mu, d] : mod->weight_dims()) {
        index[mu] = int(weights.size());
        weights.push_back(mu);
    }
    auto dense = [&](const LieElt& elt) {
        QMat m(7, 7);
        auto blocks = emb.operator_blocks(*mod, elt);
        for (auto& [mu, parts] : blocks.by_source)
            for (auto& [target, blk] : parts)
                m.at(index.at(target), index.at(mu)) = blk.at(0, 0);
        return m;
    };
    auto bracket = [](const QMat& a, const QMat& b) { return a * b - b * a; };
    QMat e1 = dense(emb.e_img[0]), e2 = dense(emb.e_img[1]);
    QMat f1 = dense(emb.f_img[0]), f2 = dense(emb.f_img[1]);
    CHECK(bracket(e1, f2).is_zero());
    CHECK(bracket(e2, f1).is_zero());
    // [h1, e2] = a_12 e2 with the subalgebra Cartan matrix
    QMat h1 = bracket(e1, f1), h2 = bracket(e2, f2);
    CHECK((bracket(h1, e2) - e2.scaled(Rat(emb.sub->cartan(0, 1)))).is_zero());
    CHECK((bracket(h2, e1) - e1.scaled(Rat(emb.sub->cartan(1, 0)))).is_zero());
    // Serre: (ad e1)^{1-a_12} e2 = 0 and (ad e2)^{1-a_21} e1 = 0
    QMat acc = e2;
    for (long k = 0; k < 1 - emb.sub->cartan(0, 1); ++k) acc = bracket(e1, acc);
    CHECK(acc.is_zero());
    acc = e1;
    for (long k = 0; k < 1 - emb.sub->cartan(1, 0); ++k) acc = bracket(e2, acc);
    CHECK(acc.is_zero());
}
