#include <doctest.h>

#include "sigbranch/semigroup.hpp"
#include "sigbranch/io.hpp"

using namespace sigbranch;

namespace {

GeneratorSet slice_generators(BranchingEngine& eng, const std::vector<IVec>& lams) {
    GeneratorSet gens;
    for (const IVec& lam : lams)
        for (const SliceEntry& e : eng.slice(lam).entries) gens.gens.push_back({e.sig, e.hw_sub});
    return gens;
}

}  // namespace

TEST_CASE("enumerate elements of a single-generator semigroup") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet gens;
    IVec p(6, 0);
    p[5] = 1;
    gens.gens.push_back({Signature({1, 0}, p), {1, 0}});
    auto elems = eng.elements_of_weight(gens, {2, 0});
    REQUIRE(elems.size() == 1);
    IVec two(6, 0);
    two[5] = 2;
    CHECK(*elems.begin() == two);
    CHECK(eng.elements_of_weight(gens, {1, 1}).empty());
}

TEST_CASE("long-root pair: elements and the collapse") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet gens = slice_generators(eng, {{1, 0}, {0, 1}});
    REQUIRE(gens.gens.size() == 6);
    // lambda = pi_2 gives exactly the three slice signatures
    auto e2 = eng.elements_of_weight(gens, {0, 1});
    CHECK(e2.size() == 3);
    // lambda = pi_1 + pi_2: nine formal sums collapse to eight elements
    auto e12 = eng.elements_of_weight(gens, {1, 1});
    CHECK(e12.size() == 8);
}

TEST_CASE("predicted dimension") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet gens = slice_generators(eng, {{1, 0}, {0, 1}});
    CHECK(eng.predicted_dimension(gens, {1, 0}) == 7);
    CHECK(eng.predicted_dimension(gens, {0, 1}) == 14);
    CHECK(eng.predicted_dimension(gens, IVec{0, 0}) == 1);
}

TEST_CASE("certify the long-root pair on the full simplex") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet gens = slice_generators(eng, {{1, 0}, {0, 1}});
    auto rep = eng.certify(gens, 6);
    CHECK(rep.verdict == CertificateReport::CertifiedOnSimplex);
    CHECK(rep.failures.empty());
    CHECK(rep.points_tested == 28);
}

TEST_CASE("empty generator set fails at every fundamental weight") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet empty;
    auto rep = eng.certify(empty, 1);
    CHECK(rep.verdict == CertificateReport::CounterexampleFound);
    REQUIRE(rep.failures.size() == 2);
    CHECK(rep.first_failures.size() == 2);
}

TEST_CASE("negative control: fundamental-only generators of the orthogonal pair") {
    BranchingEngine eng(make_pair_context("b3-g2"));
    GeneratorSet gens = slice_generators(eng, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(gens.gens.size() == 5);
    auto rep = eng.certify(gens, 2);
    CHECK(rep.verdict == CertificateReport::CounterexampleFound);
    std::vector<IVec> expect = {{1, 0, 1}, {1, 1, 0}};
    CHECK(rep.first_failures == expect);
}

TEST_CASE("discovery: long-root pair certifies in one pass") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    auto res = eng.discover({{1, 0}, {0, 1}}, 6);
    CHECK(res.iterations == 1);
    CHECK(res.added.empty());
    CHECK(res.gens.gens.size() == 6);
    CHECK(res.cert.verdict == CertificateReport::CertifiedOnSimplex);
}

TEST_CASE("discovery: orthogonal pair adds two weights") {
    BranchingEngine eng(make_pair_context("b3-g2"));
    auto res = eng.discover({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 9);
    CHECK(res.cert.verdict == CertificateReport::CertifiedOnSimplex);
    REQUIRE(res.added.size() == 2);
    CHECK(res.added[0] == IVec{1, 0, 1});
    CHECK(res.added[1] == IVec{1, 1, 0});
    CHECK(res.gens.gens.size() == 7);
}

TEST_CASE("discovery is idempotent") {
    BranchingEngine eng(make_pair_context("b3-g2"));
    auto res = eng.discover({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 6);
    std::vector<IVec> weights = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const IVec& a : res.added) weights.push_back(a);
    auto res2 = eng.discover(weights, 6);
    CHECK(res2.iterations == 1);
    CHECK(res2.added.empty());
    CHECK(res2.gens.gens.size() == res.gens.gens.size());
    for (const GenEntry& g : res.gens.gens) CHECK(res2.gens.contains(g.sig));
}

TEST_CASE("discovered generators reappear in their own slices") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    auto res = eng.discover({{1, 0}, {0, 1}}, 6);
    for (const GenEntry& g : res.gens.gens) {
        const BranchingSlice& s = eng.slice(g.sig.hw);
        bool found = false;
        for (const SliceEntry& e : s.entries)
            if (e.sig == g.sig && e.hw_sub == g.hw_sub) found = true;
        CHECK(found);
    }
}

TEST_CASE("multiplicity queries") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet gens = slice_generators(eng, {{1, 0}, {0, 1}});
    CHECK(eng.multiplicity(gens, {1, 0}, {1, 0}) == 1);
    CHECK(eng.multiplicity(gens, IVec{0, 0}, IVec{0, 0}) == 1);
    CHECK(eng.multiplicity(gens, {1, 0}, {5, 5}) == 0);
}

TEST_CASE("elements closed under relations") {
    BranchingEngine eng(make_pair_context("g2-a2"));
    GeneratorSet gens = slice_generators(eng, {{1, 0}, {0, 1}});
    // sigma_2 + sigma_5 and sigma_3 + sigma_4 give the same element
    auto by_hw = [&](const IVec& hw, const IVec& p) {
        for (auto& g : gens.gens)
            if (g.sig.hw == hw && g.sig.p == p) return g.sig;
        throw std::logic_error("generator not found");
    };
    IVec z(6, 0), p3(6, 0), p4(6, 0);
    p3[2] = 1;
    p4[3] = 1;
    Signature s2 = by_hw({1, 0}, z), s5 = by_hw({0, 1}, p3);
    Signature s3 = by_hw({1, 0}, p3), s4 = by_hw({0, 1}, z);
    CHECK(s2 + s5 == s3 + s4);
    auto elems = eng.elements_of_weight(gens, {1, 1});
    CHECK(elems.count((s2 + s5).p) == 1);
}

TEST_CASE("dominant simplex enumeration") {
    auto pts = dominant_simplex(2, 2);
    CHECK(pts.size() == 6);
    CHECK(pts.front() == IVec{0, 0});
    CHECK(sum(pts.back()) == 2);
}

TEST_CASE("predicted dimension from the shipped generator table") {
    auto golden = parse_golden(read_file(default_data_dir() + "/golden/f4-b4.txt"));
    BranchingEngine eng(make_pair_context("f4-b4"));
    GeneratorSet gens;
    for (auto& g : golden.gens) gens.gens.push_back(g);
    CHECK(eng.predicted_dimension(gens, {1, 0, 0, 0}) == 26);  // 9 + 16 + 1
    CHECK(eng.predicted_dimension(gens, {0, 0, 0, 1}) == 52);  // 36 + 16
    CHECK(eng.predicted_dimension(gens, {0, 1, 0, 0}) == 273);
}
