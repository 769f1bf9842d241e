#include "sigbranch/pairs.hpp"

#include <sstream>
#include <stdexcept>

namespace sigbranch {

namespace {

int find_by_ambient(const RootSystem& rs, const QVec& v) {
    for (int k = 1; k <= rs.num_positive(); ++k)
        if (rs.root(k).ambient == v) return k;
    throw std::logic_error("find_by_ambient: no such root");
}

QVec eps(int dim, int i, Rat c = 1) {
    QVec v(dim, Rat(0));
    v[i - 1] = c;
    return v;
}

QVec eps_pm(int dim, int i, int j, int sign) {
    QVec v(dim, Rat(0));
    v[i - 1] = 1;
    v[j - 1] = sign;
    return v;
}

}  // namespace

std::vector<int> g2_display_order(const RootSystem& rs) {
    // long/short alternating by angle: 3b1+2b2, 3b1+b2, 2b1+b2, b1+b2, b2, b1
    std::vector<IVec> want = {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}, {1, 0}};
    std::vector<int> d;
    for (auto& w : want) d.push_back(rs.find_positive(w));
    return d;
}

std::vector<int> bn_display_order(const RootSystem& rs) {
    int n = rs.rank();
    std::vector<int> d;
    for (int k = 2; k <= n; ++k) {
        for (int i = 1; i < k; ++i) d.push_back(find_by_ambient(rs, eps_pm(n, i, k, -1)));
        for (int i = 1; i < k; ++i) d.push_back(find_by_ambient(rs, eps_pm(n, i, k, +1)));
    }
    for (int i = 1; i <= n; ++i) d.push_back(find_by_ambient(rs, eps(n, i)));
    return d;
}

std::vector<int> b3_g2_display_order(const RootSystem& rs) {
    std::vector<QVec> want = {eps_pm(3, 1, 2, +1), eps_pm(3, 1, 3, +1), eps_pm(3, 2, 3, +1),
                              eps(3, 1),           eps(3, 3),           eps(3, 2),
                              eps_pm(3, 1, 3, -1), eps_pm(3, 2, 3, -1), eps_pm(3, 1, 2, -1)};
    std::vector<int> d;
    for (auto& w : want) d.push_back(find_by_ambient(rs, w));
    return d;
}

std::vector<int> f4_display_order(const RootSystem& rs) {
    // integer-coordinate roots first (the orthogonal subsystem, canonical
    // order among themselves), then the eight half-sum roots as printed
    std::vector<int> d;
    for (int k = 1; k <= rs.num_positive(); ++k) {
        bool integral = true;
        for (const Rat& c : rs.root(k).ambient)
            if (c.get_den() != 1) integral = false;
        if (integral) d.push_back(k);
    }
    if (d.size() != 16) throw std::logic_error("f4 ordering: expected 16 integral roots");
    auto half = [&](int s2, int s3, int s4) {
        QVec v(4);
        v[0] = Rat(1, 2);
        v[1] = Rat(s2, 2);
        v[2] = Rat(s3, 2);
        v[3] = Rat(s4, 2);
        return find_by_ambient(rs, v);
    };
    d.push_back(half(+1, +1, +1));
    d.push_back(half(+1, +1, -1));
    d.push_back(half(+1, -1, -1));
    d.push_back(half(+1, -1, +1));
    d.push_back(half(-1, +1, -1));
    d.push_back(half(-1, +1, +1));
    d.push_back(half(-1, -1, +1));
    d.push_back(half(-1, -1, -1));
    return d;
}

std::vector<int> an_display_order(const RootSystem& rs) {
    int n = rs.rank();
    std::vector<int> d;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i) d.push_back(find_by_ambient(rs, eps_pm(n + 1, i, k, -1)));
    for (int i = 1; i <= n; ++i) d.push_back(find_by_ambient(rs, eps_pm(n + 1, i, n + 1, -1)));
    return d;
}

PairContext make_pair_context(const std::string& name) {
    PairContext ctx;
    ctx.name = name;
    if (name == "g2-a2") {
        auto base = RootSystem::build('G', 2);
        ctx.g = RootSystem::build('G', 2, g2_display_order(*base));
        ctx.order = MonomialOrderSpec::deglex(6);
        // subsystem of long roots; simple roots ordered so thesigma tables
        // carry the printed fundamental-weight labels
        std::vector<int> simples = {ctx.g->find_positive({0, 1}), ctx.g->find_positive({3, 1})};
        ctx.emb = make_regular_embedding(ctx.g, 'A', 2, simples);
        return ctx;
    }
    if (name == "b3-g2") {
        auto base = RootSystem::build('B', 3);
        ctx.g = RootSystem::build('B', 3, b3_g2_display_order(*base));
        ctx.order = MonomialOrderSpec::b3_g2();
        ctx.emb = build_g2_so7(ctx.g);
        return ctx;
    }
    if (name == "f4-b4") {
        auto base = RootSystem::build('F', 4);
        ctx.g = RootSystem::build('F', 4, f4_display_order(*base));
        ctx.order = MonomialOrderSpec::f4_suffix_sums();
        auto find4 = [&](QVec v) { return find_by_ambient(*ctx.g, v); };
        std::vector<int> simples = {find4(eps_pm(4, 1, 2, -1)), find4(eps_pm(4, 2, 3, -1)),
                                    find4(eps_pm(4, 3, 4, -1)), find4(eps(4, 4))};
        ctx.emb = make_regular_embedding(ctx.g, 'B', 4, simples);
        return ctx;
    }
    if (name.size() >= 5 && name[0] == 'b' && name.find("-d") != std::string::npos) {
        int n = std::stoi(name.substr(1, name.find("-d") - 1));
        int m = std::stoi(name.substr(name.find("-d") + 2));
        if (m != n) throw std::invalid_argument("pair " + name + ": ranks must agree");
        auto base = RootSystem::build('B', n);
        ctx.g = RootSystem::build('B', n, bn_display_order(*base));
        ctx.order = MonomialOrderSpec::bn_cascade(n);
        std::vector<int> simples;
        for (int i = 1; i < n; ++i)
            simples.push_back(find_by_ambient(*ctx.g, eps_pm(n, i, i + 1, -1)));
        simples.push_back(find_by_ambient(*ctx.g, eps_pm(n, n - 1, n, +1)));
        ctx.emb = make_regular_embedding(ctx.g, 'D', n, simples);
        return ctx;
    }
    if (name.size() >= 5 && name[0] == 'a' && name.find("-a") != std::string::npos) {
        int n = std::stoi(name.substr(1, name.find("-a") - 1));
        int m = std::stoi(name.substr(name.find("-a") + 2));
        if (m != n - 1) throw std::invalid_argument("pair " + name + ": expected corank one");
        auto base = RootSystem::build('A', n);
        ctx.g = RootSystem::build('A', n, an_display_order(*base));
        ctx.order = MonomialOrderSpec::an_cascade(n);
        std::vector<int> simples;
        for (int i = 0; i < n - 1; ++i)
            simples.push_back(find_by_ambient(*ctx.g, eps_pm(n + 1, i + 1, i + 2, -1)));
        ctx.emb = make_regular_embedding(ctx.g, 'A', n - 1, simples);
        return ctx;
    }
    throw std::invalid_argument("unknown pair: " + name);
}

PairContext pair_from_descriptor(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos) return make_pair_context(descriptor);
    std::string gstr = descriptor.substr(0, colon);
    std::string hstr = descriptor.substr(colon + 1);
    auto lower = [](std::string s) {
        for (char& c : s) c = char(tolower(c));
        return s;
    };
    std::string g = lower(gstr), h = lower(hstr);
    if (g == "g2" && h == "a2") return make_pair_context("g2-a2");
    if (g == "b3" && h == "g2") return make_pair_context("b3-g2");
    if (g == "f4" && h == "b4") return make_pair_context("f4-b4");
    if (g.size() >= 2 && g[0] == 'b' && h.size() >= 2 && h[0] == 'd')
        return make_pair_context("b" + g.substr(1) + "-d" + h.substr(1));
    if (g.size() >= 2 && g[0] == 'a' && h.size() >= 2 && h[0] == 'a')
        return make_pair_context("a" + g.substr(1) + "-a" + h.substr(1));
    throw std::invalid_argument("unknown pair descriptor: " + descriptor);
}

AlgebraContext make_algebra_context(const std::string& algebra, const std::string& order_name) {
    if (algebra.size() < 2) throw std::invalid_argument("algebra descriptor too short");
    char series = char(toupper(algebra[0]));
    int rank = std::stoi(algebra.substr(1));
    AlgebraContext ctx;
    if (order_name.empty() || order_name == "deglex") {
        ctx.rs = RootSystem::build(series, rank);
        ctx.order = MonomialOrderSpec::deglex(ctx.rs->num_positive());
    } else if (order_name == "g2-default") {
        if (series != 'G') throw std::invalid_argument("g2-default applies to G2 only");
        auto base = RootSystem::build('G', 2);
        ctx.rs = RootSystem::build('G', 2, g2_display_order(*base));
        ctx.order = MonomialOrderSpec::deglex(6);
    } else if (order_name == "bn-cascade") {
        if (series != 'B') throw std::invalid_argument("bn-cascade applies to B series only");
        auto base = RootSystem::build('B', rank);
        ctx.rs = RootSystem::build('B', rank, bn_display_order(*base));
        ctx.order = MonomialOrderSpec::bn_cascade(rank);
    } else if (order_name == "b3-g2") {
        auto base = RootSystem::build('B', 3);
        ctx.rs = RootSystem::build('B', 3, b3_g2_display_order(*base));
        ctx.order = MonomialOrderSpec::b3_g2();
    } else if (order_name == "f4-suffix-sums") {
        auto base = RootSystem::build('F', 4);
        ctx.rs = RootSystem::build('F', 4, f4_display_order(*base));
        ctx.order = MonomialOrderSpec::f4_suffix_sums();
    } else if (order_name == "an-cascade") {
        auto base = RootSystem::build('A', rank);
        ctx.rs = RootSystem::build('A', rank, an_display_order(*base));
        ctx.order = MonomialOrderSpec::an_cascade(rank);
    } else {
        throw std::invalid_argument("unknown order name: " + order_name);
    }
    return ctx;
}

}  // namespace sigbranch
