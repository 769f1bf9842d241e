#include "sigbranch/order.hpp"

#include <sstream>
#include <stdexcept>

namespace sigbranch {

MonomialOrderSpec::MonomialOrderSpec(std::string name, int n_vars, std::vector<OrderStage> stages)
    : name_(std::move(name)), n_vars_(n_vars), stages_(std::move(stages)) {
    validate();
}

void MonomialOrderSpec::validate() const {
    std::vector<bool> covered(n_vars_, false);
    for (const OrderStage& s : stages_) {
        for (int i : s.indices) {
            if (i < 0 || i >= n_vars_) throw std::invalid_argument("order stage index out of range");
            if (s.kind != OrderStage::SumLex) covered[i] = true;
        }
        for (auto [a, b] : s.ranges)
            if (a < 0 || b >= n_vars_ || a > b) throw std::invalid_argument("order stage range invalid");
    }
    for (int i = 0; i < n_vars_; ++i)
        if (!covered[i]) throw std::invalid_argument("order cascade is not total: index uncovered");
}

int MonomialOrderSpec::compare_exponents(const IVec& p, const IVec& q) const {
    if (int(p.size()) != n_vars_ || int(q.size()) != n_vars_)
        throw std::invalid_argument("compare: exponent length mismatch");
    for (const OrderStage& s : stages_) {
        int c = 0;
        switch (s.kind) {
            case OrderStage::Lex: {
                for (int i : s.indices) {
                    if (p[i] != q[i]) {
                        c = p[i] < q[i] ? -1 : 1;
                        break;
                    }
                }
                break;
            }
            case OrderStage::Deglex: {
                long dp = 0, dq = 0;
                for (int i : s.indices) {
                    dp += p[i];
                    dq += q[i];
                }
                if (dp != dq) {
                    c = dp < dq ? -1 : 1;
                } else {
                    for (int i : s.indices) {
                        if (p[i] != q[i]) {
                            c = p[i] < q[i] ? -1 : 1;
                            break;
                        }
                    }
                }
                break;
            }
            case OrderStage::SumLex: {
                for (auto [a, b] : s.ranges) {
                    long dp = 0, dq = 0;
                    for (int i = a; i <= b; ++i) {
                        dp += p[i];
                        dq += q[i];
                    }
                    if (dp != dq) {
                        c = dp < dq ? -1 : 1;
                        break;
                    }
                }
                break;
            }
        }
        if (c != 0) return s.reversed ? -c : c;
    }
    return 0;
}

int MonomialOrderSpec::compare(const Signature& a, const Signature& b) const {
    if (a.hw != b.hw)
        throw std::invalid_argument("compare: signatures have different highest weights");
    return compare_exponents(a.p, b.p);
}

namespace {

std::vector<int> span(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

MonomialOrderSpec MonomialOrderSpec::deglex(int n) {
    OrderStage s{OrderStage::Deglex, span(0, n - 1), {}, false};
    return MonomialOrderSpec("deglex", n, {s});
}

MonomialOrderSpec MonomialOrderSpec::bn_cascade(int n) {
    int N = n * n;
    std::vector<OrderStage> st;
    st.push_back({OrderStage::Deglex, span(n * (n - 1), N - 1), {}, false});
    for (int k = n; k >= 2; --k) {
        int base = (k - 2) * (k - 1);
        // plus block, then minus block
        st.push_back({OrderStage::Deglex, span(base + k - 1, base + 2 * k - 3), {}, false});
        st.push_back({OrderStage::Deglex, span(base, base + k - 2), {}, false});
    }
    return MonomialOrderSpec("bn-cascade", N, st);
}

MonomialOrderSpec MonomialOrderSpec::b3_g2() {
    std::vector<OrderStage> st;
    st.push_back({OrderStage::SumLex, {}, {{0, 8}}, false});
    st.push_back({OrderStage::Lex, span(0, 8), {}, true});
    return MonomialOrderSpec("b3-g2", 9, st);
}

MonomialOrderSpec MonomialOrderSpec::f4_suffix_sums() {
    OrderStage q{OrderStage::SumLex, {}, {}, false};
    for (int i = 1; i <= 8; ++i) q.ranges.push_back({16, 24 - i});
    OrderStage tie{OrderStage::Deglex, span(0, 23), {}, false};
    return MonomialOrderSpec("f4-suffix-sums", 24, {q, tie});
}

MonomialOrderSpec MonomialOrderSpec::an_cascade(int n) {
    int N = n * (n + 1) / 2;
    int tail = n * (n - 1) / 2;
    std::vector<OrderStage> st;
    st.push_back({OrderStage::Deglex, span(tail, N - 1), {}, false});
    for (int k = n; k >= 2; --k) {
        int base = (k - 1) * (k - 2) / 2;
        st.push_back({OrderStage::Deglex, span(base, base + k - 2), {}, false});
    }
    return MonomialOrderSpec("an-cascade", N, st);
}

std::string MonomialOrderSpec::serialize() const {
    std::ostringstream os;
    os << "order " << name_ << " vars " << n_vars_ << "\n";
    for (const OrderStage& s : stages_) {
        os << "stage ";
        if (s.reversed) os << "rev ";
        switch (s.kind) {
            case OrderStage::Lex:
                os << "lex ";
                break;
            case OrderStage::Deglex:
                os << "deglex ";
                break;
            case OrderStage::SumLex:
                os << "sumlex ";
                break;
        }
        bool first = true;
        if (s.kind == OrderStage::SumLex) {
            for (auto [a, b] : s.ranges) {
                if (!first) os << ";";
                os << (a + 1) << "-" << (b + 1);
                first = false;
            }
        } else {
            for (int i : s.indices) {
                if (!first) os << ",";
                os << (i + 1);
                first = false;
            }
        }
        os << "\n";
    }
    return os.str();
}

MonomialOrderSpec MonomialOrderSpec::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string name;
    int nvars = 0;
    std::vector<OrderStage> stages;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "order") {
            ls >> name >> tok >> nvars;
        } else if (tok == "stage") {
            OrderStage s;
            std::string kind;
            ls >> kind;
            if (kind == "rev") {
                s.reversed = true;
                ls >> kind;
            }
            if (kind == "lex")
                s.kind = OrderStage::Lex;
            else if (kind == "deglex")
                s.kind = OrderStage::Deglex;
            else if (kind == "sumlex")
                s.kind = OrderStage::SumLex;
            else
                throw std::invalid_argument("unknown order stage kind: " + kind);
            std::string spec;
            ls >> spec;
            std::string cur;
            auto flush_item = [&](const std::string& item) {
                auto dash = item.find('-');
                if (dash == std::string::npos) {
                    int v = std::stoi(item) - 1;
                    if (s.kind == OrderStage::SumLex)
                        s.ranges.push_back({v, v});
                    else
                        s.indices.push_back(v);
                } else {
                    int a = std::stoi(item.substr(0, dash)) - 1;
                    int b = std::stoi(item.substr(dash + 1)) - 1;
                    if (s.kind == OrderStage::SumLex)
                        s.ranges.push_back({a, b});
                    else
                        for (int i = a; i <= b; ++i) s.indices.push_back(i);
                }
            };
            for (char ch : spec) {
                if (ch == ',' || ch == ';') {
                    if (!cur.empty()) flush_item(cur);
                    cur.clear();
                } else {
                    cur.push_back(ch);
                }
            }
            if (!cur.empty()) flush_item(cur);
            stages.push_back(std::move(s));
        }
    }
    if (nvars == 0) throw std::invalid_argument("order spec: missing 'order <name> vars <N>' line");
    return MonomialOrderSpec(name, nvars, stages);
}

}  // namespace sigbranch
