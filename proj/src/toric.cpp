#include "sigbranch/toric.hpp"

#include <algorithm>
#include <deque>

namespace sigbranch {

namespace {

// Pure difference binomials x^a - x^b over m+1 variables; position 0 is the
// saturation variable, eliminated at the end. Order: lexicographic, so any
// monomial containing the saturation variable dominates every one without.
struct Binomial {
    IVec lead, tail;
};

int lex_cmp(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool divides(const IVec& a, const IVec& b) {  // x^a | x^b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool orient(Binomial& g) {  // returns false if zero
    int c = lex_cmp(g.lead, g.tail);
    if (c == 0) return false;
    if (c < 0) std::swap(g.lead, g.tail);
    return true;
}

// reduce g against the basis; false when it reduces to zero
bool reduce_full(Binomial& g, const std::vector<Binomial>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Binomial& f : basis) {
            if (divides(f.lead, g.lead)) {
                // lead -> lead - f.lead + f.tail
                g.lead = g.lead - f.lead + f.tail;
                if (!orient(g)) return false;
                changed = true;
            }
        }
    }
    return true;
}

void reduce_tail(Binomial& g, const std::vector<Binomial>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Binomial& f : basis) {
            if (&f == &g) continue;
            if (divides(f.lead, g.tail)) {
                g.tail = g.tail - f.lead + f.tail;
                changed = true;
            }
        }
    }
}

IVec lcm_exp(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

SemigroupPresentation compute_relations(const RootSystem& g, const std::vector<GenEntry>& gens,
                                        long pair_budget) {
    SemigroupPresentation pres;
    pres.gens = gens;
    int m = int(gens.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (gens[i].sig == gens[j].sig)
                throw std::invalid_argument("compute_relations: duplicate generators");

    // signature vectors (highest weight coordinates + exponents)
    std::vector<IVec> rows(m);
    for (int i = 0; i < m; ++i) {
        rows[i] = gens[i].sig.hw;
        rows[i].insert(rows[i].end(), gens[i].sig.p.begin(), gens[i].sig.p.end());
    }
    std::vector<IVec> kernel = integer_kernel(rows);
    if (kernel.empty()) return pres;  // free: no relations

    int V = m + 1;  // variable 0 saturates
    std::vector<Binomial> basis;
    for (const IVec& u : kernel) {
        Binomial b;
        b.lead.assign(V, 0);
        b.tail.assign(V, 0);
        for (int i = 0; i < m; ++i) {
            if (u[i] > 0) b.lead[i + 1] = u[i];
            if (u[i] < 0) b.tail[i + 1] = -u[i];
        }
        if (orient(b)) basis.push_back(b);
    }
    {
        Binomial sat;
        sat.lead.assign(V, 1);  // t * x_1 ... x_m
        sat.tail.assign(V, 0);
        basis.push_back(sat);
    }

    // Buchberger queue
    std::deque<std::pair<int, int>> queue;
    for (int i = 0; i < int(basis.size()); ++i)
        for (int j = i + 1; j < int(basis.size()); ++j) queue.push_back({i, j});
    long processed = 0;
    while (!queue.empty()) {
        if (++processed > pair_budget) throw budget_exceeded("Groebner pair budget exceeded");
        auto [i, j] = queue.front();
        queue.pop_front();
        const Binomial& f = basis[i];
        const Binomial& h = basis[j];
        if (coprime(f.lead, h.lead)) continue;
        IVec L = lcm_exp(f.lead, h.lead);
        Binomial s;
        s.lead = L - f.lead + f.tail;
        s.tail = L - h.lead + h.tail;
        if (!orient(s)) continue;
        if (!reduce_full(s, basis)) continue;
        int k = int(basis.size());
        basis.push_back(s);
        for (int t = 0; t < k; ++t) queue.push_back({t, k});
    }

    // minimalize
    std::vector<Binomial> minimal;
    for (int i = 0; i < int(basis.size()); ++i) {
        bool redundant = false;
        for (int j = 0; j < int(basis.size()); ++j) {
            if (i == j) continue;
            if (divides(basis[j].lead, basis[i].lead) &&
                !(basis[j].lead == basis[i].lead && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    for (Binomial& b : minimal) reduce_tail(b, minimal);

    // eliminate the saturation variable
    std::vector<Binomial> elim;
    for (const Binomial& b : minimal)
        if (b.lead[0] == 0 && b.tail[0] == 0) elim.push_back(b);

    // emit, verify, sort ascending by leading monomial
    int n = g.rank(), N = g.num_positive();
    for (const Binomial& b : elim) {
        Relation r;
        r.u.assign(m, 0);
        r.w.assign(m, 0);
        for (int i = 0; i < m; ++i) {
            r.u[i] = b.lead[i + 1];
            r.w[i] = b.tail[i + 1];
        }
        IVec su(n + N, 0), sw(n + N, 0);
        for (int i = 0; i < m; ++i) {
            su += r.u[i] * rows[i];
            sw += r.w[i] * rows[i];
        }
        if (su != sw) throw std::logic_error("compute_relations: relation fails verification");
        for (int i = 0; i < m; ++i)
            if (r.u[i] > 0 && r.w[i] > 0)
                throw std::logic_error("compute_relations: reduced relation with shared support");
        pres.relations.push_back(std::move(r));
    }
    std::sort(pres.relations.begin(), pres.relations.end(),
              [](const Relation& a, const Relation& b) { return lex_cmp(a.u, b.u) < 0; });
    return pres;
}

}  // namespace sigbranch
