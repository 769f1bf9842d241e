#include "sigbranch/embedding.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sigbranch {

IVec Embedding::restrict_weight(const IVec& mu_fund) const {
    IVec out(sub->rank());
    for (int i = 0; i < sub->rank(); ++i) {
        Rat s = 0;
        for (int j = 0; j < ambient->rank(); ++j) s += restriction.at(i, j) * Rat(mu_fund[j]);
        out[i] = rat_to_long(s);
    }
    return out;
}

bool Embedding::is_sub_root(int canonical) const {
    return std::find(sub_root_canonical.begin(), sub_root_canonical.end(), canonical) !=
           sub_root_canonical.end();
}

bool Embedding::serre_check() const {
    int r = sub->rank();
    const RootSystem& g = *ambient;
    auto is_cartan_only = [&](const LieElt& x) { return x.root_part.empty(); };
    for (int i = 0; i < r; ++i) {
        LieElt h = g.bracket(e_img[i], f_img[i]);
        if (!is_cartan_only(h)) return false;
        for (int j = 0; j < r; ++j) {
            // [h_i, e_j] = a_ij e_j with a_ij = <gamma_j, gamma_i^vee>
            LieElt lhs = g.bracket(h, e_img[j]);
            LieElt rhs = e_img[j];
            for (auto& [k, c] : rhs.root_part) c *= Rat(sub->cartan(i, j));
            LieElt diff = lhs;
            for (auto& [k, c] : rhs.root_part) diff.root_part[k] -= c;
            if (!diff.is_zero()) return false;
            if (i != j) {
                if (!g.bracket(e_img[i], f_img[j]).is_zero()) return false;
                // (ad e_i)^{1-a_ij}(e_j) = 0 and the same for f
                long a = sub->cartan(i, j);
                LieElt acc = e_img[j];
                for (long k = 0; k < 1 - a; ++k) acc = g.bracket(e_img[i], acc);
                if (!acc.is_zero()) return false;
                acc = f_img[j];
                for (long k = 0; k < 1 - a; ++k) acc = g.bracket(f_img[i], acc);
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

Embedding::MixedBlocks Embedding::operator_blocks(const HWModule& mod, const LieElt& elt) const {
    MixedBlocks out;
    const RootSystem& g = *ambient;
    for (auto& [mu, d] : mod.weight_dims()) {
        // group root-part contributions by target weight
        std::map<IVec, QMat> partial;
        for (auto& [s, c] : elt.root_part) {
            if (c == 0) continue;
            const QMat* b = mod.block(s, mu);
            if (!b) continue;
            IVec f = g.root(std::abs(s)).fund;
            if (s < 0)
                for (auto& x : f) x = -x;
            IVec target = mu + f;
            auto it = partial.find(target);
            if (it == partial.end())
                partial[target] = b->scaled(c);
            else
                it->second = it->second + b->scaled(c);
        }
        if (!elt.cartan.empty()) {
            Rat diag = 0;
            for (int i = 0; i < g.rank(); ++i) diag += elt.cartan[i] * Rat(mu[i]);
            if (diag != 0) {
                auto it = partial.find(mu);
                QMat id(d, d);
                for (int t = 0; t < d; ++t) id.at(t, t) = diag;
                if (it == partial.end())
                    partial[mu] = id;
                else
                    it->second = it->second + id;
            }
        }
        std::vector<std::pair<IVec, QMat>> parts;
        for (auto& [target, m] : partial)
            if (!m.is_zero()) parts.emplace_back(target, std::move(m));
        if (!parts.empty()) out.by_source[mu] = std::move(parts);
    }
    return out;
}

Embedding make_regular_embedding(RootSystemPtr g, char sub_series, int sub_rank,
                                 const std::vector<int>& sub_simple) {
    Embedding emb;
    emb.ambient = g;
    emb.regular = true;
    if (int(sub_simple.size()) != sub_rank)
        throw std::invalid_argument("regular embedding: simple root count mismatch");
    emb.sub = RootSystem::build(sub_series, sub_rank);
    // geometric Cartan matrix of the chosen simple roots must match the type
    for (int i = 0; i < sub_rank; ++i) {
        const Root& ri = g->root(sub_simple[i]);
        Rat len2 = dot(ri.ambient, ri.ambient);
        for (int j = 0; j < sub_rank; ++j) {
            const Root& rj = g->root(sub_simple[j]);
            Rat a = 2 * dot(ri.ambient, rj.ambient) / len2;
            if (a != Rat(emb.sub->cartan(i, j)))
                throw std::invalid_argument(
                    "regular embedding: root subset does not realize the declared type");
        }
    }
    // closure of the subsystem inside the ambient root set
    std::vector<int> members;
    {
        std::vector<IVec> frontier;
        std::map<IVec, bool> seen;
        for (int i = 0; i < sub_rank; ++i) {
            frontier.push_back(g->root(sub_simple[i]).simple);
            seen[frontier.back()] = true;
        }
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const IVec& a : frontier)
                for (int i = 0; i < sub_rank; ++i) {
                    IVec s = a + g->root(sub_simple[i]).simple;
                    int k = g->find_positive(s);
                    if (k && !seen.count(s)) {
                        seen[s] = true;
                        next.push_back(s);
                    }
                }
            frontier = std::move(next);
        }
        for (auto& [s, unused] : seen) members.push_back(g->find_positive(s));
        std::sort(members.begin(), members.end());
    }
    if (int(members.size()) != emb.sub->num_positive())
        throw std::invalid_argument("regular embedding: subsystem has wrong positive root count");
    emb.sub_root_canonical = std::move(members);

    for (int i = 0; i < sub_rank; ++i) {
        emb.e_img.push_back(RootSystem::elt_root(sub_simple[i]));
        emb.f_img.push_back(RootSystem::elt_root(-sub_simple[i]));
        emb.h_img.push_back(g->bracket(emb.e_img.back(), emb.f_img.back()));
    }
    emb.restriction = QMat(sub_rank, g->rank());
    for (int i = 0; i < sub_rank; ++i) {
        const IVec& cr = g->coroot(sub_simple[i]);
        for (int j = 0; j < g->rank(); ++j) emb.restriction.at(i, j) = cr[j];
    }
    if (!emb.serre_check()) throw std::logic_error("regular embedding: Serre check failed");
    return emb;
}

Embedding identity_embedding(RootSystemPtr g) {
    std::vector<int> simples = g->simple_indices();
    return make_regular_embedding(g, g->series(), g->rank(), simples);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string embedding_to_text(const Embedding& emb) {
    std::ostringstream os;
    os << "# subalgebra embedding data\n";
    os << "# ambient basis labels: E<k>/F<k> with k the canonical positive root index,\n";
    os << "# H<j> the j-th simple coroot\n";
    os << "sub " << emb.sub->series() << " " << emb.sub->rank() << "\n";
    os << "ambient " << emb.ambient->series() << " " << emb.ambient->rank() << "\n";
    auto dump = [&](const std::string& tag, int i, const LieElt& elt) {
        for (auto& [s, c] : elt.root_part) {
            if (c == 0) continue;
            os << tag << i + 1 << " " << (s > 0 ? "E" : "F") << std::abs(s) << " " << c << "\n";
        }
        for (size_t j = 0; j < elt.cartan.size(); ++j)
            if (elt.cartan[j] != 0) os << tag << i + 1 << " H" << j + 1 << " " << elt.cartan[j] << "\n";
    };
    for (size_t i = 0; i < emb.e_img.size(); ++i) {
        dump("e", int(i), emb.e_img[i]);
        dump("f", int(i), emb.f_img[i]);
    }
    return os.str();
}

Embedding load_embedding(RootSystemPtr g, const std::string& text) {
    Embedding emb;
    emb.ambient = g;
    emb.regular = false;
    std::istringstream is(text);
    std::string line;
    char sub_series = 0;
    int sub_rank = 0;
    std::vector<LieElt> es, fs;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "sub") {
            ls >> sub_series >> sub_rank;
            es.assign(sub_rank, LieElt{});
            fs.assign(sub_rank, LieElt{});
        } else if (tok == "ambient") {
            char s;
            int r;
            ls >> s >> r;
            if (s != g->series() || r != g->rank())
                throw std::invalid_argument("embedding file is for a different ambient algebra");
        } else if (tok[0] == 'e' || tok[0] == 'f') {
            int gen = std::stoi(tok.substr(1)) - 1;
            std::string label, coeff;
            ls >> label >> coeff;
            Rat c(coeff);
            c.canonicalize();
            LieElt& dst = tok[0] == 'e' ? es.at(gen) : fs.at(gen);
            if (label[0] == 'E')
                dst.root_part[std::stoi(label.substr(1))] += c;
            else if (label[0] == 'F')
                dst.root_part[-std::stoi(label.substr(1))] += c;
            else if (label[0] == 'H') {
                if (dst.cartan.empty()) dst.cartan.assign(g->rank(), Rat(0));
                dst.cartan[std::stoi(label.substr(1)) - 1] += c;
            } else {
                throw std::invalid_argument("embedding file: bad basis label " + label);
            }
        }
    }
    if (!sub_rank) throw std::invalid_argument("embedding file: missing sub line");
    emb.sub = RootSystem::build(sub_series, sub_rank);
    emb.e_img = std::move(es);
    emb.f_img = std::move(fs);
    for (int i = 0; i < sub_rank; ++i) {
        LieElt h = g->bracket(emb.e_img[i], emb.f_img[i]);
        if (!h.root_part.empty())
            throw std::invalid_argument("embedding file: [e_i, f_i] is not in the Cartan");
        emb.h_img.push_back(h);
    }
    emb.restriction = QMat(sub_rank, g->rank());
    for (int i = 0; i < sub_rank; ++i)
        for (int j = 0; j < g->rank(); ++j) emb.restriction.at(i, j) = emb.h_img[i].cartan[j];
    if (!emb.serre_check())
        throw std::invalid_argument("embedding file rejected: Chevalley-Serre check failed");
    return emb;
}

}  // namespace sigbranch
