#include "sigbranch/hwmodule.hpp"

#include <sstream>
#include <stdexcept>

namespace sigbranch {

namespace {
constexpr const char* kMagic = "hwmodule-cache v1";
}

std::string HWModule::cache_key(const RootSystem& rs, const IVec& lambda) {
    // series, rank, ordering hash, highest weight
    unsigned long h = 1469598103934665603ull;
    for (int pos = 0; pos < rs.num_positive(); ++pos) {
        h ^= (unsigned long)rs.canonical_of_display(pos);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << rs.series() << rs.rank() << "-" << std::hex << h << "-";
    for (size_t i = 0; i < lambda.size(); ++i) os << (i ? "_" : "") << std::dec << lambda[i];
    return os.str();
}

std::string HWModule::serialize(const HWModule& m) {
    std::ostringstream os;
    os << kMagic << "\n";
    os << "key " << cache_key(m.rs(), m.highest_weight()) << "\n";
    os << "lambda " << ivec_to_string(m.lambda_) << "\n";
    os << "dim " << m.dim_ << "\n";
    for (auto& [mu, d] : m.dims_) {
        os << "W " << ivec_to_string(mu) << " " << d;
        const QMat& g = m.grams_.at(mu);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) os << " " << g.at(i, j);
        os << "\n";
    }
    for (auto& [s, blocks] : m.ops_)
        for (auto& [mu, blk] : blocks) {
            os << "OP " << s << " " << ivec_to_string(mu) << " " << blk.rows() << " "
               << blk.cols();
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j) os << " " << blk.at(i, j);
            os << "\n";
        }
    return os.str();
}

std::shared_ptr<const HWModule> HWModule::deserialize(RootSystemPtr rs, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kMagic)
        throw std::runtime_error("module cache: bad magic/version");
    auto m = std::shared_ptr<HWModule>(new HWModule());
    m->rs_ = rs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "key") {
            std::string k;
            ls >> k;
        } else if (tok == "lambda") {
            std::string v;
            ls >> v;
            m->lambda_ = parse_ivec(v);
        } else if (tok == "dim") {
            ls >> m->dim_;
        } else if (tok == "W") {
            std::string mu_s;
            int d;
            ls >> mu_s >> d;
            IVec mu = parse_ivec(mu_s);
            QMat g(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    std::string v;
                    ls >> v;
                    g.at(i, j) = Rat(v);
                    g.at(i, j).canonicalize();
                }
            m->dims_[mu] = d;
            m->grams_[mu] = std::move(g);
        } else if (tok == "OP") {
            int s, rows, cols;
            std::string mu_s;
            ls >> s >> mu_s >> rows >> cols;
            QMat blk(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    std::string v;
                    ls >> v;
                    blk.at(i, j) = Rat(v);
                    blk.at(i, j).canonicalize();
                }
            m->ops_[s][parse_ivec(mu_s)] = std::move(blk);
        }
    }
    if (m->lambda_.empty() || m->dims_.empty())
        throw std::runtime_error("module cache: incomplete file");
    long total = 0;
    for (auto& [mu, d] : m->dims_) total += d;
    if (total != m->dim_) throw std::runtime_error("module cache: dimension mismatch");
    return m;
}

}  // namespace sigbranch
