#include "sigbranch/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sigbranch {

std::string sig_line(const Signature& sig, const IVec& hw_sub) {
    std::ostringstream os;
    os << "SIG hw=" << ivec_to_string(sig.hw) << " p=" << ivec_to_string(sig.p)
       << " sub=" << ivec_to_string(hw_sub);
    return os.str();
}

std::string rel_line(const Relation& rel) {
    std::ostringstream os;
    os << "REL " << ivec_to_string(rel.u) << " = " << ivec_to_string(rel.w);
    return os.str();
}

GoldenData parse_golden(const std::string& text) {
    GoldenData g;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "pair") {
            ls >> g.pair;
        } else if (tok == "free") {
            ls >> g.free_prefix;
        } else if (tok == "SIG") {
            GenEntry e;
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) continue;
                std::string key = field.substr(0, eq);
                IVec val = parse_ivec(field.substr(eq + 1));
                if (key == "hw")
                    e.sig.hw = val;
                else if (key == "p")
                    e.sig.p = val;
                else if (key == "sub")
                    e.hw_sub = val;
            }
            g.gens.push_back(std::move(e));
        } else if (tok == "REL") {
            std::string u, eq, w;
            ls >> u >> eq >> w;
            Relation r;
            r.u = parse_ivec(u);
            r.w = parse_ivec(w);
            g.relations.push_back(std::move(r));
        }
    }
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << text;
}

std::string rootsystem_descriptor(const RootSystem& rs) {
    std::ostringstream os;
    os << "series " << rs.series() << "\n";
    os << "rank " << rs.rank() << "\n";
    os << "ordering ";
    for (int pos = 0; pos < rs.num_positive(); ++pos) {
        if (pos) os << ",";
        os << rs.canonical_of_display(pos);
    }
    os << "\n";
    return os.str();
}

RootSystemPtr parse_rootsystem_descriptor(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    char series = 0;
    int rank = 0;
    std::vector<int> ordering;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "series")
            ls >> series;
        else if (tok == "rank")
            ls >> rank;
        else if (tok == "ordering") {
            std::string rest;
            ls >> rest;
            for (long v : parse_ivec(rest)) ordering.push_back(int(v));
        }
    }
    if (!series || !rank) throw std::invalid_argument("descriptor: missing series/rank");
    return RootSystem::build(series, rank, ordering);
}

std::string default_data_dir() {
#ifdef SIGBRANCH_SOURCE_DIR
    return std::string(SIGBRANCH_SOURCE_DIR) + "/data";
#else
    return "data";
#endif
}

}  // namespace sigbranch
