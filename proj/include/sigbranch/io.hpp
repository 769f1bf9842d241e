#pragma once

#include "sigbranch/semigroup.hpp"
#include "sigbranch/toric.hpp"

#include <string>

namespace sigbranch {

// machine-format lines (one record per line, stable field order)
std::string sig_line(const Signature& sig, const IVec& hw_sub);
std::string rel_line(const Relation& rel);

struct GoldenData {
    std::string pair;
    std::vector<GenEntry> gens;
    std::vector<Relation> relations;
    long free_prefix = 0;  // this many leading generators are expected to be relation-free
};

GoldenData parse_golden(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// root-system descriptor files: series, rank, ordering as index list
std::string rootsystem_descriptor(const RootSystem& rs);
RootSystemPtr parse_rootsystem_descriptor(const std::string& text);

// resolves a data file under the source tree unless overridden
std::string default_data_dir();

}  // namespace sigbranch
