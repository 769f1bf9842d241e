#pragma once

#include "sigbranch/branching.hpp"
#include "sigbranch/embedding.hpp"
#include "sigbranch/order.hpp"

#include <string>

namespace sigbranch {

// A configured algebra/subalgebra pair: the ambient root system with its
// shipped positive-root ordering, the embedding, and the monomial order.
struct PairContext {
    std::string name;
    RootSystemPtr g;
    Embedding emb;
    MonomialOrderSpec order;
};

// Built-in pairs: g2-a2, b3-g2, f4-b4, b<n>-d<n>, a<n>-a<n-1>.
PairContext make_pair_context(const std::string& name);

// "G2:A2" style descriptor used by the command line.
PairContext pair_from_descriptor(const std::string& descriptor);

// shipped root orderings (display permutations over the canonical indexing)
std::vector<int> g2_display_order(const RootSystem& rs);
std::vector<int> bn_display_order(const RootSystem& rs);
std::vector<int> b3_g2_display_order(const RootSystem& rs);
std::vector<int> f4_display_order(const RootSystem& rs);
std::vector<int> an_display_order(const RootSystem& rs);

// standalone algebra configuration for the essential-signature command
struct AlgebraContext {
    RootSystemPtr rs;
    MonomialOrderSpec order;
};
AlgebraContext make_algebra_context(const std::string& algebra, const std::string& order_name);

}  // namespace sigbranch
