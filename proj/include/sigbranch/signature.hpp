#pragma once

#include "sigbranch/rational.hpp"

#include <string>

namespace sigbranch {

// (lambda; p_1..p_N): a dominant highest weight in fundamental coordinates
// plus one exponent per positive root, indexed by display position.
struct Signature {
    IVec hw;
    IVec p;

    Signature() = default;
    Signature(IVec hw_, IVec p_) : hw(std::move(hw_)), p(std::move(p_)) {}

    Signature operator+(const Signature& o) const { return Signature(hw + o.hw, p + o.p); }
    bool operator==(const Signature& o) const { return hw == o.hw && p == o.p; }
    bool operator<(const Signature& o) const {  // container order only
        if (hw != o.hw) return hw < o.hw;
        return p < o.p;
    }

    long degree() const { return sum(p); }
    std::string to_string() const;
};

}  // namespace sigbranch
