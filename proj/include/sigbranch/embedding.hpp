#pragma once

#include "sigbranch/hwmodule.hpp"
#include "sigbranch/rootsystem.hpp"

#include <string>

namespace sigbranch {

// A subalgebra embedding given by the images of the subalgebra's Chevalley
// generators inside the ambient algebra's Chevalley basis. The subalgebra
// has its own abstract root system; weights restrict through a rational
// matrix acting on fundamental coordinates.
class Embedding {
public:
    RootSystemPtr ambient;   // the big algebra
    RootSystemPtr sub;       // the subalgebra
    std::vector<LieElt> e_img, f_img;  // one per subalgebra simple root
    std::vector<LieElt> h_img;         // Cartan images, derived as [e, f]
    QMat restriction;        // sub.rank x ambient.rank on fundamental coordinates
    bool regular = false;
    std::vector<int> sub_root_canonical;  // ambient canonical indices of the subsystem (regular only)

    // weight restriction; throws when the result is not integral
    IVec restrict_weight(const IVec& mu_fund) const;

    bool is_sub_root(int canonical) const;

    // Chevalley-Serre relations of the subalgebra hold for the images,
    // checked abstractly in the ambient algebra.
    bool serre_check() const;

    // block operator of an image element on a module of the ambient algebra;
    // one source weight may map into several target weights
    struct MixedBlocks {
        std::map<IVec, std::vector<std::pair<IVec, QMat>>> by_source;
    };
    MixedBlocks operator_blocks(const HWModule& mod, const LieElt& elt) const;
};

// Regular embedding from a closed subset of positive roots. sub_simple
// lists the canonical ambient indices of the subsystem's simple roots in
// the order matching the declared series/rank numbering.
Embedding make_regular_embedding(RootSystemPtr g, char sub_series, int sub_rank,
                                 const std::vector<int>& sub_simple);

// Convenience: identity embedding (every simple root, same algebra).
Embedding identity_embedding(RootSystemPtr g);

// The orthogonal embedding of the exceptional 14-dimensional algebra into
// so_7 through its 7-dimensional module, with the invariant symmetric form
// aligned weight by weight.
Embedding build_g2_so7(RootSystemPtr b3);

// Data-file round trip. The format lists, per subalgebra generator, pairs
// (ambient basis label, rational coefficient).
std::string embedding_to_text(const Embedding& emb);
Embedding load_embedding(RootSystemPtr g, const std::string& text);

}  // namespace sigbranch
