#pragma once

#include <vector>

#include "latkit/lattice.hpp"
#include "latkit/smith.hpp"

namespace latkit {

// The finite abelian group L^dual / L, as invariant factors d_1 | d_2 | ...
// together with rational generator lifts (coordinates in the lattice basis,
// reduced into [0,1) per coordinate). The order equals |det gram|.
struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // each > 1
    std::vector<RatVec> generator_lifts;
    Int order = 1;

    // internal change-of-basis data used to read off class coordinates
    IntMat snf_p;
    std::vector<int> factor_rows;  // rows of snf_p matching the factors

    size_t generator_count() const { return invariant_factors.size(); }
    bool is_trivial() const { return invariant_factors.empty(); }

    // Coordinates of the class of a dual-lattice vector y (rational, with
    // gram * y integral) with respect to the stored generators, each entry
    // reduced mod its invariant factor.
    std::vector<Int> class_coordinates(const Lattice& l, const RatVec& y) const;

    // Enumerate coordinate tuples of every group element (order many).
    std::vector<std::vector<Int>> all_elements() const;
};

DiscriminantGroup discriminant_group(const Lattice& l);

// The induced automorphism of the discriminant group, as an integer matrix
// on the stored generators: column j holds the coordinates of the image of
// generator j, entries reduced mod the row's invariant factor.
struct DiscAction {
    std::vector<Int> moduli;
    IntMat matrix;

    friend bool operator==(const DiscAction& a, const DiscAction& b) {
        return a.moduli == b.moduli && a.matrix == b.matrix;
    }
    friend bool operator!=(const DiscAction& a, const DiscAction& b) { return !(a == b); }
};

DiscAction discriminant_action(const Lattice& l, const DiscriminantGroup& dg, const Isometry& g);

DiscAction identity_disc_action(const DiscriminantGroup& dg);
DiscAction negation_disc_action(const DiscriminantGroup& dg);
DiscAction compose(const DiscriminantGroup& dg, const DiscAction& a, const DiscAction& b);

}  // namespace latkit
