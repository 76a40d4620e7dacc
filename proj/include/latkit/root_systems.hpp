#pragma once

#include <vector>

#include "latkit/discriminant.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

enum class ADEFamily { A, D, E };

// An irreducible simply-laced diagram type: A_n (n >= 1), D_n (n >= 4),
// E_6, E_7, E_8.
struct ADEType {
    ADEFamily family;
    int rank;

    ADEType(ADEFamily f, int r);

    friend bool operator==(const ADEType& a, const ADEType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    std::string name() const;
};

// Node order of the basis. The chain runs along consecutive labels and the
// branch node (if any) comes first:
//   A_n : nodes a_1 ... a_n, edges a_i - a_{i+1}
//   D_n : chain b_2 - b_3 - ... - b_n, branch b_1 attached to b_3
//   E_n : chain c_2 - c_3 - ... - c_n, branch c_1 attached to c_4
// Basis index k (0-based) carries label k+1.
std::vector<std::pair<int, int>> diagram_edges(const ADEType& t);

// A permutation of diagram nodes preserving adjacency; perm[i] is the image
// of node i.
struct DiagramAutomorphism {
    std::vector<int> perm;

    bool is_identity() const;
    bool is_involution() const;
    friend bool operator==(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
        return a.perm == b.perm;
    }
};

DiagramAutomorphism identity_automorphism(int rank);
bool preserves_adjacency(const ADEType& t, const DiagramAutomorphism& s);
Isometry permutation_isometry(const Lattice& l, const DiagramAutomorphism& s);

// A root lattice with Gram = minus the Cartan matrix in the node order
// above, its fundamental roots (the standard basis), the highest root, and
// the set of simple roots (fundamental roots of highest-root coefficient 1).
struct RootDatum {
    ADEType type;
    Lattice lattice;
    Vec highest_root;
    std::vector<int> simple_roots;
};

RootDatum build_root_datum(const ADEType& t);

// All roots with nonnegative coordinates in the fundamental basis, in
// lexicographic order.
std::vector<Vec> positive_roots(const ADEType& t);

Isometry reflection(const RootDatum& rd, const Vec& e);
Isometry fundamental_reflection(const RootDatum& rd, int i);

// Integral interior point of the fundamental chamber: the sum of the dual
// fundamental weights scaled by the discriminant order.
Vec chamber_interior_point(const RootDatum& rd);

// For each simple root index, the class of its dual basis vector in the
// discriminant group. The map is a bijection onto the nonzero classes.
std::vector<std::pair<int, std::vector<Int>>> simple_root_discriminant_bijection(const RootDatum& rd);

// g = s_{w_1} * s_{w_2} * ... * s_{w_k} * P(graph), where w is weyl_word and
// the product is taken left to right on column vectors.
struct IsometryDecomposition {
    std::vector<int> weyl_word;
    DiagramAutomorphism graph;
};

IsometryDecomposition decompose_isometry(const RootDatum& rd, const Isometry& g);
Isometry recompose(const RootDatum& rd, const IsometryDecomposition& dec);

// Whether g lies in -1 * W, i.e. acts as -1 on the discriminant group.
bool is_minus_weyl(const RootDatum& rd, const Isometry& g);

// The diagram automorphism realized by any isometry acting as -1 on the
// discriminant group (the graph part of the decomposition of -id).
DiagramAutomorphism covering_involution_action(const ADEType& t);

}  // namespace latkit
