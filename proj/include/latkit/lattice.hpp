#pragma once

#include <utility>
#include <vector>

#include "latkit/matrix.hpp"

namespace latkit {

// A nondegenerate integral lattice given by its Gram matrix in a fixed basis.
// Vectors are integer coordinate columns in that basis.
struct Lattice {
    int rank = 0;
    IntMat gram;

    Lattice() = default;
    explicit Lattice(IntMat g);
};

using Vec = IntVec;

// An integer matrix acting on column vectors; a genuine isometry satisfies
// m^T * gram * m = gram, which callers check with is_isometry.
struct Isometry {
    IntMat m;

    Isometry() = default;
    explicit Isometry(IntMat mat) : m(std::move(mat)) {}

    friend Isometry operator*(const Isometry& a, const Isometry& b) {
        return Isometry(a.m * b.m);
    }
    friend bool operator==(const Isometry& a, const Isometry& b) { return a.m == b.m; }
    friend bool operator!=(const Isometry& a, const Isometry& b) { return a.m != b.m; }
};

Int inner(const Lattice& l, const Vec& x, const Vec& y);

struct LatticeInvariants {
    Int determinant = 0;
    bool is_even = false;
    int positive = 0;  // signature
    int negative = 0;
};

LatticeInvariants lattice_invariants(const Lattice& l);

bool is_isometry(const Lattice& l, const Isometry& g);
void require_isometry(const Lattice& l, const Isometry& g);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Basis of {x in L : inner(x, s) = 0 for all s in span}; the result spans a
// primitive sublattice. Vectors in span must be linearly independent.
std::vector<Vec> orthogonal_complement(const Lattice& l, const std::vector<Vec>& span);

// Gram matrix of the sublattice spanned by the given vectors.
Lattice sublattice(const Lattice& l, const std::vector<Vec>& basis);

// Reflection x -> x + inner(x, e) * e in a (-2)-vector e; an involution
// fixing the hyperplane orthogonal to e.
Isometry reflection_in_root(const Lattice& l, const Vec& e);

}  // namespace latkit
