#include "latkit/f2.hpp"

#include <algorithm>
#include <bitset>
#include <deque>

namespace latkit {

F2QuadSpace::F2QuadSpace(const Lattice& l) : lattice_(l) {
    if (l.rank != F2_DIM) throw std::invalid_argument("quadratic space requires a rank-10 lattice");
    for (int i = 0; i < F2_DIM; ++i)
        if (l.gram(i, i) % 2 != 0)
            throw std::invalid_argument("quadratic space requires an even lattice");

    for (int i = 0; i < F2_DIM; ++i) {
        std::uint16_t row = 0;
        for (int j = 0; j < F2_DIM; ++j)
            if (l.gram(i, j) % 2 != 0) row |= static_cast<std::uint16_t>(1u << j);
        b_rows_[i] = row;
    }

    // q from the 0/1 integral lift of each residue class
    for (int bits = 0; bits < F2_SIZE; ++bits) {
        Vec lift(F2_DIM, 0);
        for (int i = 0; i < F2_DIM; ++i)
            if (bits & (1 << i)) lift[i] = 1;
        Int n = inner(lattice_, lift, lift);
        q_table_[bits] = static_cast<std::uint8_t>(((n / 2) % 2 + 2) % 2);
    }
}

int F2QuadSpace::b(F2Vector x, F2Vector y) const {
    int parity = 0;
    std::uint16_t xb = x.bits;
    while (xb) {
        int i = __builtin_ctz(xb);
        xb &= static_cast<std::uint16_t>(xb - 1);
        parity ^= __builtin_popcount(b_rows_[i] & y.bits) & 1;
    }
    return parity;
}

F2Isometry F2Isometry::identity() {
    F2Isometry m;
    for (int j = 0; j < F2_DIM; ++j) m.cols[j] = static_cast<std::uint16_t>(1u << j);
    return m;
}

F2Vector F2Isometry::apply(F2Vector x) const {
    std::uint16_t out = 0;
    std::uint16_t xb = x.bits;
    while (xb) {
        int j = __builtin_ctz(xb);
        xb &= static_cast<std::uint16_t>(xb - 1);
        out ^= cols[j];
    }
    return F2Vector{out};
}

bool F2Isometry::is_identity() const { return *this == identity(); }

F2Vector reduce_vector(const Vec& x) {
    if (static_cast<int>(x.size()) != F2_DIM)
        throw std::invalid_argument("vector length does not match rank 10");
    std::uint16_t bits = 0;
    for (int i = 0; i < F2_DIM; ++i)
        if (x[i] % 2 != 0) bits |= static_cast<std::uint16_t>(1u << i);
    return F2Vector{bits};
}

bool preserves_q(const F2QuadSpace& space, const F2Isometry& m) {
    for (int bits = 0; bits < F2_SIZE; ++bits) {
        F2Vector v{static_cast<std::uint16_t>(bits)};
        if (space.q(m.apply(v)) != space.q(v)) return false;
    }
    return true;
}

F2Isometry reduce_isometry(const F2QuadSpace& space, const Isometry& g) {
    if (g.m.rows() != F2_DIM || g.m.cols() != F2_DIM)
        throw std::invalid_argument("matrix size does not match rank 10");
    F2Isometry m;
    for (int j = 0; j < F2_DIM; ++j) {
        std::uint16_t col = 0;
        for (int i = 0; i < F2_DIM; ++i)
            if (g.m(i, j) % 2 != 0) col |= static_cast<std::uint16_t>(1u << i);
        m.cols[j] = col;
    }
    if (!preserves_q(space, m))
        throw std::invalid_argument("reduction does not preserve the quadratic form");
    return m;
}

IsotropicCounts count_isotropic(const F2QuadSpace& space) {
    IsotropicCounts c;
    for (int bits = 0; bits < F2_SIZE; ++bits) {
        if (space.q(F2Vector{static_cast<std::uint16_t>(bits)}) == 0) {
            ++c.total_isotropic;
            if (bits != 0) ++c.nonzero_isotropic;
        }
    }
    return c;
}

std::vector<F2Vector> orbit(const F2QuadSpace& space, F2Vector v,
                            const std::vector<F2Isometry>& gens) {
    for (const F2Isometry& g : gens)
        if (!preserves_q(space, g))
            throw std::invalid_argument("generator does not preserve the quadratic form");
    std::bitset<F2_SIZE> seen;
    std::deque<F2Vector> queue{v};
    seen[v.bits] = true;
    std::vector<F2Vector> out;
    while (!queue.empty()) {
        F2Vector x = queue.front();
        queue.pop_front();
        out.push_back(x);
        for (const F2Isometry& g : gens) {
            F2Vector y = g.apply(x);
            if (!seen[y.bits]) {
                seen[y.bits] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ramification_degree(const F2QuadSpace& space, F2Vector f,
                        const std::vector<F2Isometry>& gens) {
    if (f.bits == 0) throw std::invalid_argument("half-fiber class must be nonzero");
    if (space.q(f) != 0) throw std::invalid_argument("half-fiber class must be isotropic");
    return static_cast<int>(orbit(space, f, gens).size());
}

}  // namespace latkit
