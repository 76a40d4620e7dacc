#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// A vector of the rank-10 quadratic space over GF(2), packed into the low
// ten bits of a word (bit i = coordinate i in the E10 basis).
struct F2Vector {
    std::uint16_t bits = 0;

    friend bool operator==(const F2Vector& a, const F2Vector& b) { return a.bits == b.bits; }
    friend bool operator<(const F2Vector& a, const F2Vector& b) { return a.bits < b.bits; }
};

constexpr int F2_DIM = 10;
constexpr int F2_SIZE = 1 << F2_DIM;

// The quadratic space induced from an even rank-10 lattice:
// q(x) = <x,x>/2 mod 2 on any integral lift, with polar form
// b(x,y) = <x,y> mod 2.
class F2QuadSpace {
public:
    explicit F2QuadSpace(const Lattice& l);

    int q(F2Vector x) const { return q_table_[x.bits]; }
    int b(F2Vector x, F2Vector y) const;

    const Lattice& lattice() const { return lattice_; }

private:
    Lattice lattice_;
    std::array<std::uint16_t, F2_DIM> b_rows_;  // rows of gram mod 2
    std::array<std::uint8_t, F2_SIZE> q_table_;
};

// A 10x10 bit matrix preserving q; columns are packed bit vectors.
struct F2Isometry {
    std::array<std::uint16_t, F2_DIM> cols{};

    static F2Isometry identity();
    F2Vector apply(F2Vector x) const;
    bool is_identity() const;

    friend bool operator==(const F2Isometry& a, const F2Isometry& b) { return a.cols == b.cols; }
};

F2Vector reduce_vector(const Vec& x);

// Entrywise reduction mod 2; throws if the result fails to preserve q.
F2Isometry reduce_isometry(const F2QuadSpace& space, const Isometry& g);

bool preserves_q(const F2QuadSpace& space, const F2Isometry& m);

struct IsotropicCounts {
    int nonzero_isotropic = 0;
    int total_isotropic = 0;  // including zero
    int total = F2_SIZE;
};

IsotropicCounts count_isotropic(const F2QuadSpace& space);

// Closure of {v} under the generators, in ascending bit-value order.
std::vector<F2Vector> orbit(const F2QuadSpace& space, F2Vector v,
                            const std::vector<F2Isometry>& gens);

// Orbit size of a nonzero isotropic class under the generated subgroup.
int ramification_degree(const F2QuadSpace& space, F2Vector f,
                        const std::vector<F2Isometry>& gens);

}  // namespace latkit
