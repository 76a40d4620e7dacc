#include "latkit/e10.hpp"

#include <algorithm>

#include "latkit/smith.hpp"

namespace latkit {

namespace {

constexpr int N = 10;

IntMat e10_gram() {
    IntMat g(N, N);
    for (int i = 0; i < N; ++i) g(i, i) = -2;
    for (int i = 0; i + 1 < 9; ++i) {
        g(i, i + 1) = 1;
        g(i + 1, i) = 1;
    }
    g(9, 2) = 1;  // branch node e_10 attached to e_3
    g(2, 9) = 1;
    return g;
}

// The primitive isotropic vector supported on the affine subdiagram obtained
// by dropping e_9: the radical generator of that degenerate sublattice,
// oriented to the positive side of the cone.
Vec cusp_vector(const Lattice& l) {
    std::vector<int> nodes;
    for (int i = 0; i < N; ++i)
        if (i != 8) nodes.push_back(i);
    IntMat sub(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) sub(i, j) = l.gram(nodes[i], nodes[j]);
    SmithResult snf = smith_normal_form(sub);
    int rank = snf.diagonal_rank();
    if (rank != 8) throw std::runtime_error("affine subdiagram does not have a 1-dim radical");
    Vec delta(N, 0);
    for (int i = 0; i < 9; ++i) delta[nodes[i]] = snf.q(i, 8);
    Int sum = 0;
    for (Int c : delta) sum = checked_add(sum, c);
    if (sum < 0) delta = scale_vec(-1, delta);
    if (inner(l, delta, delta) != 0 || gcd_vec(delta) != 1)
        throw std::runtime_error("cusp vector self-check failed");
    return delta;
}

}  // namespace

E10Lattice build_e10() {
    E10Lattice e;
    e.lattice = Lattice(e10_gram());

    // gram is unimodular, so <h, e_i> = 1 has an integral solution
    RatMat inv = rational_inverse(e.lattice.gram);
    e.h.resize(N);
    for (int i = 0; i < N; ++i) {
        Rat acc(0);
        for (int j = 0; j < N; ++j) acc += inv[i][j];
        if (!acc.is_integer()) throw std::runtime_error("e10 interior point is not integral");
        e.h[i] = acc.num;
    }

    LatticeInvariants inv2 = lattice_invariants(e.lattice);
    if (inv2.determinant != -1 || !inv2.is_even || inv2.positive != 1 || inv2.negative != 9)
        throw std::runtime_error("e10 construction self-check failed");
    for (int i = 0; i < N; ++i) {
        Vec ei(N, 0);
        ei[i] = 1;
        if (inner(e.lattice, e.h, ei) != 1)
            throw std::runtime_error("e10 interior point self-check failed");
    }
    if (inner(e.lattice, e.h, e.h) <= 0)
        throw std::runtime_error("e10 interior point is not in the positive cone");

    // splitting frame for the plane search: the cusp vector, a second
    // isotropic partner one reflection away, and a complement basis
    Vec f1 = cusp_vector(e.lattice);
    Vec f2 = f1;
    f2[8] = checked_add(f2[8], 1);  // f1 + e_9
    if (inner(e.lattice, f1, f2) != 1 || inner(e.lattice, f2, f2) != 0)
        throw std::runtime_error("splitting frame self-check failed");
    std::vector<Vec> complement = orthogonal_complement(e.lattice, {f1, f2});
    if (complement.size() != 8) throw std::runtime_error("splitting frame complement is not rank 8");
    e.search_basis = IntMat(N, N);
    for (int i = 0; i < N; ++i) {
        e.search_basis(i, 0) = f1[i];
        e.search_basis(i, 1) = f2[i];
        for (int j = 0; j < 8; ++j) e.search_basis(i, 2 + j) = complement[j][i];
    }
    Int d = det(e.search_basis);
    if (d != 1 && d != -1) throw std::runtime_error("splitting frame is not unimodular");
    return e;
}

bool is_hyperbolic_plane(const E10Lattice& e, const HyperbolicPlane& u) {
    const Lattice& l = e.lattice;
    if (static_cast<int>(u.f1.size()) != N || static_cast<int>(u.f2.size()) != N) return false;
    if (inner(l, u.f1, u.f1) != 0 || inner(l, u.f2, u.f2) != 0) return false;
    if (inner(l, u.f1, u.f2) != 1) return false;
    if (gcd_vec(u.f1) != 1 || gcd_vec(u.f2) != 1) return false;
    if (inner(l, u.f1, e.h) <= 0 || inner(l, u.f2, e.h) <= 0) return false;
    return true;
}

std::vector<HyperbolicPlane> find_hyperbolic_planes(const E10Lattice& e, Int bound, int count) {
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    const IntMat& basis = e.search_basis;
    // Gram form in frame coordinates, and the pairing of each frame vector
    // with h (gram * h is the all-ones vector, so that pairing is a column
    // sum of the frame).
    IntMat g = basis.transposed() * e.lattice.gram * basis;
    IntVec h_pairing(N, 0);
    for (int j = 0; j < N; ++j)
        for (int i = 0; i < N; ++i) h_pairing[j] = checked_add(h_pairing[j], basis(i, j));
    const Int a = g(N - 1, N - 1);
    if (a >= 0) throw std::runtime_error("frame must end in a definite direction");

    // Depth-first over the first nine frame coordinates with incremental
    // pairings; the last coordinate is the root of a quadratic, so the box
    // is never walked in full.
    std::vector<Vec> isotropic;
    Vec c(N, 0);
    IntVec s(N, 0);  // s[j] = sum_{i < depth} g(j,i) c[i]
    Int norm = 0;    // norm of the prefix

    auto emit = [&](Int last) {
        c[N - 1] = last;
        Int side = 0;
        for (int i = 0; i < N; ++i) side = checked_add(side, checked_mul(c[i], h_pairing[i]));
        if (side <= 0) return;  // wrong side of the cone, or zero
        if (gcd_vec(c) != 1) return;  // frame is unimodular, so content is preserved
        isotropic.push_back(c);
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == N - 1) {
            // a x^2 + 2 s x + norm = 0 for the last coordinate x
            Int sn = s[N - 1];
            Int disc = checked_sub(checked_mul(sn, sn), checked_mul(a, norm));
            if (disc < 0) return;
            Int root = isqrt_floor(disc);
            if (checked_mul(root, root) != disc) return;
            Int lo = checked_sub(checked_neg(sn), root), hi = checked_add(checked_neg(sn), root);
            if (a < 0) std::swap(lo, hi);  // keep candidates in increasing order
            for (Int num : {lo, hi}) {
                if (num % a != 0) continue;
                Int x = num / a;
                if (x < -bound || x > bound) continue;
                emit(x);
                if (root == 0) break;
            }
            return;
        }
        for (Int t = -bound; t <= bound; ++t) {
            c[depth] = t;
            Int save_norm = norm;
            norm = checked_add(norm, checked_add(checked_mul(2, checked_mul(t, s[depth])),
                                                 checked_mul(g(depth, depth), checked_mul(t, t))));
            for (int j = 0; j < N; ++j)
                if (g(j, depth) != 0) s[j] = checked_add(s[j], checked_mul(g(j, depth), t));
            self(self, depth + 1);
            for (int j = 0; j < N; ++j)
                if (g(j, depth) != 0) s[j] = checked_sub(s[j], checked_mul(g(j, depth), t));
            norm = save_norm;
        }
        c[depth] = 0;
    };
    rec(rec, 0);

    // pair in enumeration order, then normalize each pair in root-basis
    // lexicographic order
    std::vector<HyperbolicPlane> planes;
    std::vector<IntVec> gc(isotropic.size());
    for (size_t i = 0; i < isotropic.size(); ++i) gc[i] = g.apply(isotropic[i]);
    for (size_t i = 0; i < isotropic.size() && static_cast<int>(planes.size()) < count; ++i) {
        for (size_t j = i + 1; j < isotropic.size() && static_cast<int>(planes.size()) < count; ++j) {
            Int p = 0;
            for (int k = 0; k < N; ++k) p = checked_add(p, checked_mul(isotropic[i][k], gc[j][k]));
            if (p != 1) continue;
            Vec va = basis.apply(isotropic[i]);
            Vec vb = basis.apply(isotropic[j]);
            if (vb < va) std::swap(va, vb);
            planes.push_back({va, vb});
        }
    }
    return planes;
}

Isometry sigma_u(const E10Lattice& e, const HyperbolicPlane& u) {
    if (!is_hyperbolic_plane(e, u))
        throw std::invalid_argument("pair does not span a hyperbolic plane");
    const IntMat& g = e.lattice.gram;
    IntVec gf1 = g.apply(u.f1);
    IntVec gf2 = g.apply(u.f2);
    IntMat m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Int val = checked_mul(2, checked_add(checked_mul(u.f1[i], gf2[j]),
                                                 checked_mul(u.f2[i], gf1[j])));
            if (i == j) val = checked_sub(val, 1);
            m(i, j) = val;
        }
    return Isometry(m);
}

bool is_in_o_plus(const E10Lattice& e, const Isometry& g) {
    require_isometry(e.lattice, g);
    return inner(e.lattice, g.m.apply(e.h), e.h) > 0;
}

bool is_in_g0(const E10Lattice& e, const Isometry& g) {
    if (!is_in_o_plus(e, g)) return false;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Int want = i == j ? 1 : 0;
            if ((g.m(i, j) - want) % 2 != 0) return false;
        }
    return true;
}

Vec sample_positive_cone_point(const E10Lattice& e, std::mt19937_64& rng, Int box) {
    if (box < 1) throw std::invalid_argument("box must be at least 1");
    IntMat g = e.search_basis.transposed() * e.lattice.gram * e.search_basis;
    const long cap = 100000000;
    Vec c(N);
    for (long attempt = 0; attempt < cap; ++attempt) {
        for (int i = 0; i < N; ++i)
            c[i] = static_cast<Int>(rng() % static_cast<std::uint64_t>(2 * box + 1)) - box;
        Int norm = 0;
        for (int i = 0; i < N; ++i) {
            if (c[i] == 0) continue;
            Int row = 0;
            for (int j = 0; j < N; ++j) row = checked_add(row, checked_mul(g(i, j), c[j]));
            norm = checked_add(norm, checked_mul(c[i], row));
        }
        if (norm < 0) continue;
        Vec x = e.search_basis.apply(c);
        Int side = 0;
        for (Int v : x) side = checked_add(side, v);  // <x, h> is the coordinate sum
        if (side < 0) x = scale_vec(-1, x);           // flip to the h side of the cone
        return x;
    }
    throw std::runtime_error("positive-cone sampler starved");
}

ReductionResult chamber_reduce(const E10Lattice& e, const Vec& x) {
    const Lattice& l = e.lattice;
    if (static_cast<int>(x.size()) != N)
        throw std::invalid_argument("vector length does not match lattice rank");
    if (inner(l, x, x) < 0 || inner(l, x, e.h) < 0)
        throw std::invalid_argument("vector is not in the closed positive cone");

    ReductionResult res;
    res.reduced = x;
    IntVec pair = l.gram.apply(res.reduced);
    const long long cap = 1000000;
    for (;;) {
        int i = -1;
        for (int k = 0; k < N; ++k)
            if (pair[k] < 0) {
                i = k;
                break;
            }
        if (i < 0) break;
        if (++res.steps > cap) throw std::runtime_error("chamber reduction exceeded iteration cap");
        Int c = pair[i];
        res.reduced[i] = checked_add(res.reduced[i], c);
        for (int k = 0; k < N; ++k)
            pair[k] = checked_add(pair[k], checked_mul(c, l.gram(k, i)));
        res.word.push_back(i);
    }
    return res;
}

Isometry fundamental_reflection(const E10Lattice& e, int i) {
    Vec root(N, 0);
    root.at(i) = 1;
    return reflection_in_root(e.lattice, root);
}

Isometry replay_word(const E10Lattice& e, const std::vector<int>& word) {
    IntMat m = IntMat::identity(N);
    for (int i : word) m = m * fundamental_reflection(e, i).m;
    return Isometry(m);
}

std::vector<int> express_in_fundamental_reflections(const E10Lattice& e, const Isometry& g) {
    if (!is_in_o_plus(e, g))
        throw std::invalid_argument("isometry does not preserve the positive cone");
    ReductionResult red = chamber_reduce(e, g.m.apply(e.h));
    // reduction sends g(h) back to h, so the reduction word inverts g
    IntMat acc = g.m;
    for (int i : red.word) acc = fundamental_reflection(e, i).m * acc;
    if (!acc.is_identity())
        throw std::runtime_error("reduction word failed to trivialize the isometry");
    return red.word;
}

}  // namespace latkit
