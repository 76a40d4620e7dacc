#include "latkit/lattice.hpp"

#include "latkit/smith.hpp"

namespace latkit {

Lattice::Lattice(IntMat g) : rank(g.rows()), gram(std::move(g)) {
    if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be square");
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (gram(i, j) != gram(j, i))
                throw std::invalid_argument("Gram matrix must be symmetric");
    if (rank > 0 && det(gram) == 0)
        throw std::invalid_argument("Gram matrix must be nondegenerate");
}

Int inner(const Lattice& l, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != l.rank || static_cast<int>(y.size()) != l.rank)
        throw std::invalid_argument("vector length does not match lattice rank");
    Int acc = 0;
    for (int i = 0; i < l.rank; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < l.rank; ++j)
            row = checked_add(row, checked_mul(l.gram(i, j), y[j]));
        acc = checked_add(acc, checked_mul(x[i], row));
    }
    return acc;
}

LatticeInvariants lattice_invariants(const Lattice& l) {
    LatticeInvariants inv;
    inv.determinant = det(l.gram);
    if (inv.determinant == 0) throw std::invalid_argument("degenerate Gram matrix");
    inv.is_even = true;
    for (int i = 0; i < l.rank; ++i)
        if (l.gram(i, i) % 2 != 0) inv.is_even = false;
    auto [pos, neg] = symmetric_signature(l.gram);
    inv.positive = pos;
    inv.negative = neg;
    return inv;
}

bool is_isometry(const Lattice& l, const Isometry& g) {
    if (g.m.rows() != l.rank || g.m.cols() != l.rank) return false;
    return g.m.transposed() * l.gram * g.m == l.gram;
}

void require_isometry(const Lattice& l, const Isometry& g) {
    if (!is_isometry(l, g)) throw std::invalid_argument("matrix is not an isometry of the lattice");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    IntMat g(a.rank + b.rank, a.rank + b.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) g(i, j) = a.gram(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) g(a.rank + i, a.rank + j) = b.gram(i, j);
    return Lattice(g);
}

std::vector<Vec> orthogonal_complement(const Lattice& l, const std::vector<Vec>& span) {
    int n = l.rank;
    if (span.empty()) {
        std::vector<Vec> basis;
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    int k = static_cast<int>(span.size());
    IntMat pairing(k, n);
    for (int s = 0; s < k; ++s) {
        if (static_cast<int>(span[s].size()) != n)
            throw std::invalid_argument("vector length does not match lattice rank");
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int i = 0; i < n; ++i)
                acc = checked_add(acc, checked_mul(span[s][i], l.gram(i, j)));
            pairing(s, j) = acc;
        }
    }
    if (rational_rank(pairing) != k)
        throw std::invalid_argument("spanning vectors are not linearly independent");

    // integer kernel of the pairing matrix: with p*A*q = d, the columns of q
    // past the diagonal rank span ker(A) as a direct summand of Z^n
    SmithResult snf = smith_normal_form(pairing);
    int rank = snf.diagonal_rank();
    std::vector<Vec> basis;
    for (int j = rank; j < n; ++j) basis.push_back(snf.q.column(j));
    return basis;
}

Lattice sublattice(const Lattice& l, const std::vector<Vec>& basis) {
    int k = static_cast<int>(basis.size());
    IntMat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Int v = inner(l, basis[i], basis[j]);
            g(i, j) = v;
            g(j, i) = v;
        }
    return Lattice(g);
}

Isometry reflection_in_root(const Lattice& l, const Vec& e) {
    if (inner(l, e, e) != -2)
        throw std::invalid_argument("reflection requires a vector of square -2");
    IntVec ge = l.gram.apply(e);
    IntMat m = IntMat::identity(l.rank);
    for (int i = 0; i < l.rank; ++i)
        for (int j = 0; j < l.rank; ++j)
            m(i, j) = checked_add(m(i, j), checked_mul(e[i], ge[j]));
    return Isometry(m);
}

}  // namespace latkit
