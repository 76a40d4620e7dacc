#include "latkit/discriminant.hpp"

namespace latkit {

namespace {

Int positive_mod(Int v, Int m) {
    Int r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

DiscriminantGroup discriminant_group(const Lattice& l) {
    // L^dual / L is the cokernel of gram : Z^n -> Z^n. With p*gram*q = d,
    // the class of an integer vector m is read off as p*m taken mod the
    // diagonal, and the lift of the i-th generator is column i of q over d_i.
    SmithResult snf = smith_normal_form(l.gram);
    DiscriminantGroup dg;
    dg.snf_p = snf.p;
    for (int i = 0; i < l.rank; ++i) {
        Int di = snf.d(i, i);
        if (di == 0) throw std::invalid_argument("degenerate Gram matrix");
        dg.order = checked_mul(dg.order, di);
        if (di == 1) continue;
        dg.invariant_factors.push_back(di);
        dg.factor_rows.push_back(i);
        RatVec lift(l.rank);
        for (int r = 0; r < l.rank; ++r) {
            Rat c(snf.q(r, i), di);
            lift[r] = c - Rat(c.floor());
        }
        dg.generator_lifts.push_back(lift);
    }
    return dg;
}

std::vector<Int> DiscriminantGroup::class_coordinates(const Lattice& l, const RatVec& y) const {
    if (static_cast<int>(y.size()) != l.rank)
        throw std::invalid_argument("vector length does not match lattice rank");
    // m = gram * y must be integral for y to lie in the dual lattice
    IntVec m(l.rank);
    for (int i = 0; i < l.rank; ++i) {
        Rat acc(0);
        for (int j = 0; j < l.rank; ++j) acc += Rat(l.gram(i, j)) * y[j];
        if (!acc.is_integer())
            throw std::invalid_argument("vector is not in the dual lattice");
        m[i] = acc.num;
    }
    IntVec pm = snf_p.apply(m);
    std::vector<Int> coords(invariant_factors.size());
    for (size_t t = 0; t < invariant_factors.size(); ++t)
        coords[t] = positive_mod(pm[factor_rows[t]], invariant_factors[t]);
    return coords;
}

std::vector<std::vector<Int>> DiscriminantGroup::all_elements() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(invariant_factors.size(), 0);
    for (;;) {
        out.push_back(cur);
        size_t t = 0;
        while (t < cur.size()) {
            if (++cur[t] < invariant_factors[t]) break;
            cur[t] = 0;
            ++t;
        }
        if (t == cur.size()) break;
    }
    return out;
}

DiscAction discriminant_action(const Lattice& l, const DiscriminantGroup& dg, const Isometry& g) {
    require_isometry(l, g);
    DiscAction act;
    act.moduli = dg.invariant_factors;
    int k = static_cast<int>(dg.generator_count());
    act.matrix = IntMat(k, k);
    for (int j = 0; j < k; ++j) {
        RatVec image = apply_rational(g.m, dg.generator_lifts[j]);
        std::vector<Int> coords = dg.class_coordinates(l, image);
        for (int i = 0; i < k; ++i) act.matrix(i, j) = coords[i];
    }
    return act;
}

DiscAction identity_disc_action(const DiscriminantGroup& dg) {
    DiscAction act;
    act.moduli = dg.invariant_factors;
    int k = static_cast<int>(dg.generator_count());
    act.matrix = IntMat::identity(k);
    for (int i = 0; i < k; ++i)
        act.matrix(i, i) = positive_mod(1, dg.invariant_factors[i]);
    return act;
}

DiscAction negation_disc_action(const DiscriminantGroup& dg) {
    DiscAction act;
    act.moduli = dg.invariant_factors;
    int k = static_cast<int>(dg.generator_count());
    act.matrix = IntMat(k, k);
    for (int i = 0; i < k; ++i)
        act.matrix(i, i) = positive_mod(-1, dg.invariant_factors[i]);
    return act;
}

DiscAction compose(const DiscriminantGroup& dg, const DiscAction& a, const DiscAction& b) {
    DiscAction act;
    act.moduli = dg.invariant_factors;
    act.matrix = a.matrix * b.matrix;
    for (int i = 0; i < act.matrix.rows(); ++i)
        for (int j = 0; j < act.matrix.cols(); ++j)
            act.matrix(i, j) = positive_mod(act.matrix(i, j), dg.invariant_factors[i]);
    return act;
}

}  // namespace latkit
