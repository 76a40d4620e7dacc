#include "latkit/smith.hpp"

#include <cstdlib>

namespace latkit {

namespace {

// position of the smallest nonzero |entry| in the trailing block, or none
bool find_pivot(const IntMat& d, int t, int& pi, int& pj) {
    Int best = 0;
    pi = pj = -1;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            Int v = d(i, j);
            if (v == 0) continue;
            Int a = v < 0 ? checked_neg(v) : v;
            if (pi < 0 || a < best) {
                best = a;
                pi = i;
                pj = j;
            }
        }
    return pi >= 0;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult r{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
    IntMat& d = r.d;
    IntMat& p = r.p;
    IntMat& q = r.q;

    int nmin = std::min(d.rows(), d.cols());
    const long iteration_cap = 1000000;
    long iterations = 0;

    for (int t = 0; t < nmin; ++t) {
        for (;;) {
            if (++iterations > iteration_cap)
                throw std::runtime_error("smith_normal_form failed to converge");
            int pi, pj;
            if (!find_pivot(d, t, pi, pj)) {
                // trailing block is zero
                t = nmin;
                break;
            }
            if (pi != t) {
                d.swap_rows(t, pi);
                p.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                q.swap_cols(t, pj);
            }
            bool clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int f = d(i, t) / d(t, t);
                if (f != 0) {
                    d.add_row(i, t, checked_neg(f));
                    p.add_row(i, t, checked_neg(f));
                }
                if (d(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int f = d(t, j) / d(t, t);
                if (f != 0) {
                    d.add_col(j, t, checked_neg(f));
                    q.add_col(j, t, checked_neg(f));
                }
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot divides the rest of its row and column; enforce
            // divisibility into the trailing block
            int bi = -1;
            for (int i = t + 1; i < d.rows() && bi < 0; ++i)
                for (int j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            d.add_row(t, bi, 1);
            p.add_row(t, bi, 1);
        }
        if (t >= nmin) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            p.negate_row(t);
        }
    }

    // make any fully reduced diagonal tail nonnegative too
    for (int t = 0; t < nmin; ++t)
        if (d(t, t) < 0) {
            d.negate_row(t);
            p.negate_row(t);
        }
    return r;
}

}  // namespace latkit
