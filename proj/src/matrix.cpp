#include "latkit/matrix.hpp"

namespace latkit {

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat w = m;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(w(i, j), w(k, k)),
                                      checked_mul(w(i, k), w(k, j)));
                // Bareiss: division is exact
                w(i, j) = num / prev;
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return checked_mul(sign, w(n - 1, n - 1));
}

RatMat rational_inverse(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    RatMat w(n, RatVec(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));
        w[i][n + i] = Rat(1);
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!w[i][k].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("matrix is singular");
        std::swap(w[k], w[p]);
        Rat piv = w[k][k];
        for (int j = 0; j < 2 * n; ++j) w[k][j] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == k || w[i][k].is_zero()) continue;
            Rat f = w[i][k];
            for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
    return inv;
}

RatVec apply_rational(const IntMat& m, const RatVec& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    RatVec out(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i) {
        Rat acc(0);
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0 || v[j].is_zero()) continue;
            acc += Rat(m(i, j)) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

std::pair<int, int> symmetric_signature(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("signature of non-square matrix");
    int n = m.rows();
    RatMat w(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));

    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (w[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w[i][i].is_zero()) {
                    p = i;
                    break;
                }
            if (p >= 0) {
                std::swap(w[k], w[p]);
                for (int i = 0; i < n; ++i) std::swap(w[i][k], w[i][p]);
            } else {
                // all remaining diagonal entries vanish; pull in an
                // off-diagonal one by a congruence row/col addition
                int a = -1, b = -1;
                for (int i = k; i < n && a < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!w[i][j].is_zero()) {
                            a = i;
                            b = j;
                            break;
                        }
                if (a < 0) break;  // rest of the form is zero
                if (a != k) {
                    std::swap(w[k], w[a]);
                    for (int i = 0; i < n; ++i) std::swap(w[i][k], w[i][a]);
                }
                for (int j = 0; j < n; ++j) w[k][j] += w[b][j];
                for (int i = 0; i < n; ++i) w[i][k] += w[i][b];
            }
        }
        if (w[k][k].is_zero()) break;
        Rat piv = w[k][k];
        if (piv.sign() > 0)
            ++pos;
        else
            ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (w[i][k].is_zero()) continue;
            Rat f = w[i][k] / piv;
            for (int j = 0; j < n; ++j) w[i][j] -= f * w[k][j];
            for (int j = 0; j < n; ++j) w[j][i] -= f * w[j][k];
        }
    }
    return {pos, neg};
}

int rational_rank(const IntMat& m) {
    RatMat w(m.rows(), RatVec(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) w[i][j] = Rat(m(i, j));
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!w[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[row], w[p]);
        for (int i = row + 1; i < m.rows(); ++i) {
            if (w[i][col].is_zero()) continue;
            Rat f = w[i][col] / w[row][col];
            for (int j = col; j < m.cols(); ++j) w[i][j] -= f * w[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum dimension mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVec sub_vec(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference dimension mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

IntVec scale_vec(Int c, const IntVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(c, v[i]);
    return r;
}

Int gcd_vec(const IntVec& v) {
    Int g = 0;
    for (Int x : v) g = gcd_int(g, x);
    return g;
}

bool is_zero_vec(const IntVec& v) {
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace latkit
