#pragma once

#include "latkit/matrix.hpp"

namespace latkit {

// Smith decomposition p * m * q = d with p, q unimodular and d diagonal,
// d(i,i) >= 0 and d(i,i) | d(i+1,i+1).
struct SmithResult {
    IntMat d;
    IntMat p;
    IntMat q;

    int diagonal_rank() const {
        int r = 0;
        int n = std::min(d.rows(), d.cols());
        for (int i = 0; i < n; ++i)
            if (d(i, i) != 0) ++r;
        return r;
    }
};

SmithResult smith_normal_form(const IntMat& m);

}  // namespace latkit
