#pragma once

#include "d21a/scalar.hpp"

#include <vector>

namespace d21a {

// Dense matrix over the scalar field; row-major.
struct ScalarMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    ScalarMatrix() = default;
    ScalarMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    friend ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y);
};

// Exact rank over Q(a).  Denominators are cleared row by row, then a
// fraction-free (Bareiss) elimination runs over Q[a]; every division in the
// update is exact by construction and asserted.  When the parameter is
// already rational the polynomial arithmetic degenerates to plain rationals.
// A full-rank fast path first evaluates the cleared matrix at a = 2, which
// can only underestimate the rank, so hitting min(rows, cols) there settles
// the answer without symbolic elimination.
int rank_fraction_free(const ScalarMatrix& m);

// Plain exact Gaussian rank of a rational matrix.
int rank_rational(std::vector<std::vector<Rat>> m);

} // namespace d21a
