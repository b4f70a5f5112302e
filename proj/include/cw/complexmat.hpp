#pragma once

#include <complex>
#include <vector>

#include "cw/matrix.hpp"

namespace cw {

using cplx = std::complex<double>;

/// Small dense complex matrix used only on the floating-point sampling paths
/// (trig evaluation away from x^- = 0, matrix exponentials).
struct MatD {
    int rows = 0, cols = 0;
    std::vector<cplx> e;

    MatD() = default;
    MatD(int r, int c) : rows(r), cols(c), e(std::size_t(r) * c) {}

    static MatD identity(int n);
    static MatD from(const Mat& m);

    cplx& at(int r, int c) { return e[std::size_t(r) * cols + c]; }
    const cplx& at(int r, int c) const { return e[std::size_t(r) * cols + c]; }

    MatD operator+(const MatD& o) const;
    MatD operator-(const MatD& o) const;
    MatD operator*(const MatD& o) const;
    MatD operator*(cplx s) const;

    double norm_inf() const;
};

/// exp(M) by scaling and squaring with a truncated Taylor series.
MatD expm(const MatD& m);

}  // namespace cw
