#include "cw/complexmat.hpp"

#include <cmath>
#include <stdexcept>

namespace cw {

MatD MatD::identity(int n) {
    MatD m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = 1.0;
    return m;
}

MatD MatD::from(const Mat& src) {
    MatD m(src.rows(), src.cols());
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c) m.at(r, c) = src.at(r, c).to_complex();
    return m;
}

MatD MatD::operator+(const MatD& o) const {
    MatD m(rows, cols);
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] = e[k] + o.e[k];
    return m;
}

MatD MatD::operator-(const MatD& o) const {
    MatD m(rows, cols);
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] = e[k] - o.e[k];
    return m;
}

MatD MatD::operator*(const MatD& o) const {
    if (cols != o.rows) throw std::invalid_argument("MatD*: shape mismatch");
    MatD m(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            cplx a = at(r, k);
            if (a == cplx(0.0)) continue;
            for (int c = 0; c < o.cols; ++c) m.at(r, c) += a * o.at(k, c);
        }
    return m;
}

MatD MatD::operator*(cplx s) const {
    MatD m(rows, cols);
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] = e[k] * s;
    return m;
}

double MatD::norm_inf() const {
    double best = 0.0;
    for (int r = 0; r < rows; ++r) {
        double row = 0.0;
        for (int c = 0; c < cols; ++c) row += std::abs(at(r, c));
        best = std::max(best, row);
    }
    return best;
}

MatD expm(const MatD& m) {
    int squarings = 0;
    double nrm = m.norm_inf();
    while (nrm > 0.25) {
        nrm /= 2.0;
        ++squarings;
    }
    MatD a = m * cplx(std::ldexp(1.0, -squarings));
    MatD sum = MatD::identity(m.rows);
    MatD term = MatD::identity(m.rows);
    for (int k = 1; k <= 24; ++k) {
        term = term * a * cplx(1.0 / k);
        sum = sum + term;
        if (term.norm_inf() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

}  // namespace cw
