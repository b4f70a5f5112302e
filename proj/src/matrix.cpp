#include "cw/matrix.hpp"

#include <stdexcept>

namespace cw {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

Mat Mat::m2(Scalar a, Scalar b, Scalar c, Scalar d) {
    Mat m(2, 2);
    m.at(0, 0) = std::move(a);
    m.at(0, 1) = std::move(b);
    m.at(1, 0) = std::move(c);
    m.at(1, 1) = std::move(d);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const Scalar& b = o.at(k, c);
                if (b.is_zero()) continue;
                m.at(r, c) += a * b;
            }
        }
    return m;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat m(rows_, cols_);
    if (s.is_zero()) return m;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].is_zero()) m.e_[k] = e_[k] * s;
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::conj_transpose() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
}

Mat Mat::kron(const Mat& o) const {
    Mat m(rows_ * o.rows_, cols_ * o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero()) continue;
            for (int r2 = 0; r2 < o.rows_; ++r2)
                for (int c2 = 0; c2 < o.cols_; ++c2)
                    m.at(r * o.rows_ + r2, c * o.cols_ + c2) = at(r, c) * o.at(r2, c2);
        }
    return m;
}

Scalar Mat::trace() const {
    Scalar t;
    for (int k = 0; k < rows_ && k < cols_; ++k) t += at(k, k);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && [&] {
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }();
}

namespace {

// Row echelon form in place; returns pivot column list.
std::vector<int> eliminate(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Scalar inv = m.at(row, col).inverse();
        for (int c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int Mat::rank() const {
    Mat m = *this;
    return int(eliminate(m).size());
}

Mat Mat::kernel_basis() const {
    Mat m = *this;
    std::vector<int> pivots = eliminate(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat ker(cols_, int(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        int fc = free_cols[j];
        ker.at(fc, int(j)) = Scalar(1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            ker.at(pivots[pi], int(j)) = -m.at(int(pi), fc);
    }
    return ker;
}

std::optional<Mat> Mat::solve(const Mat& A, const Mat& b) {
    if (A.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    Mat aug = hcat(A, b);
    std::vector<int> pivots = eliminate(aug);
    // Any pivot in the b-columns means inconsistency.
    for (int c : pivots)
        if (c >= A.cols()) return std::nullopt;
    Mat x(A.cols(), b.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (int c = 0; c < b.cols(); ++c) x.at(pivots[pi], c) = aug.at(int(pi), A.cols() + c);
    return x;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: shape mismatch");
    Mat m(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: shape mismatch");
    Mat m(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
    return m;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat m(nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

Vec unit_vec(int n, int k) {
    Vec v(n, 1);
    v.at(k, 0) = Scalar(1);
    return v;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("dot: shape mismatch");
    Scalar s;
    for (int k = 0; k < a.rows(); ++k) s += a.at(k, 0) * b.at(k, 0);
    return s;
}

}  // namespace cw
