#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "cw/rational.hpp"

namespace cw {

/// Dense matrix over Q(i, sqrt2). Rank, kernel and solve use exact Gaussian
/// elimination over the field, so dimension counts carry no tolerances.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    /// Row-major 2x2 convenience (Pauli matrices and friends).
    static Mat m2(Scalar a, Scalar b, Scalar c, Scalar d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Scalar& s) const;

    Mat transpose() const;
    Mat conj_transpose() const;
    Mat kron(const Mat& o) const;
    Scalar trace() const;

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    int rank() const;
    /// Columns form an exact basis of the right kernel (may be 0 columns).
    Mat kernel_basis() const;
    /// Exact solution of A x = b; nullopt if inconsistent. If the system is
    /// underdetermined the free variables are set to zero.
    static std::optional<Mat> solve(const Mat& A, const Mat& b);

    /// Horizontal/vertical stacking.
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);
    Mat block(int r0, int c0, int nr, int nc) const;

    Mat col(int c) const { return block(0, c, rows_, 1); }

private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

inline Mat operator*(const Scalar& s, const Mat& m) { return m * s; }

/// Column vector helpers (a Vec is just an n x 1 Mat).
using Vec = Mat;

Vec unit_vec(int n, int k);
Scalar dot(const Vec& a, const Vec& b);

}  // namespace cw
