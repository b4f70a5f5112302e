#include "cw/moduli.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

namespace cw {

namespace {

const Mono kMask1234 = mono({1, 2, 3, 4});

bool on_susy_disc(const CWParams& p) { return p.alpha_plus == -3 * p.alpha_plus_prime; }

// Matched-sign flat family: a_+ = s a_-, a_-' = s a_+' for one sign s.
bool on_flat_ellipse(const CWParams& p) {
    return (p.alpha_plus == p.alpha_minus && p.alpha_minus_prime == p.alpha_plus_prime) ||
           (p.alpha_plus == -p.alpha_minus && p.alpha_minus_prime == -p.alpha_plus_prime);
}

// Reduced odd space for decomposable points: when cbar kills the X+ part of
// the sigma_- slot, xi1 may be restricted to X- S(V).
Mat reduced_subspace(const SuperContext& cx) {
    Element xp = x_projector_element(kMask1234, true);
    if (!(cx.pair.cbar * xp).is_zero()) return Mat::identity(24);
    const CliffordRepW& rep = rep11();
    Mat xm = x_projector(rep.v, kMask1234, false).matrix;
    Mat cols(16, 0);
    for (int c = 0; c < 16 && cols.cols() < 8; ++c) {
        Mat cand = cols.cols() ? Mat::hcat(cols, xm.col(c)) : xm.col(c);
        if (cand.rank() == cand.cols()) cols = cand;
    }
    Mat sub(24, cols.cols() + 8);
    for (int c = 0; c < cols.cols(); ++c)
        for (int r = 0; r < 16; ++r) sub.at(r, c) = cols.at(r, c);
    for (int c = 0; c < 8; ++c) sub.at(16 + c, cols.cols() + c) = Scalar(1);
    return sub;
}

}  // namespace

ClassificationRecord classify(const ModuliPoint& pt) {
    ClassificationRecord rec;
    rec.point = pt;
    CWParams p = pt.params();
    BForm b = b_form(p);
    rec.b_eigenvalues = b.diag;
    rec.zero_count = b.zero_count();
    rec.indecomposable = b.indecomposable();
    rec.k1_reduction_possible = (p.alpha_minus == 0 && p.alpha_plus_prime == 0) ||
                                (p.alpha_plus == 0 && p.alpha_plus_prime == 0);

    if (p.alpha_plus == p.alpha_plus_prime || p.alpha_plus == -p.alpha_plus_prime)
        rec.tags.push_back("diag-disc");
    if (p.alpha_minus == p.alpha_plus_prime || p.alpha_minus == -p.alpha_plus_prime)
        rec.tags.push_back("ellipsoid");

    ConnectionPair pair = family_connection(p);
    rec.flat = flat_check(pair, b);

    bool all_zero = p.alpha_plus == 0 && p.alpha_minus == 0 && p.alpha_plus_prime == 0 &&
                    p.alpha_minus_prime == 0;

    if (on_flat_ellipse(p) && on_susy_disc(p) && p.alpha_plus_prime != 0)
        rec.tags.push_back("P0");
    if (!all_zero && p.alpha_plus_prime == 0 && p.alpha_plus == 0 && p.alpha_minus_prime == 0)
        rec.tags.push_back("P2");
    if (p.alpha_plus_prime != 0 &&
        (p.alpha_minus == p.alpha_plus_prime || p.alpha_minus == -p.alpha_plus_prime) &&
        on_susy_disc(p) && p.alpha_minus_prime == 0)
        rec.tags.push_back("P1");
    if (on_flat_ellipse(p) && !on_susy_disc(p) && p.alpha_plus_prime != 0)
        rec.tags.push_back("Q");

    if (all_zero) {
        rec.susy = false;
        rec.nu = 1;
        return rec;
    }

    if (rec.indecomposable) {
        ParallelSpace ps = parallel_space(pair, b, rep11());
        rec.nu = rat(ps.dim, 32);
        rec.susy = susy_check(p);
        return rec;
    }

    // Decomposable: drop the bracket components tied to zero eigenvalues and
    // run the obstruction on the (possibly reduced) odd space.
    SuperContext cx = make_context(p);
    auto mu = eigen_root_reals(p);
    std::vector<bool> keep(cx.alg.dim(), true);
    for (int k = 0; k < cx.alg.dim(); ++k) {
        const EvenLabel& l = cx.alg.labels[k];
        if ((l.t == EvenLabel::Type::trans || l.t == EvenLabel::Type::dual) && mu[l.i] == 0)
            keep[k] = false;
        if (l.t == EvenLabel::Type::rot) {
            Rational block_mu = (l.i == 0) ? mu[0] : (l.i == 2 ? mu[2] : mu[5]);
            if (block_mu == 0) keep[k] = false;
        }
    }
    Mat sub = reduced_subspace(cx);
    rec.susy_restricted = sub.cols() < 24;
    BracketTable t = bracket_table_fast(p);
    rec.susy = susy_trilinear_zero(t, keep, sub);
    rec.nu = rat(sub.cols(), 32);
    return rec;
}

std::vector<ModuliPoint> grid_points(const GridSpec& g) {
    std::vector<ModuliPoint> pts;
    auto axis = [&](int k) {
        std::vector<Rational> vals;
        Rational step = rat(1, g.denom[k]);
        for (Rational v = g.lo[k]; v <= g.hi[k]; v += step) vals.push_back(v);
        return vals;
    };
    auto a0 = axis(0), a1 = axis(1), a2 = axis(2);
    for (const auto& x : a0)
        for (const auto& y : a1)
            for (const auto& z : a2) pts.push_back({x, y, z, g.alpha_minus});
    return pts;
}

std::vector<ClassificationRecord> sweep_serial(const std::vector<ModuliPoint>& pts) {
    std::vector<ClassificationRecord> out(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) out[k] = classify(pts[k]);
    return out;
}

std::vector<ClassificationRecord> sweep_parallel(const std::vector<ModuliPoint>& pts, int threads) {
    std::vector<ClassificationRecord> out(pts.size());
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < long(pts.size()); ++k) out[k] = classify(pts[k]);
#else
    (void)threads;
    for (std::size_t k = 0; k < pts.size(); ++k) out[k] = classify(pts[k]);
#endif
    return out;
}

std::vector<SpecialPoint> special_points() {
    std::vector<SpecialPoint> out;
    out.push_back({"P0",
                   {rat(-1), rat(3), rat(-1), rat(3)},
                   {"P0", "flat", "susy", "nu=1"},
                   "flat pair (a+ G125, a+' G125) on the susy disc"});
    out.push_back({"P1",
                   {rat(1), rat(-3), rat(0), rat(1)},
                   {"P1", "ellipsoid", "susy-disc"},
                   "two zero eigenvalues; dim-9 reduction with fraction 3/4"});
    out.push_back({"P2",
                   {rat(0), rat(0), rat(0), rat(1)},
                   {"P2", "diag-disc"},
                   "five zero eigenvalues; dim-6 reduction with fraction 1/2"});
    out.push_back({"Q",
                   {rat(1), rat(2), rat(1), rat(2)},
                   {"Q", "flat"},
                   "flat family point with two distinct eigenvalues"});
    return out;
}

namespace {

// Joint kernel of (q + B)(e_i) on S(V) (x) C^N, all matrix algebra.
int xi2_kernel_dim(const std::vector<Mat>& vg, int nExt, const Mat& mc, const Mat& md,
                   const std::vector<Rational>& bdiag) {
    int n = vg[0].rows() * nExt;
    Mat idN = Mat::identity(nExt);
    Mat stacked(0, n);
    bool first = true;
    for (std::size_t i = 0; i < vg.size(); ++i) {
        Mat mei = vg[i].kron(idN);
        Mat q = mc * mc * mei + mei * md * md - mc * mei * md * Scalar(2);
        Mat row = q + mei * Scalar(bdiag[i]);
        stacked = first ? row : Mat::vcat(stacked, row);
        first = false;
    }
    return stacked.kernel_basis().cols();
}

}  // namespace

ExtendedConnection extended_connection_d6(const Rational& beta) {
    ExtendedConnection ec;
    ec.dim = 6;
    ec.n_ext = 4;
    RepV v4 = build_clifford_v4();
    RepV v5 = build_clifford_v5();
    ec.v_gammas = v4.gamma;
    ec.tensor_factor = v5.gamma[0];  // a unit vector of Cl(R^5), squares to -1
    ec.tensor_square_ok = (ec.tensor_factor * ec.tensor_factor == -Mat::identity(4));
    Element xm_g12 = x_projector_element(kMask1234, false) * Element::monomial(mono({1, 2}));
    ec.cbar = matrix_of(xm_g12, v4).kron(ec.tensor_factor) * Scalar(beta);
    ec.d = Mat::zero(16, 16);
    ec.b_diag.assign(4, -beta * beta);
    ec.rank = 32;
    int k2 = xi2_kernel_dim(v4.gamma, 4, ec.cbar, ec.d, ec.b_diag);
    // When cbar kills the X+ part of the sigma_- slot the odd space is
    // restricted to X- S (x) C^N there.
    Element xp = x_projector_element(kMask1234, true);
    bool trivial_on_xp = (xm_g12 * xp).is_zero();
    if (beta != 0 && trivial_on_xp) {
        ec.restricted = true;
        ec.odd_dim = 8 + k2;
    } else {
        ec.odd_dim = 16 + k2;
    }
    ec.fraction = rat(ec.odd_dim, ec.rank);
    return ec;
}

ExtendedConnection extended_connection_d9(const Rational& alpha) {
    ExtendedConnection ec;
    ec.dim = 9;
    ec.n_ext = 2;
    RepV v7 = build_clifford_v7();
    ec.v_gammas = v7.gamma;
    Mat isigma3 = Mat::m2(Scalar::i(), Scalar(0), Scalar(0), -Scalar::i());
    ec.tensor_factor = isigma3;
    ec.tensor_square_ok = (isigma3 * isigma3 == -Mat::identity(2));
    Mat id2 = Mat::identity(2);
    Mat g1 = matrix_of(Element::generator(1), v7);
    Mat g123 = matrix_of(Element::monomial(mono({1, 2, 3})), v7);
    ec.cbar = g1.kron(id2) * Scalar(-alpha) + g123.kron(isigma3) * Scalar(2 * alpha);
    ec.d = g1.kron(id2) * Scalar(alpha / 2) + g123.kron(isigma3) * Scalar(alpha / 2);
    ec.b_diag = {-16 * alpha * alpha};
    for (int k = 0; k < 6; ++k) ec.b_diag.push_back(-4 * alpha * alpha);
    ec.rank = 32;
    int k2 = xi2_kernel_dim(v7.gamma, 2, ec.cbar, ec.d, ec.b_diag);
    ec.odd_dim = 16 + k2;
    ec.fraction = rat(ec.odd_dim, ec.rank);
    return ec;
}

}  // namespace cw
