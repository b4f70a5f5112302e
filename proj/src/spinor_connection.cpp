#include "cw/spinor_connection.hpp"

#include <stdexcept>

namespace cw {

namespace {

const Mono kMask1234 = mono({1, 2, 3, 4});
const Mono kMask125 = mono({1, 2, 5});

Mat embed_blocks(const Mat& ul, const Mat& ur, const Mat& ll, const Mat& lr) {
    return Mat::vcat(Mat::hcat(ul, ur), Mat::hcat(ll, lr));
}

}  // namespace

ConnectionPair family_connection(const CWParams& p) {
    Element xp = x_projector_element(kMask1234, true);
    Element xm = x_projector_element(kMask1234, false);
    Element g125 = Element::monomial(kMask125);
    ConnectionPair pair;
    pair.cbar = (Scalar(p.alpha_plus) * xp + Scalar(p.alpha_minus) * xm) * g125;
    pair.d = (Scalar(p.alpha_plus_prime) * xp + Scalar(p.alpha_minus_prime) * xm) * g125;
    return pair;
}

Element s_map(const ConnectionPair& pair, const Element& x) { return pair.cbar * x - x * pair.d; }

Element q_map(const ConnectionPair& pair, const Element& x) { return s_map(pair, s_map(pair, x)); }

Mat cl_op(const Element& a, const CliffordRepW& rep) {
    int n = rep.v.size();
    Mat z(n, n);
    return embed_blocks(matrix_of(a.bar(), rep.v), z, z, matrix_of(a, rep.v));
}

RhoMap rho_map(const ConnectionPair& pair, const BForm& b, const CliffordRepW& rep,
               const CWLieAlgebra& alg) {
    if (pair.alpha != 0) throw std::invalid_argument("rho_map: only the alpha = 0 family is defined");
    int n = rep.v.size();
    Mat z(n, n);
    Scalar inv_r2 = Scalar::inv_sqrt2();
    RhoMap rho;
    for (const EvenLabel& l : alg.labels) {
        switch (l.t) {
            case EvenLabel::Type::plus:
                rho.images.push_back(Mat::zero(2 * n, 2 * n));
                break;
            case EvenLabel::Type::minus:
                rho.images.push_back(embed_blocks(matrix_of(pair.cbar, rep.v),
                                                  matrix_of(pair.epsilon, rep.v) * Scalar::sqrt2(), z,
                                                  matrix_of(pair.d, rep.v)));
                break;
            case EvenLabel::Type::trans: {
                Element s = s_map(pair, Element::generator(l.i + 1));
                rho.images.push_back(embed_blocks(z, matrix_of(s, rep.v) * (-inv_r2), z, z));
                break;
            }
            case EvenLabel::Type::dual: {
                Element bv = Element::generator(l.i + 1) * Scalar(b.diag[l.i]);
                rho.images.push_back(embed_blocks(z, matrix_of(bv, rep.v) * inv_r2, z, z));
                break;
            }
            case EvenLabel::Type::rot:
                rho.images.push_back(rep.gamma[l.i] * rep.gamma[l.j] * Scalar(rat(-1, 2)));
                break;
        }
    }
    return rho;
}

Mat curvature(const RhoMap& rho, const CWLieAlgebra& alg, int a, int b) {
    const EvenLabel& la = alg.labels[a];
    const EvenLabel& lb = alg.labels[b];
    auto in_w = [](const EvenLabel& l) {
        return l.t == EvenLabel::Type::plus || l.t == EvenLabel::Type::minus ||
               l.t == EvenLabel::Type::trans;
    };
    if (!in_w(la) || !in_w(lb)) throw std::invalid_argument("curvature: arguments must lie in W");
    Mat r = rho.of(a) * rho.of(b) - rho.of(b) * rho.of(a);
    for (const auto& [k, v] : alg.bracket(a, b)) r = r - rho.of(k) * v;
    return r;
}

bool flat_check(const ConnectionPair& pair, const BForm& b) {
    for (int i = 0; i < b.dim(); ++i) {
        Element e = Element::generator(i + 1);
        if (q_map(pair, e) + e * Scalar(b.diag[i]) != Element()) return false;
    }
    return true;
}

ParallelSpace parallel_space(const ConnectionPair& pair, const BForm& b, const CliffordRepW& rep) {
    int n = rep.v.size();
    Mat stacked(0, n);
    bool first = true;
    for (int i = 0; i < b.dim(); ++i) {
        Element e = Element::generator(i + 1);
        Mat mi = matrix_of(q_map(pair, e) + e * Scalar(b.diag[i]), rep.v);
        stacked = first ? mi : Mat::vcat(stacked, mi);
        first = false;
    }
    ParallelSpace ps;
    ps.xi2_kernel = stacked.kernel_basis();
    ps.dim = n + ps.xi2_kernel.cols();
    for (int k = 0; k < n; ++k) ps.basis.push_back({unit_vec(n, k), Vec(n, 1)});
    for (int c = 0; c < ps.xi2_kernel.cols(); ++c)
        ps.basis.push_back({Vec(n, 1), ps.xi2_kernel.col(c)});
    return ps;
}

bool satisfies_family_constraints(const CliffordRepW& rep, const OddElement& odd) {
    Mat xm = x_projector(rep.v, kMask1234, false).matrix;
    return (xm * odd.xi2).is_zero();
}

Vec to_spinor(const CliffordRepW& rep, const OddElement& odd) {
    return Mat::vcat(odd.xi1, odd.xi2);
}

OddElement from_spinor(const CliffordRepW& rep, const Vec& v) {
    int n = rep.v.size();
    return {v.block(0, 0, n, 1), v.block(n, 0, n, 1)};
}

MatD exp_element(const Element& a, const RepV& v, cplx t) {
    // Idempotent route: a = a X+ + a X- with (a X+-)^2 sector-scalar.
    Element xp = x_projector_element(kMask1234, true);
    Element xm = x_projector_element(kMask1234, false);
    bool structured = (a * xp == xp * a);
    auto sector_scalar = [&](const Element& proj, Scalar& out) {
        Element ap = a * proj;
        Element sq = ap * ap;
        // sq must equal s * proj for a scalar s.
        for (const auto& [m, coef] : proj.terms()) {
            Scalar s = sq.coeff(m) / coef;
            if (sq == proj * s) {
                out = s;
                return true;
            }
            break;
        }
        return sq.is_zero() && (out = Scalar(), true);
    };
    Scalar sp, sm;
    structured = structured && sector_scalar(xp, sp) && sector_scalar(xm, sm);
    if (structured) {
        MatD out(v.size(), v.size());
        auto add_sector = [&](const Element& proj, const Scalar& s2) {
            MatD p = MatD::from(matrix_of(proj, v));
            MatD ap = MatD::from(matrix_of(a * proj, v));
            cplx root = std::sqrt(s2.to_complex());
            if (std::abs(root) < 1e-300) {
                out = out + p + ap * t;  // nilpotent sector
            } else {
                cplx z = t * root;
                out = out + p * std::cosh(z) + ap * (std::sinh(z) / root);
            }
        };
        add_sector(xp, sp);
        add_sector(xm, sm);
        return out;
    }
    return expm(MatD::from(matrix_of(a, v)) * t);
}

Vec parallel_spinor_eval_exact(const ParallelField& f, const CliffordRepW& rep,
                               const std::vector<Scalar>& x) {
    if (!x[1].is_zero())
        throw std::invalid_argument("parallel_spinor_eval_exact: needs x^- = 0");
    int n = rep.v.size();
    Vec out = Mat::vcat(f.data.xi1, f.data.xi2);
    Vec xi2_lift = Mat::vcat(Vec(n, 1), f.data.xi2);
    Scalar half(rat(1, 2));
    for (int i = 0; i < rep.v.dim(); ++i) {
        if (x[2 + i].is_zero()) continue;
        Element s = s_map(f.pair, Element::generator(i + 1));
        out = out + rep.gamma_plus * (cl_op(s, rep) * xi2_lift) * (half * x[2 + i]);
    }
    return out;
}

MatD parallel_spinor_eval(const ParallelField& f, const CliffordRepW& rep,
                          const std::vector<cplx>& x) {
    int n = rep.v.size();
    MatD xi1 = exp_element(f.pair.cbar, rep.v, -x[1]) * MatD::from(f.data.xi1);
    MatD xi2 = exp_element(f.pair.d, rep.v, -x[1]) * MatD::from(f.data.xi2);
    MatD out(2 * n, 1);
    for (int k = 0; k < n; ++k) {
        out.at(k, 0) = xi1.at(k, 0);
        out.at(n + k, 0) = xi2.at(k, 0);
    }
    for (int i = 0; i < rep.v.dim(); ++i) {
        if (x[2 + i] == cplx(0.0)) continue;
        Element s = s_map(f.pair, Element::generator(i + 1));
        MatD op = MatD::from(rep.gamma_plus * cl_op(s, rep));
        MatD lift(2 * n, 1);
        for (int k = 0; k < n; ++k) lift.at(n + k, 0) = xi2.at(k, 0);
        out = out + op * lift * (0.5 * x[2 + i]);
    }
    return out;
}

namespace {

int dir_code(int direction, int vdim) {
    if (direction == IDX_PLUS) return 0;
    if (direction == IDX_MINUS) return 1;
    if (direction >= 1 && direction <= vdim) return 2 + (direction - 1);
    throw std::invalid_argument("covariant_derivative: unsupported direction");
}

}  // namespace

Vec covariant_derivative_exact(const ConnectionPair& pair, const BForm& b,
                               const CliffordRepW& rep, const ParallelField& f,
                               const std::vector<Scalar>& x, int direction) {
    int code = dir_code(direction, rep.v.dim());
    int n = rep.v.size();
    if (!x[1].is_zero()) throw std::invalid_argument("covariant_derivative_exact: needs x^- = 0");
    Vec xi = parallel_spinor_eval_exact(f, rep, x);
    if (code == 0) return Vec(2 * n, 1);  // d_+ xi = 0 and rho(e_+) = 0
    Scalar half(rat(1, 2));
    if (code >= 2) {
        int i = code - 2;
        // d_i xi = (1/2) Gamma_+ s(e_i) xi2(x^-); here x^- = 0.
        Vec xi2_lift = Mat::vcat(Vec(n, 1), f.data.xi2);
        Element s_field = s_map(f.pair, Element::generator(i + 1));
        Vec dxi = rep.gamma_plus * (cl_op(s_field, rep) * xi2_lift) * half;
        Element s_conn = s_map(pair, Element::generator(i + 1));
        Mat rho_i = Mat::vcat(Mat::hcat(Mat(n, n), matrix_of(s_conn, rep.v) * (-Scalar::inv_sqrt2())),
                              Mat(n, 2 * n));
        return dxi + rho_i * xi;
    }
    // minus direction at x^- = 0.
    Vec dxi(2 * n, 1);
    {
        Vec xi1_part = matrix_of(f.pair.cbar, rep.v) * f.data.xi1 * Scalar(-1);
        Vec xi2_part = matrix_of(f.pair.d, rep.v) * f.data.xi2 * Scalar(-1);
        dxi = Mat::vcat(xi1_part, xi2_part);
        Vec dxi2_lift = Mat::vcat(Vec(n, 1), xi2_part);
        for (int i = 0; i < rep.v.dim(); ++i) {
            if (x[2 + i].is_zero()) continue;
            Element s_field = s_map(f.pair, Element::generator(i + 1));
            dxi = dxi + rep.gamma_plus * (cl_op(s_field, rep) * dxi2_lift) * (half * x[2 + i]);
        }
    }
    // Spin-connection part of nabla_-: + (1/2) sum_i x^i Gamma_+ B(e_i) xi.
    Vec corr(2 * n, 1);
    for (int i = 0; i < rep.v.dim(); ++i) {
        if (x[2 + i].is_zero()) continue;
        Element bv = Element::generator(i + 1) * Scalar(b.diag[i]);
        corr = corr + rep.gamma_plus * (cl_op(bv, rep) * xi) * (half * x[2 + i]);
    }
    Mat rho_minus = Mat::vcat(
        Mat::hcat(matrix_of(pair.cbar, rep.v), matrix_of(pair.epsilon, rep.v) * Scalar::sqrt2()),
        Mat::hcat(Mat(n, n), matrix_of(pair.d, rep.v)));
    return dxi + corr + rho_minus * xi;
}

MatD covariant_derivative(const ConnectionPair& pair, const BForm& b, const CliffordRepW& rep,
                          const ParallelField& f, const std::vector<cplx>& x, int direction) {
    int code = dir_code(direction, rep.v.dim());
    int n = rep.v.size();
    MatD xi = parallel_spinor_eval(f, rep, x);
    MatD zero(2 * n, 1);
    if (code == 0) return zero;
    MatD xi2t = exp_element(f.pair.d, rep.v, -x[1]) * MatD::from(f.data.xi2);
    auto lift2 = [&](const MatD& w) {
        MatD v(2 * n, 1);
        for (int k = 0; k < n; ++k) v.at(n + k, 0) = w.at(k, 0);
        return v;
    };
    if (code >= 2) {
        int i = code - 2;
        Element s_field = s_map(f.pair, Element::generator(i + 1));
        MatD dxi = MatD::from(rep.gamma_plus * cl_op(s_field, rep)) * lift2(xi2t) * cplx(0.5);
        Element s_conn = s_map(pair, Element::generator(i + 1));
        Mat rho_i = Mat::vcat(Mat::hcat(Mat(n, n), matrix_of(s_conn, rep.v) * (-Scalar::inv_sqrt2())),
                              Mat(n, 2 * n));
        return dxi + MatD::from(rho_i) * xi;
    }
    // d_- of the closed form.
    MatD xi1t = exp_element(f.pair.cbar, rep.v, -x[1]) * MatD::from(f.data.xi1);
    MatD dxi1 = MatD::from(matrix_of(f.pair.cbar, rep.v)) * xi1t * cplx(-1.0);
    MatD dxi2 = MatD::from(matrix_of(f.pair.d, rep.v)) * xi2t * cplx(-1.0);
    MatD dxi(2 * n, 1);
    for (int k = 0; k < n; ++k) {
        dxi.at(k, 0) = dxi1.at(k, 0);
        dxi.at(n + k, 0) = dxi2.at(k, 0);
    }
    for (int i = 0; i < rep.v.dim(); ++i) {
        if (x[2 + i] == cplx(0.0)) continue;
        Element s_field = s_map(f.pair, Element::generator(i + 1));
        dxi = dxi + MatD::from(rep.gamma_plus * cl_op(s_field, rep)) * lift2(dxi2) * (0.5 * x[2 + i]);
    }
    MatD corr(2 * n, 1);
    for (int i = 0; i < rep.v.dim(); ++i) {
        if (x[2 + i] == cplx(0.0)) continue;
        Element bv = Element::generator(i + 1) * Scalar(b.diag[i]);
        corr = corr + MatD::from(rep.gamma_plus * cl_op(bv, rep)) * xi * (0.5 * x[2 + i]);
    }
    Mat rho_minus = Mat::vcat(
        Mat::hcat(matrix_of(pair.cbar, rep.v), matrix_of(pair.epsilon, rep.v) * Scalar::sqrt2()),
        Mat::hcat(Mat(n, n), matrix_of(pair.d, rep.v)));
    return dxi + corr + MatD::from(rho_minus) * xi;
}

}  // namespace cw
