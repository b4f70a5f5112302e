#pragma once

#include "cw/cahen_wallach.hpp"
#include "cw/clifford.hpp"
#include "cw/complexmat.hpp"

namespace cw {

/// Quadratic Clifford pair (cbar, d) plus the free parameters that are fixed
/// to zero throughout the homogeneous family used here.
struct ConnectionPair {
    Element cbar, d;
    Element epsilon;          // free parameter of the flat case; zero here
    Rational alpha = 0;       // pseudo-scalar parameter; zero for odd dim V
};

/// cbar = (a+ X+ + a- X-) G125, d = (a+' X+ + a-' X-) G125 with
/// X+- = (1 +- G1234)/2.
ConnectionPair family_connection(const CWParams& p);

/// s_{cbar,d}(x) = cbar x - x d.
Element s_map(const ConnectionPair& pair, const Element& x);
/// q = s o s; equals cbar^2 x + x d^2 - 2 cbar x d.
Element q_map(const ConnectionPair& pair, const Element& x);

/// Action of 1 (x)^ a on the null-extended spinor space: block
/// diag(m(bar a), m(a)).
Mat cl_op(const Element& a, const CliffordRepW& rep);

/// The equivariant map defining the homogeneous spinor connection, stored as
/// one matrix per isometry-algebra label:
///   rho(e_+) = 0,
///   rho(e_-) = [[cbar, sqrt2 eps], [0, d]],
///   rho(e_i) = [[0, -s(e_i)/sqrt2], [0, 0]],
///   rho(e_i*) = [[0, B e_i / sqrt2], [0, 0]],
///   rho(e_ij) = -(1/2) Gamma_i Gamma_j.
struct RhoMap {
    std::vector<Mat> images;  // aligned with CWLieAlgebra::labels
    const Mat& of(int label_index) const { return images[label_index]; }
};

RhoMap rho_map(const ConnectionPair& pair, const BForm& b, const CliffordRepW& rep,
               const CWLieAlgebra& alg);

/// R(X,Y) = [rho X, rho Y] - rho([X,Y]); the bracket of two W-elements lands
/// in V*, where rho coincides with the spin representation.
Mat curvature(const RhoMap& rho, const CWLieAlgebra& alg, int a, int b);

/// Flatness: q(e_i) = -B(e_i) for all i, exactly.
bool flat_check(const ConnectionPair& pair, const BForm& b);

/// Constant data of a parallel spinor: xi1 in the sigma_- slot, xi2 in the
/// sigma_+ slot (each a V-spinor).
struct OddElement {
    Vec xi1, xi2;
};

/// xi1 free, xi2 constrained by (q(e_i) + B(e_i)) xi2 = 0 for all i.
struct ParallelSpace {
    int dim = 0;
    Mat xi2_kernel;  // 16 x k exact kernel basis
    std::vector<OddElement> basis;
};

ParallelSpace parallel_space(const ConnectionPair& pair, const BForm& b, const CliffordRepW& rep);

/// True iff the constant data parametrizes a point of the 24-dimensional
/// family space: X-_{1234} xi2 = 0.
bool satisfies_family_constraints(const CliffordRepW& rep, const OddElement& odd);

Vec to_spinor(const CliffordRepW& rep, const OddElement& odd);          // (xi1; xi2)
OddElement from_spinor(const CliffordRepW& rep, const Vec& v);

/// Closed-form parallel section determined by a pair and its constant data.
struct ParallelField {
    ConnectionPair pair;
    OddElement data;
};

/// exp(t m(a)) acting on V-spinors; uses the idempotent decomposition
/// exp = cosh + sinh * a/sqrt(a^2) on each X+- sector when a^2 is
/// sector-scalar, and scaling-and-squaring otherwise.
MatD exp_element(const Element& a, const RepV& v, cplx t);

/// Exact evaluation at x^- = 0 (throws otherwise).
Vec parallel_spinor_eval_exact(const ParallelField& f, const CliffordRepW& rep,
                               const std::vector<Scalar>& x);
MatD parallel_spinor_eval(const ParallelField& f, const CliffordRepW& rep,
                          const std::vector<cplx>& x);

/// D_mu = nabla_mu + rho(e_mu) applied to the closed-form section; direction
/// is IDX_PLUS, IDX_MINUS or 1..9. The connection comes from `pair`, which
/// need not be the pair that generated the field (negative controls).
Vec covariant_derivative_exact(const ConnectionPair& pair, const BForm& b,
                               const CliffordRepW& rep, const ParallelField& f,
                               const std::vector<Scalar>& x, int direction);
MatD covariant_derivative(const ConnectionPair& pair, const BForm& b, const CliffordRepW& rep,
                          const ParallelField& f, const std::vector<cplx>& x, int direction);

}  // namespace cw
