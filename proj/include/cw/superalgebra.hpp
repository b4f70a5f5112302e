#pragma once

#include "cw/spinor_connection.hpp"

namespace cw {

/// Shared 11-dimensional representation data; built once.
const CliffordRepW& rep11();

/// The 28-label subalgebra spanned by the family's Killing directions:
/// rotation labels are fixed to the blocks {1,2}, {3,4}, {6..9} regardless of
/// accidental eigenvalue coincidences, so the superalgebra structure is
/// uniform across the parameter space.
CWLieAlgebra family_lie_algebra(const CWParams& p);

/// Coefficient vector over an algebra's labels.
struct EvenElement {
    std::vector<Scalar> coeff;

    explicit EvenElement(int n = 0) : coeff(n) {}
    bool is_zero() const;
    EvenElement operator+(const EvenElement& o) const;
    EvenElement operator*(const Scalar& s) const;
};

/// Exact basis of the 24-dimensional odd space: the 16 unit spinors in the
/// sigma_- slot followed by an 8-vector basis of X+_{1234} S(V) in the
/// sigma_+ slot.
struct OddBasis {
    Mat embed;     // 32 x 24
    Mat xi2_basis;  // 16 x 8
    std::vector<OddElement> vecs;
};

const OddBasis& odd_basis24();

/// Exact coordinates of an odd element in the 24-basis; throws if the data
/// violates the X-_{1234} xi2 = 0 constraint.
Vec odd_coords(const OddElement& odd);
OddElement odd_from_coords(const Vec& coords);

/// Everything the superalgebra checks need for one parameter point.
struct SuperContext {
    CWParams params;
    BForm b;
    ConnectionPair pair;
    CWLieAlgebra alg;  // family algebra, 28 labels
    RhoMap rho;
    int bracket_sign = -1;  // [K_a, K_b] = bracket_sign * K_{[e_a, e_b]}
};

SuperContext make_context(const CWParams& p);

/// Even action on constant data: the image of K_(mu) is -rho(e_mu) applied to
/// (xi1, xi2); closure in the 24-space holds for every label.
OddElement lie_derivative_alg(const SuperContext& cx, int label_index, const OddElement& odd);

/// 24 x 24 matrix of lie_derivative_alg for one label.
Mat lie_action_matrix(const SuperContext& cx, int label_index);

/// Spinorial Lie derivative along a Killing basis field, evaluated in
/// coordinates: nabla_K xi - (1/4) sum (nabla_mu K_nu) Gamma^mu Gamma^nu xi.
Vec lie_derivative_coord_exact0(const SuperContext& cx, const KillingField& K,
                                const ParallelField& f);
MatD lie_derivative_coord(const SuperContext& cx, const KillingField& K, const ParallelField& f,
                          const std::vector<cplx>& x);

/// Symmetric odd-odd bracket; components over the 28 labels.
EvenElement oddodd(const SuperContext& cx, const OddElement& a, const OddElement& b);

/// Odd-odd component of one even label as a symmetric 24 x 24 matrix.
Mat oddodd_component_matrix(const SuperContext& cx, int label_index);

/// Alternative dual-label route through s(B^{-1} e_i); defined only for
/// nondegenerate B. Used as a cross check of the primary i/lambda_i form.
Scalar oddodd_dual_via_binv(const SuperContext& cx, int i, const OddElement& a,
                            const OddElement& b);

/// [L_a, L_b] = sign * L_{[e_a, e_b]} for all label pairs, exactly.
bool check_even_odd_rep(const SuperContext& cx);

/// Residual [K, {xi, xi}] - 2 {L_K xi, xi} for one label and one odd element.
EvenElement check_evo(const SuperContext& cx, int label_index, const OddElement& odd);

/// The same compatibility as an exact matrix identity for every (label,
/// component) pair: sum_nu sign c^k_{a nu} Q_nu = L_a^T Q_k + Q_k L_a.
bool check_evo_all(const SuperContext& cx);

/// L_{{xi,xi}} xi as constant data; the xi1/xi2 slots of the result are the
/// two separated constant-spinor obstructions.
OddElement ooo_residual(const SuperContext& cx, const OddElement& odd);

struct SusyReport {
    bool susy = false;
    bool polarized_diag_ok = false;  // basis + pairwise sums scan
    bool trilinear_ok = false;       // full symmetric-trilinear vanishing
    Vec witness;                     // 24-coords of a failing element, if any
};

/// True iff the odd-odd-odd obstruction vanishes identically on the
/// 24-dimensional odd space. Requires indecomposable B.
SusyReport susy_report(const CWParams& p);
bool susy_check(const CWParams& p);

/// Assembled per-point data used by the sweep and the dump: the even-even
/// constants live in the context's algebra, the even action and odd-odd
/// component matrices are 24 x 24.
struct BracketTable {
    std::vector<Mat> even_odd;  // per label: matrix of lie_derivative_alg
    std::vector<Mat> odd_odd;   // per label: symmetric component matrix
};

BracketTable bracket_table(const SuperContext& cx);

/// Fast assembly of the same matrices from cached parameter-independent
/// blocks; exact and equal to bracket_table (the unit tests compare them).
BracketTable bracket_table_fast(const CWParams& p);

/// Core of susy_check with a label subset and an invariant odd subspace,
/// used for the decomposable reductions. `label_keep[k]` masks the family
/// labels; `subspace` is a 24 x m coordinate basis.
bool susy_trilinear_zero(const BracketTable& t, const std::vector<bool>& label_keep,
                         const Mat& subspace);

}  // namespace cw
