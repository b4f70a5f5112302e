#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "cw/complexmat.hpp"
#include "cw/matrix.hpp"

namespace cw {

/// The four rational parameters of the connection family. Tuples are quoted
/// in the order (alpha_minus, alpha_plus_prime, alpha_plus, alpha_minus_prime).
struct CWParams {
    Rational alpha_plus, alpha_minus, alpha_plus_prime, alpha_minus_prime;
};

/// Real numbers mu_i with lambda_i = -i mu_i:
/// mu_{1,2} = a_- - a_+', mu_{3,4} = a_- + a_+', mu_5 = a_+ - a_+',
/// mu_{6..9} = a_+ + a_+'.
std::array<Rational, 9> eigen_root_reals(const CWParams& p);
/// The pure-imaginary eigen roots lambda_i themselves.
std::array<GaussianRational, 9> eigen_roots(const CWParams& p);

/// Diagonal symmetric form B with entries lambda_i^2 <= 0. Nondegenerate iff
/// the space is indecomposable.
struct BForm {
    std::vector<Rational> diag;

    int dim() const { return int(diag.size()); }
    int zero_count() const;
    bool indecomposable() const { return zero_count() == 0; }
    /// Equal-eigenvalue index classes (0-based), ordered by first member.
    std::vector<std::vector<int>> blocks() const;
};

BForm b_form(const CWParams& p);

/// Coordinate order everywhere: 0 = x^+, 1 = x^-, 2..(n+1) = x^1..x^n.
Mat metric_at(const BForm& b, const std::vector<Scalar>& x);

/// Nonzero Christoffel symbols. First kind: G1_mm_k = Gamma_{--,k},
/// G1_km_m = Gamma_{k-,-} = Gamma_{-k,-}; all others vanish. Second kind:
/// Gamma^k_{--} = Gamma_{--,k} and Gamma^+_{k-} = Gamma_{k-,-}.
struct Christoffel {
    std::vector<Scalar> first_mm_k;  // per spatial k
    std::vector<Scalar> first_km_m;  // per spatial k
};
Christoffel christoffel(const BForm& b, const std::vector<Scalar>& x);

// --- exact trig coefficient functions --------------------------------------

/// A finite sum of terms amp * {cos|sin}(freq * x^-) * (optional x^i factor).
/// Frequencies are Gaussian rationals (pure imaginary for B <= 0, so the trig
/// functions are cosh/sinh in disguise); the representation is closed under
/// the vector-field operations used here and supports exact equality.
class TrigPoly {
public:
    using Key = std::tuple<Rational, Rational, int, int>;  // freq re, freq im, is_sin, xindex

    TrigPoly() = default;
    static TrigPoly constant(Scalar c);
    static TrigPoly term(const GaussianRational& freq, bool is_sin, int xindex, const Scalar& amp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    TrigPoly operator+(const TrigPoly& o) const;
    TrigPoly operator-(const TrigPoly& o) const;
    TrigPoly operator*(const TrigPoly& o) const;  // throws if two x factors meet
    TrigPoly operator*(const Scalar& s) const;
    bool operator==(const TrigPoly& o) const { return terms_ == o.terms_; }

    TrigPoly d_minus() const;         // d/dx^-
    TrigPoly d_spatial(int i) const;  // d/dx^i, 0-based i

    cplx eval(cplx xminus, const std::vector<cplx>& xs) const;
    /// Exact value and first x^- derivative at x^- = 0, spatial point xs.
    std::pair<Scalar, Scalar> eval_jet0(const std::vector<Scalar>& xs) const;

    void add_term(const GaussianRational& freq, bool is_sin, int xindex, const Scalar& amp);

private:
    std::map<Key, Scalar> terms_;
};

/// Vector field with trig-type coefficients; components indexed like the
/// coordinates (0 = +, 1 = -, 2.. spatial).
struct VecField {
    std::vector<TrigPoly> comp;

    explicit VecField(int n = 9) : comp(n + 2) {}
    int dim() const { return int(comp.size()) - 2; }

    VecField operator+(const VecField& o) const;
    VecField operator*(const Scalar& s) const;
    bool operator==(const VecField& o) const { return comp == o.comp; }
    bool is_zero() const;

    /// Commutator [X, Y]^k = X^m d_m Y^k - Y^m d_m X^k.
    static VecField commutator(const VecField& x, const VecField& y);
};

struct KillingField {
    enum class Kind { plus, minus, trans, dual, rot };
    Kind kind;
    int i = -1, j = -1;  // 0-based spatial indices where applicable
    VecField field;
};

/// Basis adapted to e_+, e_-, the eigenbasis e_i, its duals, and so_B(V):
/// K_(+) = -d_+, K_(-) = -d_-,
/// K_(i) = cos(l_i x^-) d_i + l_i sin(l_i x^-) x^i d_+,
/// K_(i*) = -l_i sin(l_i x^-) d_i + l_i^2 cos(l_i x^-) x^i d_+,
/// K_(ij) = x^j d_i - x^i d_j for i, j in one eigenvalue block.
std::vector<KillingField> killing_basis(const CWParams& p);

struct KillingVerifyResult {
    bool pass = false;
    bool exact_ok = false;
    double max_float_residual = 0.0;
};

/// Checks nabla_mu K_nu + nabla_nu K_mu = 0: exactly at x^- = 0 together with
/// the first x^- jet, and numerically at the supplied sample points.
KillingVerifyResult killing_verify(const BForm& b, const KillingField& K,
                                   const std::vector<std::vector<cplx>>& float_samples,
                                   const std::vector<std::vector<Scalar>>& exact_spatial_samples,
                                   double tol = 1e-9);

// --- the isometry Lie algebra ----------------------------------------------

struct EvenLabel {
    enum class Type { plus, minus, trans, dual, rot };
    Type t;
    int i = -1, j = -1;  // 0-based; rot has i < j

    bool operator==(const EvenLabel& o) const { return t == o.t && i == o.i && j == o.j; }
};

std::string label_name(const EvenLabel& l);

/// Sparse combination of basis labels.
using EvenCombo = std::vector<std::pair<int, Scalar>>;

class CWLieAlgebra {
public:
    std::vector<EvenLabel> labels;

    int dim() const { return int(labels.size()); }
    int index_of(const EvenLabel& l) const;
    const EvenCombo& bracket(int a, int b) const { return table_[a][b]; }
    EvenCombo bracket_combo(const EvenCombo& x, const EvenCombo& y) const;
    bool jacobi_ok() const;

    friend CWLieAlgebra lie_algebra_with_blocks(const CWParams& p,
                                                const std::vector<std::vector<int>>& blocks);

private:
    std::vector<std::vector<EvenCombo>> table_;
};

/// Structure constants of the solvable algebra extended by so_B(V):
/// [e_-, e_i] = e_i*, [e_i*, e_-] = B e_i, [e_i*, e_j] = -<B e_i, e_j> e_+,
/// rot labels act as E_ij on translations and duals, e_+ central. The rot
/// label set is taken from the given index blocks.
CWLieAlgebra lie_algebra_with_blocks(const CWParams& p,
                                     const std::vector<std::vector<int>>& blocks);
/// Blocks derived from the equal-eigenvalue classes of b_form(p).
CWLieAlgebra lie_algebra(const CWParams& p);

/// nabla_mu K_nu with lowered second index, at a complex point / exactly at
/// x^- = 0. Row index mu, column nu, coordinate order as above.
MatD nabla_killing(const BForm& b, const VecField& K, const std::vector<cplx>& x);
Mat nabla_killing_exact0(const BForm& b, const VecField& K, const std::vector<Scalar>& x);

struct BracketsMatchResult {
    bool pass = false;
    int sign = 0;  // the uniform epsilon with [K_a, K_b] = sign * K_{[e_a, e_b]}
    bool float_ok = false;
};

/// Vector-field commutators vs. structure constants, exact as trig
/// polynomials, plus a secondary float spot check.
BracketsMatchResult killing_brackets_match(const CWParams& p, int n_float_samples = 4,
                                           double tol = 1e-9, std::uint64_t seed = 1);

struct Decomposability {
    int zero_count = 0;
    std::vector<std::vector<int>> blocks;
};

Decomposability decomposability(const BForm& b);

/// True iff the diagonals agree up to permutation and one positive rational
/// scale, i.e. the two spaces are isometric.
bool isometry_equivalent(const BForm& b1, const BForm& b2);

}  // namespace cw
