#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cw/matrix.hpp"

namespace cw {

/// Basis monomial of Cl(R^n), n <= 9: bit (i-1) set means generator i is
/// present. The empty mask is the identity. Convention vw + wv = -2 g(v,w)
/// with g euclidean, so each generator squares to -1.
using Mono = std::uint16_t;

inline Mono mono(std::initializer_list<int> indices) {
    Mono m = 0;
    for (int i : indices) m |= Mono(1u << (i - 1));
    return m;
}

inline int grade(Mono m) { return __builtin_popcount(m); }

/// Product of two basis monomials: resulting mask is a XOR b; the sign counts
/// the transpositions needed to interleave plus one -1 per contracted pair.
std::pair<Mono, int> mono_mul(Mono a, Mono b);

/// Formal exact element of Cl(R^9) (or a lower-dimensional subalgebra).
class Element {
public:
    Element() = default;
    explicit Element(Scalar s) {
        if (!s.is_zero()) terms_[0] = std::move(s);
    }
    static Element monomial(Mono m, Scalar coeff = Scalar(1));
    static Element generator(int i) { return monomial(mono({i})); }

    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(Mono m) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator*(const Scalar& s) const;
    Element operator-() const;
    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Sign flip on odd-grade terms; an algebra involution.
    Element bar() const;
    Element grade_part(int g) const;
    int max_grade() const;

    void add_term(Mono m, const Scalar& s);

    std::string str() const;

private:
    std::map<Mono, Scalar> terms_;
};

inline Element operator*(const Scalar& s, const Element& e) { return e * s; }

/// The seven 8x8 matrices of left multiplication by the imaginary octonion
/// units: real, antisymmetric, L_a^2 = -1, L_a L_b = -L_b L_a for a != b.
std::array<Mat, 7> octonion_left_mults();

/// Gamma matrices for an n-dimensional euclidean space plus the charge
/// conjugation when one is constructed (dim 9 only here).
struct RepV {
    std::vector<Mat> gamma;  // n matrices, each N x N
    Mat charge;              // empty unless provided
    int dim() const { return int(gamma.size()); }
    int size() const { return gamma.empty() ? 0 : gamma[0].rows(); }
};

/// dim 9, 16x16: gamma_a = sigma1 (x) L_a, gamma_8 = -i sigma2 (x) 1,
/// gamma_9 = -i sigma3 (x) 1; C_V = sigma3 (x) 1 is symmetric and satisfies
/// gamma_i^T C_V = C_V gamma_i.
RepV build_clifford_v9();
/// Small euclidean cases used by the dimension-6/9 reductions.
RepV build_clifford_v7();  // 8x8, the octonion matrices themselves
RepV build_clifford_v5();  // 4x4
RepV build_clifford_v4();  // 4x4, first four of the dim-5 set

/// Null-pair extension Cl(R^{1,1} + V): Gamma_+ = gamma_+ (x) 1,
/// Gamma_- = gamma_- (x) 1, Gamma_i = sigma (x) gamma_i with
/// gamma_+- = (i sigma2 +- sigma1)/sqrt2 and sigma = -sigma3.
struct CliffordRepW {
    Mat gamma_plus, gamma_minus;  // 2N x 2N
    std::vector<Mat> gamma;       // Gamma_i
    Mat sigma;                    // (1/2)[Gamma_+, Gamma_-]
    Mat charge;                   // C_W = sigma2 (x) C_V (empty if no C_V)
    RepV v;                       // the underlying euclidean rep
    int size() const { return gamma_plus.rows(); }
};

CliffordRepW build_clifford_w(const RepV& v);
inline CliffordRepW build_clifford_w11(const RepV& v9) { return build_clifford_w(v9); }

/// Index labels for monomial_matrix: 1..9 are spatial, IDX_PLUS / IDX_MINUS
/// the null directions.
inline constexpr int IDX_PLUS = 10;
inline constexpr int IDX_MINUS = 11;

/// Ordered product of distinct generators; throws on duplicate indices.
Mat monomial_matrix(const CliffordRepW& rep, const std::vector<int>& indices);

/// Matrix of a formal Cl(V) element in the given euclidean representation.
Mat matrix_of(const Element& e, const RepV& v);

/// Grade symmetry of the charge conjugation pairing:
/// C(xi, A eta) = Delta_grade * C(eta, A xi) with Delta_l = -(-1)^{l(l+1)/2}.
int symmetry_sign(int grade);

/// xi^T C A eta, exact.
Scalar bilinear(const Mat& C, const Vec& xi, const Mat& A, const Vec& eta);

/// Idempotents. sigma_pm = (1 +- sigma)/2 on the W-representation;
/// X_pm(mask) = (1 +- iota Gamma_mask)/2 with iota in {1, i} chosen so the
/// square is +1.
struct Projector {
    enum class Kind { sigma_plus, sigma_minus, x_plus, x_minus };
    Kind kind;
    Mono index_set = 0;  // X projectors only
    Mat matrix;
};

Projector sigma_projector(const CliffordRepW& rep, bool plus);
/// Element-level X projector in Cl(V).
Element x_projector_element(Mono index_set, bool plus);
/// Matrix-level X projector on a euclidean rep.
Projector x_projector(const RepV& v, Mono index_set, bool plus);

}  // namespace cw
