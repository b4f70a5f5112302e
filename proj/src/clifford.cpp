#include "cw/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace cw {

std::pair<Mono, int> mono_mul(Mono a, Mono b) {
    int swaps = 0;
    for (int j = 0; j < 16; ++j)
        if (b & (1u << j)) swaps += std::popcount(unsigned(a) >> (j + 1));
    int sign = (swaps & 1) ? -1 : 1;
    if (std::popcount(unsigned(a & b)) & 1) sign = -sign;  // contracted generators square to -1
    return {Mono(a ^ b), sign};
}

Element Element::monomial(Mono m, Scalar coeff) {
    Element e;
    if (!coeff.is_zero()) e.terms_[m] = std::move(coeff);
    return e;
}

Scalar Element::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(Mono m, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator+(const Element& o) const {
    Element e = *this;
    for (const auto& [m, s] : o.terms_) e.add_term(m, s);
    return e;
}

Element Element::operator-(const Element& o) const {
    Element e = *this;
    for (const auto& [m, s] : o.terms_) e.add_term(m, -s);
    return e;
}

Element Element::operator-() const {
    Element e;
    for (const auto& [m, s] : terms_) e.terms_[m] = -s;
    return e;
}

Element Element::operator*(const Element& o) const {
    Element e;
    for (const auto& [ma, sa] : terms_)
        for (const auto& [mb, sb] : o.terms_) {
            auto [m, sign] = mono_mul(ma, mb);
            Scalar c = sa * sb;
            e.add_term(m, sign < 0 ? -c : c);
        }
    return e;
}

Element Element::operator*(const Scalar& s) const {
    Element e;
    if (s.is_zero()) return e;
    for (const auto& [m, c] : terms_) {
        Scalar p = c * s;
        if (!p.is_zero()) e.terms_[m] = std::move(p);
    }
    return e;
}

Element Element::bar() const {
    Element e;
    for (const auto& [m, s] : terms_) e.terms_[m] = (grade(m) & 1) ? -s : s;
    return e;
}

Element Element::grade_part(int g) const {
    Element e;
    for (const auto& [m, s] : terms_)
        if (grade(m) == g) e.terms_[m] = s;
    return e;
}

int Element::max_grade() const {
    int g = 0;
    for (const auto& [m, s] : terms_) g = std::max(g, grade(m));
    return g;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, s] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + s.str() + ")";
        if (m) {
            out += "g";
            for (int i = 1; i <= 9; ++i)
                if (m & (1u << (i - 1))) out += std::to_string(i);
        }
    }
    return out;
}

namespace {

const Scalar kOne(1);
const Scalar kI = Scalar::i();

Mat pauli(int k) {
    switch (k) {
        case 1:
            return Mat::m2(Scalar(0), kOne, kOne, Scalar(0));
        case 2:
            return Mat::m2(Scalar(0), -kI, kI, Scalar(0));
        default:
            return Mat::m2(kOne, Scalar(0), Scalar(0), Scalar(-1));
    }
}

Mat from_pairs(int n, std::initializer_list<std::tuple<int, int, int>> entries) {
    Mat m(n, n);
    for (auto [r, c, v] : entries) m.at(r - 1, c - 1) = Scalar(v);
    return m;
}

}  // namespace

std::array<Mat, 7> octonion_left_mults() {
    std::array<Mat, 7> L = {
        from_pairs(8, {{1, 2, -1}, {2, 1, 1}, {3, 4, -1}, {4, 3, 1}, {5, 6, -1}, {6, 5, 1}, {7, 8, 1}, {8, 7, -1}}),
        from_pairs(8, {{1, 3, -1}, {2, 4, 1}, {3, 1, 1}, {4, 2, -1}, {5, 7, -1}, {6, 8, -1}, {7, 5, 1}, {8, 6, 1}}),
        from_pairs(8, {{1, 4, -1}, {2, 3, -1}, {3, 2, 1}, {4, 1, 1}, {5, 8, -1}, {6, 7, 1}, {7, 6, -1}, {8, 5, 1}}),
        from_pairs(8, {{1, 5, -1}, {2, 6, 1}, {3, 7, 1}, {4, 8, 1}, {5, 1, 1}, {6, 2, -1}, {7, 3, -1}, {8, 4, -1}}),
        from_pairs(8, {{1, 6, -1}, {2, 5, -1}, {3, 8, 1}, {4, 7, -1}, {5, 2, 1}, {6, 1, 1}, {7, 4, 1}, {8, 3, -1}}),
        from_pairs(8, {{1, 7, -1}, {2, 8, -1}, {3, 5, -1}, {4, 6, 1}, {5, 3, 1}, {6, 4, -1}, {7, 1, 1}, {8, 2, 1}}),
        from_pairs(8, {{1, 8, -1}, {2, 7, 1}, {3, 6, -1}, {4, 5, -1}, {5, 4, 1}, {6, 3, 1}, {7, 2, -1}, {8, 1, 1}}),
    };
    return L;
}

RepV build_clifford_v9() {
    RepV v;
    Mat id8 = Mat::identity(8);
    auto L = octonion_left_mults();
    for (int a = 0; a < 7; ++a) v.gamma.push_back(pauli(1).kron(L[a]));
    v.gamma.push_back((pauli(2) * (-kI)).kron(id8));
    v.gamma.push_back((pauli(3) * (-kI)).kron(id8));
    v.charge = pauli(3).kron(id8);
    return v;
}

RepV build_clifford_v7() {
    RepV v;
    auto L = octonion_left_mults();
    for (int a = 0; a < 7; ++a) v.gamma.push_back(L[a]);
    return v;
}

RepV build_clifford_v5() {
    RepV v;
    Mat id2 = Mat::identity(2);
    v.gamma.push_back((pauli(1) * kI).kron(pauli(1)));
    v.gamma.push_back((pauli(1) * kI).kron(pauli(2)));
    v.gamma.push_back((pauli(1) * kI).kron(pauli(3)));
    v.gamma.push_back((pauli(2) * kI).kron(id2));
    v.gamma.push_back((pauli(3) * kI).kron(id2));
    return v;
}

RepV build_clifford_v4() {
    RepV v5 = build_clifford_v5();
    RepV v;
    v.gamma.assign(v5.gamma.begin(), v5.gamma.begin() + 4);
    return v;
}

CliffordRepW build_clifford_w(const RepV& v) {
    CliffordRepW w;
    w.v = v;
    int n = v.size();
    Mat idn = Mat::identity(n);
    Scalar r2 = Scalar::sqrt2();
    Mat gp2 = Mat::m2(Scalar(0), r2, Scalar(0), Scalar(0));   // gamma_+
    Mat gm2 = Mat::m2(Scalar(0), Scalar(0), -r2, Scalar(0));  // gamma_-
    Mat sig2 = Mat::m2(Scalar(-1), Scalar(0), Scalar(0), kOne);
    w.gamma_plus = gp2.kron(idn);
    w.gamma_minus = gm2.kron(idn);
    for (const Mat& g : v.gamma) w.gamma.push_back(sig2.kron(g));
    w.sigma = (w.gamma_plus * w.gamma_minus - w.gamma_minus * w.gamma_plus) * Scalar(rat(1, 2));
    if (v.charge.rows() > 0) w.charge = pauli(2).kron(v.charge);
    return w;
}

Mat monomial_matrix(const CliffordRepW& rep, const std::vector<int>& indices) {
    std::uint32_t seen = 0;
    Mat m = Mat::identity(rep.size());
    for (int idx : indices) {
        if (idx != IDX_PLUS && idx != IDX_MINUS && (idx < 1 || idx > rep.v.dim()))
            throw std::invalid_argument("monomial_matrix: index out of range");
        std::uint32_t bit = 1u << (idx == IDX_PLUS ? 20 : idx == IDX_MINUS ? 21 : idx);
        if (seen & bit) throw std::invalid_argument("monomial_matrix: duplicate index");
        seen |= bit;
        const Mat& g = (idx == IDX_PLUS)    ? rep.gamma_plus
                       : (idx == IDX_MINUS) ? rep.gamma_minus
                                            : rep.gamma[idx - 1];
        m = m * g;
    }
    return m;
}

Mat matrix_of(const Element& e, const RepV& v) {
    int n = v.size();
    Mat out(n, n);
    for (const auto& [m, s] : e.terms()) {
        Mat acc = Mat::identity(n);
        for (int i = 1; i <= v.dim(); ++i)
            if (m & (1u << (i - 1))) acc = acc * v.gamma[i - 1];
        out = out + acc * s;
    }
    return out;
}

int symmetry_sign(int g) {
    int t = (g * (g + 1) / 2) & 1;  // parity of the triangular number
    return t ? 1 : -1;
}

Scalar bilinear(const Mat& C, const Vec& xi, const Mat& A, const Vec& eta) {
    if (C.cols() != A.rows() || A.cols() != eta.rows() || C.rows() != xi.rows() || xi.cols() != 1 ||
        eta.cols() != 1)
        throw std::invalid_argument("bilinear: shape mismatch");
    Vec right = A * eta;
    Vec mid = C * right;
    Scalar s;
    for (int k = 0; k < xi.rows(); ++k) s += xi.at(k, 0) * mid.at(k, 0);
    return s;
}

Projector sigma_projector(const CliffordRepW& rep, bool plus) {
    Projector p;
    p.kind = plus ? Projector::Kind::sigma_plus : Projector::Kind::sigma_minus;
    Mat id = Mat::identity(rep.size());
    p.matrix = (plus ? id + rep.sigma : id - rep.sigma) * Scalar(rat(1, 2));
    return p;
}

Element x_projector_element(Mono index_set, bool plus) {
    auto [sq_mask, sq_sign] = mono_mul(index_set, index_set);
    if (sq_mask != 0) throw std::logic_error("x_projector: bad mask");
    // iota Gamma with iota in {1, i} so that (iota Gamma)^2 = +1.
    Scalar iota = (sq_sign > 0) ? Scalar(1) : Scalar::i();
    Scalar half = Scalar(rat(1, 2));
    Element e = Element(half);
    Scalar c = half * iota;
    return e + Element::monomial(index_set, plus ? c : -c);
}

Projector x_projector(const RepV& v, Mono index_set, bool plus) {
    Projector p;
    p.kind = plus ? Projector::Kind::x_plus : Projector::Kind::x_minus;
    p.index_set = index_set;
    p.matrix = matrix_of(x_projector_element(index_set, plus), v);
    return p;
}

}  // namespace cw
