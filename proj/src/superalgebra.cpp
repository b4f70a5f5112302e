#include "cw/superalgebra.hpp"

#include <map>
#include <stdexcept>

namespace cw {

namespace {

const Mono kMask1234 = mono({1, 2, 3, 4});
const Mono kMask125 = mono({1, 2, 5});

Vec lift1(const Vec& v) { return Mat::vcat(v, Vec(v.rows(), 1)); }
Vec lift2(const Vec& v) { return Mat::vcat(Vec(v.rows(), 1), v); }

Mat slot_mask(const Mat& e32, int slot) {
    Mat out = e32;
    int n = e32.rows() / 2;
    for (int r = (slot == 1 ? n : 0); r < (slot == 1 ? 2 * n : n); ++r)
        for (int c = 0; c < out.cols(); ++c) out.at(r, c) = Scalar();
    return out;
}

}  // namespace

const CliffordRepW& rep11() {
    static const CliffordRepW rep = build_clifford_w(build_clifford_v9());
    return rep;
}

CWLieAlgebra family_lie_algebra(const CWParams& p) {
    static const std::vector<std::vector<int>> blocks = {{0, 1}, {2, 3}, {4}, {5, 6, 7, 8}};
    return lie_algebra_with_blocks(p, blocks);
}

bool EvenElement::is_zero() const {
    for (const auto& c : coeff)
        if (!c.is_zero()) return false;
    return true;
}

EvenElement EvenElement::operator+(const EvenElement& o) const {
    EvenElement r(int(coeff.size()));
    for (std::size_t k = 0; k < coeff.size(); ++k) r.coeff[k] = coeff[k] + o.coeff[k];
    return r;
}

EvenElement EvenElement::operator*(const Scalar& s) const {
    EvenElement r(int(coeff.size()));
    for (std::size_t k = 0; k < coeff.size(); ++k) r.coeff[k] = coeff[k] * s;
    return r;
}

const OddBasis& odd_basis24() {
    static const OddBasis basis = [] {
        const CliffordRepW& rep = rep11();
        int n = rep.v.size();
        OddBasis ob;
        Mat xp = x_projector(rep.v, kMask1234, true).matrix;
        Mat cur(n, 0);
        for (int c = 0; c < n && cur.cols() < n / 2; ++c) {
            Mat cand = cur.cols() ? Mat::hcat(cur, xp.col(c)) : xp.col(c);
            if (cand.rank() == cand.cols()) cur = cand;
        }
        if (cur.cols() != n / 2) throw std::logic_error("odd_basis24: X+ sector has wrong rank");
        ob.xi2_basis = cur;
        ob.embed = Mat(2 * n, n + n / 2);
        for (int k = 0; k < n; ++k) ob.embed.at(k, k) = Scalar(1);
        for (int c = 0; c < n / 2; ++c)
            for (int r = 0; r < n; ++r) ob.embed.at(n + r, n + c) = cur.at(r, c);
        for (int k = 0; k < n; ++k) ob.vecs.push_back({unit_vec(n, k), Vec(n, 1)});
        for (int c = 0; c < n / 2; ++c) ob.vecs.push_back({Vec(n, 1), cur.col(c)});
        return ob;
    }();
    return basis;
}

Vec odd_coords(const OddElement& odd) {
    const OddBasis& ob = odd_basis24();
    int n = odd.xi1.rows();
    auto y = Mat::solve(ob.xi2_basis, odd.xi2);
    if (!y) throw std::invalid_argument("odd_coords: xi2 violates the X+ sector constraint");
    Vec out(n + n / 2, 1);
    for (int k = 0; k < n; ++k) out.at(k, 0) = odd.xi1.at(k, 0);
    for (int c = 0; c < n / 2; ++c) out.at(n + c, 0) = y->at(c, 0);
    return out;
}

OddElement odd_from_coords(const Vec& coords) {
    const OddBasis& ob = odd_basis24();
    Vec v32 = ob.embed * coords;
    int n = v32.rows() / 2;
    return {v32.block(0, 0, n, 1), v32.block(n, 0, n, 1)};
}

SuperContext make_context(const CWParams& p) {
    SuperContext cx;
    cx.params = p;
    cx.b = b_form(p);
    cx.pair = family_connection(p);
    cx.alg = family_lie_algebra(p);
    cx.rho = rho_map(cx.pair, cx.b, rep11(), cx.alg);
    cx.bracket_sign = -1;
    return cx;
}

OddElement lie_derivative_alg(const SuperContext& cx, int label_index, const OddElement& odd) {
    const CliffordRepW& rep = rep11();
    Vec w = to_spinor(rep, odd);
    Vec img = -(cx.rho.of(label_index) * w);
    return from_spinor(rep, img);
}

Mat lie_action_matrix(const SuperContext& cx, int label_index) {
    const OddBasis& ob = odd_basis24();
    Mat out(24, 24);
    for (int c = 0; c < 24; ++c) {
        Vec col = odd_coords(lie_derivative_alg(cx, label_index, ob.vecs[c]));
        for (int r = 0; r < 24; ++r) out.at(r, c) = col.at(r, 0);
    }
    return out;
}

// --- odd-odd bracket ----------------------------------------------------------

namespace {

// Gamma_1 Gamma_2 Gamma_5 and friends, cached.
const Mat& g125_mat() {
    static const Mat m = monomial_matrix(rep11(), {1, 2, 5});
    return m;
}

Mat rot_operator(const EvenLabel& l) {
    const CliffordRepW& rep = rep11();
    if (l.i == 0 && l.j == 1) return monomial_matrix(rep, {IDX_PLUS, 5});
    if (l.i == 2 && l.j == 3) return monomial_matrix(rep, {IDX_PLUS, 1, 2, 3, 4, 5});
    return monomial_matrix(rep, {IDX_PLUS, 1, 2, 5, l.i + 1, l.j + 1});
}

// i lambda coefficient of the rot component: mu_i of the block.
Scalar rot_coeff(const EvenLabel& l, const std::array<Rational, 9>& mu) {
    if (l.i == 0 && l.j == 1) return Scalar(mu[0]);
    if (l.i == 2 && l.j == 3) return Scalar(mu[2]);
    return Scalar(mu[5]);
}

}  // namespace

EvenElement oddodd(const SuperContext& cx, const OddElement& a, const OddElement& b) {
    const CliffordRepW& rep = rep11();
    const Mat& C = rep.charge;
    auto mu = eigen_root_reals(cx.params);
    EvenElement out(cx.alg.dim());
    Scalar half(rat(1, 2));
    for (int k = 0; k < cx.alg.dim(); ++k) {
        const EvenLabel& l = cx.alg.labels[k];
        switch (l.t) {
            case EvenLabel::Type::plus:
                out.coeff[k] = half * (bilinear(C, lift1(a.xi1), rep.gamma_minus, lift1(b.xi1)) +
                                       bilinear(C, lift1(b.xi1), rep.gamma_minus, lift1(a.xi1)));
                break;
            case EvenLabel::Type::minus:
                out.coeff[k] = half * (bilinear(C, lift2(a.xi2), rep.gamma_plus, lift2(b.xi2)) +
                                       bilinear(C, lift2(b.xi2), rep.gamma_plus, lift2(a.xi2)));
                break;
            case EvenLabel::Type::trans:
                out.coeff[k] = bilinear(C, lift1(a.xi1), rep.gamma[l.i], lift2(b.xi2)) +
                               bilinear(C, lift1(b.xi1), rep.gamma[l.i], lift2(a.xi2));
                break;
            case EvenLabel::Type::dual: {
                Mat A = g125_mat() * rep.gamma[l.i];
                Scalar sum = bilinear(C, lift1(a.xi1), A, lift2(b.xi2)) +
                             bilinear(C, lift1(b.xi1), A, lift2(a.xi2));
                if (mu[l.i] == 0) {
                    if (!sum.is_zero())
                        throw std::domain_error(
                            "oddodd: dual component undefined for a zero eigenvalue");
                } else {
                    // i / lambda_i = -1 / mu_i
                    out.coeff[k] = sum * Scalar(rat(-1, 1) / mu[l.i]);
                }
                break;
            }
            case EvenLabel::Type::rot: {
                Mat A = rot_operator(l);
                Scalar sum = half * (bilinear(C, lift2(a.xi2), A, lift2(b.xi2)) +
                                     bilinear(C, lift2(b.xi2), A, lift2(a.xi2)));
                out.coeff[k] = rot_coeff(l, mu) * sum;
                break;
            }
        }
    }
    return out;
}

Mat oddodd_component_matrix(const SuperContext& cx, int label_index) {
    const CliffordRepW& rep = rep11();
    const Mat& C = rep.charge;
    const OddBasis& ob = odd_basis24();
    auto mu = eigen_root_reals(cx.params);
    Mat e1 = slot_mask(ob.embed, 1);
    Mat e2 = slot_mask(ob.embed, 2);
    Scalar half(rat(1, 2));
    const EvenLabel& l = cx.alg.labels[label_index];
    auto sandwich = [&](const Mat& left, const Mat& op, const Mat& right) {
        return left.transpose() * (C * op) * right;
    };
    switch (l.t) {
        case EvenLabel::Type::plus: {
            Mat m = sandwich(e1, rep.gamma_minus, e1);
            return (m + m.transpose()) * half;
        }
        case EvenLabel::Type::minus: {
            Mat m = sandwich(e2, rep.gamma_plus, e2);
            return (m + m.transpose()) * half;
        }
        case EvenLabel::Type::trans: {
            Mat m = sandwich(e1, rep.gamma[l.i], e2);
            return m + m.transpose();
        }
        case EvenLabel::Type::dual: {
            if (mu[l.i] == 0)
                throw std::domain_error("oddodd component undefined for a zero eigenvalue");
            Mat m = sandwich(e1, g125_mat() * rep.gamma[l.i], e2);
            return (m + m.transpose()) * Scalar(rat(-1, 1) / mu[l.i]);
        }
        default: {
            Mat m = sandwich(e2, rot_operator(l), e2);
            return (m + m.transpose()) * (half * rot_coeff(l, mu));
        }
    }
}

Scalar oddodd_dual_via_binv(const SuperContext& cx, int i, const OddElement& a,
                            const OddElement& b) {
    if (cx.b.diag[i] == 0) throw std::domain_error("dual bracket needs nondegenerate B");
    const CliffordRepW& rep = rep11();
    const Mat& C = rep.charge;
    Element binv_ei = Element::generator(i + 1) * Scalar(Rational(1) / cx.b.diag[i]);
    Element s = s_map(cx.pair, binv_ei);
    Mat sop = cl_op(s, rep);
    // C(xi1, s(B^-1 e_i) eta2) - C(s(B^-1 e_i) xi2, eta1), symmetrized.
    auto one_sided = [&](const OddElement& x, const OddElement& y) {
        Scalar first = bilinear(C, lift1(x.xi1), sop, lift2(y.xi2));
        Vec sx2 = sop * lift2(x.xi2);
        Scalar second = bilinear(C, sx2, Mat::identity(C.rows()), lift1(y.xi1));
        return first - second;
    };
    return (one_sided(a, b) + one_sided(b, a)) * Scalar(rat(1, 2));
}

bool check_even_odd_rep(const SuperContext& cx) {
    int n = cx.alg.dim();
    std::vector<Mat> L;
    for (int k = 0; k < n; ++k) L.push_back(lie_action_matrix(cx, k));
    Scalar sign(cx.bracket_sign);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Mat lhs = L[a] * L[b] - L[b] * L[a];
            Mat rhs(24, 24);
            for (const auto& [k, v] : cx.alg.bracket(a, b)) rhs = rhs + L[k] * (sign * v);
            if (lhs != rhs) return false;
        }
    return true;
}

EvenElement check_evo(const SuperContext& cx, int label_index, const OddElement& odd) {
    EvenElement br = oddodd(cx, odd, odd);
    // [K_a, {xi,xi}] with the vector-field bracket sign.
    EvenElement lhs(cx.alg.dim());
    Scalar sign(cx.bracket_sign);
    for (int nu = 0; nu < cx.alg.dim(); ++nu) {
        if (br.coeff[nu].is_zero()) continue;
        for (const auto& [k, v] : cx.alg.bracket(label_index, nu))
            lhs.coeff[k] += sign * v * br.coeff[nu];
    }
    OddElement lxi = lie_derivative_alg(cx, label_index, odd);
    EvenElement rhs = oddodd(cx, lxi, odd) * Scalar(2);
    return lhs + rhs * Scalar(-1);
}

bool check_evo_all(const SuperContext& cx) {
    int n = cx.alg.dim();
    std::vector<Mat> L, Q;
    for (int k = 0; k < n; ++k) {
        L.push_back(lie_action_matrix(cx, k));
        Q.push_back(oddodd_component_matrix(cx, k));
    }
    Scalar sign(cx.bracket_sign);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) {
            Mat lhs(24, 24);
            for (int nu = 0; nu < n; ++nu)
                for (const auto& [kk, v] : cx.alg.bracket(a, nu))
                    if (kk == k) lhs = lhs + Q[nu] * (sign * v);
            Mat rhs = L[a].transpose() * Q[k] + Q[k] * L[a];
            if (lhs != rhs) return false;
        }
    return true;
}

OddElement ooo_residual(const SuperContext& cx, const OddElement& odd) {
    EvenElement br = oddodd(cx, odd, odd);
    Vec acc(2 * rep11().v.size(), 1);
    for (int k = 0; k < cx.alg.dim(); ++k) {
        if (br.coeff[k].is_zero()) continue;
        OddElement lk = lie_derivative_alg(cx, k, odd);
        acc = acc + to_spinor(rep11(), lk) * br.coeff[k];
    }
    return from_spinor(rep11(), acc);
}

// --- fast assembled tables -----------------------------------------------------

namespace {

struct EngineCache {
    Mat e1, e2;  // slot-masked embeds, 32 x 24
    // Q bases (constant 24 x 24); per-point coefficients noted alongside.
    Mat q_plus, q_minus;
    std::array<Mat, 9> q_trans;
    std::array<Mat, 9> q_dual;              // coeff -1/mu_i
    std::map<std::pair<int, int>, Mat> q_rot;  // coeff mu_block
    // L bases.
    Mat l_minus[4];                            // coeffs a+, a-, a+', a-'
    std::array<std::array<Mat, 4>, 9> l_trans;  // coeffs a+, a-, -a+', -a-'
    std::array<Mat, 9> l_dual;                 // coeff mu_i^2
    std::map<std::pair<int, int>, Mat> l_rot;  // constant
    std::vector<EvenLabel> labels;
};

// Restrict a 32 x 32 operator to 24-coordinates; throws if it leaves the space.
Mat restrict24(const Mat& op) {
    const OddBasis& ob = odd_basis24();
    Mat img = op * ob.embed;  // 32 x 24
    int n = 16;
    Mat top = img.block(0, 0, n, 24);
    Mat bottom = img.block(n, 0, n, 24);
    auto y = Mat::solve(ob.xi2_basis, bottom);
    if (!y) throw std::logic_error("restrict24: operator leaves the odd space");
    if (!(ob.xi2_basis * *y == bottom)) throw std::logic_error("restrict24: bad solve");
    return Mat::vcat(top, *y);
}

const EngineCache& engine_cache() {
    static const EngineCache cache = [] {
        EngineCache c;
        const CliffordRepW& rep = rep11();
        const Mat& C = rep.charge;
        const OddBasis& ob = odd_basis24();
        c.labels = family_lie_algebra(CWParams{}).labels;
        c.e1 = slot_mask(ob.embed, 1);
        c.e2 = slot_mask(ob.embed, 2);
        Scalar half(rat(1, 2));
        auto sym_half = [&](const Mat& m) { return (m + m.transpose()) * half; };
        auto sym_full = [](const Mat& m) { return m + m.transpose(); };
        auto sandwich = [&](const Mat& l, const Mat& op, const Mat& r) {
            return l.transpose() * (C * op) * r;
        };
        c.q_plus = sym_half(sandwich(c.e1, rep.gamma_minus, c.e1));
        c.q_minus = sym_half(sandwich(c.e2, rep.gamma_plus, c.e2));
        for (int i = 0; i < 9; ++i) {
            c.q_trans[i] = sym_full(sandwich(c.e1, rep.gamma[i], c.e2));
            c.q_dual[i] = sym_full(sandwich(c.e1, g125_mat() * rep.gamma[i], c.e2));
        }
        for (const EvenLabel& l : c.labels)
            if (l.t == EvenLabel::Type::rot)
                c.q_rot[{l.i, l.j}] = sym_half(sandwich(c.e2, rot_operator(l), c.e2));

        int n = rep.v.size();
        Mat z(n, n);
        auto blockdiag1 = [&](const Element& a) {
            return Mat::vcat(Mat::hcat(matrix_of(a, rep.v), z), Mat(n, 2 * n));
        };
        auto blockdiag2 = [&](const Element& a) {
            return Mat::vcat(Mat(n, 2 * n), Mat::hcat(z, matrix_of(a, rep.v)));
        };
        auto upper_right = [&](const Element& a) {
            return Mat::vcat(Mat::hcat(z, matrix_of(a, rep.v) * Scalar::inv_sqrt2()), Mat(n, 2 * n));
        };
        Element xp = x_projector_element(kMask1234, true);
        Element xm = x_projector_element(kMask1234, false);
        Element g = Element::monomial(kMask125);
        Element xpg = xp * g, xmg = xm * g;
        c.l_minus[0] = -restrict24(blockdiag1(xpg));
        c.l_minus[1] = -restrict24(blockdiag1(xmg));
        c.l_minus[2] = -restrict24(blockdiag2(xpg));
        c.l_minus[3] = -restrict24(blockdiag2(xmg));
        for (int i = 0; i < 9; ++i) {
            Element ei = Element::generator(i + 1);
            c.l_trans[i][0] = restrict24(upper_right(xpg * ei));
            c.l_trans[i][1] = restrict24(upper_right(xmg * ei));
            c.l_trans[i][2] = restrict24(upper_right(ei * xpg));
            c.l_trans[i][3] = restrict24(upper_right(ei * xmg));
            c.l_dual[i] = restrict24(upper_right(ei));
        }
        for (const EvenLabel& l : c.labels)
            if (l.t == EvenLabel::Type::rot)
                c.l_rot[{l.i, l.j}] = restrict24(rep.gamma[l.i] * rep.gamma[l.j]) * half;
        return c;
    }();
    return cache;
}

}  // namespace

BracketTable bracket_table(const SuperContext& cx) {
    BracketTable t;
    for (int k = 0; k < cx.alg.dim(); ++k) {
        t.even_odd.push_back(lie_action_matrix(cx, k));
        const EvenLabel& l = cx.alg.labels[k];
        if (l.t == EvenLabel::Type::dual && eigen_root_reals(cx.params)[l.i] == 0)
            t.odd_odd.push_back(Mat(24, 24));  // dropped at decomposable points
        else
            t.odd_odd.push_back(oddodd_component_matrix(cx, k));
    }
    return t;
}

BracketTable bracket_table_fast(const CWParams& p) {
    const EngineCache& c = engine_cache();
    auto mu = eigen_root_reals(p);
    Scalar ap(p.alpha_plus), am(p.alpha_minus), app(p.alpha_plus_prime),
        amp(p.alpha_minus_prime);
    BracketTable t;
    for (const EvenLabel& l : c.labels) {
        switch (l.t) {
            case EvenLabel::Type::plus:
                t.even_odd.push_back(Mat(24, 24));
                t.odd_odd.push_back(c.q_plus);
                break;
            case EvenLabel::Type::minus:
                t.even_odd.push_back(c.l_minus[0] * ap + c.l_minus[1] * am + c.l_minus[2] * app +
                                     c.l_minus[3] * amp);
                t.odd_odd.push_back(c.q_minus);
                break;
            case EvenLabel::Type::trans:
                t.even_odd.push_back(c.l_trans[l.i][0] * ap + c.l_trans[l.i][1] * am +
                                     c.l_trans[l.i][2] * (-app) + c.l_trans[l.i][3] * (-amp));
                t.odd_odd.push_back(c.q_trans[l.i]);
                break;
            case EvenLabel::Type::dual: {
                t.even_odd.push_back(c.l_dual[l.i] * Scalar(mu[l.i] * mu[l.i]));
                if (mu[l.i] == 0)
                    t.odd_odd.push_back(Mat(24, 24));
                else
                    t.odd_odd.push_back(c.q_dual[l.i] * Scalar(rat(-1, 1) / mu[l.i]));
                break;
            }
            case EvenLabel::Type::rot: {
                t.even_odd.push_back(c.l_rot.at({l.i, l.j}));
                Rational block_mu = (l.i == 0) ? mu[0] : (l.i == 2 ? mu[2] : mu[5]);
                t.odd_odd.push_back(c.q_rot.at({l.i, l.j}) * Scalar(block_mu));
                break;
            }
        }
    }
    return t;
}

namespace {

Vec residual24(const BracketTable& t, const Vec& w) {
    int n = w.rows();
    Vec acc(n, 1);
    for (std::size_t k = 0; k < t.odd_odd.size(); ++k) {
        Vec qw = t.odd_odd[k] * w;
        Scalar coeff = dot(w, qw);
        if (coeff.is_zero()) continue;
        acc = acc + t.even_odd[k] * w * coeff;
    }
    return acc;
}

}  // namespace

bool susy_trilinear_zero(const BracketTable& t, const std::vector<bool>& label_keep,
                         const Mat& subspace) {
    int m = subspace.cols();
    std::vector<Mat> Q, L;
    for (std::size_t k = 0; k < t.odd_odd.size(); ++k) {
        if (!label_keep[k]) continue;
        Mat q = subspace.transpose() * t.odd_odd[k] * subspace;
        Mat limg = t.even_odd[k] * subspace;
        auto y = Mat::solve(subspace, limg);
        if (!y || !(subspace * *y == limg))
            throw std::logic_error("susy_trilinear_zero: subspace not invariant");
        Q.push_back(q);
        L.push_back(*y);
    }
    std::vector<Scalar> acc(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int k = j; k < m; ++k) {
                for (int r = 0; r < m; ++r) acc[r] = Scalar();
                bool touched = false;
                for (std::size_t q = 0; q < Q.size(); ++q) {
                    const Scalar& qij = Q[q].at(i, j);
                    const Scalar& qjk = Q[q].at(j, k);
                    const Scalar& qki = Q[q].at(k, i);
                    if (qij.is_zero() && qjk.is_zero() && qki.is_zero()) continue;
                    touched = true;
                    for (int r = 0; r < m; ++r) {
                        if (!qij.is_zero()) acc[r] += qij * L[q].at(r, k);
                        if (!qjk.is_zero()) acc[r] += qjk * L[q].at(r, i);
                        if (!qki.is_zero()) acc[r] += qki * L[q].at(r, j);
                    }
                }
                if (!touched) continue;
                for (int r = 0; r < m; ++r)
                    if (!acc[r].is_zero()) return false;
            }
    return true;
}

SusyReport susy_report(const CWParams& p) {
    BForm b = b_form(p);
    if (!b.indecomposable())
        throw std::invalid_argument("susy_check: decomposable B; use the reduced classification");
    BracketTable t = bracket_table_fast(p);
    SusyReport rep;
    rep.polarized_diag_ok = true;
    // Basis plus pairwise sums, with early exit on a witness.
    for (int i = 0; i < 24 && rep.polarized_diag_ok; ++i) {
        Vec w = unit_vec(24, i);
        if (!residual24(t, w).is_zero()) {
            rep.polarized_diag_ok = false;
            rep.witness = w;
        }
    }
    for (int i = 0; i < 24 && rep.polarized_diag_ok; ++i)
        for (int j = i + 1; j < 24 && rep.polarized_diag_ok; ++j) {
            Vec w = unit_vec(24, i) + unit_vec(24, j);
            if (!residual24(t, w).is_zero()) {
                rep.polarized_diag_ok = false;
                rep.witness = w;
            }
        }
    if (!rep.polarized_diag_ok) {
        rep.trilinear_ok = false;
        rep.susy = false;
        return rep;
    }
    std::vector<bool> keep(t.odd_odd.size(), true);
    rep.trilinear_ok = susy_trilinear_zero(t, keep, Mat::identity(24));
    rep.susy = rep.trilinear_ok;
    return rep;
}

bool susy_check(const CWParams& p) { return susy_report(p).susy; }

// --- spinorial Lie derivative in coordinates -----------------------------------

namespace {

// Clifford action of the coordinate frame and the raised gammas at a point.
// gamma(d_+) = G+, gamma(d_-) = G- - (1/2) g^{++} G+, gamma(d_i) = G_i with
// g^{++} = sum_k B_k (x^k)^2; raised: G^+ = G- + (1/2) g^{++} G+, G^- = G+,
// G^i = G_i.
template <typename MatT, typename Sc>
std::vector<MatT> raised_gammas(const MatT& gp, const MatT& gm, const std::vector<MatT>& gi,
                                Sc gpp_half) {
    std::vector<MatT> out;
    out.push_back(gm + gp * gpp_half);  // index +
    out.push_back(gp);                  // index -
    for (const auto& g : gi) out.push_back(g);
    return out;
}

}  // namespace

Vec lie_derivative_coord_exact0(const SuperContext& cx, const KillingField& K,
                                const ParallelField& f) {
    const CliffordRepW& rep = rep11();
    int n = rep.v.size();
    std::vector<Scalar> x0(11, Scalar());
    Vec xi = parallel_spinor_eval_exact(f, rep, x0);
    // nabla_kappa xi at the origin.
    std::vector<Vec> nab(11, Vec(2 * n, 1));
    {
        Vec xi1 = f.data.xi1, xi2 = f.data.xi2;
        nab[1] = Mat::vcat(-(matrix_of(f.pair.cbar, rep.v) * xi1),
                           -(matrix_of(f.pair.d, rep.v) * xi2));
        for (int i = 0; i < 9; ++i) {
            Element s = s_map(f.pair, Element::generator(i + 1));
            nab[2 + i] = rep.gamma_plus * (cl_op(s, rep) * lift2(xi2)) * Scalar(rat(1, 2));
        }
    }
    std::vector<Scalar> kval(11);
    std::vector<Scalar> zero_xs(9, Scalar());
    for (int kk = 0; kk < 11; ++kk) kval[kk] = K.field.comp[kk].eval_jet0(zero_xs).first;
    Vec out(2 * n, 1);
    for (int kk = 0; kk < 11; ++kk)
        if (!kval[kk].is_zero()) out = out + nab[kk] * kval[kk];
    Mat nabK = nabla_killing_exact0(cx.b, K.field, x0);
    std::vector<Mat> up;
    {
        std::vector<Mat> gi = rep.gamma;
        up = raised_gammas<Mat, Scalar>(rep.gamma_plus, rep.gamma_minus, gi, Scalar());
    }
    Scalar quarter(rat(1, 4));
    for (int mu = 0; mu < 11; ++mu)
        for (int nu = 0; nu < 11; ++nu) {
            if (nabK.at(mu, nu).is_zero()) continue;
            out = out - (up[mu] * (up[nu] * xi)) * (quarter * nabK.at(mu, nu));
        }
    return out;
}

MatD lie_derivative_coord(const SuperContext& cx, const KillingField& K, const ParallelField& f,
                          const std::vector<cplx>& x) {
    const CliffordRepW& rep = rep11();
    int n = rep.v.size();
    MatD xi = parallel_spinor_eval(f, rep, x);
    // nabla_kappa xi at x.
    std::vector<MatD> nab(11, MatD(2 * n, 1));
    MatD xi2t = exp_element(f.pair.d, rep.v, -x[1]) * MatD::from(f.data.xi2);
    auto lift2d = [&](const MatD& w) {
        MatD v(2 * n, 1);
        for (int k = 0; k < n; ++k) v.at(n + k, 0) = w.at(k, 0);
        return v;
    };
    {
        MatD xi1t = exp_element(f.pair.cbar, rep.v, -x[1]) * MatD::from(f.data.xi1);
        MatD dxi1 = MatD::from(matrix_of(f.pair.cbar, rep.v)) * xi1t * cplx(-1.0);
        MatD dxi2 = MatD::from(matrix_of(f.pair.d, rep.v)) * xi2t * cplx(-1.0);
        MatD dxi(2 * n, 1);
        for (int k = 0; k < n; ++k) {
            dxi.at(k, 0) = dxi1.at(k, 0);
            dxi.at(n + k, 0) = dxi2.at(k, 0);
        }
        for (int i = 0; i < 9; ++i) {
            if (x[2 + i] == cplx(0.0)) continue;
            Element s = s_map(f.pair, Element::generator(i + 1));
            dxi = dxi + MatD::from(rep.gamma_plus * cl_op(s, rep)) * lift2d(dxi2) * (0.5 * x[2 + i]);
        }
        // spin-connection part of nabla_-
        for (int i = 0; i < 9; ++i) {
            if (x[2 + i] == cplx(0.0)) continue;
            Element bv = Element::generator(i + 1) * Scalar(cx.b.diag[i]);
            dxi = dxi + MatD::from(rep.gamma_plus * cl_op(bv, rep)) * xi * (0.5 * x[2 + i]);
        }
        nab[1] = dxi;
        for (int i = 0; i < 9; ++i) {
            Element s = s_map(f.pair, Element::generator(i + 1));
            nab[2 + i] = MatD::from(rep.gamma_plus * cl_op(s, rep)) * lift2d(xi2t) * cplx(0.5);
        }
    }
    std::vector<cplx> xs(x.begin() + 2, x.end());
    MatD out(2 * n, 1);
    for (int kk = 0; kk < 11; ++kk) {
        cplx kv = K.field.comp[kk].eval(x[1], xs);
        if (kv == cplx(0.0)) continue;
        out = out + nab[kk] * kv;
    }
    MatD nabK = nabla_killing(cx.b, K.field, x);
    cplx gpp = 0.0;
    for (int k = 0; k < 9; ++k) gpp += to_double(cx.b.diag[k]) * xs[k] * xs[k];
    std::vector<MatD> gi;
    for (const Mat& g : rep.gamma) gi.push_back(MatD::from(g));
    auto up = raised_gammas<MatD, cplx>(MatD::from(rep.gamma_plus), MatD::from(rep.gamma_minus),
                                        gi, cplx(0.5) * gpp);
    for (int mu = 0; mu < 11; ++mu)
        for (int nu = 0; nu < 11; ++nu) {
            cplx c = nabK.at(mu, nu);
            if (c == cplx(0.0)) continue;
            out = out - up[mu] * (up[nu] * xi) * (0.25 * c);
        }
    return out;
}

}  // namespace cw
