#include "cw/cahen_wallach.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cw {

std::array<Rational, 9> eigen_root_reals(const CWParams& p) {
    Rational m12 = p.alpha_minus - p.alpha_plus_prime;
    Rational m34 = p.alpha_minus + p.alpha_plus_prime;
    Rational m5 = p.alpha_plus - p.alpha_plus_prime;
    Rational m69 = p.alpha_plus + p.alpha_plus_prime;
    return {m12, m12, m34, m34, m5, m69, m69, m69, m69};
}

std::array<GaussianRational, 9> eigen_roots(const CWParams& p) {
    std::array<GaussianRational, 9> out;
    auto mu = eigen_root_reals(p);
    for (int i = 0; i < 9; ++i) out[i] = GaussianRational(Rational(0), -mu[i]);
    return out;
}

int BForm::zero_count() const {
    int n = 0;
    for (const auto& d : diag)
        if (d == 0) ++n;
    return n;
}

std::vector<std::vector<int>> BForm::blocks() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> used(diag.size(), false);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> blk{int(i)};
        used[i] = true;
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (!used[j] && diag[j] == diag[i]) {
                blk.push_back(int(j));
                used[j] = true;
            }
        out.push_back(std::move(blk));
    }
    return out;
}

BForm b_form(const CWParams& p) {
    BForm b;
    for (const Rational& mu : eigen_root_reals(p)) b.diag.push_back(-mu * mu);
    return b;
}

Mat metric_at(const BForm& b, const std::vector<Scalar>& x) {
    int n = b.dim();
    if (int(x.size()) != n + 2) throw std::invalid_argument("metric_at: bad point");
    Mat g(n + 2, n + 2);
    g.at(0, 1) = Scalar(1);
    g.at(1, 0) = Scalar(1);
    Scalar gmm;
    for (int k = 0; k < n; ++k) {
        gmm += Scalar(b.diag[k]) * x[2 + k] * x[2 + k];
        g.at(2 + k, 2 + k) = Scalar(1);
    }
    g.at(1, 1) = -gmm;
    return g;
}

Christoffel christoffel(const BForm& b, const std::vector<Scalar>& x) {
    Christoffel ch;
    for (int k = 0; k < b.dim(); ++k) {
        Scalar bx = Scalar(b.diag[k]) * x[2 + k];
        ch.first_mm_k.push_back(bx);
        ch.first_km_m.push_back(-bx);
    }
    return ch;
}

// --- TrigPoly ----------------------------------------------------------------

TrigPoly TrigPoly::constant(Scalar c) {
    TrigPoly t;
    t.add_term(GaussianRational(), false, -1, c);
    return t;
}

TrigPoly TrigPoly::term(const GaussianRational& freq, bool is_sin, int xindex, const Scalar& amp) {
    TrigPoly t;
    t.add_term(freq, is_sin, xindex, amp);
    return t;
}

void TrigPoly::add_term(const GaussianRational& freq_in, bool is_sin, int xindex, const Scalar& amp_in) {
    if (amp_in.is_zero()) return;
    GaussianRational freq = freq_in;
    Scalar amp = amp_in;
    if (freq.is_zero()) {
        if (is_sin) return;  // sin(0) = 0
    } else if (freq.re < 0 || (freq.re == 0 && freq.im < 0)) {
        freq = -freq;
        if (is_sin) amp = -amp;
    }
    Key key{freq.re, freq.im, is_sin ? 1 : 0, xindex};
    auto [it, inserted] = terms_.try_emplace(key, amp);
    if (!inserted) {
        it->second += amp;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
    TrigPoly t = *this;
    for (const auto& [k, amp] : o.terms_)
        t.add_term({std::get<0>(k), std::get<1>(k)}, std::get<2>(k) != 0, std::get<3>(k), amp);
    return t;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
    TrigPoly t = *this;
    for (const auto& [k, amp] : o.terms_)
        t.add_term({std::get<0>(k), std::get<1>(k)}, std::get<2>(k) != 0, std::get<3>(k), -amp);
    return t;
}

TrigPoly TrigPoly::operator*(const Scalar& s) const {
    TrigPoly t;
    if (s.is_zero()) return t;
    for (const auto& [k, amp] : terms_)
        t.add_term({std::get<0>(k), std::get<1>(k)}, std::get<2>(k) != 0, std::get<3>(k), amp * s);
    return t;
}

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
    TrigPoly t;
    Scalar half(rat(1, 2));
    for (const auto& [ka, aa] : terms_)
        for (const auto& [kb, ab] : o.terms_) {
            int xa = std::get<3>(ka), xb = std::get<3>(kb);
            if (xa >= 0 && xb >= 0)
                throw std::logic_error("TrigPoly: product would be quadratic in x^i");
            int xr = std::max(xa, xb);
            GaussianRational fa{std::get<0>(ka), std::get<1>(ka)};
            GaussianRational fb{std::get<0>(kb), std::get<1>(kb)};
            bool sa = std::get<2>(ka) != 0, sb = std::get<2>(kb) != 0;
            Scalar amp = aa * ab * half;
            GaussianRational sum = fa + fb, diff = fa - fb;
            if (!sa && !sb) {  // cos cos
                t.add_term(diff, false, xr, amp);
                t.add_term(sum, false, xr, amp);
            } else if (sa && sb) {  // sin sin
                t.add_term(diff, false, xr, amp);
                t.add_term(sum, false, xr, -amp);
            } else if (sa && !sb) {  // sin cos
                t.add_term(sum, true, xr, amp);
                t.add_term(diff, true, xr, amp);
            } else {  // cos sin
                t.add_term(sum, true, xr, amp);
                t.add_term(diff, true, xr, -amp);
            }
        }
    return t;
}

TrigPoly TrigPoly::d_minus() const {
    TrigPoly t;
    for (const auto& [k, amp] : terms_) {
        GaussianRational f{std::get<0>(k), std::get<1>(k)};
        bool is_sin = std::get<2>(k) != 0;
        int x = std::get<3>(k);
        // d/dx cos(fx) = -f sin(fx), d/dx sin(fx) = f cos(fx)
        t.add_term(f, !is_sin, x, is_sin ? amp * Scalar(f) : -(amp * Scalar(f)));
    }
    return t;
}

TrigPoly TrigPoly::d_spatial(int i) const {
    TrigPoly t;
    for (const auto& [k, amp] : terms_)
        if (std::get<3>(k) == i)
            t.add_term({std::get<0>(k), std::get<1>(k)}, std::get<2>(k) != 0, -1, amp);
    return t;
}

cplx TrigPoly::eval(cplx xminus, const std::vector<cplx>& xs) const {
    cplx out = 0.0;
    for (const auto& [k, amp] : terms_) {
        GaussianRational f{std::get<0>(k), std::get<1>(k)};
        cplx z = f.to_complex() * xminus;
        cplx trig = std::get<2>(k) ? std::sin(z) : std::cos(z);
        cplx xf = std::get<3>(k) < 0 ? cplx(1.0) : xs[std::get<3>(k)];
        out += amp.to_complex() * trig * xf;
    }
    return out;
}

std::pair<Scalar, Scalar> TrigPoly::eval_jet0(const std::vector<Scalar>& xs) const {
    Scalar val, der;
    for (const auto& [k, amp] : terms_) {
        GaussianRational f{std::get<0>(k), std::get<1>(k)};
        Scalar base = std::get<3>(k) < 0 ? amp : amp * xs[std::get<3>(k)];
        if (std::get<2>(k))
            der += base * Scalar(f);  // sin(f t) ~ f t
        else
            val += base;  // cos(f t) ~ 1
    }
    return {val, der};
}

// --- vector fields -----------------------------------------------------------

VecField VecField::operator+(const VecField& o) const {
    VecField r(dim());
    for (std::size_t k = 0; k < comp.size(); ++k) r.comp[k] = comp[k] + o.comp[k];
    return r;
}

VecField VecField::operator*(const Scalar& s) const {
    VecField r(dim());
    for (std::size_t k = 0; k < comp.size(); ++k) r.comp[k] = comp[k] * s;
    return r;
}

bool VecField::is_zero() const {
    for (const auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

VecField VecField::commutator(const VecField& x, const VecField& y) {
    int n = x.dim();
    VecField r(n);
    // No coefficient depends on x^+, so only d_- and the spatial derivatives act.
    for (int k = 0; k < n + 2; ++k) {
        TrigPoly acc = x.comp[1] * y.comp[k].d_minus() - y.comp[1] * x.comp[k].d_minus();
        for (int m = 0; m < n; ++m)
            acc = acc + x.comp[2 + m] * y.comp[k].d_spatial(m) - y.comp[2 + m] * x.comp[k].d_spatial(m);
        r.comp[k] = acc;
    }
    return r;
}

// --- Killing basis -----------------------------------------------------------

namespace {

std::vector<EvenLabel> build_labels_from_blocks(int dim,
                                                const std::vector<std::vector<int>>& blocks) {
    std::vector<EvenLabel> labels;
    labels.push_back({EvenLabel::Type::plus});
    labels.push_back({EvenLabel::Type::minus});
    for (int i = 0; i < dim; ++i) labels.push_back({EvenLabel::Type::trans, i});
    for (int i = 0; i < dim; ++i) labels.push_back({EvenLabel::Type::dual, i});
    std::vector<std::pair<int, int>> rots;
    for (const auto& blk : blocks)
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t c = a + 1; c < blk.size(); ++c) rots.push_back({blk[a], blk[c]});
    std::sort(rots.begin(), rots.end());
    for (auto [i, j] : rots) labels.push_back({EvenLabel::Type::rot, i, j});
    return labels;
}

std::vector<EvenLabel> build_labels(const BForm& b) {
    return build_labels_from_blocks(b.dim(), b.blocks());
}

}  // namespace

std::string label_name(const EvenLabel& l) {
    switch (l.t) {
        case EvenLabel::Type::plus:
            return "K(+)";
        case EvenLabel::Type::minus:
            return "K(-)";
        case EvenLabel::Type::trans:
            return "K(" + std::to_string(l.i + 1) + ")";
        case EvenLabel::Type::dual:
            return "K(" + std::to_string(l.i + 1) + "*)";
        default:
            return "K(" + std::to_string(l.i + 1) + std::to_string(l.j + 1) + ")";
    }
}

std::vector<KillingField> killing_basis(const CWParams& p) {
    BForm b = b_form(p);
    auto lambda = eigen_roots(p);
    int n = b.dim();
    std::vector<KillingField> out;
    for (const EvenLabel& l : build_labels(b)) {
        KillingField K;
        K.i = l.i;
        K.j = l.j;
        K.field = VecField(n);
        switch (l.t) {
            case EvenLabel::Type::plus:
                K.kind = KillingField::Kind::plus;
                K.field.comp[0] = TrigPoly::constant(Scalar(-1));
                break;
            case EvenLabel::Type::minus:
                K.kind = KillingField::Kind::minus;
                K.field.comp[1] = TrigPoly::constant(Scalar(-1));
                break;
            case EvenLabel::Type::trans: {
                K.kind = KillingField::Kind::trans;
                const auto& li = lambda[l.i];
                K.field.comp[2 + l.i] = TrigPoly::term(li, false, -1, Scalar(1));
                K.field.comp[0] = TrigPoly::term(li, true, l.i, Scalar(GaussianRational(li)));
                break;
            }
            case EvenLabel::Type::dual: {
                K.kind = KillingField::Kind::dual;
                const auto& li = lambda[l.i];
                K.field.comp[2 + l.i] = TrigPoly::term(li, true, -1, -Scalar(li));
                K.field.comp[0] = TrigPoly::term(li, false, l.i, Scalar(li) * Scalar(li));
                break;
            }
            case EvenLabel::Type::rot:
                K.kind = KillingField::Kind::rot;
                K.field.comp[2 + l.i] = TrigPoly::term({}, false, l.j, Scalar(1));
                K.field.comp[2 + l.j] = TrigPoly::term({}, false, l.i, Scalar(-1));
                break;
        }
        out.push_back(std::move(K));
    }
    return out;
}

// --- Killing equation --------------------------------------------------------

namespace {

// First-order jet a + b t in the x^- direction, exact coefficients.
struct Jet {
    Scalar a, b;
    Jet operator+(const Jet& o) const { return {a + o.a, b + o.b}; }
    Jet operator-(const Jet& o) const { return {a - o.a, b - o.b}; }
    Jet operator*(const Jet& o) const { return {a * o.a, a * o.b + b * o.a}; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

// nabla_mu K_nu (lowered) at one point for a generic number type; Eval maps a
// TrigPoly to Num, xs are the spatial coordinates as Num.
template <typename Num, typename Eval>
std::vector<std::vector<Num>> nabla_lowered(const BForm& bf, const VecField& K, Eval ev,
                                            const std::vector<Num>& xs, Num zero) {
    int n = bf.dim();
    int dims = n + 2;
    // Component values and partials: partial index 0 unused (x^+), 1 = x^-.
    std::vector<Num> val(dims, zero);
    std::vector<std::vector<Num>> d(dims, std::vector<Num>(dims, zero));
    for (int k = 0; k < dims; ++k) {
        val[k] = ev(K.comp[k]);
        d[k][1] = ev(K.comp[k].d_minus());
        for (int m = 0; m < n; ++m) d[k][2 + m] = ev(K.comp[k].d_spatial(m));
    }
    std::vector<Num> bdiag(n, zero);
    for (int k = 0; k < n; ++k) bdiag[k] = ev(TrigPoly::constant(Scalar(bf.diag[k])));
    Num gmm = zero;
    for (int k = 0; k < n; ++k) gmm = gmm - bdiag[k] * xs[k] * xs[k];

    // Lowered components: K_+ = K^-, K_- = K^+ + g_-- K^-, K_k = K^k.
    std::vector<Num> lo(dims, zero);
    lo[0] = val[1];
    lo[1] = val[0] + gmm * val[1];
    for (int k = 0; k < n; ++k) lo[2 + k] = val[2 + k];
    std::vector<std::vector<Num>> dlo(dims, std::vector<Num>(dims, zero));
    for (int mu = 0; mu < dims; ++mu) {
        dlo[0][mu] = d[1][mu];
        Num dgmm = zero;  // partial of g_-- in direction mu
        if (mu >= 2) dgmm = zero - (bdiag[mu - 2] * xs[mu - 2] + bdiag[mu - 2] * xs[mu - 2]);
        dlo[1][mu] = d[0][mu] + dgmm * val[1] + gmm * d[1][mu];
        for (int k = 0; k < n; ++k) dlo[2 + k][mu] = d[2 + k][mu];
    }

    // nabla_mu K_nu = d_mu K_nu - Gamma^l_{mu nu} K_l with the two nonzero
    // Christoffel families Gamma^k_{--} = B_k x^k, Gamma^+_{k-} = -B_k x^k.
    std::vector<std::vector<Num>> nab(dims, std::vector<Num>(dims, zero));
    for (int mu = 0; mu < dims; ++mu)
        for (int nu = 0; nu < dims; ++nu) {
            Num r = dlo[nu][mu];
            if (mu == 1 && nu == 1)
                for (int k = 0; k < n; ++k) r = r - bdiag[k] * xs[k] * lo[2 + k];
            if ((mu == 1 && nu >= 2) || (nu == 1 && mu >= 2)) {
                int k = (mu == 1 ? nu : mu) - 2;
                r = r + bdiag[k] * xs[k] * lo[0];
            }
            nab[mu][nu] = r;
        }
    return nab;
}

template <typename Num, typename Eval>
std::vector<Num> killing_residual(const BForm& bf, const VecField& K, Eval ev,
                                  const std::vector<Num>& xs, Num zero) {
    auto nab = nabla_lowered<Num>(bf, K, ev, xs, zero);
    std::vector<Num> res;
    int dims = bf.dim() + 2;
    for (int mu = 0; mu < dims; ++mu)
        for (int nu = mu; nu < dims; ++nu) res.push_back(nab[mu][nu] + nab[nu][mu]);
    return res;
}

}  // namespace

MatD nabla_killing(const BForm& b, const VecField& K, const std::vector<cplx>& x) {
    cplx xm = x[1];
    std::vector<cplx> xs(x.begin() + 2, x.end());
    auto ev = [&](const TrigPoly& t) { return t.eval(xm, xs); };
    auto nab = nabla_lowered<cplx>(b, K, ev, xs, cplx(0.0));
    int dims = b.dim() + 2;
    MatD out(dims, dims);
    for (int mu = 0; mu < dims; ++mu)
        for (int nu = 0; nu < dims; ++nu) out.at(mu, nu) = nab[mu][nu];
    return out;
}

Mat nabla_killing_exact0(const BForm& b, const VecField& K, const std::vector<Scalar>& x) {
    if (!x[1].is_zero()) throw std::invalid_argument("nabla_killing_exact0: needs x^- = 0");
    std::vector<Scalar> xs(x.begin() + 2, x.end());
    auto ev = [&](const TrigPoly& t) { return t.eval_jet0(xs).first; };
    auto nab = nabla_lowered<Scalar>(b, K, ev, xs, Scalar());
    int dims = b.dim() + 2;
    Mat out(dims, dims);
    for (int mu = 0; mu < dims; ++mu)
        for (int nu = 0; nu < dims; ++nu) out.at(mu, nu) = nab[mu][nu];
    return out;
}

KillingVerifyResult killing_verify(const BForm& b, const KillingField& K,
                                   const std::vector<std::vector<cplx>>& float_samples,
                                   const std::vector<std::vector<Scalar>>& exact_spatial_samples,
                                   double tol) {
    KillingVerifyResult out;
    out.exact_ok = true;
    for (const auto& xs : exact_spatial_samples) {
        auto ev = [&](const TrigPoly& t) {
            auto [v, dv] = t.eval_jet0(xs);
            return Jet{v, dv};
        };
        std::vector<Jet> xsj;
        for (const auto& x : xs) xsj.push_back(Jet{x, Scalar()});
        auto res = killing_residual<Jet>(b, K.field, ev, xsj, Jet{});
        for (const auto& r : res)
            if (!r.is_zero()) out.exact_ok = false;
    }
    for (const auto& pt : float_samples) {
        cplx xm = pt[1];
        std::vector<cplx> xs(pt.begin() + 2, pt.end());
        auto ev = [&](const TrigPoly& t) { return t.eval(xm, xs); };
        auto res = killing_residual<cplx>(b, K.field, ev, xs, cplx(0.0));
        for (const auto& r : res) out.max_float_residual = std::max(out.max_float_residual, std::abs(r));
    }
    out.pass = out.exact_ok && out.max_float_residual < tol;
    return out;
}

// --- Lie algebra -------------------------------------------------------------

namespace {

void combo_add(EvenCombo& c, int idx, const Scalar& s) {
    if (s.is_zero()) return;
    for (auto& [i, v] : c)
        if (i == idx) {
            v += s;
            if (v.is_zero()) c.erase(std::remove_if(c.begin(), c.end(),
                                                    [&](const auto& p) { return p.first == idx; }),
                                     c.end());
            return;
        }
    c.push_back({idx, s});
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

EvenCombo combo_scale(const EvenCombo& c, const Scalar& s) {
    EvenCombo out;
    if (s.is_zero()) return out;
    for (const auto& [i, v] : c) out.push_back({i, v * s});
    return out;
}

}  // namespace

int CWLieAlgebra::index_of(const EvenLabel& l) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == l) return int(k);
    return -1;
}

EvenCombo CWLieAlgebra::bracket_combo(const EvenCombo& x, const EvenCombo& y) const {
    EvenCombo out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [k, v] : table_[a][b]) combo_add(out, k, ca * cb * v);
    return out;
}

bool CWLieAlgebra::jacobi_ok() const {
    int n = dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                EvenCombo acc = bracket_combo(table_[a][b], {{c, Scalar(1)}});
                for (const auto& [k, v] : bracket_combo(table_[b][c], {{a, Scalar(1)}}))
                    combo_add(acc, k, v);
                for (const auto& [k, v] : bracket_combo(table_[c][a], {{b, Scalar(1)}}))
                    combo_add(acc, k, v);
                if (!acc.empty()) return false;
            }
    return true;
}

CWLieAlgebra lie_algebra(const CWParams& p) {
    return lie_algebra_with_blocks(p, b_form(p).blocks());
}

CWLieAlgebra lie_algebra_with_blocks(const CWParams& p,
                                     const std::vector<std::vector<int>>& blocks) {
    BForm b = b_form(p);
    CWLieAlgebra alg;
    alg.labels = build_labels_from_blocks(b.dim(), blocks);
    int n = alg.dim();
    alg.table_.assign(n, std::vector<EvenCombo>(n));
    auto idx = [&](EvenLabel l) { return alg.index_of(l); };
    auto set = [&](int a, int bb, EvenCombo c) {
        alg.table_[a][bb] = c;
        alg.table_[bb][a] = combo_scale(c, Scalar(-1));
    };
    int iplus = 0, iminus = 1;
    int nd = b.dim();
    auto tr = [&](int i) { return idx({EvenLabel::Type::trans, i}); };
    auto du = [&](int i) { return idx({EvenLabel::Type::dual, i}); };

    for (int i = 0; i < nd; ++i) {
        // [e_-, e_i] = e_i*
        set(iminus, tr(i), {{du(i), Scalar(1)}});
        // [e_i*, e_-] = B e_i
        set(du(i), iminus, {{tr(i), Scalar(b.diag[i])}});
        // [e_i*, e_i] = -<B e_i, e_i> e_+
        set(du(i), tr(i), {{iplus, Scalar(-b.diag[i])}});
    }
    for (int a = 0; a < n; ++a) {
        const EvenLabel& la = alg.labels[a];
        if (la.t != EvenLabel::Type::rot) continue;
        int i = la.i, j = la.j;
        for (int k = 0; k < nd; ++k) {
            EvenCombo ct, cd;
            if (k == j) {
                combo_add(ct, tr(i), Scalar(1));
                combo_add(cd, du(i), Scalar(1));
            }
            if (k == i) {
                combo_add(ct, tr(j), Scalar(-1));
                combo_add(cd, du(j), Scalar(-1));
            }
            if (!ct.empty()) set(a, tr(k), ct);
            if (!cd.empty()) set(a, du(k), cd);
        }
        for (int bidx = a + 1; bidx < n; ++bidx) {
            const EvenLabel& lb = alg.labels[bidx];
            if (lb.t != EvenLabel::Type::rot) continue;
            int k = lb.i, l = lb.j;
            EvenCombo c;
            auto add_E = [&](int r, int s, int sign) {
                if (r == s) return;
                Scalar v(sign);
                if (r > s) {
                    std::swap(r, s);
                    v = -v;
                }
                int id = idx({EvenLabel::Type::rot, r, s});
                if (id < 0) throw std::logic_error("so_B bracket left the block structure");
                combo_add(c, id, v);
            };
            // [E_ij, E_kl] = d_jk E_il + d_il E_jk - d_ik E_jl - d_jl E_ik
            if (j == k) add_E(i, l, 1);
            if (i == l) add_E(j, k, 1);
            if (i == k) add_E(j, l, -1);
            if (j == l) add_E(i, k, -1);
            set(a, bidx, c);
        }
    }
    return alg;
}

BracketsMatchResult killing_brackets_match(const CWParams& p, int n_float_samples, double tol,
                                           std::uint64_t seed) {
    BracketsMatchResult out;
    CWLieAlgebra alg = lie_algebra(p);
    std::vector<KillingField> ks = killing_basis(p);
    int n = alg.dim();
    int sign = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            VecField lhs = VecField::commutator(ks[a].field, ks[b].field);
            VecField rhs(ks[a].field.dim());
            for (const auto& [k, v] : alg.bracket(a, b)) rhs = rhs + ks[k].field * v;
            if (lhs.is_zero() && rhs.is_zero()) continue;
            if (lhs == rhs) {
                if (sign == -1) return out;
                sign = 1;
            } else if (lhs == rhs * Scalar(-1)) {
                if (sign == 1) return out;
                sign = -1;
            } else {
                return out;
            }
        }
    out.sign = (sign == 0) ? 1 : sign;

    // Secondary float spot check of the matched relation.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    out.float_ok = true;
    for (int s = 0; s < n_float_samples; ++s) {
        std::vector<cplx> pt(11);
        for (auto& c : pt) c = cplx(dist(rng), 0.0);
        cplx xm = pt[1];
        std::vector<cplx> xs(pt.begin() + 2, pt.end());
        for (int a = 0; a < n && out.float_ok; ++a)
            for (int b = a + 1; b < n; ++b) {
                VecField lhs = VecField::commutator(ks[a].field, ks[b].field);
                VecField rhs(ks[a].field.dim());
                for (const auto& [k, v] : alg.bracket(a, b)) rhs = rhs + ks[k].field * v;
                for (std::size_t c = 0; c < lhs.comp.size(); ++c) {
                    cplx d = lhs.comp[c].eval(xm, xs) -
                             cplx(double(out.sign)) * rhs.comp[c].eval(xm, xs);
                    if (std::abs(d) > tol) {
                        out.float_ok = false;
                        break;
                    }
                }
            }
    }
    out.pass = out.float_ok;
    return out;
}

Decomposability decomposability(const BForm& b) {
    Decomposability d;
    d.zero_count = b.zero_count();
    d.blocks = b.blocks();
    return d;
}

bool isometry_equivalent(const BForm& b1, const BForm& b2) {
    if (b1.dim() != b2.dim()) return false;
    std::vector<Rational> d1 = b1.diag, d2 = b2.diag;
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    Rational scale(0);
    for (int k = 0; k < int(d1.size()); ++k) {
        if ((d1[k] == 0) != (d2[k] == 0)) return false;
        if (d1[k] != 0 && scale == 0) scale = d2[k] / d1[k];
    }
    if (scale == 0) return true;  // both identically zero
    if (scale < 0) return false;
    for (int k = 0; k < int(d1.size()); ++k)
        if (d1[k] * scale != d2[k]) return false;
    return true;
}

}  // namespace cw
