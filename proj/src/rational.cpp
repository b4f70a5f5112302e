#include "cw/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cw {

std::optional<Rational> parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class p(num), q(den);
    if (q == 0) return std::nullopt;
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

GaussianRational GaussianRational::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return {re / n, -im / n};
}

Scalar Scalar::inverse() const {
    GaussianRational n = u * u - GaussianRational(Rational(2)) * (v * v);
    if (n.is_zero()) throw std::domain_error("division by zero in Q(i,sqrt2)");
    GaussianRational ninv = n.inverse();
    Scalar s;
    s.u = u * ninv;
    s.v = -v * ninv;
    return s;
}

std::string Scalar::str() const {
    auto gauss = [](const GaussianRational& g) {
        std::string s = g.re.get_str();
        if (g.im != 0) s += (g.im > 0 ? "+" : "") + g.im.get_str() + "i";
        return s;
    };
    if (v.is_zero()) return gauss(u);
    if (u.is_zero()) return "(" + gauss(v) + ")r2";
    return gauss(u) + "+(" + gauss(v) + ")r2";
}

}  // namespace cw
