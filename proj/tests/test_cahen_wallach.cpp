#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cw/verify.hpp"

using namespace cw;

namespace {
const CWParams kGeneric{rat(2, 1), rat(1, 1), rat(-1, 3), rat(5, 7)};
}

TEST_CASE("b_form diagonal and eigen roots") {
    // a+ = 2, a- = 1, a+' = -1/3, a-' = 5/7
    BForm b = b_form(kGeneric);
    REQUIRE(b.dim() == 9);
    CHECK(b.diag[0] == -rat(16, 9));   // -(1 + 1/3)^2
    CHECK(b.diag[1] == b.diag[0]);
    CHECK(b.diag[2] == -rat(4, 9));    // -(1 - 1/3)^2
    CHECK(b.diag[4] == -rat(49, 9));   // -(2 + 1/3)^2
    CHECK(b.diag[5] == -rat(25, 9));   // -(2 - 1/3)^2
    CHECK(b.diag[8] == b.diag[5]);
    CHECK(b.indecomposable());
    CHECK(b.blocks().size() == 4);

    // On the susy locus a+ = -3a+' the last entries become -4 a+'^2 and the
    // fifth -16 a+'^2.
    CWParams onlocus{rat(3), rat(7, 2), rat(-1), rat(4, 5)};
    BForm bl = b_form(onlocus);
    CHECK(bl.diag[4] == -16);
    CHECK(bl.diag[5] == -4);
    // (a-, a+', a+, a-') = (1, 0, 1, 0): B = -1 everywhere.
    CWParams unit{rat(1), rat(1), rat(0), rat(0)};
    BForm bu = b_form(unit);
    for (const auto& d : bu.diag) CHECK(d == -1);
}

TEST_CASE("metric components and determinant") {
    BForm b = b_form(kGeneric);
    std::vector<Scalar> x(11, Scalar());
    Mat g0 = metric_at(b, x);
    CHECK(g0.at(0, 1) == Scalar(1));
    CHECK(g0.at(1, 1).is_zero());
    for (int k = 0; k < 9; ++k) CHECK(g0.at(2 + k, 2 + k) == Scalar(1));

    // B = -4 b^2 diag(4 1_3, 1_6): g_-- = 4 b^2 (4 sum_1^3 + sum_4^9) (x^i)^2.
    Rational beta = rat(1, 2);
    BForm bm;
    for (int k = 0; k < 3; ++k) bm.diag.push_back(-16 * beta * beta);
    for (int k = 0; k < 6; ++k) bm.diag.push_back(-4 * beta * beta);
    std::vector<Scalar> xs(11, Scalar());
    for (int k = 0; k < 9; ++k) xs[2 + k] = Scalar(rat(k - 4, 3));
    Mat g = metric_at(bm, xs);
    Scalar expect;
    for (int k = 0; k < 9; ++k) {
        Rational w = (k < 3) ? 16 * beta * beta : 4 * beta * beta;
        expect += Scalar(w) * xs[2 + k] * xs[2 + k];
    }
    CHECK(g.at(1, 1) == expect);

    // det g = -1: check via rank of g and the light-cone block structure by
    // eliminating: g * g^{-1} candidate.
    Mat ginv(11, 11);
    ginv.at(0, 1) = Scalar(1);
    ginv.at(1, 0) = Scalar(1);
    ginv.at(0, 0) = -g.at(1, 1);
    for (int k = 0; k < 9; ++k) ginv.at(2 + k, 2 + k) = Scalar(1);
    CHECK(g * ginv == Mat::identity(11));
}

TEST_CASE("christoffel symbols") {
    BForm b = b_form(kGeneric);
    std::vector<Scalar> x0(11, Scalar());
    Christoffel c0 = christoffel(b, x0);
    for (int k = 0; k < 9; ++k) {
        CHECK(c0.first_mm_k[k].is_zero());
        CHECK(c0.first_km_m[k].is_zero());
    }
    // B = -1_9, x^2 = 1: Gamma_{2-,-} = 1.
    BForm bneg;
    bneg.diag.assign(9, Rational(-1));
    std::vector<Scalar> x(11, Scalar());
    x[2 + 1] = Scalar(1);
    Christoffel c = christoffel(bneg, x);
    CHECK(c.first_km_m[1] == Scalar(1));
    CHECK(c.first_mm_k[1] == Scalar(-1));

    // Metricity: d_k g_-- = 2 Gamma_{k-,-} at random rational points.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        std::vector<Scalar> xs(11, Scalar());
        for (int k = 0; k < 9; ++k) xs[2 + k] = Scalar(random_rational(rng));
        Christoffel ch = christoffel(b, xs);
        for (int k = 0; k < 9; ++k) {
            Scalar dk_gmm = Scalar(-2) * Scalar(b.diag[k]) * xs[2 + k];
            CHECK(dk_gmm == Scalar(2) * ch.first_km_m[k]);
        }
    }
}

TEST_CASE("killing basis counts and structure") {
    auto ks = killing_basis(kGeneric);
    CHECK(ks.size() == 28);  // 2 + 9 + 9 + (1 + 1 + 6)
    // K_(i) at x^- = 0 equals d_i.
    std::vector<Scalar> xs(9, Scalar());
    for (int i = 0; i < 9; ++i) {
        const auto& K = ks[2 + i];
        auto [v, dv] = K.field.comp[2 + i].eval_jet0(xs);
        CHECK(v == Scalar(1));
    }
    // lambda_i = 0 makes K_(i) = d_i and K_(i*) = 0.
    CWParams degen{rat(1), rat(1), rat(1), rat(0)};  // a- = a+' = 1: lambda_1 = lambda_2 = 0
    auto kd = killing_basis(degen);
    CHECK(kd[2 + 0].field.comp[0].is_zero());
    CHECK(kd[2 + 9 + 0].field.is_zero());
}

TEST_CASE("killing equation holds exactly and in float") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int pvec = 0; pvec < 3; ++pvec) {
        CWParams p = random_params(rng);
        BForm b = b_form(p);
        auto ks = killing_basis(p);
        std::vector<std::vector<cplx>> fs;
        for (int s = 0; s < 4; ++s) {
            std::vector<cplx> pt(11);
            for (auto& c : pt) c = dist(rng);
            fs.push_back(pt);
        }
        std::vector<std::vector<Scalar>> es;
        for (int s = 0; s < 2; ++s) {
            std::vector<Scalar> xs(9);
            for (auto& x : xs) x = Scalar(random_rational(rng));
            es.push_back(xs);
        }
        for (const auto& K : ks) {
            auto res = killing_verify(b, K, fs, es);
            CHECK(res.exact_ok);
            CHECK(res.max_float_residual < 1e-9);
        }
    }
}

TEST_CASE("corrupted field fails the killing equation") {
    BForm b = b_form(kGeneric);
    auto lam = eigen_roots(kGeneric);
    // cos -> sin corruption of K_(1).
    KillingField bad;
    bad.kind = KillingField::Kind::trans;
    bad.i = 0;
    bad.field = VecField(9);
    bad.field.comp[2] = TrigPoly::term(lam[0], true, -1, Scalar(1));
    bad.field.comp[0] = TrigPoly::term(lam[0], true, 0, Scalar(lam[0]));
    std::vector<std::vector<Scalar>> es{std::vector<Scalar>(9, Scalar(1))};
    auto res = killing_verify(b, bad, {}, es);
    CHECK(!res.exact_ok);
}

TEST_CASE("lie algebra brackets and jacobi") {
    CWLieAlgebra alg = lie_algebra(kGeneric);
    CHECK(alg.dim() == 28);
    BForm b = b_form(kGeneric);
    int iminus = 1;
    int tr0 = alg.index_of({EvenLabel::Type::trans, 0});
    int du0 = alg.index_of({EvenLabel::Type::dual, 0});
    // [e_-, e_1] = e_1*
    auto c = alg.bracket(iminus, tr0);
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == du0);
    CHECK(c[0].second == Scalar(1));
    // [e_1*, e_-] = B e_1
    auto c2 = alg.bracket(du0, iminus);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].first == tr0);
    CHECK(c2[0].second == Scalar(b.diag[0]));
    CHECK(alg.jacobi_ok());
}

TEST_CASE("jacobi for 20 random parameter vectors") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        CWParams p = random_params(rng, false);
        CHECK(lie_algebra(p).jacobi_ok());
    }
}

TEST_CASE("killing commutators match structure constants with one sign") {
    std::mt19937_64 rng(29);
    int global_sign = 0;
    for (int t = 0; t < 3; ++t) {
        CWParams p = random_params(rng);
        auto res = killing_brackets_match(p, 2, 1e-9, 17 + t);
        CHECK(res.pass);
        if (global_sign == 0) global_sign = res.sign;
        CHECK(res.sign == global_sign);
    }
    CHECK(global_sign == -1);
}

TEST_CASE("decomposability counts") {
    // a+ = a+': one zero eigenvalue; a+ = -a+': four.
    CWParams p1{rat(1, 2), rat(2), rat(1, 2), rat(3)};
    CHECK(decomposability(b_form(p1)).zero_count == 1);
    CWParams p4{rat(-1, 2), rat(2), rat(1, 2), rat(3)};
    CHECK(decomposability(b_form(p4)).zero_count == 4);
    CWParams p2{rat(5), rat(1, 2), rat(1, 2), rat(3)};
    CHECK(decomposability(b_form(p2)).zero_count == 2);
    CWParams p2b{rat(5), rat(-1, 2), rat(1, 2), rat(3)};
    CHECK(decomposability(b_form(p2b)).zero_count == 2);
    std::mt19937_64 rng(31);
    CHECK(decomposability(b_form(random_params(rng))).zero_count == 0);
}

TEST_CASE("isometry equivalence of B forms") {
    BForm b1, b2;
    b1.diag = {rat(-1), rat(-2)};
    b2.diag = {rat(-2), rat(-1)};
    CHECK(isometry_equivalent(b1, b2));  // permutation
    BForm b4 = b1;
    for (auto& d : b4.diag) d *= 4;
    CHECK(isometry_equivalent(b1, b4));  // scale 4
    BForm b3;
    b3.diag = {rat(-1), rat(-3)};
    CHECK(!isometry_equivalent(b1, b3));
    // alpha_- sign flip is an isometry.
    CWParams p = kGeneric;
    CWParams pm = p;
    pm.alpha_minus = -pm.alpha_minus;
    CHECK(isometry_equivalent(b_form(p), b_form(pm)));
}

TEST_CASE("trig polynomials multiply exactly") {
    GaussianRational f1(Rational(0), rat(-2, 3));
    GaussianRational f2(Rational(0), rat(1, 2));
    TrigPoly c1 = TrigPoly::term(f1, false, -1, Scalar(1));
    TrigPoly s1 = TrigPoly::term(f1, true, -1, Scalar(1));
    // cos^2 + sin^2 = 1
    CHECK(c1 * c1 + s1 * s1 == TrigPoly::constant(Scalar(1)));
    // derivative of sin is freq * cos
    CHECK(s1.d_minus() == c1 * Scalar(f1));
    // product with distinct frequencies stays exact: compare at float points
    TrigPoly c2 = TrigPoly::term(f2, false, -1, Scalar(1));
    TrigPoly prod = c1 * c2;
    std::vector<cplx> xs(9, 0.0);
    for (double t : {0.3, -1.1, 0.77}) {
        cplx lhs = prod.eval(t, xs);
        cplx rhs = c1.eval(t, xs) * c2.eval(t, xs);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // two x factors cannot meet
    TrigPoly withx = TrigPoly::term(f1, false, 2, Scalar(1));
    CHECK_THROWS_AS(withx * withx, std::logic_error);
}
