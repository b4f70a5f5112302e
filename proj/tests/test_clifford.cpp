#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cw/superalgebra.hpp"
#include "oracles.hpp"

using namespace cw;

TEST_CASE("octonion left multiplications") {
    auto L = octonion_left_mults();
    Mat id8 = Mat::identity(8);
    // printed entries: (L1)_21 = +1, (L1)_12 = -1
    CHECK(L[0].at(1, 0) == Scalar(1));
    CHECK(L[0].at(0, 1) == Scalar(-1));
    for (int a = 0; a < 7; ++a) {
        CHECK(L[a].transpose() == -L[a]);
        CHECK(L[a] * L[a] == -id8);
        for (int b = a + 1; b < 7; ++b) CHECK((L[a] * L[b] + L[b] * L[a]).is_zero());
    }
    // L3^2 = -1 and L4 L5 + L5 L4 = 0 are covered above; spot check real entries.
    for (int a = 0; a < 7; ++a)
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) CHECK(L[a].at(r, c).is_rational());
}

TEST_CASE("dim-9 gamma matrices and C_V") {
    RepV v = build_clifford_v9();
    Mat id16 = Mat::identity(16);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            Mat anti = v.gamma[i] * v.gamma[j] + v.gamma[j] * v.gamma[i];
            CHECK(anti == ((i == j) ? id16 * Scalar(-2) : Mat(16, 16)));
        }
    CHECK(v.charge.transpose() == v.charge);
    for (int i = 0; i < 9; ++i)
        CHECK(v.gamma[i].transpose() * v.charge == v.charge * v.gamma[i]);
    // gamma_9 = -i sigma3 (x) 1: diagonal entries -i (first half) and +i.
    CHECK(v.gamma[8].at(0, 0) == -Scalar::i());
    CHECK(v.gamma[8].at(15, 15) == Scalar::i());
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            if (r != c) CHECK(v.gamma[8].at(r, c).is_zero());
}

TEST_CASE("null-extended rep and C_W") {
    const CliffordRepW& w = rep11();
    Mat id32 = Mat::identity(32);
    CHECK((w.gamma_plus * w.gamma_plus).is_zero());
    CHECK((w.gamma_minus * w.gamma_minus).is_zero());
    CHECK(w.gamma_plus * w.gamma_minus + w.gamma_minus * w.gamma_plus == id32 * Scalar(-2));
    for (int i = 0; i < 9; ++i) {
        CHECK((w.gamma_plus * w.gamma[i] + w.gamma[i] * w.gamma_plus).is_zero());
        CHECK((w.gamma_minus * w.gamma[i] + w.gamma[i] * w.gamma_minus).is_zero());
        for (int j = 0; j < 9; ++j)
            CHECK(w.gamma[i] * w.gamma[j] + w.gamma[j] * w.gamma[i] ==
                  ((i == j) ? id32 * Scalar(-2) : Mat(32, 32)));
    }
    CHECK(w.sigma * w.sigma == id32);
    // sigma = (1/2)[G+, G-] = -sigma3 (x) 1: entries -1 then +1 on the diagonal.
    CHECK(w.sigma.at(0, 0) == Scalar(-1));
    CHECK(w.sigma.at(16, 16) == Scalar(1));
    // sqrt2 G+ has a single nonzero 16x16 block equal to 2*1.
    Mat scaled = w.gamma_plus * Scalar::sqrt2();
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            CHECK(scaled.at(r, 16 + c) == ((r == c) ? Scalar(2) : Scalar()));
            CHECK(scaled.at(16 + r, c).is_zero());
        }
    CHECK(w.charge.transpose() == -w.charge);
    // The unique spin-invariant pairing here intertwines with sign -1; the
    // +1 version fails for every generator.
    std::vector<Mat> gens{w.gamma_plus, w.gamma_minus};
    for (const Mat& g : w.gamma) gens.push_back(g);
    for (const Mat& g : gens) {
        CHECK(g.transpose() * w.charge == -(w.charge * g));
        CHECK(g.transpose() * w.charge != w.charge * g);
    }
}

TEST_CASE("monomial product signs match the brute-force oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> mask(0, 511);
    for (int t = 0; t < 200; ++t) {
        Mono a = Mono(mask(rng)), b = Mono(mask(rng));
        CHECK(mono_mul(a, b) == oracle::mono_mul_bruteforce(a, b));
    }
}

TEST_CASE("formal element algebra: bar and products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> mask(0, 511);
    std::uniform_int_distribution<long> coef(-4, 4);
    auto random_element = [&] {
        Element e;
        for (int t = 0; t < 4; ++t)
            e.add_term(Mono(mask(rng)), Scalar(rat(coef(rng), 1 + (t % 2))));
        return e;
    };
    for (int t = 0; t < 30; ++t) {
        Element a = random_element(), b = random_element();
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("matrix_of is an algebra homomorphism on low grades") {
    // The dim-9 matrix representation is unfaithful on the full algebra (the
    // volume element acts as a scalar), so the check is restricted to
    // products that stay in grade <= 4.
    RepV v = build_clifford_v9();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> mask(0, 511);
    int done = 0;
    while (done < 50) {
        Mono a = Mono(mask(rng)), b = Mono(mask(rng));
        auto [m, sign] = mono_mul(a, b);
        if (grade(a) > 4 || grade(b) > 4 || grade(m) > 4) continue;
        Element ea = Element::monomial(a), eb = Element::monomial(b);
        CHECK(matrix_of(ea, v) * matrix_of(eb, v) == matrix_of(ea * eb, v));
        ++done;
    }
}

TEST_CASE("monomial_matrix rejects duplicates and orders products") {
    const CliffordRepW& w = rep11();
    CHECK(monomial_matrix(w, {}) == Mat::identity(32));
    CHECK(monomial_matrix(w, {1, 2, 5}) == w.gamma[0] * w.gamma[1] * w.gamma[4]);
    CHECK_THROWS_AS(monomial_matrix(w, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(monomial_matrix(w, {IDX_PLUS, IDX_PLUS}), std::invalid_argument);
    // (G123)^2 = +1: three transpositions and three squares.
    Mat g123 = monomial_matrix(w, {1, 2, 3});
    CHECK(g123 * g123 == Mat::identity(32));
}

TEST_CASE("symmetry signs") {
    CHECK(symmetry_sign(0) == -1);
    CHECK(symmetry_sign(1) == 1);
    CHECK(symmetry_sign(2) == 1);
    CHECK(symmetry_sign(3) == -1);
    CHECK(symmetry_sign(4) == -1);
    CHECK(symmetry_sign(5) == 1);
    CHECK(symmetry_sign(6) == 1);
}

TEST_CASE("bilinear pairing basics") {
    const CliffordRepW& w = rep11();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = 0; t < 20; ++t) {
        Vec xi(32, 1);
        for (int k = 0; k < 32; ++k)
            xi.at(k, 0) = Scalar(GaussianRational(rat(coef(rng), 2), rat(coef(rng), 3)));
        // C_W antisymmetric: C(xi, xi) = 0.
        CHECK(bilinear(w.charge, xi, Mat::identity(32), xi).is_zero());
    }
    // C_V(e1, gamma9 e1) = -i.
    RepV v = build_clifford_v9();
    Vec e1 = unit_vec(16, 0);
    CHECK(bilinear(v.charge, e1, v.gamma[8], e1) == -Scalar::i());
}

TEST_CASE("grade symmetry of the pairing for monomials up to grade 6") {
    const CliffordRepW& w = rep11();
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto rand_spinor = [&] {
        Vec v(32, 1);
        for (int k = 0; k < 32; ++k)
            v.at(k, 0) = Scalar(GaussianRational(rat(coef(rng), 1), rat(coef(rng), 2)));
        return v;
    };
    std::vector<std::vector<int>> monos{{},          {3},          {1, 7},      {2, 5, 9},
                                        {1, 2, 3, 4}, {1, 2, 5, 8, 9}, {4, 5, 6, 7, 8, 9}};
    for (const auto& idx : monos) {
        Mat A = monomial_matrix(w, idx);
        int delta = symmetry_sign(int(idx.size()));
        for (int t = 0; t < 20; ++t) {
            Vec xi = rand_spinor(), eta = rand_spinor();
            CHECK(bilinear(w.charge, xi, A, eta) ==
                  Scalar(delta) * bilinear(w.charge, eta, A, xi));
        }
    }
}

TEST_CASE("projectors") {
    const CliffordRepW& w = rep11();
    auto sp = sigma_projector(w, true);
    auto sm = sigma_projector(w, false);
    CHECK(sp.matrix * sp.matrix == sp.matrix);
    CHECK(sm.matrix * sm.matrix == sm.matrix);
    CHECK(sp.matrix + sm.matrix == Mat::identity(32));
    CHECK((sp.matrix * sm.matrix).is_zero());

    Mono m1234 = mono({1, 2, 3, 4});
    auto xp = x_projector(w.v, m1234, true);
    auto xm = x_projector(w.v, m1234, false);
    CHECK(xp.matrix * xp.matrix == xp.matrix);
    CHECK(xp.matrix + xm.matrix == Mat::identity(16));
    CHECK((xp.matrix * xm.matrix).is_zero());
    CHECK(xp.matrix.rank() == 8);

    // An odd-square mask needs iota = i: (G12)^2 = -1.
    Mono m12 = mono({1, 2});
    auto x12 = x_projector(w.v, m12, true);
    CHECK(x12.matrix * x12.matrix == x12.matrix);
}
