#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cw/matrix.hpp"

using namespace cw;

TEST_CASE("rational parsing is strict") {
    CHECK(parse_rational("3/4").value() == rat(3, 4));
    CHECK(parse_rational("-6/8").value() == rat(-3, 4));
    CHECK(parse_rational("5").value() == rat(5));
    CHECK(!parse_rational("1//2"));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("a/2"));
    CHECK(!parse_rational("1/2 "));
}

TEST_CASE("scalar field arithmetic in Q(i,sqrt2)") {
    Scalar r2 = Scalar::sqrt2();
    CHECK(r2 * r2 == Scalar(2));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::inv_sqrt2() * r2 == Scalar(1));

    Scalar x = Scalar(rat(3, 7)) + Scalar::i() * Scalar(rat(-2, 5)) + r2 * Scalar(rat(1, 3));
    CHECK(x * x.inverse() == Scalar(1));
    CHECK((x * x.conj()).conj() == x * x.conj());

    // (1 + sqrt2)(1 - sqrt2) = -1
    Scalar a = Scalar(1) + r2;
    Scalar b = Scalar(1) - r2;
    CHECK(a * b == Scalar(-1));
}

TEST_CASE("exact rank, kernel and solve") {
    Mat m(3, 4);
    // rows: [1 2 3 4], [2 4 6 8], [0 1 1 0]
    int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = Scalar(vals[r][c]);
    CHECK(m.rank() == 2);
    Mat ker = m.kernel_basis();
    CHECK(ker.cols() == 2);
    CHECK((m * ker).is_zero());

    Mat id = Mat::identity(5);
    CHECK(id.rank() == 5);
    CHECK(id.kernel_basis().cols() == 0);

    // Solve a full-rank system with sqrt2 entries.
    Mat a(2, 2);
    a.at(0, 0) = Scalar::sqrt2();
    a.at(0, 1) = Scalar(1);
    a.at(1, 1) = Scalar::i();
    Vec b(2, 1);
    b.at(0, 0) = Scalar(3);
    b.at(1, 0) = Scalar(rat(1, 2));
    auto x = Mat::solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    // Inconsistent system.
    Mat a2(2, 1);
    a2.at(0, 0) = Scalar(1);
    a2.at(1, 0) = Scalar(2);
    Vec b2(2, 1);
    b2.at(0, 0) = Scalar(1);
    b2.at(1, 0) = Scalar(3);
    CHECK(!Mat::solve(a2, b2).has_value());
}

TEST_CASE("kron and conj transpose") {
    Mat s2 = Mat::m2(Scalar(0), -Scalar::i(), Scalar::i(), Scalar(0));
    CHECK(s2.conj_transpose() == s2);
    CHECK(s2.transpose() == -s2);
    Mat k = s2.kron(Mat::identity(3));
    CHECK(k.rows() == 6);
    CHECK(k * k == Mat::identity(6));
}
