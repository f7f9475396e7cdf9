#include <doctest.h>

#include "vvmf/linalg.hpp"

using namespace vvmf;

TEST_CASE("rational reconstruction recovers small fractions") {
    const mpfr_prec_t prec = 256;
    const Int bound(1000000000);

    auto rec = rational_reconstruct(Real::of(rat(1, 3), prec), bound);
    CHECK(rec.value == rat(1, 3));
    CHECK(rec.residual < Real::pow10(-40, prec));

    rec = rational_reconstruct(Real::of(rat(-1, 56), prec), bound);
    CHECK(rec.value == rat(-1, 56));

    rec = rational_reconstruct(Real::of(0L, prec), bound);
    CHECK(rec.value == 0);

    // sqrt(2) has no convergent with denominator <= 10 anywhere near the
    // 1e-15 relative residual gate
    Real x = rsqrt(Real::of(2L, prec));
    CHECK_THROWS_AS(rational_reconstruct(x, Int(10)), ReconstructionFailed);
}

TEST_CASE("exact linear solve") {
    Matrix<Rat> m(2, 2);
    m(0, 0) = 19; m(0, 1) = 1;
    m(1, 0) = 1;  m(1, 1) = 1;
    std::vector<Rat> b{rat(19, 12), Rat(1)};
    auto x = linear_solve(m, b);
    CHECK(x[0] == rat(7, 216));
    CHECK(x[1] == rat(209, 216));

    Matrix<Rat> s(2, 2);
    s(0, 0) = 1; s(0, 1) = 2;
    s(1, 0) = 2; s(1, 1) = 4;
    CHECK_THROWS_AS(linear_solve(s, b), SingularMatrix);
}

TEST_CASE("overdetermined exact solve") {
    // three stacked copies of a consistent 2x2 system
    Matrix<Rat> m(3, 2);
    m(0, 0) = 1; m(0, 1) = 1;
    m(1, 0) = 2; m(1, 1) = 2;
    m(2, 0) = 1; m(2, 1) = -1;
    bool under = true;
    auto x = solve_overdetermined(m, {Rat(3), Rat(6), Rat(1)}, &under);
    REQUIRE(x.has_value());
    CHECK(!under);
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));

    // same rows, inconsistent right-hand side
    auto none = solve_overdetermined(m, {Rat(3), Rat(7), Rat(1)}, &under);
    CHECK(!none.has_value());

    // rank 1: solvable but underdetermined
    Matrix<Rat> r1(2, 2);
    r1(0, 0) = 1; r1(0, 1) = 1;
    r1(1, 0) = 2; r1(1, 1) = 2;
    auto u = solve_overdetermined(r1, {Rat(2), Rat(4)}, &under);
    REQUIRE(u.has_value());
    CHECK(under);
}

TEST_CASE("numeric nullspace via one-sided Jacobi") {
    const mpfr_prec_t prec = 256;

    Matrix<Complex> z(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z(i, j) = Complex(prec);
    CHECK(nullspace(z, prec).size() == 2);

    Matrix<Complex> id(2, 2);
    id(0, 0) = Complex::of(1, prec);
    id(0, 1) = Complex(prec);
    id(1, 0) = Complex(prec);
    id(1, 1) = Complex::of(1, prec);
    CHECK(nullspace(id, prec).empty());

    // rank-one [[1,1],[1,1]]: kernel spanned by (1,-1)/sqrt2
    Matrix<Complex> m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = Complex::of(1, prec);
    auto ker = nullspace(m, prec);
    REQUIRE(ker.size() == 1);
    const auto& v = ker[0];
    Real n2 = abs2(v[0]) + abs2(v[1]);
    CHECK(rabs(n2 - Real::of(1L, prec)) < Real::pow10(-60, prec));
    Complex mv = m(0, 0) * v[0] + m(0, 1) * v[1];
    CHECK(cabs(mv) < Real::pow10(-60, prec));
    // direction: components opposite
    CHECK(cabs(v[0] + v[1]) < Real::pow10(-60, prec));
}

TEST_CASE("real scalar plumbing") {
    const mpfr_prec_t prec = 128;
    CHECK(rabs(Real::pi(prec) - Real::of(3.14159265358979, prec))
          < Real::of(1e-12, prec));
    Complex i4 = exp_2pi_i(rat(1, 4), prec);
    CHECK(rabs(i4.re) < Real::pow10(-30, prec));
    CHECK(rabs(i4.im - Real::of(1L, prec)) < Real::pow10(-30, prec));
    // q^s at tau = i: e^{-2 pi s}
    Complex qp = q_power(Real(prec), Real::of(1L, prec), rat(1, 2), prec);
    CHECK(rabs(qp.re - rexp(-Real::pi(prec))) < Real::pow10(-30, prec));
    CHECK(rabs(qp.im) < Real::pow10(-30, prec));
}
