#include <doctest.h>

#include "vvmf/catalog.hpp"

using namespace vvmf;

namespace {

const mpfr_prec_t kPrec = 300;

Matrix<Complex> dagger(const Matrix<Complex>& m) {
    Matrix<Complex> r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
    return r;
}

Matrix<Complex> minus_identity_shift(Matrix<Complex> m) {
    for (int i = 0; i < m.rows(); ++i)
        m(i, i) = m(i, i) - Complex::of(1, kPrec);
    return m;
}

}  // namespace

TEST_CASE("catalog inventory") {
    const auto& fams = catalog();
    CHECK(fams.size() == 16);
    int rank2 = 0, rank3 = 0;
    for (const auto& d : fams) (d.rank == 2 ? rank2 : rank3)++;
    CHECK(rank2 == 4);
    CHECK(rank3 == 12);
    CHECK(find_family("su2_1").c0 == 1);
    CHECK(find_family("ising").twists == std::vector<Rat>{Rat(0), rat(1, 16), rat(1, 2)});
    CHECK(find_family("half_su2_5").c0 == rat(48, 7));
    CHECK(find_family("half_su2_5_bar").twists ==
          std::vector<Rat>{Rat(0), rat(6, 7), rat(2, 7)});
    CHECK_THROWS_AS(find_family("nope"), UnknownFamily);
}

TEST_CASE("S matrices are unitary and involutive up to conjugation") {
    const Real tol = Real::pow10(-30, kPrec);
    for (const ModularDatum& d : catalog()) {
        Matrix<Complex> s = d.s_numeric(kPrec);
        CHECK(norm_max(minus_identity_shift(s * dagger(s))) < tol);
        Matrix<Complex> s2 = s * s;
        if (d.self_dual) {
            CHECK(norm_max(minus_identity_shift(s2)) < tol);
        } else {
            // S^2 = charge conjugation: permutation swapping the fold pair
            REQUIRE(d.fold_pair.has_value());
            auto [i, j] = *d.fold_pair;
            Matrix<Complex> c(d.rank, d.rank);
            for (int k = 0; k < d.rank; ++k) c(k, k) = Complex::of(1, kPrec);
            c(i, i) = Complex(kPrec); c(j, j) = Complex(kPrec);
            c(i, j) = Complex::of(1, kPrec); c(j, i) = Complex::of(1, kPrec);
            CHECK(norm_max(s2 - c) < tol);
        }
    }
}

TEST_CASE("(ST)^3 = S^2 at admissible charges") {
    const Real tol = Real::pow10(-30, kPrec);
    for (const ModularDatum& d : catalog()) {
        for (const Rat& c : admissible_charges(d, d.c0 + 8)) {
            Matrix<Complex> s = rho(d, c, 'S', kPrec);
            Matrix<Complex> t = rho(d, c, 'T', kPrec);
            Matrix<Complex> st = s * t;
            CHECK(norm_max(st * st * st - s * s) < tol);
        }
    }
}

TEST_CASE("rho rejects inadmissible charges") {
    const ModularDatum& d = find_family("su2_1");
    CHECK_THROWS_AS(rho(d, Rat(2), 'T', kPrec), InvalidCharge);
    CHECK_THROWS_AS(rho(d, Rat(-7), 'T', kPrec), InvalidCharge);
    // T entry is the twist shifted by -c/24
    Matrix<Complex> t = rho(d, Rat(1), 'T', kPrec);
    Complex want = exp_2pi_i(rat(5, 24), kPrec);
    CHECK(cabs(t(1, 1) - want) < Real::pow10(-40, kPrec));
}

TEST_CASE("Gauss-sum charge lands in the admissible class") {
    for (const ModularDatum& d : catalog()) {
        Rat cp = gauss_sum_charge(d);
        Rat k = (d.c0 - cp) / 8;
        CHECK(is_integer(k));
        CHECK(cp > 0);
        CHECK(cp <= 8);
    }
    CHECK(gauss_sum_charge(find_family("ising")) == rat(1, 2));
    CHECK(gauss_sum_charge(find_family("su2_1")) == 1);
    CHECK(gauss_sum_charge(find_family("e7_1")) == 7);
    CHECK(gauss_sum_charge(find_family("half_su2_5")) == rat(48, 7));
    CHECK(gauss_sum_charge(find_family("su3_1")) == 2);
}

TEST_CASE("admissible charge ladders") {
    auto su2 = admissible_charges(find_family("su2_1"), Rat(72));
    CHECK(su2.size() == 9);
    CHECK(su2.front() == 1);
    CHECK(su2.back() == 65);

    auto ising = admissible_charges(find_family("ising"), Rat(48));
    CHECK(ising.size() == 6);
    CHECK(ising.back() == rat(81, 2));
}

TEST_CASE("Z/3 folding") {
    const ModularDatum& su3 = find_family("su3_1");
    ModularDatum f = fold(su3);
    CHECK(f.rank == 2);
    CHECK(f.twists == std::vector<Rat>{Rat(0), rat(1, 3)});
    CHECK(f.folded_from == "su3_1");
    CHECK(f.self_dual);

    const Real tol = Real::pow10(-30, kPrec);
    Matrix<Complex> s = f.s_numeric(kPrec);
    Real r3 = Real::of(1, kPrec) / rsqrt(Real::of(3, kPrec));
    CHECK(rabs(s(0, 0).re - r3) < tol);
    CHECK(rabs(s(0, 1).re - (r3 + r3)) < tol);
    CHECK(rabs(s(1, 1).re + r3) < tol);
    // folded S is an involution even though the parent S has order 4
    CHECK(norm_max(minus_identity_shift(s * s)) < tol);

    CHECK_THROWS_AS(fold(find_family("ising")), NotFoldable);
}
