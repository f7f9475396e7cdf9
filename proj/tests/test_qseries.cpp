#include <doctest.h>

#include <vector>

#include "vvmf/qseries.hpp"

using namespace vvmf;

namespace {

// Independent oracle: coefficients of prod_{n>=1} (1-q^n)^pow, plain
// schoolbook polynomial arithmetic on raw vectors.
std::vector<Rat> euler_power(int pow, int nterms) {
    std::vector<Rat> e(nterms, Rat(0));
    e[0] = 1;
    for (int n = 1; n < nterms; ++n)
        for (int k = nterms - 1; k >= n; --k) e[k] -= e[k - n];
    std::vector<Rat> r(nterms, Rat(0));
    r[0] = 1;
    for (int p = 0; p < pow; ++p) {
        std::vector<Rat> s(nterms, Rat(0));
        for (int i = 0; i < nterms; ++i) {
            if (r[i] == 0) continue;
            for (int j = 0; i + j < nterms; ++j) s[i + j] += r[i] * e[j];
        }
        r = std::move(s);
    }
    return r;
}

}  // namespace

TEST_CASE("Eisenstein series leading coefficients") {
    QSeriesR e4 = eisenstein(4, 6);
    CHECK(e4.lead == 0);
    CHECK(e4.a == std::vector<Rat>{1, 240, 2160, 6720, 17520, 30240});

    QSeriesR e6 = eisenstein(6, 5);
    CHECK(e6.a == std::vector<Rat>{1, -504, -16632, -122976, -532728});

    QSeriesR e10 = eisenstein(10, 3);
    CHECK(e10.a == std::vector<Rat>{1, -264, -135432});
    // E10 = E4 E6 coefficient by coefficient
    QSeriesR prod = mul(eisenstein(4, 40), eisenstein(6, 40));
    CHECK(eisenstein(10, 40).a == prod.a);

    CHECK_THROWS_AS(eisenstein(8, 5), UnsupportedWeight);
}

TEST_CASE("discriminant matches the eta-product oracle") {
    const int n = 50;
    QSeriesR d = delta(n);
    CHECK(d.lead == 1);
    std::vector<Rat> eta24 = euler_power(24, n);
    for (int k = 0; k < n; ++k) CHECK(d.a[k] == eta24[k]);
    CHECK(d.a[0] == 1);
    CHECK(d.a[1] == -24);
    CHECK(d.a[6] == -16744);  // tau(7)
}

TEST_CASE("weight-12 identities to 100 terms") {
    const int n = 100;
    QSeriesR e4c = mul(mul(eisenstein(4, n), eisenstein(4, n)),
                       eisenstein(4, n));
    QSeriesR e6s = mul(eisenstein(6, n), eisenstein(6, n));
    QSeriesR lhs = sub(e4c, e6s);
    QSeriesR rhs = scale(delta(n + 1), Rat(1728));
    // grids: lhs leads at q^0 with a zero constant term, rhs at q^1
    CHECK(lhs.a[0] == 0);
    for (int k = 1; k < n; ++k) CHECK(lhs.a[k] == rhs.a[k - 1]);

    // Delta (J + 744) = E4^3
    QSeriesR dj = mul(delta(n + 2), add_scalar(jay(n + 2), Rat(744)));
    CHECK(dj.lead == 0);
    for (int k = 0; k < n; ++k) CHECK(dj.a[k] == e4c.a[k]);
}

TEST_CASE("J-function coefficients") {
    QSeriesR j = jay(5);
    CHECK(j.lead == -1);
    CHECK(j.a[0] == 1);
    CHECK(j.a[1] == 0);
    CHECK(j.a[2] == 196884);
    CHECK(j.a[3] == 21493760);
    CHECK(j.a[4] == 864299970);
}

TEST_CASE("Delta/E10 expansion") {
    const int n = 30;
    QSeriesR u = mul(delta(n), invert(eisenstein(10, n)));
    CHECK(u.lead == 1);
    CHECK(u.a[0] == 1);
    CHECK(u.a[1] == 240);
    CHECK(u.a[2] == 199044);
}

TEST_CASE("parallel product equals the serial reference") {
    const int n = 160;  // above the parallel-path threshold
    QSeriesR x = delta(n);
    QSeriesR y = invert(eisenstein(10, n));
    QSeriesR a = mul(x, y);
    QSeriesR b = mul_serial(x, y);
    CHECK(a.lead == b.lead);
    CHECK(a.a == b.a);
}

TEST_CASE("series inversion round-trips") {
    QSeriesR e4 = eisenstein(4, 40);
    QSeriesR one = mul(e4, invert(e4));
    CHECK(one.lead == 0);
    CHECK(one.a[0] == 1);
    for (int k = 1; k < one.length(); ++k) CHECK(one.a[k] == 0);

    QSeriesR zero{Rat(0), {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(invert(zero), NonUnitSeries);
}

TEST_CASE("evaluation at tau = i") {
    const mpfr_prec_t prec = 512;
    // J(i) = j(i) - 744 = 1728 - 744 = 984
    EvalResult r = evaluate(jay(220), Real(prec), Real::of(1L, prec), prec);
    CHECK(rabs(r.value.re - Real::of(984L, prec)) < Real::pow10(-100, prec));
    CHECK(rabs(r.value.im) < Real::pow10(-100, prec));
    CHECK(r.tail < Real::pow10(-100, prec));

    // |q| >= 1 must refuse
    CHECK_THROWS_AS(
        evaluate(jay(10), Real(prec), Real::of(rat(-1, 100), prec), prec),
        PrecisionLoss);
}

TEST_CASE("q-derivative and grid bookkeeping") {
    QSeriesR d = q_derivative(delta(4));
    CHECK(d.a[0] == 1);        // 1 * q^1
    CHECK(d.a[1] == -48);      // -24 * 2
    CHECK(d.a[2] == 756);      // 252 * 3

    QSeriesR half{rat(1, 2), {Rat(1), Rat(2)}};
    CHECK_THROWS(add(half, delta(4)));
}
