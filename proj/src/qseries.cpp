#include "vvmf/qseries.hpp"

namespace vvmf {

namespace {

// sigma_{k}(m) for m = 1..n-1 by a divisor sieve.
std::vector<Int> divisor_power_sums(int k, int n) {
    std::vector<Int> s(n, 0);
    for (int d = 1; d < n; ++d) {
        Int dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        for (int m = d; m < n; m += d) s[m] += dk;
    }
    return s;
}

QSeriesR eisenstein_impl(int sigma_pow, long factor, int nterms) {
    QSeriesR e;
    e.lead = 0;
    e.a.assign(nterms, Rat(0));
    e.a[0] = 1;
    std::vector<Int> s = divisor_power_sums(sigma_pow, nterms);
    for (int m = 1; m < nterms; ++m) e.a[m] = Rat(factor) * Rat(s[m]);
    return e;
}

}  // namespace

QSeriesR eisenstein(int k, int nterms) {
    switch (k) {
        case 4:
            return eisenstein_impl(3, 240, nterms);
        case 6:
            return eisenstein_impl(5, -504, nterms);
        case 10:
            return eisenstein_impl(9, -264, nterms);
        default:
            throw UnsupportedWeight("Eisenstein weight " + std::to_string(k) +
                                    " (supported: 4, 6, 10)");
    }
}

QSeriesR delta(int nterms) {
    QSeriesR e4 = eisenstein(4, nterms + 1);
    QSeriesR e6 = eisenstein(6, nterms + 1);
    QSeriesR num = sub(mul(mul(e4, e4), e4), mul(e6, e6));
    // constant term cancels exactly; shift the grid down to lead q^1
    QSeriesR d;
    d.lead = 1;
    d.a.assign(nterms, Rat(0));
    for (int m = 0; m < nterms; ++m) d.a[m] = num.a[m + 1] / 1728;
    return d;
}

QSeriesR jay(int nterms) {
    QSeriesR e4 = eisenstein(4, nterms + 1);
    QSeriesR e4cubed = mul(mul(e4, e4), e4);
    QSeriesR unit = delta(nterms + 1);
    unit.lead = 0;  // Delta / q, a unit series
    QSeriesR j = mul(e4cubed, invert(unit));
    j.lead = -1;
    j = add_scalar(j, Rat(-744), Rat(0));
    j.a.resize(nterms);
    return j;
}

EvalResult evaluate(const QSeriesR& x, const Real& tau_x, const Real& tau_y,
                    mpfr_prec_t prec) {
    if (!(tau_y > Real(prec)))
        throw PrecisionLoss("evaluation point not in the upper half-plane");
    Complex q = q_power(tau_x, tau_y, Rat(1), prec);
    Real qabs = cabs(q);
    Real one = Real::of(1, prec);
    if (!(qabs < one)) throw PrecisionLoss("|q| >= 1 at evaluation point");

    Complex s(prec);
    for (int k = x.length() - 1; k >= 0; --k)
        s = s * q + Complex::of(x.a[k], prec);
    Complex value = q_power(tau_x, tau_y, x.lead, prec) * s;

    Real maxc(prec);
    for (const Rat& c : x.a) maxc = rmax(maxc, rabs(Real::of(c, prec)));
    Real two_pi = Real::of(2, prec) * Real::pi(prec);
    Real qpow_end = rexp(-(two_pi * Real::of(x.end_exponent(), prec) * tau_y));
    Real tail = qpow_end * Real::of(2, prec) * maxc / (one - qabs);
    if (tail > Real::pow10(-20, prec))
        throw PrecisionLoss("truncation tail bound " + tail.str(4) +
                            " exceeds 1e-20");
    return EvalResult{value, tail};
}

}  // namespace vvmf
