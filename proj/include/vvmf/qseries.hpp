// Truncated q-expansions with a rational leading exponent and coefficients on
// an integer-stepped grid: f = sum_k a[k] q^(lead + k).  Exact coefficients
// are GMP rationals; a complex instantiation exists for numeric work.  All
// arithmetic tracks the minimum valid truncation of its operands.
//
// The Cauchy product has an OpenMP-parallel path (independent output slots)
// and a serial reference; both produce identical exact results.
#pragma once

#include <omp.h>

#include <vector>

#include "vvmf/errors.hpp"
#include "vvmf/real.hpp"

namespace vvmf {

template <class C>
struct QSeries {
    Rat lead;            // exponent carried by a[0]
    std::vector<C> a;    // coefficient of q^(lead + k)

    int length() const { return static_cast<int>(a.size()); }
    // first exponent beyond the stored window
    Rat end_exponent() const { return lead + length(); }
};

using QSeriesR = QSeries<Rat>;
using QSeriesC = QSeries<Complex>;

namespace detail {
inline bool coeff_zero(const Rat& c) { return c == 0; }
inline bool coeff_zero(const Complex& c) { return c.is_zero(); }
inline Rat coeff_of_rat(const Rat& r, const Rat&) { return r; }
inline Complex coeff_of_rat(const Rat& r, const Complex& like) {
    return Complex::of(r, like.prec());
}
}  // namespace detail

template <class C>
QSeries<C> mul_serial(const QSeries<C>& x, const QSeries<C>& y) {
    QSeries<C> r;
    r.lead = x.lead + y.lead;
    const int n = std::min(x.length(), y.length());
    r.a.assign(n, C());
    for (int k = 0; k < n; ++k) {
        C s{};
        for (int i = 0; i <= k; ++i) s += x.a[i] * y.a[k - i];
        r.a[k] = std::move(s);
    }
    return r;
}

template <class C>
QSeries<C> mul(const QSeries<C>& x, const QSeries<C>& y) {
    const int n = std::min(x.length(), y.length());
    if (static_cast<long>(n) * n < 2048) return mul_serial(x, y);
    QSeries<C> r;
    r.lead = x.lead + y.lead;
    r.a.assign(n, C());
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) {
        C s{};
        for (int i = 0; i <= k; ++i) s += x.a[i] * y.a[k - i];
        r.a[k] = std::move(s);
    }
    return r;
}

template <class C>
QSeries<C> add(const QSeries<C>& x, const QSeries<C>& y) {
    Rat off = y.lead - x.lead;
    if (!is_integer(off))
        throw Error("GridMismatch", "q-series grids differ by non-integer " + rat_str(off));
    long d = rat_floor(off).get_si();
    // Align to the smaller leading exponent; keep the overlap-valid window.
    const QSeries<C>& lo = d >= 0 ? x : y;
    const QSeries<C>& hi = d >= 0 ? y : x;
    long shift = d >= 0 ? d : -d;  // hi starts `shift` slots after lo
    QSeries<C> r;
    r.lead = lo.lead;
    long end = std::min<long>(lo.length(), shift + hi.length());
    if (end <= 0) throw Error("GridMismatch", "empty truncation overlap in add");
    r.a.assign(end, C());
    for (long k = 0; k < end; ++k) {
        r.a[k] = lo.a[k];
        if (k >= shift && k - shift < hi.length()) r.a[k] += hi.a[k - shift];
    }
    return r;
}

template <class C>
QSeries<C> sub(const QSeries<C>& x, const QSeries<C>& y) {
    QSeries<C> ny = y;
    for (C& c : ny.a) c = -c;
    return add(x, ny);
}

template <class C>
QSeries<C> scale(const QSeries<C>& x, const C& s) {
    QSeries<C> r = x;
    for (C& c : r.a) c = c * s;
    return r;
}

// Adds s * q^e; e must land on the stored grid.
template <class C>
QSeries<C> add_scalar(const QSeries<C>& x, const C& s, const Rat& e = Rat(0)) {
    Rat off = e - x.lead;
    if (!is_integer(off) || sgn(off) < 0 || off >= x.length())
        throw Error("GridMismatch", "scalar exponent " + rat_str(e) + " outside grid");
    QSeries<C> r = x;
    r.a[rat_floor(off).get_ui()] += s;
    return r;
}

// 1/x; requires a[0] invertible (NonUnitSeries otherwise).
template <class C>
QSeries<C> invert(const QSeries<C>& x) {
    if (x.length() == 0 || detail::coeff_zero(x.a[0]))
        throw NonUnitSeries("inversion requires a nonzero leading coefficient");
    QSeries<C> r;
    r.lead = -x.lead;
    const int n = x.length();
    r.a.assign(n, C());
    C inv0 = detail::coeff_of_rat(Rat(1), x.a[0]) / x.a[0];
    r.a[0] = inv0;
    for (int k = 1; k < n; ++k) {
        C s{};
        for (int i = 1; i <= k; ++i) s += x.a[i] * r.a[k - i];
        r.a[k] = -(s * inv0);
    }
    return r;
}

// q d/dq: multiplies a[k] by (lead + k).
template <class C>
QSeries<C> q_derivative(const QSeries<C>& x) {
    QSeries<C> r = x;
    for (int k = 0; k < r.length(); ++k)
        r.a[k] = r.a[k] * detail::coeff_of_rat(x.lead + k, r.a[k]);
    return r;
}

template <class C>
QSeries<C> truncate(const QSeries<C>& x, int n) {
    QSeries<C> r = x;
    if (n < r.length()) r.a.resize(n);
    return r;
}

inline Complex operator*(const Complex& a, const Rat& r) {
    return a * Complex::of(r, a.prec());
}

// --- classical forms, exact coefficients, exactly n terms each ------------

// Normalized Eisenstein series E_k for k in {4, 6, 10}; UnsupportedWeight
// otherwise.  E_10 = E_4 E_6 is produced from its own divisor sums.
QSeriesR eisenstein(int k, int nterms);

// Discriminant Delta = (E4^3 - E6^2)/1728 = q - 24 q^2 + ...
QSeriesR delta(int nterms);

// J = E4^3 / Delta - 744 = q^-1 + 0 + 196884 q + ...
QSeriesR jay(int nterms);

struct EvalResult {
    Complex value;
    Real tail;  // a-posteriori bound on the truncation remainder
};

// Evaluates the expansion at tau = tau_x + i tau_y (upper half-plane).  The
// tail bound is |q|^(end exponent) * 2 max|a_k| / (1 - |q|); PrecisionLoss if
// it exceeds 1e-20 or if |q| >= 1.
EvalResult evaluate(const QSeriesR& x, const Real& tau_x, const Real& tau_y,
                    mpfr_prec_t prec);

}  // namespace vvmf
