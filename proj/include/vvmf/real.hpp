// Arbitrary-precision floating point (MPFR) with explicit precision, and a
// complex type built on a pair of reals.  Every value carries its precision;
// binary operations allocate the result at the max of the operand precisions,
// so precision never silently downgrades.  Rounding is always to nearest.
#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "vvmf/rational.hpp"

namespace vvmf {

class Real {
  public:
    static constexpr mpfr_prec_t kMinPrec = 64;

    explicit Real(mpfr_prec_t prec = kMinPrec) {
        mpfr_init2(v_, std::max<mpfr_prec_t>(prec, kMinPrec));
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, kMinPrec);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr mp() { return v_; }
    mpfr_srcptr mp() const { return v_; }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(int x, mpfr_prec_t prec) { return of(static_cast<long>(x), prec); }
    static Real of(double x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Rat& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Int& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    // 10^e at the given precision, e.g. tolerances 10^-(prec/8).
    static Real pow10(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    std::string str(int digits = 12) const {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "%.*Re", digits, v_);
        return buf;
    }

  private:
    mpfr_t v_;
};

inline mpfr_prec_t max_prec(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
}

#define VVMF_REAL_BINOP(op, fn)                                \
    inline Real operator op(const Real& a, const Real& b) {   \
        Real r(max_prec(a, b));                                \
        fn(r.mp(), a.mp(), b.mp(), MPFR_RNDN);                 \
        return r;                                              \
    }
VVMF_REAL_BINOP(+, mpfr_add)
VVMF_REAL_BINOP(-, mpfr_sub)
VVMF_REAL_BINOP(*, mpfr_mul)
VVMF_REAL_BINOP(/, mpfr_div)
#undef VVMF_REAL_BINOP

inline Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.mp(), a.mp(), MPFR_RNDN);
    return r;
}
inline Real& operator+=(Real& a, const Real& b) { a = a + b; return a; }
inline Real& operator-=(Real& a, const Real& b) { a = a - b; return a; }
inline Real& operator*=(Real& a, const Real& b) { a = a * b; return a; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.mp(), b.mp()) < 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.mp(), b.mp()) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.mp(), b.mp()) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.mp(), b.mp()) >= 0; }

#define VVMF_REAL_FN(name, fn)                  \
    inline Real name(const Real& a) {           \
        Real r(a.prec());                       \
        fn(r.mp(), a.mp(), MPFR_RNDN);          \
        return r;                               \
    }
VVMF_REAL_FN(rabs, mpfr_abs)
VVMF_REAL_FN(rsqrt, mpfr_sqrt)
VVMF_REAL_FN(rexp, mpfr_exp)
VVMF_REAL_FN(rlog, mpfr_log)
VVMF_REAL_FN(rsin, mpfr_sin)
VVMF_REAL_FN(rcos, mpfr_cos)
#undef VVMF_REAL_FN

inline Real rfloor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.mp(), a.mp());
    return r;
}
inline Real ratan2(const Real& y, const Real& x) {
    Real r(max_prec(y, x));
    mpfr_atan2(r.mp(), y.mp(), x.mp(), MPFR_RNDN);
    return r;
}
inline Real rpow_ui(const Real& a, unsigned long e) {
    Real r(a.prec());
    mpfr_pow_ui(r.mp(), a.mp(), e, MPFR_RNDN);
    return r;
}
inline Real rmax(const Real& a, const Real& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = Real::kMinPrec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    static Complex of(const Rat& x, mpfr_prec_t prec) {
        return Complex(Real::of(x, prec), Real(prec));
    }
    static Complex of(long x, mpfr_prec_t prec) {
        return Complex(Real::of(x, prec), Real(prec));
    }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string str(int digits = 12) const {
        return "(" + re.str(digits) + ", " + im.str(digits) + ")";
    }
};

inline Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
}
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline Complex operator*(const Real& s, const Complex& a) {
    return Complex(s * a.re, s * a.im);
}
inline Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
inline Real abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real cabs(const Complex& a) { return rsqrt(abs2(a)); }
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = abs2(b);
    Complex n = a * conj(b);
    return Complex(n.re / d, n.im / d);
}
inline Complex& operator+=(Complex& a, const Complex& b) { a = a + b; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a = a - b; return a; }

// e^{i theta}
inline Complex cis(const Real& theta) { return Complex(rcos(theta), rsin(theta)); }

// e^{2 pi i s} for rational s: the workhorse for twists and T-matrices.
Complex exp_2pi_i(const Rat& s, mpfr_prec_t prec);

// q^s = e^{2 pi i s tau} for rational exponent s at tau = tx + i*ty.
// Principal determination fixed by tau, matching the q-expansion grid.
Complex q_power(const Real& tau_x, const Real& tau_y, const Rat& s, mpfr_prec_t prec);

}  // namespace vvmf
