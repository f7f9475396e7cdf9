#include "vvmf/extremal.hpp"

#include "vvmf/errors.hpp"

namespace vvmf {

Rat ell_value(const Rat& c, const std::vector<Rat>& h, int p) {
    Rat s(0);
    for (const Rat& hi : h) s += hi;
    return choose2(p) + p * c / 4 - 6 * s;
}

bool is_extremal(const ExponentCandidate& cand) {
    return is_integer(cand.ell) && sgn(cand.ell) >= 0 && cand.ell < 6;
}

std::vector<Rat> lambda_of(const Rat& c, const std::vector<Rat>& h) {
    std::vector<Rat> lam;
    lam.push_back(1 - c / 24);
    for (const Rat& hi : h) lam.push_back(hi - c / 24);
    return lam;
}

namespace {

// compositions of total into `parts` nonnegative integers, first part largest
// first so the spinor-like splitting leads (matches table ordering)
void compositions(long total, int parts, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long k = total; k >= 0; --k) {
        cur.push_back(k);
        compositions(total - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ExponentCandidate> enumerate_extremal(const GenusSpec& spec) {
    const int p = spec.datum.rank;
    std::vector<Rat> t(spec.datum.twists.begin() + 1, spec.datum.twists.end());
    Rat ell0 = ell_value(spec.c, t, p);
    if (!is_integer(ell0))
        throw NonIntegralResidue("C(p,2) + pc/4 - 6 sum(t) = " + rat_str(ell0) +
                                 " for " + spec.datum.label + " at c = " + rat_str(spec.c));
    // unique ell* in {0..5} congruent to ell0 mod 6; K = excess weight to distribute
    Int e0 = ell0.get_num();
    Int ell_star, k_total;
    mpz_fdiv_qr(k_total.get_mpz_t(), ell_star.get_mpz_t(), e0.get_mpz_t(),
                Int(6).get_mpz_t());
    std::vector<ExponentCandidate> out;
    if (sgn(k_total) < 0) return out;  // weight sum below sum of twists: empty
    std::vector<std::vector<long>> splits;
    std::vector<long> cur;
    compositions(k_total.get_si(), p - 1, cur, splits);
    for (const auto& ks : splits) {
        ExponentCandidate cand;
        cand.spec = spec;
        for (int i = 0; i < p - 1; ++i) cand.h.push_back(t[i] + ks[i]);
        cand.lambda = lambda_of(spec.c, cand.h);
        cand.ell = Rat(ell_star);
        cand.p = p;
        out.push_back(std::move(cand));
    }
    return out;
}

TraceCheck trace_condition_detail(const ExponentCandidate& cand,
                                  const Matrix<Complex>& rho_s,
                                  const Matrix<Complex>& rho_st_inv,
                                  mpfr_prec_t prec) {
    TraceCheck chk;
    chk.lhs = 0;
    for (const Rat& l : cand.lambda) chk.lhs += l;

    Complex tr_s(prec), tr_sti(prec);
    for (int i = 0; i < rho_s.rows(); ++i) {
        tr_s += rho_s(i, i);
        tr_sti += rho_st_inv(i, i);
    }
    const Real one = Real::of(1, prec);
    Real d = Real::of(cand.p, prec);
    Real sqrt3 = rsqrt(Real::of(3, prec));
    // Re(e^{-i pi/6} z) with z = Tr(rho(S) rho(T)^{-1})
    Complex phase = exp_2pi_i(rat(-1, 12), prec);
    Real re_part = (phase * tr_sti).re;
    chk.rhs = Real::of(5, prec) * d / Real::of(12, prec) + tr_s.re / Real::of(4, prec) +
              Real::of(2, prec) / (Real::of(3, prec) * sqrt3) * re_part;
    chk.diff = rabs(Real::of(chk.lhs, prec) - chk.rhs);
    chk.ok = chk.diff < Real::pow10(-20, prec) * one;
    return chk;
}

bool trace_condition(const ExponentCandidate& cand, const Matrix<Complex>& rho_s,
                     const Matrix<Complex>& rho_st_inv, mpfr_prec_t prec) {
    return trace_condition_detail(cand, rho_s, rho_st_inv, prec).ok;
}

bool trace_condition(const ExponentCandidate& cand, mpfr_prec_t prec) {
    const ModularDatum& d = cand.spec.datum;
    Matrix<Complex> s = rho(d, cand.spec.c, 'S', prec);
    Matrix<Complex> t = rho(d, cand.spec.c, 'T', prec);
    Matrix<Complex> t_inv(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
        t_inv(i, i) = conj(t(i, i));  // |diag| = 1, so the inverse is the conjugate
    return trace_condition(cand, s, s * t_inv, prec);
}

}  // namespace vvmf
