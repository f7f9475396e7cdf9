#include "vvmf/character.hpp"

#include <map>
#include <mutex>

namespace vvmf {

const FormTable& FormTable::shared(int nterms) {
    static std::mutex mu;
    static std::map<int, FormTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(nterms);
    if (it != cache.end()) return it->second;

    FormTable t;
    t.nterms = nterms;
    QSeriesR u = mul(delta(nterms), invert(eisenstein(10, nterms)));  // lead 1
    QSeriesR j = jay(nterms);
    QSeriesR v = mul(u, add_scalar(j, Rat(-240), Rat(0)));  // lead 0
    t.u.assign(nterms + 1, Rat(0));
    t.v.assign(nterms + 1, Rat(0));
    for (int m = 1; m <= nterms && m - 1 < u.length(); ++m) t.u[m] = u.a[m - 1];
    for (int m = 0; m <= nterms && m < v.length(); ++m) t.v[m] = v.a[m];
    if (t.u[0] != 0 || t.u[1] != 1 || t.v[0] != 1 || t.v[1] != 0)
        throw ConsistencyFailure("Delta/E10 or (Delta/E10)(J-240) failed its self-check");
    return cache.emplace(nterms, std::move(t)).first->second;
}

FundamentalExpansion recurrence(const std::vector<Rat>& lambda,
                                const Matrix<Rat>& chi, int order) {
    const int d = static_cast<int>(lambda.size());
    const FormTable& ft = FormTable::shared(order + 2);

    // D[m] = v[m] (Lambda - I) + u[m] K with K = chi + [Lambda, chi]
    Matrix<Rat> k(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            k(i, j) = chi(i, j) * (1 + lambda[i] - lambda[j]);
    Matrix<Rat> lam_m1(d, d);
    for (int i = 0; i < d; ++i) lam_m1(i, i) = lambda[i] - 1;
    // self-checks of Eq. (7) at orders q^0, q^1: D[0] = Lambda - I, D[1] = K
    {
        Matrix<Rat> d0 = ft.v[0] * lam_m1 + ft.u[0] * k;
        if (!(d0 == lam_m1)) throw ConsistencyFailure("D[0] != Lambda - I");
        Matrix<Rat> d1 = ft.v[1] * lam_m1 + ft.u[1] * k;
        if (!(d1 == k)) throw ConsistencyFailure("D[1] != chi + [Lambda, chi]");
    }

    FundamentalExpansion e;
    e.lambda = lambda;
    e.chi = chi;
    e.order = order;
    e.xi.assign(order + 2, Matrix<Rat>(d, d));
    e.coeff(-1) = identity_rat(d);

    for (int n = 0; n <= order; ++n) {
        // P = sum_{m=1}^{n+1} v[m] Xi[n-m],  Q = sum u[m] Xi[n-m]
        Matrix<Rat> p(d, d), q(d, d);
        for (int m = 1; m <= n + 1; ++m) {
            const Matrix<Rat>& x = e.coeff(n - m);
            const Rat& vm = ft.v[m];
            const Rat& um = ft.u[m];
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    if (vm != 0) p(i, j) += vm * x(i, j);
                    if (um != 0) q(i, j) += um * x(i, j);
                }
        }
        Matrix<Rat> rhs = p * lam_m1 + q * k;
        Matrix<Rat>& xn = e.coeff(n);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rat div = n + 1 + lambda[i] - lambda[j];
                if (div == 0)
                    throw ResonantStep("n + 1 + L_ii - L_jj = 0 at n=" + std::to_string(n) +
                                       " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
                xn(i, j) = rhs(i, j) / div;
            }
    }
    return e;
}

FundamentalExpansion apply_gauge(const FundamentalExpansion& e,
                                 const std::vector<Rat>& ratios) {
    const int d = e.dim();
    FundamentalExpansion out = e;
    for (Matrix<Rat>& m : out.xi)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = m(i, j) * ratios[i] / ratios[j];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.chi(i, j) = out.chi(i, j) * ratios[i] / ratios[j];
    return out;
}

Matrix<Complex> evaluate_xi(const FundamentalExpansion& e, const Real& tau_x,
                            const Real& tau_y, mpfr_prec_t prec) {
    const int d = e.dim();
    Complex q = q_power(tau_x, tau_y, Rat(1), prec);
    Matrix<Complex> y(d, d);
    for (int i = 0; i < d; ++i) {
        Complex pref = q_power(tau_x, tau_y, e.lambda[i] - 1, prec);
        for (int j = 0; j < d; ++j) {
            Complex s(prec);
            for (int n = e.order; n >= -1; --n)
                s = s * q + Complex::of(e.coeff(n)(i, j), prec);
            y(i, j) = pref * s;
        }
    }
    return y;
}

GaugeResolution resolve_gauge(const FundamentalExpansion& e,
                              const Matrix<Complex>& rho_s, const Rat& tau0_x,
                              const Rat& tau0_y, mpfr_prec_t prec,
                              const Int& recon_bound) {
    const int d = e.dim();
    Real tx = Real::of(tau0_x, prec), ty = Real::of(tau0_y, prec);
    Matrix<Complex> y = evaluate_xi(e, tx, ty, prec);

    Matrix<Complex> sys(d * d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int row = i * d + j;
            for (int kk = 0; kk < d; ++kk) {
                Complex v = rho_s(i, kk) * y(kk, j);
                if (kk == i) v -= y(i, j);
                sys(row, kk) = v;
            }
        }
    auto kernel = nullspace(sys, prec);
    if (kernel.size() != 1)
        throw AmbiguityUnresolved("gauge kernel dimension " + std::to_string(kernel.size()) +
                                  " (expected 1)");
    std::vector<Complex>& r = kernel[0];
    if (cabs(r[0]) < Real::pow10(-30, prec))
        throw AmbiguityUnresolved("vacuum gauge ratio vanishes");

    GaugeResolution res;
    res.reconstruction = Real(prec);
    for (int i = 0; i < d; ++i) {
        Complex ri = r[i] / r[0];
        Real tol = Real::pow10(-15, prec) * rmax(Real::of(1, prec), rabs(ri.re));
        if (rabs(ri.im) > tol)
            throw ReconstructionUncertain("gauge ratio r_" + std::to_string(i) +
                                          " has imaginary part " + ri.im.str(4));
        try {
            Reconstruction rec = rational_reconstruct(ri.re, recon_bound);
            res.ratios.push_back(rec.value);
            res.reconstruction = rmax(res.reconstruction, rec.residual);
        } catch (const ReconstructionFailed& ex) {
            throw ReconstructionUncertain(std::string("gauge ratio r_") + std::to_string(i) +
                                          ": " + ex.what());
        }
    }

    FundamentalExpansion hat = apply_gauge(e, res.ratios);
    Matrix<Complex> yh = evaluate_xi(hat, tx, ty, prec);
    res.verification = norm_max(yh - rho_s * yh);
    if (!(res.verification < Real::pow10(-20, prec)))
        throw ReconstructionUncertain("covariance residual " + res.verification.str(4) +
                                      " at tau0 after gauge fixing");
    return res;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::IntegralNonneg: return "IntegralNonneg";
        case Status::NonIntegral: return "NonIntegral";
        case Status::NegativeCoefficient: return "NegativeCoefficient";
        case Status::SolverFailure: return "SolverFailure";
    }
    return "?";
}

CharacterCandidate screen_first_column(const FundamentalExpansion& hat,
                                       const ExponentCandidate& cand,
                                       bool folded) {
    const int d = hat.dim();
    const int n = hat.order;
    CharacterCandidate out;
    out.cand = cand;
    out.folded = folded;
    out.chi_hat = hat.chi;
    out.dim_v1 = hat.chi(0, 0);

    // component i coefficient window: vacuum starts at Xi[-1] = 1, others at
    // Xi[0]; both give N+1 coefficients
    std::vector<std::vector<Rat>> cols(d);
    for (int i = 0; i < d; ++i)
        for (int m = 0; m <= n; ++m)
            cols[i].push_back(hat.coeff(i == 0 ? m - 1 : m)(i, 0));

    // folded coordinate carries the single-module character; each conjugate
    // line is tabulated as the invariant combination chi_1 + chi_2 = 2 chi_1,
    // so rescale before screening
    if (folded)
        for (int i = 1; i < d; ++i)
            for (Rat& x : cols[i]) x *= 2;

    bool nonintegral = false, negative = false;
    for (const auto& col : cols)
        for (const Rat& x : col) {
            if (!is_integer(x)) nonintegral = true;
            else if (sgn(x) < 0) negative = true;
        }
    out.status = nonintegral ? Status::NonIntegral
                             : (negative ? Status::NegativeCoefficient
                                         : Status::IntegralNonneg);

    const Rat c24 = cand.spec.c / 24;
    out.lead_exponents.push_back(-c24);
    out.coefficients.push_back(cols[0]);
    for (int i = 1; i < d; ++i) {
        out.lead_exponents.push_back(cand.h[i - 1] - c24);
        out.coefficients.push_back(cols[i]);
        if (folded && i == d - 1) {  // conjugate module shares the character
            out.lead_exponents.push_back(cand.h[i - 1] - c24);
            out.coefficients.push_back(cols[i]);
        }
    }
    return out;
}

Real covariance_residual(const FundamentalExpansion& e,
                         const Matrix<Complex>& rho_s,
                         const std::vector<std::pair<Rat, Rat>>& taus,
                         mpfr_prec_t prec) {
    Real worst(prec);
    for (const auto& [x, y] : taus) {
        if (sgn(y) <= 0) throw PrecisionLoss("tau not in the upper half-plane");
        // S tau = -1/tau = (-x + i y) / (x^2 + y^2), exactly rational
        Rat n2 = x * x + y * y;
        Rat sx = -x / n2, sy = y / n2;
        Matrix<Complex> lhs =
            evaluate_xi(e, Real::of(sx, prec), Real::of(sy, prec), prec);
        Matrix<Complex> rhs =
            rho_s * evaluate_xi(e, Real::of(x, prec), Real::of(y, prec), prec);
        worst = rmax(worst, norm_max(lhs - rhs));
    }
    return worst;
}

bool t_covariance_exact(const std::vector<Rat>& lambda, const ModularDatum& datum,
                        const Rat& c) {
    for (size_t i = 0; i < lambda.size(); ++i)
        if (rat_mod1(lambda[i]) != rat_mod1(datum.twists[i] - c / 24)) return false;
    return true;
}

}  // namespace vvmf
