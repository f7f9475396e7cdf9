// The q-expansion engine for the fundamental matrix Xi:
//   q^{-Lambda} Xi = q^{-1} I + sum_{n>=0} Xi[n] q^n,
// driven by the Fuchsian system (1/2pi i) Xi' = Xi D with
//   D = (Delta/E10) ((J - 240)(Lambda - I) + chi + [Lambda, chi]).
// D factors through two scalar series, so each recurrence step is a pair of
// scalar-weighted matrix sums.  Gauge resolution pins the diagonal-conjugation
// freedom by enforcing S-covariance at tau = i; screening then reads off the
// first column (the character vector) exactly.
#pragma once

#include "vvmf/connection.hpp"
#include "vvmf/extremal.hpp"
#include "vvmf/qseries.hpp"

namespace vvmf {

// Shared immutable scalar-series table:
//   u[m] = coeff of q^m in Delta/E10            (u[0] = 0, u[1] = 1)
//   v[m] = coeff of q^m in (Delta/E10)(J - 240) (v[0] = 1, v[1] = 0)
struct FormTable {
    int nterms = 0;
    std::vector<Rat> u, v;
    static const FormTable& shared(int nterms);  // internally synchronized
};

struct FundamentalExpansion {
    std::vector<Rat> lambda;
    Matrix<Rat> chi;
    int order = 0;                // N
    std::vector<Matrix<Rat>> xi;  // xi[k] = Xi[k-1], k = 0..N+1

    const Matrix<Rat>& coeff(int n) const { return xi[n + 1]; }
    Matrix<Rat>& coeff(int n) { return xi[n + 1]; }
    int dim() const { return static_cast<int>(lambda.size()); }
};

// Exact expansion to order N.  Throws ResonantStep on a vanishing divisor and
// ConsistencyFailure if the D-series self-checks fail.
FundamentalExpansion recurrence(const std::vector<Rat>& lambda,
                                const Matrix<Rat>& chi, int order);

// Conjugation by diag(r): Xi_hat[n]_{ij} = (r_i / r_j) Xi[n]_{ij}.
FundamentalExpansion apply_gauge(const FundamentalExpansion& e,
                                 const std::vector<Rat>& ratios);

// Numeric Xi(tau) from the truncated expansion at tau = tau_x + i tau_y.
// No tail-bound policing here: callers measure residuals from whatever
// truncation they were given.
Matrix<Complex> evaluate_xi(const FundamentalExpansion& e, const Real& tau_x,
                            const Real& tau_y, mpfr_prec_t prec);

struct GaugeResolution {
    std::vector<Rat> ratios;   // r_i, r_0 = 1
    Real verification;         // ||Xi_hat(tau0) - rho(S) Xi_hat(tau0)|| after rescale
    Real reconstruction;       // worst |r_i(numeric) - r_i(rational)|
};

// Kernel of the stacked system sum_k rho(S)_{ik} Y_{kj} r_k = Y_{ij} r_i at
// Y = Xi(tau0).  AmbiguityUnresolved unless the kernel is 1-dimensional;
// ReconstructionUncertain if a ratio is not rational within the bound or the
// rescaled expansion fails the covariance check at tau0.
GaugeResolution resolve_gauge(const FundamentalExpansion& e,
                              const Matrix<Complex>& rho_s, const Rat& tau0_x,
                              const Rat& tau0_y, mpfr_prec_t prec,
                              const Int& recon_bound);

enum class Status { IntegralNonneg, NonIntegral, NegativeCoefficient, SolverFailure };

const char* status_name(Status s);

struct CharacterCandidate {
    ExponentCandidate cand;
    Status status = Status::SolverFailure;
    std::string failure_reason;

    // reported (unfolded) components; exponents h_i - c/24 with h_0 = 0
    std::vector<Rat> lead_exponents;
    std::vector<std::vector<Rat>> coefficients;  // exact; integers iff integral
    Rat dim_v1;
    Matrix<Rat> chi_hat;
    ConnectionSolution connection;
    std::vector<Rat> gauge_ratios;
    Real covariance;      // max S-covariance residual over the test points
    Real reconstruction;  // gauge reconstruction residual
    bool folded = false;  // non-vacuum row duplicated on report
};

// Classifies the exact first column of a gauge-fixed expansion.  For folded
// genera the non-vacuum component is duplicated before reporting.
CharacterCandidate screen_first_column(const FundamentalExpansion& hat,
                                       const ExponentCandidate& cand,
                                       bool folded);

// max over tau in taus of || Xi(S tau) - rho(S) Xi(tau) ||_max, with
// S tau = -1/tau computed exactly on rational tau = x + i y.
Real covariance_residual(const FundamentalExpansion& e,
                         const Matrix<Complex>& rho_s,
                         const std::vector<std::pair<Rat, Rat>>& taus,
                         mpfr_prec_t prec);

// Exact T-covariance: e^{2 pi i Lambda_ii} = e^{2 pi i (t_i - c/24)} as
// rationals mod 1.
bool t_covariance_exact(const std::vector<Rat>& lambda, const ModularDatum& datum,
                        const Rat& c);

}  // namespace vvmf
