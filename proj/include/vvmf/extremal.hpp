// Extremal exponent enumeration: the weight window forced by
// ell = C(p,2) + p c/4 - 6 sum(h) in {0..5}, and the bijectivity (trace)
// condition that makes Lambda a valid fundamental-matrix exponent.
#pragma once

#include "vvmf/catalog.hpp"

namespace vvmf {

struct ExponentCandidate {
    GenusSpec spec;
    std::vector<Rat> h;       // non-vacuum weights, length p-1
    std::vector<Rat> lambda;  // diag Lambda, length p
    Rat ell;
    int p = 0;
};

// C(p,2) + p c/4 - 6 sum h, exact.
Rat ell_value(const Rat& c, const std::vector<Rat>& h, int p);

// ell integral and 0 <= ell < 6.
bool is_extremal(const ExponentCandidate& cand);

// diag(1 - c/24, h_1 - c/24, ...).
std::vector<Rat> lambda_of(const Rat& c, const std::vector<Rat>& h);

// All h with h_i = t_i + k_i >= t_i hitting the extremal weight sum; ordered
// with the largest h_1 first.  NonIntegralResidue if the residue class of
// C(p,2) + p c/4 - 6 sum t contains no integer.
std::vector<ExponentCandidate> enumerate_extremal(const GenusSpec& spec);

struct TraceCheck {
    Rat lhs;        // Tr Lambda, exact
    Real rhs;       // 5d/12 + Tr rho(S)/4 + (2/(3 sqrt 3)) Re(e^{-i pi/6} Tr(rho(S) rho(T)^-1))
    Real diff;      // |lhs - rhs|
    bool ok = false;
};

TraceCheck trace_condition_detail(const ExponentCandidate& cand,
                                  const Matrix<Complex>& rho_s,
                                  const Matrix<Complex>& rho_st_inv,
                                  mpfr_prec_t prec);

bool trace_condition(const ExponentCandidate& cand, const Matrix<Complex>& rho_s,
                     const Matrix<Complex>& rho_st_inv, mpfr_prec_t prec);

// Convenience: builds rho(S) and rho(S) rho(T)^-1 from the candidate's spec.
bool trace_condition(const ExponentCandidate& cand, mpfr_prec_t prec);

}  // namespace vvmf
