#include "vvmf/real.hpp"

namespace vvmf {

Complex exp_2pi_i(const Rat& s, mpfr_prec_t prec) {
    // Reduce mod 1 first so the angle stays small regardless of s.
    Rat f = rat_mod1(s);
    Real theta = Real::of(2, prec) * Real::pi(prec) * Real::of(f, prec);
    return cis(theta);
}

Complex q_power(const Real& tau_x, const Real& tau_y, const Rat& s, mpfr_prec_t prec) {
    // e^{2 pi i s (x + i y)} = e^{-2 pi s y} * (cos(2 pi s x) + i sin(2 pi s x))
    Real two_pi_s = Real::of(2, prec) * Real::pi(prec) * Real::of(s, prec);
    Real radius = rexp(-(two_pi_s * tau_y));
    return radius * cis(two_pi_s * tau_x);
}

}  // namespace vvmf
