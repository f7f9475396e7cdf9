// The sixteen rank-2/3 fusion families: modular S and T data, admissible
// central charges, the Gauss-sum charge cross-check, and Z/3 folding to an
// effective two-dimensional representation when the two conjugate modules
// carry equal twists.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vvmf/linalg.hpp"

namespace vvmf {

// Shape of the S matrix; the numeric rendering is built per kind so the
// symbolic vocabulary stays tiny (sqrt2, phi, psi, omega).
enum class SKind {
    TwoPlusMinus,   // (1/sqrt2) [[1,1],[1,-1]]
    Fibonacci,      // (1/sqrt(2+phi)) [[1,phi],[phi,-1]]
    IsingLike,      // (1/2) [[1,sqrt2,1],[sqrt2,0,-sqrt2],[1,-sqrt2,1]]
    HalfSu25,       // (2 sin(pi/7)/sqrt7) [[1,psi,psi^2-1],[psi,1-psi^2,1],[psi^2-1,1,-psi]]
    CyclicOmega,    // (1/sqrt3) [[1,1,1],[1,w,w^2],[1,w^2,w]]
    CyclicOmegaBar, // conjugate of the above
    FoldedZ3,       // (1/sqrt3) [[1,2],[1,-1]]
};

struct ModularDatum {
    std::string label;     // e.g. "su2_1"
    std::string display;   // e.g. "SU(2)_1"
    int rank = 0;
    SKind s_kind = SKind::TwoPlusMinus;
    std::vector<Rat> twists;  // t_i in [0,1), t_0 = 0
    Rat c0;                   // base charge, smallest positive admissible c
    bool self_dual = true;
    std::optional<std::pair<int, int>> fold_pair;
    std::string folded_from;  // label of the rank-3 parent when folded

    // symbolic entry strings, row-major
    std::vector<std::vector<std::string>> s_symbolic() const;
    Matrix<Complex> s_numeric(mpfr_prec_t prec = 300) const;
};

struct GenusSpec {
    ModularDatum datum;
    Rat c;
};

// The sixteen families, constructed once, immutable.
const std::vector<ModularDatum>& catalog();

// Lookup by label; throws UnknownFamily.
const ModularDatum& find_family(const std::string& label);

// rho of a generator ('S' or 'T') at central charge c; InvalidCharge unless
// c > 0 and c == c0 (mod 8).
Matrix<Complex> rho(const ModularDatum& datum, const Rat& c, char generator,
                    mpfr_prec_t prec);

// { c0 + 8k <= cmax }, increasing.
std::vector<Rat> admissible_charges(const ModularDatum& datum, const Rat& cmax);

// Unique c' in (0, 8] with e^{i pi c'/4} = normalized Gauss sum, reconstructed
// as a rational with denominator dividing 2 lcm(twist denominators).
Rat gauss_sum_charge(const ModularDatum& datum, mpfr_prec_t prec = 300);

// Restriction to span{e0, e1 + e2}; NotFoldable unless fold_pair is present
// with equal twists.
ModularDatum fold(const ModularDatum& datum);

}  // namespace vvmf
