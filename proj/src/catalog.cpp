#include "vvmf/catalog.hpp"

#include <algorithm>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

ModularDatum make(std::string label, std::string display, int rank, SKind kind,
                  std::vector<Rat> twists, Rat c0, bool self_dual,
                  std::optional<std::pair<int, int>> fold_pair = std::nullopt) {
    ModularDatum d;
    d.label = std::move(label);
    d.display = std::move(display);
    d.rank = rank;
    d.s_kind = kind;
    d.twists = std::move(twists);
    d.c0 = std::move(c0);
    d.self_dual = self_dual;
    d.fold_pair = fold_pair;
    return d;
}

}  // namespace

std::vector<std::vector<std::string>> ModularDatum::s_symbolic() const {
    switch (s_kind) {
        case SKind::TwoPlusMinus:
            return {{"1/sqrt(2)", "1/sqrt(2)"}, {"1/sqrt(2)", "-1/sqrt(2)"}};
        case SKind::Fibonacci:
            return {{"1/sqrt(2+phi)", "phi/sqrt(2+phi)"},
                    {"phi/sqrt(2+phi)", "-1/sqrt(2+phi)"}};
        case SKind::IsingLike:
            return {{"1/2", "sqrt(2)/2", "1/2"},
                    {"sqrt(2)/2", "0", "-sqrt(2)/2"},
                    {"1/2", "-sqrt(2)/2", "1/2"}};
        case SKind::HalfSu25:
            return {{"s", "s*psi", "s*(psi^2-1)"},
                    {"s*psi", "s*(1-psi^2)", "s"},
                    {"s*(psi^2-1)", "s", "-s*psi"}};  // s = 2 sin(pi/7)/sqrt(7)
        case SKind::CyclicOmega:
            return {{"1/sqrt(3)", "1/sqrt(3)", "1/sqrt(3)"},
                    {"1/sqrt(3)", "omega/sqrt(3)", "omega^2/sqrt(3)"},
                    {"1/sqrt(3)", "omega^2/sqrt(3)", "omega/sqrt(3)"}};
        case SKind::CyclicOmegaBar:
            return {{"1/sqrt(3)", "1/sqrt(3)", "1/sqrt(3)"},
                    {"1/sqrt(3)", "omega^2/sqrt(3)", "omega/sqrt(3)"},
                    {"1/sqrt(3)", "omega/sqrt(3)", "omega^2/sqrt(3)"}};
        case SKind::FoldedZ3:
            return {{"1/sqrt(3)", "2/sqrt(3)"}, {"1/sqrt(3)", "-1/sqrt(3)"}};
    }
    return {};
}

Matrix<Complex> ModularDatum::s_numeric(mpfr_prec_t prec) const {
    const Real one = Real::of(1, prec);
    const Real two = Real::of(2, prec);
    auto realmat = [&](int n, auto entry) {
        Matrix<Complex> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Complex(entry(i, j), Real(prec));
        return m;
    };
    switch (s_kind) {
        case SKind::TwoPlusMinus: {
            Real r = one / rsqrt(two);
            return realmat(2, [&](int i, int j) { return i == 1 && j == 1 ? -r : r; });
        }
        case SKind::Fibonacci: {
            Real phi = (one + rsqrt(Real::of(5, prec))) / two;
            Real nrm = one / rsqrt(two + phi);
            return realmat(2, [&](int i, int j) {
                if (i == 1 && j == 1) return -nrm;
                return (i + j == 1) ? phi * nrm : nrm;
            });
        }
        case SKind::IsingLike: {
            Real half = one / two;
            Real s2 = rsqrt(two) / two;
            Real entries[3][3] = {{half, s2, half}, {s2, Real(prec), -s2}, {half, -s2, half}};
            return realmat(3, [&](int i, int j) { return entries[i][j]; });
        }
        case SKind::HalfSu25: {
            Real pi7 = Real::pi(prec) / Real::of(7, prec);
            Real psi = two * rcos(pi7);
            Real s = two * rsin(pi7) / rsqrt(Real::of(7, prec));
            Real psi2m1 = psi * psi - one;
            Real entries[3][3] = {{s, s * psi, s * psi2m1},
                                  {s * psi, -(s * psi2m1), s},
                                  {s * psi2m1, s, -(s * psi)}};
            return realmat(3, [&](int i, int j) { return entries[i][j]; });
        }
        case SKind::CyclicOmega:
        case SKind::CyclicOmegaBar: {
            Real nrm = one / rsqrt(Real::of(3, prec));
            Rat third = rat(s_kind == SKind::CyclicOmega ? 1 : 2, 3);
            Complex w = exp_2pi_i(third, prec);
            Complex w2 = w * w;
            Complex n(nrm, Real(prec));
            Matrix<Complex> m(3, 3);
            Complex table[3][3] = {{n, n, n}, {n, n * w, n * w2}, {n, n * w2, n * w}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = table[i][j];
            return m;
        }
        case SKind::FoldedZ3: {
            Real nrm = one / rsqrt(Real::of(3, prec));
            Matrix<Complex> m(2, 2);
            m(0, 0) = Complex(nrm, Real(prec));
            m(0, 1) = Complex(two * nrm, Real(prec));
            m(1, 0) = Complex(nrm, Real(prec));
            m(1, 1) = Complex(-nrm, Real(prec));
            return m;
        }
    }
    throw UnknownFamily("unhandled S kind");
}

const std::vector<ModularDatum>& catalog() {
    static const std::vector<ModularDatum> entries = [] {
        std::vector<ModularDatum> v;
        // rank 2: theta_1 = +-i
        v.push_back(make("su2_1", "SU(2)_1", 2, SKind::TwoPlusMinus,
                         {Rat(0), rat(1, 4)}, rat(1, 1), true));
        v.push_back(make("e7_1", "E_{7,1}", 2, SKind::TwoPlusMinus,
                         {Rat(0), rat(3, 4)}, rat(7, 1), true));
        // rank 2 Fibonacci
        v.push_back(make("g2_1", "G_{2,1}", 2, SKind::Fibonacci,
                         {Rat(0), rat(2, 5)}, rat(14, 5), true));
        v.push_back(make("f4_1", "F_{4,1}", 2, SKind::Fibonacci,
                         {Rat(0), rat(3, 5)}, rat(26, 5), true));
        // eight Ising-like families, theta_1 = e^{(2n+1) pi i/8}, theta_2 = -1
        const char* labels[8] = {"ising", "su2_2", "b2_1", "b3_1",
                                 "b4_1",  "b5_1",  "b6_1", "b7_1"};
        const char* displays[8] = {"Ising",   "SU(2)_2", "B_{2,1}", "B_{3,1}",
                                   "B_{4,1}", "B_{5,1}", "B_{6,1}", "B_{7,1}"};
        for (int n = 0; n < 8; ++n) {
            v.push_back(make(labels[n], displays[n], 3, SKind::IsingLike,
                             {Rat(0), rat(2 * n + 1, 16), rat(1, 2)},
                             rat(2 * n + 1, 2), true));
        }
        // half SU(2)_5 pair
        v.push_back(make("half_su2_5", "1/2 SU(2)_5", 3, SKind::HalfSu25,
                         {Rat(0), rat(1, 7), rat(5, 7)}, rat(48, 7), true));
        v.push_back(make("half_su2_5_bar", "conj 1/2 SU(2)_5", 3, SKind::HalfSu25,
                         {Rat(0), rat(6, 7), rat(2, 7)}, rat(8, 7), true));
        // Z/3 fusion
        v.push_back(make("su3_1", "SU(3)_1", 3, SKind::CyclicOmega,
                         {Rat(0), rat(1, 3), rat(1, 3)}, rat(2, 1), false,
                         std::make_pair(1, 2)));
        v.push_back(make("e6_1", "E_{6,1}", 3, SKind::CyclicOmegaBar,
                         {Rat(0), rat(2, 3), rat(2, 3)}, rat(6, 1), false,
                         std::make_pair(1, 2)));
        return v;
    }();
    return entries;
}

const ModularDatum& find_family(const std::string& label) {
    for (const ModularDatum& d : catalog())
        if (d.label == label) return d;
    throw UnknownFamily("no catalog entry '" + label + "'");
}

Matrix<Complex> rho(const ModularDatum& datum, const Rat& c, char generator,
                    mpfr_prec_t prec) {
    Rat k = (c - datum.c0) / 8;
    if (sgn(c) <= 0 || !is_integer(k) || sgn(k) < 0)
        throw InvalidCharge("c = " + rat_str(c) + " is not admissible for " + datum.label);
    if (generator == 'S') return datum.s_numeric(prec);
    if (generator != 'T') throw UsageError("generator must be 'S' or 'T'");
    Matrix<Complex> t(datum.rank, datum.rank);
    for (int i = 0; i < datum.rank; ++i)
        t(i, i) = exp_2pi_i(datum.twists[i] - c / 24, prec);
    return t;
}

std::vector<Rat> admissible_charges(const ModularDatum& datum, const Rat& cmax) {
    std::vector<Rat> out;
    for (Rat c = datum.c0; c <= cmax; c += 8) out.push_back(c);
    return out;
}

Rat gauss_sum_charge(const ModularDatum& datum, mpfr_prec_t prec) {
    Matrix<Complex> s = datum.s_numeric(prec);
    Complex sum(prec);
    for (int i = 0; i < datum.rank; ++i) {
        // d_i = S_{0i}/S_{00} is real for these catalogs
        Real di = s(0, i).re / s(0, 0).re;
        sum += (di * di) * exp_2pi_i(datum.twists[i], prec);
    }
    // The charge is 4 arg(sum)/pi mod 8, taken in (0, 8].
    Real cp = Real::of(4, prec) * ratan2(sum.im, sum.re) / Real::pi(prec);
    Int bound = 2 * lcm_denominators(datum.twists);
    Rat value;
    try {
        value = rational_reconstruct(cp, bound).value;
    } catch (const ReconstructionFailed& e) {
        throw ReconstructionUncertain(std::string("Gauss-sum charge: ") + e.what());
    }
    while (value <= 0) value += 8;
    while (value > 8) value -= 8;
    return value;
}

ModularDatum fold(const ModularDatum& datum) {
    if (!datum.fold_pair)
        throw NotFoldable(datum.label + " has no conjugate pair to fold");
    auto [i, j] = *datum.fold_pair;
    if (datum.twists[i] != datum.twists[j])
        throw NotFoldable(datum.label + " conjugate pair has distinct twists");
    ModularDatum f;
    f.label = datum.label + "_folded";
    f.display = datum.display;
    f.rank = 2;
    f.s_kind = SKind::FoldedZ3;
    f.twists = {Rat(0), datum.twists[i]};
    f.c0 = datum.c0;
    f.self_dual = true;
    f.folded_from = datum.label;
    return f;
}

}  // namespace vvmf
