#include "vvmf/linalg.hpp"

#include <cassert>

#include "vvmf/errors.hpp"

namespace vvmf {

Real norm_max(const Matrix<Complex>& m) {
    Real best(Real::kMinPrec);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) best = rmax(best, cabs(m(i, j)));
    return best;
}

std::vector<Rat> linear_solve(const Matrix<Rat>& m, const std::vector<Rat>& b) {
    const int n = m.rows();
    assert(m.cols() == n && static_cast<int>(b.size()) == n);
    Matrix<Rat> a(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n) = b[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularMatrix(col, "no pivot in column " + std::to_string(col));
        if (piv != col)
            for (int j = col; j <= n; ++j) std::swap(a(piv, j), a(col, j));
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rat f = a(r, col) / a(col, col);
            for (int j = col; j <= n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    std::vector<Rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat s = a(i, n);
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

std::vector<Complex> linear_solve(const Matrix<Complex>& m,
                                  const std::vector<Complex>& b,
                                  mpfr_prec_t prec) {
    const int n = m.rows();
    assert(m.cols() == n && static_cast<int>(b.size()) == n);
    Matrix<Complex> a(n, n + 1);
    Real scale(prec);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = m(i, j);
            scale = rmax(scale, cabs(m(i, j)));
        }
        a(i, n) = b[i];
    }
    Real tol = Real::pow10(-static_cast<long>(prec / 8), prec) * scale;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        Real best = abs2(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            Real v = abs2(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(rsqrt(best) > tol))
            throw SingularMatrix(col, "pivot below tolerance in column " + std::to_string(col));
        if (piv != col)
            for (int j = col; j <= n; ++j) std::swap(a(piv, j), a(col, j));
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Complex f = a(r, col) / a(col, col);
            for (int j = col; j <= n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    std::vector<Complex> x(n, Complex(prec));
    for (int i = n - 1; i >= 0; --i) {
        Complex s = a(i, n);
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

std::optional<std::vector<Rat>> solve_overdetermined(const Matrix<Rat>& m,
                                                     const std::vector<Rat>& b,
                                                     bool* underdetermined) {
    const int rows = m.rows(), cols = m.cols();
    assert(static_cast<int>(b.size()) == rows);
    Matrix<Rat> a(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a(i, j) = m(i, j);
        a(i, cols) = b[i];
    }
    if (underdetermined) *underdetermined = false;
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j <= cols; ++j) std::swap(a(piv, j), a(row, j));
        for (int r = 0; r < rows; ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rat f = a(r, col) / a(row, col);
            for (int j = col; j <= cols; ++j) a(r, j) -= f * a(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (a(r, cols) != 0) return std::nullopt;  // 0 = nonzero: inconsistent
    if (static_cast<int>(pivot_col_of_row.size()) < cols && underdetermined)
        *underdetermined = true;
    // particular solution with free variables at zero; pivot columns are
    // cleared in all other rows, so each pivot row solves independently
    std::vector<Rat> x(cols);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        int col = pivot_col_of_row[r];
        x[col] = a(r, cols) / a(r, col);
    }
    return x;
}

std::vector<std::vector<Complex>> nullspace(const Matrix<Complex>& m,
                                            mpfr_prec_t prec) {
    const int rows = m.rows(), cols = m.cols();
    // Work on a copy; accumulate the right factor V so that columns of V
    // matching small singular values span the kernel.
    Matrix<Complex> a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            a(i, j) = m(i, j);
            // lift to working precision
            a(i, j).re = a(i, j).re + Real(prec);
            a(i, j).im = a(i, j).im + Real(prec);
        }
    Matrix<Complex> v(cols, cols);
    for (int j = 0; j < cols; ++j) v(j, j) = Complex::of(1, prec);

    const Real one = Real::of(1, prec);
    // Stop rotating once off-diagonal Gram entries are at the round-off floor.
    Real conv(prec);
    mpfr_set_ui_2exp(conv.mp(), 1, -(prec - 16), MPFR_RNDN);

    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < cols - 1; ++p) {
            for (int q = p + 1; q < cols; ++q) {
                Real app(prec), aqq(prec);
                Complex apq(prec);
                for (int i = 0; i < rows; ++i) {
                    app += abs2(a(i, p));
                    aqq += abs2(a(i, q));
                    apq += conj(a(i, p)) * a(i, q);
                }
                Real g = cabs(apq);
                if (!(g * g > conv * conv * app * aqq)) continue;
                rotated = true;
                Complex phase = apq / Complex(g, Real(prec));
                // Real Jacobi angle for the phased 2x2 Gram matrix.
                Real tau = (aqq - app) / (Real::of(2, prec) * g);
                Real t = one / (rabs(tau) + rsqrt(one + tau * tau));
                if (tau.sign() < 0) t = -t;
                Real c = one / rsqrt(one + t * t);
                Real s = t * c;
                Complex sp = Complex(s, Real(prec)) * phase;
                Complex spc = Complex(s, Real(prec)) * conj(phase);
                for (int i = 0; i < rows; ++i) {
                    Complex u = a(i, p), w = a(i, q);
                    a(i, p) = Complex(c, Real(prec)) * u - spc * w;
                    a(i, q) = sp * u + Complex(c, Real(prec)) * w;
                }
                for (int i = 0; i < cols; ++i) {
                    Complex u = v(i, p), w = v(i, q);
                    v(i, p) = Complex(c, Real(prec)) * u - spc * w;
                    v(i, q) = sp * u + Complex(c, Real(prec)) * w;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<Real> sigma;
    Real sigma_max(prec);
    for (int j = 0; j < cols; ++j) {
        Real s2(prec);
        for (int i = 0; i < rows; ++i) s2 += abs2(a(i, j));
        sigma.push_back(rsqrt(s2));
        sigma_max = rmax(sigma_max, sigma.back());
    }
    Real cut = Real::pow10(-static_cast<long>(prec / 8), prec) * sigma_max;
    std::vector<std::vector<Complex>> basis;
    for (int j = 0; j < cols; ++j) {
        if (sigma_max.is_zero() || sigma[j] <= cut) {
            std::vector<Complex> col;
            col.reserve(cols);
            for (int i = 0; i < cols; ++i) col.push_back(v(i, j));
            basis.push_back(std::move(col));
        }
    }
    return basis;
}

Reconstruction rational_reconstruct(const Real& x, const Int& max_den) {
    const mpfr_prec_t prec = x.prec();
    // Noise floor: a fractional part this small is treated as exact.
    Real floor_eps(prec);
    mpfr_set_ui_2exp(floor_eps.mp(), 1, -(prec * 3 / 4), MPFR_RNDN);

    Real cur = x;
    Int p0 = 0, p1 = 1, q0 = 1, q1 = 0;  // convergent recurrences
    std::optional<Rat> best;
    for (int iter = 0; iter < 300; ++iter) {
        Real fl = rfloor(cur);
        Int a;
        mpfr_get_z(a.get_mpz_t(), fl.mp(), MPFR_RNDN);
        Int p = a * p1 + p0, q = a * q1 + q0;
        if (q > max_den) break;
        best = rat(p, q);
        p0 = p1; p1 = p; q0 = q1; q1 = q;
        Real frac = cur - fl;
        if (frac < floor_eps) break;
        cur = Real::of(1, prec) / frac;
    }
    if (!best)
        throw ReconstructionFailed("value " + x.str(6) + " exceeds denominator bound " +
                                   max_den.get_str());
    Real residual = rabs(x - Real::of(*best, prec));
    Real tol = Real::pow10(-15, prec) * rmax(Real::of(1, prec), rabs(x));
    if (residual > tol)
        throw ReconstructionFailed("residual " + residual.str(6) + " for " + x.str(6) +
                                   " with bound " + max_den.get_str());
    return Reconstruction{*best, residual};
}

}  // namespace vvmf
