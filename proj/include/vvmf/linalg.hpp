// Small dense matrices over exact rationals and arbitrary-precision complex
// numbers.  Everything here is sized for the pipeline: d <= 3 representation
// matrices, stacked gauge systems up to 9 x 9.  Exact solves use fraction
// Gaussian elimination; the numeric kernel uses one-sided Jacobi to get an
// orthonormal nullspace basis with a relative singular-value cutoff.
#pragma once

#include <optional>
#include <vector>

#include "vvmf/real.hpp"

namespace vvmf {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    return r;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

inline Matrix<Rat> operator*(const Rat& s, const Matrix<Rat>& a) {
    Matrix<Rat> r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

inline Matrix<Rat> identity_rat(int n) {
    Matrix<Rat> r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = 1;
    return r;
}

inline bool operator==(const Matrix<Rat>& a, const Matrix<Rat>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

inline bool is_zero(const Matrix<Rat>& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) return false;
    return true;
}

// Entrywise max-abs norm.
Real norm_max(const Matrix<Complex>& m);

// Exact solve of a square system M x = b.  Throws SingularMatrix carrying the
// column index where no pivot could be found.
std::vector<Rat> linear_solve(const Matrix<Rat>& m, const std::vector<Rat>& b);

// Numeric solve with partial pivoting.  A pivot below 10^-(prec/8) times the
// largest initial entry is treated as singular.
std::vector<Complex> linear_solve(const Matrix<Complex>& m,
                                  const std::vector<Complex>& b,
                                  mpfr_prec_t prec);

// Exact solve of an overdetermined system (rows >= cols).  Returns nullopt if
// inconsistent; sets *underdetermined when fewer than cols pivots exist.
std::optional<std::vector<Rat>> solve_overdetermined(const Matrix<Rat>& m,
                                                     const std::vector<Rat>& b,
                                                     bool* underdetermined);

// Orthonormal basis of the numerical kernel of m, via one-sided Jacobi.
// Columns with singular value <= 10^-(prec/8) * sigma_max are kernel vectors;
// the zero matrix yields the full standard basis.
std::vector<std::vector<Complex>> nullspace(const Matrix<Complex>& m,
                                            mpfr_prec_t prec);

struct Reconstruction {
    Rat value;
    Real residual;
};

// Best continued-fraction convergent p/q with q <= max_den.  Throws
// ReconstructionFailed when the residual exceeds 10^-15 * max(1, |x|).
Reconstruction rational_reconstruct(const Real& x, const Int& max_den);

}  // namespace vvmf
