#include "vvmf/connection.hpp"

#include <cassert>
#include <map>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients in mu

Poly poly_one() { return {Rat(1)}; }

// multiply by (beta - mu)
Poly mul_root(const Poly& p, const Rat& beta) {
    Poly r(p.size() + 1, Rat(0));
    for (size_t k = 0; k < p.size(); ++k) {
        r[k] += beta * p[k];
        r[k + 1] -= p[k];
    }
    return r;
}

Poly diff(const Poly& p) {
    Poly r;
    for (size_t k = 1; k < p.size(); ++k) r.push_back(Rat(static_cast<long>(k)) * p[k]);
    if (r.empty()) r.push_back(Rat(0));
    return r;
}

Rat eval(const Poly& p, const Rat& x) {
    Rat s(0);
    for (size_t k = p.size(); k-- > 0;) s = s * x + p[k];
    return s;
}

Matrix<Rat> diag_matrix(const std::vector<Rat>& d) {
    Matrix<Rat> m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix<Rat> b_from_a(const std::vector<Rat>& lambda, const Matrix<Rat>& a) {
    const int d = a.rows();
    Matrix<Rat> b = rat(3, 1) * (identity_rat(d) - diag_matrix(lambda)) - rat(3, 2) * a;
    return b;
}

bool spectra_ok(const std::vector<Rat>& lambda, const Matrix<Rat>& a,
                const std::array<int, 3>& mult, std::string* why) {
    const int d = a.rows();
    Matrix<Rat> b = b_from_a(lambda, a);
    Matrix<Rat> i = identity_rat(d);
    if (!(a * a == a)) {
        *why = "A not idempotent";
        return false;
    }
    Matrix<Rat> two_i = rat(2, 1) * i;
    if (!is_zero(b * (b - i) * (b - two_i))) {
        *why = "B spectrum outside {0,1,2}";
        return false;
    }
    // independent guard: A/2 + B/3 = I - Lambda
    if (!(rat(1, 2) * a + rat(1, 3) * b == i - diag_matrix(lambda))) {
        *why = "A/2 + B/3 != I - Lambda";
        return false;
    }
    if (!is_zero(verify_cubic(lambda, a))) {
        *why = "cubic residual nonzero";
        return false;
    }
    // multiplicities: Tr B = b1 + 2 b2, Tr of projections fix the rest for d<=3
    Rat trb(0);
    for (int k = 0; k < d; ++k) trb += b(k, k);
    if (trb != Rat(mult[1] + 2 * mult[2])) {
        *why = "Tr B mismatch";
        return false;
    }
    return true;
}

}  // namespace

Matrix<Rat> chi_from_A(const std::vector<Rat>& lambda, const Matrix<Rat>& a) {
    const int d = a.rows();
    Matrix<Rat> m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rat im_lambda = (i == j) ? Rat(1) - lambda[i] : Rat(0);
            Rat numer = 864 * (rat(31, 36) * im_lambda - a(i, j));
            Rat div = 1 + lambda[i] - lambda[j];
            if (div == 0)
                throw ResonantExponents("1 + L_ii - L_jj = 0 at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
            m(i, j) = numer / div;
        }
    return m;
}

Matrix<Rat> verify_cubic(const std::vector<Rat>& lambda, const Matrix<Rat>& a) {
    const int d = a.rows();
    Matrix<Rat> l = diag_matrix(lambda);
    Matrix<Rat> l2 = l * l;
    Matrix<Rat> l3 = l2 * l;
    Matrix<Rat> i = identity_rat(d);
    Matrix<Rat> lhs = a * l * a;
    Matrix<Rat> rhs = rat(-17, 18) * a - rat(2, 1) * (a * l2 + l * a * l + l2 * a) +
                      rat(3, 1) * (a * l + l * a) - rat(4, 1) * l3 + rat(8, 1) * l2 -
                      rat(44, 9) * l + rat(8, 9) * i;
    return lhs - rhs;
}

ConnectionReport solve_connection(const std::vector<Rat>& lambda) {
    const int d = static_cast<int>(lambda.size());
    assert(d >= 1 && d <= 3);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) assert(lambda[i] != lambda[j]);

    Rat tr_lambda(0);
    for (const Rat& l : lambda) tr_lambda += l;
    const Rat target = Rat(d) - tr_lambda;  // Tr A/2 + Tr B/3

    std::vector<Rat> beta;  // 3(1 - lambda_i)
    for (const Rat& l : lambda) beta.push_back(3 * (1 - l));

    ConnectionReport report;
    auto reject = [&](int a_rank, const std::array<int, 3>& m, const std::string& why) {
        report.rejected.push_back("a=" + std::to_string(a_rank) + " b=(" +
                                  std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
                                  std::to_string(m[2]) + "): " + why);
    };
    auto accept = [&](Matrix<Rat> a, int a_rank, const std::array<int, 3>& m,
                      std::string gauge, bool degenerate) {
        std::string why;
        if (!spectra_ok(lambda, a, m, &why)) {
            reject(a_rank, m, why);
            return;
        }
        for (const ConnectionSolution& s : report.solutions)
            if (s.a == a) return;  // same A reached via another datum
        ConnectionSolution sol;
        sol.b = b_from_a(lambda, a);
        sol.chi = chi_from_A(lambda, a);
        sol.a = std::move(a);
        sol.rank_a = a_rank;
        sol.mult_b = m;
        sol.gauge = std::move(gauge);
        sol.degenerate_gauge = degenerate;
        report.solutions.push_back(std::move(sol));
    };

    for (int a_rank = 0; a_rank <= d; ++a_rank) {
        Rat trb_rat = 3 * (target - rat(a_rank, 2));
        if (!is_integer(trb_rat) || sgn(trb_rat) < 0) continue;
        long trb = rat_floor(trb_rat).get_si();
        for (int b2 = 0; 2 * b2 <= trb; ++b2) {
            int b1 = static_cast<int>(trb) - 2 * b2;
            int b0 = d - b1 - b2;
            if (b0 < 0 || b1 < 0 || b2 > d) continue;
            std::array<int, 3> m{b0, b1, b2};

            if (a_rank == 0 || a_rank == d) {
                // A = 0 or A = I: B is diagonal; just check the spectrum.
                Matrix<Rat> a(d, d);
                Rat shift = a_rank == 0 ? Rat(0) : rat(3, 2);
                if (a_rank == d)
                    for (int i = 0; i < d; ++i) a(i, i) = 1;
                bool ok = true;
                std::array<int, 3> seen{0, 0, 0};
                for (int i = 0; i < d && ok; ++i) {
                    Rat bi = beta[i] - shift;
                    if (bi == 0) ++seen[0];
                    else if (bi == 1) ++seen[1];
                    else if (bi == 2) ++seen[2];
                    else ok = false;
                }
                if (!ok || seen != m) {
                    reject(a_rank, m, "diagonal B spectrum mismatch");
                    continue;
                }
                accept(std::move(a), a_rank, m, a_rank == 0 ? "zero" : "identity", d > 1);
                continue;
            }

            const bool rank_one = (a_rank == 1);
            if (!rank_one && a_rank != d - 1) continue;  // cannot occur for d <= 3
            // char poly of B as a rank-one update of a diagonal:
            //   rank-one:   det(B - mu) = P(mu) - (3/2) sum_i x_i P_i(mu)
            //   corank-one: det(B - mu) = P'(mu) + (3/2) sum_i x_i P'_i(mu)
            // with P from beta (resp. beta - 3/2); linear in x at every
            // prescribed root, including derivative conditions.
            std::vector<Rat> base = beta;
            if (!rank_one)
                for (Rat& b : base) b -= rat(3, 2);
            Poly p = poly_one();
            for (const Rat& b : base) p = mul_root(p, b);
            std::vector<Poly> pi(d, poly_one());
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (j != i) pi[i] = mul_root(pi[i], base[j]);

            std::vector<std::vector<Rat>> rows;
            std::vector<Rat> rhs;
            for (int root = 0; root <= 2; ++root) {
                Poly pr = p;
                std::vector<Poly> pir = pi;
                for (int r = 0; r < m[root]; ++r) {
                    std::vector<Rat> row(d);
                    for (int i = 0; i < d; ++i) {
                        Rat v = rat(3, 2) * eval(pir[i], Rat(root));
                        row[i] = rank_one ? v : -v;
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(eval(pr, Rat(root)));
                    pr = diff(pr);
                    for (Poly& q : pir) q = diff(q);
                }
            }
            {  // gauge normalization sum x_i = Tr of the rank-one part
                std::vector<Rat> row(d, Rat(1));
                rows.push_back(std::move(row));
                rhs.push_back(Rat(1));
            }
            Matrix<Rat> sys(static_cast<int>(rows.size()), d);
            for (size_t r = 0; r < rows.size(); ++r)
                for (int c = 0; c < d; ++c) sys(static_cast<int>(r), c) = rows[r][c];
            bool under = false;
            auto x = solve_overdetermined(sys, rhs, &under);
            if (!x || under) {
                reject(a_rank, m, x ? "gauge system underdetermined" : "gauge system inconsistent");
                continue;
            }
            bool degenerate = false;
            for (const Rat& xi : *x)
                if (xi == 0) degenerate = true;
            Matrix<Rat> a(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    a(i, j) = rank_one ? (*x)[j] : ((i == j ? Rat(1) : Rat(0)) - (*x)[j]);
            accept(std::move(a), a_rank, m, rank_one ? "rank-one" : "corank-one", degenerate);
        }
    }

    if (report.solutions.empty()) {
        std::string msg = "no multiplicity datum admits a consistent A;";
        for (const std::string& r : report.rejected) msg += " [" + r + "]";
        throw NoSolution(msg);
    }
    return report;
}

}  // namespace vvmf
