// Hypergeometric connection data attached to a bijective exponent Lambda:
// A and B with spec(A) in {0,1}, spec(B) in {0,1,2}, B = 3(I - Lambda) - (3/2)A,
// and the characteristic matrix chi recovered entrywise from A.  Everything
// here is exact rational arithmetic; every candidate is re-verified against
// the cubic identity for A before being returned.
#pragma once

#include <array>

#include "vvmf/linalg.hpp"

namespace vvmf {

struct ConnectionSolution {
    Matrix<Rat> a, b, chi;
    int rank_a = 0;                     // Tr A = rank of the idempotent
    std::array<int, 3> mult_b{};        // eigenvalue multiplicities of B at 0,1,2
    std::string gauge;                  // zero | identity | rank-one | corank-one
    bool degenerate_gauge = false;      // some gauge weight x_i = 0
};

struct ConnectionReport {
    std::vector<ConnectionSolution> solutions;
    std::vector<std::string> rejected;  // multiplicity data that failed, with reasons
};

// All solutions up to diagonal conjugation; NoSolution if no multiplicity
// datum is consistent.
ConnectionReport solve_connection(const std::vector<Rat>& lambda);

// chi_{ij} = (864 (31/36 (I-Lambda) - A))_{ij} / (1 + Lambda_ii - Lambda_jj);
// ResonantExponents when a divisor vanishes.
Matrix<Rat> chi_from_A(const std::vector<Rat>& lambda, const Matrix<Rat>& a);

// Exact residual (LHS - RHS) of the cubic identity
// A Lambda A = -17/18 A - 2(A L^2 + L A L + L^2 A) + 3(A L + L A) - 4L^3 + 8L^2 - 44/9 L + 8/9.
Matrix<Rat> verify_cubic(const std::vector<Rat>& lambda, const Matrix<Rat>& a);

}  // namespace vvmf
