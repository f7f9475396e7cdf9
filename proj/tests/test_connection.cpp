#include <doctest.h>

#include "vvmf/connection.hpp"

using namespace vvmf;

namespace {

Rat offdiag_product(const Matrix<Rat>& m) { return m(0, 1) * m(1, 0); }

}  // namespace

TEST_CASE("scalar connection: integral exponent") {
    // Lambda = (1): the cubic forces a(a + 17/18) = 0, the spectrum a = 0
    ConnectionReport rep = solve_connection({Rat(1)});
    REQUIRE(rep.solutions.size() == 1);
    const ConnectionSolution& s = rep.solutions[0];
    CHECK(s.a(0, 0) == 0);
    CHECK(s.b(0, 0) == 0);
    CHECK(s.chi(0, 0) == 0);
    CHECK(s.rank_a == 0);
    CHECK(is_zero(verify_cubic({Rat(1)}, s.a)));
}

TEST_CASE("scalar connection: the E6/eta^12 point") {
    // Lambda = (1/2): 9a^2 - 10a + 1 = 0 meets spec(A) in {0,1} at a = 1
    ConnectionReport rep = solve_connection({rat(1, 2)});
    REQUIRE(rep.solutions.size() == 1);
    const ConnectionSolution& s = rep.solutions[0];
    CHECK(s.a(0, 0) == 1);
    CHECK(s.b(0, 0) == 0);
    CHECK(s.chi(0, 0) == -492);
    CHECK(is_zero(verify_cubic({rat(1, 2)}, s.a)));
}

TEST_CASE("su2_1 at c = 1") {
    // Lambda = diag(23/24, 5/24)
    std::vector<Rat> lam{rat(23, 24), rat(5, 24)};
    ConnectionReport rep = solve_connection(lam);
    REQUIRE(!rep.solutions.empty());

    bool found = false;
    for (const ConnectionSolution& s : rep.solutions) {
        CHECK(is_zero(verify_cubic(lam, s.a)));
        // trace constraint: Tr A / 2 + Tr B / 3 = d - Tr Lambda
        Rat tra = s.a(0, 0) + s.a(1, 1);
        Rat trb = s.b(0, 0) + s.b(1, 1);
        CHECK(tra / 2 + trb / 3 == Rat(2) - rat(28, 24));
        CHECK(s.mult_b[0] + s.mult_b[1] + s.mult_b[2] == 2);

        // gauge-invariant chi data for the SU(2)_1 character pair
        if (s.chi(0, 0) == 3 && s.chi(1, 1) == -247 &&
            offdiag_product(s.chi) == 53504)
            found = true;
    }
    CHECK(found);
}

TEST_CASE("connection solutions for a failing candidate still exist") {
    // su2_1 at c = 25: Lambda = diag(-1/24, 29/24 - 25/24) = (-1/24, 29/24)?
    // lambda = (1 - 25/24, 9/4 - 25/24) = (-1/24, 29/24)
    std::vector<Rat> lam{rat(-1, 24), rat(29, 24)};
    ConnectionReport rep = solve_connection(lam);
    // the obstruction at c = 25 is integrality of the characters, not the
    // existence of the hypergeometric data
    CHECK(!rep.solutions.empty());
    for (const ConnectionSolution& s : rep.solutions)
        CHECK(is_zero(verify_cubic(lam, s.a)));
}

TEST_CASE("chi recovery rejects resonant exponent differences") {
    // Lambda = diag(1, 0): the (1,0) divisor 1 + 0 - 1 vanishes
    Matrix<Rat> a(2, 2);
    CHECK_THROWS_AS(chi_from_A({Rat(1), Rat(0)}, a), ResonantExponents);
}

TEST_CASE("every reported eigenvalue datum is consistent") {
    // a rank-3 point: ising c = 33/2, h = (17/16, 3/2)
    std::vector<Rat> lam{Rat(1) - rat(33, 48), rat(17, 16) - rat(33, 48),
                         rat(3, 2) - rat(33, 48)};
    ConnectionReport rep = solve_connection(lam);
    REQUIRE(!rep.solutions.empty());
    for (const ConnectionSolution& s : rep.solutions) {
        CHECK(is_zero(verify_cubic(lam, s.a)));
        CHECK(s.rank_a == s.a(0, 0) + s.a(1, 1) + s.a(2, 2));
        Rat tra = s.a(0, 0) + s.a(1, 1) + s.a(2, 2);
        Rat trb = s.b(0, 0) + s.b(1, 1) + s.b(2, 2);
        Rat trlam = lam[0] + lam[1] + lam[2];
        CHECK(tra / 2 + trb / 3 == Rat(3) - trlam);
    }
}
