#include <doctest.h>

#include "vvmf/extremal.hpp"

using namespace vvmf;

TEST_CASE("ell and lambda bookkeeping") {
    // p = 2: ell = 1 + c/2 - 6 h1
    CHECK(ell_value(Rat(17), {rat(5, 4)}, 2) == 2);
    CHECK(ell_value(Rat(7), {rat(3, 4)}, 2) == 0);
    // p = 3: ell = 3 + 3c/4 - 6 (h1 + h2) = 3 + 99/8 - 123/8
    CHECK(ell_value(rat(33, 2), {rat(17, 16), rat(3, 2)}, 3) == 0);

    auto lam = lambda_of(Rat(17), {rat(5, 4)});
    CHECK(lam == std::vector<Rat>{rat(7, 24), rat(13, 24)});

    ExponentCandidate cand;
    cand.spec = GenusSpec{find_family("su2_1"), Rat(17)};
    cand.h = {rat(5, 4)};
    cand.lambda = lam;
    cand.ell = Rat(2);
    cand.p = 2;
    CHECK(is_extremal(cand));
    cand.ell = Rat(6);
    CHECK(!is_extremal(cand));
    cand.ell = rat(1, 2);
    CHECK(!is_extremal(cand));
}

TEST_CASE("rank-2 enumeration: one candidate per admissible charge") {
    const ModularDatum& su2 = find_family("su2_1");
    for (const Rat& c : admissible_charges(su2, Rat(72))) {
        auto cands = enumerate_extremal(GenusSpec{su2, c});
        REQUIRE(cands.size() == 1);
        CHECK(is_extremal(cands[0]));
        CHECK(cands[0].p == 2);
    }
    auto c17 = enumerate_extremal(GenusSpec{su2, Rat(17)});
    CHECK(c17[0].h == std::vector<Rat>{rat(5, 4)});
    CHECK(c17[0].ell == 2);

    auto c25 = enumerate_extremal(GenusSpec{su2, Rat(25)});
    CHECK(c25[0].h == std::vector<Rat>{rat(9, 4)});
    CHECK(c25[0].ell == 0);
}

TEST_CASE("rank-3 enumeration fans out with the charge") {
    const ModularDatum& ising = find_family("ising");
    auto cands = enumerate_extremal(GenusSpec{ising, rat(33, 2)});
    REQUIRE(cands.size() == 3);
    // largest h1 first
    CHECK(cands[0].h == std::vector<Rat>{rat(33, 16), rat(1, 2)});
    CHECK(cands[1].h == std::vector<Rat>{rat(17, 16), rat(3, 2)});
    CHECK(cands[2].h == std::vector<Rat>{rat(1, 16), rat(5, 2)});
    for (const auto& cd : cands) {
        CHECK(is_extremal(cd));
        CHECK(cd.ell == 0);
    }

    // total candidate count over the scan window: sum_{k=0}^{5} (k+1)
    int total = 0;
    for (const Rat& c : admissible_charges(ising, Rat(48)))
        total += static_cast<int>(enumerate_extremal(GenusSpec{ising, c}).size());
    CHECK(total == 21);
}

TEST_CASE("degenerate residue classes") {
    // su2_1 at c = 2 (not in the admissible ladder): ell lands in 1/2 + Z
    CHECK_THROWS_AS(enumerate_extremal(GenusSpec{find_family("su2_1"), Rat(2)}),
                    NonIntegralResidue);

    // half_su2_5_bar at its base charge: ell0 = -3, so no extremal window
    const ModularDatum& bar = find_family("half_su2_5_bar");
    CHECK(enumerate_extremal(GenusSpec{bar, rat(8, 7)}).empty());
}

TEST_CASE("folded enumeration uses the effective rank-2 system") {
    ModularDatum f = fold(find_family("su3_1"));
    auto cands = enumerate_extremal(GenusSpec{f, Rat(2)});
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].p == 2);
    CHECK(cands[0].h == std::vector<Rat>{rat(1, 3)});
    // folded ell: 1 + c/2 - 6/3 = 0 at c = 2
    CHECK(cands[0].ell == 0);
}

TEST_CASE("trace condition accepts true exponents and rejects shifts") {
    const mpfr_prec_t prec = 256;
    const ModularDatum& e7 = find_family("e7_1");
    ExponentCandidate cand;
    cand.spec = GenusSpec{e7, Rat(7)};
    cand.h = {rat(3, 4)};
    cand.lambda = lambda_of(Rat(7), cand.h);
    cand.ell = ell_value(Rat(7), cand.h, 2);
    cand.p = 2;

    Matrix<Complex> s = rho(e7, Rat(7), 'S', prec);
    Matrix<Complex> t = rho(e7, Rat(7), 'T', prec);
    Matrix<Complex> t_inv(2, 2);
    for (int i = 0; i < 2; ++i) t_inv(i, i) = conj(t(i, i));
    TraceCheck tc = trace_condition_detail(cand, s, s * t_inv, prec);
    CHECK(tc.ok);
    CHECK(tc.lhs == rat(7, 6));
    CHECK(tc.diff < Real::pow10(-20, prec));

    // shifting a weight by an integer moves Tr Lambda off the target
    ExponentCandidate bad = cand;
    bad.h = {rat(7, 4)};
    bad.lambda = lambda_of(Rat(7), bad.h);
    TraceCheck tb = trace_condition_detail(bad, s, s * t_inv, prec);
    CHECK(!tb.ok);
    CHECK(rabs(tb.diff - Real::of(1, prec)) < Real::of(1e-15, prec));

    CHECK(trace_condition(cand, prec));
    CHECK(!trace_condition(bad, prec));
}
