#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "vvmf/scan.hpp"

using namespace vvmf;

namespace {

ScanConfig quick_cfg() {
    ScanConfig cfg;
    cfg.terms = 40;
    return cfg;
}

void check_prefix(const ScanRow& row, const GoldenRow& g) {
    REQUIRE(row.coefficients.size() >= g.coefficients.size());
    for (size_t k = 0; k < g.coefficients.size(); ++k) {
        const auto& want = g.expected(static_cast<int>(k));
        REQUIRE(row.coefficients[k].size() >= want.size());
        for (size_t t = 0; t < want.size(); ++t)
            CHECK(row.coefficients[k][t] == Rat(want[t]));
    }
}

}  // namespace

TEST_CASE("golden table inventory") {
    const auto& rows = golden_rows();
    int listed = 0, omitted = 0, sample = 0;
    for (const GoldenRow& g : rows) {
        switch (g.kind) {
            case GoldenKind::Listed: listed++; break;
            case GoldenKind::OmittedB: omitted++; break;
            case GoldenKind::Sample: sample++; break;
        }
    }
    CHECK(listed == 65);
    CHECK(omitted == 22);
    CHECK(sample == 4);

    const GoldenRow* g = golden_lookup("su2_1", Rat(1), {rat(1, 4)});
    REQUIRE(g != nullptr);
    CHECK(g->kind == GoldenKind::Listed);
    CHECK(g->dim_v1 == 3);

    // sample duplicates resolve to their primary entry
    const GoldenRow* dup = golden_lookup("su2_1", Rat(33), {rat(9, 4)});
    REQUIRE(dup != nullptr);
    CHECK(dup->kind == GoldenKind::Listed);

    // the two rows with recorded errata
    const GoldenRow* err = golden_lookup("su2_2", rat(51, 2),
                                         {rat(51, 16), rat(1, 2)});
    REQUIRE(err != nullptr);
    CHECK(err->has_erratum(1));
    CHECK(err->has_erratum(2));
    CHECK(!err->has_erratum(0));
    CHECK(err->expected(1)[0] == Int("33554432"));
    CHECK(err->expected(0) == err->coefficients[0]);

    const GoldenRow* err2 = golden_lookup("b6_1", rat(29, 2),
                                          {rat(13, 16), rat(3, 2)});
    REQUIRE(err2 != nullptr);
    CHECK(err2->has_erratum(2));
    CHECK(!err2->has_erratum(0));
    CHECK(!err2->has_erratum(1));
    CHECK(err2->expected(2)[2] == Int(2270671));
    CHECK(err2->coefficients[2][2] == Int(2279671));
}

TEST_CASE("compute: listed rank-2 row") {
    ScanRow row = compute("su2_1", Rat(33), {rat(9, 4)}, quick_cfg());
    CHECK(row.status == Status::IntegralNonneg);
    CHECK(row.ell == 4);
    CHECK(row.p == 2);
    const GoldenRow* g = golden_lookup("su2_1", Rat(33), {rat(9, 4)});
    REQUIRE(g != nullptr);
    CHECK(row.dim_v1 == Rat(g->dim_v1));
    check_prefix(row, *g);
    CHECK(row.realization == g->realization);
}

TEST_CASE("compute: folded genus duplicates the conjugate component") {
    ScanRow row = compute("su3_1", Rat(2), {rat(1, 3)}, quick_cfg());
    CHECK(row.family == "su3_1");
    CHECK(row.p == 2);
    CHECK(row.h == std::vector<Rat>{rat(1, 3), rat(1, 3)});
    CHECK(row.status == Status::IntegralNonneg);
    REQUIRE(row.coefficients.size() == 3);
    CHECK(row.coefficients[1] == row.coefficients[2]);
    CHECK(row.lead_exponents[1] == row.lead_exponents[2]);
    const GoldenRow* g = golden_lookup("su3_1", Rat(2), {rat(1, 3), rat(1, 3)});
    REQUIRE(g != nullptr);
    check_prefix(row, *g);
}

TEST_CASE("compute: omitted B-row against the free-fermion construction") {
    // c = 65/2 is SO(65) level 1: N = 65 free fermions
    ScanRow row = compute("ising", rat(65, 2), {rat(65, 16), rat(1, 2)},
                          quick_cfg());
    CHECK(row.status == Status::IntegralNonneg);

    const Int two32 = Int(1) << 32;  // 2^{(N-1)/2}
    // vacuum: 1, C(65,2), C(65,4) + 65^2
    CHECK(row.coefficients[0][0] == 1);
    CHECK(row.coefficients[0][1] == 2080);
    CHECK(row.coefficients[0][2] == 681265);
    // spinor: 2^32 (1, N, N + C(N,2))
    CHECK(row.coefficients[1][0] == Rat(two32));
    CHECK(row.coefficients[1][1] == Rat(two32 * 65));
    CHECK(row.coefficients[1][2] == Rat(two32 * 2145));
    // vector: N, C(N,3) + N, C(N,5) + N C(N,2) + N
    CHECK(row.coefficients[2][0] == 65);
    CHECK(row.coefficients[2][1] == 43745);
    CHECK(row.coefficients[2][2] == 8395153);

    const GoldenRow* g = golden_lookup("ising", rat(65, 2),
                                       {rat(65, 16), rat(1, 2)});
    REQUIRE(g != nullptr);
    CHECK(g->kind == GoldenKind::OmittedB);
}

TEST_CASE("compute: input validation") {
    ScanConfig cfg = quick_cfg();
    CHECK_THROWS_AS(compute("nope", Rat(1), {rat(1, 4)}, cfg), UnknownFamily);
    CHECK_THROWS_AS(compute("su2_1", Rat(2), {rat(1, 4)}, cfg), InvalidCharge);
    CHECK_THROWS_AS(compute("su2_1", Rat(1), {rat(1, 4), rat(1, 2)}, cfg),
                    UsageError);
    CHECK_THROWS_AS(compute("su2_1", Rat(1), {rat(1, 3)}, cfg), UsageError);
    CHECK_THROWS_AS(compute("su2_1", Rat(1), {rat(-3, 4)}, cfg), UsageError);
}

TEST_CASE("scan: g2_1 window") {
    auto rows = scan("g2_1", rat(94, 5), quick_cfg());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].c == rat(14, 5));
    CHECK(rows[1].c == rat(54, 5));
    CHECK(rows[2].c == rat(94, 5));
    for (const ScanRow& r : rows) {
        CHECK(r.status == Status::IntegralNonneg);
        const GoldenRow* g = golden_lookup(r.family, r.c, r.h);
        REQUIRE(g != nullptr);
        CHECK(r.ell == g->ell);
        CHECK(r.dim_v1 == Rat(g->dim_v1));
        check_prefix(r, *g);
        CHECK(!r.residuals.empty());
    }
}

TEST_CASE("scan: the false vacuum at su2_1 c = 25 fails the screen") {
    auto rows = scan("su2_1", Rat(25), quick_cfg());
    REQUIRE(rows.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(rows[i].status == Status::IntegralNonneg);
    const ScanRow& bad = rows[3];
    CHECK(bad.c == 25);
    CHECK(bad.h == std::vector<Rat>{rat(9, 4)});
    CHECK((bad.status == Status::NonIntegral ||
           bad.status == Status::NegativeCoefficient));
}

TEST_CASE("scan output is a pure function of the fingerprint") {
    ScanConfig one = quick_cfg();
    one.terms = 25;
    one.jobs = 1;
    ScanConfig four = one;
    four.jobs = 4;
    auto r1 = scan("g2_1", rat(94, 5), one);
    auto r4 = scan("g2_1", rat(94, 5), four);
    CHECK(one.fingerprint() == four.fingerprint());
    CHECK(to_json(r1, one, -1) == to_json(r4, four, -1));
    CHECK(to_csv(r1) == to_csv(r4));
}

TEST_CASE("JSON schema carries the stable field set") {
    ScanConfig cfg = quick_cfg();
    cfg.terms = 25;
    auto rows = scan("g2_1", rat(14, 5), cfg);
    auto doc = nlohmann::json::parse(to_json(rows, cfg, 10));

    REQUIRE(doc.contains("config"));
    CHECK(doc["config"]["terms"] == 25);
    CHECK(doc["config"]["prec_bits"] == 256);
    CHECK(doc["config"]["recon_bound"] == "1000000000");
    CHECK(doc["config"]["fingerprint"] == "terms=25;prec=256;bound=1000000000");

    REQUIRE(doc["rows"].size() == 1);
    const auto& r = doc["rows"][0];
    for (const char* key :
         {"family", "c", "h", "ell", "p", "status", "failure", "note",
          "dim_v1", "components", "chi_hat", "a_matrix", "gauge",
          "realization", "residuals"})
        CHECK(r.contains(key));
    CHECK(r["family"] == "g2_1");
    CHECK(r["c"] == "14/5");
    CHECK(r["status"] == "IntegralNonneg");
    CHECK(r["components"].size() == 2);
    CHECK(r["components"][0]["coefficients"].size() == 10);
    CHECK(r["components"][0]["leading_exponent"] == "-7/60");
    CHECK(r["residuals"].contains("covariance(i)"));
    CHECK(r["residuals"].contains("gauge_reconstruction"));
}

TEST_CASE("CSV and markdown renderings") {
    ScanConfig cfg = quick_cfg();
    cfg.terms = 25;
    auto rows = scan("g2_1", rat(54, 5), cfg);
    std::string csv = to_csv(rows);
    CHECK(csv.rfind("family,c,h1,h2,ell,p,status,dim_v1,realization", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    std::string md = to_markdown(rows);
    CHECK(md.find("| g2_1 | 14/5 |") != std::string::npos);
    CHECK(md.find("IntegralNonneg") != std::string::npos);
}

TEST_CASE("scope bookkeeping") {
    CHECK(scope_families("rank2").size() == 4);
    CHECK(scope_families("rank3").size() == 12);
    CHECK(scope_families("all").size() == 16);
    CHECK_THROWS_AS(scope_families("rank4"), UsageError);

    ScanRow a, b;
    a.family = b.family = "ising";
    a.c = rat(33, 2);
    b.c = rat(33, 2);
    a.h = {rat(17, 16), rat(3, 2)};
    b.h = {rat(33, 16), rat(1, 2)};
    CHECK(row_key_less(a, b));
    CHECK(!row_key_less(b, a));
}
