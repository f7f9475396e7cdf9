// Genus scans: candidate fan-out (OpenMP), the per-candidate pipeline
// trace condition -> connection -> recurrence -> gauge -> screen, golden-table
// verification, and the JSON / CSV / markdown writers.  Output files are a
// pure function of the config fingerprint: worker count and wall times never
// reach the serialized bytes.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vvmf/character.hpp"
#include "vvmf/golden.hpp"

namespace vvmf {

struct ScanConfig {
    int terms = 100;               // screened coefficients per component
    mpfr_prec_t prec_bits = 256;   // working precision for gauge / covariance
    Int recon_bound = Int(1000000000);  // denominator bound for gauge ratios
    int jobs = 0;                  // 0 = runtime default; affects speed only

    std::string fingerprint() const;
};

struct ScanRow {
    std::string family;    // catalog label (parent label for folded genera)
    Rat c;
    std::vector<Rat> h;    // printed style: folded genera carry the pair
    Rat ell;
    int p = 0;             // effective rank of the solved system
    Status status = Status::SolverFailure;
    std::string failure;   // reason, only for SolverFailure
    std::string note;      // informational oddities (e.g. extra gauge branches)
    Rat dim_v1;
    std::vector<Rat> lead_exponents;             // h_i - c/24, vacuum first
    std::vector<std::vector<Rat>> coefficients;  // exact windows, per component
    Matrix<Rat> chi_hat;
    Matrix<Rat> a_matrix;
    std::vector<Rat> gauge_ratios;
    std::string realization;  // informational, joined from the golden table
    // name -> short decimal rendering, e.g. {"covariance(2i)", "3.1e-74"}
    std::vector<std::pair<std::string, std::string>> residuals;
    double seconds = 0;  // wall time; never serialized
};

bool row_key_less(const ScanRow& a, const ScanRow& b);

// One candidate through the full pipeline.  Never throws: any failure becomes
// a SolverFailure row carrying the reason.
ScanRow run_candidate(const ExponentCandidate& cand, const ScanConfig& cfg);

// All extremal candidates of one family (or "all") up to cmax, in parallel,
// merged deterministically by (family, c, h).
std::vector<ScanRow> scan(const std::string& family_or_all, const Rat& cmax,
                          const ScanConfig& cfg);

// Single-candidate drill-down; h has one entry per non-vacuum module of the
// effective (folded) system.  Throws UsageError on malformed input.
ScanRow compute(const std::string& family, const Rat& c,
                const std::vector<Rat>& h, const ScanConfig& cfg);

struct VerifyEntry {
    const GoldenRow* golden = nullptr;
    enum class Outcome { Ok, OkErratum, Mismatch, Missing } outcome =
        Outcome::Missing;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::vector<std::string> absence_violations;  // unexpected screen passes
    std::vector<std::string> informational;  // extra passes at omitted charges
    int ok = 0, errata = 0, mismatches = 0, missing = 0;

    bool pass() const {
        return mismatches == 0 && missing == 0 && absence_violations.empty();
    }
};

// scope: "rank2" (c <= 72), "rank3" (c <= 48), or "all".
VerifyReport verify(const std::string& scope, const ScanConfig& cfg);

// Same comparison against precomputed rows (rows must cover the scope).
VerifyReport verify_rows(const std::string& scope,
                         const std::vector<ScanRow>& rows);

std::vector<std::string> scope_families(const std::string& scope);

// Serializers.  `per_component` bounds how many coefficients are written per
// component (-1 = all retained).
std::string to_json(const std::vector<ScanRow>& rows, const ScanConfig& cfg,
                    int per_component);
std::string to_csv(const std::vector<ScanRow>& rows);
std::string to_markdown(const std::vector<ScanRow>& rows);
std::string report_text(const VerifyReport& r);

}  // namespace vvmf
