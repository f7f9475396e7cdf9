#include "vvmf/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace vvmf {

namespace {

using ojson = nlohmann::ordered_json;

std::string rstr(const Rat& r) { return r.get_str(); }

std::string hstr(const std::vector<Rat>& h) {
    std::string s = "(";
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) s += ",";
        s += h[i].get_str();
    }
    return s + ")";
}

Matrix<Complex> rho_st_inverse(const ModularDatum& d, const Rat& c,
                               const Matrix<Complex>& rho_s,
                               mpfr_prec_t prec) {
    Matrix<Complex> t = rho(d, c, 'T', prec);
    Matrix<Complex> t_inv(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i) t_inv(i, i) = conj(t(i, i));
    return rho_s * t_inv;
}

}  // namespace

std::string ScanConfig::fingerprint() const {
    std::ostringstream os;
    os << "terms=" << terms << ";prec=" << prec_bits
       << ";bound=" << recon_bound.get_str();
    return os.str();
}

bool row_key_less(const ScanRow& a, const ScanRow& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.c != b.c) return a.c < b.c;
    return rat_vec_less(a.h, b.h);
}

ScanRow run_candidate(const ExponentCandidate& cand, const ScanConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const ModularDatum& datum = cand.spec.datum;
    const bool folded = !datum.folded_from.empty();

    ScanRow row;
    row.family = folded ? datum.folded_from : datum.label;
    row.c = cand.spec.c;
    row.h = cand.h;
    if (folded) row.h.push_back(cand.h.back());
    row.ell = cand.ell;
    row.p = cand.p;
    if (const GoldenRow* g = golden_lookup(row.family, row.c, row.h))
        row.realization = g->realization;

    const mpfr_prec_t prec = cfg.prec_bits;
    try {
        const Matrix<Complex> rho_s = rho(datum, cand.spec.c, 'S', prec);
        const Matrix<Complex> rho_sti =
            rho_st_inverse(datum, cand.spec.c, rho_s, prec);

        TraceCheck tc = trace_condition_detail(cand, rho_s, rho_sti, prec);
        if (!tc.ok) {
            row.failure =
                "TraceConditionFailed: |Tr(Lambda) - rhs| = " + tc.diff.str(2);
            row.seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            return row;
        }

        const ConnectionReport rep = solve_connection(cand.lambda);
        std::string branch_failures;
        bool done = false;
        for (size_t si = 0; si < rep.solutions.size() && !done; ++si) {
            const ConnectionSolution& sol = rep.solutions[si];
            try {
                FundamentalExpansion e =
                    recurrence(cand.lambda, sol.chi, cfg.terms + 2);
                GaugeResolution g = resolve_gauge(e, rho_s, Rat(0), Rat(1),
                                                  prec, cfg.recon_bound);
                FundamentalExpansion ehat = apply_gauge(e, g.ratios);
                CharacterCandidate cc = screen_first_column(ehat, cand, folded);

                const std::vector<std::pair<Rat, Rat>> taus = {
                    {Rat(0), Rat(1)}, {Rat(0), Rat(2)}, {rat(1, 2), Rat(1)}};
                const char* names[] = {"covariance(i)", "covariance(2i)",
                                       "covariance(1/2+i)"};
                for (size_t k = 0; k < taus.size(); ++k) {
                    Real r = covariance_residual(ehat, rho_s, {taus[k]}, prec);
                    row.residuals.emplace_back(names[k], r.str(2));
                }
                row.residuals.emplace_back("gauge_verification",
                                           g.verification.str(2));
                row.residuals.emplace_back("gauge_reconstruction",
                                           g.reconstruction.str(2));

                row.status = cc.status;
                row.dim_v1 = cc.dim_v1;
                row.lead_exponents = cc.lead_exponents;
                row.coefficients = cc.coefficients;
                row.chi_hat = cc.chi_hat;
                row.a_matrix = sol.a;
                row.gauge_ratios = g.ratios;
                if (!cc.failure_reason.empty()) row.note = cc.failure_reason;
                if (rep.solutions.size() > 1) {
                    if (!row.note.empty()) row.note += "; ";
                    row.note += "connection branch " + std::to_string(si + 1) +
                                " of " + std::to_string(rep.solutions.size()) +
                                " gauged covariantly";
                    if (!branch_failures.empty())
                        row.note += "; earlier branches: " + branch_failures;
                }
                done = true;
            } catch (const Error& err) {
                if (!branch_failures.empty()) branch_failures += " | ";
                branch_failures += err.what();
            }
        }
        if (!done) {
            row.status = Status::SolverFailure;
            row.failure = rep.solutions.empty()
                              ? "NoSolution: connection problem has no "
                                "admissible residue matrices"
                              : branch_failures;
        }
    } catch (const Error& err) {
        row.status = Status::SolverFailure;
        row.failure = err.what();
    } catch (const std::exception& ex) {
        row.status = Status::SolverFailure;
        row.failure = std::string("InternalError: ") + ex.what();
    }

    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return row;
}

namespace {

std::vector<ExponentCandidate> collect_candidates(const std::string& family,
                                                  const Rat& cmax) {
    const ModularDatum& datum = find_family(family);
    const ModularDatum eff = datum.fold_pair ? fold(datum) : datum;
    std::vector<ExponentCandidate> out;
    for (const Rat& c : admissible_charges(datum, cmax)) {
        try {
            auto cs = enumerate_extremal(GenusSpec{eff, c});
            out.insert(out.end(), cs.begin(), cs.end());
        } catch (const NonIntegralResidue&) {
            // no integral ell in this charge class: nothing to scan
        }
    }
    return out;
}

}  // namespace

std::vector<ScanRow> scan(const std::string& family_or_all, const Rat& cmax,
                          const ScanConfig& cfg) {
    if (cmax <= 0) throw UsageError("cmax must be positive");
    std::vector<ExponentCandidate> cands;
    if (family_or_all == "all") {
        for (const ModularDatum& d : catalog()) {
            auto cs = collect_candidates(d.label, cmax);
            cands.insert(cands.end(), cs.begin(), cs.end());
        }
    } else {
        cands = collect_candidates(family_or_all, cmax);
    }

    std::vector<ScanRow> rows(cands.size());
    const int n = static_cast<int>(cands.size());
    const int nthreads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (int i = 0; i < n; ++i) rows[i] = run_candidate(cands[i], cfg);

    std::sort(rows.begin(), rows.end(), row_key_less);
    return rows;
}

ScanRow compute(const std::string& family, const Rat& c,
                const std::vector<Rat>& h, const ScanConfig& cfg) {
    const ModularDatum& datum = find_family(family);
    const ModularDatum eff = datum.fold_pair ? fold(datum) : datum;
    if (c <= 0 || !is_integer((c - eff.c0) / 8) || c < eff.c0)
        throw InvalidCharge(family + " admits c = " + eff.c0.get_str() +
                            " + 8k; got " + c.get_str());
    if (static_cast<int>(h.size()) != eff.rank - 1)
        throw UsageError("family " + family + " needs " +
                         std::to_string(eff.rank - 1) +
                         " non-vacuum minimal energies, got " +
                         std::to_string(h.size()));
    for (int i = 0; i + 1 < eff.rank; ++i) {
        Rat k = h[i] - eff.twists[i + 1];
        if (!is_integer(k) || k < 0)
            throw UsageError("h_" + std::to_string(i + 1) + " must be " +
                             eff.twists[i + 1].get_str() +
                             " plus a non-negative integer; got " +
                             h[i].get_str());
    }
    ExponentCandidate cand;
    cand.spec = GenusSpec{eff, c};
    cand.h = h;
    cand.lambda = lambda_of(c, h);
    cand.ell = ell_value(c, h, eff.rank);
    cand.p = eff.rank;
    return run_candidate(cand, cfg);
}

std::vector<std::string> scope_families(const std::string& scope) {
    static const std::vector<std::string> rank2 = {"su2_1", "e7_1", "g2_1",
                                                   "f4_1"};
    static const std::vector<std::string> rank3 = {
        "ising",       "su2_2",          "b2_1", "b3_1", "b4_1", "b5_1",
        "b6_1",        "b7_1",           "half_su2_5",   "half_su2_5_bar",
        "su3_1",       "e6_1"};
    if (scope == "rank2") return rank2;
    if (scope == "rank3") return rank3;
    if (scope == "all") {
        std::vector<std::string> all = rank2;
        all.insert(all.end(), rank3.begin(), rank3.end());
        return all;
    }
    throw UsageError("scope must be rank2, rank3, or all");
}

namespace {

Rat family_cmax(const std::string& family) {
    return find_family(family).rank == 2 ? Rat(72) : Rat(48);
}

const ScanRow* find_row(const std::vector<ScanRow>& rows,
                        const std::string& family, const Rat& c,
                        const std::vector<Rat>& h) {
    for (const ScanRow& r : rows)
        if (r.family == family && r.c == c && r.h == h) return &r;
    return nullptr;
}

std::string key_str(const std::string& family, const Rat& c,
                    const std::vector<Rat>& h) {
    return family + " c=" + c.get_str() + " h=" + hstr(h);
}

}  // namespace

VerifyReport verify_rows(const std::string& scope,
                         const std::vector<ScanRow>& rows) {
    const std::vector<std::string> fams = scope_families(scope);
    auto in_scope = [&](const std::string& f) {
        return std::find(fams.begin(), fams.end(), f) != fams.end();
    };

    VerifyReport rep;
    for (const GoldenRow& g : golden_rows()) {
        if (!in_scope(g.family)) continue;
        VerifyEntry e;
        e.golden = &g;
        const ScanRow* r = find_row(rows, g.family, g.c, g.h);
        if (!r) {
            e.outcome = VerifyEntry::Outcome::Missing;
            e.detail = "no scan row at this key";
        } else if (g.kind == GoldenKind::OmittedB) {
            if (r->status == Status::IntegralNonneg) {
                e.outcome = VerifyEntry::Outcome::Ok;
                e.detail = "passes the screen as noted";
            } else {
                e.outcome = VerifyEntry::Outcome::Mismatch;
                e.detail = std::string("expected a screen pass, got ") +
                           status_name(r->status) +
                           (r->failure.empty() ? "" : " (" + r->failure + ")");
            }
        } else {
            std::vector<std::string> probs;
            if (r->status != Status::IntegralNonneg)
                probs.push_back(std::string("status ") +
                                status_name(r->status) +
                                (r->failure.empty() ? ""
                                                    : " (" + r->failure + ")"));
            if (r->ell != g.ell)
                probs.push_back("ell " + r->ell.get_str() + " vs printed " +
                                g.ell.get_str());
            if (probs.empty() && r->dim_v1 != Rat(g.dim_v1))
                probs.push_back("dim V1 " + r->dim_v1.get_str() +
                                " vs printed " + g.dim_v1.get_str());
            bool used_erratum = false;
            for (size_t k = 0;
                 probs.empty() && k < g.coefficients.size(); ++k) {
                if (k >= r->coefficients.size()) {
                    probs.push_back("component " + std::to_string(k) +
                                    " missing from scan row");
                    break;
                }
                const std::vector<Int>& want = g.expected(static_cast<int>(k));
                const std::vector<Rat>& got = r->coefficients[k];
                for (size_t t = 0; t < want.size(); ++t) {
                    if (t >= got.size() || got[t] != Rat(want[t])) {
                        probs.push_back(
                            "component " + std::to_string(k) + ", q^" +
                            std::to_string(t) + ": computed " +
                            (t < got.size() ? got[t].get_str() : "<none>") +
                            " vs expected " + want[t].get_str());
                    }
                }
                if (g.has_erratum(static_cast<int>(k))) {
                    used_erratum = true;
                    bool differs = false;
                    for (size_t t = 0; t < g.coefficients[k].size(); ++t)
                        if (t < got.size() && got[t] != Rat(g.coefficients[k][t]))
                            differs = true;
                    if (!differs)
                        probs.push_back("component " + std::to_string(k) +
                                        " matches the printed values; the "
                                        "recorded erratum is stale");
                }
            }
            if (!probs.empty()) {
                e.outcome = VerifyEntry::Outcome::Mismatch;
                for (size_t i = 0; i < probs.size(); ++i)
                    e.detail += (i ? "; " : "") + probs[i];
            } else if (used_erratum) {
                e.outcome = VerifyEntry::Outcome::OkErratum;
                e.detail = "printed coefficients corrected: " + g.note;
            } else {
                e.outcome = VerifyEntry::Outcome::Ok;
            }
        }
        switch (e.outcome) {
            case VerifyEntry::Outcome::Ok: rep.ok++; break;
            case VerifyEntry::Outcome::OkErratum: rep.ok++, rep.errata++; break;
            case VerifyEntry::Outcome::Mismatch: rep.mismatches++; break;
            case VerifyEntry::Outcome::Missing: rep.missing++; break;
        }
        rep.entries.push_back(std::move(e));
    }

    // absence: a pass anywhere outside the tables is a finding.  Charges whose
    // B-row the source explicitly omitted are reported informationally.
    for (const ScanRow& r : rows) {
        if (!in_scope(r.family) || r.status != Status::IntegralNonneg) continue;
        if (golden_lookup(r.family, r.c, r.h)) continue;
        bool omitted_charge = false;
        for (const GoldenRow& g : golden_rows())
            if (g.kind == GoldenKind::OmittedB && g.family == r.family &&
                g.c == r.c)
                omitted_charge = true;
        if (omitted_charge)
            rep.informational.push_back(
                key_str(r.family, r.c, r.h) +
                " also passes the screen at an omitted charge");
        else
            rep.absence_violations.push_back(
                key_str(r.family, r.c, r.h) +
                " passes the screen but is not a table row");
    }
    return rep;
}

VerifyReport verify(const std::string& scope, const ScanConfig& cfg) {
    std::vector<ScanRow> rows;
    for (const std::string& fam : scope_families(scope)) {
        auto part = scan(fam, family_cmax(fam), cfg);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    std::sort(rows.begin(), rows.end(), row_key_less);
    return verify_rows(scope, rows);
}

std::string to_json(const std::vector<ScanRow>& rows, const ScanConfig& cfg,
                    int per_component) {
    ojson root;
    root["config"] = {{"terms", cfg.terms},
                      {"prec_bits", static_cast<long>(cfg.prec_bits)},
                      {"recon_bound", cfg.recon_bound.get_str()},
                      {"fingerprint", cfg.fingerprint()}};
    root["rows"] = ojson::array();
    for (const ScanRow& r : rows) {
        ojson j;
        j["family"] = r.family;
        j["c"] = rstr(r.c);
        j["h"] = ojson::array();
        for (const Rat& x : r.h) j["h"].push_back(rstr(x));
        j["ell"] = rstr(r.ell);
        j["p"] = r.p;
        j["status"] = status_name(r.status);
        j["failure"] = r.failure;
        j["note"] = r.note;
        if (r.status == Status::SolverFailure)
            j["dim_v1"] = nullptr;
        else
            j["dim_v1"] = rstr(r.dim_v1);
        j["components"] = ojson::array();
        for (size_t i = 0; i < r.coefficients.size(); ++i) {
            ojson comp;
            comp["leading_exponent"] = rstr(r.lead_exponents[i]);
            comp["coefficients"] = ojson::array();
            const auto& cs = r.coefficients[i];
            const size_t n = per_component < 0
                                 ? cs.size()
                                 : std::min(cs.size(),
                                            static_cast<size_t>(per_component));
            for (size_t t = 0; t < n; ++t)
                comp["coefficients"].push_back(rstr(cs[t]));
            j["components"].push_back(std::move(comp));
        }
        if (r.chi_hat.rows() == 0) {
            j["chi_hat"] = nullptr;
            j["a_matrix"] = nullptr;
        } else {
            auto jmat = [](const Matrix<Rat>& m) {
                ojson a = ojson::array();
                for (int i = 0; i < m.rows(); ++i) {
                    ojson rowj = ojson::array();
                    for (int k = 0; k < m.cols(); ++k)
                        rowj.push_back(m(i, k).get_str());
                    a.push_back(std::move(rowj));
                }
                return a;
            };
            j["chi_hat"] = jmat(r.chi_hat);
            j["a_matrix"] = jmat(r.a_matrix);
        }
        j["gauge"] = ojson::array();
        for (const Rat& x : r.gauge_ratios) j["gauge"].push_back(rstr(x));
        j["realization"] = r.realization;
        j["residuals"] = ojson::object();
        for (const auto& kv : r.residuals) j["residuals"][kv.first] = kv.second;
        root["rows"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "family,c,h1,h2,ell,p,status,dim_v1,realization";
    for (int ci = 0; ci < 3; ++ci)
        for (int t = 0; t < 3; ++t) os << ",x" << ci << "_" << t;
    os << "\n";
    for (const ScanRow& r : rows) {
        os << r.family << "," << rstr(r.c) << "," << rstr(r.h[0]) << ","
           << (r.h.size() > 1 ? rstr(r.h[1]) : "") << "," << rstr(r.ell) << ","
           << r.p << "," << status_name(r.status) << ","
           << (r.status == Status::SolverFailure ? "" : rstr(r.dim_v1)) << ","
           << csv_field(r.realization);
        for (int ci = 0; ci < 3; ++ci)
            for (int t = 0; t < 3; ++t) {
                os << ",";
                if (ci < static_cast<int>(r.coefficients.size()) &&
                    t < static_cast<int>(r.coefficients[ci].size()))
                    os << rstr(r.coefficients[ci][t]);
            }
        os << "\n";
    }
    return os.str();
}

std::string to_markdown(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "| family | c | h | ell | dim V1 | status | realization | character "
          "vector |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const ScanRow& r : rows) {
        os << "| " << r.family << " | " << rstr(r.c) << " | " << hstr(r.h)
           << " | " << rstr(r.ell) << " | "
           << (r.status == Status::SolverFailure ? "-" : rstr(r.dim_v1))
           << " | " << status_name(r.status) << " | "
           << (r.realization.empty() ? "-" : r.realization) << " | ";
        if (r.coefficients.empty()) {
            os << "-";
        } else {
            for (size_t i = 0; i < r.coefficients.size(); ++i) {
                if (i) os << " ; ";
                os << "q^{" << rstr(r.lead_exponents[i]) << "}(";
                const auto& cs = r.coefficients[i];
                for (size_t t = 0; t < cs.size() && t < 3; ++t) {
                    if (t) os << " + ";
                    os << rstr(cs[t]);
                    if (t == 1) os << "q";
                    if (t == 2) os << "q^2";
                }
                os << " + ...)";
            }
        }
        os << " |\n";
    }
    return os.str();
}

std::string report_text(const VerifyReport& r) {
    std::ostringstream os;
    for (const VerifyEntry& e : r.entries) {
        const GoldenRow& g = *e.golden;
        os << "[" << g.origin << "] " << key_str(g.family, g.c, g.h) << ": ";
        switch (e.outcome) {
            case VerifyEntry::Outcome::Ok: os << "OK"; break;
            case VerifyEntry::Outcome::OkErratum: os << "OK-ERRATUM"; break;
            case VerifyEntry::Outcome::Mismatch: os << "MISMATCH"; break;
            case VerifyEntry::Outcome::Missing: os << "MISSING"; break;
        }
        if (!e.detail.empty()) os << " — " << e.detail;
        os << "\n";
    }
    for (const std::string& s : r.informational) os << "[info] " << s << "\n";
    for (const std::string& s : r.absence_violations)
        os << "[absence] " << s << "\n";
    os << "summary: " << r.ok << " ok";
    if (r.errata) os << " (" << r.errata << " via recorded errata)";
    os << ", " << r.mismatches << " mismatched, " << r.missing << " missing, "
       << r.absence_violations.size() << " absence violations\n";
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace vvmf
