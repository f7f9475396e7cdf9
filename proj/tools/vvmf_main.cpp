// Command-line driver: catalog listing, genus scans, single-candidate
// drill-down, and golden-table verification.  Exit codes: 0 success,
// 1 verification failure, 2 solver failure under --strict, 64 usage error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "vvmf/scan.hpp"

namespace {

using namespace vvmf;

int default_prec_bits() {
    if (const char* env = std::getenv("VVMF_PREC_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 64) return static_cast<int>(v);
        std::cerr << "warning: ignoring VVMF_PREC_BITS='" << env
                  << "' (want an integer >= 64)\n";
    }
    return 256;
}

void write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file '" + path + "'");
    os << payload;
}

std::vector<Rat> parse_h_list(const std::string& s) {
    std::vector<Rat> h;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) h.push_back(rat_parse(tok));
    if (h.empty()) throw UsageError("empty --h list");
    return h;
}

int run_catalog() {
    std::ostringstream os;
    os << "label            display                rank  c0     twists"
          "                self-dual  gauss c'\n";
    for (const ModularDatum& d : catalog()) {
        std::string twists = "(";
        for (size_t i = 0; i < d.twists.size(); ++i) {
            if (i) twists += ",";
            twists += d.twists[i].get_str();
        }
        twists += ")";
        os << d.label << std::string(17 - d.label.size(), ' ')
           << d.display << std::string(d.display.size() < 23
                                           ? 23 - d.display.size()
                                           : 1, ' ')
           << d.rank << "     " << d.c0.get_str()
           << std::string(d.c0.get_str().size() < 7
                              ? 7 - d.c0.get_str().size()
                              : 1, ' ')
           << twists << std::string(twists.size() < 22 ? 22 - twists.size() : 1,
                                    ' ')
           << (d.self_dual ? "yes" : "no ") << "        "
           << gauss_sum_charge(d).get_str();
        if (d.fold_pair)
            os << "   [folds " << d.fold_pair->first << "<->"
               << d.fold_pair->second << "]";
        os << "\n";
    }
    std::cout << os.str();
    return 0;
}

nlohmann::ordered_json json_mat(const Matrix<Rat>& m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        a.push_back(std::move(row));
    }
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal character scans for rank-2/3 fusion genera"};
    app.require_subcommand(1);

    ScanConfig cfg;
    cfg.prec_bits = default_prec_bits();

    std::string family = "all", cmax_s, format = "json", out_path;
    bool strict = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--terms", cfg.terms,
                        "coefficients screened per component")
            ->check(CLI::PositiveNumber);
        sub->add_option("--prec-bits", cfg.prec_bits,
                        "working precision in bits (>= 64)")
            ->check(CLI::Range(64, 1 << 20));
        sub->add_option("--jobs", cfg.jobs,
                        "worker threads (0 = runtime default)");
    };

    CLI::App* cat = app.add_subcommand("catalog", "list the fusion families");
    (void)cat;

    CLI::App* sc = app.add_subcommand("scan", "scan a family (or all) up to a "
                                              "charge bound");
    sc->add_option("--family", family, "family label or 'all'");
    sc->add_option("--cmax", cmax_s, "largest central charge, e.g. 48 or 95/2")
        ->required();
    sc->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    sc->add_option("--out", out_path, "output file (default: stdout)");
    sc->add_flag("--strict", strict, "exit 2 if any candidate fails to solve");
    add_common(sc);

    std::string comp_family, comp_c, comp_h;
    bool dump_connection = false;
    CLI::App* co = app.add_subcommand("compute", "solve one candidate "
                                                 "(full coefficient dump)");
    // --h is taken by the energy list below
    co->set_help_flag("--help", "print help and exit");
    co->add_option("--family", comp_family, "family label")->required();
    co->add_option("--c", comp_c, "central charge")->required();
    co->add_option("--h", comp_h,
                   "non-vacuum minimal energies, comma-separated")
        ->required();
    co->add_flag("--dump-connection", dump_connection,
                 "also dump every connection branch");
    co->add_option("--out", out_path, "output file (default: stdout)");
    co->add_flag("--strict", strict, "exit 2 if the candidate fails to solve");
    add_common(co);

    std::string scope = "all";
    CLI::App* ve = app.add_subcommand("verify", "check scans against the "
                                                "published tables");
    ve->add_option("--scope", scope, "rank2, rank3, or all")
        ->check(CLI::IsMember({"rank2", "rank3", "all"}));
    add_common(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(cat)) return run_catalog();

        if (app.got_subcommand(sc)) {
            std::vector<ScanRow> rows = scan(family, rat_parse(cmax_s), cfg);
            std::string payload;
            if (format == "json") payload = to_json(rows, cfg, 10);
            else if (format == "csv") payload = to_csv(rows);
            else payload = to_markdown(rows);
            write_out(out_path, payload);
            if (strict)
                for (const ScanRow& r : rows)
                    if (r.status == Status::SolverFailure) {
                        std::cerr << "solver failure: " << r.family
                                  << " c=" << r.c.get_str() << " ("
                                  << r.failure << ")\n";
                        return 2;
                    }
            return 0;
        }

        if (app.got_subcommand(co)) {
            ScanRow row = compute(comp_family, rat_parse(comp_c),
                                  parse_h_list(comp_h), cfg);
            nlohmann::ordered_json doc =
                nlohmann::ordered_json::parse(to_json({row}, cfg, -1));
            if (dump_connection) {
                const ModularDatum& datum = find_family(comp_family);
                const ModularDatum eff =
                    datum.fold_pair ? fold(datum) : datum;
                ExponentCandidate cand;
                cand.spec = GenusSpec{eff, rat_parse(comp_c)};
                cand.h = parse_h_list(comp_h);
                cand.lambda = lambda_of(cand.spec.c, cand.h);
                ConnectionReport rep = solve_connection(cand.lambda);
                nlohmann::ordered_json j;
                j["solutions"] = nlohmann::ordered_json::array();
                for (const ConnectionSolution& s : rep.solutions) {
                    nlohmann::ordered_json b;
                    b["gauge"] = s.gauge;
                    b["rank_a"] = s.rank_a;
                    b["mult_b"] = s.mult_b;
                    b["degenerate_gauge"] = s.degenerate_gauge;
                    b["a"] = json_mat(s.a);
                    b["b"] = json_mat(s.b);
                    b["chi"] = json_mat(s.chi);
                    j["solutions"].push_back(std::move(b));
                }
                j["rejected"] = rep.rejected;
                doc["connection"] = std::move(j);
            }
            write_out(out_path, doc.dump(2) + "\n");
            if (strict && row.status == Status::SolverFailure) {
                std::cerr << "solver failure: " << row.failure << "\n";
                return 2;
            }
            return 0;
        }

        if (app.got_subcommand(ve)) {
            VerifyReport rep = verify(scope, cfg);
            std::cout << report_text(rep);
            return rep.pass() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const UnknownFamily& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const InvalidCharge& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
