// Compares the OpenMP kernels against their serial references: the Cauchy
// product at a few truncation orders, and a family scan fanned out over
// worker threads.  Results are checked for exact agreement; timings are
// informational (speedups depend on the host's core count).
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "vvmf/qseries.hpp"
#include "vvmf/scan.hpp"

namespace {

using namespace vvmf;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_product() {
    std::printf("Cauchy product, Delta * E10^-1 (exact rationals)\n");
    std::printf("%8s %12s %12s %8s\n", "terms", "serial[s]", "omp[s]", "equal");
    for (int n : {128, 256, 512}) {
        QSeriesR d = delta(n);
        QSeriesR e10inv = invert(eisenstein(10, n));

        auto t0 = std::chrono::steady_clock::now();
        QSeriesR a = mul_serial(d, e10inv);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        QSeriesR b = mul(d, e10inv);
        double tp = seconds_since(t0);

        bool equal = a.lead == b.lead && a.a == b.a;
        std::printf("%8d %12.4f %12.4f %8s\n", n, ts, tp,
                    equal ? "yes" : "NO");
    }
}

void bench_scan() {
    ScanConfig cfg;
    cfg.terms = 30;  // enough to exercise the full pipeline per candidate
    std::printf("\nfamily scan fan-out, g2_1 up to c = 94/5 (terms = %d)\n",
                cfg.terms);
    std::printf("%8s %12s\n", "jobs", "wall[s]");

    std::string baseline;
    for (int jobs : {1, omp_get_max_threads()}) {
        cfg.jobs = jobs;
        auto t0 = std::chrono::steady_clock::now();
        auto rows = scan("g2_1", rat(94, 5), cfg);
        double t = seconds_since(t0);
        std::printf("%8d %12.4f\n", jobs, t);

        std::string payload = to_json(rows, cfg, 5);
        if (baseline.empty()) baseline = payload;
        else if (payload != baseline)
            std::printf("  WARNING: output differs from jobs=1 baseline\n");
    }
}

}  // namespace

int main() {
    std::printf("hardware threads: %d\n\n", omp_get_max_threads());
    bench_product();
    bench_scan();
    return 0;
}
