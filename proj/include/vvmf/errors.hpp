// Typed failure conditions for the pipeline.  Per-candidate failures are
// caught at the scan layer and turned into SolverFailure rows; they never
// abort a scan.
#pragma once

#include <stdexcept>
#include <string>

namespace vvmf {

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

#define VVMF_DEFINE_ERROR(Name)                                              \
    struct Name : Error {                                                    \
        explicit Name(const std::string& m) : Error(#Name, m) {}             \
    }

// numeric kernel
struct SingularMatrix : Error {
    int pivot_index;
    explicit SingularMatrix(int idx, const std::string& m)
        : Error("SingularMatrix", m), pivot_index(idx) {}
};
VVMF_DEFINE_ERROR(ReconstructionFailed);

// q-series
VVMF_DEFINE_ERROR(UnsupportedWeight);
VVMF_DEFINE_ERROR(NonUnitSeries);
VVMF_DEFINE_ERROR(PrecisionLoss);

// catalog
VVMF_DEFINE_ERROR(UnknownFamily);
VVMF_DEFINE_ERROR(InvalidCharge);
VVMF_DEFINE_ERROR(NotFoldable);

// enumeration
VVMF_DEFINE_ERROR(NonIntegralResidue);

// connection
VVMF_DEFINE_ERROR(ResonantExponents);
VVMF_DEFINE_ERROR(NoSolution);

// character engine
VVMF_DEFINE_ERROR(ResonantStep);
VVMF_DEFINE_ERROR(ConsistencyFailure);
VVMF_DEFINE_ERROR(AmbiguityUnresolved);
VVMF_DEFINE_ERROR(ReconstructionUncertain);
VVMF_DEFINE_ERROR(TraceConditionFailed);

// CLI
VVMF_DEFINE_ERROR(UsageError);

#undef VVMF_DEFINE_ERROR

}  // namespace vvmf
