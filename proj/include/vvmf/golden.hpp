// Embedded transcription of the published classification tables: the listed
// extremal rows (rank 2 to c <= 72, rank 3 to c <= 48), the "omitted B_{n,1}"
// presence notes, and the unrealized-sample rows.  Read-only; every entry
// carries its table of origin so verification reports can cite source rows.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

enum class GoldenKind {
    Listed,    // full table row with printed leading coefficients
    OmittedB,  // B_{n,1} noted as omitted: presence of the pass is asserted,
               // coefficients are not printed
    Sample,    // duplicate of a listed row appearing in the unrealized sample
};

struct GoldenRow {
    std::string family;  // catalog label
    Rat c;
    std::vector<Rat> h;  // as printed; folded genera carry the duplicated pair
    Rat ell;
    Int dim_v1;          // -1 when the source prints no dimension (OmittedB)
    std::string realization;  // "Realization?" column, informational
    std::vector<std::vector<Int>> coefficients;  // printed leading terms
    GoldenKind kind = GoldenKind::Listed;
    std::string origin;  // e.g. "rank3/su2_2"
    std::string note;    // source-display quirks worth recording
    // Components whose printed coefficients are demonstrably garbled, with the
    // values used for verification instead (justification in `note`).
    std::vector<std::pair<int, std::vector<Int>>> erratum;

    bool has_erratum(int comp) const;
    const std::vector<Int>& expected(int comp) const;
};

const std::vector<GoldenRow>& golden_rows();

// Key lookup; nullptr when absent.  Sample duplicates are skipped so a key
// resolves to its primary (Listed / OmittedB) entry.
const GoldenRow* golden_lookup(const std::string& family, const Rat& c,
                               const std::vector<Rat>& h);

bool rat_vec_less(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace vvmf
