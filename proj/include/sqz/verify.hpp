#ifndef SQZ_VERIFY_HPP
#define SQZ_VERIFY_HPP

#include <string>
#include <vector>

#include "sqz/io.hpp"

namespace sqz {

/// One route-vs-oracle comparison over a state/frame box. Mandatory rows
/// (closed forms) must pass; kernel rows may legitimately land on
/// "discrepancy" when the printed formula disagrees with the definition.
struct VerificationRow {
    std::string state;
    std::string route;
    std::string frames;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool mandatory = true;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    int cutoff = 128;
    int n_max = 40;
    std::vector<VerificationRow> rows;

    bool mandatory_pass() const;
    bool any_discrepancy() const;
    OrderedJson to_json() const;
    std::string to_markdown() const;
};

/// Full oracle-vs-formula cross-validation matrix (states x frames x routes).
VerificationReport run_verification(int cutoff = 128, int n_max = 40, bool quick = false);

}  // namespace sqz

#endif
