#pragma once

// End-to-end verification suite.  Each criterion returns pass/fail plus a
// short detail line; the CLI `verify` subcommand and the acceptance test
// binary both run these.

#include <string>
#include <vector>

namespace wfusion::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// quick = true lowers series truncation orders and trims the largest grid
// points; the checked statements are unchanged.
std::vector<CriterionResult> run_all(bool quick = false);

} // namespace wfusion::verify
