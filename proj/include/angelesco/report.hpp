#pragma once

#include <string>
#include <utility>
#include <vector>

#include "angelesco/scenario.hpp"
#include "angelesco/verify.hpp"

namespace angelesco {

// A named block of comparison rows held against one rel_err threshold.
// threshold <= 0 marks an informational block that cannot fail on its own.
// notes are scalar facts (ratios, counts, verdicts) surfaced in the summary.
struct CheckReport {
    std::string name;
    real_t threshold{0};
    std::vector<CheckRow> rows;
    std::vector<std::pair<std::string, std::string>> notes;
    bool forced_fail = false;  // a contract violated outside the rows

    real_t max_rel_err() const;
    int flagged_rows() const;
    bool pass() const;
};

// Serialized forms. Pure functions of the inputs: no timestamps, '\n' line
// ends, '.' decimal separator, round-trippable numbers.
std::string to_csv(const CheckReport& r);
std::string to_row_json(const CheckReport& r);
std::string summary_json(const std::vector<CheckReport>& checks,
                         const Scenario& sc, const std::string& format);

// Writes one row file per check (<name>.csv or <name>.json by format) plus
// summary.json under out_dir, creating it if needed. Returns overall pass.
bool write_reports(const std::vector<CheckReport>& checks, const Scenario& sc,
                   const std::string& out_dir, const std::string& format);

}  // namespace angelesco
