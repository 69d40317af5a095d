#pragma once

#include "qe2/verify.hpp"

namespace qe2 {

inline constexpr const char* kToolVersion = "qe2-verify 1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct Report {
    RunConfig cfg;
    std::string version = kToolVersion;
    std::vector<CheckResult> checks;
    std::size_t passed = 0, failed = 0, errored = 0;
    double total_ms = 0.0;

    bool all_pass() const { return failed == 0 && errored == 0; }
    void tally();
};

// JSON serialization; timings are included but carried in separate fields so
// reports can be diffed modulo "wall_ms"/"total_ms".
std::string report_to_json(const Report& r);
std::string report_to_markdown(const Report& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace qe2
