#pragma once

#include <set>

#include "exalg/json_io.hpp"

namespace exalg {
namespace rep {

enum class Status { pass, fail, flagged, skipped };
const char* status_name(Status s);

struct ReportEntry {
    std::string claim_id;        // "AC1".."AC10"
    std::string section;         // entanglement | gates | groups | lie | appendix
    std::string paper_location;
    std::string expected;
    std::string computed;
    Status status = Status::fail;
    long long runtime_ms = 0;
    long long budget_ms = 0;     // stated runtime budget
    std::string note;            // analysis for flagged entries
};

enum class Tier { fast, full };

struct Options {
    std::set<std::string> sections;  // empty = all
    Tier tier = Tier::fast;
    unsigned long long seed = 1;
    std::set<std::string> only;      // restrict to specific claim ids (tests)
};

/// All known sections, in report order.
const std::vector<std::string>& all_sections();

/// Runs the selected claims and returns order-stable entries (by claim id).
/// Claims outside the selected sections are omitted; the W'(E8) certification
/// is marked skipped on the fast tier.
std::vector<ReportEntry> run(const Options& opts);

/// include_runtimes=false keeps --json output byte-identical across runs
/// with the same inputs and seed (runtimes are inherently volatile).
io::json report_to_json(const std::vector<ReportEntry>& entries, bool include_runtimes = false);
std::string report_to_text(const std::vector<ReportEntry>& entries);

/// 0 when nothing failed (flagged and skipped entries do not fail).
int report_exit_code(const std::vector<ReportEntry>& entries);

}  // namespace rep
}  // namespace exalg
