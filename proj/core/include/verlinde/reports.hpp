#ifndef VERLINDE_REPORTS_HPP
#define VERLINDE_REPORTS_HPP

// Verification suites: each one recomputes a family of facts about Ver_p(G)
// from scratch and compares against frozen expected values, producing a
// deterministic report that can be rendered as text or JSON.

#include "verlinde/labels.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

inline constexpr const char* toolkit_version = "0.1.0";

struct CheckRecord {
    std::string id;      // stable slug, e.g. "strings/A3/w1"
    std::string anchor;  // what fact is being checked, in words
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness; // the computed data
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckRecord> checks;
    long long elapsed_ms = 0;

    int pass_count() const;
    int fail_count() const;
    int skipped_count() const;
    bool ok() const { return fail_count() == 0; }
};

struct SuiteOptions {
    int threads = 0; // 0 = use available parallelism
    LabelConvention labels = LabelConvention::bourbaki;
    long long p_max = 0; // 0 = suite default; honoured by suites with a p sweep
};

// Suite names: tables, typeD, invertibles, minuscule, thm-main, equivalences,
// dims, all.  Unknown name throws std::invalid_argument.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);
const std::vector<std::string>& suite_names();

std::string report_to_json(const VerificationReport& report); // one line per check, stable order
std::string report_to_text(const VerificationReport& report);

// Run fn(0..count-1) across a small thread pool; order of execution is
// unspecified, so fn must write only to its own slot.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

} // namespace verlinde

#endif
