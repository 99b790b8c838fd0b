#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gtable::verify {

struct CheckResult {
    std::string suite, name;
    std::size_t cases = 0;
    bool passed = true;
    std::string detail;  // first counterexample when failing
};

struct Check {
    std::string suite, name;
    std::function<CheckResult()> run;
};

// exactla, repkit, supercochain, gtable, gallery
const std::vector<std::string>& suite_names();
// Every check of the suite, or of all suites when empty. Throws ParseError for unknown names.
std::vector<Check> checks(std::string_view suite = {});

// GTABLE_THREADS caps the worker count; defaults to the hardware concurrency.
unsigned worker_count();
// Results come back in the order of the input, whatever the number of workers.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned workers);

std::string render_text(const std::vector<CheckResult>& results);
std::string render_json(const std::vector<CheckResult>& results);

}  // namespace gtable::verify
