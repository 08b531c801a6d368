#pragma once

// Golden corpus: one directory per case holding instance.txt plus any of
//   expected_schedule.txt   output of `solve`
//   expected_trace.txt      output of `legacy --trace`
// verify_corpus() reruns each case and byte-compares.

#include <filesystem>
#include <string>
#include <vector>

namespace eqsched {

struct CorpusReport {
    std::vector<std::string> checked;   // "<case>/<file>" that matched
    std::vector<std::string> failures;  // "<case>/<file>: reason"

    bool ok() const { return failures.empty() && !checked.empty(); }
    std::string summary() const;
};

CorpusReport verify_corpus(const std::filesystem::path& root);

}  // namespace eqsched
