#include "eqsched/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "eqsched/commands.hpp"

namespace eqsched {

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string CorpusReport::summary() const {
    std::string out;
    for (const auto& c : checked) {
        out += "ok   " + c + "\n";
    }
    for (const auto& f : failures) {
        out += "FAIL " + f + "\n";
    }
    out += std::to_string(checked.size()) + " matched, " + std::to_string(failures.size()) + " failed\n";
    return out;
}

CorpusReport verify_corpus(const std::filesystem::path& root) {
    CorpusReport report;
    std::vector<std::filesystem::path> cases;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(root, ec)) {
        if (entry.is_directory()) {
            cases.push_back(entry.path());
        }
    }
    if (ec) {
        report.failures.push_back(root.string() + ": " + ec.message());
        return report;
    }
    std::sort(cases.begin(), cases.end());

    for (const auto& dir : cases) {
        const std::string name = dir.filename().string();
        const auto instance = read_file(dir / "instance.txt");
        if (!instance) {
            report.failures.push_back(name + "/instance.txt: missing");
            continue;
        }
        auto check = [&](const char* file, const CommandOutput& actual) {
            const auto expected = read_file(dir / file);
            if (!expected) {
                return;
            }
            const std::string label = name + "/" + file;
            if (actual.exit_code != kExitOk) {
                report.failures.push_back(label + ": command failed: " + actual.err);
            } else if (actual.out != *expected) {
                report.failures.push_back(label + ": output differs");
            } else {
                report.checked.push_back(label);
            }
        };
        check("expected_schedule.txt", cmd_solve(*instance));
        check("expected_trace.txt", cmd_legacy(*instance, true));
    }
    return report;
}

}  // namespace eqsched
