#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "eqsched/corpus.hpp"

using namespace eqsched;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(EQSCHED_SOURCE_DIR) / "corpus";

}  // namespace

TEST_CASE("pristine corpus passes") {
    const CorpusReport r = verify_corpus(kCorpus);
    CHECK(r.ok());
    CHECK(r.failures.empty());
    CHECK(r.checked.size() >= 16);
}

TEST_CASE("corrupted goldens are named") {
    const fs::path tmp = fs::temp_directory_path() / "eqsched_corpus_test";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    fs::copy(kCorpus / "fig1", tmp / "fig1");
    fs::copy(kCorpus / "jx_1", tmp / "jx_1");
    {
        std::ofstream(tmp / "fig1" / "expected_trace.txt", std::ios::app) << "junk\n";
    }
    const CorpusReport r = verify_corpus(tmp);
    CHECK_FALSE(r.ok());
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].rfind("fig1/expected_trace.txt", 0) == 0);
    CHECK(r.summary().find("FAIL fig1/expected_trace.txt") != std::string::npos);
    fs::remove_all(tmp);
}

TEST_CASE("missing corpus root fails") {
    CHECK_FALSE(verify_corpus(fs::path(EQSCHED_SOURCE_DIR) / "no_such_corpus").ok());
}
