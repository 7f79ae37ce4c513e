#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace svw {

// expected-fail: a negative result that was confirmed (the thing is supposed not to hold).
enum class Status { Pass, Fail, ExpectedFail };

// Parallel kernels keep a serial reference path for testing and benchmarks.
enum class Exec { Parallel, Serial };
const char* status_str(Status s);

struct Check {
    std::string id;
    Status status = Status::Pass;
    std::string witness;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Check> checks;
    double seconds = 0;

    void add(std::string id, bool ok, std::string witness = {});
    // A negative claim: ok_negative == true means the failure was observed as expected.
    void add_expected_fail(std::string id, bool ok_negative, std::string witness = {});
    void append(const SuiteReport& other, const std::string& prefix = {});

    std::size_t count(Status s) const;
    bool ok() const { return count(Status::Fail) == 0; }
    // Checks sorted by id; wall time is excluded so output is byte-stable.
    std::string json(bool with_time = false) const;
    std::string text() const;
};

}  // namespace svw
