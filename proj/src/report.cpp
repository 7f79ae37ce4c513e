#include "svw/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace svw {

const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::ExpectedFail: return "expected-fail";
    }
    return "?";
}

void SuiteReport::add(std::string id, bool ok, std::string witness) {
    checks.push_back({std::move(id), ok ? Status::Pass : Status::Fail, std::move(witness)});
}

void SuiteReport::add_expected_fail(std::string id, bool ok_negative, std::string witness) {
    checks.push_back({std::move(id), ok_negative ? Status::ExpectedFail : Status::Fail, std::move(witness)});
}

void SuiteReport::append(const SuiteReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.id, c.status, c.witness});
}

std::size_t SuiteReport::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

static std::vector<Check> sorted(std::vector<Check> v) {
    std::stable_sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return v;
}

std::string SuiteReport::json(bool with_time) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : sorted(checks)) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["status"] = status_str(c.status);
        if (!c.witness.empty()) e["witness"] = c.witness;
        j["checks"].push_back(e);
    }
    j["summary"] = {{"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"expected-fail", count(Status::ExpectedFail)}};
    if (with_time) j["seconds"] = seconds;
    return j.dump(2) + "\n";
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite " << suite;
    for (const auto& [k, v] : config) os << "  " << k << "=" << v;
    os << "\n";
    for (const auto& c : sorted(checks)) {
        os << "  [" << status_str(c.status) << "] " << c.id;
        if (!c.witness.empty()) os << "  " << c.witness;
        os << "\n";
    }
    os << "pass " << count(Status::Pass) << ", fail " << count(Status::Fail) << ", expected-fail "
       << count(Status::ExpectedFail) << "\n";
    return os.str();
}

}  // namespace svw
