#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "casimir/catalog.hpp"

namespace casimir {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct AssertionResult {
    std::string name;
    std::string anchor;
    Status status = Status::Skipped;
    nlohmann::json computed;
    nlohmann::json expected;
    double tolerance = 0;
};

struct VerificationReport {
    std::string entry;
    std::vector<AssertionResult> results;  // sorted by name
    bool pass() const;
};

struct VerifyOptions {
    double tol = 1e-9;
    std::optional<Scalar> parameter;  // overrides the entry's sample set
};

VerificationReport verify(const CatalogEntry& entry, const VerifyOptions& opts = {});
VerificationReport verify(const GeometryRecord& record, const std::vector<Assertion>& assertions,
                          const VerifyOptions& opts = {});

nlohmann::json to_json(const AssertionResult& r);
nlohmann::json to_json(const VerificationReport& r);
/// {entries: [...], verdict}, entries sorted by name.
nlohmann::json to_json(std::vector<VerificationReport> reports);

}  // namespace casimir
