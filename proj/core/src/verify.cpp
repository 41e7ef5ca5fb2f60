#include "casimir/verify.hpp"

#include <algorithm>

#include "casimir/error.hpp"

namespace casimir {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "fail";
}

bool VerificationReport::pass() const {
    return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == Status::Fail; });
}

namespace {

void run_all(const GeometryRecord& record, const std::vector<Assertion>& assertions, const std::string& prefix,
             double tol, std::vector<AssertionResult>& out) {
    std::optional<SpinRepresentation> rep;
    try {
        rep.emplace(record.n);
    } catch (const std::exception& e) {
        for (const auto& a : assertions)
            out.push_back({prefix + a.name, a.anchor, Status::Fail, json(std::string("error: ") + e.what()), nullptr, 0});
        return;
    }
    const AssertionContext ctx{record, *rep, tol};
    for (const auto& a : assertions) {
        AssertionResult r{prefix + a.name, a.anchor, Status::Fail, nullptr, nullptr, a.floating ? tol : 0.0};
        try {
            AssertionOutcome o = a.run(ctx);
            r.status = o.pass ? Status::Pass : Status::Fail;
            r.computed = std::move(o.computed);
            r.expected = std::move(o.expected);
        } catch (const std::exception& e) {
            r.computed = std::string("error: ") + e.what();
        }
        out.push_back(std::move(r));
    }
}

void sort_results(std::vector<AssertionResult>& v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
}

}  // namespace

VerificationReport verify(const CatalogEntry& entry, const VerifyOptions& opts) {
    VerificationReport report{entry.name, {}};
    std::vector<Scalar> params = entry.samples;
    if (entry.parameter.empty()) params = {Scalar{}};
    else if (opts.parameter) params = {*opts.parameter};

    for (const auto& p : params) {
        const std::string prefix = entry.parameter.empty() ? "" : entry.parameter + "=" + p.str() + "/";
        std::vector<Assertion> assertions;
        GeometryRecord record;
        try {
            record = entry.record(p);
            record.validate();
            assertions = entry.assertions(p);
        } catch (const std::exception& e) {
            report.results.push_back({prefix + "load", "catalog data", Status::Fail,
                                      json(std::string("error: ") + e.what()), nullptr, 0});
            continue;
        }
        run_all(record, assertions, prefix, opts.tol, report.results);
    }
    sort_results(report.results);
    return report;
}

VerificationReport verify(const GeometryRecord& record, const std::vector<Assertion>& assertions,
                          const VerifyOptions& opts) {
    VerificationReport report{record.name, {}};
    run_all(record, assertions, "", opts.tol, report.results);
    sort_results(report.results);
    return report;
}

json to_json(const AssertionResult& r) {
    return {{"name", r.name},         {"anchor", r.anchor},     {"status", to_string(r.status)},
            {"computed", r.computed}, {"expected", r.expected}, {"tolerance", r.tolerance}};
}

json to_json(const VerificationReport& r) {
    json results = json::array();
    for (const auto& a : r.results) results.push_back(to_json(a));
    return {{"name", r.entry}, {"verdict", r.pass() ? "pass" : "fail"}, {"assertions", results}};
}

json to_json(std::vector<VerificationReport> reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) { return a.entry < b.entry; });
    json entries = json::array();
    bool pass = true;
    for (const auto& r : reports) {
        entries.push_back(to_json(r));
        pass = pass && r.pass();
    }
    return {{"entries", entries}, {"verdict", pass ? "pass" : "fail"}};
}

}  // namespace casimir
