#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "casimir/casimir.hpp"

namespace casimir {

struct AssertionOutcome {
    bool pass = false;
    nlohmann::json computed;
    nlohmann::json expected;
};

struct AssertionContext {
    const GeometryRecord& record;
    const SpinRepresentation& rep;
    double tol;
};

/// One named check. `floating` assertions extract eigenvalues numerically before snapping.
struct Assertion {
    std::string name;
    std::string anchor;
    bool floating = false;
    std::function<AssertionOutcome(const AssertionContext&)> run;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string parameter;          // "" when the entry has no parameter
    std::vector<Scalar> samples;    // default parameter values
    bool reconstructed = false;     // data rebuilt from structure equations rather than transcribed
    std::function<GeometryRecord(const Scalar&)> record;
    std::function<std::vector<Assertion>(const Scalar&)> assertions;
};

const std::vector<CatalogEntry>& load_catalog();
const CatalogEntry* find_entry(const std::string& name);

/// Assertions driven by an "expected" JSON block of a user geometry; unknown keys throw Parse.
std::vector<Assertion> assertions_from_expected(const nlohmann::json& expected, int dim);

/// Endomorphism named on the command line: torsion, dT, sigma or casimir-zero.
SpinEndomorphism named_operator(const GeometryRecord& g, const SpinRepresentation& rep, const std::string& op);

AssertionOutcome same(const Scalar& computed, const Scalar& expected);
AssertionOutcome same(const Form& computed, const Form& expected);
AssertionOutcome same_multiset(std::vector<Scalar> computed, std::vector<Scalar> expected);
AssertionOutcome truth(bool computed, bool expected = true);

/// Eigenvalue multiset of an endomorphism, ascending.
std::vector<Scalar> multiset(const SpinEndomorphism& m, double tol);
std::vector<Scalar> repeat(const Scalar& v, int count);
std::vector<Scalar> concat(std::vector<std::vector<Scalar>> parts);

/// Aloff-Wallach closed forms at y.
struct AloffWallachValues {
    Scalar a, b, c, a_star, b_star, c_star;
};
AloffWallachValues aloff_wallach_values(const Scalar& y);
Form aloff_wallach_t5(const Scalar& y);
/// dT5 with the X3456 coefficient either as printed or as re-derived from the parallel spinor.
Form aloff_wallach_dt5(const Scalar& y, bool printed);

MetricReductiveAlgebra heisenberg5_algebra();
MetricReductiveAlgebra heisenberg5_group();
MetricReductiveAlgebra heisenberg_times_r_algebra();

}  // namespace casimir
