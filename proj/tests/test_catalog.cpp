#include <doctest.h>

#include <set>

#include "casimir/error.hpp"
#include "casimir/json_codec.hpp"
#include "casimir/uea.hpp"
#include "casimir/verify.hpp"

using namespace casimir;
using nlohmann::json;

namespace {

json sasakian_file() {
    return json::parse(R"({
      "name": "user-sasakian",
      "dim": 5,
      "torsion": [{"idx": [1, 2, 5], "c": "2"}, {"idx": [3, 4, 5], "c": "2"}],
      "dtorsion": [{"idx": [1, 2, 3, 4], "c": "8"}],
      "scal_g": "-4",
      "flags": {"parallel_torsion": true, "naturally_reductive": true},
      "expected": {
        "norm_T2": "8",
        "scal": "-16",
        "kp_constant": "0",
        "torsion_spectrum": ["-4", "0", "0", "4"],
        "dT_equals_2sigma": true,
        "commutes_with_T": true
      }
    })");
}

}  // namespace

TEST_CASE("catalog is sorted and complete") {
    const auto& cat = load_catalog();
    REQUIRE(cat.size() == 10);
    for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].name < cat[i].name);
    CHECK(find_entry("stiefel-v42") != nullptr);
    CHECK(find_entry("nosuch") == nullptr);
}

TEST_CASE("every entry except Aloff-Wallach passes") {
    for (const auto& e : load_catalog()) {
        CAPTURE(e.name);
        const VerificationReport r = verify(e);
        CHECK_FALSE(r.results.empty());
        if (e.name == "g2-w3-aloff-wallach") continue;
        for (const auto& a : r.results) {
            CAPTURE(a.name);
            CHECK(a.status == Status::Pass);
        }
    }
}

TEST_CASE("Aloff-Wallach: only the 3dT endomorphism disagrees, with the opposite coefficient") {
    const VerificationReport r = verify(*find_entry("g2-w3-aloff-wallach"));
    const std::map<std::string, std::string> b = {{"1/3", "-8576/9"}, {"1/2", "-2132"}, {"3/4", "-12539"}};
    int failures = 0;
    for (const auto& a : r.results) {
        if (a.status == Status::Pass) continue;
        ++failures;
        const std::string y = a.name.substr(2, a.name.find('/', 4) - 2);
        CHECK(a.name == "y=" + y + "/endomorphism_3dT");
        // Computed double eigenvalue is -b while the expectation lists +b.
        const std::string minus_b = b.at(y);
        CHECK(a.computed.front() == minus_b);
        CHECK(a.expected.back() == minus_b.substr(1));
    }
    CHECK(failures == 3);
}

TEST_CASE("parameter selection") {
    const CatalogEntry& e = *find_entry("g2-nearly-parallel");
    const VerificationReport r = verify(e, {1e-9, Scalar(3)});
    CHECK(r.pass());
    for (const auto& a : r.results) CHECK(a.name.rfind("a=3/", 0) == 0);
}

TEST_CASE("user geometry round trip") {
    const ParsedGeometry p = geometry_from_json(sasakian_file());
    CHECK(p.record.n == 5);
    CHECK(to_json(p.record.torsion) == sasakian_file()["torsion"]);
    const auto assertions = assertions_from_expected(p.expected, p.record.n);
    CHECK(assertions.size() == 6);
    const VerificationReport r = verify(p.record, assertions);
    CHECK(r.pass());
}

TEST_CASE("a corrupted expectation fails with both values") {
    json j = sasakian_file();
    j["expected"]["norm_T2"] = "9";
    const ParsedGeometry p = geometry_from_json(j);
    const VerificationReport r = verify(p.record, assertions_from_expected(p.expected, 5));
    CHECK_FALSE(r.pass());
    bool seen = false;
    for (const auto& a : r.results)
        if (a.name == "norm_T2") {
            seen = true;
            CHECK(a.status == Status::Fail);
            CHECK(a.computed == "8");
            CHECK(a.expected == "9");
        }
    CHECK(seen);
}

TEST_CASE("input errors are parse errors") {
    auto kind_of = [](const json& j) {
        try {
            const ParsedGeometry p = geometry_from_json(j);
            (void)assertions_from_expected(p.expected, p.record.n);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::SnapFailure;
    };
    json j = sasakian_file();
    j["expected"]["nonsense"] = 1;
    CHECK(kind_of(j) == ErrorKind::Parse);
    j = sasakian_file();
    j["torsion"][0]["idx"] = {2, 1, 5};
    CHECK(kind_of(j) == ErrorKind::Parse);
    j = sasakian_file();
    j["dim"] = 12;
    CHECK(kind_of(j) == ErrorKind::Parse);
    j = sasakian_file();
    j["scal_g"] = "1/0";
    CHECK(kind_of(j) == ErrorKind::Parse);
    j = sasakian_file();
    j.erase("torsion");
    CHECK(kind_of(j) == ErrorKind::Parse);
}

TEST_CASE("missing data is reported per assertion") {
    json j = sasakian_file();
    j.erase("dtorsion");
    const ParsedGeometry p = geometry_from_json(j);
    const VerificationReport r = verify(p.record, assertions_from_expected(p.expected, 5));
    CHECK_FALSE(r.pass());
    bool error_seen = false;
    for (const auto& a : r.results)
        if (a.name == "dT_equals_2sigma") error_seen = a.computed.get<std::string>().rfind("error:", 0) == 0;
    CHECK(error_seen);
}

TEST_CASE("reports are deterministic") {
    std::vector<VerificationReport> a, b;
    for (const auto& e : load_catalog()) a.push_back(verify(e));
    for (auto it = load_catalog().rbegin(); it != load_catalog().rend(); ++it) b.push_back(verify(*it));
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("Lie algebra JSON round trip") {
    for (const auto& L : {heisenberg5_algebra(), heisenberg5_group(), heisenberg_times_r_algebra(), stiefel_algebra()}) {
        const MetricReductiveAlgebra back = lie_from_json(lie_to_json(L));
        CHECK(back.dim_m() == L.dim_m());
        CHECK(back.dim_h() == L.dim_h());
        CHECK(lie_to_json(back) == lie_to_json(L));
    }
}

TEST_CASE("scalar and form codecs") {
    for (const char* s : {"0", "-3/4", "2/3*s3", "1/2+-1/3*s3"}) CHECK(to_json(scalar_from_json(s)) == s);
    CHECK_THROWS_AS((void)scalar_from_json(3), Error);
    CHECK_THROWS_AS((void)form_from_json(json::parse(R"([{"idx":[1,9],"c":"1"}])"), 5), Error);
    CHECK(multiset_from_json(json::parse(R"(["1","-1"])")).size() == 2);
}
