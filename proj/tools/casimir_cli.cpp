#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "casimir/error.hpp"
#include "casimir/json_codec.hpp"
#include "casimir/uea.hpp"
#include "casimir/verify.hpp"

using namespace casimir;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Scalar> parse_parameter(const std::string& text, const char* what) {
    if (text.empty()) return std::nullopt;
    Scalar s = Scalar::parse(text);
    if (!s.is_rational()) throw UsageError(std::string(what) + " must be rational");
    return s;
}

const CatalogEntry& require_entry(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw UsageError("unknown geometry \"" + name + "\" (see `casimir list`)");
    return *e;
}

std::optional<Scalar> pick_parameter(const CatalogEntry& e, const std::optional<Scalar>& y,
                                     const std::optional<Scalar>& a) {
    if (e.parameter == "y") {
        if (y && (y->sign() <= 0 || *y >= Scalar(1))) throw UsageError("--y must lie in (0, 1)");
        return y;
    }
    if (e.parameter == "a") {
        if (a && a->sign() <= 0) throw UsageError("--a must be positive");
        return a;
    }
    return std::nullopt;
}

void print_text(const VerificationReport& r, std::ostream& os) {
    os << r.entry << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.results.size() << " assertions)\n";
    for (const auto& a : r.results) {
        if (a.status == Status::Pass) continue;
        os << "  " << to_string(a.status) << " " << a.name << " [" << a.anchor << "]\n"
           << "    computed: " << a.computed.dump() << "\n"
           << "    expected: " << a.expected.dump() << "\n";
    }
}

int cmd_list() {
    for (const auto& e : load_catalog()) {
        std::cout << e.name << "  " << e.summary;
        if (!e.parameter.empty()) {
            std::cout << "  [" << e.parameter << " in {";
            for (std::size_t i = 0; i < e.samples.size(); ++i) std::cout << (i ? ", " : "") << e.samples[i].str();
            std::cout << "}]";
        }
        if (e.reconstructed) std::cout << "  (reconstructed)";
        std::cout << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string& name, bool all, const std::string& file, bool as_json, double tol,
               const std::optional<Scalar>& y, const std::optional<Scalar>& a) {
    const int chosen = (name.empty() ? 0 : 1) + (all ? 1 : 0) + (file.empty() ? 0 : 1);
    if (chosen != 1) throw UsageError("verify needs exactly one of <name>, --all, --file");
    if (tol <= 0) throw UsageError("--tol must be positive");

    std::vector<VerificationReport> reports;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, e.what());
        }
        ParsedGeometry parsed = geometry_from_json(j);
        auto assertions = assertions_from_expected(parsed.expected, parsed.record.n);
        reports.push_back(verify(parsed.record, assertions, {tol, std::nullopt}));
    } else if (all) {
        for (const auto& e : load_catalog()) reports.push_back(verify(e, {tol, pick_parameter(e, y, a)}));
    } else {
        const CatalogEntry& e = require_entry(name);
        reports.push_back(verify(e, {tol, pick_parameter(e, y, a)}));
    }

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (as_json) {
        std::cout << to_json(reports).dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_text(r, std::cout);
        std::cout << (pass ? "all pass" : "FAILURES") << " (" << reports.size() << " entries)\n";
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_spectrum(const std::string& name, const std::string& op, double tol, const std::optional<Scalar>& y,
                 const std::optional<Scalar>& a) {
    const CatalogEntry& e = require_entry(name);
    std::optional<Scalar> p = pick_parameter(e, y, a);
    const Scalar param = p ? *p : (e.samples.empty() ? Scalar{} : e.samples.front());
    GeometryRecord g = e.record(param);
    SpinRepresentation rep(g.n);
    std::vector<Scalar> spec = multiset(named_operator(g, rep, op), tol);
    std::cout << name;
    if (!e.parameter.empty()) std::cout << " (" << e.parameter << " = " << param.str() << ")";
    std::cout << " " << op << ":";
    for (const auto& s : spec) std::cout << " " << s.str();
    std::cout << "\n";
    return kExitPass;
}

int cmd_square_dirac(const std::string& which) {
    if (which != "stiefel") throw UsageError("square-dirac supports only \"stiefel\"");
    StiefelData data = build_stiefel_dirac();
    StiefelComparison cmp = stiefel_square_in_adapted_basis(data);
    StiefelReduction red = stiefel_casimir(data);
    std::cout << "(D^{1/3})^2 = -3*sum(X^2) + M1 + M2*E34 + M3*X5\n"
              << "S =\n" << cmp.s.str() << "M1 =\n" << cmp.m1.str() << "M2 =\n" << cmp.m2.str() << "M3 =\n"
              << cmp.m3.str() << "psi_+ <-> psi_- relabel: " << (cmp.relabeled ? "yes" : "no") << "\n"
              << "other terms: " << (cmp.remainder.is_zero() ? "none" : cmp.remainder.str()) << "\n";
    const char* labels[] = {"Omega_0 (psi_+)", "Omega_0 (psi_-)", "Omega on S_4", "Omega on S_-4"};
    for (std::size_t i = 0; i < red.omega.size(); ++i)
        std::cout << labels[i] << ": " << red.omega[i].str() << "\n";
    return kExitPass;
}

int cmd_gap(const std::string& mu_min_text) {
    std::optional<Scalar> mu = parse_parameter(mu_min_text, "--mu-min");
    if (!mu) throw UsageError("--mu-min is required");
    GapReport g = einstein_sasakian_gap(*mu);
    char approx[32];
    std::snprintf(approx, sizeof approx, "%.4f", g.gap);
    if (g.feasible) {
        std::cout << "feasible; window " << g.window_lo.str() << " <= mu <= " << g.window_hi.str()
                  << " (within 0 <= mu <= 3)\n";
    } else {
        std::cout << "infeasible; gap = " << g.gap_text() << " ≈ " << approx << "\n";
    }
    std::cout << "(lower-bound reproduction of the one-dimensional minimization, not a sharp spectral statement)\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir operators of manifolds with skew-symmetric torsion"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list catalog geometries");

    std::string name, file, y_text, a_text, op = "torsion", mu_min, which;
    bool all = false, as_json = false;
    double tol = 1e-9;

    auto* verify_cmd = app.add_subcommand("verify", "verify catalog entries or a geometry JSON file");
    verify_cmd->add_option("name", name, "catalog entry");
    verify_cmd->add_flag("--all", all, "verify every catalog entry");
    verify_cmd->add_option("--file", file, "geometry JSON file");
    verify_cmd->add_flag("--json", as_json, "emit the report as JSON");
    verify_cmd->add_option("--tol", tol, "eigenvalue extraction tolerance")->capture_default_str();
    verify_cmd->add_option("--y", y_text, "Aloff-Wallach parameter (rational in (0,1))");
    verify_cmd->add_option("--a", a_text, "nearly parallel G2 parameter (positive rational)");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum of an endomorphism");
    spectrum_cmd->add_option("name", name, "catalog entry")->required();
    spectrum_cmd->add_option("--operator", op, "torsion | dT | sigma | casimir-zero")
        ->check(CLI::IsMember({"torsion", "dT", "sigma", "casimir-zero"}))
        ->capture_default_str();
    spectrum_cmd->add_option("--tol", tol, "eigenvalue extraction tolerance")->capture_default_str();
    spectrum_cmd->add_option("--y", y_text, "Aloff-Wallach parameter");
    spectrum_cmd->add_option("--a", a_text, "nearly parallel G2 parameter");

    auto* square_cmd = app.add_subcommand("square-dirac", "square of D^{1/3} on a homogeneous space");
    square_cmd->add_option("space", which, "stiefel")->required();

    auto* gap_cmd = app.add_subcommand("gap", "Einstein-Sasakian eigenvalue gap");
    gap_cmd->add_option("--mu-min", mu_min, "lower bound for the first eigenvalue of the horizontal Laplacian")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        const auto y = parse_parameter(y_text, "--y");
        const auto a = parse_parameter(a_text, "--a");
        if (*list) return cmd_list();
        if (*verify_cmd) return cmd_verify(name, all, file, as_json, tol, y, a);
        if (*spectrum_cmd) return cmd_spectrum(name, op, tol, y, a);
        if (*square_cmd) return cmd_square_dirac(which);
        if (*gap_cmd) return cmd_gap(mu_min);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument ||
                       e.kind() == ErrorKind::InsufficientData || e.kind() == ErrorKind::DimensionMismatch
                   ? kExitUsage
                   : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
