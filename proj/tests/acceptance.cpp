// Acceptance gate: one line per criterion. Usage: acceptance <casimir-cli> <property_suite>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "casimir/catalog.hpp"
#include "casimir/clifford.hpp"
#include "casimir/verify.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& cmd) {
    Run r{-1, {}};
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

/// Verifies catalog entries and lists every non-passing assertion.
Outcome catalog_pass(std::initializer_list<const char*> names, std::optional<Scalar> param = std::nullopt) {
    std::string failed;
    for (const char* name : names) {
        const CatalogEntry* e = find_entry(name);
        if (!e) return {false, std::string("missing entry ") + name};
        for (const auto& a : verify(*e, {1e-9, param}).results)
            if (a.status != Status::Pass) failed += " " + std::string(name) + ":" + a.name;
    }
    return {failed.empty(), failed.empty() ? "catalog assertions pass" : "failing:" + failed};
}

Outcome combine(Outcome a, const Outcome& b) {
    a.pass = a.pass && b.pass;
    a.detail += "; " + b.detail;
    return a;
}

Outcome clifford_identities() {
    std::mt19937 rng(7);
    int bad = 0, total = 0;
    for (int n = 3; n <= 8; ++n)
        for (int k = 0; k < 100; ++k, ++total) {
            const Form t = oracle::random_form(rng, n, 3, k % 3 == 0);
            const Scalar t2 = norm2(t);
            const Form s = sigma_T(t);
            if (clifford_mul(t, t) != Scalar(-2) * s + Form::scalar(n, t2) ||
                contraction_square(t) != Scalar(2) * s - Form::scalar(n, Scalar(3) * t2))
                ++bad;
        }
    return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " random 3-forms"};
}

Outcome sasakian_constants() {
    Form t(5);
    t.add({1, 2, 5}, 2);
    t.add({3, 4, 5}, 2);
    bool ok = clifford_mul(t, t) == Form::scalar(5, 8) + Form::blade(5, {1, 2, 3, 4}, -8);
    SpinRepresentation rep(5);
    const auto spaces = split_by(rep.act(t));
    ok = ok && spaces.size() == 3 && spaces[0].value == Scalar(-4) && spaces[1].value == Scalar(0) &&
         spaces[1].rank == 2 && spaces[2].value == Scalar(4);
    for (const Scalar s : {Scalar(-4), Scalar(20), Scalar(28)}) {
        GeometryRecord g;
        g.name = "sasakian";
        g.n = 5;
        g.torsion = t;
        g.dtorsion = Form::blade(5, {1, 2, 3, 4}, 8);
        g.deltatorsion = Form(5);
        g.scal_g = s;
        const SpinEndomorphism z = zero_order_general(g, rep);
        const SpinEndomorphism vol4 = rep.act(Form::blade(5, {1, 2, 3, 4}));
        for (const auto& e : spaces) {
            const bool zero = e.value.is_zero();
            const Scalar expect = s * Scalar::fraction(1, 8) + (zero ? Scalar::fraction(1, 2) : Scalar::fraction(-7, 2));
            ok = ok && restricted_spectrum(z, e.projector) == std::vector<Scalar>(static_cast<std::size_t>(e.rank), expect);
            ok = ok && restricted_spectrum(vol4, e.projector) ==
                           std::vector<Scalar>(static_cast<std::size_t>(e.rank), Scalar(zero ? 1 : -1));
        }
    }
    return combine({ok, "T^2, spectrum, e1234 signs and zero-order constants at s = -4, 20, 28"},
                   catalog_pass({"heisenberg5", "sasakian-einstein", "sasakian-eta-einstein", "sasakian-scal28"}));
}

Outcome g2_constants() {
    SpinRepresentation rep(7);
    const auto spec = exact_spectrum(rep.act(standard_g2_form()));
    std::vector<Scalar> expect{-7};
    expect.insert(expect.end(), 7, Scalar(1));
    Outcome o{spec == expect, "spec rho(omega) = {-7, 1x7}"};
    for (const Scalar a : {Scalar(1), Scalar(2)}) o = combine(o, catalog_pass({"g2-nearly-parallel"}, a));
    return o;
}

Outcome w3_examples() {
    Outcome o = catalog_pass({"g2-w3-heisenberg", "g2-n11-cocalibrated"});
    for (const Scalar y : {Scalar::fraction(1, 3), Scalar::fraction(1, 2), Scalar::fraction(3, 4)})
        o = combine(o, catalog_pass({"g2-w3-aloff-wallach"}, y));
    return o;
}

Outcome gap() {
    const GapReport infeasible = einstein_sasakian_gap(5);
    const GapReport feasible = einstein_sasakian_gap(0);
    const bool ok = !infeasible.feasible && std::abs(infeasible.gap - (4.25 - std::sqrt(5.0))) < 1e-12 &&
                    infeasible.gap_text() == "17/4 - sqrt(5)" && feasible.feasible && feasible.window_lo.sign() >= 0 &&
                    feasible.window_hi <= Scalar(3);
    return {ok, "gap " + infeasible.gap_text() + ", window [" + feasible.window_lo.str() + ", " +
                    feasible.window_hi.str() + "]"};
}

Outcome property_suite(const std::string& exe) {
    const Run r = run(exe);
    const bool ok = r.status == 0 && r.out.find("all properties hold") != std::string::npos;
    return {ok, "property_suite exit " + std::to_string(r.status)};
}

Outcome cli_stability(const std::string& cli) {
    const Run a = run(cli + " verify --all --json");
    const Run b = run(cli + " verify --all --json");
    const bool same = !a.out.empty() && a.out == b.out;
    return {a.status == 0 && b.status == 0 && same,
            "exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", outputs " +
                (same ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: acceptance <casimir-cli> <property_suite>\n");
        return 2;
    }
    const std::string cli = argv[1], props = argv[2];
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, clifford_identities},
        {2, sasakian_constants},
        {3, [] { return catalog_pass({"heisenberg5"}); }},
        {4, [] { return catalog_pass({"stiefel-v42"}); }},
        {5, [] { return catalog_pass({"nearly-kaehler-a2"}); }},
        {6, g2_constants},
        {7, w3_examples},
        {8, gap},
        {9, [&] { return property_suite(props); }},
        {10, [&] { return cli_stability(cli); }},
    };
    int failed = 0;
    for (const auto& [id, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
