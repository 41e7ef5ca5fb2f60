#include "casimir/catalog.hpp"

#include <algorithm>
#include <memory>

#include "casimir/error.hpp"
#include "casimir/json_codec.hpp"
#include "casimir/uea.hpp"

namespace casimir {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Comparison helpers

AssertionOutcome same(const Scalar& computed, const Scalar& expected) {
    return {computed == expected, to_json(computed), to_json(expected)};
}

AssertionOutcome same(const Form& computed, const Form& expected) {
    return {computed == expected, to_json(computed), to_json(expected)};
}

AssertionOutcome same_multiset(std::vector<Scalar> computed, std::vector<Scalar> expected) {
    std::sort(computed.begin(), computed.end());
    std::sort(expected.begin(), expected.end());
    return {computed == expected, to_json(computed), to_json(expected)};
}

AssertionOutcome truth(bool computed, bool expected) { return {computed == expected, computed, expected}; }

std::vector<Scalar> multiset(const SpinEndomorphism& m, double tol) {
    std::vector<Scalar> v = exact_spectrum(m, tol);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Scalar> repeat(const Scalar& v, int count) { return std::vector<Scalar>(static_cast<std::size_t>(count), v); }

std::vector<Scalar> concat(std::vector<std::vector<Scalar>> parts) {
    std::vector<Scalar> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

namespace {

Scalar frac(long p, long q) { return Scalar::fraction(p, q); }

Form form(int dim, std::initializer_list<std::pair<IndexBlade, Scalar>> terms) {
    Form f(dim);
    for (const auto& [b, c] : terms) f.add(b, c);
    return f;
}

AssertionOutcome same_matrix(const Matrix& computed, const Matrix& expected) {
    return {computed == expected, to_json(computed), to_json(expected)};
}

AssertionOutcome same_reduced(const ReducedOperator& computed, const ReducedOperator& expected) {
    return {computed == expected, computed.str(), expected.str()};
}

Assertion exact(std::string name, std::string anchor, std::function<AssertionOutcome(const AssertionContext&)> run) {
    return {std::move(name), std::move(anchor), false, std::move(run)};
}

Assertion floating(std::string name, std::string anchor, std::function<AssertionOutcome(const AssertionContext&)> run) {
    return {std::move(name), std::move(anchor), true, std::move(run)};
}

SpinEndomorphism act(const AssertionContext& c, const Form& f) { return c.rep.act(f); }

/// Projector onto the mu-eigenspace of rho(T).
SpinEndomorphism torsion_projector(const AssertionContext& c, const Scalar& mu) {
    for (auto& e : split_by(act(c, c.record.torsion), c.tol))
        if (e.value == mu) return e.projector;
    throw Error(ErrorKind::InvalidArgument, mu.str() + " is not an eigenvalue of rho(T)");
}

std::vector<Scalar> on_torsion_eigenspace(const AssertionContext& c, const SpinEndomorphism& m, const Scalar& mu) {
    std::vector<Scalar> v = restricted_spectrum(m, torsion_projector(c, mu), c.tol);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Scalar> diagonal_of(const SoMatrix& m) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && !m[i][j].is_zero()) throw Error(ErrorKind::InvalidArgument, "Ricci tensor is not diagonal");
        out.push_back(m[i][i]);
    }
    return out;
}

AssertionOutcome same_sequence(const std::vector<Scalar>& computed, const std::vector<Scalar>& expected) {
    return {computed == expected, to_json(computed), to_json(expected)};
}

// ---------------------------------------------------------------------------
// Five-dimensional Sasakian data

Form sasakian_torsion() { return form(5, {{{1, 2, 5}, 2}, {{3, 4, 5}, 2}}); }
Form sasakian_deta() { return form(5, {{{1, 2}, 2}, {{3, 4}, 2}}); }
Form e1234() { return Form::blade(5, {1, 2, 3, 4}); }

GeometryRecord sasakian_record(std::string name, const Scalar& s) {
    GeometryRecord g;
    g.name = std::move(name);
    g.n = 5;
    g.torsion = sasakian_torsion();
    g.dtorsion = Form::blade(5, {1, 2, 3, 4}, 8);
    g.deltatorsion = Form(5);
    g.scal_g = s;
    g.flags.parallel_torsion = true;
    return g;
}

/// Checks shared by every five-dimensional Sasakian entry with Scal^g = s.
std::vector<Assertion> sasakian_assertions(const Scalar& s) {
    const Scalar c0 = s * frac(1, 8) + frac(1, 2);
    const Scalar c4 = s * frac(1, 8) - frac(7, 2);
    return {
        exact("T_squared", "T^2 = 8 - 8 e1234",
              [](const AssertionContext& c) {
                  return same(clifford_mul(c.record.torsion, c.record.torsion), Form::scalar(5, 8) - Scalar(8) * e1234());
              }),
        floating("torsion_spectrum", "T acts with eigenvalues -4, 0, 0, 4",
                 [](const AssertionContext& c) {
                     return same_multiset(multiset(act(c, c.record.torsion), c.tol), {-4, 0, 0, 4});
                 }),
        floating("e1234_on_S0", "e1234 = +1 on the kernel of T",
                 [](const AssertionContext& c) { return same_multiset(on_torsion_eigenspace(c, act(c, e1234()), 0), {1, 1}); }),
        floating("e1234_on_S4", "e1234 = -1 on S_4",
                 [](const AssertionContext& c) { return same_multiset(on_torsion_eigenspace(c, act(c, e1234()), 4), {-1}); }),
        floating("e1234_on_S-4", "e1234 = -1 on S_-4",
                 [](const AssertionContext& c) { return same_multiset(on_torsion_eigenspace(c, act(c, e1234()), -4), {-1}); }),
        exact("dT_equals_2sigma", "dT = 2 sigma_T",
              [](const AssertionContext& c) {
                  return same(resolve_dtorsion(c.record), Scalar(2) * sigma_T(c.record.torsion));
              }),
        floating("omega_zero_order_S0", "Omega_0 = Delta_T + Scal^g/8 + 1/2",
                 [c0](const AssertionContext& c) {
                     return same_multiset(on_torsion_eigenspace(c, zero_order_general(c.record, c.rep), 0), repeat(c0, 2));
                 }),
        floating("omega_zero_order_S4", "Omega_(+-4) = Delta_T + Scal^g/8 - 7/2",
                 [c4](const AssertionContext& c) {
                     return same_multiset(on_torsion_eigenspace(c, zero_order_general(c.record, c.rep), 4), {c4});
                 }),
        floating("omega_zero_order_S-4", "Omega_(+-4) = Delta_T + Scal^g/8 - 7/2",
                 [c4](const AssertionContext& c) {
                     return same_multiset(on_torsion_eigenspace(c, zero_order_general(c.record, c.rep), -4), {c4});
                 }),
        exact("omega_zero_order_total", "Omega = Delta_T + Scal^g/8 - 3/2 + 2 e1234",
              [s](const AssertionContext& c) {
                  SpinEndomorphism expected =
                      act(c, Form::scalar(5, s * frac(1, 8) - frac(3, 2)) + Scalar(2) * e1234());
                  return AssertionOutcome{zero_order_general(c.record, c.rep) == expected,
                                          to_json(zero_order_general(c.record, c.rep).mat), to_json(expected.mat)};
              }),
        exact("parallel_formula_agrees", "Omega - Delta_T for parallel torsion",
              [](const AssertionContext& c) {
                  return truth(zero_order_general(c.record, c.rep) == zero_order_parallel(c.record, c.rep));
              }),
        exact("dirac13_shift", "Omega_0 = (D^{1/3})^2 - Scal^g/8 - 1/2",
              [c0](const AssertionContext& c) {
                  return truth(dirac13_shift(c.record, c.rep) == c.rep.scalar(-c0));
              }),
    };
}

// ---------------------------------------------------------------------------
// Lie algebras

}  // namespace

MetricReductiveAlgebra heisenberg5_algebra() {
    // (H5 x| U(1))/U(1): frame Y1..Y5 of m, isotropy J as generator 6.
    return MetricReductiveAlgebra(5, 1,
                                  {{1, 2, {{5, -2}, {6, -4}}},
                                   {3, 4, {{5, -2}, {6, -4}}},
                                   {1, 5, {{2, 2}}},
                                   {2, 5, {{1, -2}}},
                                   {3, 5, {{4, 2}}},
                                   {4, 5, {{3, -2}}},
                                   {1, 6, {{2, -1}}},
                                   {2, 6, {{1, 1}}},
                                   {3, 6, {{4, -1}}},
                                   {4, 6, {{3, 1}}}});
}

MetricReductiveAlgebra heisenberg5_group() {
    return MetricReductiveAlgebra(5, 0, {{1, 2, {{5, -2}}}, {3, 4, {{5, -2}}}});
}

MetricReductiveAlgebra heisenberg_times_r_algebra() {
    // de5 = e14 - e23, de6 = e13 + e24.
    return MetricReductiveAlgebra(7, 0, {{1, 4, {{5, -1}}}, {2, 3, {{5, 1}}}, {1, 3, {{6, -1}}}, {2, 4, {{6, -1}}}});
}

// ---------------------------------------------------------------------------
// Aloff-Wallach family

AloffWallachValues aloff_wallach_values(const Scalar& y) {
    const Scalar y2 = y * y, y3 = y2 * y, y4 = y3 * y;
    const Scalar ym1 = y - Scalar(1);
    const Scalar sq = ym1 * ym1;
    AloffWallachValues v;
    v.a = Scalar(-72) * (Scalar(2) + y + y2 - y3 + y4) / sq;
    v.b = Scalar(16) * (Scalar(20) + Scalar(7) * y + Scalar(33) * y2 + Scalar(13) * y3 - y4) / sq;
    v.c = Scalar(64) * (Scalar(7) + Scalar(10) * y + y2);
    v.a_star = Scalar(24) * (y - Scalar(2)) * (Scalar(1) + y) * (Scalar(1) + y) / (Scalar(1) - y);
    v.b_star = Scalar(16) * (Scalar(4) - Scalar(7) * y - Scalar(10) * y2 + y3) / ym1;
    v.c_star = Scalar(64) * (Scalar(5) + Scalar(6) * y + y2);
    return v;
}

Form aloff_wallach_t5(const Scalar& y) {
    const Scalar p = -(y + Scalar(2)) / Scalar(4);
    const Scalar q = Scalar(3) * y / (y - Scalar(1));
    const Scalar r = (Scalar(2) + Scalar(2) * y - y * y) / (Scalar(2) * y - Scalar(2));
    return form(7, {{{1, 3, 5}, p}, {{1, 4, 6}, p}, {{2, 4, 5}, p}, {{2, 3, 6}, -p},
                    {{1, 2, 7}, q}, {{3, 4, 7}, r}, {{5, 6, 7}, -r}});
}

Form aloff_wallach_dt5(const Scalar& y, bool printed) {
    const Scalar sq = (y - Scalar(1)) * (y - Scalar(1));
    const Scalar p = Scalar(2) + Scalar(4) * y;
    const Scalar inner_coeff = printed ? Scalar(-2) - Scalar(2) * y + y * y * y : Scalar(-2) - Scalar(5) * y + y * y * y;
    const Scalar x3456 = Scalar(3) * y * inner_coeff / sq;
    const Scalar q = (Scalar(10) + Scalar(9) * y + Scalar(12) * y * y + Scalar(5) * y * y * y) / sq;
    return form(7, {{{2, 3, 5, 7}, p}, {{2, 4, 6, 7}, p}, {{1, 4, 5, 7}, -p}, {{1, 3, 6, 7}, p},
                    {{3, 4, 5, 6}, x3456}, {{1, 2, 3, 4}, q}, {{1, 2, 5, 6}, -q}});
}

namespace {

// ---------------------------------------------------------------------------
// Entries

CatalogEntry heisenberg5_entry() {
    CatalogEntry e;
    e.name = "heisenberg5";
    e.summary = "5-dimensional Heisenberg group, Sasakian, Scal^g = -4";
    e.record = [](const Scalar&) {
        GeometryRecord g;
        g.name = "heisenberg5";
        g.n = 5;
        g.lie = heisenberg5_algebra();
        g.torsion = sasakian_torsion();
        g.deltatorsion = Form(5);
        g.flags = {true, true};
        return g;
    };
    e.assertions = [](const Scalar&) {
        std::vector<Assertion> v = sasakian_assertions(-4);
        v.push_back(exact("canonical_torsion", "T = eta ^ d eta = 2(e12 + e34) ^ e5", [](const AssertionContext& c) {
            return same(canonical_torsion(*c.record.lie), sasakian_torsion());
        }));
        v.push_back(exact("d_eta", "d eta = 2(e12 + e34)", [](const AssertionContext& c) {
            return same(invariant_d(*c.record.lie, Form::basis(5, 5)), sasakian_deta());
        }));
        v.push_back(exact("scal_g", "scalar curvature equals Scal^g = -4", [](const AssertionContext& c) {
            return same(nomizu_curvature(*c.record.lie).scal, -4);
        }));
        v.push_back(exact("ricci", "Ric^g = -2g + 6 eta (x) eta", [](const AssertionContext& c) {
            return same_sequence(diagonal_of(nomizu_curvature(*c.record.lie).ricci), {-2, -2, -2, -2, 4});
        }));
        v.push_back(exact("delta_T_zero", "delta T = 0", [](const AssertionContext& c) {
            return truth(codifferential(*c.record.lie, c.record.torsion).is_zero());
        }));
        v.push_back(exact("kp_constant", "Omega_0 = Delta_T", [](const AssertionContext& c) {
            return same(kp_constant(c.record), 0);
        }));
        v.push_back(exact("group_presentation_d_eta", "d eta = 2(e12 + e34)", [](const AssertionContext&) {
            return same(invariant_d(heisenberg5_group(), Form::basis(5, 5)), sasakian_deta());
        }));
        v.push_back(exact("group_presentation_scal_g", "scalar curvature equals Scal^g = -4", [](const AssertionContext&) {
            return same(nomizu_curvature(heisenberg5_group()).scal, -4);
        }));
        return v;
    };
    return e;
}

CatalogEntry sasakian_eta_einstein_entry() {
    CatalogEntry e;
    e.name = "sasakian-eta-einstein";
    e.summary = "eta-Einstein Sasakian manifold with Ric^g = -2g + 6 eta (x) eta, Scal^g = -4";
    e.record = [](const Scalar&) { return sasakian_record("sasakian-eta-einstein", -4); };
    e.assertions = [](const Scalar&) {
        std::vector<Assertion> v = sasakian_assertions(-4);
        v.push_back(floating("friedrich_bound", "5 Scal^g_min <= 16", [](const AssertionContext& c) {
            SpectralBoundReport r = friedrich_bound(5, resolve_scal_g(c.record), multiset(act(c, c.record.torsion), c.tol));
            return AssertionOutcome{r.holds, json{{"left", r.left.str()}, {"right", r.right.str()}, {"holds", r.holds}},
                                    json{{"holds", true}}};
        }));
        return v;
    };
    return e;
}

CatalogEntry sasakian_einstein_entry() {
    CatalogEntry e;
    e.name = "sasakian-einstein";
    e.summary = "Einstein-Sasakian manifold, Scal^g = 20, with the eigenvalue gap";
    e.record = [](const Scalar&) { return sasakian_record("sasakian-einstein", 20); };
    e.assertions = [](const Scalar&) {
        std::vector<Assertion> v = sasakian_assertions(20);
        v.push_back(floating("killing_spinor_omega", "Omega(psi_1) = -3/4 psi_1", [](const AssertionContext& c) {
            // D^g = -5/2 on psi_1 with T psi_1 = 4 psi_1, and D^g = 5/2 on psi_2 with T psi_2 = -4 psi_2.
            std::vector<Scalar> out;
            for (const auto& [dg, mu] : {std::pair<Scalar, Scalar>{frac(-5, 2), 4}, {frac(5, 2), -4}}) {
                const Scalar d13 = dg + mu * frac(1, 4);
                for (const auto& shift : on_torsion_eigenspace(c, dirac13_shift(c.record, c.rep), mu))
                    out.push_back(d13 * d13 + shift);
            }
            return same_multiset(out, {frac(-3, 4), frac(-3, 4)});
        }));
        v.push_back(exact("gap_infeasible_mu5", "lambda_2(Omega) >= 17/4 - sqrt(5)", [](const AssertionContext&) {
            return truth(einstein_sasakian_gap(5).feasible, false);
        }));
        v.push_back(exact("gap_value_mu5", "17/4 - sqrt(5) ~ 2.014", [](const AssertionContext&) {
            GapReport g = einstein_sasakian_gap(5);
            const bool exact_form = g.rational_part == frac(17, 4) && g.radicand == Scalar(5);
            return AssertionOutcome{exact_form, g.gap_text(), "17/4 - sqrt(5)"};
        }));
        v.push_back(exact("gap_feasible_mu0", "0 <= mu <= 3", [](const AssertionContext&) {
            GapReport g = einstein_sasakian_gap(0);
            const bool inside = g.feasible && g.window_lo >= Scalar(0) && g.window_hi <= Scalar(3);
            return AssertionOutcome{inside,
                                    json{{"feasible", g.feasible}, {"window", {g.window_lo.str(), g.window_hi.str()}}},
                                    json{{"feasible", true}, {"window_within", {"0", "3"}}}};
        }));
        return v;
    };
    return e;
}

CatalogEntry sasakian_scal28_entry() {
    CatalogEntry e;
    e.name = "sasakian-scal28";
    e.summary = "Sasakian boundary case Scal^g = 28, kernel of Omega_0 is trivial";
    e.record = [](const Scalar&) { return sasakian_record("sasakian-scal28", 28); };
    e.assertions = [](const Scalar&) {
        std::vector<Assertion> v = sasakian_assertions(28);
        v.push_back(floating("omega0_kernel_trivial", "the kernel of Omega_0 is trivial", [](const AssertionContext& c) {
            std::vector<Scalar> s0 = on_torsion_eigenspace(c, zero_order_general(c.record, c.rep), 0);
            const bool positive = std::all_of(s0.begin(), s0.end(), [](const Scalar& x) { return x.sign() > 0; });
            return AssertionOutcome{positive, to_json(s0), "all > 0"};
        }));
        return v;
    };
    return e;
}

CatalogEntry stiefel_entry() {
    CatalogEntry e;
    e.name = "stiefel-v42";
    e.summary = "Stiefel manifold V_{4,2} with its Einstein-Sasakian metric, Scal^g = 20";
    e.record = [](const Scalar&) {
        GeometryRecord g;
        g.name = "stiefel-v42";
        g.n = 5;
        g.lie = stiefel_algebra();
        g.torsion = wedge(Form::basis(5, 5), invariant_d(*g.lie, Form::basis(5, 5)));
        g.deltatorsion = Form(5);
        g.flags.parallel_torsion = true;
        return g;
    };
    e.assertions = [](const Scalar&) {
        auto data = std::make_shared<StiefelData>(build_stiefel_dirac());
        auto cmp = std::make_shared<StiefelComparison>(stiefel_square_in_adapted_basis(*data));
        auto red = std::make_shared<StiefelReduction>(stiefel_casimir(*data));
        const ComplexScalar i = ComplexScalar::i();

        auto expected_s = [i] {
            Matrix m(4, 4);
            m(2, 3) = i * ComplexScalar(frac(5, 2));
            m(3, 2) = -(i * ComplexScalar(frac(5, 2)));
            return m;
        };
        auto expected_m1 = [] { return Matrix::diagonal({0, 0, ComplexScalar(frac(9, 4)), ComplexScalar(frac(9, 4))}); };
        auto expected_m2 = [i] { return Matrix::diagonal({i * ComplexScalar(6), -(i * ComplexScalar(6)), 0, 0}); };
        auto expected_m3 = [] {
            Matrix m(4, 4);
            m(2, 3) = -ComplexScalar(Scalar::sqrt3());
            m(3, 2) = ComplexScalar(Scalar::sqrt3());
            return m;
        };
        auto omega0 = [](int comp) { return make_reduced(comp, 5, -3, {}, 3); };
        auto omega4 = [i](int comp, int sign) {
            return make_reduced(comp, 5, -3, {{4, ComplexScalar(Scalar(0), Scalar::sqrt3() * Scalar(sign))}},
                                ComplexScalar(frac(-3, 4)));
        };

        std::vector<Assertion> v = {
            exact("scal_g", "Einstein-Sasakian manifold equal to 20", [](const AssertionContext& c) {
                return same(nomizu_curvature(*c.record.lie).scal, 20);
            }),
            exact("ricci", "Einstein-Sasakian manifold equal to 20", [](const AssertionContext& c) {
                return same_sequence(diagonal_of(nomizu_curvature(*c.record.lie).ricci), repeat(4, 5));
            }),
            exact("d_eta", "d eta = 2(e12 + e34)", [](const AssertionContext& c) {
                return same(invariant_d(*c.record.lie, Form::basis(5, 5)), sasakian_deta());
            }),
            exact("torsion", "T = eta ^ d eta", [](const AssertionContext& c) {
                return same(c.record.torsion, sasakian_torsion());
            }),
            exact("dT", "dT = 2 sigma_T", [](const AssertionContext& c) {
                return same(resolve_dtorsion(c.record), Form::blade(5, {1, 2, 3, 4}, 8));
            }),
            floating("dirac_S_spectrum", "S := (5i/2) [rotation in components 3, 4]", [data](const AssertionContext& c) {
                return same_multiset(multiset(data->s, c.tol), {frac(-5, 2), 0, 0, frac(5, 2)});
            }),
            exact("defining_representation", "the commutator relations for [X_i, X_j]", [data](const AssertionContext&) {
                check_representation(stiefel_defining_representation(), data->relations);
                return truth(true);
            }),
            exact("square_oracle", "we compute the square of the operator D^{1/3}", [data](const AssertionContext&) {
                const auto rep = stiefel_defining_representation();
                Matrix d = evaluate_in_representation(data->dirac13, rep, data->relations);
                Matrix sq = evaluate_in_representation(data->square, rep, data->relations);
                return truth(sq == d * d);
            }),
            exact("S", "S := (5i/2) [rotation in components 3, 4]",
                  [cmp, expected_s](const AssertionContext&) { return same_matrix(cmp->s, expected_s()); }),
            exact("M1", "matrices M_1, M_2 and M_3 are given",
                  [cmp, expected_m1](const AssertionContext&) { return same_matrix(cmp->m1, expected_m1()); }),
            exact("M2", "matrices M_1, M_2 and M_3 are given",
                  [cmp, expected_m2](const AssertionContext&) { return same_matrix(cmp->m2, expected_m2()); }),
            exact("M3", "matrices M_1, M_2 and M_3 are given",
                  [cmp, expected_m3](const AssertionContext&) { return same_matrix(cmp->m3, expected_m3()); }),
            exact("M2_relabel", "E_34(psi_+-) = +-i psi_+-", [cmp](const AssertionContext&) {
                // The printed M_2 needs psi_+ <-> psi_- relative to the isotropy-lift labels.
                return truth(cmp->relabeled, true);
            }),
            exact("square_no_other_terms", "-3 sum X_i^2 + M_1 + M_2 E_34 + M_3 X_5", [cmp](const AssertionContext&) {
                return AssertionOutcome{cmp->remainder.is_zero(), cmp->remainder.str(), "0"};
            }),
            exact("component_torsion_values", "psi_* is a section in the bundle S_4 + S_-4", [red](const AssertionContext&) {
                return same_sequence(red->torsion_values, {0, 0, 4, -4});
            }),
            exact("kp_constant", "Omega_0 = -3 sum X^2 + 3", [red](const AssertionContext&) { return same(red->kp, 3); }),
            exact("omega_S0_plus", "Omega_0 = -3 sum X^2 + 3",
                  [red, omega0](const AssertionContext&) { return same_reduced(red->omega.at(0), omega0(0)); }),
            exact("omega_S0_minus", "Omega_0 = -3 sum X^2 + 3",
                  [red, omega0](const AssertionContext&) { return same_reduced(red->omega.at(1), omega0(1)); }),
            exact("omega_S4_relabeled", "-3 sum X^2 - 3/4 +- sqrt3 i X_5", [red, omega4](const AssertionContext&) {
                // S_4 <-> S_-4 relabel: the T = 4 component carries the printed Omega_-4.
                return same_reduced(red->omega.at(2), omega4(2, -1));
            }),
            exact("omega_S-4_relabeled", "-3 sum X^2 - 3/4 +- sqrt3 i X_5", [red, omega4](const AssertionContext&) {
                return same_reduced(red->omega.at(3), omega4(3, 1));
            }),
        };
        return v;
    };
    return e;
}

CatalogEntry nearly_kaehler_entry() {
    CatalogEntry e;
    e.name = "nearly-kaehler-a2";
    e.summary = "6-dimensional nearly Kaehler manifold with a = 2";
    e.record = [](const Scalar&) {
        GeometryRecord g;
        g.name = "nearly-kaehler-a2";
        g.n = 6;
        g.torsion = form(6, {{{1, 3, 5}, 1}, {{1, 4, 6}, -1}, {{2, 3, 6}, -1}, {{2, 4, 5}, -1}});
        g.dtorsion = form(6, {{{1, 2, 3, 4}, 4}, {{1, 2, 5, 6}, 4}, {{3, 4, 5, 6}, 4}});
        g.deltatorsion = Form(6);
        g.scal_g = 30;
        g.flags.parallel_torsion = true;
        return g;
    };
    e.assertions = [](const Scalar&) {
        const Scalar a = 2;
        return std::vector<Assertion>{
            exact("norm_T2", "||T||^2 = 2a", [a](const AssertionContext& c) { return same(norm2(c.record.torsion), Scalar(2) * a); }),
            exact("dT_equals_2sigma", "2 sigma_T = dT = a (omega ^ omega)", [](const AssertionContext& c) {
                return same(Scalar(2) * sigma_T(c.record.torsion), resolve_dtorsion(c.record));
            }),
            exact("dT_omega_squared", "2 sigma_T = dT = a (omega ^ omega)", [a](const AssertionContext& c) {
                Form w = form(6, {{{1, 2}, 1}, {{3, 4}, 1}, {{5, 6}, 1}});
                return same(resolve_dtorsion(c.record), a * wedge(w, w));
            }),
            exact("scal", "Ric = 2a g", [a](const AssertionContext& c) { return same(scal(c.record), Scalar(12) * a); }),
            floating("endomorphism_spectrum", "16a diag(0,0,1,1,1,1,1,1)", [a](const AssertionContext& c) {
                Form f = Scalar(2) * resolve_dtorsion(c.record) + Form::scalar(6, scal(c.record));
                return same_multiset(multiset(act(c, f), c.tol), concat({repeat(0, 2), repeat(Scalar(16) * a, 6)}));
            }),
            exact("omega_shift", "Omega = (D^{1/3})^2 - 2a", [a](const AssertionContext& c) {
                return truth(dirac13_shift(c.record, c.rep) == c.rep.scalar(-(Scalar(2) * a)));
            }),
            exact("parallel_formula_agrees", "Omega = Delta_T + (1/8)(2 dT + Scal)", [](const AssertionContext& c) {
                return truth(zero_order_general(c.record, c.rep) == zero_order_parallel(c.record, c.rep));
            }),
            floating("kernel_dimension", "its kernel coincides with the two-dimensional space", [](const AssertionContext& c) {
                SpinEndomorphism z = zero_order_general(c.record, c.rep);
                return AssertionOutcome{z.size() - rank(z.mat) == 2, z.size() - rank(z.mat), 2};
            }),
            exact("dirac_lower_bound", "(D^{1/3})^2 >= (2/15) Scal^g", [](const AssertionContext& c) {
                return truth(dirac13_shift(c.record, c.rep) == c.rep.scalar(-(resolve_scal_g(c.record) * frac(2, 15))));
            }),
        };
    };
    return e;
}

GeometryRecord nearly_parallel_record(const Scalar& a) {
    const Form omega = standard_g2_form();
    const Form d_omega = -(a * hodge_star(omega));
    G2Torsion t = g2_characteristic_torsion(omega, d_omega);
    GeometryRecord g;
    g.name = "g2-nearly-parallel";
    g.n = 7;
    g.torsion = t.torsion;
    g.dtorsion = -(a * frac(1, 6)) * d_omega;
    g.deltatorsion = Form(7);
    g.scal_g = t.scal_g;
    g.flags.parallel_torsion = true;
    return g;
}

CatalogEntry nearly_parallel_entry() {
    CatalogEntry e;
    e.name = "g2-nearly-parallel";
    e.summary = "nearly parallel G2-manifold, d omega = -a * omega";
    e.parameter = "a";
    e.samples = {1, 2};
    e.record = nearly_parallel_record;
    e.assertions = [](const Scalar& a) {
        const Scalar mu0 = a * frac(7, 6);
        const Scalar kp = a * a * frac(49, 144);
        return std::vector<Assertion>{
            floating("omega_spectrum", "omega^3 acts with two eigenvalues -7 and +1", [](const AssertionContext& c) {
                return same_multiset(multiset(act(c, standard_g2_form()), c.tol), concat({{-7}, repeat(1, 7)}));
            }),
            exact("torsion", "T = -(a/6) omega^3", [a](const AssertionContext& c) {
                return same(c.record.torsion, -(a * frac(1, 6)) * standard_g2_form());
            }),
            exact("norm_T2", "||T||^2 = (7/36) a^2", [a](const AssertionContext& c) {
                return same(norm2(c.record.torsion), a * a * frac(7, 36));
            }),
            exact("scal_g", "Scal^g = (21/8) a^2", [a](const AssertionContext& c) {
                return same(resolve_scal_g(c.record), a * a * frac(21, 8));
            }),
            exact("scal_identity", "Scal^g = 2 (T, omega^3)^2 - ||T||^2/2", [a](const AssertionContext&) {
                const Form omega = standard_g2_form();
                return truth(g2_characteristic_torsion(omega, -(a * hodge_star(omega))).scal_identity);
            }),
            exact("dT_equals_2sigma", "dT = 2 sigma_T", [](const AssertionContext& c) {
                return same(resolve_dtorsion(c.record), Scalar(2) * sigma_T(c.record.torsion));
            }),
            floating("torsion_spectrum", "T psi_0 = (7/6) a psi_0", [a, mu0](const AssertionContext& c) {
                return same_multiset(multiset(act(c, c.record.torsion), c.tol), concat({{mu0}, repeat(-(a * frac(1, 6)), 7)}));
            }),
            exact("omega_shift", "Omega = (D^{1/3})^2 - (49/144) a^2", [kp](const AssertionContext& c) {
                return truth(dirac13_shift(c.record, c.rep) == c.rep.scalar(-kp));
            }),
            exact("parallel_spinor_annihilated", "psi_0 belongs to the kernel of the Casimir operator",
                  [mu0](const AssertionContext& c) {
                      return truth(parallel_spinor_annihilation(c.record, c.rep, mu0).whole_eigenspace());
                  }),
            exact("kernel_branch_7a6", "lambda = -(7/8) a", [a, kp, mu0](const AssertionContext& c) {
                auto iv = kernel_admissible_eigenvalues(7, resolve_scal_g(c.record), kp, mu0);
                const Scalar l = -(a * frac(7, 8));
                json got = json::array();
                for (const auto& i : iv) got.push_back({i.lo.str(), i.hi.str()});
                return AssertionOutcome{iv == std::vector<Interval>{{l, l}}, got, json::array({{l.str(), l.str()}})};
            }),
            exact("kernel_branch_-a6", "a solution lambda does not exist", [a, kp](const AssertionContext& c) {
                auto iv = kernel_admissible_eigenvalues(7, resolve_scal_g(c.record), kp, -(a * frac(1, 6)));
                json got = json::array();
                for (const auto& i : iv) got.push_back({i.lo.str(), i.hi.str()});
                return AssertionOutcome{iv.empty(), got, json::array()};
            }),
        };
    };
    return e;
}

CatalogEntry heisenberg_times_r_entry() {
    CatalogEntry e;
    e.name = "g2-w3-heisenberg";
    e.summary = "cocalibrated G2-structure of type W3 on R x Heisenberg group (rebuilt from structure equations)";
    e.reconstructed = true;
    e.record = [](const Scalar&) {
        GeometryRecord g;
        g.name = "g2-w3-heisenberg";
        g.n = 7;
        g.lie = heisenberg_times_r_algebra();
        const Form omega = standard_g2_form();
        g.torsion = g2_characteristic_torsion(omega, invariant_d(*g.lie, omega)).torsion;
        g.deltatorsion = Form(7);
        return g;
    };
    e.assertions = [](const Scalar&) {
        return std::vector<Assertion>{
            exact("cocalibrated", "d * omega^3 = 0 and (d omega^3, * omega^3) = 0", [](const AssertionContext& c) {
                const Form omega = standard_g2_form();
                const bool closed = invariant_d(*c.record.lie, hodge_star(omega)).is_zero();
                const bool w3 = inner(invariant_d(*c.record.lie, omega), hodge_star(omega)).is_zero();
                return truth(closed && w3);
            }),
            exact("norm_T2", "||T||^2 = 4", [](const AssertionContext& c) { return same(norm2(c.record.torsion), 4); }),
            exact("scal_g", "Scal^g = 2 (T, omega^3)^2 - ||T||^2/2", [](const AssertionContext& c) {
                return same(resolve_scal_g(c.record), -(norm2(c.record.torsion) * frac(1, 2)));
            }),
            exact("delta_T_zero", "delta(T) = 0", [](const AssertionContext& c) {
                return truth(codifferential(*c.record.lie, c.record.torsion).is_zero());
            }),
            floating("diag_3dT_minus_2sigma", "diag(8,0,8,-16,8,-16,8,0)", [](const AssertionContext& c) {
                Form f = Scalar(3) * resolve_dtorsion(c.record) - Scalar(2) * sigma_T(c.record.torsion);
                return same_multiset(multiset(act(c, f), c.tol), {8, 0, 8, -16, 8, -16, 8, 0});
            }),
            floating("diag_dT_minus_2sigma", "diag(0,8,0,-8,0,-8,0,8)", [](const AssertionContext& c) {
                Form f = resolve_dtorsion(c.record) - Scalar(2) * sigma_T(c.record.torsion);
                return same_multiset(multiset(act(c, f), c.tol), {0, 8, 0, -8, 0, -8, 0, 8});
            }),
            floating("non_positive", "3 dT - 2 sigma_T - 2 ||T||^2 is a non-positive endomorphism",
                     [](const AssertionContext& c) {
                         Form f = Scalar(3) * resolve_dtorsion(c.record) - Scalar(2) * sigma_T(c.record.torsion) -
                                  Form::scalar(7, Scalar(2) * norm2(c.record.torsion));
                         std::vector<Scalar> s = multiset(act(c, f), c.tol);
                         return AssertionOutcome{s.back().sign() <= 0, s.back().str(), "<= 0"};
                     }),
            exact("parallel_spinor_annihilated", "T psi_0 = -(1/6)(d omega^3, * omega^3) psi_0",
                  [](const AssertionContext& c) {
                      return truth(parallel_spinor_annihilation(c.record, c.rep, 0).annihilated());
                  }),
        };
    };
    return e;
}

CatalogEntry aloff_wallach_entry() {
    CatalogEntry e;
    e.name = "g2-w3-aloff-wallach";
    e.summary = "W3 G2-structures on the Aloff-Wallach space N(1,1), torsion 4 T5";
    e.parameter = "y";
    e.samples = {frac(1, 3), frac(1, 2), frac(3, 4)};
    e.record = [](const Scalar& y) {
        if (y.sign() <= 0 || y >= Scalar(1) || !y.is_rational())
            throw Error(ErrorKind::InvalidArgument, "y must be a rational in (0, 1)");
        GeometryRecord g;
        g.name = "g2-w3-aloff-wallach";
        g.n = 7;
        g.torsion = Scalar(4) * aloff_wallach_t5(y);
        g.dtorsion = Scalar(4) * aloff_wallach_dt5(y, false);
        g.deltatorsion = Form(7);
        g.scal_g = -(norm2(g.torsion) * frac(1, 2));
        return g;
    };
    e.assertions = [](const Scalar& y) {
        const AloffWallachValues v = aloff_wallach_values(y);
        return std::vector<Assertion>{
            floating("endomorphism_3dT", "this endomorphism has the eigenvalues diag(a,a,b,b,0,c,a,a)",
                     [v](const AssertionContext& c) {
                         const Form& t = c.record.torsion;
                         Form f = Scalar(3) * resolve_dtorsion(c.record) + clifford_mul(t, t) -
                                  Form::scalar(7, Scalar(3) * norm2(t));
                         return same_multiset(multiset(act(c, f), c.tol),
                                              concat({repeat(v.a, 4), repeat(v.b, 2), {0, v.c}}));
                     }),
            floating("endomorphism_dT", "has the eigenvalues diag(a*,a*,b*,b*,0,c*,a*,a*)", [v](const AssertionContext& c) {
                const Form& t = c.record.torsion;
                Form f = resolve_dtorsion(c.record) + clifford_mul(t, t) - Form::scalar(7, norm2(t));
                return same_multiset(multiset(act(c, f), c.tol),
                                     concat({repeat(v.a_star, 4), repeat(v.b_star, 2), {0, v.c_star}}));
            }),
            exact("dT_minus_2sigma_identity", "4 dT5 - 2 sigma = 4 dT5 + (4 T5)^2 - ||4 T5||^2",
                  [](const AssertionContext& c) {
                      const Form& t = c.record.torsion;
                      return same(clifford_mul(t, t) - Form::scalar(7, norm2(t)), -(Scalar(2) * sigma_T(t)));
                  }),
            exact("parallel_spinor_annihilated", "the spinor psi_5 is the nabla-parallel spinor",
                  [](const AssertionContext& c) {
                      return truth(parallel_spinor_annihilation(c.record, c.rep, 0).whole_eigenspace());
                  }),
            exact("printed_dT5_annihilation", "the spinor psi_5 is the nabla-parallel spinor", [y](const AssertionContext& c) {
                // The printed X3456 coefficient does not annihilate psi_5; the record uses the re-derived one.
                GeometryRecord printed = c.record;
                printed.dtorsion = Scalar(4) * aloff_wallach_dt5(y, true);
                return truth(parallel_spinor_annihilation(printed, c.rep, 0).annihilated(), false);
            }),
        };
    };
    return e;
}

/// Simple eigenline of rho(T) on which E = (1/8)(3dT - 2 sigma_T - 2||T||^2) equals -mu^2/4.
std::optional<Scalar> cocalibrated_parallel_eigenvalue(const Form& t, const Form& dt, const SpinRepresentation& rep,
                                                       double tol) {
    const int n = t.dim();
    Form ef = (Scalar(3) * dt - Scalar(2) * sigma_T(t) - Form::scalar(n, Scalar(2) * norm2(t))) * frac(1, 8);
    SpinEndomorphism e = rep.act(ef);
    for (const auto& space : split_by(rep.act(t), tol)) {
        if (space.rank != 1) continue;
        SpinEndomorphism shifted = e + rep.scalar(space.value * space.value * frac(1, 4));
        if ((shifted * space.projector).mat.is_zero()) return space.value;
    }
    return std::nullopt;
}

Form n11_torsion() {
    const Scalar s = Scalar::sqrt3() * frac(1, 6);
    return Scalar(4) * form(7, {{{1, 3, 5}, s}, {{1, 4, 6}, s}, {{2, 4, 5}, -s}, {{2, 3, 6}, s}});
}

Form n11_dtorsion() {
    return Scalar(4) * form(7, {{{2, 3, 5, 7}, -1}, {{2, 4, 6, 7}, -1}, {{1, 4, 5, 7}, -1}, {{1, 3, 6, 7}, 1}});
}

CatalogEntry n11_entry() {
    CatalogEntry e;
    e.name = "g2-n11-cocalibrated";
    e.summary = "cocalibrated G2-structure on N(1,1) with torsion 4T";
    e.record = [](const Scalar&) {
        GeometryRecord g;
        g.name = "g2-n11-cocalibrated";
        g.n = 7;
        g.torsion = n11_torsion();
        g.dtorsion = n11_dtorsion();
        g.deltatorsion = Form(7);
        auto mu0 = cocalibrated_parallel_eigenvalue(g.torsion, *g.dtorsion, SpinRepresentation(7), 1e-9);
        if (!mu0) throw Error(ErrorKind::InsufficientData, "no eigenline of T carries the parallel spinor");
        // (T, omega^3)^2 = mu0^2 since T psi_0 = -(T, omega^3) psi_0.
        g.scal_g = Scalar(2) * *mu0 * *mu0 - norm2(g.torsion) * frac(1, 2);
        return g;
    };
    e.assertions = [](const Scalar&) {
        auto mu0 = [](const AssertionContext& c) {
            auto m = cocalibrated_parallel_eigenvalue(c.record.torsion, *c.record.dtorsion, c.rep, c.tol);
            if (!m) throw Error(ErrorKind::InsufficientData, "no parallel eigenline");
            return *m;
        };
        return std::vector<Assertion>{
            floating("parallel_line", "T psi_0 = -(T, omega^3) psi_0", [mu0](const AssertionContext& c) {
                const Scalar m = mu0(c);
                return AssertionOutcome{m * m == frac(64, 3), m.str(), "+-8/3*s3"};
            }),
            floating("endomorphism_spectrum", "diag(10/3, 10/3, 0, 12, 10/3, 10/3, 10/3, 10/3)", [](const AssertionContext& c) {
                return same_multiset(multiset(zero_order_general(c.record, c.rep), c.tol),
                                     concat({repeat(frac(10, 3), 6), {0, 12}}));
            }),
            floating("zero_on_parallel_line", "the Casimir operator of this G2-structure is non-negative",
                     [mu0](const AssertionContext& c) {
                         AnnihilationReport r = parallel_spinor_annihilation(c.record, c.rep, mu0(c));
                         return AssertionOutcome{r.whole_eigenspace() && r.eigenspace_dim == 1,
                                                 json{{"line_dim", r.eigenspace_dim}, {"annihilated", r.annihilated_dim}},
                                                 json{{"line_dim", 1}, {"annihilated", 1}}};
                     }),
            floating("torsion_kernel", "T psi_0 = -(T, omega^3) psi_0", [](const AssertionContext& c) {
                // ker T is not the parallel line: it is six-dimensional and Omega - Delta_T = 10/3 there.
                return same_multiset(on_torsion_eigenspace(c, zero_order_general(c.record, c.rep), 0),
                                     repeat(frac(10, 3), 6));
            }),
            floating("non_negative", "the Casimir operator of this G2-structure is non-negative", [](const AssertionContext& c) {
                std::vector<Scalar> s = multiset(zero_order_general(c.record, c.rep), c.tol);
                return AssertionOutcome{s.front().sign() >= 0, s.front().str(), ">= 0"};
            }),
        };
    };
    return e;
}

/// Re-derived facts for records flagged naturally reductive.
std::vector<Assertion> consistency_assertions() {
    return {
        exact("consistency/dT_equals_2sigma", "naturally reductive: dT = 2 sigma_T", [](const AssertionContext& c) {
            if (!c.record.lie) return truth(true);
            return same(invariant_d(*c.record.lie, c.record.torsion), Scalar(2) * sigma_T(c.record.torsion));
        }),
        exact("consistency/delta_T_zero", "naturally reductive: delta T = 0", [](const AssertionContext& c) {
            if (!c.record.lie) return truth(true);
            return truth(codifferential(*c.record.lie, c.record.torsion).is_zero());
        }),
    };
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> v = {heisenberg5_entry(),        stiefel_entry(),        sasakian_eta_einstein_entry(),
                                   sasakian_einstein_entry(),  sasakian_scal28_entry(), nearly_kaehler_entry(),
                                   nearly_parallel_entry(),    heisenberg_times_r_entry(), aloff_wallach_entry(),
                                   n11_entry()};
    for (auto& e : v) {
        auto inner_assertions = e.assertions;
        auto record = e.record;
        e.assertions = [inner_assertions, record](const Scalar& p) {
            std::vector<Assertion> a = inner_assertions(p);
            if (record(p).flags.naturally_reductive)
                for (auto& c : consistency_assertions()) a.push_back(std::move(c));
            return a;
        };
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : load_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

SpinEndomorphism named_operator(const GeometryRecord& g, const SpinRepresentation& rep, const std::string& op) {
    if (op == "torsion") return rep.act(g.torsion);
    if (op == "dT") return rep.act(resolve_dtorsion(g));
    if (op == "sigma") return rep.act(sigma_T(g.torsion));
    if (op == "casimir-zero") return zero_order_general(g, rep);
    throw Error(ErrorKind::InvalidArgument, "unknown operator " + op);
}

std::vector<Assertion> assertions_from_expected(const json& expected, int dim) {
    std::vector<Assertion> out;
    for (const auto& [key, value] : expected.items()) {
        const std::string anchor = "user expectation";
        if (key == "torsion" || key == "dtorsion" || key == "sigma_T" || key == "T_squared") {
            const Form want = form_from_json(value, dim);
            out.push_back(exact(key, anchor, [key, want](const AssertionContext& c) {
                const Form& t = c.record.torsion;
                if (key == "torsion") return same(t, want);
                if (key == "dtorsion") return same(resolve_dtorsion(c.record), want);
                if (key == "sigma_T") return same(sigma_T(t), want);
                return same(clifford_mul(t, t), want);
            }));
        } else if (key == "norm_T2" || key == "scal_g" || key == "scal" || key == "kp_constant") {
            const Scalar want = scalar_from_json(value);
            out.push_back(exact(key, anchor, [key, want](const AssertionContext& c) {
                if (key == "norm_T2") return same(norm2(c.record.torsion), want);
                if (key == "scal_g") return same(resolve_scal_g(c.record), want);
                if (key == "scal") return same(scal(c.record), want);
                return same(kp_constant(c.record), want);
            }));
        } else if (key == "torsion_spectrum" || key == "dT_spectrum" || key == "sigma_spectrum" ||
                   key == "casimir_zero_spectrum" || key == "dirac13_shift_spectrum") {
            const std::vector<Scalar> want = multiset_from_json(value);
            out.push_back(floating(key, anchor, [key, want](const AssertionContext& c) {
                SpinEndomorphism m = key == "torsion_spectrum"        ? named_operator(c.record, c.rep, "torsion")
                                     : key == "dT_spectrum"           ? named_operator(c.record, c.rep, "dT")
                                     : key == "sigma_spectrum"        ? named_operator(c.record, c.rep, "sigma")
                                     : key == "casimir_zero_spectrum" ? zero_order_general(c.record, c.rep)
                                                                      : dirac13_shift(c.record, c.rep);
                return same_multiset(multiset(m, c.tol), want);
            }));
        } else if (key == "dT_equals_2sigma" || key == "delta_T_zero" || key == "commutes_with_T" ||
                   key == "parallel_equivalence") {
            if (!value.is_boolean()) throw Error(ErrorKind::Parse, "expected \"" + key + "\" must be a boolean");
            const bool want = value.get<bool>();
            out.push_back(exact(key, anchor, [key, want](const AssertionContext& c) {
                const GeometryRecord& g = c.record;
                if (key == "dT_equals_2sigma") return truth(resolve_dtorsion(g) == Scalar(2) * sigma_T(g.torsion), want);
                if (key == "delta_T_zero") {
                    const bool zero = g.lie ? codifferential(*g.lie, g.torsion).is_zero() : g.deltatorsion.is_zero();
                    return truth(zero, want);
                }
                if (key == "commutes_with_T")
                    return truth(commute(zero_order_general(g, c.rep), c.rep.act(g.torsion)), want);
                return truth(zero_order_general(g, c.rep) == zero_order_parallel(g, c.rep), want);
            }));
        } else {
            throw Error(ErrorKind::Parse, "unknown expected assertion \"" + key + "\"");
        }
    }
    return out;
}

}  // namespace casimir
