#include "casimir/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

void GeometryRecord::validate() const {
    if (n < 3 || n > kMaxDim) throw Error(ErrorKind::InvalidArgument, name + ": dimension out of range");
    if (torsion.dim() != n) throw Error(ErrorKind::DimensionMismatch, name + ": torsion dimension differs from n");
    if (!torsion.is_homogeneous(3)) throw Error(ErrorKind::InvalidArgument, name + ": torsion must be a 3-form");
    if (dtorsion && (dtorsion->dim() != n || !dtorsion->is_homogeneous(4))) {
        throw Error(ErrorKind::InvalidArgument, name + ": dT must be a 4-form in dimension n");
    }
    if (deltatorsion.dim() != n || !deltatorsion.is_homogeneous(2)) {
        throw Error(ErrorKind::InvalidArgument, name + ": delta T must be a 2-form in dimension n");
    }
    if (lie && lie->dim_m() != n) throw Error(ErrorKind::DimensionMismatch, name + ": Lie data dim_m differs from n");
    if (flags.naturally_reductive && !flags.parallel_torsion) {
        throw Error(ErrorKind::InvalidArgument, name + ": naturally reductive records must have parallel torsion");
    }
}

Form resolve_dtorsion(const GeometryRecord& g) {
    if (g.dtorsion) return *g.dtorsion;
    if (!g.lie) throw Error(ErrorKind::InsufficientData, g.name + ": insufficient data, dT needs Lie data");
    return invariant_d(*g.lie, g.torsion);
}

Scalar resolve_scal_g(const GeometryRecord& g) {
    if (g.scal_g) return *g.scal_g;
    if (!g.lie) throw Error(ErrorKind::InsufficientData, g.name + ": insufficient data, Scal^g needs Lie data");
    return nomizu_curvature(*g.lie).scal;
}

Scalar scal(const GeometryRecord& g) { return resolve_scal_g(g) - Scalar::fraction(3, 2) * norm2(g.torsion); }

namespace {

void require_rep(const GeometryRecord& g, const SpinRepresentation& rep) {
    if (rep.n() != g.n) throw Error(ErrorKind::DimensionMismatch, g.name + ": representation dimension mismatch");
}

}  // namespace

SpinEndomorphism zero_order_general(const GeometryRecord& g, const SpinRepresentation& rep) {
    require_rep(g, rep);
    Form f = Scalar(3) * resolve_dtorsion(g) - Scalar(2) * sigma_T(g.torsion) + Scalar(2) * g.deltatorsion;
    f += Form::scalar(g.n, scal(g));
    return rep.act(f * Scalar::fraction(1, 8));
}

SpinEndomorphism zero_order_parallel(const GeometryRecord& g, const SpinRepresentation& rep) {
    if (!g.flags.parallel_torsion) throw Error(ErrorKind::InvalidArgument, g.name + ": torsion is not declared parallel");
    require_rep(g, rep);
    Scalar c = (Scalar(2) * resolve_scal_g(g) + norm2(g.torsion)) * Scalar::fraction(1, 16);
    SpinEndomorphism t = rep.act(g.torsion);
    return rep.scalar(c) - ComplexScalar(Scalar::fraction(1, 4)) * (t * t);
}

SpinEndomorphism dirac13_shift(const GeometryRecord& g, const SpinRepresentation& rep) {
    require_rep(g, rep);
    Form f = (resolve_dtorsion(g) - Scalar(2) * sigma_T(g.torsion)) * Scalar::fraction(1, 8) +
             g.deltatorsion * Scalar::fraction(1, 4);
    f -= Form::scalar(g.n, resolve_scal_g(g) * Scalar::fraction(1, 8) + norm2(g.torsion) * Scalar::fraction(1, 16));
    return rep.act(f);
}

Scalar kp_constant(const GeometryRecord& g) {
    if (!g.flags.naturally_reductive) throw Error(ErrorKind::InvalidArgument, g.name + ": not declared naturally reductive");
    return resolve_scal_g(g) * Scalar::fraction(1, 8) + norm2(g.torsion) * Scalar::fraction(1, 16);
}

std::pair<SpectralBoundReport, SpectralBoundReport> nonnegativity_conditions(const GeometryRecord& g,
                                                                            const SpinRepresentation& rep) {
    const Scalar s2 = Scalar(2) * resolve_scal_g(g);
    const Scalar t2 = norm2(g.torsion);
    SpectralBoundReport first{"2 Scal^g <= -||T||^2", s2, -t2, s2 <= -t2};
    SpinEndomorphism t = rep.act(g.torsion);
    std::vector<Scalar> spec = exact_spectrum(ComplexScalar(4) * (t * t));
    Scalar rhs = spec.back() - t2;
    SpectralBoundReport second{"2 Scal^g >= 4 T^2 - ||T||^2", s2, rhs, s2 >= rhs};
    return {first, second};
}

SpectralBoundReport friedrich_bound(int n, const Scalar& scal_min, const std::vector<Scalar>& t_spec) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "friedrich_bound needs n >= 2");
    Scalar best;
    for (const auto& mu : t_spec) best = std::max(best, mu * mu);
    Scalar rhs = Scalar::fraction(4L * n, n - 1) * scal_min;
    return {"max mu^2 >= (4n/(n-1)) Scal_min", best, rhs, best >= rhs};
}

Form standard_g2_form() {
    Form w(7);
    w.add({1, 2, 7}, 1);
    w.add({1, 3, 5}, 1);
    w.add({1, 4, 6}, -1);
    w.add({2, 3, 6}, -1);
    w.add({2, 4, 5}, -1);
    w.add({3, 4, 7}, 1);
    w.add({5, 6, 7}, 1);
    return w;
}

G2Torsion g2_characteristic_torsion(const Form& omega3, const Form& d_omega3) {
    if (omega3.dim() != 7 || d_omega3.dim() != 7) throw Error(ErrorKind::DimensionMismatch, "G2 structures live in n = 7");
    G2Torsion out;
    out.pairing = inner(d_omega3, hodge_star(omega3));
    out.torsion = -hodge_star(d_omega3) + omega3 * (out.pairing * Scalar::fraction(1, 6));
    const Scalar t2 = norm2(out.torsion);
    out.scal_g = out.pairing * out.pairing * Scalar::fraction(1, 18) - t2 * Scalar::fraction(1, 2);
    const Scalar to = inner(out.torsion, omega3);
    out.scal_identity = out.scal_g == Scalar(2) * to * to - t2 * Scalar::fraction(1, 2);
    return out;
}

AnnihilationReport parallel_spinor_annihilation(const GeometryRecord& g, const SpinRepresentation& rep,
                                                const Scalar& mu0) {
    SpinEndomorphism t = rep.act(g.torsion);
    const int d = t.size();
    Matrix shifted = t.mat - Matrix::identity(d) * ComplexScalar(mu0);
    AnnihilationReport r;
    r.eigenspace_dim = d - rank(shifted);
    if (r.eigenspace_dim == 0) {
        throw Error(ErrorKind::InvalidArgument, g.name + ": declared eigenvalue " + mu0.str() + " is not in spec rho(T)");
    }
    Matrix z = zero_order_general(g, rep).mat;
    Matrix stacked(2 * d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            stacked(i, j) = shifted(i, j);
            stacked(d + i, j) = z(i, j);
        }
    r.annihilated_dim = d - rank(stacked);
    return r;
}

std::optional<Scalar> exact_sqrt(const Scalar& s) {
    if (!s.is_rational() || s.sign() < 0) return std::nullopt;
    auto rational_root = [](const mpq_class& q) -> std::optional<mpq_class> {
        mpz_class n = q.get_num();
        mpz_class d = q.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        return mpq_class(sqrt(n), sqrt(d));
    };
    if (auto r = rational_root(s.rat())) return Scalar(*r);
    if (auto r = rational_root(mpq_class(s.rat() / 3))) return Scalar(0, *r);
    return std::nullopt;
}

std::string GapReport::gap_text() const {
    std::ostringstream os;
    if (auto r = exact_sqrt(radicand)) {
        os << (rational_part - *r).str();
    } else {
        os << rational_part.str() << " - sqrt(" << radicand.str() << ")";
    }
    return os.str();
}

GapReport einstein_sasakian_gap(const Scalar& mu_min) {
    if (!mu_min.is_rational() || mu_min.sign() < 0) {
        throw Error(ErrorKind::InvalidArgument, "mu_min must be a nonnegative rational");
    }
    GapReport r;
    // lambda = 3/4 - mu and lambda^2 <= mu  <=>  mu^2 - (5/2) mu + 9/16 <= 0.
    r.window_lo = Scalar::fraction(1, 4);
    r.window_hi = Scalar::fraction(9, 4);
    r.feasible = mu_min <= r.window_hi;
    // mu - sqrt(mu) is increasing for mu >= 1/4.
    r.mu_star = std::max(mu_min, r.window_lo);
    r.rational_part = r.mu_star - Scalar::fraction(3, 4);
    r.radicand = r.mu_star;
    r.gap = r.rational_part.to_double() - std::sqrt(r.radicand.to_double());
    return r;
}

std::vector<Interval> kernel_admissible_eigenvalues(int n, const Scalar& scal_g, const Scalar& kp, const Scalar& mu) {
    auto root = [](const Scalar& v, const char* what) {
        auto r = exact_sqrt(v);
        if (!r) throw Error(ErrorKind::InvalidArgument, std::string(what) + " has no exact square root: " + v.str());
        return *r;
    };
    if (kp.sign() < 0) return {};
    const Scalar center = -mu * Scalar::fraction(1, 4);
    const Scalar radius = root(kp, "kp");
    Scalar bound;
    if (scal_g.sign() > 0) bound = root(Scalar(n) * scal_g / Scalar(4L * (n - 1)), "Friedrich bound");
    const Scalar lo = center - radius;
    const Scalar hi = center + radius;
    std::vector<Interval> out;
    if (lo <= -bound) out.push_back({lo, std::min(hi, -bound)});
    if (hi >= bound) {
        Interval iv{std::max(lo, bound), hi};
        if (bound.is_zero() && !out.empty()) {
            out.back().hi = hi;  // the two pieces overlap when the bound is zero
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

}  // namespace casimir
