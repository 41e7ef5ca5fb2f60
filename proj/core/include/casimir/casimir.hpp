#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/homogeneous.hpp"
#include "casimir/spinrep.hpp"

namespace casimir {

struct GeometryFlags {
    bool parallel_torsion = false;
    bool naturally_reductive = false;
};

/// Geometric data of a triple (M^n, g, nabla) at one point, in an orthonormal frame.
struct GeometryRecord {
    std::string name;
    int n = 0;
    Form torsion;
    std::optional<Form> dtorsion;  // empty: derive from lie
    Form deltatorsion;
    std::optional<MetricReductiveAlgebra> lie;
    std::optional<Scalar> scal_g;  // empty: derive from lie
    GeometryFlags flags;

    void validate() const;
};

Form resolve_dtorsion(const GeometryRecord& g);
Scalar resolve_scal_g(const GeometryRecord& g);
/// Scal = Scal^g - (3/2)||T||^2.
Scalar scal(const GeometryRecord& g);

/// (1/8) rho(3dT - 2 sigma_T + 2 delta T) + (1/8) Scal.
SpinEndomorphism zero_order_general(const GeometryRecord& g, const SpinRepresentation& rep);
/// (1/16)(2 Scal^g + ||T||^2) - (1/4) rho(T)^2; parallel torsion only.
SpinEndomorphism zero_order_parallel(const GeometryRecord& g, const SpinRepresentation& rep);
/// Omega - (D^{1/3})^2 = (1/8) rho(dT - 2 sigma_T) + (1/4) rho(delta T) - (1/8) Scal^g - (1/16) ||T||^2.
SpinEndomorphism dirac13_shift(const GeometryRecord& g, const SpinRepresentation& rep);
/// (1/8) Scal^g + (1/16) ||T||^2; naturally reductive only.
Scalar kp_constant(const GeometryRecord& g);

struct SpectralBoundReport {
    std::string condition;
    Scalar left;
    Scalar right;
    bool holds = false;
};

/// 2 Scal^g <= -||T||^2, and 2 Scal^g >= 4 max spec(T^2) - ||T||^2.
std::pair<SpectralBoundReport, SpectralBoundReport> nonnegativity_conditions(const GeometryRecord& g,
                                                                            const SpinRepresentation& rep);
/// max mu^2 >= (4n/(n-1)) Scal_min.
SpectralBoundReport friedrich_bound(int n, const Scalar& scal_min, const std::vector<Scalar>& t_spec);

struct G2Torsion {
    Form torsion;
    Scalar pairing;  // (d omega, * omega)
    Scalar scal_g;
    bool scal_identity = false;  // Scal^g = 2 (T, omega)^2 - ||T||^2 / 2
};

G2Torsion g2_characteristic_torsion(const Form& omega3, const Form& d_omega3);
/// The standard G2 3-form e127 + e135 - e146 - e236 - e245 + e347 + e567.
Form standard_g2_form();

struct AnnihilationReport {
    int eigenspace_dim = 0;
    int annihilated_dim = 0;  // dim(ker Z cap E_mu0)
    bool annihilated() const { return annihilated_dim > 0; }
    bool whole_eigenspace() const { return annihilated_dim == eigenspace_dim && eigenspace_dim > 0; }
};

/// Kernel of zero_order_general on the mu0-eigenspace of rho(T).
AnnihilationReport parallel_spinor_annihilation(const GeometryRecord& g, const SpinRepresentation& rep,
                                                const Scalar& mu0);

struct GapReport {
    bool feasible = false;
    Scalar window_lo;   // exact mu-window of {lambda^2 <= mu, 4(mu + lambda) = 3}
    Scalar window_hi;
    Scalar mu_star;     // minimizer of mu - sqrt(mu) - 3/4 over mu >= mu_min
    Scalar rational_part;
    Scalar radicand;    // gap = rational_part - sqrt(radicand)
    double gap = 0;
    std::string gap_text() const;
};

GapReport einstein_sasakian_gap(const Scalar& mu_min);

/// Exact square root in Q(sqrt 3) of q^2 or 3 q^2 for rational inputs; empty otherwise.
std::optional<Scalar> exact_sqrt(const Scalar& s);

struct Interval {
    Scalar lo;
    Scalar hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Solutions lambda of (lambda + mu/4)^2 <= kp and |lambda| >= sqrt(n Scal^g / (4(n-1))).
std::vector<Interval> kernel_admissible_eigenvalues(int n, const Scalar& scal_g, const Scalar& kp, const Scalar& mu);

}  // namespace casimir
