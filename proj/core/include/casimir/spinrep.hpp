#pragma once

#include <vector>

#include "casimir/clifford.hpp"
#include "casimir/matrix.hpp"

namespace casimir {

/// Endomorphism of the spin module Delta_n.
struct SpinEndomorphism {
    int n = 0;
    Matrix mat;

    int size() const { return mat.rows(); }
    bool is_hermitian() const { return mat.is_hermitian(); }
    SpinEndomorphism adjoint() const { return {n, mat.adjoint()}; }

    SpinEndomorphism& operator+=(const SpinEndomorphism& o);
    SpinEndomorphism& operator-=(const SpinEndomorphism& o);
    friend SpinEndomorphism operator+(SpinEndomorphism a, const SpinEndomorphism& b) { return a += b; }
    friend SpinEndomorphism operator-(SpinEndomorphism a, const SpinEndomorphism& b) { return a -= b; }
    friend SpinEndomorphism operator*(const SpinEndomorphism& a, const SpinEndomorphism& b);
    friend SpinEndomorphism operator*(const ComplexScalar& c, SpinEndomorphism a) {
        a.mat *= c;
        return a;
    }
    friend bool operator==(const SpinEndomorphism& a, const SpinEndomorphism& b) = default;
};

/// Spin representation rho : Cl(n) -> End(Delta_n), 3 <= n <= 8.
///
/// Generators are i times the tensor-product gamma matrices. For odd n the
/// last generator is negated when needed so that rho(e_1...e_n) = +Id for
/// n = 3 mod 4 and +i Id for n = 1 mod 4.
class SpinRepresentation {
public:
    explicit SpinRepresentation(int n);

    int n() const { return n_; }
    int spinor_dim() const { return 1 << (n_ / 2); }
    const std::vector<SpinEndomorphism>& generators() const { return gens_; }
    SpinEndomorphism identity() const { return {n_, Matrix::identity(spinor_dim())}; }
    SpinEndomorphism scalar(const ComplexScalar& c) const { return c * identity(); }

    SpinEndomorphism act(const CliffordElement& a) const;
    /// Spin lift of A in so(n): the 2-form (1/2) sum_{j<k} <A e_j, e_k> e_j e_k.
    CliffordElement lift_form(const std::vector<std::vector<Scalar>>& a) const;
    SpinEndomorphism lift(const std::vector<std::vector<Scalar>>& a) const { return act(lift_form(a)); }

private:
    struct Monomial {
        std::vector<int> perm;   // row r has its entry in column perm[r]
        std::vector<int> phase;  // entry is i^phase[r]
    };
    Monomial blade_monomial(IndexBlade b) const;

    int n_;
    std::vector<Monomial> mono_;
    std::vector<SpinEndomorphism> gens_;
};

std::vector<SpinEndomorphism> build_generators(int n);

bool commute(const SpinEndomorphism& a, const SpinEndomorphism& b);

struct NumericSpectrum {
    std::vector<double> values;  // ascending
    double residual = 0;         // max ||m v - lambda v||
};

/// Floating eigenvalues of an exactly Hermitian endomorphism.
NumericSpectrum spectrum(const SpinEndomorphism& m, double tol = 1e-9);
NumericSpectrum spectrum(const Matrix& m, double tol = 1e-9);

/// Snaps a float to a + b sqrt 3 with small denominators; candidates nearest first.
std::vector<Scalar> snap_candidates(double x, double tol = 1e-7);

/// Exact spectrum: numeric eigenvalues snapped and confirmed by exact ranks.
std::vector<Scalar> exact_spectrum(const Matrix& m, double tol = 1e-9);
inline std::vector<Scalar> exact_spectrum(const SpinEndomorphism& m, double tol = 1e-9) {
    return exact_spectrum(m.mat, tol);
}

struct Eigenspace {
    Scalar value;
    int rank = 0;
    SpinEndomorphism projector;
};

/// Exact orthogonal spectral projectors of a Hermitian endomorphism, ascending eigenvalues.
std::vector<Eigenspace> split_by(const SpinEndomorphism& t, double tol = 1e-9);

/// Eigenvalues of m on the range of the projector p (m must commute with p).
std::vector<Scalar> restricted_spectrum(const SpinEndomorphism& m, const SpinEndomorphism& p, double tol = 1e-9);

}  // namespace casimir
