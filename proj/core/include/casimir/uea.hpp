#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "casimir/homogeneous.hpp"
#include "casimir/matrix.hpp"
#include "casimir/spinrep.hpp"

namespace casimir {

/// Brackets [g_i, g_j] = sum_k c g_k of a finite generator list (0-based internally).
class LieRelations {
public:
    LieRelations() = default;
    /// Validates antisymmetry and the Jacobi identity; Bracket indices are 1-based.
    LieRelations(int count, const std::vector<Bracket>& brackets);
    static LieRelations from_algebra(const MetricReductiveAlgebra& L);

    int count() const { return count_; }
    const Scalar& c(int i, int j, int k) const { return c_[static_cast<std::size_t>((i * count_ + j) * count_ + k)]; }
    /// Relations of the rescaled generators g'_i = s_i g_i.
    LieRelations rescaled(const std::vector<Scalar>& s) const;

private:
    int count_ = 0;
    std::vector<Scalar> c_;
};

using Word = std::vector<int>;

/// Noncommutative polynomial in the generators with d x d matrix coefficients.
class OperatorPolynomial {
public:
    static constexpr int kMaxDegree = 2;

    OperatorPolynomial() = default;
    explicit OperatorPolynomial(int d) : d_(d) {}
    static OperatorPolynomial constant(const Matrix& a);
    static OperatorPolynomial generator(int g, const Matrix& a);

    int coeff_dim() const { return d_; }
    const std::map<Word, Matrix>& terms() const { return terms_; }
    Matrix coefficient(const Word& w) const;
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_ordered() const;

    void add(const Word& w, const Matrix& a);
    OperatorPolynomial& operator+=(const OperatorPolynomial& o);
    OperatorPolynomial& operator-=(const OperatorPolynomial& o);
    friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) { return a += b; }
    friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) { return a -= b; }
    friend bool operator==(const OperatorPolynomial& a, const OperatorPolynomial& b) = default;

    /// Coefficient-wise P^{-1} a P.
    OperatorPolynomial conjugated(const Matrix& p) const;
    std::string str() const;

private:
    int d_ = 0;
    std::map<Word, Matrix> terms_;
};

/// Chooses which adjacent inversion (position k with w[k] > w[k+1]) to rewrite next.
using RewritePicker = std::function<std::size_t(const Word&, const std::vector<std::size_t>&)>;

/// PBW normal form of an arbitrary sum of words, rewriting g_j g_i -> g_i g_j - [g_i, g_j].
OperatorPolynomial normal_order(int d, const std::vector<std::pair<Word, Matrix>>& raw, const LieRelations& rel,
                                const RewritePicker& pick = {});

OperatorPolynomial multiply(const OperatorPolynomial& p, const OperatorPolynomial& q, const LieRelations& rel,
                            const RewritePicker& pick = {});

/// Throws RelationViolation unless [R_i, R_j] = sum_k c_ij^k R_k.
void check_representation(const std::vector<Matrix>& rep, const LieRelations& rel);

/// sum_w a_w (x) R(w), after checking the relations.
Matrix evaluate_in_representation(const OperatorPolynomial& p, const std::vector<Matrix>& rep, const LieRelations& rel);

/// Scalar operator in the m-generators acting on one spinor component.
struct ReducedOperator {
    int component = 0;
    std::map<Word, ComplexScalar> terms;

    ComplexScalar coefficient(const Word& w) const;
    std::string str() const;
    friend bool operator==(const ReducedOperator& a, const ReducedOperator& b) = default;
};

/// Substitutes isotropy generators by their per-component eigenvalues (isotropy generators must be
/// right-most in every word) and splits a componentwise-diagonal result into scalar operators.
std::vector<ReducedOperator> reduce_to_casimir(const OperatorPolynomial& p,
                                               const std::map<int, std::vector<ComplexScalar>>& quasiperiodicity);

/// -c sum_{i<m} X_i^2 + linear + constant, as a reduced operator (test/catalog helper).
ReducedOperator make_reduced(int component, int m, const ComplexScalar& laplace,
                             const std::map<int, ComplexScalar>& linear, const ComplexScalar& constant);

/// The Stiefel manifold V_{4,2} with its Einstein-Sasakian frame.
struct StiefelData {
    MetricReductiveAlgebra algebra;   // frame f_1..f_5 of m, E_34 spanning h
    LieRelations relations;           // Z_i = f_i / sqrt 3, E_34
    SpinRepresentation rep{5};
    Form torsion;                     // eta ^ d eta
    SpinEndomorphism s;               // sum_i rho(e_i) lift(Lambda(f_i))
    SpinEndomorphism isotropy_lift;   // spin lift of ad(E_34) on m
    OperatorPolynomial dirac13;       // sqrt3 sum rho(e_i) Z_i + S + T/4
    OperatorPolynomial square;
};

MetricReductiveAlgebra stiefel_algebra();
StiefelData build_stiefel_dirac();

/// so(4) defining representation of the Stiefel generators (Z_1..Z_5, E_34).
std::vector<Matrix> stiefel_defining_representation();

struct StiefelComparison {
    Matrix basis;  // columns (psi_+, psi_-, psi_*3, psi_*4)
    Matrix s, m1, m2, m3;
    OperatorPolynomial remainder;  // square minus the four structured parts
    bool relabeled = false;        // psi_+ <-> psi_- swap needed for the printed M_2
};

/// Square expressed in the adapted basis where S takes the printed block form.
StiefelComparison stiefel_square_in_adapted_basis(const StiefelData& data);

struct StiefelReduction {
    std::vector<ReducedOperator> omega;    // components: S_0 (L = +i), S_0 (L = -i), S_4, S_-4
    std::vector<Scalar> torsion_values;    // rho(T) eigenvalue per component
    std::vector<ComplexScalar> isotropy;   // E_34 eigenvalue on functions per component
    Scalar kp;
};

StiefelReduction stiefel_casimir(const StiefelData& data);

}  // namespace casimir
