#pragma once

#include <array>
#include <utility>
#include <vector>

#include "casimir/exterior.hpp"

namespace casimir {

/// One bracket [g_i, g_j] = sum c g_k, 1-based over the combined basis (m first, then h).
struct Bracket {
    int i = 0;
    int j = 0;
    std::vector<std::pair<int, Scalar>> out;
};

/// Reductive Lie algebra g = h + m with an orthonormal frame of m.
class MetricReductiveAlgebra {
public:
    MetricReductiveAlgebra() = default;
    /// Validates antisymmetry, Jacobi, [h,h] in h and [h,m] in m.
    MetricReductiveAlgebra(int dim_m, int dim_h, const std::vector<Bracket>& brackets);

    int dim_m() const { return dim_m_; }
    int dim_h() const { return dim_h_; }
    int total() const { return dim_m_ + dim_h_; }
    /// Structure constant c_{ij}^k, 0-based.
    const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    std::vector<Bracket> brackets() const;

private:
    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>((i * total() + j) * total() + k);
    }
    int dim_m_ = 0;
    int dim_h_ = 0;
    std::vector<Scalar> c_;
};

/// Value of a p-form on frame vectors (0-based, any order, repeats allowed).
Scalar evaluate(const Form& a, const std::vector<int>& args);

/// T(X,Y,Z) = -g([X,Y]_m, Z); throws NotNaturallyReductive when not totally skew.
Form canonical_torsion(const MetricReductiveAlgebra& L);
/// Chevalley-Eilenberg differential of an invariant form, brackets projected to m.
Form invariant_d(const MetricReductiveAlgebra& L, const Form& a);
/// delta = (-1)^{n(p+1)+1} * d * on degree p.
Form codifferential(const MetricReductiveAlgebra& L, const Form& a);
/// Basis of the h-invariant p-forms on m.
std::vector<Form> invariant_forms(const MetricReductiveAlgebra& L, int p);

using SoMatrix = std::vector<std::vector<Scalar>>;

struct Curvature {
    int n = 0;
    /// Levi-Civita Nomizu maps: lambda[i][k][j] = <Lambda(X_i) X_j, X_k>.
    std::vector<SoMatrix> lambda;
    /// r[i][j][k][l] = g(R(X_i,X_j)X_k, X_l).
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> r;
    SoMatrix ricci;
    Scalar scal;
};

Curvature nomizu_curvature(const MetricReductiveAlgebra& L);

}  // namespace casimir
