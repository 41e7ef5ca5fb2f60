#include "casimir/error.hpp"
#include "casimir/uea.hpp"

namespace casimir {

namespace {

// E_ij = e_i e_j^T - e_j e_i^T in gl(4), 1-based.
Matrix elementary(int i, int j) {
    Matrix m(4, 4);
    m(i - 1, j - 1) = 1;
    m(j - 1, i - 1) = -1;
    return m;
}

Scalar inv_sqrt3() { return Scalar(0, mpq_class(1, 3)); }

// Unit vector of a one-dimensional joint eigenspace.
Matrix joint_eigenvector(const std::vector<std::pair<Matrix, ComplexScalar>>& conditions) {
    const int d = conditions.front().first.rows();
    Matrix stacked(d * static_cast<int>(conditions.size()), d);
    for (std::size_t c = 0; c < conditions.size(); ++c) {
        Matrix shifted = conditions[c].first - Matrix::identity(d) * conditions[c].second;
        for (int r = 0; r < d; ++r)
            for (int k = 0; k < d; ++k) stacked(static_cast<int>(c) * d + r, k) = shifted(r, k);
    }
    Matrix ker = nullspace(stacked);
    if (ker.cols() != 1) throw Error(ErrorKind::InvalidArgument, "joint eigenspace is not one-dimensional");
    return ker;
}

}  // namespace

MetricReductiveAlgebra stiefel_algebra() {
    // f = (sqrt3 E13, sqrt3 E23, sqrt3 E14, sqrt3 E24, (3/2) E12), h = E34.
    const Scalar h = Scalar::fraction(3, 2);
    return MetricReductiveAlgebra(5, 1,
                                  {{1, 2, {{5, -2}}},
                                   {1, 3, {{6, -3}}},
                                   {1, 5, {{2, h}}},
                                   {1, 6, {{3, 1}}},
                                   {2, 4, {{6, -3}}},
                                   {2, 5, {{1, -h}}},
                                   {2, 6, {{4, 1}}},
                                   {3, 4, {{5, -2}}},
                                   {3, 5, {{4, h}}},
                                   {3, 6, {{1, -1}}},
                                   {4, 5, {{3, -h}}},
                                   {4, 6, {{2, -1}}}});
}

std::vector<Matrix> stiefel_defining_representation() {
    const ComplexScalar half_r3(Scalar(0, mpq_class(1, 2)));
    return {elementary(1, 3), elementary(2, 3), elementary(1, 4), elementary(2, 4), elementary(1, 2) * half_r3,
            elementary(3, 4)};
}

StiefelData build_stiefel_dirac() {
    StiefelData data;
    data.algebra = stiefel_algebra();
    const int n = 5;
    std::vector<Scalar> scale(static_cast<std::size_t>(n), inv_sqrt3());
    scale.push_back(1);
    data.relations = LieRelations::from_algebra(data.algebra).rescaled(scale);

    const Form eta = Form::basis(n, 5);
    data.torsion = wedge(eta, invariant_d(data.algebra, eta));

    const Curvature cv = nomizu_curvature(data.algebra);
    const auto& gens = data.rep.generators();
    SpinEndomorphism s{n, Matrix(4, 4)};
    for (int i = 0; i < n; ++i) s += gens[static_cast<std::size_t>(i)] * data.rep.lift(cv.lambda[static_cast<std::size_t>(i)]);
    data.s = s;

    SoMatrix ad(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) ad[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = data.algebra.c(n, j, k);
    data.isotropy_lift = data.rep.lift(ad);

    const ComplexScalar r3(Scalar::sqrt3());
    OperatorPolynomial d(4);
    for (int i = 0; i < n; ++i) d += OperatorPolynomial::generator(i, gens[static_cast<std::size_t>(i)].mat * r3);
    d += OperatorPolynomial::constant(data.s.mat + data.rep.act(data.torsion).mat * ComplexScalar(Scalar::fraction(1, 4)));
    data.dirac13 = d;
    data.square = multiply(d, d, data.relations);
    return data;
}

StiefelComparison stiefel_square_in_adapted_basis(const StiefelData& data) {
    const Matrix& t = data.rep.act(data.torsion).mat;
    const Matrix& l = data.isotropy_lift.mat;
    const Matrix& s = data.s.mat;
    const ComplexScalar i = ComplexScalar::i();
    // psi_+ carries E_34 = +i on functions, i.e. isotropy lift -i.
    Matrix plus = joint_eigenvector({{t, 0}, {l, -i}});
    Matrix minus = joint_eigenvector({{t, 0}, {l, i}});
    Matrix kerl = nullspace(l);
    if (kerl.cols() != 2) throw Error(ErrorKind::InvalidArgument, "isotropy lift kernel is not two-dimensional");
    const ComplexScalar w_scale = ComplexScalar(Scalar{}, Scalar::fraction(2, 5));
    Matrix w3;
    for (const Matrix& cand : {column(kerl, 0), column(kerl, 1), column(kerl, 0) + column(kerl, 1)}) {
        if (rank(hstack({cand, s * cand})) == 2) {
            w3 = cand;
            break;
        }
    }
    Matrix w4 = s * w3 * w_scale;

    StiefelComparison out;
    for (bool swap : {false, true}) {
        out.basis = swap ? hstack({minus, plus, w3, w4}) : hstack({plus, minus, w3, w4});
        OperatorPolynomial sq = data.square.conjugated(out.basis);
        out.s = inverse(out.basis) * s * out.basis;
        out.m1 = sq.coefficient({});
        out.m2 = sq.coefficient({5});
        out.m3 = sq.coefficient({4});
        OperatorPolynomial structured(4);
        for (int g = 0; g < 5; ++g) structured.add({g, g}, Matrix::identity(4) * ComplexScalar(-3));
        structured.add({}, out.m1);
        structured.add({5}, out.m2);
        structured.add({4}, out.m3);
        out.remainder = sq - structured;
        out.relabeled = swap;
        // Printed sign pattern: M_2 = 6i diag(1, -1, 0, 0).
        if (out.m2(0, 0).im().sign() > 0) return out;
    }
    return out;
}

StiefelReduction stiefel_casimir(const StiefelData& data) {
    const Matrix& t = data.rep.act(data.torsion).mat;
    const Matrix& l = data.isotropy_lift.mat;
    const ComplexScalar i = ComplexScalar::i();
    StiefelReduction out;
    Matrix basis = hstack({joint_eigenvector({{t, 0}, {l, -i}}), joint_eigenvector({{t, 0}, {l, i}}),
                           joint_eigenvector({{t, 4}}), joint_eigenvector({{t, -4}})});
    out.torsion_values = {0, 0, 4, -4};
    // Functions with values in the spin module satisfy E_34 f = -L f.
    out.isotropy = {i, -i, 0, 0};
    for (int c = 0; c < 4; ++c) {
        Matrix v = column(basis, c);
        Matrix tv = t * v;
        Matrix lv = l * v;
        if (!(tv == v * ComplexScalar(out.torsion_values[static_cast<std::size_t>(c)])) ||
            !(lv == v * -out.isotropy[static_cast<std::size_t>(c)])) {
            throw Error(ErrorKind::InvalidArgument, "component basis is not adapted to T and the isotropy lift");
        }
    }
    out.kp = nomizu_curvature(data.algebra).scal * Scalar::fraction(1, 8) + norm2(data.torsion) * Scalar::fraction(1, 16);
    OperatorPolynomial omega = data.square.conjugated(basis);
    omega.add({}, Matrix::identity(4) * ComplexScalar(-out.kp));
    out.omega = reduce_to_casimir(omega, {{5, out.isotropy}});
    return out;
}

}  // namespace casimir
