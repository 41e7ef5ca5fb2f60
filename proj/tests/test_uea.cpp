#include <doctest.h>

#include "casimir/error.hpp"
#include "casimir/uea.hpp"

using namespace casimir;

namespace {

// su(2): [g0, g1] = g2, [g1, g2] = g0, [g2, g0] = g1.
LieRelations su2() { return LieRelations(3, {{1, 2, {{3, 1}}}, {2, 3, {{1, 1}}}, {3, 1, {{2, 1}}}}); }

// g_k -> (1/2) i sigma_k up to sign, realized as real 2x2 complex matrices.
std::vector<Matrix> su2_rep() {
    const ComplexScalar i = ComplexScalar::i();
    const ComplexScalar h(Scalar::fraction(1, 2));
    Matrix a(2, 2), b(2, 2), c(2, 2);
    a(0, 1) = -(h * i);
    a(1, 0) = -(h * i);
    b(0, 1) = -h;
    b(1, 0) = h;
    c(0, 0) = -(h * i);
    c(1, 1) = h * i;
    return {a, b, c};
}

Matrix one() { return Matrix::identity(1); }

}  // namespace

TEST_CASE("relations are validated") {
    CHECK_NOTHROW(su2());
    try {
        LieRelations(3, {{1, 2, {{3, 1}}}, {2, 3, {{1, 1}}}, {1, 3, {{1, 1}}}});
        FAIL("Jacobi violation accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RelationViolation);
    }
    CHECK_THROWS_AS(LieRelations(2, {{1, 3, {{1, 1}}}}), Error);
}

TEST_CASE("the su(2) matrices satisfy the relations") {
    CHECK_NOTHROW(check_representation(su2_rep(), su2()));
    auto bad = su2_rep();
    std::swap(bad[0], bad[1]);
    CHECK_THROWS_AS(check_representation(bad, su2()), Error);
}

TEST_CASE("normal ordering rewrites inversions") {
    const LieRelations rel = su2();
    // g1 g0 = g0 g1 - g2.
    OperatorPolynomial p = normal_order(1, {{{1, 0}, one()}}, rel);
    OperatorPolynomial expected(1);
    expected.add({0, 1}, one());
    expected.add({2}, Matrix::identity(1) * ComplexScalar(-1));
    CHECK(p == expected);
    CHECK(p.is_ordered());
    CHECK(p.degree() == 2);
}

TEST_CASE("products agree with the representation") {
    const LieRelations rel = su2();
    const auto rep = su2_rep();
    const OperatorPolynomial x = OperatorPolynomial::generator(2, one()) + OperatorPolynomial::generator(0, one());
    const OperatorPolynomial y = OperatorPolynomial::generator(1, one()) + OperatorPolynomial::constant(one());
    const OperatorPolynomial xy = multiply(x, y, rel);
    CHECK(xy.is_ordered());
    CHECK(evaluate_in_representation(xy, rep, rel) ==
          evaluate_in_representation(x, rep, rel) * evaluate_in_representation(y, rep, rel));
}

TEST_CASE("the quadratic Casimir is central") {
    const LieRelations rel = su2();
    OperatorPolynomial cas(1);
    for (int k = 0; k < 3; ++k) cas.add({k, k}, one());
    for (int k = 0; k < 3; ++k) {
        const OperatorPolynomial g = OperatorPolynomial::generator(k, one());
        // Degree bound is two, so compare the commutator through the representation.
        const Matrix c = evaluate_in_representation(cas, su2_rep(), rel);
        const Matrix r = evaluate_in_representation(g, su2_rep(), rel);
        CHECK(c * r == r * c);
    }
    CHECK(evaluate_in_representation(cas, su2_rep(), rel) == Matrix::identity(2) * ComplexScalar(Scalar::fraction(-3, 4)));
}

TEST_CASE("degree overflow is reported") {
    const LieRelations rel = su2();
    const OperatorPolynomial x = OperatorPolynomial::generator(0, one());
    const OperatorPolynomial x2 = multiply(x, x, rel);
    try {
        (void)multiply(x2, x, rel);
        FAIL("degree 3 product accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeOverflow);
    }
    CHECK_THROWS_AS((void)normal_order(1, {{{0, 1, 2}, one()}}, rel), Error);
}

TEST_CASE("zero polynomial reduces to nothing") {
    const OperatorPolynomial zero(2);
    CHECK(zero.is_zero());
    CHECK(reduce_to_casimir(zero, {}).empty());
    OperatorPolynomial cancel(1);
    cancel.add({0}, one());
    cancel.add({0}, Matrix::identity(1) * ComplexScalar(-1));
    CHECK(cancel.is_zero());
}

TEST_CASE("reduced operators print compactly") {
    const ReducedOperator r = make_reduced(0, 5, -3, {{4, ComplexScalar(Scalar(0), Scalar::sqrt3())}},
                                           ComplexScalar(Scalar::fraction(-3, 4)));
    CHECK(r.str() == "-3*sum(X^2) - 3/4 + s3*i*X5");
    CHECK(r.coefficient({0, 0}) == ComplexScalar(-3));
    CHECK(r.coefficient({1}) == ComplexScalar());
}

TEST_CASE("Stiefel square structure") {
    const StiefelData data = build_stiefel_dirac();
    CHECK(data.square.is_ordered());
    CHECK(data.square.degree() == 2);
    const Matrix minus3 = Matrix::identity(4) * ComplexScalar(-3);
    for (int k = 0; k < 5; ++k) CHECK(data.square.coefficient({k, k}) == minus3);
    const StiefelComparison cmp = stiefel_square_in_adapted_basis(data);
    CHECK(cmp.remainder.is_zero());
    CHECK(cmp.relabeled);
    const StiefelReduction red = stiefel_casimir(data);
    REQUIRE(red.omega.size() == 4);
    CHECK(red.kp == Scalar(3));
    CHECK(red.omega[0].str() == "-3*sum(X^2) + 3");
    CHECK(red.omega[1].terms == red.omega[0].terms);
}
