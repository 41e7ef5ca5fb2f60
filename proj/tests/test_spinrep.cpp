#include <doctest.h>

#include <random>

#include "casimir/casimir.hpp"
#include "casimir/error.hpp"
#include "oracles.hpp"

using namespace casimir;

TEST_CASE("generators satisfy the Clifford relations") {
    for (int n = 3; n <= 8; ++n) {
        SpinRepresentation rep(n);
        CHECK(rep.spinor_dim() == (1 << (n / 2)));
        const auto& g = rep.generators();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SpinEndomorphism anti = g[i] * g[j] + g[j] * g[i];
                CHECK(anti == rep.scalar(i == j ? -2 : 0));
            }
        for (const auto& e : g) CHECK(e.mat.is_skew_hermitian());
    }
}

TEST_CASE("volume element convention in odd dimensions") {
    CHECK(SpinRepresentation(3).act(Form::volume(3)) == SpinRepresentation(3).identity());
    CHECK(SpinRepresentation(7).act(Form::volume(7)) == SpinRepresentation(7).identity());
    SpinRepresentation r5(5);
    CHECK(r5.act(Form::volume(5)) == r5.scalar(ComplexScalar::i()));
}

TEST_CASE("act is an algebra homomorphism and respects the adjoint") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 24; ++trial) {
        const int n = 3 + trial % 6;
        SpinRepresentation rep(n);
        const Form a = oracle::random_mixed(rng, n, 4, true), b = oracle::random_mixed(rng, n, 4);
        CHECK(rep.act(clifford_mul(a, b)) == rep.act(a) * rep.act(b));
        // rho(e_I)^* = (-1)^{|I|} rho(reverse(e_I)) for real coefficients.
        Form adj(n);
        const Form rev = reverse(a);
        for (const auto& [blade, c] : rev.terms()) adj.add(blade, blade.degree() % 2 ? -c : c);
        CHECK(rep.act(a).adjoint() == rep.act(adj));
        CHECK(rep.act(oracle::random_form(rng, n, 3)).is_hermitian());
        CHECK(rep.act(oracle::random_form(rng, n, 4)).is_hermitian());
    }
}

TEST_CASE("G2 form spectrum") {
    SpinRepresentation rep(7);
    std::vector<Scalar> spec = exact_spectrum(rep.act(standard_g2_form()));
    std::vector<Scalar> expected(7, Scalar(1));
    expected.insert(expected.begin(), Scalar(-7));
    CHECK(spec == expected);
}

TEST_CASE("Sasakian torsion eigenspaces") {
    SpinRepresentation rep(5);
    Form t(5);
    t.add({1, 2, 5}, 2);
    t.add({3, 4, 5}, 2);
    const auto spaces = split_by(rep.act(t));
    REQUIRE(spaces.size() == 3);
    CHECK(spaces[0].value == Scalar(-4));
    CHECK(spaces[1].rank == 2);
    const SpinEndomorphism e = rep.act(Form::blade(5, {1, 2, 3, 4}));
    CHECK(restricted_spectrum(e, spaces[1].projector) == std::vector<Scalar>{1, 1});
    CHECK(restricted_spectrum(e, spaces[2].projector) == std::vector<Scalar>{-1});
}

TEST_CASE("snapping recognizes Q(sqrt 3) and rejects other irrationals") {
    const auto c = snap_candidates(8.0 * std::sqrt(3.0) / 3.0);
    REQUIRE(!c.empty());
    CHECK(c.front() == Scalar(0, mpq_class(8, 3)));
    CHECK(snap_candidates(-5.0 / 2.0).front() == Scalar::fraction(-5, 2));

    Matrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = -1;
    CHECK_THROWS_AS((void)exact_spectrum(m), Error);

    Matrix h(2, 2);
    h(0, 1) = ComplexScalar(Scalar::sqrt3());
    h(1, 0) = ComplexScalar(Scalar::sqrt3());
    CHECK(exact_spectrum(h) == std::vector<Scalar>{-Scalar::sqrt3(), Scalar::sqrt3()});
}

TEST_CASE("spin lift of so(n)") {
    SpinRepresentation rep(4);
    // A = E_21 - E_12 rotates e_1 into e_2; its lift is (1/2) e_12.
    SoMatrix a(4, std::vector<Scalar>(4));
    a[1][0] = 1;
    a[0][1] = -1;
    CHECK(rep.lift_form(a) == Form::blade(4, {1, 2}, Scalar::fraction(1, 2)));
}

TEST_CASE("spin lift intertwines the vector representation") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int n = 3; n <= 8; ++n) {
        SpinRepresentation rep(n);
        SoMatrix a(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                a[k][j] = Scalar(d(rng));
                a[j][k] = -a[k][j];
            }
        const Form l = rep.lift_form(a);
        for (int j = 1; j <= n; ++j) {
            const Form e = Form::basis(n, j);
            Form image(n);
            for (int k = 1; k <= n; ++k) image += Form::basis(n, k) * a[k - 1][j - 1];
            CHECK(clifford_mul(l, e) - clifford_mul(e, l) == image);
        }
    }
}
