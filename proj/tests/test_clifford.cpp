#include <doctest.h>

#include <random>

#include "casimir/clifford.hpp"
#include "oracles.hpp"

using namespace casimir;

TEST_CASE("generator relations") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const Form ei = Form::basis(4, i), ej = Form::basis(4, j);
            const Form anti = clifford_mul(ei, ej) + clifford_mul(ej, ei);
            CHECK(anti == Form::scalar(4, i == j ? -2 : 0));
        }
}

TEST_CASE("product agrees with the word-reduction oracle and is associative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 6;
        const Form a = oracle::random_mixed(rng, n, 3, true);
        const Form b = oracle::random_mixed(rng, n, 3);
        const Form c = oracle::random_mixed(rng, n, 2);
        CHECK(clifford_mul(a, b) == oracle::clifford(a, b));
        CHECK(clifford_mul(clifford_mul(a, b), c) == clifford_mul(a, clifford_mul(b, c)));
    }
}

TEST_CASE("reverse is an anti-automorphism") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Form a = oracle::random_mixed(rng, 5, 5), b = oracle::random_mixed(rng, 5, 5);
        CHECK(reverse(clifford_mul(a, b)) == clifford_mul(reverse(b), reverse(a)));
    }
}

TEST_CASE("Sasakian torsion square") {
    Form t(5);
    t.add({1, 2, 5}, 2);
    t.add({3, 4, 5}, 2);
    CHECK(clifford_mul(t, t) == Form::scalar(5, 8) - Form::blade(5, {1, 2, 3, 4}, 8));
    CHECK(contraction_square(t) == Scalar(2) * sigma_T(t) - Form::scalar(5, Scalar(3) * norm2(t)));
}

TEST_CASE("square identities on random 3-forms") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 6;
        const Form t = oracle::random_form(rng, n, 3, true);
        const Form s = sigma_T(t);
        const Form t2 = norm2(t) * Form::scalar(n, 1);
        CHECK(clifford_mul(t, t) == t2 - Scalar(2) * s);
        CHECK(contraction_square(t) == Scalar(2) * s - Scalar(3) * t2);
    }
}
