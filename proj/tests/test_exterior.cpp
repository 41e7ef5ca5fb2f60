#include <doctest.h>

#include <random>

#include "casimir/error.hpp"
#include "casimir/exterior.hpp"
#include "oracles.hpp"

using namespace casimir;

TEST_CASE("blade basics") {
    IndexBlade b{1, 3, 5};
    CHECK(b.degree() == 3);
    CHECK(b.indices() == std::vector<int>{1, 3, 5});
    CHECK(b.str() == "e135");
    CHECK(IndexBlade{2} < IndexBlade{1, 2});
    CHECK(IndexBlade{1, 4} < IndexBlade{2, 3});
    CHECK(wedge_sign(IndexBlade{2}, IndexBlade{1}) == -1);
    CHECK(wedge_sign(IndexBlade{1, 2}, IndexBlade{2, 3}) == 0);
}

TEST_CASE("wedge, hook and Hodge star against the tensor oracle") {
    std::mt19937 rng(11);
    for (int n = 3; n <= 6; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n && q <= 3; ++q) {
                const Form a = oracle::random_form(rng, n, p, true);
                const Form b = oracle::random_form(rng, n, q, true);
                const auto ta = oracle::to_tensor(a, p), tb = oracle::to_tensor(b, q);
                CHECK(wedge(a, b) == oracle::from_tensor(oracle::wedge(ta, tb)));
                CHECK(hodge_star(a) == oracle::from_tensor(oracle::hodge(ta)));
                if (p == q) CHECK(inner(a, b) == oracle::inner(ta, tb));
                if (p > 0)
                    for (int k = 1; k <= n; ++k) CHECK(hook(k, a) == oracle::from_tensor(oracle::hook(k, ta)));
            }
}

TEST_CASE("Hodge star identities") {
    std::mt19937 rng(5);
    for (int n = 3; n <= 8; ++n)
        for (int p = 0; p <= n; ++p) {
            const Form a = oracle::random_form(rng, n, p);
            const Form b = oracle::random_form(rng, n, p);
            CHECK(wedge(a, hodge_star(b)) == Form::volume(n) * inner(a, b));
            const Scalar sign = (p * (n - p)) % 2 ? Scalar(-1) : Scalar(1);
            CHECK(hodge_star(hodge_star(a)) == a * sign);
        }
    CHECK(hodge_star(Form::scalar(3, 1)) == Form::volume(3));
}

TEST_CASE("sigma_T of the Sasakian torsion") {
    Form t(5);
    t.add({1, 2, 5}, 2);
    t.add({3, 4, 5}, 2);
    CHECK(sigma_T(t) == Form::blade(5, {1, 2, 3, 4}, 4));
    CHECK(norm2(t) == Scalar(8));
}

TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS((void)wedge(Form::basis(3, 1), Form::basis(4, 1)), Error);
    CHECK_THROWS_AS((void)IndexBlade::from_indices({2, 1}), Error);
}
