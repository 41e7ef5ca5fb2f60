#include <doctest.h>

#include <random>

#include "casimir/error.hpp"
#include "casimir/scalar.hpp"

using casimir::Error;
using casimir::ErrorKind;
using casimir::Scalar;

TEST_CASE("grammar round trip") {
    for (const char* text : {"0", "3", "-1/2", "2/3*s3", "1/2+-1/3*s3", "-7/4+5*s3", "-1*s3"}) {
        CHECK(Scalar::parse(text).str() == text);
    }
    CHECK(Scalar::parse("2/4").str() == "1/2");
    CHECK(Scalar::parse("1/3*s3+1/2") == Scalar(mpq_class(1, 2), mpq_class(1, 3)));
}

TEST_CASE("malformed scalars are parse errors") {
    for (const char* text : {"", "abc", "1/0", "1+", "+1", "1/2*s", "s3"}) {
        try {
            (void)Scalar::parse(text);
            FAIL("accepted " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Parse);
        }
    }
}

TEST_CASE("field arithmetic") {
    const Scalar s3 = Scalar::sqrt3();
    CHECK(s3 * s3 == Scalar(3));
    const Scalar x = Scalar::parse("1/2+1/3*s3");
    CHECK(x * x.inverse() == Scalar(1));
    CHECK((x - x).is_zero());
    CHECK(x.norm() == mpq_class(1, 4) - mpq_class(1, 3));
    CHECK(Scalar(2) / Scalar(4) == Scalar::fraction(1, 2));
    CHECK_THROWS_AS((void)Scalar().inverse(), Error);
}

TEST_CASE("exact ordering agrees with floating values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9), q(1, 5);
    for (int k = 0; k < 400; ++k) {
        Scalar a(mpq_class(d(rng), q(rng)), mpq_class(d(rng), q(rng)));
        Scalar b(mpq_class(d(rng), q(rng)), mpq_class(d(rng), q(rng)));
        if (a == b) continue;
        CHECK((a < b) == (a.to_double() < b.to_double()));
        CHECK(a.sign() == (a.to_double() > 0 ? 1 : (a.to_double() < 0 ? -1 : 0)));
    }
    // Differences close to zero: 7/4 - sqrt3 > 0, 45/26 - sqrt3 < 0.
    CHECK(Scalar(mpq_class(7, 4), -1).sign() == 1);
    CHECK(Scalar(mpq_class(45, 26), -1).sign() == -1);
    CHECK(Scalar(mpq_class(97, 56), -1).sign() == 1);
}
