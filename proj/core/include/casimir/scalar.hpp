#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace casimir {

/// Exact element a + b*sqrt(3) of Q(sqrt 3).
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class rat, mpq_class root3 = 0);
    static Scalar fraction(long num, long den);
    static Scalar sqrt3() { return Scalar(0, 1); }

    /// Parses the catalog grammar: term ("+" term)*, term := rational | rational "*s3".
    static Scalar parse(std::string_view text);
    std::string str() const;

    const mpq_class& rat() const { return rat_; }
    const mpq_class& root3() const { return root3_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(root3_) == 0; }
    bool is_rational() const { return sgn(root3_) == 0; }
    int sign() const;
    double to_double() const;
    Scalar conj() const { return Scalar(rat_, -root3_); }
    /// Field norm a^2 - 3b^2.
    mpq_class norm() const { return rat_ * rat_ - 3 * root3_ * root3_; }
    Scalar inverse() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    Scalar operator-() const { return Scalar(-rat_, -root3_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat_ == b.rat_ && a.root3_ == b.root3_;
    }
    /// Order of the real numbers represented.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    mpq_class rat_{0};
    mpq_class root3_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Text of a rational in the catalog grammar ("3", "-1/2").
std::string rational_str(const mpq_class& q);

}  // namespace casimir
