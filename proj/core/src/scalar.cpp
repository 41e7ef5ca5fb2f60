#include "casimir/scalar.hpp"

#include <cmath>
#include <ostream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole) {
    auto fail = [&] { throw Error(ErrorKind::Parse, "malformed scalar: \"" + std::string(whole) + "\""); };
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    auto digits = [&](std::size_t from) {
        std::size_t end = from;
        while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
        if (end == from) fail();
        return end;
    };
    std::size_t num_end = digits(pos);
    mpz_class num(std::string(s.substr(pos, num_end - pos)));
    mpz_class den = 1;
    pos = num_end;
    if (pos < s.size()) {
        if (s[pos] != '/') fail();
        std::size_t den_end = digits(pos + 1);
        if (den_end != s.size()) fail();
        den = mpz_class(std::string(s.substr(pos + 1, den_end - pos - 1)));
        if (den == 0) fail();
    }
    mpq_class q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Scalar::Scalar(mpq_class rat, mpq_class root3) : rat_(std::move(rat)), root3_(std::move(root3)) {
    rat_.canonicalize();
    root3_.canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw Error(ErrorKind::Parse, "empty scalar");
    Scalar out;
    std::size_t start = 0;
    while (true) {
        std::size_t plus = text.find('+', start);
        std::string_view term = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
        if (term.empty()) throw Error(ErrorKind::Parse, "malformed scalar: \"" + std::string(text) + "\"");
        constexpr std::string_view suffix = "*s3";
        if (term.size() > suffix.size() && term.substr(term.size() - suffix.size()) == suffix) {
            out.root3_ += parse_rational(term.substr(0, term.size() - suffix.size()), text);
        } else {
            out.rat_ += parse_rational(term, text);
        }
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    out.rat_.canonicalize();
    out.root3_.canonicalize();
    return out;
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    if (sgn(root3_) == 0) return rational_str(rat_);
    std::string r3 = rational_str(root3_) + "*s3";
    if (sgn(rat_) == 0) return r3;
    return rational_str(rat_) + "+" + r3;
}

int Scalar::sign() const {
    int a = sgn(rat_);
    int b = sgn(root3_);
    if (b == 0) return a;
    if (a == 0) return b;
    if (a == b) return a;
    // a and b*sqrt(3) have opposite signs: compare squares.
    int c = cmp(rat_ * rat_, 3 * root3_ * root3_);
    return c == 0 ? 0 : (c > 0 ? a : b);
}

double Scalar::to_double() const { return rat_.get_d() + root3_.get_d() * std::sqrt(3.0); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    mpq_class n = norm();
    return Scalar(rat_ / n, -root3_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    rat_ += o.rat_;
    root3_ += o.root3_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    root3_ -= o.root3_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = rat_ * o.rat_ + 3 * root3_ * o.root3_;
    mpq_class s = rat_ * o.root3_ + root3_ * o.rat_;
    rat_ = std::move(r);
    root3_ = std::move(s);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace casimir
