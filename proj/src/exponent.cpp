#include "qmock/exponent.hpp"

#include <limits>
#include <numeric>

namespace qmock {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError(std::string("exponent arithmetic overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

i128 igcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Exponent Exponent::frac(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidArgument("exponent with zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = igcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Exponent(narrow(n, "frac"), narrow(d, "frac"), raw_tag{});
}

std::int64_t Exponent::floor() const {
    if (den_ == 1) return num_;
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Exponent::ceil() const {
    if (den_ == 1) return num_;
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::int64_t Exponent::as_integer() const {
    if (den_ != 1) throw InvalidArgument("exponent " + str() + " is not an integer");
    return num_;
}

Exponent Exponent::operator-() const {
    return Exponent(-num_, den_, raw_tag{});
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    i128 d = i128(a.den_) * b.den_;
    i128 g = igcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Exponent(narrow(n, "add"), narrow(d, "add"), Exponent::raw_tag{});
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    return a + (-b);
}

Exponent operator*(const Exponent& a, const Exponent& b) {
    i128 n = i128(a.num_) * b.num_;
    i128 d = i128(a.den_) * b.den_;
    i128 g = igcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Exponent(narrow(n, "mul"), narrow(d, "mul"), Exponent::raw_tag{});
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Exponent::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Exponent abs(const Exponent& e) {
    return e.is_negative() ? -e : e;
}

const Exponent& Prec::value() const {
    if (!finite_) throw InvalidArgument("precision is infinite");
    return e_;
}

Prec min(const Prec& a, const Prec& b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    return a.e_ <= b.e_ ? a : b;
}

Prec operator+(const Prec& p, const Exponent& shift) {
    if (p.is_infinite()) return p;
    return Prec(p.e_ + shift);
}

bool operator==(const Prec& a, const Prec& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.e_ == b.e_;
}

std::string Prec::str() const {
    return finite_ ? e_.str() : "inf";
}

std::int64_t binom2(std::int64_t n) {
    i128 v = (i128(n) * (i128(n) - 1)) / 2;
    return narrow(v, "binom2");
}

Exponent binom2(const Exponent& x) {
    return x * (x - Exponent(1)) * Exponent::frac(1, 2);
}

} // namespace qmock
