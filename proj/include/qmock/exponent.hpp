#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qmock/errors.hpp"

namespace qmock {

/// Exact rational exponent of q.
///
/// Kept reduced with positive denominator, so default equality is value
/// equality. All arithmetic is exact and traps on int64 overflow instead of
/// wrapping; at the scales this library works at (orders in the hundreds,
/// lattice denominators in the tens) overflow indicates a logic error.
class Exponent {
public:
    constexpr Exponent() = default;
    constexpr Exponent(std::int64_t n) : num_(n) {}

    static Exponent frac(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    // largest integer <= value / smallest integer >= value
    std::int64_t floor() const;
    std::int64_t ceil() const;

    // exact integer value; throws InvalidArgument when fractional
    std::int64_t as_integer() const;

    Exponent operator-() const;
    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    friend Exponent operator*(const Exponent& a, const Exponent& b);

    Exponent& operator+=(const Exponent& o) { return *this = *this + o; }
    Exponent& operator-=(const Exponent& o) { return *this = *this - o; }
    Exponent& operator*=(const Exponent& o) { return *this = *this * o; }

    friend bool operator==(const Exponent& a, const Exponent& b) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

    std::string str() const; // "5", "-3", "5/2"

private:
    struct raw_tag {};
    constexpr Exponent(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Exponent abs(const Exponent& e);

/// Precision bound for a truncated series: a finite exponent or +infinity.
/// Finite precision is inclusive — coefficients at exponents <= the bound
/// are correct, everything above is unknown.
class Prec {
public:
    Prec(const Exponent& e) : finite_(true), e_(e) {}
    static Prec infinite() { return Prec(); }

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }

    // the finite bound; throws InvalidArgument on +infinity
    const Exponent& value() const;

    // e <= this bound
    bool covers(const Exponent& e) const { return !finite_ || e <= e_; }
    bool covers(const Prec& p) const { return !finite_ || (p.finite_ && p.e_ <= e_); }

    friend Prec min(const Prec& a, const Prec& b);
    friend Prec operator+(const Prec& p, const Exponent& shift);
    friend bool operator==(const Prec& a, const Prec& b);

    std::string str() const; // "5/2" or "inf"

private:
    Prec() : finite_(false) {}

    bool finite_;
    Exponent e_;
};

// n(n-1)/2 with overflow checking; n may be negative
std::int64_t binom2(std::int64_t n);

// x(x-1)/2 for rational x
Exponent binom2(const Exponent& x);

} // namespace qmock
