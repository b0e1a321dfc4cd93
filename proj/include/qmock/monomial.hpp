#pragma once

#include <cstdint>
#include <string>

#include "qmock/series.hpp"

namespace qmock {

/// A signed power of q: +q^e or -q^e. The only specialization admitted for
/// the x, y, z arguments of the theta and Appell-Lerch machinery; closed
/// under product, inverse and integer powers.
class Monomial {
public:
    Monomial() = default; // +q^0 == 1
    Monomial(int sign, const Exponent& e);

    static Monomial q_pow(const Exponent& e) { return Monomial(+1, e); }
    static Monomial neg_q_pow(const Exponent& e) { return Monomial(-1, e); }
    static Monomial one() { return Monomial(+1, Exponent(0)); }
    static Monomial minus_one() { return Monomial(-1, Exponent(0)); }

    int sign() const { return sign_; }
    const Exponent& exp() const { return exp_; }

    bool is_one() const { return sign_ == 1 && exp_.is_zero(); }
    bool is_minus_one() const { return sign_ == -1 && exp_.is_zero(); }

    Monomial inverse() const { return Monomial(sign_, -exp_); }
    Monomial negated() const { return Monomial(-sign_, exp_); }
    Monomial pow(std::int64_t k) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial(a.sign_ * b.sign_, a.exp_ + b.exp_);
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    LaurentSeries to_series(int lattice = kDefaultLattice) const {
        return LaurentSeries::term(Rational(sign_), exp_, lattice);
    }

    std::string str() const;

private:
    int sign_ = 1;
    Exponent exp_;
};

} // namespace qmock
