#pragma once

#include <cstdint>

#include "qmock/monomial.hpp"
#include "qmock/series.hpp"

namespace qmock {

/// Parameters (a,b,c) of the indefinite double sum; the attached quadratic
/// form must satisfy b^2 - ac > 0, which the termination bounds assume.
struct HeckeParams {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    HeckeParams(std::int64_t a_, std::int64_t b_, std::int64_t c_);
    std::int64_t discriminant() const { return b * b - a * c; }
};

/// Arguments of the Appell-Lerch sum m(x, q^base, z). Construction rejects
/// the non-generic cases structurally: some geometric ratio
/// u_r = q^{base(r-1)} x z equal to +1 (a pole of the sum), or z a power of
/// the base (a zero of the theta denominator).
class AppellLerchArgs {
public:
    AppellLerchArgs(const Monomial& x, const Exponent& base, const Monomial& z);

    const Monomial& x() const { return x_; }
    const Exponent& base() const { return base_; }
    const Monomial& z() const { return z_; }

private:
    Monomial x_;
    Exponent base_;
    Monomial z_;
};

/// f_{a,b,c}(x, y, q^base): the double sum over the two same-sign quadrants
/// of sg(r) (-1)^{r+s} x^r y^s q^{base(a C(r,2) + b r s + c C(s,2))},
/// truncated completely — every lattice point with exponent <= prec included.
LaurentSeries f_eval(const HeckeParams& p, const Monomial& x, const Monomial& y,
                     const Exponent& base, const Exponent& prec,
                     int lattice = kDefaultLattice);

/// m(x, q^base, z) = (1/j(z, q^base)) sum_r (-1)^r q^{base C(r,2)} z^r / (1 - u_r),
/// each geometric factor expanded exactly on the side where it is a power
/// series. The result may have negative valuation.
LaurentSeries m_eval(const AppellLerchArgs& args, const Exponent& prec,
                     int lattice = kDefaultLattice);

/// The expansion g_{a,b,c}(x, y, q^base, z1, z0): two finite sums of
/// j-prefactors times Appell-Lerch sums at the rescaled modulus.
LaurentSeries g_eval(const HeckeParams& p, const Monomial& x, const Monomial& y,
                     const Exponent& base, const Monomial& z1, const Monomial& z0,
                     const Exponent& prec, int lattice = kDefaultLattice);

/// The theta quotient theta_{n,p}(x, y, q^base); requires gcd(n,p) = 1.
LaurentSeries theta_np(std::int64_t n, std::int64_t p, const Monomial& x,
                       const Monomial& y, const Exponent& base, const Exponent& prec,
                       int lattice = kDefaultLattice);

/// f_{a,b,c} through the four-term quadratic split at modulus q^{4 base};
/// an independent evaluation route used to cross-check f_eval.
LaurentSeries f_via_quad_split(const HeckeParams& p, const Monomial& x, const Monomial& y,
                               const Exponent& base, const Exponent& prec,
                               int lattice = kDefaultLattice);

} // namespace qmock
