#pragma once

#include <cstdint>

#include "qmock/monomial.hpp"
#include "qmock/series.hpp"

namespace qmock {

/// (a; q^base)_n — the finite product prod_{k=1..n} (1 - a q^{base(k-1)}).
/// Exact polynomial: the result carries infinite precision.
LaurentSeries poch_finite(const Monomial& a, const Exponent& base, std::int64_t n,
                          int lattice = kDefaultLattice);

/// Same product truncated during construction; correct through prec and much
/// cheaper than the exact polynomial when n is large.
LaurentSeries poch_finite_tr(const Monomial& a, const Exponent& base, std::int64_t n,
                             const Exponent& prec, int lattice = kDefaultLattice);

/// (a; q^base)_inf through prec. Requires exp(a) > 0, except for the boundary
/// case a = -1 where (-1; q^base)_inf = 2(-q^base; q^base)_inf.
LaurentSeries poch_infinite(const Monomial& a, const Exponent& base, const Exponent& prec,
                            int lattice = kDefaultLattice);

/// True exactly when j(x, q^base) = 0, i.e. x = +q^{k*base} for integer k.
bool jacobi_j_vanishes(const Monomial& x, const Exponent& base);

/// j(x, q^base) = (x)_inf (q^base/x)_inf (q^base)_inf via the product form.
/// Arguments outside 0 <= exp(x) < base reduce first through the
/// quasi-periodicity j(q^{n*base} x0, q^base) = (-1)^n q^{-base*C(n,2)} x0^{-n}
/// j(x0, q^base), so the result is a Laurent series with a possibly negative
/// valuation. Returns the exact zero when the argument is a power of the base.
LaurentSeries jacobi_j(const Monomial& x, const Exponent& base, const Exponent& prec,
                       int lattice = kDefaultLattice);

/// The same function by its bilateral sum sum_n (-1)^n q^{base*C(n,2)} x^n.
/// Kept as an independent route for cross-checking the product form.
LaurentSeries jacobi_j_sum(const Monomial& x, const Exponent& base, const Exponent& prec,
                           int lattice = kDefaultLattice);

/// J_{a,m} = j(q^a, q^m)
LaurentSeries J_std(const Exponent& a, const Exponent& m, const Exponent& prec,
                    int lattice = kDefaultLattice);

/// Jbar_{a,m} = j(-q^a, q^m)
LaurentSeries Jbar(const Exponent& a, const Exponent& m, const Exponent& prec,
                   int lattice = kDefaultLattice);

/// J_m = J_{m,3m}
LaurentSeries J_cap(const Exponent& m, const Exponent& prec, int lattice = kDefaultLattice);

} // namespace qmock
