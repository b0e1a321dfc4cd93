#pragma once

#include "qmock/series.hpp"

namespace qmock {

/// The four double-sum series. W2's defining sum does not converge termwise;
/// it is evaluated as the average of the even and odd partial-sum limits over
/// the outer index, which stabilizes coefficientwise.
LaurentSeries W1(const Exponent& prec, int lattice = kDefaultLattice);
LaurentSeries W2(const Exponent& prec, int lattice = kDefaultLattice);
LaurentSeries W3(const Exponent& prec, int lattice = kDefaultLattice);
LaurentSeries W4(const Exponent& prec, int lattice = kDefaultLattice);

/// Third-order mock theta function omega(q) = sum q^{2n(n+1)} / ((q;q^2)_{n+1})^2.
LaurentSeries omega_3rd(const Exponent& prec, int lattice = kDefaultLattice);

/// Eighth-order mock theta functions.
LaurentSeries S1(const Exponent& prec, int lattice = kDefaultLattice);
LaurentSeries T1(const Exponent& prec, int lattice = kDefaultLattice);

/// The Appell-Lerch/theta right-hand side of the i-th double-sum identity,
/// i in 1..4.
LaurentSeries rhs_theorem_main(int i, const Exponent& prec, int lattice = kDefaultLattice);

/// The intermediate product-times-double-sum form of the same identity.
LaurentSeries fform(int i, const Exponent& prec, int lattice = kDefaultLattice);

} // namespace qmock
