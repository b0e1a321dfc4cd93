#include "qmock/qprod.hpp"

namespace qmock {

namespace {

void require_positive_base(const Exponent& base) {
    if (!base.is_positive()) throw InvalidArgument("base exponent must be positive");
}

Exponent ratio(const Exponent& a, const Exponent& b) {
    return a * Exponent::frac(b.den(), b.num());
}

int pow_sign(int sign, std::int64_t n) {
    return (sign == -1 && ((n % 2 + 2) % 2) == 1) ? -1 : 1;
}

// product of factors (1 - a q^{base k}), k = 0..n-1, truncated at `cap`
LaurentSeries poch_product(const Monomial& a, const Exponent& base, std::int64_t n,
                           const Prec& cap, int lattice) {
    LaurentSeries r = LaurentSeries::one(lattice).truncated(cap);
    for (std::int64_t k = 0; k < n; ++k) {
        LaurentSeries f = LaurentSeries::one(lattice);
        f.add_term(a.exp() + base * Exponent(k), Rational(-a.sign()));
        if (f.is_known_zero()) return LaurentSeries::zero(lattice); // factor (1 - 1)
        r = r * f.truncated(cap);
    }
    return r;
}

} // namespace

LaurentSeries poch_finite(const Monomial& a, const Exponent& base, std::int64_t n,
                          int lattice) {
    require_positive_base(base);
    if (n < 0) throw InvalidArgument("finite Pochhammer needs n >= 0");
    return poch_product(a, base, n, Prec::infinite(), lattice);
}

LaurentSeries poch_finite_tr(const Monomial& a, const Exponent& base, std::int64_t n,
                             const Exponent& prec, int lattice) {
    require_positive_base(base);
    if (n < 0) throw InvalidArgument("finite Pochhammer needs n >= 0");
    return poch_product(a, base, n, Prec(prec), lattice).truncated(prec);
}

LaurentSeries poch_infinite(const Monomial& a, const Exponent& base, const Exponent& prec,
                            int lattice) {
    require_positive_base(base);
    if (a.is_minus_one()) {
        // (-1; q^b)_inf = 2 (-q^b; q^b)_inf
        return poch_infinite(Monomial::neg_q_pow(base), base, prec, lattice).scaled(2);
    }
    if (!a.exp().is_positive()) {
        throw InvalidArgument("infinite Pochhammer of " + a.str() +
                              " is not a power series");
    }
    // factors with a-exponent beyond prec cannot change coefficients <= prec
    LaurentSeries r = LaurentSeries::one(lattice).truncated(prec);
    for (Exponent e = a.exp(); e <= prec; e += base) {
        LaurentSeries f = LaurentSeries::one(lattice);
        f.add_term(e, Rational(-a.sign()));
        r = r * f.truncated(prec);
    }
    return r;
}

bool jacobi_j_vanishes(const Monomial& x, const Exponent& base) {
    return x.sign() == 1 && ratio(x.exp(), base).is_integer();
}

LaurentSeries jacobi_j(const Monomial& x, const Exponent& base, const Exponent& prec,
                       int lattice) {
    require_positive_base(base);
    if (jacobi_j_vanishes(x, base)) return LaurentSeries::zero(lattice);

    // reduce to 0 <= exp(x0) < base, tracking the monomial prefactor of
    // j(q^{n*base} x0, q^base) = (-1)^n q^{-base*C(n,2)} x0^{-n} j(x0, q^base)
    const std::int64_t n = ratio(x.exp(), base).floor();
    const Monomial x0 = x * Monomial::q_pow(-(base * Exponent(n)));
    Monomial pref = Monomial::one();
    if (n != 0) {
        Monomial parity = (n % 2 != 0) ? Monomial::minus_one() : Monomial::one();
        pref = parity * Monomial::q_pow(-(base * Exponent(binom2(n)))) * x0.pow(-n);
    }
    const Exponent inner_prec = prec - pref.exp();

    const Monomial qbx = Monomial(x0.sign(), base - x0.exp()); // q^base / x0
    LaurentSeries inner = poch_infinite(x0, base, inner_prec, lattice) *
                          poch_infinite(qbx, base, inner_prec, lattice) *
                          poch_infinite(Monomial::q_pow(base), base, inner_prec, lattice);
    return inner.shifted(pref.exp()).scaled(Rational(pref.sign()));
}

LaurentSeries jacobi_j_sum(const Monomial& x, const Exponent& base, const Exponent& prec,
                           int lattice) {
    require_positive_base(base);
    LaurentSeries r = LaurentSeries::zero_to(Prec(prec), lattice);

    auto term_exp = [&](std::int64_t n) {
        return base * Exponent(binom2(n)) + x.exp() * Exponent(n);
    };
    auto coeff = [&](std::int64_t n) {
        return Rational(pow_sign(-1, n) * pow_sign(x.sign(), n));
    };

    // exponents grow monotonically in n once base*n + exp(x) > 0, and in -n
    // once base*(1-n) - exp(x) > 0; iterate past those thresholds
    const std::int64_t up_from = ratio(-x.exp(), base).floor() + 2;
    for (std::int64_t n = 0;; ++n) {
        Exponent e = term_exp(n);
        if (e <= prec) {
            r.add_term(e, coeff(n));
        } else if (n >= up_from) {
            break;
        }
    }
    const std::int64_t down_from = ratio(x.exp() - base, -base).ceil() - 2;
    for (std::int64_t n = -1;; --n) {
        Exponent e = term_exp(n);
        if (e <= prec) {
            r.add_term(e, coeff(n));
        } else if (n <= down_from) {
            break;
        }
    }
    return r;
}

LaurentSeries J_std(const Exponent& a, const Exponent& m, const Exponent& prec, int lattice) {
    return jacobi_j(Monomial::q_pow(a), m, prec, lattice);
}

LaurentSeries Jbar(const Exponent& a, const Exponent& m, const Exponent& prec, int lattice) {
    return jacobi_j(Monomial::neg_q_pow(a), m, prec, lattice);
}

LaurentSeries J_cap(const Exponent& m, const Exponent& prec, int lattice) {
    return J_std(m, m * Exponent(3), prec, lattice);
}

} // namespace qmock
