#include "qmock/hecke.hpp"

#include <numeric>

#include "qmock/qprod.hpp"

namespace qmock {

namespace {

int par(std::int64_t k) {
    return ((k % 2 + 2) % 2) == 1 ? -1 : 1;
}

Exponent ratio(const Exponent& a, const Exponent& b) {
    return a * Exponent::frac(b.den(), b.num());
}

void require_positive_base(const Exponent& base) {
    if (!base.is_positive()) throw InvalidArgument("base exponent must be positive");
}

} // namespace

HeckeParams::HeckeParams(std::int64_t a_, std::int64_t b_, std::int64_t c_)
    : a(a_), b(b_), c(c_) {
    if (a < 1 || b < 1 || c < 1) {
        throw InvalidArgument("double-sum parameters must be positive");
    }
    if (b * b - a * c <= 0) {
        throw InvalidArgument("double-sum parameters need b^2 - ac > 0, got " +
                              std::to_string(b * b - a * c));
    }
}

AppellLerchArgs::AppellLerchArgs(const Monomial& x, const Exponent& base, const Monomial& z)
    : x_(x), base_(base), z_(z) {
    require_positive_base(base);
    // u_r = q^{base(r-1)} x z equals +1 for some integer r exactly when the
    // combined sign is + and base divides exp(x) + exp(z)
    if (x.sign() * z.sign() == 1 && ratio(x.exp() + z.exp(), base).is_integer()) {
        throw NonGenericArgument("Appell-Lerch sum has a pole: " + x.str() + " * " +
                                 z.str() + " is an integral power of q^" + base.str());
    }
    if (jacobi_j_vanishes(z, base)) {
        throw NonGenericArgument("Appell-Lerch sum with vanishing j(" + z.str() + ", q^" +
                                 base.str() + ")");
    }
}

LaurentSeries f_eval(const HeckeParams& p, const Monomial& x, const Monomial& y,
                     const Exponent& base, const Exponent& prec, int lattice) {
    require_positive_base(base);
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);

    auto add_point = [&](std::int64_t r, std::int64_t s) {
        const Monomial xr = x.pow(r);
        const Monomial ys = y.pow(s);
        const Exponent e =
            base * Exponent(p.a * binom2(r) + p.b * r * s + p.c * binom2(s)) +
            xr.exp() + ys.exp();
        if (e <= prec) {
            const int sg = r >= 0 ? 1 : -1;
            acc.add_term(e, Rational(sg * par(r + s) * xr.sign() * ys.sign()));
        }
    };

    const Exponent K = abs(x.exp()) + abs(y.exp());

    // Quadrant r,s >= 0, enumerated by diagonals d = r+s. With a,c >= 1 and
    // b r s >= 0 the exponent is at least base(C(r,2)+C(s,2)) - K d
    // >= base(d^2/4 - d/2) - K d, a parabola in d with vertex 1 + 2K/base;
    // past the vertex, once the bound exceeds prec the whole tail does.
    const Exponent vertex_pos = Exponent(1) + ratio(K * Exponent(2), base);
    for (std::int64_t d = 0;; ++d) {
        const Exponent bound =
            base * (Exponent::frac(d, 4) * Exponent(d) - Exponent::frac(d, 2)) -
            K * Exponent(d);
        if (Exponent(d) > vertex_pos && bound > prec) break;
        for (std::int64_t r = 0; r <= d; ++r) add_point(r, d - r);
    }

    // Quadrant r,s < 0 via (r,s) = (-1-r', -1-s'). With t = r'+s'+2 the same
    // style of estimate gives exponent >= base t^2/4 - K t, vertex 2K/base.
    const Exponent vertex_neg = ratio(K * Exponent(2), base);
    for (std::int64_t dp = 0;; ++dp) {
        const std::int64_t t = dp + 2;
        const Exponent bound =
            base * Exponent::frac(t * t, 4) - K * Exponent(t);
        if (Exponent(t) > vertex_neg && bound > prec) break;
        for (std::int64_t rp = 0; rp <= dp; ++rp) add_point(-1 - rp, -1 - (dp - rp));
    }
    return acc;
}

LaurentSeries m_eval(const AppellLerchArgs& args, const Exponent& prec, int lattice) {
    const Monomial x = args.x();
    const Monomial z = args.z();
    const Exponent B = args.base();

    auto sum_builder = [x, z, B, lattice](const Exponent& P) {
        LaurentSeries acc = LaurentSeries::zero_to(Prec(P), lattice);

        // adds term r and returns its exact valuation
        auto emit = [&](std::int64_t r) {
            const Monomial zr = z.pow(r);
            const int sgn = par(r) * zr.sign();
            const Exponent em = B * Exponent(binom2(r)) + zr.exp();
            const Monomial u = x * z * Monomial::q_pow(B * Exponent(r - 1));
            if (u.exp().is_positive()) {
                // 1/(1-u) = sum_{k>=0} u^k
                for (std::int64_t k = 0;; ++k) {
                    const Monomial uk = u.pow(k);
                    if (em + uk.exp() > P) break;
                    acc.add_term(em + uk.exp(), Rational(sgn * uk.sign()));
                }
                return em;
            }
            if (u.exp().is_negative()) {
                // 1/(1-u) = -1/(u(1/u - 1)) ... = -sum_{k>=1} u^{-k}
                const Monomial ui = u.inverse();
                for (std::int64_t k = 1;; ++k) {
                    const Monomial uk = ui.pow(k);
                    if (em + uk.exp() > P) break;
                    acc.add_term(em + uk.exp(), Rational(-sgn * uk.sign()));
                }
                return em + ui.exp();
            }
            // u = -1 (u = +1 was rejected at construction): 1/(1-u) = 1/2
            acc.add_term(em, make_rational(sgn, 2));
            return em;
        };

        // Valuations eventually increase strictly along each tail: upward
        // once B r + exp(z) > 0 and the geometric ratio has positive
        // exponent (r > 1 - (exp(x)+exp(z))/B), downward once both mirrored
        // conditions hold. Three consecutive exceedances past the threshold
        // close a tail.
        const Exponent exz = ratio(x.exp() + z.exp(), B);
        const std::int64_t r_up =
            std::max({ratio(-z.exp(), B).floor(), (Exponent(1) - exz).floor(),
                      std::int64_t(0)}) + 2;
        const std::int64_t r_down =
            std::min({(Exponent(1) - exz).ceil(), (Exponent(2) - ratio(z.exp(), B)).ceil(),
                      std::int64_t(0)}) - 2;

        int streak = 0;
        for (std::int64_t r = 0;; ++r) {
            streak = emit(r) > P ? streak + 1 : 0;
            if (streak >= 3 && r >= r_up) break;
        }
        streak = 0;
        for (std::int64_t r = -1;; --r) {
            streak = emit(r) > P ? streak + 1 : 0;
            if (streak >= 3 && r <= r_down) break;
        }
        return acc;
    };

    auto j_builder = [z, B, lattice](const Exponent& P) {
        return jacobi_j(z, B, P, lattice);
    };
    return product_quotient({sum_builder}, {j_builder}, prec, lattice);
}

namespace {

// one of the two symmetric halves of g_{a,b,c}
LaurentSeries g_half(std::int64_t a, std::int64_t b, std::int64_t c, const Monomial& X,
                     const Monomial& Y, const Monomial& Z, const Exponent& base,
                     const Exponent& prec, int lattice) {
    const std::int64_t disc = b * b - a * c;
    const Exponent jbase = base * Exponent(a);
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t t = 0; t < a; ++t) {
        const Monomial jarg = Monomial::q_pow(base * Exponent(b * t)) * X;
        if (jacobi_j_vanishes(jarg, jbase)) continue;

        const Exponent mexp =
            base * Exponent(a * binom2(b + 1) - c * binom2(a + 1) - t * disc);
        const Monomial xm = Monomial::minus_one() * Monomial::q_pow(mexp) *
                            Y.negated().pow(a) * X.negated().pow(-b);
        const AppellLerchArgs margs(xm, base * Exponent(a * disc), Z);

        const Monomial pref =
            Y.negated().pow(t) * Monomial::q_pow(base * Exponent(c * binom2(t)));
        auto jb = [jarg, jbase, lattice](const Exponent& P) {
            return jacobi_j(jarg, jbase, P, lattice);
        };
        auto mb = [margs, lattice](const Exponent& P) { return m_eval(margs, P, lattice); };
        LaurentSeries term = product_quotient({jb, mb}, {}, prec - pref.exp(), lattice)
                                 .shifted(pref.exp())
                                 .scaled(Rational(pref.sign()));
        acc = acc + term;
    }
    return acc;
}

} // namespace

LaurentSeries g_eval(const HeckeParams& p, const Monomial& x, const Monomial& y,
                     const Exponent& base, const Monomial& z1, const Monomial& z0,
                     const Exponent& prec, int lattice) {
    require_positive_base(base);
    return g_half(p.a, p.b, p.c, x, y, z0, base, prec, lattice) +
           g_half(p.c, p.b, p.a, y, x, z1, base, prec, lattice);
}

LaurentSeries theta_np(std::int64_t n, std::int64_t p, const Monomial& x, const Monomial& y,
                       const Exponent& base, const Exponent& prec, int lattice) {
    require_positive_base(base);
    if (n < 1 || p < 1 || std::gcd(n, p) != 1) {
        throw InvalidArgument("theta_{n,p} needs coprime positive n, p");
    }

    // r = r* + {(n-1)/2}, s = s* + {(n-1)/2}; the shifted indices
    // rr = r - (n-1)/2 and ss = s + (n+1)/2 are always integers
    const Exponent fs = Exponent::frac((n - 1) % 2, 2);
    const std::int64_t mJ = p * p * (2 * n + p);
    const Exponent j32_base = base * Exponent(mJ);

    auto sum_builder = [=](const Exponent& P) {
        LaurentSeries acc = LaurentSeries::zero_to(Prec(P), lattice);
        for (std::int64_t rstar = 0; rstar < p; ++rstar) {
            for (std::int64_t sstar = 0; sstar < p; ++sstar) {
                const Exponent r = Exponent(rstar) + fs;
                const Exponent s = Exponent(sstar) + fs;
                const std::int64_t rr = (r - Exponent::frac(n - 1, 2)).as_integer();
                const std::int64_t ss = (s + Exponent::frac(n + 1, 2)).as_integer();

                const Exponent quad =
                    Exponent(n * binom2(rr) + (n + p) * rr * ss + n * binom2(ss));
                const Monomial prefm = x.negated().pow(rr) * y.negated().pow(ss);

                const Monomial ja_arg = Monomial::minus_one() *
                                        Monomial::q_pow(base * Exponent(n * p * (sstar - rstar))) *
                                        x.pow(n) * y.pow(-n);
                const Exponent ja_base = base * Exponent(n * p * p);
                const Monomial jb_arg =
                    Monomial::q_pow(base * (Exponent(p * (2 * n + p)) * (r + s) +
                                            Exponent(p * (n + p)))) *
                    x.pow(p) * y.pow(p);
                const Monomial jc_arg =
                    Monomial::q_pow(base * (Exponent(p * (2 * n + p)) * r +
                                            Exponent::frac(p * (n + p), 2))) *
                    y.negated().pow(n + p) * x.negated().pow(-n);
                const Monomial jd_arg =
                    Monomial::q_pow(base * (Exponent(p * (2 * n + p)) * s +
                                            Exponent::frac(p * (n + p), 2))) *
                    x.negated().pow(n + p) * y.negated().pow(-n);
                if (jacobi_j_vanishes(jc_arg, j32_base) ||
                    jacobi_j_vanishes(jd_arg, j32_base)) {
                    throw DivisionByZero("theta_{" + std::to_string(n) + "," +
                                         std::to_string(p) + "} denominator vanishes");
                }

                auto Jcap_b = [=](const Exponent& P2) {
                    return J_cap(base * Exponent(mJ), P2, lattice);
                };
                auto ja = [=](const Exponent& P2) {
                    return jacobi_j(ja_arg, ja_base, P2, lattice);
                };
                auto jb = [=](const Exponent& P2) {
                    return jacobi_j(jb_arg, j32_base, P2, lattice);
                };
                auto jc = [=](const Exponent& P2) {
                    return jacobi_j(jc_arg, j32_base, P2, lattice);
                };
                auto jd = [=](const Exponent& P2) {
                    return jacobi_j(jd_arg, j32_base, P2, lattice);
                };

                const Exponent shift = base * quad + prefm.exp();
                LaurentSeries term =
                    product_quotient({Jcap_b, Jcap_b, Jcap_b, ja, jb}, {jc, jd},
                                     P - shift, lattice)
                        .shifted(shift)
                        .scaled(Rational(prefm.sign()));
                acc = acc + term;
            }
        }
        return acc;
    };

    auto jbar_b = [=](const Exponent& P) {
        return jacobi_j(Monomial::minus_one(), base * Exponent(n * p * (2 * n + p)), P,
                        lattice);
    };
    return product_quotient({sum_builder}, {jbar_b}, prec, lattice);
}

LaurentSeries f_via_quad_split(const HeckeParams& p, const Monomial& x, const Monomial& y,
                               const Exponent& base, const Exponent& prec, int lattice) {
    require_positive_base(base);
    const Exponent b4 = base * Exponent(4);
    const Monomial nx2 = x.pow(2).negated();
    const Monomial ny2 = y.pow(2).negated();

    auto piece = [&](std::int64_t ax, std::int64_t cy, const Monomial& pref) {
        const Monomial fx = nx2 * Monomial::q_pow(base * Exponent(ax));
        const Monomial fy = ny2 * Monomial::q_pow(base * Exponent(cy));
        return f_eval(p, fx, fy, b4, prec - pref.exp(), lattice)
            .shifted(pref.exp())
            .scaled(Rational(pref.sign()));
    };

    return piece(p.a, p.c, Monomial::one()) +
           piece(3 * p.a, p.c + 2 * p.b, x.negated()) +
           piece(p.a + 2 * p.b, 3 * p.c, y.negated()) +
           piece(3 * p.a + 2 * p.b, 3 * p.c + 2 * p.b,
                 x * y * Monomial::q_pow(base * Exponent(p.b)));
}

} // namespace qmock
