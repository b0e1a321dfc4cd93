#include "qmock/mock.hpp"

#include <algorithm>
#include <vector>

#include "qmock/hecke.hpp"
#include "qmock/qprod.hpp"

namespace qmock {

namespace {

int par(std::int64_t k) {
    return ((k % 2 + 2) % 2) == 1 ? -1 : 1;
}

const Monomial kQ = Monomial::q_pow(1);
const Monomial kNegQ = Monomial::neg_q_pow(1);

// 1/(1 - s*q^e) = sum_k s^k q^{ke}, e > 0
LaurentSeries geometric_inverse(const Exponent& e, int s, const Exponent& prec, int lattice) {
    LaurentSeries r = LaurentSeries::zero_to(Prec(prec), lattice);
    int c = 1;
    for (Exponent x(0); x <= prec; x += e) {
        r.add_term(x, Rational(c));
        c *= s;
    }
    return r;
}

} // namespace

LaurentSeries W1(const Exponent& prec, int lattice) {
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t n = 1; Exponent(n * n + 1) <= prec; ++n) {
        for (std::int64_t j = 1; j <= n; ++j) {
            const Exponent shift(n * n + binom2(j + 1));
            if (shift > prec) break;
            auto n1 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(Monomial::minus_one(), 1, j, P, lattice);
            };
            auto n2 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 2, j - 1, P, lattice);
            };
            auto d1 = [n, lattice](const Exponent& P) {
                return poch_finite_tr(kNegQ, 1, n, P, lattice);
            };
            auto d2 = [n, j, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 1, n - j, P, lattice);
            };
            auto d3 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 1, 2 * j - 1, P, lattice);
            };
            acc = acc + product_quotient({n1, n2}, {d1, d2, d3}, prec - shift, lattice)
                            .shifted(shift)
                            .scaled(Rational(par(j)));
        }
    }
    return acc;
}

LaurentSeries W2(const Exponent& prec, int lattice) {
    // For n past the order every factor of the summand has stabilized mod
    // q^{order+1}, so consecutive partial sums S_N differ by a fixed
    // alternating series: the even and odd subsequences are eventually
    // constant and their average A_K = (S_{2K} + S_{2K+1})/2 freezes. Demand
    // three equal consecutive averages from K >= order/2 + 2 onward.
    const std::int64_t n_floor = std::max<std::int64_t>(prec.ceil(), 0);
    const std::int64_t k_cap = n_floor + 64;

    std::int64_t j_max = 0; // largest j with C(j+1,2) <= prec; 0 = no terms at all
    while (Exponent(binom2(j_max + 2)) <= prec) ++j_max;

    // 1/(q)_m table, extended incrementally
    std::vector<LaurentSeries> inv_q{LaurentSeries::one(lattice).truncated(prec)};
    auto inv_q_at = [&](std::int64_t m) -> const LaurentSeries& {
        while (std::int64_t(inv_q.size()) <= m) {
            inv_q.push_back(inv_q.back() *
                            geometric_inverse(Exponent(std::int64_t(inv_q.size())), 1, prec,
                                              lattice));
        }
        return inv_q[m];
    };

    // per-j numerators D_j = (-1)^j q^{C(j+1,2)} (-1)_j (q;q^2)_{j-1} / (q)_{2j-1}
    std::vector<LaurentSeries> Dj;
    for (std::int64_t j = 1; j <= j_max; ++j) {
        const Exponent shift(binom2(j + 1));
        LaurentSeries t = poch_finite_tr(Monomial::minus_one(), 1, j, prec - shift, lattice) *
                          poch_finite_tr(kQ, 2, j - 1, prec - shift, lattice) *
                          inv_q_at(2 * j - 1).truncated(prec - shift);
        Dj.push_back(t.shifted(shift).scaled(Rational(par(j))).truncated(prec));
    }

    // prefix P_n = (q;q^2)_n / (-q)_n
    LaurentSeries Pn = LaurentSeries::one(lattice).truncated(prec);

    LaurentSeries S = LaurentSeries::zero_to(Prec(prec), lattice); // running partial sum
    LaurentSeries S_even = S;                                      // S_{2K}
    std::vector<LaurentSeries> averages;

    for (std::int64_t K = 0; K <= k_cap; ++K) {
        for (std::int64_t N = 2 * K; N <= 2 * K + 1; ++N) {
            if (N == 0) {
                S_even = S;
                continue;
            }
            // extend the prefix to n = N: times (1 - q^{2N-1}) / (1 + q^N)
            LaurentSeries fac = LaurentSeries::one(lattice);
            fac.add_term(Exponent(2 * N - 1), Rational(-1));
            Pn = (Pn * fac.truncated(prec) *
                  geometric_inverse(Exponent(N), -1, prec, lattice))
                     .truncated(prec);
            LaurentSeries inner = LaurentSeries::zero_to(Prec(prec), lattice);
            for (std::int64_t j = 1; j <= std::min(N, j_max); ++j) {
                inner = inner + Dj[std::size_t(j - 1)] * inv_q_at(N - j);
            }
            S = S + (Pn * inner).truncated(prec).scaled(Rational(par(N)));
            if (N % 2 == 0) S_even = S;
        }
        averages.push_back((S_even + S).scaled(make_rational(1, 2)));
        const std::size_t sz = averages.size();
        if (Exponent(K) >= prec * Exponent::frac(1, 2) + Exponent(2) && sz >= 3 &&
            equal_mod(averages[sz - 1], averages[sz - 2], prec) &&
            equal_mod(averages[sz - 2], averages[sz - 3], prec)) {
            return averages.back();
        }
    }
    throw DivergentSum("averaged partial sums did not stabilize within " +
                       std::to_string(k_cap) + " rounds");
}

LaurentSeries W3(const Exponent& prec, int lattice) {
    const Monomial q2 = Monomial::q_pow(2);
    const Monomial nq2 = Monomial::neg_q_pow(2);
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t n = 1; Exponent(n * n + 2) <= prec; ++n) {
        for (std::int64_t j = 1; j <= n; ++j) {
            const Exponent shift(n * n + j * j + j);
            if (shift > prec) break;
            auto n1 = [n, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 2, n, P, lattice);
            };
            auto n2 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(Monomial::minus_one(), 2, j, P, lattice);
            };
            auto n3 = [j, q2, lattice](const Exponent& P) {
                return poch_finite_tr(q2, 4, j - 1, P, lattice);
            };
            auto d1 = [n, nq2, lattice](const Exponent& P) {
                return poch_finite_tr(nq2, 2, n, P, lattice);
            };
            auto d2 = [n, j, q2, lattice](const Exponent& P) {
                return poch_finite_tr(q2, 2, n - j, P, lattice);
            };
            auto d3 = [j, q2, lattice](const Exponent& P) {
                return poch_finite_tr(q2, 2, 2 * j - 1, P, lattice);
            };
            acc = acc + product_quotient({n1, n2, n3}, {d1, d2, d3}, prec - shift, lattice)
                            .shifted(shift)
                            .scaled(Rational(par(n + j)));
        }
    }
    return acc;
}

LaurentSeries W4(const Exponent& prec, int lattice) {
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t n = 0; Exponent(n * n + n) <= prec; ++n) {
        for (std::int64_t j = 0; j <= n; ++j) {
            const Exponent shift(n * n + n + binom2(j + 1));
            if (shift > prec) break;
            auto n1 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(kNegQ, 1, j, P, lattice);
            };
            auto n2 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 2, j, P, lattice);
            };
            auto d1 = [n, lattice](const Exponent& P) {
                return poch_finite_tr(kNegQ, 1, n, P, lattice);
            };
            auto d2 = [n, j, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 1, n - j, P, lattice);
            };
            auto d3 = [j, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 1, 2 * j + 1, P, lattice);
            };
            acc = acc + product_quotient({n1, n2}, {d1, d2, d3}, prec - shift, lattice)
                            .shifted(shift)
                            .scaled(Rational(par(j)));
        }
    }
    return acc;
}

LaurentSeries omega_3rd(const Exponent& prec, int lattice) {
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t n = 0; Exponent(2 * n * (n + 1)) <= prec; ++n) {
        const Exponent shift(2 * n * (n + 1));
        auto d = [n, lattice](const Exponent& P) {
            return poch_finite_tr(kQ, 2, n + 1, P, lattice);
        };
        acc = acc + product_quotient({}, {d, d}, prec - shift, lattice).shifted(shift);
    }
    return acc;
}

LaurentSeries S1(const Exponent& prec, int lattice) {
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t n = 0; Exponent(n * (n + 2)) <= prec; ++n) {
        const Exponent shift(n * (n + 2));
        auto num = [n, lattice](const Exponent& P) {
            return poch_finite_tr(kNegQ, 2, n, P, lattice);
        };
        auto den = [n, lattice](const Exponent& P) {
            return poch_finite_tr(Monomial::neg_q_pow(2), 2, n, P, lattice);
        };
        acc = acc + product_quotient({num}, {den}, prec - shift, lattice).shifted(shift);
    }
    return acc;
}

LaurentSeries T1(const Exponent& prec, int lattice) {
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    for (std::int64_t n = 0; Exponent(n * (n + 1)) <= prec; ++n) {
        const Exponent shift(n * (n + 1));
        auto num = [n, lattice](const Exponent& P) {
            return poch_finite_tr(Monomial::neg_q_pow(2), 2, n, P, lattice);
        };
        auto den = [n, lattice](const Exponent& P) {
            return poch_finite_tr(kNegQ, 2, n + 1, P, lattice);
        };
        acc = acc + product_quotient({num}, {den}, prec - shift, lattice).shifted(shift);
    }
    return acc;
}

LaurentSeries rhs_theorem_main(int i, const Exponent& prec, int lattice) {
    auto m_term = [&](std::int64_t xe, std::int64_t modulus, const Rational& scale,
                      const Exponent& shift) {
        const AppellLerchArgs args(Monomial::neg_q_pow(xe), Exponent(modulus),
                                   Monomial::minus_one());
        return m_eval(args, prec - shift, lattice).shifted(shift).scaled(scale);
    };
    auto theta_over_j = [&](std::int64_t tn, std::int64_t tp, const Monomial& x,
                            const Exponent& tbase, const Monomial& jx, const Exponent& jbase,
                            const Rational& scale, const Exponent& shift) {
        auto th = [=](const Exponent& P) { return theta_np(tn, tp, x, x, tbase, P, lattice); };
        auto jj = [=](const Exponent& P) { return jacobi_j(jx, jbase, P, lattice); };
        return product_quotient({th}, {jj}, prec - shift, lattice)
            .shifted(shift)
            .scaled(scale);
    };

    switch (i) {
    case 1:
        return m_term(17, 48, Rational(4), Exponent(0)) +
               m_term(1, 48, Rational(-4), Exponent(-5)) +
               theta_over_j(3, 2, Monomial::q_pow(5), 1, kQ, 3, Rational(-2), Exponent(2));
    case 2:
        return m_term(1, 8, Rational(4), Exponent(0)) +
               theta_over_j(1, 2, Monomial::neg_q_pow(2), 1, Monomial::minus_one(), 1,
                            Rational(2), Exponent(1));
    case 3:
        return m_term(1, 12, Rational(4), Exponent(0)) +
               theta_over_j(1, 1, Monomial::neg_q_pow(7), 4, kNegQ, 4, Rational(2),
                            Exponent(3));
    case 4:
        return m_term(5, 48, Rational(-2), Exponent(-4)) +
               m_term(11, 48, Rational(-2), Exponent(-2)) +
               theta_over_j(3, 2, Monomial::q_pow(3), 1, kQ, 3, Rational(1), Exponent(0));
    default:
        throw InvalidArgument("identity index must be 1..4");
    }
}

LaurentSeries fform(int i, const Exponent& prec, int lattice) {
    auto euler = [lattice](const Exponent& P) { return poch_infinite(kQ, 1, P, lattice); };
    auto odd_inf = [lattice](const Exponent& P) { return poch_infinite(kQ, 2, P, lattice); };
    auto even_inf = [lattice](const Exponent& P) {
        return poch_infinite(Monomial::q_pow(2), 2, P, lattice);
    };

    switch (i) {
    case 1: {
        auto f = [lattice](const Exponent& P) {
            return f_eval(HeckeParams(3, 5, 3), Monomial::q_pow(5), Monomial::q_pow(5), 1, P,
                          lattice);
        };
        return product_quotient({f}, {euler}, prec - Exponent(2), lattice)
            .shifted(2)
            .scaled(Rational(-2));
    }
    case 2: {
        auto f = [lattice](const Exponent& P) {
            return f_eval(HeckeParams(1, 3, 1), Monomial::neg_q_pow(2), Monomial::neg_q_pow(2),
                          1, P, lattice);
        };
        return product_quotient({odd_inf, f}, {even_inf}, prec - Exponent(1), lattice)
            .shifted(1);
    }
    case 3: {
        auto f = [lattice](const Exponent& P) {
            return f_eval(HeckeParams(1, 2, 1), Monomial::neg_q_pow(7), Monomial::neg_q_pow(7),
                          4, P, lattice);
        };
        return product_quotient({odd_inf, f}, {even_inf}, prec - Exponent(3), lattice)
            .shifted(3)
            .scaled(Rational(2));
    }
    case 4: {
        auto f = [lattice](const Exponent& P) {
            return f_eval(HeckeParams(3, 5, 3), Monomial::q_pow(3), Monomial::q_pow(3), 1, P,
                          lattice);
        };
        return product_quotient({f}, {euler}, prec, lattice);
    }
    default:
        throw InvalidArgument("identity index must be 1..4");
    }
}

} // namespace qmock
