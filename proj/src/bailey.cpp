#include "qmock/bailey.hpp"

#include <algorithm>

#include "qmock/qprod.hpp"

namespace qmock {

namespace {

int par(std::int64_t k) {
    return ((k % 2 + 2) % 2) == 1 ? -1 : 1;
}

// sum_{j=lo..hi} q^{-2j^2-2j}; the empty range is the exact zero
LaurentSeries jsum_shifted(std::int64_t lo, std::int64_t hi, int lattice) {
    LaurentSeries s(lattice);
    for (std::int64_t j = lo; j <= hi; ++j) s.add_term(Exponent(-2 * j * j - 2 * j), 1);
    return s;
}

// sum_{j=lo..hi} q^{-2j^2}
LaurentSeries jsum_square(std::int64_t lo, std::int64_t hi, int lattice) {
    LaurentSeries s(lattice);
    for (std::int64_t j = lo; j <= hi; ++j) s.add_term(Exponent(-2 * j * j), 1);
    return s;
}

LaurentSeries one_minus(const Exponent& e, int lattice) {
    LaurentSeries f = LaurentSeries::one(lattice);
    f.add_term(e, Rational(-1));
    return f;
}

const Monomial kQ = Monomial::q_pow(1);
const Monomial kNegQ = Monomial::neg_q_pow(1);

BaileyPair make_bk1() {
    BaileyPair p;
    p.name = "BK1";
    p.rel = Monomial::one();
    p.alpha = [](std::int64_t n, const Exponent&, int lat) {
        const std::int64_t m = n / 2;
        if (n % 2 == 0) {
            return (one_minus(Exponent(4 * m), lat) * jsum_shifted(-m, m - 1, lat))
                .shifted(Exponent(2 * m * m - 2 * m));
        }
        return (one_minus(Exponent(4 * m + 2), lat) * jsum_square(-m, m, lat))
            .shifted(Exponent(2 * m * m))
            .scaled(Rational(-1));
    };
    p.beta = [](std::int64_t n, const Exponent& prec, int lat) {
        if (n == 0) return LaurentSeries::zero(lat); // the n != 0 indicator
        auto num = [n, lat](const Exponent& P) { return poch_finite_tr(kQ, 2, n - 1, P, lat); };
        auto den = [n, lat](const Exponent& P) {
            return poch_finite_tr(kQ, 1, 2 * n - 1, P, lat);
        };
        return product_quotient({num}, {den}, prec, lat).scaled(Rational(par(n)));
    };
    return p;
}

BaileyPair make_bkq() {
    BaileyPair p;
    p.name = "BKq";
    p.rel = kQ;
    p.alpha = [](std::int64_t n, const Exponent& prec, int lat) {
        const std::int64_t m = n / 2;
        auto poly = [n, m, lat](const Exponent&) {
            if (n % 2 == 0) {
                return jsum_shifted(-m, m - 1, lat).shifted(Exponent(2 * m * m + 2 * m)) +
                       jsum_square(-m, m, lat).shifted(Exponent(2 * m * m));
            }
            return (jsum_square(-m, m, lat).shifted(Exponent(2 * m * m + 4 * m + 2)) +
                    jsum_shifted(-m - 1, m, lat).shifted(Exponent(2 * m * m + 2 * m)))
                .scaled(Rational(-1));
        };
        auto den = [lat](const Exponent&) { return one_minus(Exponent(1), lat); };
        return product_quotient({poly}, {den}, prec, lat);
    };
    p.beta = [](std::int64_t n, const Exponent& prec, int lat) {
        auto num = [n, lat](const Exponent& P) { return poch_finite_tr(kQ, 2, n, P, lat); };
        auto den = [n, lat](const Exponent& P) {
            return poch_finite_tr(kQ, 1, 2 * n + 1, P, lat);
        };
        return product_quotient({num}, {den}, prec, lat).scaled(Rational(par(n)));
    };
    return p;
}

BaileyPair make_l1prime() {
    BaileyPair p;
    p.name = "L1prime";
    p.rel = Monomial::one();
    p.alpha = [](std::int64_t n, const Exponent&, int lat) {
        const std::int64_t m = n / 2;
        if (n % 2 == 0) {
            return (one_minus(Exponent(2 * m), lat) * jsum_shifted(-m, m - 1, lat))
                .shifted(Exponent(4 * m * m - m))
                .scaled(Rational(2));
        }
        return (one_minus(Exponent(2 * m + 1), lat) * jsum_square(-m, m, lat))
            .shifted(Exponent(4 * m * m + 3 * m + 1))
            .scaled(Rational(-2));
    };
    p.beta = [](std::int64_t n, const Exponent& prec, int lat) {
        if (n == 0) return LaurentSeries::zero(lat);
        LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lat);
        for (std::int64_t j = 1; j <= n; ++j) {
            const Exponent shift(binom2(j + 1));
            if (shift > prec) break; // later terms start even higher
            auto n1 = [j, lat](const Exponent& P) {
                return poch_finite_tr(Monomial::minus_one(), 1, j, P, lat);
            };
            auto n2 = [j, lat](const Exponent& P) {
                return poch_finite_tr(kQ, 2, j - 1, P, lat);
            };
            auto d1 = [n, lat](const Exponent& P) { return poch_finite_tr(kNegQ, 1, n, P, lat); };
            auto d2 = [n, j, lat](const Exponent& P) {
                return poch_finite_tr(kQ, 1, n - j, P, lat);
            };
            auto d3 = [j, lat](const Exponent& P) {
                return poch_finite_tr(kQ, 1, 2 * j - 1, P, lat);
            };
            acc = acc + product_quotient({n1, n2}, {d1, d2, d3}, prec - shift, lat)
                            .shifted(shift)
                            .scaled(Rational(par(j)));
        }
        return acc;
    };
    p.alpha_val = [](std::int64_t n) {
        const std::int64_t m = n / 2;
        return n % 2 == 0 ? Exponent(2 * m * m + m) : Exponent(2 * m * m + 3 * m + 1);
    };
    p.beta_val = [](std::int64_t n) { return Exponent(n >= 1 ? 1 : 0); };
    return p;
}

BaileyPair make_l2prime() {
    BaileyPair p;
    p.name = "L2prime";
    p.rel = kQ;
    p.alpha = [](std::int64_t n, const Exponent& prec, int lat) {
        const std::int64_t m = n / 2;
        auto poly = [n, m, lat](const Exponent&) {
            if (n % 2 == 0) {
                return jsum_shifted(-m, m - 1, lat).shifted(Exponent(4 * m * m + 3 * m)) +
                       jsum_square(-m, m, lat).shifted(Exponent(4 * m * m + m));
            }
            return (jsum_square(-m, m, lat).shifted(Exponent(4 * m * m + 7 * m + 3)) +
                    jsum_shifted(-m - 1, m, lat).shifted(Exponent(4 * m * m + 5 * m + 1)))
                .scaled(Rational(-1));
        };
        auto den = [lat](const Exponent&) { return one_minus(Exponent(1), lat); };
        return product_quotient({poly}, {den}, prec, lat);
    };
    p.beta = [](std::int64_t n, const Exponent& prec, int lat) {
        LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lat);
        for (std::int64_t j = 0; j <= n; ++j) {
            const Exponent shift(binom2(j + 1));
            if (shift > prec) break;
            auto n1 = [j, lat](const Exponent& P) { return poch_finite_tr(kNegQ, 1, j, P, lat); };
            auto n2 = [j, lat](const Exponent& P) { return poch_finite_tr(kQ, 2, j, P, lat); };
            auto d1 = [n, lat](const Exponent& P) { return poch_finite_tr(kNegQ, 1, n, P, lat); };
            auto d2 = [n, j, lat](const Exponent& P) {
                return poch_finite_tr(kQ, 1, n - j, P, lat);
            };
            auto d3 = [j, lat](const Exponent& P) {
                return poch_finite_tr(kQ, 1, 2 * j + 1, P, lat);
            };
            acc = acc + product_quotient({n1, n2}, {d1, d2, d3}, prec - shift, lat)
                            .shifted(shift)
                            .scaled(Rational(par(j)));
        }
        return acc;
    };
    p.alpha_val = [](std::int64_t n) {
        const std::int64_t m = n / 2;
        return n % 2 == 0 ? Exponent(2 * m * m + m) : Exponent(2 * m * m + 3 * m + 1);
    };
    return p;
}

} // namespace

BaileyPair builtin_pair(std::string_view name) {
    if (name == "BK1") return make_bk1();
    if (name == "BKq") return make_bkq();
    if (name == "L1prime") return make_l1prime();
    if (name == "L2prime") return make_l2prime();
    throw UnknownName("unknown Bailey pair '" + std::string(name) + "'");
}

StepSpec StepSpec::minus_one_inf() { return {Monomial::minus_one(), std::nullopt}; }
StepSpec StepSpec::minus_q_inf() { return {Monomial::neg_q_pow(1), std::nullopt}; }
StepSpec StepSpec::inf_inf() { return {std::nullopt, std::nullopt}; }
StepSpec StepSpec::sqrt_pair() {
    return {Monomial::neg_q_pow(Exponent::frac(1, 2)), Monomial::q_pow(Exponent::frac(1, 2))};
}
StepSpec StepSpec::q_inf() { return {Monomial::q_pow(1), std::nullopt}; }

std::string StepSpec::str() const {
    auto side = [](const std::optional<Monomial>& m) { return m ? m->str() : "inf"; };
    return "(" + side(b) + "," + side(c) + ")";
}

VerificationReport verify_pair(const BaileyPair& pair, std::int64_t n_max,
                               const Exponent& prec, int lattice) {
    const auto started = std::chrono::steady_clock::now();
    const Monomial aq = pair.rel * Monomial::q_pow(1);

    VerificationReport rep;
    rep.name = "pairdef:" + pair.name;
    rep.order = prec;
    rep.passed = true;
    for (std::int64_t n = 0; n <= n_max && rep.passed; ++n) {
        LaurentSeries rhs = LaurentSeries::zero_to(Prec(prec), lattice);
        for (std::int64_t k = 0; k <= n; ++k) {
            auto na = [&pair, k, lattice](const Exponent& P) { return pair.alpha(k, P, lattice); };
            auto d1 = [n, k, lattice](const Exponent& P) {
                return poch_finite_tr(kQ, 1, n - k, P, lattice);
            };
            auto d2 = [aq, n, k, lattice](const Exponent& P) {
                return poch_finite_tr(aq, 1, n + k, P, lattice);
            };
            rhs = rhs + product_quotient({na}, {d1, d2}, prec, lattice);
        }
        const LaurentSeries lhs = pair.beta(n, prec, lattice);
        if (auto mm = first_mismatch(lhs, rhs, prec)) {
            rep.passed = false;
            rep.mismatch = VerificationReport::MismatchInfo{mm->exponent, mm->lhs, mm->rhs,
                                                            "n=" + std::to_string(n)};
        }
    }
    rep.elapsed = std::chrono::steady_clock::now() - started;
    return rep;
}

BaileyPair bailey_step(const BaileyPair& pair, const StepSpec& spec) {
    if (!(spec == StepSpec::minus_one_inf() || spec == StepSpec::minus_q_inf())) {
        throw InvalidArgument("unsupported lemma-step specialization " + spec.str());
    }
    const Monomial b = *spec.b;
    const Monomial aqb = pair.rel * Monomial::q_pow(1) * b.inverse(); // aq/b

    BaileyPair out;
    out.name = pair.name + "_step" + spec.str();
    out.rel = pair.rel;

    const auto alpha0 = pair.alpha;
    const auto beta0 = pair.beta;
    // alpha'_n = (b)_n (-1)^n q^{C(n,2)} (aq/b)^n / (aq/b)_n * alpha_n,
    // the c -> infinity limit applied term by term
    out.alpha = [alpha0, b, aqb](std::int64_t n, const Exponent& prec, int lat) {
        const Monomial w = (n % 2 != 0 ? Monomial::minus_one() : Monomial::one()) *
                           Monomial::q_pow(Exponent(binom2(n))) * aqb.pow(n);
        auto nb = [b, n, lat](const Exponent& P) { return poch_finite_tr(b, 1, n, P, lat); };
        auto na = [alpha0, n, lat](const Exponent& P) { return alpha0(n, P, lat); };
        auto db = [aqb, n, lat](const Exponent& P) { return poch_finite_tr(aqb, 1, n, P, lat); };
        return product_quotient({nb, na}, {db}, prec - w.exp(), lat)
            .shifted(w.exp())
            .scaled(Rational(w.sign()));
    };
    // beta'_n = (1/(aq/b)_n) sum_k (b)_k (-1)^k q^{C(k,2)} (aq/b)^k beta_k / (q)_{n-k}
    out.beta = [beta0, b, aqb](std::int64_t n, const Exponent& prec, int lat) {
        LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lat);
        for (std::int64_t k = 0; k <= n; ++k) {
            const Monomial w = (k % 2 != 0 ? Monomial::minus_one() : Monomial::one()) *
                               Monomial::q_pow(Exponent(binom2(k))) * aqb.pow(k);
            auto nb = [b, k, lat](const Exponent& P) { return poch_finite_tr(b, 1, k, P, lat); };
            auto nbeta = [beta0, k, lat](const Exponent& P) { return beta0(k, P, lat); };
            auto d1 = [aqb, n, lat](const Exponent& P) {
                return poch_finite_tr(aqb, 1, n, P, lat);
            };
            auto d2 = [n, k, lat](const Exponent& P) {
                return poch_finite_tr(kQ, 1, n - k, P, lat);
            };
            acc = acc + product_quotient({nb, nbeta}, {d1, d2}, prec - w.exp(), lat)
                            .shifted(w.exp())
                            .scaled(Rational(w.sign()));
        }
        return acc;
    };
    const auto alpha_val0 = pair.alpha_val;
    out.alpha_val = [alpha_val0, aqb](std::int64_t n) {
        return alpha_val0(n) + Exponent(binom2(n)) + aqb.exp() * Exponent(n);
    };
    out.beta_val = [](std::int64_t) { return Exponent(0); };
    return out;
}

namespace {

// sum of term(n) over n >= 0, closed once the caller's valuation bound
// exceeds prec three times in a row (the supplied bounds are eventually
// nondecreasing). nullopt when the iteration cap is reached instead — the
// direct summation does not converge.
std::optional<LaurentSeries> bounded_sum(
    const std::function<LaurentSeries(std::int64_t)>& term,
    const std::function<Exponent(std::int64_t)>& val_bound, const Exponent& prec,
    int lattice) {
    LaurentSeries acc = LaurentSeries::zero_to(Prec(prec), lattice);
    const std::int64_t cap = std::max<std::int64_t>(prec.ceil(), 0) + 40;
    int streak = 0;
    for (std::int64_t n = 0;; ++n) {
        if (n > cap) return std::nullopt;
        if (val_bound(n) > prec) {
            if (++streak >= 3 && n >= 4) break;
        } else {
            streak = 0;
            acc = acc + term(n);
        }
    }
    return acc;
}

} // namespace

LimitInstance limit_instance(const BaileyPair& pair, const StepSpec& spec,
                             const Exponent& prec, int lattice) {
    LimitInstance out;

    if (spec == StepSpec::inf_inf()) {
        // weights a^n q^{n^2} on both sides; rhs carries 1/(aq)_inf
        auto weight = [rel = pair.rel](std::int64_t n) {
            return rel.pow(n) * Monomial::q_pow(Exponent(n) * Exponent(n));
        };
        out.lhs = bounded_sum(
            [&](std::int64_t n) {
                const Monomial w = weight(n);
                return pair.beta(n, prec - w.exp(), lattice)
                    .shifted(w.exp())
                    .scaled(Rational(w.sign()));
            },
            [&](std::int64_t n) { return weight(n).exp() + pair.beta_val(n); }, prec,
            lattice);

        auto alpha_sum = [&pair, &weight, lattice](const Exponent& P) {
            auto s = bounded_sum(
                [&](std::int64_t n) {
                    const Monomial w = weight(n);
                    return pair.alpha(n, P - w.exp(), lattice)
                        .shifted(w.exp())
                        .scaled(Rational(w.sign()));
                },
                [&](std::int64_t n) { return weight(n).exp() + pair.alpha_val(n); }, P,
                lattice);
            if (!s) throw DivergentSum("alpha summation did not converge");
            return *s;
        };
        auto aq_inf = [aq = pair.rel * Monomial::q_pow(1), lattice](const Exponent& P) {
            return poch_infinite(aq, 1, P, lattice);
        };
        try {
            out.rhs = product_quotient({alpha_sum}, {aq_inf}, prec, lattice);
        } catch (const DivergentSum&) {
            out.rhs = std::nullopt;
        }
        return out;
    }

    if (spec == StepSpec::q_inf()) {
        // the q -> q^2 composition: weights (-1)^n q^{n^2} (q;q^2)_n on the
        // generators evaluated at q^2, prefactor (q;q^2)_inf / (q^2;q^2)_inf
        if (!pair.rel.is_one()) {
            throw InvalidArgument("(q,inf) limit requires a pair relative to 1");
        }
        out.lhs = bounded_sum(
            [&](std::int64_t n) {
                const Exponent sh(n * n);
                const Exponent half = (prec - sh) * Exponent::frac(1, 2);
                LaurentSeries b2 = substitute_power(pair.beta(n, half, lattice), 2);
                LaurentSeries w = poch_finite_tr(kQ, 2, n, prec - sh, lattice);
                return (w * b2).truncated(prec - sh).shifted(sh).scaled(Rational(par(n)));
            },
            [&](std::int64_t n) {
                return Exponent(n * n) + pair.beta_val(n) * Exponent(2);
            },
            prec, lattice);

        auto alpha2_sum = [&pair, lattice](const Exponent& P) {
            auto s = bounded_sum(
                [&](std::int64_t n) {
                    const Exponent sh(n * n);
                    const Exponent half = (P - sh) * Exponent::frac(1, 2);
                    LaurentSeries a2 = substitute_power(pair.alpha(n, half, lattice), 2);
                    return a2.truncated(P - sh).shifted(sh).scaled(Rational(par(n)));
                },
                [&](std::int64_t n) {
                    return Exponent(n * n) + pair.alpha_val(n) * Exponent(2);
                },
                P, lattice);
            if (!s) throw DivergentSum("alpha summation did not converge");
            return *s;
        };
        auto num_inf = [lattice](const Exponent& P) { return poch_infinite(kQ, 2, P, lattice); };
        auto den_inf = [lattice](const Exponent& P) {
            return poch_infinite(Monomial::q_pow(2), 2, P, lattice);
        };
        try {
            out.rhs = product_quotient({num_inf, alpha2_sum}, {den_inf}, prec, lattice);
        } catch (const DivergentSum&) {
            out.rhs = std::nullopt;
        }
        return out;
    }

    if (spec == StepSpec::sqrt_pair()) {
        if (!pair.rel.is_one()) {
            throw InvalidArgument("(-sqrt(q), sqrt(q)) limit requires a pair relative to 1");
        }
        if (lattice % 2 != 0) {
            throw LatticeMismatch("(-sqrt(q), sqrt(q)) limit needs an even lattice");
        }
        // lhs weights (-q^{1/2})_n (q^{1/2})_n (-1)^n = (-1)^n (q;q^2)_n; for
        // the pairs here the term valuations do not grow, so the direct sum
        // is expected to come back absent
        out.lhs = bounded_sum(
            [&](std::int64_t n) {
                LaurentSeries w1 =
                    poch_finite_tr(Monomial::neg_q_pow(Exponent::frac(1, 2)), 1, n, prec, lattice);
                LaurentSeries w2 =
                    poch_finite_tr(Monomial::q_pow(Exponent::frac(1, 2)), 1, n, prec, lattice);
                return (w1 * w2 * pair.beta(n, prec, lattice))
                    .truncated(prec)
                    .scaled(Rational(par(n)));
            },
            [&](std::int64_t n) { return pair.beta_val(n); }, prec, lattice);

        auto alpha_sum = [&pair, lattice](const Exponent& P) {
            auto s = bounded_sum(
                [&](std::int64_t n) {
                    return pair.alpha(n, P, lattice).truncated(P).scaled(Rational(par(n)));
                },
                [&](std::int64_t n) { return pair.alpha_val(n); }, P, lattice);
            if (!s) throw DivergentSum("alpha summation did not converge");
            return *s;
        };
        auto num_inf = [lattice](const Exponent& P) { return poch_infinite(kQ, 2, P, lattice); };
        auto den_inf = [lattice](const Exponent& P) {
            return poch_infinite(Monomial::q_pow(2), 2, P, lattice);
        };
        try {
            // prefactor (q;q^2)_inf / (2 (q^2;q^2)_inf)
            out.rhs = product_quotient({num_inf, alpha_sum}, {den_inf}, prec, lattice)
                          .scaled(make_rational(1, 2));
        } catch (const DivergentSum&) {
            out.rhs = std::nullopt;
        }
        return out;
    }

    throw InvalidArgument("unsupported limit specialization " + spec.str());
}

} // namespace qmock
