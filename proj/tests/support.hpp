#pragma once

// Shared helpers for the test suites: tiny independent oracles (partition
// counting, pentagonal/triangular-number sums, rectangle enumeration of the
// double sums) and golden-file plumbing. Nothing here goes through the
// library's evaluation paths, so agreement is meaningful.

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmock/series.hpp"

namespace testsupport {

using qmock::Exponent;
using qmock::LaurentSeries;
using qmock::Prec;
using qmock::Rational;

inline LaurentSeries make_series(std::initializer_list<std::pair<Exponent, long>> terms,
                                 Prec prec = Prec::infinite(), int lattice = 2) {
    LaurentSeries s = LaurentSeries::zero_to(prec, lattice);
    for (const auto& [e, c] : terms) s.add_term(e, Rational(c));
    return s;
}

// exact term-map equality (not just equality mod a precision)
inline bool same_terms(const LaurentSeries& a, const LaurentSeries& b) {
    return a.terms() == b.terms();
}

// ---- independent oracles ----------------------------------------------------

inline std::vector<long> partition_counts(int nmax) {
    std::vector<long> p(nmax + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= nmax; ++part) {
        for (int n = part; n <= nmax; ++n) p[n] += p[n - part];
    }
    return p;
}

inline std::vector<long> distinct_partition_counts(int nmax) {
    std::vector<long> p(nmax + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= nmax; ++part) {
        for (int n = nmax; n >= part; --n) p[n] += p[n - part];
    }
    return p;
}

// (q)_inf by the pentagonal number theorem
inline LaurentSeries pentagonal_series(std::int64_t order, int lattice = 2) {
    LaurentSeries s = LaurentSeries::zero_to(Prec(Exponent(order)), lattice);
    for (std::int64_t k = -order - 2; k <= order + 2; ++k) {
        const std::int64_t e = k * (3 * k - 1) / 2;
        if (e >= 0 && e <= order) s.add_term(Exponent(e), Rational(k % 2 ? -1 : 1));
    }
    return s;
}

// j(-1, q) = sum_n q^{n(n-1)/2} over all integers n
inline LaurentSeries triangular_bilateral(std::int64_t order, int lattice = 2) {
    LaurentSeries s = LaurentSeries::zero_to(Prec(Exponent(order)), lattice);
    for (std::int64_t n = -order - 2; n <= order + 2; ++n) {
        const std::int64_t e = n * (n - 1) / 2;
        if (e <= order) s.add_term(Exponent(e), Rational(1));
    }
    return s;
}

// f_{a,b,c}(xs q^xe, ys q^ye, q^base) by plain rectangle enumeration
inline LaurentSeries f_rectangle(std::int64_t a, std::int64_t b, std::int64_t c, int xs,
                                 std::int64_t xe, int ys, std::int64_t ye, std::int64_t base,
                                 std::int64_t order, std::int64_t R = 60, int lattice = 2) {
    LaurentSeries s = LaurentSeries::zero_to(Prec(Exponent(order)), lattice);
    for (std::int64_t r = -R; r <= R; ++r) {
        for (std::int64_t t = -R; t <= R; ++t) {
            if ((r >= 0) != (t >= 0)) continue;
            const std::int64_t sg = r >= 0 ? 1 : -1;
            const std::int64_t e =
                base * (a * r * (r - 1) / 2 + b * r * t + c * t * (t - 1) / 2) + xe * r +
                ye * t;
            if (e > order) continue;
            long coef = sg * ((r + t) % 2 ? -1 : 1);
            if (xs < 0 && (r % 2 + 2) % 2 == 1) coef = -coef;
            if (ys < 0 && (t % 2 + 2) % 2 == 1) coef = -coef;
            s.add_term(Exponent(e), Rational(coef));
        }
    }
    return s;
}

// ---- golden files -----------------------------------------------------------

#ifndef QMOCK_GOLDEN_DIR
#define QMOCK_GOLDEN_DIR "."
#endif

struct Golden {
    LaurentSeries series{2};
    Exponent order{0};
};

inline Golden read_golden(const std::string& name, int lattice = 2) {
    const std::string path = std::string(QMOCK_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing golden file " + path);

    Golden g;
    std::string line;
    std::int64_t order = 0;
    std::vector<std::pair<Exponent, Rational>> terms;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line);
            std::string hash, word;
            hs >> hash >> word;
            if (word == "order") hs >> order;
            continue;
        }
        // "q^<e>: <c>"
        const auto caret = line.find('^');
        const auto colon = line.find(':');
        const std::int64_t e = std::stoll(line.substr(caret + 1, colon - caret - 1));
        const std::string cs = line.substr(colon + 2);
        const auto slash = cs.find('/');
        Rational c = slash == std::string::npos
                         ? Rational(mpz_class(cs))
                         : Rational(mpz_class(cs.substr(0, slash)),
                                    mpz_class(cs.substr(slash + 1)));
        c.canonicalize();
        terms.emplace_back(Exponent(e), c);
    }
    g.order = Exponent(order);
    g.series = LaurentSeries::zero_to(Prec(g.order), lattice);
    for (const auto& [e, c] : terms) g.series.add_term(e, c);
    return g;
}

} // namespace testsupport
