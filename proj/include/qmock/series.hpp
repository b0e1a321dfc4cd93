#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qmock/exponent.hpp"

namespace qmock {

/// Exact arbitrary-precision rational coefficient.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline constexpr int kDefaultLattice = 2;

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Sparse map from exponent to coefficient; zero coefficients are never
/// stored. Every stored exponent lies on the lattice (denominator divides
/// the lattice constant D) and is <= prec. Two series agree as values iff
/// their term maps agree at all exponents up to the smaller precision.
///
/// The exact zero series carries infinite precision and no valuation. An
/// *empty* series with finite precision is different: it is only known to
/// vanish up to that precision.
///
/// Values are immutable once they escape the constructing function; all
/// operations are pure, so instances may be shared freely across threads.
class LaurentSeries {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentSeries(int lattice = kDefaultLattice)
        : prec_(Prec::infinite()), lattice_(check_lattice(lattice)) {}

    static LaurentSeries zero(int lattice = kDefaultLattice) {
        return LaurentSeries(lattice);
    }
    static LaurentSeries zero_to(const Prec& prec, int lattice = kDefaultLattice);
    static LaurentSeries one(int lattice = kDefaultLattice);
    static LaurentSeries term(const Rational& c, const Exponent& e,
                              int lattice = kDefaultLattice);

    int lattice() const { return lattice_; }
    const Prec& prec() const { return prec_; }
    const TermMap& terms() const { return terms_; }

    bool has_terms() const { return !terms_.empty(); }
    /// exact zero: no terms and nothing hidden above a finite precision
    bool is_known_zero() const { return terms_.empty() && prec_.is_infinite(); }

    /// least exponent with nonzero coefficient; nullopt when no term is known
    std::optional<Exponent> valuation() const;

    /// coefficient at e; 0 when absent. Throws PrecisionError above prec.
    Rational coeff(const Exponent& e) const;

    LaurentSeries truncated(const Prec& p) const;
    LaurentSeries negated() const;
    LaurentSeries scaled(const Rational& c) const;
    LaurentSeries shifted(const Exponent& e) const; // multiply by q^e

    /// accumulate c*q^e; exponents above prec are silently ignored (they are
    /// in the unknown region). Intended for building values before escape.
    void add_term(const Exponent& e, const Rational& c);

    /// lower the precision bound, dropping terms above it
    void restrict_prec(const Prec& p);

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const { return negated(); }

    std::string str() const;

private:
    static int check_lattice(int lattice);
    void check_on_lattice(const Exponent& e) const;

    TermMap terms_;
    Prec prec_;
    int lattice_;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

/// b with a*b == 1 up to exponent target_prec inclusive, by leading-term
/// peel-off. Requires a nonzero known leading term and
/// prec(a) >= target_prec + 2*valuation(a).
LaurentSeries invert(const LaurentSeries& a, const Exponent& target_prec);

/// q -> q^m on every exponent; precision scales by m.
LaurentSeries substitute_power(const LaurentSeries& a, std::int64_t m);

struct Mismatch {
    Exponent exponent;
    Rational lhs;
    Rational rhs;
};

/// First exponent <= order where the two series disagree, or nullopt.
/// Both operands must carry precision >= order.
std::optional<Mismatch> first_mismatch(const LaurentSeries& a, const LaurentSeries& b,
                                       const Exponent& order);

bool equal_mod(const LaurentSeries& a, const LaurentSeries& b, const Exponent& order);

/// Deferred series evaluation at a requested precision. Builders must return
/// a series whose precision covers the request (an exact-zero result is fine).
using SeriesBuilder = std::function<LaurentSeries(const Exponent&)>;

/// prod(num) / prod(den) correct through `prec`.
///
/// Factor valuations are discovered first, then every factor is re-evaluated
/// with exactly the margin the truncation-propagation rules require, so the
/// result always carries precision prec. Denominator factors that vanish
/// identically raise DivisionByZero; factors that vanish to working precision
/// without being structurally zero raise PrecisionError.
LaurentSeries product_quotient(const std::vector<SeriesBuilder>& num,
                               const std::vector<SeriesBuilder>& den,
                               const Exponent& prec, int lattice = kDefaultLattice);

} // namespace qmock
