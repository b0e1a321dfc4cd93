#include "qmock/series.hpp"

#include <sstream>
#include <utility>

namespace qmock {

int LaurentSeries::check_lattice(int lattice) {
    if (lattice < 1) throw InvalidArgument("lattice denominator must be positive");
    return lattice;
}

void LaurentSeries::check_on_lattice(const Exponent& e) const {
    if (lattice_ % e.den() != 0) {
        throw LatticeMismatch("exponent " + e.str() + " is not on the 1/" +
                              std::to_string(lattice_) + " lattice");
    }
}

LaurentSeries LaurentSeries::zero_to(const Prec& prec, int lattice) {
    LaurentSeries s(lattice);
    s.prec_ = prec;
    return s;
}

LaurentSeries LaurentSeries::one(int lattice) {
    return term(Rational(1), Exponent(0), lattice);
}

LaurentSeries LaurentSeries::term(const Rational& c, const Exponent& e, int lattice) {
    LaurentSeries s(lattice);
    s.add_term(e, c);
    return s;
}

std::optional<Exponent> LaurentSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Rational LaurentSeries::coeff(const Exponent& e) const {
    if (!prec_.covers(e)) {
        throw PrecisionError("coefficient at q^" + e.str() +
                             " requested above precision " + prec_.str());
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSeries LaurentSeries::truncated(const Prec& p) const {
    LaurentSeries r(lattice_);
    r.prec_ = min(prec_, p);
    for (const auto& [e, c] : terms_) {
        if (r.prec_.covers(e)) r.terms_.emplace(e, c);
    }
    return r;
}

LaurentSeries LaurentSeries::negated() const {
    LaurentSeries r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    if (c == 0) return zero(lattice_); // 0*x is exactly 0, unknown tail included
    LaurentSeries r(*this);
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

LaurentSeries LaurentSeries::shifted(const Exponent& d) const {
    check_on_lattice(d);
    LaurentSeries r(lattice_);
    r.prec_ = prec_ + d;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + d, c);
    return r;
}

void LaurentSeries::add_term(const Exponent& e, const Rational& c) {
    check_on_lattice(e);
    if (!prec_.covers(e) || c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentSeries::restrict_prec(const Prec& p) {
    prec_ = min(prec_, p);
    if (prec_.is_infinite()) return;
    auto it = terms_.upper_bound(prec_.value());
    terms_.erase(it, terms_.end());
}

namespace {

void require_same_lattice(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.lattice() != b.lattice()) {
        throw LatticeMismatch("operands on different lattices 1/" +
                              std::to_string(a.lattice()) + " and 1/" +
                              std::to_string(b.lattice()));
    }
}

} // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_lattice(a, b);
    LaurentSeries r = LaurentSeries::zero_to(min(a.prec(), b.prec()), a.lattice());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_lattice(a, b);
    LaurentSeries r = LaurentSeries::zero_to(min(a.prec(), b.prec()), a.lattice());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_lattice(a, b);
    if (a.is_known_zero() || b.is_known_zero()) return LaurentSeries::zero(a.lattice());

    // The product of a = A + O(>prec_a) and b = B + O(>prec_b) is correct at
    // exponents <= min(val(A) + prec_b, val(B) + prec_a); the unknown-times-
    // unknown part starts two lattice steps above prec_a + prec_b, so it
    // binds one step above that sum. Contributions without a witness (exact
    // operand, no known term) drop out.
    Prec prec = Prec::infinite();
    const auto va = a.valuation();
    const auto vb = b.valuation();
    if (b.prec().is_finite() && va) prec = min(prec, Prec(b.prec().value() + *va));
    if (a.prec().is_finite() && vb) prec = min(prec, Prec(a.prec().value() + *vb));
    if (a.prec().is_finite() && b.prec().is_finite()) {
        prec = min(prec, Prec(a.prec().value() + b.prec().value() +
                              Exponent::frac(1, a.lattice())));
    }

    LaurentSeries r = LaurentSeries::zero_to(prec, a.lattice());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e = ea + eb;
            if (!prec.covers(e)) break; // b's map is sorted ascending
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentSeries invert(const LaurentSeries& a, const Exponent& target_prec) {
    if (!a.has_terms()) {
        throw DivisionByZero(a.is_known_zero()
                                 ? "cannot invert the zero series"
                                 : "cannot invert a series with no known term (prec " +
                                       a.prec().str() + ")");
    }
    const Exponent v = *a.valuation();
    if (!a.prec().covers(target_prec + v + v)) {
        throw PrecisionError("invert to q^" + target_prec.str() + " needs operand precision " +
                             (target_prec + v + v).str() + ", have " + a.prec().str());
    }
    const Rational lead = a.terms().begin()->second;

    // normalize to n = 1 + u with val(u) > 0 and divide 1 by it
    const Exponent norm_prec = target_prec + v; // inverse of n needed through here
    LaurentSeries n = LaurentSeries::zero_to(norm_prec, a.lattice());
    for (const auto& [e, c] : a.terms()) n.add_term(e - v, c / lead);

    LaurentSeries result = LaurentSeries::zero_to(Prec(target_prec), a.lattice());
    LaurentSeries residual = LaurentSeries::one(a.lattice()).truncated(norm_prec);
    while (residual.has_terms()) {
        const auto& [e0, c0] = *residual.terms().begin();
        // n * (c0 q^{e0}) subtracted from the residual; its leading term
        // cancels, so the residual's valuation strictly increases
        result.add_term(e0 - v, c0 / lead);
        LaurentSeries delta = LaurentSeries::zero_to(norm_prec, a.lattice());
        for (const auto& [en, cn] : n.terms()) delta.add_term(e0 + en, c0 * cn);
        residual = residual - delta;
    }
    return result;
}

LaurentSeries substitute_power(const LaurentSeries& a, std::int64_t m) {
    if (m < 1) throw InvalidArgument("substitute_power requires m >= 1");
    const Exponent scale(m);
    Prec prec = a.prec().is_infinite() ? Prec::infinite() : Prec(a.prec().value() * scale);
    LaurentSeries r = LaurentSeries::zero_to(prec, a.lattice());
    for (const auto& [e, c] : a.terms()) r.add_term(e * scale, c);
    return r;
}

std::optional<Mismatch> first_mismatch(const LaurentSeries& a, const LaurentSeries& b,
                                       const Exponent& order) {
    require_same_lattice(a, b);
    if (!a.prec().covers(order) || !b.prec().covers(order)) {
        throw PrecisionError("comparison at order " + order.str() +
                             " exceeds operand precision (" + a.prec().str() + ", " +
                             b.prec().str() + ")");
    }
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        // next exponent present on either side
        Exponent e = ia != ea ? ia->first : ib->first;
        if (ib != eb && ib->first < e) e = ib->first;
        if (e > order) break;
        Rational ca = (ia != ea && ia->first == e) ? (ia++)->second : Rational(0);
        Rational cb = (ib != eb && ib->first == e) ? (ib++)->second : Rational(0);
        if (ca != cb) return Mismatch{e, ca, cb};
    }
    return std::nullopt;
}

bool equal_mod(const LaurentSeries& a, const LaurentSeries& b, const Exponent& order) {
    return !first_mismatch(a, b, order).has_value();
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
    if (!s.has_terms()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [e, c] : s.terms()) {
            if (!first) os << " + ";
            os << c.get_str();
            if (!e.is_zero()) os << "*q^" << e.str();
            first = false;
        }
    }
    os << " (prec " << s.prec().str() << ")";
    return os;
}

namespace {

struct Factor {
    LaurentSeries value;
    Exponent valuation{0};
};

// Evaluate a factor far enough to learn its valuation. Builders perform
// complete truncations, so a factor that stays empty while the window grows
// is either structurally zero (reported by the builder as known-zero) or
// pathological; give up loudly in the latter case.
Factor resolve_factor(const SeriesBuilder& build, const Exponent& prec) {
    static constexpr int kWindowGrowth[] = {0, 8, 32, 128, 512};
    for (int grow : kWindowGrowth) {
        LaurentSeries v = build(prec + Exponent(grow));
        if (v.is_known_zero()) return {std::move(v), Exponent(0)};
        if (v.has_terms()) {
            Exponent val = *v.valuation();
            return {std::move(v), val};
        }
    }
    throw PrecisionError("factor has no term through q^" + (prec + Exponent(512)).str() +
                         " but is not structurally zero");
}

} // namespace

LaurentSeries product_quotient(const std::vector<SeriesBuilder>& num,
                               const std::vector<SeriesBuilder>& den,
                               const Exponent& prec, int lattice) {
    // pass 1: valuations
    std::vector<Factor> nf, df;
    nf.reserve(num.size());
    df.reserve(den.size());
    Exponent v_num(0), v_den(0);
    for (const auto& b : num) {
        Factor f = resolve_factor(b, prec);
        if (f.value.is_known_zero()) return LaurentSeries::zero(lattice);
        v_num += f.valuation;
        nf.push_back(std::move(f));
    }
    for (const auto& b : den) {
        Factor f = resolve_factor(b, prec);
        if (f.value.is_known_zero()) throw DivisionByZero("denominator factor is zero");
        v_den += f.valuation;
        df.push_back(std::move(f));
    }

    if (Exponent quotient_val = v_num - v_den; quotient_val > prec) {
        return LaurentSeries::zero_to(Prec(prec), lattice);
    }

    // pass 2: re-evaluate each factor with exactly the margin that makes the
    // assembled quotient correct through prec, then multiply out
    LaurentSeries numerator = LaurentSeries::one(lattice);
    for (std::size_t i = 0; i < nf.size(); ++i) {
        Exponent need = prec + v_den - v_num + nf[i].valuation;
        if (!nf[i].value.prec().covers(need)) nf[i].value = num[i](need);
        numerator = numerator * nf[i].value.truncated(need);
    }
    if (df.empty()) return numerator.truncated(prec);

    LaurentSeries denominator = LaurentSeries::one(lattice);
    for (std::size_t i = 0; i < df.size(); ++i) {
        Exponent need = prec - v_num + v_den + df[i].valuation;
        if (!df[i].value.prec().covers(need)) df[i].value = den[i](need);
        denominator = denominator * df[i].value.truncated(need);
    }
    return (numerator * invert(denominator, prec - v_num)).truncated(prec);
}

} // namespace qmock
