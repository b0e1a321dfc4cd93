#include "qmock/dump.hpp"

#include <ostream>

namespace qmock {

namespace {

std::int64_t parse_i64(const std::string& s) {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw InvalidArgument("malformed integer '" + s + "'");
    return v;
}

} // namespace

CoefficientDump CoefficientDump::from_series(std::string expr, const LaurentSeries& s,
                                             const Exponent& order) {
    if (!s.prec().covers(order)) {
        throw PrecisionError("dump at order " + order.str() + " exceeds series precision " +
                             s.prec().str());
    }
    CoefficientDump d;
    d.expr = std::move(expr);
    d.order = order;
    d.lattice_denom = s.lattice();
    for (const auto& [e, c] : s.terms()) {
        if (e > order) break;
        d.coeffs.push_back({std::to_string(e.num()), std::to_string(e.den()),
                            c.get_num().get_str(), c.get_den().get_str()});
    }
    return d;
}

LaurentSeries CoefficientDump::to_series() const {
    LaurentSeries s = LaurentSeries::zero_to(Prec(order), lattice_denom);
    for (const auto& t : coeffs) {
        const Exponent e = Exponent::frac(parse_i64(t.exp_num), parse_i64(t.exp_den));
        Rational c(mpz_class(t.coeff_num), mpz_class(t.coeff_den));
        c.canonicalize();
        s.add_term(e, c);
    }
    return s;
}

nlohmann::json CoefficientDump::to_json() const {
    nlohmann::json j;
    j["expr"] = expr;
    j["order"] = order.str();
    j["lattice_denom"] = lattice_denom;
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& t : coeffs) {
        arr.push_back({t.exp_num, t.exp_den, t.coeff_num, t.coeff_den});
    }
    return j;
}

CoefficientDump CoefficientDump::from_json(const nlohmann::json& j) {
    CoefficientDump d;
    d.expr = j.at("expr").get<std::string>();
    const std::string order_str = j.at("order").get<std::string>();
    const auto slash = order_str.find('/');
    d.order = slash == std::string::npos
                  ? Exponent(parse_i64(order_str))
                  : Exponent::frac(parse_i64(order_str.substr(0, slash)),
                                   parse_i64(order_str.substr(slash + 1)));
    d.lattice_denom = j.at("lattice_denom").get<int>();
    for (const auto& t : j.at("coeffs")) {
        d.coeffs.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                            t.at(2).get<std::string>(), t.at(3).get<std::string>()});
    }
    return d;
}

void CoefficientDump::write_text(std::ostream& os) const {
    for (const auto& t : coeffs) {
        os << "q^" << t.exp_num;
        if (t.exp_den != "1") os << "/" << t.exp_den;
        os << ": " << t.coeff_num;
        if (t.coeff_den != "1") os << "/" << t.coeff_den;
        os << "\n";
    }
}

} // namespace qmock
