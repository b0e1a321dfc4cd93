#include "qmock/monomial.hpp"

namespace qmock {

Monomial::Monomial(int sign, const Exponent& e) : sign_(sign), exp_(e) {
    if (sign != 1 && sign != -1) throw InvalidArgument("monomial sign must be +1 or -1");
}

Monomial Monomial::pow(std::int64_t k) const {
    int s = (sign_ == -1 && (k % 2 != 0)) ? -1 : 1;
    return Monomial(s, exp_ * Exponent(k));
}

std::string Monomial::str() const {
    std::string s = sign_ == 1 ? "" : "-";
    if (exp_.is_zero()) return s + "1";
    return s + "q^" + exp_.str();
}

} // namespace qmock
