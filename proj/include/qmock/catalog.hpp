#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qmock/report.hpp"

namespace qmock {

/// A registered identity check: evaluates both sides at the requested order
/// and compares coefficients exactly.
struct IdentityCheck {
    std::string name;
    std::string description;
    std::string anchor; // the identity itself in compact notation
    std::function<VerificationReport(const Exponent& order, int lattice)> run;
};

const std::vector<IdentityCheck>& identity_catalog();
const IdentityCheck& find_check(std::string_view name); // throws UnknownName

VerificationReport run_check(std::string_view name, const Exponent& order,
                             int lattice = kDefaultLattice);

/// Run the whole catalog; checks are independent pure computations and run
/// concurrently, reports come back in catalog order.
std::vector<VerificationReport> run_all_checks(const Exponent& order,
                                               int lattice = kDefaultLattice,
                                               bool parallel = true);

/// A series the CLI can expand by name.
struct NamedSeries {
    std::string name;
    std::string description;
    std::function<LaurentSeries(const Exponent& order, int lattice)> build;
};

const std::vector<NamedSeries>& series_catalog();
LaurentSeries expand_named(std::string_view name, const Exponent& order,
                           int lattice = kDefaultLattice); // throws UnknownName

} // namespace qmock
