#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmock/series.hpp"

namespace qmock {

/// Lossless machine-readable coefficient data. All numbers travel as decimal
/// strings: coefficients and (in principle) exponents exceed native ranges.
struct CoefficientDump {
    struct Entry {
        std::string exp_num;
        std::string exp_den;
        std::string coeff_num;
        std::string coeff_den;
    };

    std::string expr;
    Exponent order{0};
    int lattice_denom = kDefaultLattice;
    std::vector<Entry> coeffs;

    /// Snapshot of s through `order`; s must carry precision >= order.
    static CoefficientDump from_series(std::string expr, const LaurentSeries& s,
                                       const Exponent& order);

    /// Reconstructs the exact series (precision = order).
    LaurentSeries to_series() const;

    nlohmann::json to_json() const;
    static CoefficientDump from_json(const nlohmann::json& j);

    /// One "q^e: c" line per term.
    void write_text(std::ostream& os) const;
};

} // namespace qmock
