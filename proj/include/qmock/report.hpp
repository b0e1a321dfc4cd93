#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "qmock/series.hpp"

namespace qmock {

/// Outcome of one identity check: exact pass/fail with the first mismatching
/// coefficient on failure.
struct VerificationReport {
    std::string name;
    Exponent order{0};
    bool passed = false;

    struct MismatchInfo {
        Exponent exponent;
        Rational lhs;
        Rational rhs;
        std::string context; // which sub-instance failed, e.g. "n=3"
    };
    std::optional<MismatchInfo> mismatch;

    std::chrono::duration<double> elapsed{0};
};

inline VerificationReport compare_series(std::string name, const LaurentSeries& lhs,
                                         const LaurentSeries& rhs, const Exponent& order,
                                         std::string context = "") {
    VerificationReport rep;
    rep.name = std::move(name);
    rep.order = order;
    if (auto mm = first_mismatch(lhs, rhs, order)) {
        rep.passed = false;
        rep.mismatch = VerificationReport::MismatchInfo{mm->exponent, mm->lhs, mm->rhs,
                                                        std::move(context)};
    } else {
        rep.passed = true;
    }
    return rep;
}

} // namespace qmock
