#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "qmock/monomial.hpp"
#include "qmock/report.hpp"
#include "qmock/series.hpp"

namespace qmock {

/// A Bailey pair relative to `rel`: per-index series generators for alpha_n
/// and beta_n, plus proved lower bounds on their valuations. The bounds are
/// what lets the limit summations close their tails rigorously; they must be
/// eventually nondecreasing in n.
struct BaileyPair {
    using Generator =
        std::function<LaurentSeries(std::int64_t n, const Exponent& prec, int lattice)>;
    using ValBound = std::function<Exponent(std::int64_t n)>;

    std::string name;
    Monomial rel; // +1 or +q
    Generator alpha;
    Generator beta;
    ValBound alpha_val = [](std::int64_t) { return Exponent(0); };
    ValBound beta_val = [](std::int64_t) { return Exponent(0); };
};

/// Built-in pairs: BK1 (relative 1), BKq (relative q), and the stepped pairs
/// L1prime (relative 1) and L2prime (relative q).
BaileyPair builtin_pair(std::string_view name);

/// A (b, c) specialization — a closed list, not a general two-parameter
/// engine. The lemma steps keep b finite with c -> infinity; the limit
/// specs are the three used by the multisum derivations.
struct StepSpec {
    std::optional<Monomial> b; // nullopt = limit b -> infinity
    std::optional<Monomial> c;

    static StepSpec minus_one_inf(); // (-1, inf)        lemma step
    static StepSpec minus_q_inf();   // (-q, inf)        lemma step
    static StepSpec inf_inf();       // (inf, inf)       limit
    static StepSpec sqrt_pair();     // (-q^1/2, q^1/2)  limit, needs even lattice
    static StepSpec q_inf();         // (q, inf) composed with q -> q^2

    std::string str() const;
    friend bool operator==(const StepSpec&, const StepSpec&) = default;
};

/// Check the defining relation beta_n = sum_{k<=n} alpha_k / ((q)_{n-k} (aq)_{n+k})
/// for every n <= n_max, coefficientwise through `prec`.
VerificationReport verify_pair(const BaileyPair& pair, std::int64_t n_max,
                               const Exponent& prec, int lattice = kDefaultLattice);

/// One Bailey-lemma step at (-1, inf) or (-q, inf). The c -> infinity limit
/// replaces (c)_k (X/c)^k by (-1)^k q^{C(k,2)} X^k term by term.
BaileyPair bailey_step(const BaileyPair& pair, const StepSpec& spec);

/// Both sides of the limiting Bailey relation for a supported limit spec,
/// correct through `prec`. A side is absent when its direct summation does
/// not converge (term valuations never leave the window); for the sqrt spec
/// that is the expected state of the lhs.
struct LimitInstance {
    std::optional<LaurentSeries> lhs;
    std::optional<LaurentSeries> rhs;
};
LimitInstance limit_instance(const BaileyPair& pair, const StepSpec& spec,
                             const Exponent& prec, int lattice = kDefaultLattice);

} // namespace qmock
