// Acceptance suite: every criterion at its stated order, one line each.
// Exact rational arithmetic throughout — a pass means coefficient-identical,
// no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qmock/bailey.hpp"
#include "qmock/catalog.hpp"
#include "qmock/hecke.hpp"
#include "qmock/mock.hpp"
#include "qmock/qprod.hpp"
#include "support.hpp"

using namespace qmock;
using testsupport::read_golden;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string& detail)> run;
    double budget_seconds = 0; // 0 = no runtime requirement
};

bool expect_equal(const LaurentSeries& lhs, const LaurentSeries& rhs, const Exponent& order,
                  const std::string& what, std::string& detail) {
    if (auto mm = first_mismatch(lhs, rhs, order)) {
        detail = what + " differs at q^" + mm->exponent.str() + ": " + mm->lhs.get_str() +
                 " vs " + mm->rhs.get_str();
        return false;
    }
    return true;
}

// ---- criterion 1: defining relation of the four pairs ----------------------

bool crit_bailey_relation(std::string& detail) {
    for (const char* name : {"BK1", "BKq", "L1prime", "L2prime"}) {
        const auto rep = verify_pair(builtin_pair(name), 8, Exponent(60), 2);
        if (!rep.passed) {
            detail = std::string(name) + " fails at " + rep.mismatch->context + ", q^" +
                     rep.mismatch->exponent.str();
            return false;
        }
    }
    return true;
}

// ---- criterion 2: lemma steps reproduce the recorded pairs ------------------

bool crit_lemma_steps(std::string& detail) {
    struct Row {
        const char* src;
        StepSpec spec;
        const char* dst;
    };
    const Row rows[] = {
        {"BK1", StepSpec::minus_one_inf(), "L1prime"},
        {"BKq", StepSpec::minus_q_inf(), "L2prime"},
    };
    const Exponent order(50);
    for (const auto& r : rows) {
        const BaileyPair stepped = bailey_step(builtin_pair(r.src), r.spec);
        const BaileyPair target = builtin_pair(r.dst);
        for (std::int64_t n = 0; n <= 6; ++n) {
            const std::string tag = std::string(r.src) + "->" + r.dst + " n=" +
                                    std::to_string(n);
            if (!expect_equal(stepped.alpha(n, order, 2), target.alpha(n, order, 2), order,
                              tag + " alpha", detail) ||
                !expect_equal(stepped.beta(n, order, 2), target.beta(n, order, 2), order,
                              tag + " beta", detail)) {
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 3: the four decompositions f = g + theta ---------------------

bool crit_decompositions(std::string& detail) {
    struct Row {
        const char* tag;
        HeckeParams p;
        Monomial x;
        Exponent base;
        std::int64_t tn, tp;
    };
    const Row rows[] = {
        {"f_353(q^5,q^5,q)", HeckeParams(3, 5, 3), Monomial::q_pow(5), 1, 3, 2},
        {"f_131(-q^2,-q^2,q)", HeckeParams(1, 3, 1), Monomial::neg_q_pow(2), 1, 1, 2},
        {"f_121(-q^7,-q^7,q^4)", HeckeParams(1, 2, 1), Monomial::neg_q_pow(7), 4, 1, 1},
        {"f_353(q^3,q^3,q)", HeckeParams(3, 5, 3), Monomial::q_pow(3), 1, 3, 2},
    };
    const Exponent order(60);
    for (const auto& r : rows) {
        const LaurentSeries lhs = f_eval(r.p, r.x, r.x, r.base, order, 2);
        const LaurentSeries rhs =
            g_eval(r.p, r.x, r.x, r.base, Monomial::minus_one(), Monomial::minus_one(),
                   order, 2) +
            theta_np(r.tn, r.tp, r.x, r.x, r.base, order, 2);
        if (!expect_equal(lhs, rhs, order, r.tag, detail)) return false;
    }
    return true;
}

// ---- criterion 4: the four series by all three routes ------------------------

bool crit_theorem_main(std::string& detail) {
    const Exponent order(100);
    for (int i = 1; i <= 4; ++i) {
        const LaurentSeries w = i == 1   ? W1(order, 2)
                                : i == 2 ? W2(order, 2)
                                : i == 3 ? W3(order, 2)
                                         : W4(order, 2);
        const std::string tag = "W" + std::to_string(i);
        if (!expect_equal(w, fform(i, order, 2), order, tag + " vs product form", detail) ||
            !expect_equal(w, rhs_theorem_main(i, order, 2), order,
                          tag + " vs Appell-Lerch form", detail)) {
            return false;
        }
    }
    return true;
}

// ---- criterion 5: corollary and the standalone theta identity ---------------

bool crit_corollary(std::string& detail) {
    const Exponent order(100);
    const LaurentSeries rhs = T1(order - Exponent(1), 2).shifted(1).scaled(Rational(2)) -
                              S1(order - Exponent(1), 2).shifted(1);
    if (!expect_equal(W2(order, 2), rhs, order, "W2 vs 2qT1 - qS1", detail)) return false;

    const auto rep = run_check("garvan", order, 2);
    if (!rep.passed) {
        detail = "theta identity fails at q^" + rep.mismatch->exponent.str();
        return false;
    }
    return true;
}

// ---- criterion 6: the mixed-mock evaluation ---------------------------------

bool crit_mixed_mock(std::string& detail) {
    const auto rep = run_check("mixed_mock", Exponent(100), 2);
    if (!rep.passed) {
        detail = "fails at q^" + rep.mismatch->exponent.str();
        return false;
    }
    return true;
}

// ---- criterion 7: property suites -------------------------------------------

bool crit_property_suites(std::string& detail) {
    const Exponent order(40);
    for (const char* name : {"j_props", "appell_props", "fprops"}) {
        const auto rep = run_check(name, order, 2);
        if (!rep.passed) {
            detail = std::string(name) + " fails at q^" + rep.mismatch->exponent.str() +
                     " [" + rep.mismatch->context + "]";
            return false;
        }
    }
    return true;
}

// ---- criterion 8: oracle agreements and golden files ------------------------

bool crit_oracles(std::string& detail) {
    // product form vs bilateral sum form
    if (!expect_equal(jacobi_j(Monomial::minus_one(), 1, Exponent(50), 2),
                      jacobi_j_sum(Monomial::minus_one(), 1, Exponent(50), 2), Exponent(50),
                      "j(-1,q) product vs sum", detail) ||
        !expect_equal(jacobi_j(Monomial::q_pow(5), 48, Exponent(100), 2),
                      jacobi_j_sum(Monomial::q_pow(5), 48, Exponent(100), 2), Exponent(100),
                      "j(q^5,q^48) product vs sum", detail)) {
        return false;
    }

    // partition counts against the inverted Euler product
    const auto euler = poch_infinite(Monomial::q_pow(1), 1, Exponent(70), 2);
    const auto pgf = invert(euler, Exponent(30));
    const auto counts = testsupport::partition_counts(30);
    for (int n = 0; n <= 30; ++n) {
        if (pgf.coeff(Exponent(n)) != Rational(counts[n])) {
            detail = "partition count mismatch at n=" + std::to_string(n);
            return false;
        }
    }

    // the two evaluation routes for the double sums
    const HeckeParams p353(3, 5, 3);
    for (std::int64_t e : {5, 3}) {
        const Monomial x = Monomial::q_pow(e);
        if (!expect_equal(f_eval(p353, x, x, 1, Exponent(40), 2),
                          f_via_quad_split(p353, x, x, 1, Exponent(40), 2), Exponent(40),
                          "f_353 direct vs quadratic split (x=q^" + std::to_string(e) + ")",
                          detail)) {
            return false;
        }
    }

    // frozen golden files
    struct Row {
        const char* file;
        std::function<LaurentSeries(const Exponent&)> fn;
    };
    const Row rows[] = {
        {"w1.txt", [](const Exponent& o) { return W1(o, 2); }},
        {"w2.txt", [](const Exponent& o) { return W2(o, 2); }},
        {"w3.txt", [](const Exponent& o) { return W3(o, 2); }},
        {"w4.txt", [](const Exponent& o) { return W4(o, 2); }},
        {"s1.txt", [](const Exponent& o) { return S1(o, 2); }},
        {"t1.txt", [](const Exponent& o) { return T1(o, 2); }},
        {"omega.txt", [](const Exponent& o) { return omega_3rd(o, 2); }},
        {"pentagonal.txt",
         [](const Exponent& o) { return poch_infinite(Monomial::q_pow(1), 1, o, 2); }},
        {"distinct_partitions.txt",
         [](const Exponent& o) { return poch_infinite(Monomial::neg_q_pow(1), 1, o, 2); }},
        {"partitions.txt",
         [](const Exponent& o) {
             return invert(poch_infinite(Monomial::q_pow(1), 1, o + o + Exponent(2), 2), o);
         }},
        {"j_neg1_q.txt",
         [](const Exponent& o) { return jacobi_j(Monomial::minus_one(), 1, o, 2); }},
        {"f_353_q5q5.txt",
         [&](const Exponent& o) {
             return f_eval(p353, Monomial::q_pow(5), Monomial::q_pow(5), 1, o, 2);
         }},
        {"f_131_nq2nq2.txt",
         [](const Exponent& o) {
             return f_eval(HeckeParams(1, 3, 1), Monomial::neg_q_pow(2),
                           Monomial::neg_q_pow(2), 1, o, 2);
         }},
        {"f_121_nq7nq7.txt",
         [](const Exponent& o) {
             return f_eval(HeckeParams(1, 2, 1), Monomial::neg_q_pow(7),
                           Monomial::neg_q_pow(7), 4, o, 2);
         }},
        {"f_353_q3q3.txt",
         [&](const Exponent& o) {
             return f_eval(p353, Monomial::q_pow(3), Monomial::q_pow(3), 1, o, 2);
         }},
    };
    for (const auto& r : rows) {
        const auto g = read_golden(r.file);
        if (!expect_equal(r.fn(g.order), g.series, g.order, r.file, detail)) return false;
    }

    // leading coefficients, pinned
    const struct {
        const char* tag;
        LaurentSeries actual;
        LaurentSeries expected;
        Exponent order;
    } leading[] = {
        {"W1", W1(Exponent(2), 2), testsupport::make_series({{2, -2}}), Exponent(2)},
        {"W2", W2(Exponent(2), 2), testsupport::make_series({{1, 1}, {2, -2}}), Exponent(2)},
        {"W4", W4(Exponent(1), 2), testsupport::make_series({{0, 1}, {1, 1}}), Exponent(1)},
        {"S1", S1(Exponent(3), 2), testsupport::make_series({{0, 1}, {3, 1}}), Exponent(3)},
        {"T1", T1(Exponent(2), 2), testsupport::make_series({{0, 1}, {1, -1}, {2, 2}}),
         Exponent(2)},
    };
    for (const auto& l : leading) {
        if (!expect_equal(l.actual, l.expected, l.order,
                          std::string(l.tag) + " leading terms", detail)) {
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"Bailey defining relation, four pairs, n<=8, order 60", crit_bailey_relation, 10.0},
        {"lemma steps reproduce the recorded pairs, n<=6, order 50", crit_lemma_steps, 0},
        {"f = g + theta for the four instances, order 60", crit_decompositions, 0},
        {"multisum = product form = Appell-Lerch form, order 100", crit_theorem_main, 60.0},
        {"W2 = 2qT1 - qS1 and the theta identity, order 100", crit_corollary, 0},
        {"mixed-mock evaluation, order 100", crit_mixed_mock, 0},
        {"property suites (j, Appell-Lerch, double sum), order 40", crit_property_suites, 0},
        {"oracle agreements and golden files", crit_oracles, 0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(secs) + "s exceeds " +
                     std::to_string(c.budget_seconds) + "s";
        }
        std::printf("[%zu/%zu] %s criterion %zu: %s (%.2fs)%s%s\n", i + 1, criteria.size(),
                    ok ? "PASS" : "FAIL", i + 1, c.label.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
