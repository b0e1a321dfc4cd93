#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qmock/dump.hpp"
#include "support.hpp"

using namespace qmock;
using testsupport::make_series;
using testsupport::same_terms;

#ifndef QMOCK_CLI_PATH
#define QMOCK_CLI_PATH "qmock"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QMOCK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("dump round trip is lossless") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> num(-9, 30);
    std::uniform_int_distribution<int> den(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentSeries s = LaurentSeries::zero_to(Prec(Exponent(15)), 2);
        for (int i = 0; i < 8; ++i) {
            // large coefficients to exercise the string path
            Rational c(mpz_class("123456789012345678901234567890") + trial * 7 + i,
                       mpz_class(3 + i));
            c.canonicalize();
            s.add_term(Exponent::frac(num(rng), den(rng) ? 2 : 1), c);
        }
        const auto dump = CoefficientDump::from_series("test", s, Exponent(15));
        const auto back = CoefficientDump::from_json(dump.to_json()).to_series();
        CHECK(same_terms(back, s));
        CHECK(back.prec() == Prec(Exponent(15)));
        CHECK(back.lattice() == s.lattice());
    }
}

TEST_CASE("dump rejects orders above the series precision") {
    const auto s = make_series({{0, 1}}, Prec(Exponent(3)));
    CHECK_THROWS_AS((void)CoefficientDump::from_series("x", s, Exponent(5)), PrecisionError);
}

TEST_CASE("text dump format") {
    LaurentSeries s = LaurentSeries::zero_to(Prec(Exponent(4)), 2);
    s.add_term(Exponent(-3), make_rational(1, 2));
    s.add_term(Exponent::frac(5, 2), Rational(-7));
    const auto dump = CoefficientDump::from_series("x", s, Exponent(4));
    std::ostringstream os;
    dump.write_text(os);
    CHECK(os.str() == "q^-3: 1/2\nq^5/2: -7\n");
}

TEST_CASE("expand: known values and formats") {
    const auto w1 = run_cli("expand W1 --order 4");
    CHECK(w1.exit_code == 0);
    CHECK(w1.out == "q^2: -2\nq^4: -2\n");

    const auto s1 = run_cli("expand S1 --order 3");
    CHECK(s1.exit_code == 0);
    CHECK(s1.out == "q^0: 1\nq^3: 1\n");

    const auto js = run_cli("expand W1 --order 4 --format json");
    CHECK(js.exit_code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["expr"] == "W1");
    CHECK(j["order"] == "4");
    CHECK(j["lattice_denom"] == 2);
    REQUIRE(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][0] == nlohmann::json({"2", "1", "-2", "1"}));
    const auto parsed = CoefficientDump::from_json(j).to_series();
    CHECK(parsed.coeff(Exponent(4)) == Rational(-2));
}

TEST_CASE("exit codes") {
    CHECK(run_cli("expand nosuch --order 3").exit_code == 2);
    CHECK(run_cli("verify nosuch --order 3").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("expand").exit_code == 2);
    // evaluation error: the sqrt limit needs an even lattice
    CHECK(run_cli("verify bailey_limits --order 10 --lattice-denom 1").exit_code == 3);
    CHECK(run_cli("verify corollary --order 20").exit_code == 0);
    CHECK(run_cli("verify thm_main_2 --order 0").exit_code == 0); // vacuous
}

TEST_CASE("verify all at a small order: passes, deterministic output") {
    const auto first = run_cli("verify all --order 12");
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("FAIL") == std::string::npos);
    const auto second = run_cli("verify all --order 12");
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);

    const auto js = run_cli("verify all --order 12 --format json");
    CHECK(js.exit_code == 0);
    const auto arr = nlohmann::json::parse(js.out);
    CHECK(arr.is_array());
    for (const auto& r : arr) CHECK(r["passed"] == true);
}

TEST_CASE("list covers exactly the verify names") {
    const auto ls = run_cli("list --format json");
    CHECK(ls.exit_code == 0);
    const auto arr = nlohmann::json::parse(ls.out);
    REQUIRE(arr.is_array());
    bool has_thm = false, has_garvan = false, has_mixed = false;
    for (const auto& item : arr) {
        const std::string name = item["name"];
        has_thm |= name == "thm_main_1";
        has_garvan |= name == "garvan";
        has_mixed |= name == "mixed_mock";
        // every listed name must be verifiable
        CHECK(run_cli("verify " + name + " --order 4").exit_code == 0);
    }
    CHECK(has_thm);
    CHECK(has_garvan);
    CHECK(has_mixed);
}
