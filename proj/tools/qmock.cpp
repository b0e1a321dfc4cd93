// Command-line front end: expand cataloged q-series, run identity checks,
// emit machine-readable coefficient data.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error (unknown name, bad flags), 3 evaluation error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmock/catalog.hpp"
#include "qmock/dump.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEvalError = 3;

nlohmann::json report_json(const qmock::VerificationReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["order"] = r.order.str();
    j["passed"] = r.passed;
    if (r.mismatch) {
        j["mismatch"] = {{"exponent", r.mismatch->exponent.str()},
                         {"lhs", r.mismatch->lhs.get_str()},
                         {"rhs", r.mismatch->rhs.get_str()},
                         {"context", r.mismatch->context}};
    }
    return j;
}

void print_report(std::ostream& os, const qmock::VerificationReport& r) {
    if (r.passed) {
        os << "PASS " << r.name << " (order " << r.order.str() << ")\n";
        return;
    }
    os << "FAIL " << r.name << " (order " << r.order.str() << ")";
    if (r.mismatch) {
        os << " at q^" << r.mismatch->exponent.str() << ": lhs=" << r.mismatch->lhs.get_str()
           << ", rhs=" << r.mismatch->rhs.get_str();
        if (!r.mismatch->context.empty()) os << " [" << r.mismatch->context << "]";
    }
    os << "\n";
}

int cmd_expand(const std::string& name, std::int64_t order, const std::string& format,
               int lattice) {
    const qmock::LaurentSeries s = qmock::expand_named(name, qmock::Exponent(order), lattice);
    const auto dump = qmock::CoefficientDump::from_series(name, s, qmock::Exponent(order));
    if (format == "json") {
        std::cout << dump.to_json().dump(2) << "\n";
    } else {
        dump.write_text(std::cout);
    }
    return kExitOk;
}

int cmd_verify(const std::string& name, std::int64_t order, const std::string& format,
               int lattice) {
    std::vector<qmock::VerificationReport> reports;
    if (name == "all") {
        reports = qmock::run_all_checks(qmock::Exponent(order), lattice);
    } else {
        reports.push_back(qmock::run_check(name, qmock::Exponent(order), lattice));
    }

    bool all_passed = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(report_json(r));
            all_passed = all_passed && r.passed;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            print_report(std::cout, r);
            all_passed = all_passed && r.passed;
        }
    }
    for (const auto& r : reports) {
        std::cerr << "# " << r.name << " took " << r.elapsed.count() << "s\n";
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_list(const std::string& format) {
    const auto& cat = qmock::identity_catalog();
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cat) {
            arr.push_back({{"name", c.name}, {"description", c.description},
                           {"anchor", c.anchor}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& c : cat) {
            std::cout << c.name << "\t" << c.description << "\n\t" << c.anchor << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series expansion and identity verification"};
    app.require_subcommand(1);

    std::string expr;
    std::string check_name;
    std::int64_t order = 100;
    std::string format = "text";
    int lattice = qmock::kDefaultLattice;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order, "highest exponent to include (inclusive)")
            ->capture_default_str();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--lattice-denom", lattice, "exponent lattice denominator")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* expand = app.add_subcommand("expand", "print coefficients of a cataloged series");
    expand->add_option("name", expr, "series name")->required();
    add_common(expand);

    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("name", check_name, "check name, or 'all'")->required();
    add_common(verify);

    CLI::App* list = app.add_subcommand("list", "list the registered checks");
    list->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(expr, order, format, lattice);
        if (verify->parsed()) return cmd_verify(check_name, order, format, lattice);
        return cmd_list(format);
    } catch (const qmock::UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qmock::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEvalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitEvalError;
    }
}
