#ifndef CPN_REPORT_HPP
#define CPN_REPORT_HPP

// Verification report: one record per check plus the configuration that
// produced it. Serializes to a fixed JSON layout (see docs/report_schema.json)
// or to a plain-text table.

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cpn {

struct VerifyConfig {
    std::size_t order = 64;
    int nmax = 12;
    int smax = 12;
    std::uint64_t seed = 42;
    int trials = 200;
    double tolerance = 1e-9;
};

struct Check {
    std::string id;
    std::string paper_anchor;
    std::string description;
    std::string expected;
    std::string actual;
    bool exact = true;
    std::optional<double> tolerance; // floating-point checks only
    std::optional<double> residual;  // floating-point checks only
    bool passed = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    VerifyConfig config;

    std::size_t total() const { return checks.size(); }
    std::size_t passed() const
    {
        std::size_t p = 0;
        for (const auto &c : checks)
            p += c.passed ? 1 : 0;
        return p;
    }
    std::size_t failed() const { return total() - passed(); }
    bool all_passed() const { return failed() == 0; }
    int exit_code() const { return all_passed() ? 0 : 1; }
};

inline nlohmann::ordered_json to_json(const VerifyConfig &c)
{
    nlohmann::ordered_json j;
    j["order"] = c.order;
    j["nmax"] = c.nmax;
    j["smax"] = c.smax;
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["tolerance"] = c.tolerance;
    return j;
}

inline nlohmann::ordered_json to_json(const Check &c)
{
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["paper_anchor"] = c.paper_anchor;
    j["description"] = c.description;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["exact"] = c.exact;
    if (!c.exact) {
        j["tolerance"] = c.tolerance.value_or(0.0);
        j["residual"] = c.residual.value_or(0.0);
    }
    j["passed"] = c.passed;
    return j;
}

inline nlohmann::ordered_json to_json(const VerificationReport &r)
{
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto &c : r.checks)
        j["checks"].push_back(to_json(c));
    j["summary"] = {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}};
    j["config"] = to_json(r.config);
    return j;
}

inline std::string format_double(double x)
{
    std::ostringstream os;
    os << std::setprecision(3) << std::scientific << x;
    return os.str();
}

inline std::string to_table(const VerificationReport &r)
{
    std::ostringstream os;
    for (const auto &c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.description << "\n";
        os << "       anchor:   " << c.paper_anchor << "\n";
        os << "       expected: " << c.expected << "\n";
        os << "       actual:   " << c.actual;
        if (c.exact)
            os << "  [exact]";
        else
            os << "  [residual " << format_double(c.residual.value_or(0.0)) << " <= tol "
               << format_double(c.tolerance.value_or(0.0)) << "]";
        os << "\n";
    }
    os << "summary: " << r.passed() << "/" << r.total() << " passed, " << r.failed() << " failed\n";
    return os.str();
}

} // namespace cpn

#endif // CPN_REPORT_HPP
