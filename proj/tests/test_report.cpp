#include <set>
#include <string>

#include <gtest/gtest.h>

#include "cpn/report.hpp"
#include "cpn/verify.hpp"

namespace {

cpn::VerifyConfig quick_config()
{
    cpn::VerifyConfig cfg;
    cfg.trials = 20;
    cfg.nmax = 6;
    cfg.smax = 6;
    return cfg;
}

} // namespace

TEST(Report, SchemaShape)
{
    const auto report = cpn::run_verification(quick_config());
    const auto j = cpn::to_json(report);
    ASSERT_TRUE(j.is_object());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"checks", "summary", "config"}));

    ASSERT_EQ(j["checks"].size(), 12u);
    std::set<std::string> ids;
    for (const auto &c : j["checks"]) {
        for (const char *k : {"id", "paper_anchor", "description", "expected", "actual"})
            EXPECT_TRUE(c.at(k).is_string()) << k;
        EXPECT_TRUE(c.at("passed").is_boolean());
        if (!c.at("exact").get<bool>()) {
            EXPECT_TRUE(c.at("tolerance").is_number());
            EXPECT_TRUE(c.at("residual").is_number());
        } else {
            EXPECT_FALSE(c.contains("residual"));
        }
        ids.insert(c["id"].get<std::string>());
    }
    EXPECT_EQ(ids.size(), 12u);
    EXPECT_EQ(j["summary"]["total"], 12);
    EXPECT_EQ(j["summary"]["passed"].get<int>() + j["summary"]["failed"].get<int>(), 12);
    EXPECT_EQ(j["config"]["seed"], 42);
    EXPECT_EQ(j["config"]["trials"], 20);
}

TEST(Report, IdsInOrder)
{
    const auto report = cpn::run_verification(quick_config());
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const std::string want = (i + 1 < 10 ? "AC0" : "AC") + std::to_string(i + 1);
        EXPECT_EQ(report.checks[i].id, want);
    }
}

TEST(Report, ByteIdenticalForSameSeed)
{
    const auto a = cpn::to_json(cpn::run_verification(quick_config())).dump(2);
    const auto b = cpn::to_json(cpn::run_verification(quick_config())).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(cpn::to_table(cpn::run_verification(quick_config())),
              cpn::to_table(cpn::run_verification(quick_config())));
}

TEST(Report, ImpossibleToleranceFails)
{
    auto cfg = quick_config();
    cfg.tolerance = 1e-30;
    const auto report = cpn::run_verification(cfg);
    EXPECT_EQ(report.exit_code(), 1);
    EXPECT_FALSE(report.checks[8].passed);
    // Exact checks are untouched by the tolerance.
    EXPECT_TRUE(report.checks[0].passed);
}

TEST(Report, TableSummaryLine)
{
    cpn::VerificationReport r;
    auto c = cpn::new_check("AC01", "x", "demo");
    c.passed = true;
    r.checks.push_back(c);
    r.checks.push_back(cpn::new_check("AC02", "y", "demo2"));
    const auto t = cpn::to_table(r);
    EXPECT_NE(t.find("PASS AC01"), std::string::npos);
    EXPECT_NE(t.find("FAIL AC02"), std::string::npos);
    EXPECT_NE(t.find("summary: 1/2 passed, 1 failed"), std::string::npos);
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, TrialSeedsAreDistinct)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b)
            for (std::uint64_t t = 0; t < 50; ++t)
                seen.insert(cpn::trial_seed(42, a, b, t));
    EXPECT_EQ(seen.size(), 4u * 4u * 50u);
    EXPECT_EQ(cpn::trial_seed(42, 1, 2, 3), cpn::trial_seed(42, 1, 2, 3));
}
