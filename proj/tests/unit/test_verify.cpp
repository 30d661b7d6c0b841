#include <gtest/gtest.h>

#include <opspec/verify.hpp>

using namespace opspec;

namespace {

VerifyConfig only(std::initializer_list<std::string> groups, Budget b = Budget::standard) {
    VerifyConfig c;
    c.groups = groups;
    c.budget = b;
    c.timing = false;
    return c;
}

}  // namespace

TEST(Verify, EmptyMatrixRendersValidDocuments) {
    const VerificationMatrix m;
    const auto j = ojson::parse(render_json(m));
    EXPECT_TRUE(j.at("checks").empty());
    EXPECT_EQ(matrix_from_json(j), m);
    EXPECT_NE(render_markdown(m).find("No checks"), std::string::npos);
}

TEST(Verify, PassRowCarriesItsAnchor) {
    VerificationMatrix m;
    Check c;
    c.id = "AC04.example";
    c.group = "ordering";
    c.anchor = "fan spectral radius beats the bridged double fan";
    c.status = Status::pass;
    m.checks.push_back(c);
    const auto md = render_markdown(m);
    EXPECT_NE(md.find("fan spectral radius beats the bridged double fan"), std::string::npos);
    EXPECT_NE(md.find("## ordering"), std::string::npos);
    EXPECT_EQ(m.criteria().at(4), Status::pass);
}

TEST(Verify, JsonRoundTrip) {
    const auto m = verify_paper(only({"walk-moments", "tables", "ordering"}));
    EXPECT_FALSE(m.checks.empty());
    EXPECT_EQ(matrix_from_json(ojson::parse(render_json(m))), m);
    EXPECT_TRUE(std::is_sorted(m.checks.begin(), m.checks.end(),
                               [](const Check& a, const Check& b) { return a.id < b.id; }));
}

TEST(Verify, IntegerCoefficientChecks) {
    const auto m = verify_paper(only({"walk-moments", "tables", "g0-prime"}));
    for (const auto& c : m.checks) {
        if (c.id == "AC01.signed-moments.q5") {
            // the closed form 64q - 272 gives 48; the exact moment is 56
            EXPECT_EQ(c.status, Status::fail);
            EXPECT_EQ(c.discrepancy, 8);
            EXPECT_EQ(c.observed.back().get<std::int64_t>(), 56);
        } else {
            EXPECT_EQ(c.status, Status::pass) << c.id << " " << c.observed.dump();
        }
    }
}

TEST(Verify, SmallBudgetSkipsExhaustiveTwelve) {
    const auto m = verify_paper(only({"fig3"}, Budget::small));
    ASSERT_EQ(m.checks.size(), 2u);
    EXPECT_EQ(m.checks[0].id, "AC06.fig3-beats-bridged");
    EXPECT_EQ(m.checks[0].status, Status::pass);
    EXPECT_EQ(m.checks[1].status, Status::skipped);
    EXPECT_FALSE(m.any_failed());
    EXPECT_EQ(m.criteria().at(6), Status::pass);
}

TEST(Verify, DeterministicWithoutTiming) {
    const auto cfg = only({"oracles", "expansion"}, Budget::small);
    EXPECT_EQ(render_json(verify_paper(cfg)), render_json(verify_paper(cfg)));
}

TEST(Verify, ConfigParsing) {
    const auto c = parse_config(nlohmann::json::parse(
        R"({"budget": "small", "groups": ["fig3"], "seed": 5, "tolerances": {"eigen": 1e-8}})"));
    EXPECT_EQ(c.budget, Budget::small);
    EXPECT_EQ(c.seed, 5u);
    EXPECT_DOUBLE_EQ(c.eigen_tolerance, 1e-8);
    EXPECT_EQ(c.groups.count("fig3"), 1u);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"bogus": 1})")), std::invalid_argument);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"groups": ["nope"]})")), std::invalid_argument);
    EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"budget": "huge"})")), std::invalid_argument);
    EXPECT_THROW(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST(Verify, EveryCriterionHasAGroup) {
    EXPECT_EQ(check_groups().size(), 13u);
    std::set<int> seen;
    for (const auto& c : verify_paper(only({"walk-moments", "ordering", "tables", "expansion"}, Budget::small)).checks)
        seen.insert(c.criterion());
    EXPECT_EQ(seen, (std::set<int>{1, 4, 7, 9}));
}
