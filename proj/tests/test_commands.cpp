#include <gtest/gtest.h>

#include "linedegen/commands.hpp"

using namespace linedegen;

TEST(CmdCount, KnownCounts) {
  for (auto [n, d, expected] : {std::tuple{3u, 3u, "27"}, {4u, 5u, "2875"}, {5u, 7u, "698005"}}) {
    const OutputEnvelope env = cmd_count(n, d);
    EXPECT_EQ(env.status, Status::ok);
    EXPECT_EQ(env.exit_code(), 0);
    ASSERT_EQ(env.rows.size(), 1u);
    EXPECT_EQ(env.rows[0], expected);
    EXPECT_EQ(env.results.at(0).at("count"), expected);
  }
}

TEST(CmdCount, NonTopDegreeHasNoCount) {
  const OutputEnvelope env = cmd_count(3, 2);
  EXPECT_TRUE(env.results.at(0).at("count").is_null());
  EXPECT_EQ(env.rows.at(0), "4σ_{2,1}");
  const json cls = env.results.at(0).at("class");
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].at("partition"), json::array({2, 1}));
  EXPECT_EQ(cls[0].at("coefficient"), "4");
}

TEST(CmdCount, BadArguments) {
  const OutputEnvelope env = cmd_count(1, 3);
  EXPECT_EQ(env.status, Status::argument_error);
  EXPECT_EQ(env.exit_code(), 2);
  EXPECT_FALSE(env.error.empty());
  EXPECT_EQ(env.to_json().at("status"), "argument-error");
}

TEST(CmdSplit, TableRows) {
  EXPECT_EQ(cmd_split(4, 5, 4).rows.at(0), "1600 | 1275 | 2875 | ok");
  EXPECT_EQ(cmd_split(5, 7, 5).rows.at(0), "398125 | 299880 | 698005 | ok");
  EXPECT_EQ(cmd_split(3, 2, 1).rows.at(0), "2σ_{2,1} | 2σ_{2,1} | 4σ_{2,1} | ok");
  EXPECT_EQ(cmd_split(3, 3, 3).status, Status::argument_error);
}

TEST(CmdVerify, SweepsPass) {
  const OutputEnvelope thm = cmd_verify("thm33", {10, std::nullopt, std::nullopt});
  EXPECT_EQ(thm.status, Status::ok);
  EXPECT_EQ(thm.results.size(), 45u);  // pairs k, l >= 1 with k + l <= 10
  const OutputEnvelope prop = cmd_verify("prop311", {std::nullopt, 6, 6});
  EXPECT_EQ(prop.status, Status::ok);
  EXPECT_EQ(prop.results.size(), 36u);
  EXPECT_EQ(prop.results.at(0).at("lambda"), "3");
  EXPECT_EQ(cmd_verify("lemma37", {std::nullopt, std::nullopt, 9}).status, Status::ok);
  EXPECT_EQ(cmd_verify("lemma34", {std::nullopt, std::nullopt, 4}).status, Status::ok);
  EXPECT_EQ(cmd_verify("eq36", {std::nullopt, std::nullopt, 6}).status, Status::ok);
  EXPECT_EQ(thm.rows.back(), "all pass (45 cells)");
}

TEST(CmdVerify, ArgumentErrors) {
  EXPECT_EQ(cmd_verify("thm34", {5, 5, 5}).status, Status::argument_error);
  EXPECT_EQ(cmd_verify("thm33", {}).status, Status::argument_error);
  EXPECT_EQ(cmd_verify("prop311", {std::nullopt, 3, std::nullopt}).status, Status::argument_error);
  EXPECT_EQ(cmd_verify("lemma37", {std::nullopt, std::nullopt, 0}).status, Status::argument_error);
}

TEST(CmdNormalTypes, Rows) {
  EXPECT_EQ(cmd_normal_types(4, 5).rows, (std::vector<std::string>{"(-1, -1)"}));
  const OutputEnvelope high = cmd_normal_types(4, 7);
  EXPECT_EQ(high.status, Status::ok);
  EXPECT_TRUE(high.results.at(0).at("types").empty());
  EXPECT_FALSE(high.results.at(0).at("advisory").is_null());
}

TEST(CmdWitness, PassAndFeasibilityError) {
  const OutputEnvelope ok = cmd_witness(4, 5, 4);
  EXPECT_EQ(ok.status, Status::ok);
  EXPECT_EQ(ok.rows.back(), "all checks pass");
  const OutputEnvelope bad = cmd_witness(3, 4, 2);
  EXPECT_EQ(bad.status, Status::argument_error);
  EXPECT_NE(bad.error.find("2n-3"), std::string::npos);
}

TEST(Envelope, SchemaAndDeterminism) {
  const json j = cmd_split(4, 5, 3).to_json();
  for (const char* key : {"command", "parameters", "results", "status"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(cmd_split(4, 5, 3).to_json().dump(), j.dump());
  EXPECT_EQ(cmd_verify("prop311", {std::nullopt, 3, 3}).to_json().dump(),
            cmd_verify("prop311", {std::nullopt, 3, 3}).to_json().dump());
  // keys are emitted sorted
  const std::string s = j.dump();
  EXPECT_LT(s.find("\"command\""), s.find("\"parameters\""));
  EXPECT_LT(s.find("\"results\""), s.find("\"status\""));
}

TEST(RoundTrip, DegenerationReportsSurviveJson) {
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned d = 2; d <= 2 * n - 3; ++d)
      for (unsigned k = 1; k < d; ++k) {
        const DegenerationReport r = report(n, d, k);
        EXPECT_EQ(report_from_json(json::parse(report_to_json(r).dump())), r);
      }
}

TEST(RoundTrip, WitnessAndNormalTypes) {
  const WitnessReport w = witness_report(WitnessProblem(5, 7, 4));
  EXPECT_EQ(witness_from_json(json::parse(witness_to_json(w).dump())), w);
  for (unsigned k : {3u, 5u, 9u}) {
    const NormalTypesResult r = normal_bundle_types(5, k);
    const NormalTypesResult back = normal_types_from_json(json::parse(normal_types_to_json(r).dump()));
    EXPECT_EQ(back.types, r.types);
    EXPECT_EQ(back.advisory, r.advisory);
  }
}

TEST(Envelope, ExitCodesFollowStatus) {
  OutputEnvelope env;
  EXPECT_EQ(env.exit_code(), 0);
  env.status = Status::identity_violation;
  EXPECT_EQ(env.exit_code(), 1);
  EXPECT_EQ(env.to_json().at("status"), "identity-violation");
  env.status = Status::argument_error;
  EXPECT_EQ(env.exit_code(), 2);
}
