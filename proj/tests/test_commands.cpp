#include <gtest/gtest.h>

#include "gencluster/commands.hpp"
#include "gencluster/verify.hpp"
#include "support/fixtures.hpp"

namespace gencluster {
namespace {

using testing::seed_path;

TEST(Mutate, WorkedExample) {
  auto r = cmd_mutate({seed_path("rank2_generalized"), "1", +1, "text"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("x1: (x2^2 + 2*x2 + 1)/x1\n"), std::string::npos);
}

TEST(Mutate, DoubleStepIsIdentity) {
  auto initial = cmd_mutate({seed_path("rank2_tropical"), "", +1, "text"});
  auto twice = cmd_mutate({seed_path("rank2_tropical"), "1 1", +1, "text"});
  ASSERT_EQ(twice.exit_code, 0);
  EXPECT_EQ(twice.out, initial.out);
  EXPECT_EQ(cmd_mutate({seed_path("rank2_tropical"), "2 1", -1, "json"}).out,
            cmd_mutate({seed_path("rank2_tropical"), "2 1", +1, "json"}).out);
}

TEST(Mutate, InputErrorsExitWithTwo) {
  for (const auto* word : {"0", "3", "1 x"}) {
    auto r = cmd_mutate({seed_path("a2"), word, +1, "text"});
    EXPECT_EQ(r.exit_code, 2) << word;
    EXPECT_NE(r.err.find("error:"), std::string::npos);
  }
  EXPECT_EQ(cmd_mutate({seed_path("missing"), "1", +1, "text"}).exit_code, 2);
  EXPECT_EQ(cmd_mutate({seed_path("a2"), "1", 2, "text"}).exit_code, 2);
  EXPECT_EQ(cmd_mutate({seed_path("a2"), "1", 1, "dot"}).exit_code, 2);
}

TEST(Orbit, A2Text) {
  OrbitRequest req;
  req.seed_path = seed_path("a2");
  req.max_depth = 10;
  req.mode = "unlabeled";
  auto r = cmd_orbit(req);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("nodes: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("clusters: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("closed: yes\n"), std::string::npos);
  req.mode = "sideways";
  EXPECT_EQ(cmd_orbit(req).exit_code, 2);
}

TEST(Fpoly, Tables) {
  auto initial = cmd_fpoly({seed_path("rank2_generalized"), "", +1, "csv"});
  EXPECT_EQ(initial.out, "t,word,i,F,c,g\n0,,1,1,\"(1,0)\",\"(1,0)\"\n0,,2,1,\"(0,1)\",\"(0,1)\"\n");
  auto one = cmd_fpoly({seed_path("rank2_generalized"), "1", +1, "text"});
  EXPECT_NE(one.out.find("t=1 word=[1] i=1 F=u1^2 + 2*u1 + 1 c=(-1,0) g=(-1,2)\n"), std::string::npos);
  EXPECT_EQ(cmd_fpoly({seed_path("rank2_generalized"), "1", +1, "dot"}).exit_code, 2);
}

// Classical A2 along 1 2 1 2 1. F follows the ordinary exchange relations
// (F1' = 1 + u1, F2'' = 1 + u1 + u1u2, ...); c follows the sign rule
// c_j' = c_j + c_k[±b_kj]_+ with ± the sign of c_k.
TEST(Fpoly, A2PentagonTable) {
  auto r = cmd_fpoly({seed_path("a2"), "1 2 1 2 1", +1, "csv"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const std::string expected =
      "t,word,i,F,c,g\n"
      "0,,1,1,\"(1,0)\",\"(1,0)\"\n"
      "0,,2,1,\"(0,1)\",\"(0,1)\"\n"
      "1,1,1,u1 + 1,\"(-1,0)\",\"(-1,1)\"\n"
      "1,1,2,1,\"(1,1)\",\"(0,1)\"\n"
      "2,1 2,1,u1 + 1,\"(0,1)\",\"(-1,1)\"\n"
      "2,1 2,2,u1*u2 + u1 + 1,\"(-1,-1)\",\"(-1,0)\"\n"
      "3,1 2 1,1,u2 + 1,\"(0,-1)\",\"(0,-1)\"\n"
      "3,1 2 1,2,u1*u2 + u1 + 1,\"(-1,0)\",\"(-1,0)\"\n"
      "4,1 2 1 2,1,u2 + 1,\"(0,-1)\",\"(0,-1)\"\n"
      "4,1 2 1 2,2,1,\"(1,0)\",\"(1,0)\"\n"
      "5,1 2 1 2 1,1,1,\"(0,1)\",\"(0,1)\"\n"
      "5,1 2 1 2 1,2,1,\"(1,0)\",\"(1,0)\"\n";
  EXPECT_EQ(r.out, expected);
}

TEST(Verify, AllSuitesPassOnBundledSeeds) {
  for (const auto& name : testing::bundled_seeds()) {
    auto r = cmd_verify({seed_path(name), "all", 0, +1, "column"});
    EXPECT_EQ(r.exit_code, 0) << name << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("overall=pass\n"), std::string::npos);
  }
}

TEST(Verify, WrongHatYFails) {
  auto r = cmd_verify({seed_path("rank2_tropical"), "separation", 3, +1, "row"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("result=fail\n"), std::string::npos);
  EXPECT_NE(r.out.find("failure word=["), std::string::npos);
}

TEST(Verify, BadSuiteIsInputError) {
  EXPECT_EQ(cmd_verify({seed_path("a2"), "vibes", 0, +1, "column"}).exit_code, 2);
}

TEST(Verify, ReportFields) {
  VerifyOptions o;
  o.budget = 2;
  auto report = run_suite(Suite::epsilon, testing::worked_example(), o);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.seeds, 5u);  // words of length <= 2 without repeats in rank 2
  EXPECT_EQ(report.checks, 10u);
  EXPECT_EQ(report.render().rfind("suite=epsilon\nbudget=2\nseeds=5\nchecks=10\nfailures=0\nresult=pass\n", 0), 0u);
}

TEST(Verify, RelaxedSeedsFailEpsilonSuite) {
  auto data = testing::trivial_data(2, {0, 1, -1, 0}, {3, 1}, {{1, 2, 5, 1}, {1, 1}}, SeedMode{true, false});
  EXPECT_FALSE(run_suite(Suite::epsilon, data).passed());
  EXPECT_FALSE(run_suite(Suite::involution, data).passed());
}

}  // namespace
}  // namespace gencluster
