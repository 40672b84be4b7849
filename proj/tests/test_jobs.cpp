#include <gtest/gtest.h>

#include "xcoh/jobs.hpp"

using namespace xcoh;

namespace {

JobSpec z4_double(bool inversion) {
  std::string s = "[groups]\nz4 = cyclic 4\nz2 = cyclic 2\n[xmod]\ng1 = z4\ng0 = z4\nboundary = 0 2 0 2\n"
                  "action = trivial\n[gamma]\ngroup = z2\n";
  if (inversion) s += "act1 = inversion\nact0 = inversion\n";
  s += "[braiding]\nbracket = table\n 0 0 0 0\n 0 2 0 2\n 0 0 0 0\n 0 2 0 2\nlevel = symmetric\n";
  return parse_spec_string(s);
}

}  // namespace

TEST(Jobs, CohomologyReport) {
  auto r = run_cohomology(z4_double(false), kDefaultBudget);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.doc["H-1"]["size"], 2);
  EXPECT_EQ(r.doc["H0"]["size"], 4);
  EXPECT_TRUE(r.doc["notes"].is_array());
  EXPECT_FALSE(r.doc["notes"].empty());
}

TEST(Jobs, TrivialBottomModule) {
  auto js = parse_spec_string("[groups]\none = cyclic 1\nz2 = cyclic 2\n[xmod]\ng1 = one\ng0 = z2\n"
                              "boundary = trivial\naction = trivial\n[gamma]\ngroup = z2\n");
  auto r = run_cohomology(js, kDefaultBudget);
  EXPECT_EQ(r.doc["H1"]["size"], 2);
  auto v = run_verify(js, kDefaultBudget);
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_TRUE(v.doc["violations"].empty());
}

TEST(Jobs, LesOfDoublingIsExact) {
  for (bool inv : {false, true}) {
    auto r = run_les(z4_double(inv), kDefaultBudget);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.doc["ker_coker"]["all_exact"].get<bool>());
    EXPECT_TRUE(r.doc["group_sequence"]["all_exact"].get<bool>());
    EXPECT_EQ(r.doc["group_sequence"]["terms"].size(), 9u);
  }
}

TEST(Jobs, RenderingIsDeterministic) {
  for (const char* cmd : {"cohomology", "verify", "butterfly", "les"}) {
    auto a = render(run_job(cmd, z4_double(true), kDefaultBudget).doc);
    auto b = render(run_job(cmd, z4_double(true), kDefaultBudget).doc);
    EXPECT_EQ(a, b) << cmd;
  }
}

TEST(Jobs, VerifyReportsViolations) {
  auto js = z4_double(false);
  js.br->table[5] = 1;
  auto r = run_verify(js, kDefaultBudget);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(r.doc["violations"].empty());
  EXPECT_FALSE(r.doc["ok"].get<bool>());
}

TEST(Jobs, InvalidInputIsAnInputError) {
  auto js = z4_double(false);
  js.br->table[5] = 1;
  EXPECT_THROW(run_cohomology(js, kDefaultBudget), InputError);
}

TEST(Jobs, BudgetErrorPropagates) { EXPECT_THROW(run_cohomology(z4_double(true), 2), BudgetError); }

TEST(Jobs, CorruptFixtureFailsIdentityCriterion) {
  AcceptanceOptions o;
  o.only = {11};
  auto clean = run_acceptance(o);
  ASSERT_EQ(clean.results.size(), 1u);
  EXPECT_TRUE(clean.results[0].pass);
  o.corrupt_fixture = true;
  auto bad = run_acceptance(o);
  ASSERT_EQ(bad.results.size(), 1u);
  EXPECT_FALSE(bad.results[0].pass);
}
