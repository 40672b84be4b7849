#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "xcoh/spec_io.hpp"

using namespace xcoh;

namespace {

const char* kZ4 = R"(# z4 doubling
[groups]
z4 = cyclic 4
z2 = cyclic 2

[xmod]
g1 = z4
g0 = z4
boundary = 0 2 0 2
action = trivial

[gamma]
group = z2
act1 = inversion
act0 = inversion

[braiding]
bracket = table
  0 0 0 0
  0 2 0 2
  0 0 0 0
  0 2 0 2
level = symmetric

[job]
budget = 5000
)";

std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_spec_string(text);
  } catch (const ParseError& e) {
    return {e.line, e.column};
  }
  return {0, 0};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST(SpecIo, ParsesFullSpec) {
  auto js = parse_spec_string(kZ4);
  EXPECT_EQ(js.gx.G1().order(), 4u);
  EXPECT_EQ(js.gx.Gam().order(), 2u);
  EXPECT_EQ(js.gx.x.boundary.map, (std::vector<Elem>{0, 2, 0, 2}));
  EXPECT_EQ(js.gx.s1(1, 1), 3u);
  ASSERT_TRUE(js.br.has_value());
  EXPECT_EQ((*js.br)(1, 3), 2u);
  EXPECT_EQ(js.level, BraidingLevel::Symmetric);
  EXPECT_EQ(js.budget, 5000u);
  EXPECT_TRUE(validate_gamma_xmod(js.gx).ok());
  EXPECT_TRUE(validate_gamma_braiding(js.gx, *js.br, js.level).ok());
}

TEST(SpecIo, DefaultsWithoutOptionalSections) {
  auto js = parse_spec_string("[groups]\nz2 = cyclic 2\n[xmod]\ng1 = z2\ng0 = z2\nboundary = identity\n"
                              "action = trivial\n[gamma]\ngroup = z2\n");
  EXPECT_FALSE(js.br.has_value());
  EXPECT_FALSE(js.budget.has_value());
  EXPECT_EQ(js.gx.s0(1, 1), 1u);
}

TEST(SpecIo, SemidirectAndConjugation) {
  auto js = parse_spec_string("[groups]\ns3 = semidirect 3 2 2\nz2 = cyclic 2\n[xmod]\ng1 = s3\ng0 = s3\n"
                              "boundary = identity\naction = conjugation\n[gamma]\ngroup = z2\n"
                              "[braiding]\nbracket = commutator\n");
  EXPECT_EQ(js.gx.G0().order(), 6u);
  EXPECT_FALSE(js.gx.G0().is_abelian());
  EXPECT_TRUE(validate_gamma_braiding(js.gx, *js.br, js.level).ok());
}

TEST(SpecIo, ErrorPositions) {
  const std::string s = kZ4;
  EXPECT_EQ(error_at(replace(s, "boundary = 0 2 0 2", "boundary = 0 2 0 9")), std::make_pair(9ul, 18ul));
  EXPECT_EQ(error_at(replace(s, "[gamma]", "[gama]")), std::make_pair(12ul, 1ul));
  EXPECT_EQ(error_at(replace(s, "group = z2", "group = z5")).first, 13u);
  EXPECT_EQ(error_at(replace(s, "  0 0 0 0\n  0 2 0 2\n  0 0 0 0\n", "  0 0 0\n  0 2 0 2\n  0 0 0 0\n")).first, 19u);
  EXPECT_EQ(error_at(replace(s, "z2 = cyclic 2", "z2 = cyclic x")).first, 4u);
  EXPECT_EQ(error_at(replace(s, "act0 = inversion", "act0 = inversion\nact0 = trivial")).first, 16u);
  EXPECT_EQ(error_at(replace(s, "level = symmetric", "level = sideways")).first, 23u);
  EXPECT_EQ(error_at(replace(s, "budget = 5000", "colour = red")).first, 26u);
}

TEST(SpecIo, JobCommandAndOutput) {
  auto js = parse_spec_string(replace(kZ4, "budget = 5000", "budget = 5000\ncommand = les\nout = report.json"));
  EXPECT_EQ(js.command, "les");
  EXPECT_EQ(js.out, "report.json");
  EXPECT_FALSE(parse_spec_string(kZ4).command.has_value());
}

TEST(SpecIo, MissingRequiredKey) {
  const std::string s = replace(kZ4, "action = trivial\n", "");
  EXPECT_THROW(parse_spec_string(s), ParseError);
}

TEST(SpecIo, NonGroupTable) {
  auto [line, col] = error_at("[groups]\nbad = table\n  0 1\n  1 1\n[xmod]\ng1 = bad\ng0 = bad\n"
                              "boundary = identity\naction = trivial\n[gamma]\ngroup = bad\n");
  EXPECT_EQ(line, 2u);
}

TEST(SpecIo, SamplesParse) {
  for (const char* f : {"z4-double", "z4-double-inv", "z2-bottom", "z2-pairing", "s3-identity", "not-crossed"}) {
    std::ifstream in(std::string(XCOH_SAMPLES) + "/" + f + ".xcoh");
    ASSERT_TRUE(in) << f;
    EXPECT_NO_THROW(parse_spec(in)) << f;
  }
  std::ifstream bad(std::string(XCOH_SAMPLES) + "/bad-boundary.xcoh");
  EXPECT_THROW(parse_spec(bad), ParseError);
}
