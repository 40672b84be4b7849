#include <gtest/gtest.h>

#include "xcoh/exact.hpp"
#include "desk.hpp"

using namespace xcoh;

TEST(Exact, ShortSequencesOfDeskInstances) {
  for (const char* name : {"z2-pairing", "z4-double", "z4-double-inv", "s3-identity"}) {
    auto ps = p_short_check(desk(name).gx);
    EXPECT_TRUE(ps.ok()) << name;
    EXPECT_TRUE(ps.first_les.all_exact()) << name;
    EXPECT_TRUE(ps.second_les.all_exact()) << name;
  }
}

TEST(Exact, LesTermsAreTheCohomologyOfTheThreeModules) {
  auto gx = desk("z4-double-inv").gx;
  auto s = ker_coker_ses(gx);
  auto les = compute_les(s);
  auto sizes = [](const GammaCrossedModule& m) {
    Cochains ch(m);
    auto co = compute_cohomology(ch);
    return std::vector<std::size_t>{co.hm1.size(), co.h0.set.size(), co.h1.set.size()};
  };
  auto k = sizes(s.k), h = sizes(s.h), g = sizes(s.g);
  for (std::size_t deg = 0; deg < 3; ++deg) {
    EXPECT_EQ(les.terms[3 * deg].size(), k[deg]);
    EXPECT_EQ(les.terms[3 * deg + 1].size(), h[deg]);
    EXPECT_EQ(les.terms[3 * deg + 2].size(), g[deg]);
  }
}

TEST(Exact, InversePsiIsAlwaysValid) {
  for (const char* name : {"z4-double", "s3-identity", "z2-bottom/z2"}) {
    auto s = group_ses(desk(name).gx, true);
    ASSERT_TRUE(s.has_value()) << name;
    EXPECT_TRUE(validate_ses(*s).bullets.ok()) << name;
    std::vector<Elem> inv(s->k.G0().order());
    for (Elem k = 0; k < inv.size(); ++k) inv[k] = s->k.G0().inv(k);
    EXPECT_TRUE(psi_conditions(s->k, s->h, s->g, s->c, s->b, inv).ok()) << name;
  }
}

TEST(Exact, WrongPsiIsRejected) {
  auto s = group_ses(desk("s3-identity").gx, true);
  ASSERT_TRUE(s.has_value());
  std::vector<Elem> id(s->k.G0().order());
  for (Elem k = 0; k < id.size(); ++k) id[k] = k;
  EXPECT_FALSE(psi_conditions(s->k, s->h, s->g, s->c, s->b, id).ok());
}
