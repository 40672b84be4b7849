#include <gtest/gtest.h>

#include "xcoh/butterfly.hpp"
#include "desk.hpp"

using namespace xcoh;

namespace {
const ZTranslation kTr{true, 1};
}

TEST(Butterfly, CocycleRoundTrip) {
  for (const char* name : {"z4-double-inv", "s3-bottom/z2-conj", "v4-identity/z3-rot"}) {
    auto d = desk(name);
    Cochains ch(d.gx, d.br);
    auto co = compute_cohomology(ch);
    for (const auto& c : co.h1.z1) {
      auto z = zobject_from_cocycle(ch, c, kTr);
      ASSERT_TRUE(validate_group(*z.e).ok()) << name;
      EXPECT_TRUE(validate_zobject(d.gx, z).ok()) << name;
      EXPECT_EQ(cocycle_from_zobject(ch, z, kTr), c) << name;
    }
  }
}

TEST(Butterfly, TranslationSearchKeepsPreferred) {
  auto d = desk("z4-double-inv");
  Cochains ch(d.gx, d.br);
  auto co = compute_cohomology(ch);
  TranslationSearch ts;
  search_translation(ts, ch, co.h1.z1);
  finish_translation(ts, kTr);
  ASSERT_TRUE(ts.chosen.has_value());
  EXPECT_TRUE(ts.chosen->twisted);
  EXPECT_EQ(ts.chosen->rho, kTr.rho);
}

TEST(Butterfly, StarProductMatchesH1Law) {
  auto d = desk("z2-pairing");
  Cochains ch(d.gx, d.br);
  auto co = compute_cohomology(ch);
  std::vector<ZObject> reps;
  for (Elem r : co.h1.reps) reps.push_back(zobject_from_cocycle(ch, co.h1.z1[r], kTr));
  for (Elem a = 0; a < reps.size(); ++a)
    for (Elem b = 0; b < reps.size(); ++b) {
      auto S = star_objects(d.gx, *d.br, reps[a], reps[b]);
      ASSERT_TRUE(S.report.ok());
      EXPECT_EQ(co.h1.class_of(cocycle_from_zobject(ch, S.obj, kTr)), co.h1.set.mul(a, b));
    }
}

TEST(Butterfly, StrictButterflyIsValid) {
  auto d = desk("s3-identity");
  auto bf = strict_butterfly(d.gx, d.gx, identity_morphism(d.gx.x));
  EXPECT_TRUE(validate_butterfly(bf).ok());
  EXPECT_TRUE(validate_gamma_butterfly(bf, d.gx, d.gx).ok());
}

TEST(Butterfly, MultiplicationIsBraidedOnlyWhenSymmetric) {
  auto sym = desk("z2-pairing");
  auto mb = braided_mult_butterfly(sym.gx, *sym.br);
  EXPECT_TRUE(mb.group_report.ok());
  EXPECT_TRUE(validate_butterfly(mb.bf).ok());
  EXPECT_TRUE(validate_braided_butterfly(mb.bf, mb.product_braiding, *sym.br).ok());

  auto ns = desk("klein-nonsymmetric");
  auto mn = braided_mult_butterfly(ns.gx, *ns.br);
  EXPECT_TRUE(mn.group_report.ok());
  EXPECT_FALSE(validate_braided_butterfly(mn.bf, mn.product_braiding, *ns.br).ok());
}

TEST(Butterfly, PullbackPushforwardIsBijective) {
  auto d = desk("z4-double");
  Cochains ch(d.gx, d.br);
  auto co = compute_cohomology(ch);
  auto pb = double_pullback(d.gx);
  Cochains chP(pb.x, pullback_braiding(pb, *d.br));
  auto coP = compute_cohomology(chP);
  auto m = pushforward_on_cohomology(strict_butterfly(pb.x, d.gx, pb.proj), chP, coP, ch, co, kTr);
  EXPECT_TRUE(m.report.ok());
  EXPECT_TRUE(induced_bijective(m, co));
}
