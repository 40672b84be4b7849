#include <gtest/gtest.h>

#include "xcoh/kcomplex.hpp"
#include "xcoh/oracle.hpp"
#include "desk.hpp"

using namespace xcoh;

TEST(Cohomology, AbelianTopMatchesBarComplex) {
  for (const char* name : {"z2-top/z2", "z3-top/z2-inv", "v4-top/z3-rot"}) {
    auto d = desk(name);
    Cochains ch(d.gx, d.br);
    auto co = compute_cohomology(ch);
    for (int n : {0, 1, 2}) {
      const auto& ours = n == 0 ? co.hm1 : n == 1 ? co.h0.set : co.h1.set;
      EXPECT_EQ(ours.size(), oracle::classical_cohomology(d.gx.act1, n).size()) << name << " degree " << n - 1;
    }
  }
}

TEST(Cohomology, GroupBottomMatchesCrossedHomomorphisms) {
  for (const char* name : {"z2-bottom/z2", "z4-bottom/z2-inv", "s3-bottom/z2-conj"}) {
    auto d = desk(name);
    Cochains ch(d.gx, d.br);
    auto co = compute_cohomology(ch);
    EXPECT_EQ(co.hm1.size(), 1u) << name;
    EXPECT_EQ(co.h0.set.size(), fixed_points(d.gx.act0).size()) << name;
    EXPECT_EQ(co.h1.set.size(), oracle::nonabelian_h1(d.gx.act0).size()) << name;
  }
}

TEST(Cohomology, Z4DoubleGroupLaws) {
  for (const char* name : {"z4-double", "z4-double-inv", "z2-pairing"}) {
    auto d = desk(name);
    Cochains ch(d.gx, d.br);
    auto co = compute_cohomology(ch);
    ASSERT_TRUE(co.h1.set.table.has_value()) << name;
    EXPECT_TRUE(validate_group(*co.h1.set.as_group("H1")).ok()) << name;
    EXPECT_TRUE(verify_coincide(ch, co.h1).ok()) << name;
    EXPECT_TRUE(verify_z1_group(ch, co.h1).ok()) << name;
    EXPECT_TRUE(verify_action(ch, co.h1).ok()) << name;
  }
}

TEST(Cohomology, ZeroCoboundariesLieInCocycles) {
  auto d = desk("s3-identity");
  Cochains ch(d.gx, d.br);
  auto co = compute_cohomology(ch);
  for (const auto& b : co.h0.b0) EXPECT_NE(co.h0.class_of(b), kNone);
  EXPECT_EQ(co.h0.class_of(co.h0.b0.front()), co.h0.class_of(co.h0.z0.front()));
}

TEST(Cohomology, BudgetIsEnforced) {
  auto d = desk("s3-identity");
  Cochains ch(d.gx, d.br, 2);
  EXPECT_THROW(compute_cohomology(ch), BudgetError);
}

TEST(KComplex, CrossedModuleInGroupoidsAndTwoGroupoid) {
  for (const char* name : {"z2-bottom/z2", "z4-double", "s3-identity"}) {
    auto d = desk(name);
    Cochains ch(d.gx, d.br);
    auto co = compute_cohomology(ch);
    auto k = build_k1(ch, co.h1);
    EXPECT_EQ(k.n_objects, co.h1.z1.size()) << name;
    EXPECT_TRUE(validate_cmg(k).ok()) << name;
    EXPECT_TRUE(validate_two_groupoid(two_groupoid_of(k)).ok()) << name;
  }
}

TEST(KComplex, BraidedTwoCrossedModule) {
  for (const char* name : {"z2-pairing", "z4-double-inv", "s3-identity", "klein-nonsymmetric"}) {
    auto d = desk(name);
    Cochains ch(d.gx, d.br);
    auto co = compute_cohomology(ch);
    auto kb = build_k1_braided(ch, co.h1);
    EXPECT_TRUE(validate_two_crossed_module(kb.tcm).ok()) << name;
    const bool symmetric = validate_braiding(d.gx.x, *d.br, BraidingLevel::Symmetric).ok();
    EXPECT_EQ(validate_braided_2cm(kb.tcm, z1_top_bracket(ch, co.h1)).ok(), symmetric) << name;
  }
}

TEST(KComplex, IdentityInducesBijections) {
  auto d = desk("z4-double-inv");
  Cochains ch(d.gx, d.br);
  auto co = compute_cohomology(ch);
  auto m = f_star(ch, co, ch, co, identity_morphism(d.gx.x));
  EXPECT_TRUE(m.report.ok());
  EXPECT_TRUE(induced_bijective(m, co));
  for (Elem i = 0; i < m.h1.size(); ++i) EXPECT_EQ(m.h1[i], i);
}
