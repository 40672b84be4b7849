#include <gtest/gtest.h>

#include "desk.hpp"

using namespace xcoh;

TEST(Xmod, DeskInstancesValidate) {
  for (const auto& d : desk_instances()) {
    EXPECT_TRUE(validate_gamma_xmod(d.gx).ok()) << d.name;
    if (d.br) {
      EXPECT_TRUE(validate_gamma_braiding(d.gx, *d.br, d.level).ok()) << d.name;
      EXPECT_TRUE(validate_identities(d.gx.x, *d.br).ok()) << d.name;
    }
  }
}

TEST(Xmod, NonSymmetricBracketFailsSymmetricLevel) {
  auto d = desk("klein-nonsymmetric");
  EXPECT_TRUE(validate_gamma_braiding(d.gx, *d.br, BraidingLevel::Braided).ok());
  EXPECT_FALSE(validate_gamma_braiding(d.gx, *d.br, BraidingLevel::Symmetric).ok());
}

TEST(Xmod, CorruptBracketIsRejected) {
  auto d = desk("z4-double");
  auto br = *d.br;
  br.table[1 * 4 + 1] = 1;
  EXPECT_FALSE(validate_gamma_braiding(d.gx, br, d.level).ok());
}

TEST(Xmod, BoundaryMustBeEquivariant) {
  auto z4 = make_cyclic(4), z2 = make_cyclic(2);
  auto x = make_xmod(z4, z4, identity_hom(z4), trivial_action(z4, z4, Side::Right), "[Z/4-id->Z/4]");
  auto gx = make_gamma_xmod(x, z2, trivial_action(z2, z4, Side::Left), cyclic_action(z2, z4, inversion_map(*z4)));
  EXPECT_TRUE(validate_crossed_module(gx.x).ok());
  EXPECT_FALSE(validate_gamma_xmod(gx).ok());
}

TEST(Xmod, PullbackProjectionIsEquivalence) {
  for (const auto& d : desk_instances()) {
    auto pb = double_pullback(d.gx);
    EXPECT_TRUE(validate_gamma_xmod(pb.x).ok()) << d.name;
    EXPECT_TRUE(is_equivalence(pb.x.x, d.gx.x, pb.proj).ok()) << d.name;
  }
}
