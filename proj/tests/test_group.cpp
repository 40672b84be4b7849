#include <gtest/gtest.h>

#include "xcoh/oracle.hpp"
#include "desk.hpp"

using namespace xcoh;

TEST(Group, BuiltinsAreGroups) {
  for (auto g : {make_cyclic(1), make_cyclic(5), make_klein(), make_s3()}) EXPECT_TRUE(validate_group(*g).ok()) << g->label();
  EXPECT_TRUE(make_klein()->is_abelian());
  EXPECT_FALSE(make_s3()->is_abelian());
}

TEST(Group, CorruptTableIsRejected) {
  auto z3 = make_cyclic(3);
  auto t = z3->table();
  t[1 * 3 + 1] = 1;
  bool rejected = false;
  try {
    rejected = !validate_group(*make_group("bad", 3, t)).ok();
  } catch (const InvalidGroupError&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
  t[0] = 7;
  EXPECT_THROW(make_group("bad", 3, t), InvalidGroupError);
}

TEST(Group, SemidirectZ3Z2IsS3) {
  auto z3 = make_cyclic(3), z2 = make_cyclic(2);
  auto act = cyclic_action(z2, z3, {0, 2, 1});
  ASSERT_TRUE(validate_action(act).ok());
  auto sd = make_semidirect(z3, z2, act);
  EXPECT_EQ(sd.group->order(), 6u);
  EXPECT_TRUE(find_isomorphism(sd.group, make_s3()).has_value());
  EXPECT_FALSE(find_isomorphism(sd.group, direct_product(z3, z2).group).has_value());
}

TEST(Group, KernelImageQuotient) {
  auto z4 = make_cyclic(4);
  GroupHom d{z4, z4, {0, 2, 0, 2}};
  ASSERT_TRUE(validate_hom(d).ok());
  EXPECT_EQ(kernel(d).size(), 2u);
  EXPECT_EQ(image(d).size(), 2u);
  auto q = quotient(z4, image(d));
  EXPECT_EQ(q.group->order(), 2u);
}

TEST(Group, NonHomomorphismIsReported) {
  auto z4 = make_cyclic(4);
  GroupHom f{z4, z4, {0, 1, 1, 1}};
  EXPECT_FALSE(validate_hom(f).ok());
}

TEST(Oracle, ClassicalValues) {
  auto z2 = make_cyclic(2), z3 = make_cyclic(3);
  auto triv = trivial_action(z2, z2, Side::Left);
  for (int n : {0, 1, 2}) EXPECT_EQ(oracle::classical_cohomology(triv, n).size(), 2u) << n;
  EXPECT_EQ(oracle::classical_cohomology(trivial_action(z3, z2, Side::Left), 2).size(), 1u);
  EXPECT_EQ(oracle::classical_cohomology(trivial_action(z2, z3, Side::Left), 1).size(), 1u);
  auto inv = cyclic_action(z2, z3, inversion_map(*z3));
  EXPECT_EQ(oracle::classical_cohomology(inv, 0).size(), 1u);
  EXPECT_EQ(oracle::classical_cohomology(inv, 2).size(), 1u);
}
