#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xmod.hpp"

namespace xcoh {

inline GammaCrossedModule make_gamma_xmod(CrossedModule x, GroupPtr gamma, GroupAction act1,
                                          GroupAction act0) {
  return {std::move(x), std::move(gamma), std::move(act1), std::move(act0)};
}

inline GammaCrossedModule with_trivial_gamma(CrossedModule x, const GroupPtr& gamma) {
  auto a1 = trivial_action(gamma, x.g1, Side::Left);
  auto a0 = trivial_action(gamma, x.g0, Side::Left);
  return {std::move(x), gamma, std::move(a1), std::move(a0)};
}

inline std::vector<Elem> inversion_map(const FiniteGroup& g) {
  std::vector<Elem> m(g.order());
  for (Elem x = 0; x < g.order(); ++x) m[x] = g.inv(x);
  return m;
}

inline std::vector<Elem> conjugation_map(const FiniteGroup& g, Elem t) {
  std::vector<Elem> m(g.order());
  for (Elem x = 0; x < g.order(); ++x) m[x] = g.conj(x, t);
  return m;
}

inline GroupPtr make_klein() { return direct_product(make_cyclic(2), make_cyclic(2)).group; }

// Z/3 x| Z/2 by inversion; element (n, h) has index 2n + h, so 1 is a transposition.
inline GroupPtr make_s3() {
  auto z3 = make_cyclic(3), z2 = make_cyclic(2);
  auto g = make_semidirect(z3, z2, cyclic_action(z2, z3, inversion_map(*z3))).group;
  return make_group("S3", g->order(), g->table());
}

struct DeskInstance {
  std::string name;
  GammaCrossedModule gx;
  std::optional<Braiding> br;
  BraidingLevel level = BraidingLevel::Braided;
};

// [A -> 1] with gamma acting on A through phi (identity map for trivial).
inline DeskInstance desk_abelian_top(const std::string& name, const GroupPtr& a,
                                     const GroupPtr& gamma, const std::vector<Elem>& phi) {
  auto x = xmod_from_abelian_top(a);
  auto a1 = cyclic_action(gamma, a, phi);
  auto a0 = trivial_action(gamma, x.g0, Side::Left);
  return {name, make_gamma_xmod(x, gamma, a1, a0), trivial_braiding(x), BraidingLevel::Picard};
}

inline DeskInstance desk_group(const std::string& name, const GroupPtr& g, const GroupPtr& gamma,
                               const std::vector<Elem>& phi) {
  auto x = xmod_from_group(g);
  auto a1 = trivial_action(gamma, x.g1, Side::Left);
  auto a0 = cyclic_action(gamma, g, phi);
  std::optional<Braiding> br;
  if (g->is_abelian()) br = trivial_braiding(x);
  return {name, make_gamma_xmod(x, gamma, a1, a0), br, BraidingLevel::Picard};
}

inline std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> m(n);
  for (Elem i = 0; i < n; ++i) m[i] = i;
  return m;
}

// [Z/2 -0-> Z/2], {a,b} = ab.
inline DeskInstance desk_z2_pairing(const GroupPtr& gamma) {
  auto z2 = make_cyclic(2);
  auto x = make_xmod(z2, z2, trivial_hom(z2, z2), trivial_action(z2, z2, Side::Right), "[Z/2-0->Z/2]");
  Braiding br{2, {0, 0, 0, 1}};
  return {"z2-pairing", with_trivial_gamma(x, gamma), br, BraidingLevel::Symmetric};
}

// [Z/4 -x2-> Z/4], trivial action, {g,h} = 2gh; gamma acts by inversion or trivially.
inline DeskInstance desk_z4_double(const GroupPtr& gamma, bool inversion) {
  auto z4 = make_cyclic(4);
  GroupHom d{z4, z4, {0, 2, 0, 2}};
  auto x = make_xmod(z4, z4, d, trivial_action(z4, z4, Side::Right), "[Z/4-x2->Z/4]");
  Braiding br{4, std::vector<Elem>(16)};
  for (Elem g = 0; g < 4; ++g)
    for (Elem h = 0; h < 4; ++h) br.table[g * 4 + h] = (2 * g * h) % 4;
  auto phi = inversion ? inversion_map(*z4) : identity_map(4);
  auto gx = make_gamma_xmod(x, gamma, cyclic_action(gamma, z4, phi), cyclic_action(gamma, z4, phi));
  return {inversion ? "z4-double-inv" : "z4-double", gx, br, BraidingLevel::Symmetric};
}

// [S3 -id-> S3] with conjugation and the commutator bracket; gamma acts by an inner automorphism.
inline DeskInstance desk_s3_identity(const GroupPtr& gamma) {
  auto s3 = make_s3();
  auto x = make_xmod(s3, s3, identity_hom(s3), conjugation_action(s3), "[S3-id->S3]");
  Braiding br{6, std::vector<Elem>(36)};
  for (Elem g = 0; g < 6; ++g)
    for (Elem h = 0; h < 6; ++h) br.table[g * 6 + h] = s3->commutator(g, h);
  auto phi = conjugation_map(*s3, 1);
  auto gx = make_gamma_xmod(x, gamma, cyclic_action(gamma, s3, phi), cyclic_action(gamma, s3, phi));
  return {"s3-identity", gx, br, BraidingLevel::Braided};
}

// [Z/2 -0-> Z/2 x Z/2], {g,h} = g_1 h_2: braided but not symmetric.
inline DeskInstance desk_klein_nonsymmetric(const GroupPtr& gamma) {
  auto z2 = make_cyclic(2);
  auto v = make_klein();
  auto x = make_xmod(z2, v, trivial_hom(z2, v), trivial_action(v, z2, Side::Right), "[Z/2-0->V4]");
  Braiding br{4, std::vector<Elem>(16)};
  for (Elem g = 0; g < 4; ++g)
    for (Elem h = 0; h < 4; ++h) br.table[g * 4 + h] = (g / 2) * (h % 2);
  return {"klein-nonsymmetric", with_trivial_gamma(x, gamma), br, BraidingLevel::Braided};
}

// [V4 -id-> V4] with Z/3 rotating both degrees and the trivial bracket.
inline DeskInstance desk_klein_identity_rotation() {
  auto v4 = make_klein();
  auto z3 = make_cyclic(3);
  auto x = make_xmod(v4, v4, identity_hom(v4), trivial_action(v4, v4, Side::Right), "[V4-id->V4]");
  std::vector<Elem> rot{0, 2, 3, 1};
  auto gx = make_gamma_xmod(x, z3, cyclic_action(z3, v4, rot), cyclic_action(z3, v4, rot));
  return {"v4-identity/z3-rot", gx, trivial_braiding(x), BraidingLevel::Symmetric};
}

// The built-in desk-scale instances used by the self test.
inline std::vector<DeskInstance> desk_instances() {
  auto z2 = make_cyclic(2), z3 = make_cyclic(3), z4 = make_cyclic(4);
  auto v4 = make_klein();
  auto s3 = make_s3();
  std::vector<DeskInstance> out;
  out.push_back(desk_abelian_top("z2-top/z2", z2, z2, identity_map(2)));
  out.push_back(desk_abelian_top("z3-top/z2-inv", z3, z2, inversion_map(*z3)));
  out.push_back(desk_abelian_top("v4-top/z2-swap", v4, z2, {0, 2, 1, 3}));
  out.push_back(desk_abelian_top("z2-top/z3", z2, z3, identity_map(2)));
  out.push_back(desk_abelian_top("v4-top/z3-rot", v4, z3, {0, 2, 3, 1}));
  out.push_back(desk_group("z2-bottom/z2", z2, z2, identity_map(2)));
  out.push_back(desk_group("z4-bottom/z2-inv", z4, z2, inversion_map(*z4)));
  out.push_back(desk_group("s3-bottom/z2-conj", s3, z2, conjugation_map(*s3, 1)));
  out.push_back(desk_z2_pairing(z2));
  out.push_back(desk_z4_double(z2, false));
  out.push_back(desk_z4_double(z2, true));
  out.push_back(desk_s3_identity(z2));
  out.push_back(desk_klein_nonsymmetric(z2));
  out.push_back(desk_klein_identity_rotation());
  return out;
}

}  // namespace xcoh
