#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcomplex.hpp"

namespace xcoh {

// ---------------------------------------------------------------- butterflies

//   H1 --kappa--> E <--iota-- G1
//   H0 <--pi----- E ---rho--> G0
struct Butterfly {
  CrossedModule h, g;
  GroupPtr e;
  GroupHom kappa, iota, pi, rho;
  std::optional<std::vector<Elem>> section;  // H0 -> E
  std::optional<GroupAction> gamma_action;   // left action of gamma on E
};

inline ValidationReport validate_butterfly(const Butterfly& b) {
  ValidationReport r;
  r.subject = "butterfly " + b.h.label + " -> " + b.g.label;
  r.merge(validate_hom(b.kappa));
  r.merge(validate_hom(b.iota));
  r.merge(validate_hom(b.pi));
  r.merge(validate_hom(b.rho));
  if (!r.ok()) return r;
  const auto& E = *b.e;
  for (Elem a = 0; a < b.g.g1->order(); ++a) {
    r.expect(b.rho(b.iota(a)) == b.g.d(a), "rho iota = d", {a});
    r.expect(b.pi(b.iota(a)) == 0, "pi iota = 1", {a});
  }
  for (Elem c = 0; c < b.h.g1->order(); ++c) {
    r.expect(b.pi(b.kappa(c)) == b.h.d(c), "pi kappa = d", {c});
    r.expect(b.rho(b.kappa(c)) == 0, "rho kappa = 1", {c});
  }
  r.expect(kernel(b.iota).size() == 1, "iota injective", {});
  r.expect(image(b.pi).size() == b.h.g0->order(), "pi surjective", {});
  r.expect(kernel(b.pi) == image(b.iota), "ker pi = im iota", {});
  for (Elem x = 0; x < E.order(); ++x) {
    Elem xi = E.inv(x);
    for (Elem a = 0; a < b.g.g1->order(); ++a)
      r.expect(b.iota(b.g.act(a, b.rho(x))) == E.mul({xi, b.iota(a), x}), "iota conjugation",
               {x, a});
    for (Elem c = 0; c < b.h.g1->order(); ++c)
      r.expect(b.kappa(b.h.act(c, b.pi(x))) == E.mul({xi, b.kappa(c), x}), "kappa conjugation",
               {x, c});
  }
  if (b.section) {
    const auto& s = *b.section;
    r.expect(s.size() == b.h.g0->order() && s[0] == 0, "section normalized", {});
    for (Elem h = 0; h < s.size(); ++h) r.expect(b.pi(s[h]) == h, "pi s = id", {h});
  }
  return r;
}

inline ValidationReport validate_gamma_butterfly(const Butterfly& b, const GammaCrossedModule& gh,
                                                 const GammaCrossedModule& gg) {
  ValidationReport r = validate_butterfly(b);
  r.subject = "gamma-butterfly " + b.h.label + " -> " + b.g.label;
  if (!b.gamma_action) {
    r.fail("gamma action present", {});
    return r;
  }
  const auto& act = *b.gamma_action;
  r.merge(validate_action(act));
  const auto& E = *b.e;
  for (Elem s = 0; s < gg.Gam().order(); ++s) {
    for (Elem x = 0; x < E.order(); ++x) {
      r.expect(b.pi(act(s, x)) == gh.s0(s, b.pi(x)), "pi equivariant", {s, x});
      r.expect(b.rho(act(s, x)) == gg.s0(s, b.rho(x)), "rho equivariant", {s, x});
      for (Elem y = 0; y < E.order(); ++y)
        r.expect(act(s, E.mul(x, y)) == E.mul(act(s, x), act(s, y)), "action by automorphisms",
                 {s, x, y});
    }
    for (Elem a = 0; a < gg.G1().order(); ++a)
      r.expect(b.iota(gg.s1(s, a)) == act(s, b.iota(a)), "iota equivariant", {s, a});
    for (Elem c = 0; c < gh.G1().order(); ++c)
      r.expect(b.kappa(gh.s1(s, c)) == act(s, b.kappa(c)), "kappa equivariant", {s, c});
  }
  return r;
}

// k{p(b),p(c)}_H i{r(b),r(c)}_G = b^-1 c^-1 b c
inline ValidationReport validate_braided_butterfly(const Butterfly& b, const Braiding& bh,
                                                   const Braiding& bg) {
  ValidationReport r;
  r.subject = "braided butterfly";
  const auto& E = *b.e;
  for (Elem x = 0; x < E.order(); ++x)
    for (Elem y = 0; y < E.order(); ++y)
      r.expect(E.mul(b.kappa(bh(b.pi(x), b.pi(y))), b.iota(bg(b.rho(x), b.rho(y)))) ==
                   E.commutator(x, y),
               "braided butterfly identity", {x, y});
  return r;
}

// Butterfly of a strict morphism f: H -> G on H0 x G1, (h,a)(h',a') = (hh', a^{f0 h'} a'),
// indexed h * |G1| + a.
inline Butterfly strict_butterfly(const GammaCrossedModule& gh, const GammaCrossedModule& gg,
                                  const StrictMorphism& f) {
  const auto& H0 = gh.G0();
  const auto& G1 = gg.G1();
  const std::size_t n0 = H0.order(), m1 = G1.order(), n = n0 * m1;
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem h = x / m1, a = x % m1, h2 = y / m1, a2 = y % m1;
      t[x * n + y] = static_cast<Elem>(H0.mul(h, h2) * m1 + G1.mul(gg.x.act(a, f.f0(h2)), a2));
    }
  auto E = make_group("B(" + gh.x.label + "->" + gg.x.label + ")", n, std::move(t));
  Butterfly b{gh.x, gg.x, E, {gh.x.g1, E, {}}, {gg.x.g1, E, {}}, {E, gh.x.g0, {}}, {E, gg.x.g0, {}},
              std::vector<Elem>{}, std::nullopt};
  for (Elem c = 0; c < gh.G1().order(); ++c)
    b.kappa.map.push_back(static_cast<Elem>(gh.x.d(c) * m1 + G1.inv(f.f1(c))));
  for (Elem a = 0; a < m1; ++a) b.iota.map.push_back(a);
  for (Elem x = 0; x < n; ++x) {
    b.pi.map.push_back(static_cast<Elem>(x / m1));
    b.rho.map.push_back(gg.G0().mul(f.f0(x / m1), gg.x.d(x % m1)));
  }
  for (Elem h = 0; h < n0; ++h) b.section->push_back(static_cast<Elem>(h * m1));
  const std::size_t ng = gg.Gam().order();
  std::vector<Elem> at(ng * n);
  for (Elem s = 0; s < ng; ++s)
    for (Elem x = 0; x < n; ++x) at[s * n + x] = static_cast<Elem>(gh.s0(s, x / m1) * m1 + gg.s1(s, x % m1));
  b.gamma_action = GroupAction{gg.gamma, E, Side::Left, std::move(at)};
  return b;
}

struct MultButterfly {
  ProductXmod product;  // G x G
  Braiding product_braiding;
  Butterfly bf;
  ValidationReport group_report;  // associativity of the displayed product
};

// Multiplication G x G -> G of a braided crossed module on B = G0 x G0 x G1,
// (g,h,a)(g',h',a') = (gg', hh', {h,g'}^{h'} a^{g'h'} a'), indexed (g |G0| + h) |G1| + a.
inline MultButterfly braided_mult_butterfly(const GammaCrossedModule& gx, const Braiding& br) {
  const auto& G0 = gx.G0();
  const auto& G1 = gx.G1();
  const std::size_t n0 = G0.order(), n1 = G1.order(), n = n0 * n0 * n1;
  auto enc = [&](Elem g, Elem h, Elem a) { return static_cast<Elem>((g * n0 + h) * n1 + a); };
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem g = x / (n0 * n1), h = (x / n1) % n0, a = x % n1;
      Elem g2 = y / (n0 * n1), h2 = (y / n1) % n0, a2 = y % n1;
      Elem v = G1.mul({gx.x.act(br(h, g2), h2), gx.x.act(a, G0.mul(g2, h2)), a2});
      t[x * n + y] = enc(G0.mul(g, g2), G0.mul(h, h2), v);
    }
  auto B = make_group("B(mult)", n, std::move(t));
  MultButterfly out{product_xmod(gx, gx), {}, {}, validate_group(*B)};
  out.product_braiding = product_braiding(out.product, br, br, n0, n1);
  Butterfly& b = out.bf;
  b.h = out.product.x.x;
  b.g = gx.x;
  b.e = B;
  b.kappa = {b.h.g1, B, {}};
  for (Elem c = 0; c < n1 * n1; ++c) {
    Elem a = c / n1, be = c % n1;
    b.kappa.map.push_back(enc(gx.x.d(a), gx.x.d(be), G1.mul(G1.inv(be), G1.inv(a))));
  }
  b.iota = {gx.x.g1, B, {}};
  for (Elem a = 0; a < n1; ++a) b.iota.map.push_back(enc(0, 0, a));
  b.pi = {B, b.h.g0, {}};
  b.rho = {B, gx.x.g0, {}};
  for (Elem x = 0; x < n; ++x) {
    Elem g = x / (n0 * n1), h = (x / n1) % n0, a = x % n1;
    b.pi.map.push_back(static_cast<Elem>(g * n0 + h));
    b.rho.map.push_back(G0.mul({g, h, gx.x.d(a)}));
  }
  b.section = std::vector<Elem>{};
  for (Elem gh = 0; gh < n0 * n0; ++gh) b.section->push_back(enc(gh / n0, gh % n0, 0));
  const std::size_t ng = gx.Gam().order();
  std::vector<Elem> at(ng * n);
  for (Elem s = 0; s < ng; ++s)
    for (Elem x = 0; x < n; ++x)
      at[s * n + x] = enc(gx.s0(s, x / (n0 * n1)), gx.s0(s, (x / n1) % n0), gx.s1(s, x % n1));
  b.gamma_action = GroupAction{gx.gamma, B, Side::Left, std::move(at)};
  return out;
}

// ---------------------------------------------------------------- the 2-groupoid Z

struct ZObject {
  GroupPtr e;
  GroupHom iota;                // G1 -> E
  GroupHom pi;                  // E -> gamma
  std::vector<Elem> rho;        // E -> G0, crossed homomorphism
  std::vector<Elem> section;    // gamma -> E with s(1) = 1
  std::vector<Elem> iota_pos;   // E -> G1 preimage under iota, or kNone

  Elem iota_inv(Elem x) const { return iota_pos[x]; }
};

inline void index_iota(ZObject& z) {
  z.iota_pos.assign(z.e->order(), kNone);
  for (Elem a = 0; a < z.iota.map.size(); ++a) z.iota_pos[z.iota(a)] = a;
}

struct ZArrow {
  GroupHom t;
  Elem g = 0;
};

inline ValidationReport validate_zobject(const GammaCrossedModule& gx, const ZObject& z) {
  ValidationReport r;
  r.subject = "Z object";
  r.merge(validate_hom(z.iota));
  r.merge(validate_hom(z.pi));
  if (!r.ok()) return r;
  const auto& E = *z.e;
  const auto& G0 = gx.G0();
  r.expect(kernel(z.iota).size() == 1, "iota injective", {});
  r.expect(image(z.pi).size() == gx.Gam().order(), "pi surjective", {});
  r.expect(kernel(z.pi) == image(z.iota), "ker pi = im iota", {});
  for (Elem a = 0; a < gx.G1().order(); ++a) r.expect(z.rho[z.iota(a)] == gx.x.d(a), "rho iota = d", {a});
  for (Elem x = 0; x < E.order(); ++x) {
    const Elem s = z.pi(x);
    const Elem si = gx.Gam().inv(s);
    for (Elem y = 0; y < E.order(); ++y)
      r.expect(z.rho[E.mul(x, y)] == G0.mul(z.rho[x], gx.s0(s, z.rho[y])),
               "rho(xy) = rho(x) ^pi(x) rho(y)", {x, y});
    for (Elem a = 0; a < gx.G1().order(); ++a)
      r.expect(z.iota(gx.s1(si, gx.x.act(a, z.rho[x]))) == E.mul({E.inv(x), z.iota(a), x}),
               "iota conjugation", {x, a});
  }
  r.expect(z.section.size() == gx.Gam().order() && z.section[0] == 0, "section normalized", {});
  for (Elem s = 0; s < z.section.size(); ++s) r.expect(z.pi(z.section[s]) == s, "pi s = id", {s});
  return r;
}

inline ValidationReport validate_zarrow(const GammaCrossedModule& gx, const ZObject& a,
                                        const ZObject& b, const ZArrow& f) {
  ValidationReport r;
  r.subject = "Z arrow";
  r.merge(validate_hom(f.t));
  if (!r.ok()) return r;
  r.expect(is_bijective(f.t.map, b.e->order()), "t bijective", {});
  const auto& G0 = gx.G0();
  const Elem gi = G0.inv(f.g);
  for (Elem x = 0; x < a.e->order(); ++x) {
    r.expect(a.pi(x) == b.pi(f.t(x)), "pi = pi' t", {x});
    r.expect(G0.mul({gi, a.rho[x], gx.s0(a.pi(x), f.g)}) == b.rho[f.t(x)],
             "g^-1 rho(x) ^pi(x) g = rho' t(x)", {x});
  }
  for (Elem al = 0; al < gx.G1().order(); ++al)
    r.expect(b.iota(gx.x.act(al, f.g)) == f.t(a.iota(al)), "iota'(a^g) = t iota(a)", {al});
  return r;
}

// mu: f => f2 for arrows into b.
inline ValidationReport validate_two_arrow(const GammaCrossedModule& gx, const ZObject& b,
                                           const ZArrow& f, const ZArrow& f2, Elem mu) {
  ValidationReport r;
  r.subject = "Z 2-arrow";
  const auto& E = *b.e;
  r.expect(gx.G0().mul(f.g, gx.x.d(mu)) == f2.g, "g d(mu) = g'", {mu});
  const Elem m = b.iota(mu);
  for (Elem x = 0; x < f.t.map.size(); ++x)
    r.expect(f2.t(x) == E.mul({E.inv(m), f.t(x), m}), "t' = mu^-1 t mu", {x, mu});
  return r;
}

inline ZArrow compose(const ZArrow& f, const ZArrow& f2, const FiniteGroup& G0) {
  return {compose(f2.t, f.t), G0.mul(f.g, f2.g)};
}

inline ZArrow identity_zarrow(const ZObject& z) { return {identity_hom(z.e), 0}; }

// ---------------------------------------------------------------- cocycle translations

// rho(s, a) = p(s) d(expr) or d(expr) p(s) with expr drawn from a small family.
struct RhoCandidate {
  const char* formula;
  std::function<Elem(const Cochains&, const Cochain1&, Elem, Elem)> eval;
};

inline const std::vector<RhoCandidate>& rho_candidates() {
  static const std::vector<RhoCandidate> list = [] {
    using C = const Cochains&;
    using Z = const Cochain1&;
    auto left = [](auto expr) {
      return [expr](C ch, Z c, Elem s, Elem a) { return ch.G0().mul(c.p[s], ch.d(expr(ch, c, s, a))); };
    };
    auto right = [](auto expr) {
      return [expr](C ch, Z c, Elem s, Elem a) { return ch.G0().mul(ch.d(expr(ch, c, s, a)), c.p[s]); };
    };
    auto plain = [](C, Z, Elem, Elem a) { return a; };
    auto sa = [](C ch, Z, Elem s, Elem a) { return ch.s1(s, a); };
    auto sia = [](C ch, Z, Elem s, Elem a) { return ch.s1(ch.Gam().inv(s), a); };
    auto ap = [](C ch, Z c, Elem s, Elem a) { return ch.act(a, c.p[s]); };
    auto s_ap = [](C ch, Z c, Elem s, Elem a) { return ch.s1(s, ch.act(a, c.p[s])); };
    auto si_ap = [](C ch, Z c, Elem s, Elem a) { return ch.s1(ch.Gam().inv(s), ch.act(a, c.p[s])); };
    std::vector<RhoCandidate> v;
    v.push_back({"p(s) d(a)", left(plain)});
    v.push_back({"p(s) d(^s a)", left(sa)});
    v.push_back({"p(s) d(^{s^-1} a)", left(sia)});
    v.push_back({"p(s) d(a^{p(s)})", left(ap)});
    v.push_back({"p(s) d(^s(a^{p(s)}))", left(s_ap)});
    v.push_back({"p(s) d(^{s^-1}(a^{p(s)}))", left(si_ap)});
    v.push_back({"d(a) p(s)", right(plain)});
    v.push_back({"d(^s a) p(s)", right(sa)});
    return v;
  }();
  return list;
}

// twisted: E multiplies with ^{(s1 s2)^-1} eps(s1, s2) in place of eps(s1, s2).
struct ZTranslation {
  bool twisted = true;
  std::size_t rho = 0;

  std::string product_formula() const {
    return twisted ? "(s1,a1)(s2,a2) = (s1 s2, ^{(s1 s2)^-1}eps(s1,s2) ^{s2^-1}(a1^{p(s2)}) a2)"
                   : "(s1,a1)(s2,a2) = (s1 s2, eps(s1,s2) ^{s2^-1}(a1^{p(s2)}) a2)";
  }
  std::string rho_formula() const { return std::string("rho(s,a) = ") + rho_candidates()[rho].formula; }
};

// E = gamma x G1 indexed s * |G1| + a, so (s, a) = s(s) iota(a).
inline ZObject zobject_from_cocycle(const Cochains& ch, const Cochain1& c, const ZTranslation& tr) {
  const auto& G1 = ch.G1();
  const auto& Gm = ch.Gam();
  const std::size_t n1 = G1.order(), ng = ch.ng(), n = ng * n1;
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem s1 = x / n1, a1 = x % n1, s2 = y / n1, a2 = y % n1;
      Elem st = Gm.mul(s1, s2);
      Elem e = ch.eps(c, s1, s2);
      if (tr.twisted) e = ch.s1(Gm.inv(st), e);
      t[x * n + y] = static_cast<Elem>(st * n1 + G1.mul({e, ch.s1(Gm.inv(s2), ch.act(a1, c.p[s2])), a2}));
    }
  ZObject z;
  z.e = make_group("E", n, std::move(t));
  z.iota = {ch.gx().x.g1, z.e, {}};
  for (Elem a = 0; a < n1; ++a) z.iota.map.push_back(a);
  z.pi = {z.e, ch.gx().gamma, {}};
  const auto& cand = rho_candidates()[tr.rho];
  for (Elem x = 0; x < n; ++x) {
    z.pi.map.push_back(static_cast<Elem>(x / n1));
    z.rho.push_back(cand.eval(ch, c, x / n1, x % n1));
  }
  for (Elem s = 0; s < ng; ++s) z.section.push_back(static_cast<Elem>(s * n1));
  index_iota(z);
  return z;
}

inline Cochain1 cocycle_from_zobject(const Cochains& ch, const ZObject& z,
                                     const std::vector<Elem>& s, const ZTranslation& tr) {
  const auto& Gm = ch.Gam();
  const auto& E = *z.e;
  if (s.size() != ch.ng() || s[0] != 0) throw PreconditionError("section must send 1 to 1");
  for (Elem x = 0; x < s.size(); ++x)
    if (z.pi(s[x]) != x) throw PreconditionError("not a section of pi");
  Cochain1 c = ch.c1_identity();
  for (Elem a = 0; a < ch.ng(); ++a) c.p[a] = z.rho[s[a]];
  for (Elem a = 0; a < ch.ng(); ++a)
    for (Elem b = 0; b < ch.ng(); ++b) {
      Elem ab = Gm.mul(a, b);
      Elem v = z.iota_inv(E.mul({E.inv(s[ab]), s[a], s[b]}));
      if (v == kNone) throw PreconditionError("section defect outside iota(G1)");
      ch.eps(c, a, b) = tr.twisted ? ch.s1(ab, v) : v;
    }
  return c;
}

inline Cochain1 cocycle_from_zobject(const Cochains& ch, const ZObject& z, const ZTranslation& tr) {
  return cocycle_from_zobject(ch, z, z.section, tr);
}

// (g, s -> ^s iota'^-1(s'(s)^-1 t(s(s))))
inline Cochain0 cochain_from_zarrow(const Cochains& ch, const ZObject& a, const ZObject& b,
                                    const ZArrow& f, const ZTranslation& tr) {
  const auto& E = *b.e;
  Cochain0 r{f.g, std::vector<Elem>(ch.ng())};
  for (Elem s = 0; s < ch.ng(); ++s) {
    Elem v = b.iota_inv(E.mul(E.inv(b.section[s]), f.t(a.section[s])));
    if (v == kNone) throw PreconditionError("arrow does not cover the identity of gamma");
    r.theta[s] = tr.twisted ? ch.s1(s, v) : v;
  }
  return r;
}

// Inverse of cochain_from_zarrow: t(s(s) iota(a)) = s'(s) iota'(^{s^-1} theta(s)) iota'(a^g).
inline ZArrow zarrow_from_cochain(const Cochains& ch, const ZObject& a, const ZObject& b,
                                  const Cochain0& c, const ZTranslation& tr) {
  const auto& Ea = *a.e;
  const auto& Eb = *b.e;
  ZArrow f{{a.e, b.e, std::vector<Elem>(Ea.order())}, c.g};
  for (Elem x = 0; x < Ea.order(); ++x) {
    Elem s = a.pi(x);
    Elem al = a.iota_inv(Ea.mul(Ea.inv(a.section[s]), x));
    Elem th = tr.twisted ? ch.s1(ch.Gam().inv(s), c.theta[s]) : c.theta[s];
    f.t.map[x] = Eb.mul({b.section[s], b.iota(th), b.iota(ch.act(al, c.g))});
  }
  return f;
}

struct TranslationSearch {
  struct Row {
    bool twisted;
    std::size_t rho;
    std::size_t valid = 0, tried = 0;
  };
  std::vector<Row> rows;
  std::optional<ZTranslation> chosen;
  std::vector<std::string> notes;
};

// Try every (product, rho) candidate on every given cocycle; keep those valid everywhere.
inline void search_translation(TranslationSearch& out, const Cochains& ch,
                               const std::vector<Cochain1>& z1) {
  if (out.rows.empty())
    for (bool tw : {false, true})
      for (std::size_t k = 0; k < rho_candidates().size(); ++k) out.rows.push_back({tw, k});
  for (auto& row : out.rows) {
    ZTranslation tr{row.twisted, row.rho};
    for (const auto& c : z1) {
      ++row.tried;
      try {
        auto z = zobject_from_cocycle(ch, c, tr);
        if (!validate_group(*z.e).ok()) continue;
        if (!validate_zobject(ch.gx(), z).ok()) continue;
        if (cocycle_from_zobject(ch, z, tr) != c) continue;
        ++row.valid;
      } catch (const InvalidGroupError&) {
      } catch (const PreconditionError&) {
      }
    }
  }
}

// Chooses `prefer` when it survives, else the first survivor.
inline void finish_translation(TranslationSearch& out, std::optional<ZTranslation> prefer = std::nullopt) {
  out.chosen.reset();
  out.notes.clear();
  std::vector<std::string> survivors;
  auto name = [](const ZTranslation& tr) {
    return std::string(tr.twisted ? "twisted" : "literal") + " product, " + tr.rho_formula();
  };
  for (const auto& row : out.rows)
    if (row.tried > 0 && row.valid == row.tried && prefer && row.twisted == prefer->twisted &&
        row.rho == prefer->rho)
      out.chosen = prefer;
  for (const auto& row : out.rows)
    if (row.tried > 0 && row.valid == row.tried) {
      ZTranslation tr{row.twisted, row.rho};
      if (!out.chosen) out.chosen = tr;
      if (tr.twisted != out.chosen->twisted || tr.rho != out.chosen->rho) survivors.push_back(name(tr));
    }
  if (!out.chosen) {
    out.notes.push_back("no candidate translation is valid on every cocycle");
    return;
  }
  out.notes.push_back("E product: " + out.chosen->product_formula());
  out.notes.push_back("derived " + out.chosen->rho_formula());
  if (!survivors.empty()) {
    std::string s = "other candidates valid on this data:";
    for (const auto& v : survivors) s += " [" + v + "]";
    out.notes.push_back(s);
  }
  for (const auto& row : out.rows)
    if (!row.twisted && row.valid < row.tried) {
      out.notes.push_back(std::string("literal product with ") + rho_candidates()[row.rho].formula +
                          " fails on " + std::to_string(row.tried - row.valid) + " of " +
                          std::to_string(row.tried) + " cocycles");
      break;
    }
}

// ---------------------------------------------------------------- arrow search

// All arrows a -> b (or the first one), by generator images; g runs over G0.
inline std::vector<ZArrow> enumerate_zarrows(const GammaCrossedModule& gx, const ZObject& a,
                                             const ZObject& b, bool first_only = false,
                                             std::uint64_t budget = kDefaultBudget) {
  std::vector<ZArrow> out;
  if (a.e->order() != b.e->order()) return out;
  const auto& G0 = gx.G0();
  auto gens = generators(*a.e);
  std::uint64_t nodes = 0;
  for (Elem g = 0; g < G0.order(); ++g) {
    const Elem gi = G0.inv(g);
    std::vector<std::vector<Elem>> cand(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem x = gens[k];
      Elem want = G0.mul({gi, a.rho[x], gx.s0(a.pi(x), g)});
      for (Elem y = 0; y < b.e->order(); ++y)
        if (b.pi(y) == a.pi(x) && b.rho[y] == want) cand[k].push_back(y);
    }
    std::vector<Elem> imgs(gens.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
      if (++nodes > budget) throw BudgetError("arrow search exceeds budget");
      if (k == gens.size()) {
        auto h = extend_hom(a.e, b.e, gens, imgs);
        if (!h) return true;
        ZArrow f{std::move(*h), g};
        if (validate_zarrow(gx, a, b, f).ok()) {
          out.push_back(std::move(f));
          if (first_only) return false;
        }
        return true;
      }
      for (Elem y : cand[k]) {
        imgs[k] = y;
        if (!rec(k + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) break;
  }
  return out;
}

inline std::optional<ZArrow> find_zarrow(const GammaCrossedModule& gx, const ZObject& a,
                                         const ZObject& b) {
  auto v = enumerate_zarrows(gx, a, b, true);
  if (v.empty()) return std::nullopt;
  return std::move(v.front());
}

// ---------------------------------------------------------------- quotient objects

// An object built as a quotient of a set of pairs, with the pair bookkeeping kept.
struct PairObject {
  ZObject obj;
  std::vector<std::pair<Elem, Elem>> pairs;  // ambient index -> pair
  std::vector<Elem> pair_index;              // x * width + y -> ambient index or kNone
  std::size_t width = 0;
  QuotientResult q;
  ValidationReport report;

  Elem ambient(Elem x, Elem y) const { return pair_index[x * width + y]; }
  Elem cls(Elem x, Elem y) const {
    Elem i = ambient(x, y);
    if (i == kNone) throw PreconditionError("pair outside the fiber product");
    return q.projection(i);
  }
  std::pair<Elem, Elem> rep(Elem c) const { return pairs[q.reps[c]]; }
};

// pi and rho are read from representatives and checked constant on cosets.
inline void finish_pair_object(PairObject& P, const GammaCrossedModule& gx,
                               const std::function<Elem(Elem, Elem)>& pi_of,
                               const std::function<Elem(Elem, Elem)>& rho_of) {
  auto& z = P.obj;
  z.e = P.q.group;
  const std::size_t m = z.e->order();
  z.pi = {z.e, gx.gamma, std::vector<Elem>(m)};
  z.rho.assign(m, 0);
  for (Elem c = 0; c < m; ++c) {
    auto [x, y] = P.rep(c);
    z.pi.map[c] = pi_of(x, y);
    z.rho[c] = rho_of(x, y);
  }
  for (Elem i = 0; i < P.pairs.size(); ++i) {
    auto [x, y] = P.pairs[i];
    Elem c = P.q.projection(i);
    P.report.expect(pi_of(x, y) == z.pi(c), "pi well defined on the quotient", {i});
    P.report.expect(rho_of(x, y) == z.rho[c], "rho well defined on the quotient", {i});
  }
  index_iota(z);
}

// ---------------------------------------------------------------- star product

// F = E x_gamma E' with (x1,y1)(x2,y2) = (x1 x2 iota(^{(s1 s2)^-1}{rho'(y1)^-1, ^{s1} rho(x2)}^-1), y1 y2),
// s_i = pi(x_i), modulo (iota(a), iota'(a)^-1).
inline PairObject star_objects(const GammaCrossedModule& gx, const Braiding& br, const ZObject& a,
                               const ZObject& b) {
  const auto& Ea = *a.e;
  const auto& Eb = *b.e;
  const auto& G0 = gx.G0();
  const auto& G1 = gx.G1();
  PairObject P;
  P.report.subject = "star product";
  P.width = Eb.order();
  P.pair_index.assign(Ea.order() * Eb.order(), kNone);
  for (Elem x = 0; x < Ea.order(); ++x)
    for (Elem y = 0; y < Eb.order(); ++y)
      if (a.pi(x) == b.pi(y)) {
        P.pair_index[x * P.width + y] = static_cast<Elem>(P.pairs.size());
        P.pairs.emplace_back(x, y);
      }
  const std::size_t n = P.pairs.size();
  std::vector<Elem> t(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      auto [x1, y1] = P.pairs[i];
      auto [x2, y2] = P.pairs[j];
      const Elem s1 = a.pi(x1), s12 = gx.Gam().mul(s1, a.pi(x2));
      Elem bracket = br(G0.inv(b.rho[y1]), gx.s0(s1, a.rho[x2]));
      Elem x = Ea.mul({x1, x2, a.iota(gx.s1(gx.Gam().inv(s12), G1.inv(bracket)))});
      t[i * n + j] = P.ambient(x, Eb.mul(y1, y2));
    }
  auto F = make_group("ExE'", n, std::move(t));
  P.report.merge(validate_group(*F));
  ElementSet N;
  for (Elem al = 0; al < G1.order(); ++al) N.push_back(P.ambient(a.iota(al), b.iota(G1.inv(al))));
  std::sort(N.begin(), N.end());
  P.q = quotient(F, N, "E*E'");
  P.obj.iota = {gx.x.g1, P.q.group, {}};
  for (Elem al = 0; al < G1.order(); ++al) {
    P.obj.iota.map.push_back(P.cls(a.iota(al), 0));
    P.report.expect(P.cls(a.iota(al), 0) == P.cls(0, b.iota(al)), "j well defined", {al});
  }
  finish_pair_object(
      P, gx, [&](Elem x, Elem) { return a.pi(x); },
      [&](Elem x, Elem y) { return G0.mul(a.rho[x], b.rho[y]); });
  for (Elem s = 0; s < gx.Gam().order(); ++s) P.obj.section.push_back(P.cls(a.section[s], b.section[s]));
  return P;
}

// Map of star objects from a map on pairs, checking that it descends to the quotient.
inline GroupHom descend_pairs(const PairObject& S1, const PairObject& S2,
                              const std::function<std::pair<Elem, Elem>(Elem, Elem)>& f,
                              ValidationReport& r, const char* what) {
  GroupHom h{S1.obj.e, S2.obj.e, std::vector<Elem>(S1.obj.e->order(), kNone)};
  for (Elem i = 0; i < S1.pairs.size(); ++i) {
    auto [x, y] = S1.pairs[i];
    auto [u, v] = f(x, y);
    Elem c = S1.q.projection(i);
    Elem target = S2.cls(u, v);
    if (h.map[c] == kNone)
      h.map[c] = target;
    else
      r.expect(h.map[c] == target, what, {i});
  }
  return h;
}

struct DescendedArrow {
  ZArrow arrow;
  ValidationReport descent;
};

// (t, g) * (t', g') with label g g', as (f * id) followed by (id * f'):
// u = t(x) iota2(^{s^-1}{^s g, rho'(y)^-1}), (x, y) -> (u iota2(^{s^-1}{rho2(u), g'}), t'(y)), s = pi(x).
inline DescendedArrow star_arrows(const GammaCrossedModule& gx, const Braiding& br,
                                  const ZObject& a1, const ZObject& a2, const ZArrow& f,
                                  const ZObject& b1, const ZObject& b2, const ZArrow& fp,
                                  const PairObject& S1, const PairObject& S2) {
  const auto& G0 = gx.G0();
  const auto& E2 = *a2.e;
  DescendedArrow out;
  out.descent.subject = "star of arrows";
  const Elem g = f.g, gp = fp.g;
  auto map = [&](Elem x, Elem y) {
    const Elem s = a1.pi(x), si = gx.Gam().inv(s);
    Elem u = E2.mul(f.t(x), a2.iota(gx.s1(si, br(gx.s0(s, g), G0.inv(b1.rho[y])))));
    Elem v = E2.mul(u, a2.iota(gx.s1(si, br(a2.rho[u], gp))));
    return std::make_pair(v, fp.t(y));
  };
  out.arrow = {descend_pairs(S1, S2, map, out.descent, "star of arrows descends"), G0.mul(g, gp)};
  (void)b2;
  return out;
}

// mu^{g1'} mu'
inline Elem star_two_arrows(const GammaCrossedModule& gx, Elem mu, Elem mup, Elem g1p) {
  return gx.G1().mul(gx.x.act(mu, g1p), mup);
}

// E * E' -> E' * E, (x, y) -> (iota'{rho(x)^-1, rho'(y)^-1} y, x), label 1.
inline DescendedArrow symmetric_braiding(const GammaCrossedModule& gx, const Braiding& br,
                                         const ZObject& a, const ZObject& b, const PairObject& Sab,
                                         const PairObject& Sba) {
  const auto& G0 = gx.G0();
  DescendedArrow out;
  out.descent.subject = "symmetric braiding";
  auto map = [&](Elem x, Elem y) {
    return std::make_pair(b.e->mul(b.iota(br(G0.inv(a.rho[x]), G0.inv(b.rho[y]))), y), x);
  };
  out.arrow = {descend_pairs(Sab, Sba, map, out.descent, "braiding descends"), 0};
  return out;
}

// ---------------------------------------------------------------- pushforward

// K = E x_{rho, H0, p} B with (x,b)(y,c) = (xy, b ^pi(x) c), modulo (iota(a), k(a)); lambda = r(b).
inline PairObject pushforward_object(const Butterfly& bf, const GammaCrossedModule& gg,
                                     const ZObject& z) {
  if (!bf.section || !bf.gamma_action) throw PreconditionError("pushforward needs a strong gamma-butterfly");
  const auto& E = *z.e;
  const auto& B = *bf.e;
  const auto& act = *bf.gamma_action;
  const auto& s = *bf.section;
  PairObject P;
  P.report.subject = "pushforward";
  P.width = B.order();
  P.pair_index.assign(E.order() * B.order(), kNone);
  for (Elem x = 0; x < E.order(); ++x)
    for (Elem b = 0; b < B.order(); ++b)
      if (z.rho[x] == bf.pi(b)) {
        P.pair_index[x * P.width + b] = static_cast<Elem>(P.pairs.size());
        P.pairs.emplace_back(x, b);
      }
  const std::size_t n = P.pairs.size();
  std::vector<Elem> t(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      auto [x, b] = P.pairs[i];
      auto [y, c] = P.pairs[j];
      Elem v = P.ambient(E.mul(x, y), B.mul(b, act(z.pi(x), c)));
      if (v == kNone) throw PreconditionError("fiber product not closed under the product");
      t[i * n + j] = v;
    }
  auto K = make_group("K", n, std::move(t));
  P.report.merge(validate_group(*K));
  ElementSet N;
  for (Elem al = 0; al < bf.h.g1->order(); ++al) N.push_back(P.ambient(z.iota(al), bf.kappa(al)));
  std::sort(N.begin(), N.end());
  P.q = quotient(K, N, "F");
  P.obj.iota = {gg.x.g1, P.q.group, {}};
  for (Elem be = 0; be < gg.G1().order(); ++be) P.obj.iota.map.push_back(P.cls(0, bf.iota(be)));
  finish_pair_object(
      P, gg, [&](Elem x, Elem) { return z.pi(x); }, [&](Elem, Elem b) { return bf.rho(b); });
  for (Elem sg = 0; sg < gg.Gam().order(); ++sg) {
    Elem x = z.section[sg];
    P.obj.section.push_back(P.cls(x, s[z.rho[x]]));
  }
  return P;
}

// (t, h) -> (u, r s(h)) with u(x, b) = (t(x), s(h)^-1 b ^pi(x) s(h)).
inline DescendedArrow pushforward_arrow(const Butterfly& bf, const ZObject& z1, const PairObject& P1,
                                        const PairObject& P2, const ZArrow& f) {
  const auto& B = *bf.e;
  const auto& act = *bf.gamma_action;
  const Elem sh = (*bf.section)[f.g];
  DescendedArrow out;
  out.descent.subject = "pushforward of an arrow";
  auto map = [&](Elem x, Elem b) {
    return std::make_pair(f.t(x), B.mul({B.inv(sh), b, act(z1.pi(x), sh)}));
  };
  out.arrow = {descend_pairs(P1, P2, map, out.descent, "pushforward of an arrow descends"), bf.rho(sh)};
  return out;
}

// The unique nu with i(nu) = s(h)^-1 s(h d mu) kappa(mu)^-1.
inline Elem pushforward_two_arrow(const Butterfly& bf, Elem h, Elem mu) {
  const auto& B = *bf.e;
  const auto& s = *bf.section;
  Elem target = B.mul({B.inv(s[h]), s[bf.h.g0->mul(h, bf.h.d(mu))], B.inv(bf.kappa(mu))});
  Elem found = kNone;
  for (Elem nu = 0; nu < bf.g.g1->order(); ++nu)
    if (bf.iota(nu) == target) {
      if (found != kNone) throw PreconditionError("pushforward of a 2-arrow is not unique");
      found = nu;
    }
  if (found == kNone) throw PreconditionError("pushforward of a 2-arrow does not exist");
  return found;
}

// i eps(h, h') = s(hh')^-1 s(h) s(h')
inline Elem section_defect(const Butterfly& bf, Elem h, Elem hp) {
  const auto& B = *bf.e;
  const auto& s = *bf.section;
  Elem target = B.mul({B.inv(s[bf.h.g0->mul(h, hp)]), s[h], s[hp]});
  for (Elem nu = 0; nu < bf.g.g1->order(); ++nu)
    if (bf.iota(nu) == target) return nu;
  throw PreconditionError("section defect outside i(G1)");
}

// F_{E,E'}: B_*(E) * B_*(E') -> B_*(E * E'), ((x,b),(y,c)) -> (x, y, bc), label 1.
inline DescendedArrow monoidal_comparison(const Butterfly& bf, const PairObject& Pa,
                                          const PairObject& Pb, const PairObject& Sstar,
                                          const PairObject& Sab, const PairObject& Pab) {
  const auto& B = *bf.e;
  DescendedArrow out;
  out.descent.subject = "monoidal comparison";
  out.arrow.t = {Sstar.obj.e, Pab.obj.e, std::vector<Elem>(Sstar.obj.e->order(), kNone)};
  // every ambient representative of both factors must give the same class
  for (Elem i = 0; i < Sstar.pairs.size(); ++i) {
    auto [u, v] = Sstar.pairs[i];
    Elem c = Sstar.q.projection(i);
    for (Elem ku = 0; ku < Pa.pairs.size(); ++ku) {
      if (Pa.q.projection(ku) != u) continue;
      for (Elem kv = 0; kv < Pb.pairs.size(); ++kv) {
        if (Pb.q.projection(kv) != v) continue;
        auto [x, b] = Pa.pairs[ku];
        auto [y, cc] = Pb.pairs[kv];
        Elem target = Pab.cls(Sab.cls(x, y), B.mul(b, cc));
        if (out.arrow.t.map[c] == kNone)
          out.arrow.t.map[c] = target;
        else
          out.descent.expect(out.arrow.t.map[c] == target, "comparison descends", {i, ku, kv});
      }
    }
  }
  out.arrow.g = 0;
  return out;
}

// ---------------------------------------------------------------- checks against cocycles

struct ZCheck {
  ValidationReport report;
  std::size_t objects = 0, arrows_base = 0, classes_h1 = 0, classes_h0 = 0, h_minus1 = 0;
};

// Objects, arrows and 2-arrows of Z against Z1, C0 and G1.
inline ZCheck verify_z_against_cocycles(const Cochains& ch, const Cohomology& co,
                                        const ZTranslation& tr) {
  ZCheck out;
  auto& r = out.report;
  r.subject = "Z against cocycles";
  const auto& gx = ch.gx();
  const auto& z1 = co.h1.z1;
  std::vector<ZObject> objs;
  for (Elem i = 0; i < z1.size(); ++i) {
    objs.push_back(zobject_from_cocycle(ch, z1[i], tr));
    r.expect(validate_group(*objs.back().e).ok(), "E is a group", {i});
    r.expect(validate_zobject(gx, objs.back()).ok(), "E is a Z object", {i});
    r.expect(cocycle_from_zobject(ch, objs.back(), tr) == z1[i], "round trip", {i});
  }
  out.objects = objs.size();
  // a second section: shift every nontrivial fiber by a fixed element of G1
  if (ch.G1().order() > 1)
    for (Elem i = 0; i < z1.size(); ++i) {
      auto s = objs[i].section;
      for (Elem k = 1; k < s.size(); ++k) s[k] = objs[i].e->mul(s[k], objs[i].iota(1));
      r.expect(co.h1.class_of(cocycle_from_zobject(ch, objs[i], s, tr)) == co.h1.cls[i],
               "other section, same class", {i});
    }
  // isomorphism classes
  for (Elem i = 0; i < z1.size(); ++i) {
    Elem rep = co.h1.reps[co.h1.cls[i]];
    r.expect(find_zarrow(gx, objs[i], objs[rep]).has_value(), "isomorphic within a class", {i, rep});
  }
  for (Elem a = 0; a < co.h1.reps.size(); ++a)
    for (Elem b = a + 1; b < co.h1.reps.size(); ++b)
      r.expect(!find_zarrow(gx, objs[co.h1.reps[a]], objs[co.h1.reps[b]]).has_value(),
               "no arrow across classes", {a, b});
  out.classes_h1 = co.h1.reps.size();
  // cochains as arrows
  for (const auto& a : ch.c0_generators())
    for (Elem i = 0; i < z1.size(); ++i) {
      Elem j = co.h1.index_of(ch.act(z1[i], a));
      auto f = zarrow_from_cochain(ch, objs[i], objs[j], a, tr);
      r.expect(validate_zarrow(gx, objs[i], objs[j], f).ok(), "cochain gives an arrow", {i, j});
      r.expect(cochain_from_zarrow(ch, objs[i], objs[j], f, tr) == a, "arrow round trip", {i, j});
    }
  // base object: self-arrows and their 2-isomorphism classes
  Elem base = co.h1.index_of(ch.c1_identity());
  const auto& E0 = objs[base];
  auto arrows = enumerate_zarrows(gx, E0, E0);
  out.arrows_base = arrows.size();
  r.expect(arrows.size() == co.h0.z0.size(), "self-arrows of the base biject with Z0",
           {static_cast<Elem>(arrows.size()), static_cast<Elem>(co.h0.z0.size())});
  std::vector<Cochain0> as_c0;
  for (const auto& f : arrows) {
    as_c0.push_back(cochain_from_zarrow(ch, E0, E0, f, tr));
    r.expect(ch.in_z0(as_c0.back()), "self-arrow lands in Z0", {});
  }
  for (std::size_t i = 0; i < arrows.size() && i < 64; ++i)
    for (std::size_t j = 0; j < arrows.size() && j < 64; ++j) {
      auto fg = compose(arrows[i], arrows[j], gx.G0());
      r.expect(cochain_from_zarrow(ch, E0, E0, fg, tr) == ch.c0_mul(as_c0[i], as_c0[j]),
               "composition is the C0 product", {static_cast<Elem>(i), static_cast<Elem>(j)});
    }
  // 2-arrows between self-arrows give exactly the H0 partition
  std::vector<Elem> cls2(arrows.size(), kNone);
  Elem ncls = 0;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (cls2[i] != kNone) continue;
    for (std::size_t j = i; j < arrows.size(); ++j)
      for (Elem mu = 0; mu < ch.G1().order(); ++mu)
        if (validate_two_arrow(gx, E0, arrows[i], arrows[j], mu).ok()) {
          cls2[j] = ncls;
          break;
        }
    ++ncls;
  }
  out.classes_h0 = ncls;
  r.expect(ncls == co.h0.set.size(), "2-isomorphism classes of self-arrows = H0",
           {ncls, static_cast<Elem>(co.h0.set.size())});
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = 0; j < arrows.size(); ++j)
      r.expect((cls2[i] == cls2[j]) == (co.h0.class_of(as_c0[i]) == co.h0.class_of(as_c0[j])),
               "2-isomorphism matches H0 classes", {static_cast<Elem>(i), static_cast<Elem>(j)});
  // 2-automorphisms of the identity arrow
  auto id = identity_zarrow(E0);
  std::vector<std::vector<Elem>> autos;
  for (Elem mu = 0; mu < ch.G1().order(); ++mu)
    if (validate_two_arrow(gx, E0, id, id, mu).ok()) autos.push_back({mu});
  out.h_minus1 = autos.size();
  r.expect(autos == co.hm1.elements, "2-automorphisms of the identity = H-1", {});
  return out;
}

// Z object of a trivially acted gamma as a butterfly from [1 -> gamma].
inline Butterfly dedecker_butterfly(const GammaCrossedModule& gx, const ZObject& z) {
  auto one = make_cyclic(1);
  CrossedModule h = make_xmod(one, gx.gamma, trivial_hom(one, gx.gamma),
                              trivial_action(gx.gamma, one, Side::Right), "[1->gamma]");
  return {h, gx.x, z.e, trivial_hom(one, z.e), z.iota, z.pi, {z.e, gx.x.g0, z.rho}, std::nullopt,
          std::nullopt};
}

// ---------------------------------------------------------------- pushforward on cohomology

// Effect of a strong gamma-butterfly H -> G on H^-1, H^0 and H^1.
inline InducedMaps pushforward_on_cohomology(const Butterfly& bf, const Cochains& chH,
                                             const Cohomology& coH, const Cochains& chG,
                                             const Cohomology& coG, const ZTranslation& tr) {
  InducedMaps out;
  auto& r = out.report;
  r.subject = "pushforward on cohomology";
  const auto& gg = chG.gx();
  out.h1.assign(coH.h1.set.size(), kNone);
  for (Elem i = 0; i < coH.h1.z1.size(); ++i) {
    auto z = zobject_from_cocycle(chH, coH.h1.z1[i], tr);
    auto P = pushforward_object(bf, gg, z);
    r.merge(P.report);
    r.expect(validate_zobject(gg, P.obj).ok(), "pushforward is a Z object", {i});
    Elem v = coG.h1.class_of(cocycle_from_zobject(chG, P.obj, tr));
    Elem c = coH.h1.cls[i];
    if (out.h1[c] == kNone)
      out.h1[c] = v;
    else
      r.expect(out.h1[c] == v, "H1 map well defined", {i});
  }
  auto E0 = zobject_from_cocycle(chH, chH.c1_identity(), tr);
  auto P0 = pushforward_object(bf, gg, E0);
  r.expect(cocycle_from_zobject(chG, P0.obj, tr) == chG.c1_identity(), "base goes to base", {});
  out.h0.assign(coH.h0.set.size(), kNone);
  for (Elem i = 0; i < coH.h0.z0.size(); ++i) {
    auto f = zarrow_from_cochain(chH, E0, E0, coH.h0.z0[i], tr);
    auto u = pushforward_arrow(bf, E0, P0, P0, f);
    r.merge(u.descent);
    r.expect(validate_zarrow(gg, P0.obj, P0.obj, u.arrow).ok(), "pushforward is an arrow", {i});
    Elem v = coG.h0.class_of(cochain_from_zarrow(chG, P0.obj, P0.obj, u.arrow, tr));
    Elem c = coH.h0.cls[i];
    if (out.h0[c] == kNone)
      out.h0[c] = v;
    else
      r.expect(out.h0[c] == v, "H0 map well defined", {i});
  }
  auto idG = identity_zarrow(P0.obj);
  for (const auto& e : coH.hm1.elements) {
    Elem nu = pushforward_two_arrow(bf, 0, e[0]);
    r.expect(validate_two_arrow(gg, P0.obj, idG, idG, nu).ok(), "pushforward is a 2-automorphism", {e[0]});
    Elem idx = kNone;
    for (Elem j = 0; j < coG.hm1.size(); ++j)
      if (coG.hm1.elements[j][0] == nu) idx = j;
    out.hm1.push_back(idx);
  }
  auto hom_check = [&](const CohomologySet& a, const CohomologySet& b, const std::vector<Elem>& m,
                       const char* what) {
    if (!a.table || !b.table) return;
    for (Elem x : m)
      if (x == kNone) return;
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y) r.expect(m[a.mul(x, y)] == b.mul(m[x], m[y]), what, {x, y});
  };
  hom_check(coH.hm1, coG.hm1, out.hm1, "H-1 map is a homomorphism");
  hom_check(coH.h0.set, coG.h0.set, out.h0, "H0 map is a homomorphism");
  return out;
}

}  // namespace xcoh
