#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace xcoh {

// [d: G1 -> G0] with a right action of G0 on G1, written a^g.
struct CrossedModule {
  GroupPtr g1, g0;
  GroupHom boundary;
  GroupAction action;
  std::string label;

  Elem d(Elem a) const { return boundary(a); }
  Elem act(Elem a, Elem g) const { return action(g, a); }
};

// Crossed module with compatible left actions of gamma, written ^s x.
struct GammaCrossedModule {
  CrossedModule x;
  GroupPtr gamma;
  GroupAction act1, act0;

  const FiniteGroup& G1() const { return *x.g1; }
  const FiniteGroup& G0() const { return *x.g0; }
  const FiniteGroup& Gam() const { return *gamma; }
  Elem s1(Elem s, Elem a) const { return act1(s, a); }
  Elem s0(Elem s, Elem g) const { return act0(s, g); }
};

enum class BraidingLevel { Braided, Symmetric, Picard };

inline const char* to_string(BraidingLevel l) {
  switch (l) {
    case BraidingLevel::Braided: return "braided";
    case BraidingLevel::Symmetric: return "symmetric";
    case BraidingLevel::Picard: return "picard";
  }
  return "?";
}

// Bracket G0 x G0 -> G1, table[g * |G0| + h] = {g, h}.
struct Braiding {
  std::size_t n0 = 0;
  std::vector<Elem> table;
  Elem operator()(Elem g, Elem h) const { return table[g * n0 + h]; }
};

inline Braiding trivial_braiding(const CrossedModule& x) {
  return {x.g0->order(), std::vector<Elem>(x.g0->order() * x.g0->order(), 0)};
}

// Degreewise homs between crossed modules.
struct StrictMorphism {
  GroupHom f1, f0;
};

inline CrossedModule make_xmod(GroupPtr g1, GroupPtr g0, GroupHom d, GroupAction act,
                               std::string label = {}) {
  return {std::move(g1), std::move(g0), std::move(d), std::move(act), std::move(label)};
}

// Degenerate shapes [A -> 1] (A abelian) and [1 -> G].
inline CrossedModule xmod_from_abelian_top(const GroupPtr& a) {
  auto one = make_cyclic(1);
  return make_xmod(a, one, trivial_hom(a, one), trivial_action(one, a, Side::Right),
                   "[" + a->label() + "->1]");
}
inline CrossedModule xmod_from_group(const GroupPtr& g) {
  auto one = make_cyclic(1);
  return make_xmod(one, g, trivial_hom(one, g), trivial_action(g, one, Side::Right),
                   "[1->" + g->label() + "]");
}

// ---------------------------------------------------------------- validators

inline ValidationReport validate_crossed_module(const CrossedModule& x) {
  ValidationReport r;
  r.subject = "crossed module " + x.label;
  r.merge(validate_hom(x.boundary));
  if (x.action.side != Side::Right) r.fail("action must be a right action", {});
  r.merge(validate_action(x.action));
  const auto& G1 = *x.g1;
  const auto& G0 = *x.g0;
  for (Elem a = 0; a < G1.order(); ++a)
    for (Elem g = 0; g < G0.order(); ++g)
      r.expect(x.d(x.act(a, g)) == G0.conj(x.d(a), g), "equivariance", {a, g});
  for (Elem a = 0; a < G1.order(); ++a)
    for (Elem b = 0; b < G1.order(); ++b)
      r.expect(x.act(a, x.d(b)) == G1.conj(a, b), "peiffer", {a, b});
  return r;
}

inline ValidationReport validate_gamma_xmod(const GammaCrossedModule& gx) {
  ValidationReport r;
  r.subject = "gamma crossed module " + gx.x.label;
  r.merge(validate_crossed_module(gx.x));
  if (gx.act1.side != Side::Left || gx.act0.side != Side::Left)
    r.fail("gamma actions must be left actions", {});
  r.merge(validate_action(gx.act1));
  r.merge(validate_action(gx.act0));
  const auto& G1 = gx.G1();
  const auto& G0 = gx.G0();
  for (Elem s = 0; s < gx.Gam().order(); ++s) {
    for (Elem a = 0; a < G1.order(); ++a)
      r.expect(gx.x.d(gx.s1(s, a)) == gx.s0(s, gx.x.d(a)), "boundary gamma-equivariant", {s, a});
    for (Elem a = 0; a < G1.order(); ++a)
      for (Elem g = 0; g < G0.order(); ++g)
        r.expect(gx.s1(s, gx.x.act(a, g)) == gx.x.act(gx.s1(s, a), gx.s0(s, g)),
                 "gamma compatibility", {s, a, g});
  }
  return r;
}

inline ValidationReport validate_braiding(const CrossedModule& x, const Braiding& br,
                                          BraidingLevel level) {
  ValidationReport r;
  r.subject = std::string(to_string(level)) + " braiding on " + x.label;
  const auto& G1 = *x.g1;
  const auto& G0 = *x.g0;
  const Elem n0 = static_cast<Elem>(G0.order());
  if (br.table.size() != G0.order() * G0.order()) {
    r.fail("size", {});
    return r;
  }
  for (Elem g = 0; g < n0; ++g)
    for (Elem h = 0; h < n0; ++h) {
      r.expect(x.d(br(g, h)) == G0.commutator(g, h), "boundary of bracket is commutator", {g, h});
      for (Elem k = 0; k < n0; ++k) {
        r.expect(br(g, G0.mul(h, k)) == G1.mul(br(g, k), x.act(br(g, h), k)),
                 "bracket multiplicative in second slot", {g, h, k});
        r.expect(br(G0.mul(g, h), k) == G1.mul(x.act(br(g, k), h), br(h, k)),
                 "bracket multiplicative in first slot", {g, h, k});
      }
    }
  for (Elem a = 0; a < G1.order(); ++a)
    for (Elem g = 0; g < n0; ++g) {
      r.expect(br(x.d(a), g) == G1.mul(G1.inv(a), x.act(a, g)), "bracket with boundary (left)",
               {a, g});
      r.expect(br(g, x.d(a)) == G1.mul(x.act(G1.inv(a), g), a), "bracket with boundary (right)",
               {a, g});
    }
  if (level != BraidingLevel::Braided)
    for (Elem g = 0; g < n0; ++g)
      for (Elem h = 0; h < n0; ++h)
        r.expect(G1.mul(br(g, h), br(h, g)) == 0, "symmetric", {g, h});
  if (level == BraidingLevel::Picard)
    for (Elem g = 0; g < n0; ++g) r.expect(br(g, g) == 0, "picard", {g});
  return r;
}

inline ValidationReport validate_gamma_braiding(const GammaCrossedModule& gx, const Braiding& br,
                                                BraidingLevel level) {
  ValidationReport r = validate_braiding(gx.x, br, level);
  r.subject = "gamma-equivariant " + r.subject;
  const Elem n0 = static_cast<Elem>(gx.G0().order());
  if (br.table.size() != gx.G0().order() * gx.G0().order()) return r;
  for (Elem s = 0; s < gx.Gam().order(); ++s)
    for (Elem g = 0; g < n0; ++g)
      for (Elem h = 0; h < n0; ++h)
        r.expect(br(gx.s0(s, g), gx.s0(s, h)) == gx.s1(s, br(g, h)), "gamma-equivariant bracket",
                 {s, g, h});
  return r;
}

// Derived identities every braiding satisfies.
inline ValidationReport validate_identities(const CrossedModule& x, const Braiding& br) {
  ValidationReport r;
  r.subject = "braiding identities on " + x.label;
  const auto& G1 = *x.g1;
  const auto& G0 = *x.g0;
  const Elem n0 = static_cast<Elem>(G0.order());
  for (Elem g = 0; g < n0; ++g) {
    r.expect(x.act(br(g, g), g) == br(g, g), "{g,g}^g = {g,g}", {g});
    for (Elem h = 0; h < n0; ++h) {
      Elem gi = G0.inv(g), hi = G0.inv(h);
      Elem inv_gh = G1.inv(br(g, h));
      r.expect(x.act(br(g, hi), h) == inv_gh, "{g,h^-1}^h = {g,h}^-1", {g, h});
      r.expect(x.act(br(gi, h), g) == inv_gh, "{g^-1,h}^g = {g,h}^-1", {g, h});
      r.expect(x.act(br(gi, hi), G0.mul(g, h)) == br(g, h), "{g^-1,h^-1}^(gh) = {g,h}", {g, h});
      for (Elem k = 0; k < n0; ++k) {
        r.expect(br(G0.mul(g, h), k) == G1.mul(br(h, G0.conj(k, g)), br(g, k)),
                 "{gh,k} = {h,g^-1kg}{g,k}", {g, h, k});
        r.expect(br(g, G0.mul(h, k)) == G1.mul(br(g, h), br(G0.conj(g, h), k)),
                 "{g,hk} = {g,h}{h^-1gh,k}", {g, h, k});
        r.expect(x.act(br(g, h), k) == br(G0.conj(g, k), G0.conj(h, k)),
                 "{g,h}^k = {k^-1gk,k^-1hk}", {g, h, k});
      }
    }
  }
  return r;
}

inline ValidationReport validate_strict_morphism(const CrossedModule& h, const CrossedModule& g,
                                                 const StrictMorphism& f) {
  ValidationReport r;
  r.subject = "strict morphism " + h.label + " -> " + g.label;
  r.merge(validate_hom(f.f1));
  r.merge(validate_hom(f.f0));
  for (Elem b = 0; b < h.g1->order(); ++b)
    r.expect(f.f0(h.d(b)) == g.d(f.f1(b)), "commutes with boundary", {b});
  for (Elem b = 0; b < h.g1->order(); ++b)
    for (Elem k = 0; k < h.g0->order(); ++k)
      r.expect(f.f1(h.act(b, k)) == g.act(f.f1(b), f.f0(k)), "respects action", {b, k});
  return r;
}

inline ValidationReport validate_gamma_morphism(const GammaCrossedModule& h,
                                                const GammaCrossedModule& g,
                                                const StrictMorphism& f) {
  ValidationReport r = validate_strict_morphism(h.x, g.x, f);
  for (Elem s = 0; s < h.Gam().order(); ++s) {
    for (Elem b = 0; b < h.G1().order(); ++b)
      r.expect(f.f1(h.s1(s, b)) == g.s1(s, f.f1(b)), "degree 1 gamma-equivariant", {s, b});
    for (Elem k = 0; k < h.G0().order(); ++k)
      r.expect(f.f0(h.s0(s, k)) == g.s0(s, f.f0(k)), "degree 0 gamma-equivariant", {s, k});
  }
  return r;
}

inline ValidationReport validate_braided_morphism(const CrossedModule& h, const Braiding& bh,
                                                  const CrossedModule& g, const Braiding& bg,
                                                  const StrictMorphism& f) {
  ValidationReport r = validate_strict_morphism(h, g, f);
  r.subject = "braided " + r.subject;
  for (Elem a = 0; a < h.g0->order(); ++a)
    for (Elem b = 0; b < h.g0->order(); ++b)
      r.expect(f.f1(bh(a, b)) == bg(f.f0(a), f.f0(b)), "preserves bracket", {a, b});
  return r;
}

inline StrictMorphism identity_morphism(const CrossedModule& x) {
  return {identity_hom(x.g1), identity_hom(x.g0)};
}

inline StrictMorphism compose(const StrictMorphism& g, const StrictMorphism& f) {
  return {compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

// ---------------------------------------------------------------- constructions

struct SemidirectXmod {
  CrossedModule x;
  SemidirectResult g0_gamma;  // G0 x| gamma, pairs (g, s) indexed g * |gamma| + s
};

// [(d,1): G1 -> G0 x| gamma] with a^(g,s) = ^{s^-1}(a^g).
inline SemidirectXmod semidirect_xmod(const GammaCrossedModule& gx) {
  auto sd = make_semidirect(gx.x.g0, gx.gamma, gx.act0);
  const std::size_t ng = gx.Gam().order();
  const std::size_t n1 = gx.G1().order();
  GroupHom d{gx.x.g1, sd.group, {}};
  for (Elem a = 0; a < n1; ++a) d.map.push_back(static_cast<Elem>(gx.x.d(a) * ng));
  std::vector<Elem> t(sd.group->order() * n1);
  for (Elem x = 0; x < sd.group->order(); ++x) {
    Elem g = static_cast<Elem>(x / ng), s = static_cast<Elem>(x % ng);
    Elem si = gx.Gam().inv(s);
    for (Elem a = 0; a < n1; ++a) t[x * n1 + a] = gx.s1(si, gx.x.act(a, g));
  }
  GroupAction act{sd.group, gx.x.g1, Side::Right, std::move(t)};
  return {make_xmod(gx.x.g1, sd.group, std::move(d), std::move(act), gx.x.label + "x|gamma"),
          std::move(sd)};
}

struct PullbackResult {
  CrossedModule x;       // [G1 x_{G0} G0' -> G0']
  StrictMorphism proj;   // to the original crossed module
  std::vector<std::pair<Elem, Elem>> pairs;  // index -> (a, g')
};

// G1' = {(a, g') : d a = p g'}, d' = pr2, (a, g')^{h'} = (a^{p h'}, h'^-1 g' h').
inline PullbackResult pullback_xmod(const CrossedModule& x, const GroupHom& p) {
  const auto& G1 = *x.g1;
  const auto& H0 = *p.src;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < G1.order(); ++a)
    for (Elem g = 0; g < H0.order(); ++g)
      if (x.d(a) == p(g)) pairs.emplace_back(a, g);
  const std::size_t n = pairs.size();
  auto index = [&](Elem a, Elem g) -> Elem {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, g));
    return static_cast<Elem>(it - pairs.begin());
  };
  std::vector<Elem> t(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      t[i * n + j] = index(G1.mul(pairs[i].first, pairs[j].first),
                           H0.mul(pairs[i].second, pairs[j].second));
  auto P1 = make_group(G1.label() + "x_" + x.g0->label() + H0.label(), n, std::move(t));
  GroupHom d{P1, p.src, {}}, f1{P1, x.g1, {}};
  for (auto [a, g] : pairs) {
    d.map.push_back(g);
    f1.map.push_back(a);
  }
  std::vector<Elem> at(H0.order() * n);
  for (Elem h = 0; h < H0.order(); ++h)
    for (Elem i = 0; i < n; ++i)
      at[h * n + i] = index(x.act(pairs[i].first, p(h)), H0.conj(pairs[i].second, h));
  GroupAction act{p.src, P1, Side::Right, std::move(at)};
  CrossedModule px = make_xmod(P1, p.src, std::move(d), std::move(act), "pullback(" + x.label + ")");
  return {std::move(px), {std::move(f1), p}, std::move(pairs)};
}

struct GammaPullbackResult {
  GammaCrossedModule x;
  StrictMorphism proj;
};

// Pullback along a gamma-equivariant p: G0' -> G0 with G0' carrying act0_prime.
inline GammaPullbackResult pullback_gamma_xmod(const GammaCrossedModule& gx, const GroupHom& p,
                                               const GroupAction& act0_prime) {
  auto pb = pullback_xmod(gx.x, p);
  const std::size_t n = pb.pairs.size();
  std::vector<Elem> t(gx.Gam().order() * n);
  for (Elem s = 0; s < gx.Gam().order(); ++s)
    for (Elem i = 0; i < n; ++i) {
      auto key = std::make_pair(gx.s1(s, pb.pairs[i].first), act0_prime(s, pb.pairs[i].second));
      auto it = std::lower_bound(pb.pairs.begin(), pb.pairs.end(), key);
      if (it == pb.pairs.end() || *it != key)
        throw PreconditionError("pullback_gamma_xmod: p is not gamma-equivariant");
      t[s * n + i] = static_cast<Elem>(it - pb.pairs.begin());
    }
  GroupAction a1{gx.gamma, pb.x.g1, Side::Left, std::move(t)};
  return {{pb.x, gx.gamma, std::move(a1), act0_prime}, pb.proj};
}

// Pullback along pr1: G0 x Z/2 -> G0, gamma acting on the first factor. An equivalence.
inline GammaPullbackResult double_pullback(const GammaCrossedModule& gx) {
  auto prod = direct_product(gx.x.g0, make_cyclic(2));
  const std::size_t n = prod.group->order();
  std::vector<Elem> t(gx.Gam().order() * n);
  for (Elem s = 0; s < gx.Gam().order(); ++s)
    for (Elem x = 0; x < n; ++x) t[s * n + x] = static_cast<Elem>(gx.s0(s, x / 2) * 2 + x % 2);
  return pullback_gamma_xmod(gx, prod.pr1, {gx.gamma, prod.group, Side::Left, std::move(t)});
}

// {g', h'} = ({p g', p h'}, [g', h']) on a pullback.
inline Braiding pullback_braiding(const GammaPullbackResult& pb, const Braiding& br) {
  const auto& H0 = pb.x.G0();
  const auto& P1 = pb.x.G1();
  const std::size_t n0 = H0.order();
  Braiding out{n0, std::vector<Elem>(n0 * n0, kNone)};
  for (Elem g = 0; g < n0; ++g)
    for (Elem h = 0; h < n0; ++h) {
      Elem a = br(pb.proj.f0(g), pb.proj.f0(h)), c = H0.commutator(g, h);
      for (Elem i = 0; i < P1.order(); ++i)
        if (pb.proj.f1(i) == a && pb.x.x.d(i) == c) out.table[g * n0 + h] = i;
    }
  return out;
}

// ker d and coker d with the induced maps of a strict morphism.
inline ValidationReport is_equivalence(const CrossedModule& h, const CrossedModule& g,
                                       const StrictMorphism& f) {
  ValidationReport r;
  r.subject = "equivalence " + h.label + " -> " + g.label;
  auto kh = kernel(h.boundary), kg = kernel(g.boundary);
  std::vector<Elem> kmap;
  for (Elem a : kh) kmap.push_back(f.f1(a));
  std::vector<Elem> pos(g.g1->order(), ~Elem{0});
  for (Elem i = 0; i < kg.size(); ++i) pos[kg[i]] = i;
  std::vector<Elem> kidx;
  for (Elem v : kmap) kidx.push_back(pos[v]);
  r.expect(is_bijective(kidx, kg.size()), "induced map on ker d is bijective",
           {static_cast<Elem>(kh.size()), static_cast<Elem>(kg.size())});
  auto qh = quotient(h.g0, image(h.boundary));
  auto qg = quotient(g.g0, image(g.boundary));
  std::vector<Elem> cmap(qh.group->order(), 0);
  for (Elem x = 0; x < h.g0->order(); ++x) {
    Elem c = qh.projection(x);
    Elem v = qg.projection(f.f0(x));
    if (x == qh.reps[c])
      cmap[c] = v;
    else
      r.expect(cmap[c] == v, "induced map on coker d well defined", {x});
  }
  r.expect(is_bijective(cmap, qg.group->order()), "induced map on coker d is bijective",
           {static_cast<Elem>(qh.group->order()), static_cast<Elem>(qg.group->order())});
  return r;
}

struct SurjectifyResult {
  GammaCrossedModule h_prime;  // [H1 x G1 -> H0 x| G1]
  StrictMorphism p;            // H' -> H
  StrictMorphism f_prime;      // H' -> G, surjective in both degrees
  StrictMorphism section;      // H -> H' with P S = id, F' S = F
};

// Replace F: H -> G by a span H <- H' -> G whose right leg is surjective.
// H0 x| G1 has (h, c)(h', c') = (hh', c^{F0 h'} c'), indexed h * |G1| + c.
inline SurjectifyResult surjectify(const GammaCrossedModule& H, const GammaCrossedModule& G,
                                   const StrictMorphism& F) {
  const auto& H1 = H.G1();
  const auto& H0 = H.G0();
  const auto& G1 = G.G1();
  const std::size_t n1 = H1.order(), m1 = G1.order(), n0 = H0.order();
  auto prod = direct_product(H.x.g1, G.x.g1);  // (b, a) -> b * |G1| + a
  std::vector<Elem> t((n0 * m1) * (n0 * m1));
  for (Elem x = 0; x < n0 * m1; ++x)
    for (Elem y = 0; y < n0 * m1; ++y) {
      Elem h = x / m1, c = x % m1, h2 = y / m1, c2 = y % m1;
      t[x * n0 * m1 + y] =
          static_cast<Elem>(H0.mul(h, h2) * m1 + G1.mul(G.x.act(c, F.f0(h2)), c2));
    }
  auto E0 = make_group(H0.label() + "x|" + G1.label(), n0 * m1, std::move(t));
  GroupHom d{prod.group, E0, {}};
  for (Elem x = 0; x < n1 * m1; ++x) {
    Elem b = x / m1, a = x % m1;
    d.map.push_back(static_cast<Elem>(H.x.d(b) * m1 + G1.mul(F.f1(H1.inv(b)), a)));
  }
  std::vector<Elem> at(E0->order() * prod.group->order());
  for (Elem y = 0; y < E0->order(); ++y) {
    Elem h = y / m1, c = y % m1;
    for (Elem x = 0; x < n1 * m1; ++x) {
      Elem b = x / m1, a = x % m1;
      at[y * n1 * m1 + x] =
          static_cast<Elem>(H.x.act(b, h) * m1 + G1.conj(G.x.act(a, F.f0(h)), c));
    }
  }
  GroupAction act{E0, prod.group, Side::Right, std::move(at)};
  CrossedModule xp = make_xmod(prod.group, E0, std::move(d), std::move(act), "surj(" + H.x.label + ")");
  const std::size_t ng = H.Gam().order();
  std::vector<Elem> a1(ng * n1 * m1), a0(ng * n0 * m1);
  for (Elem s = 0; s < ng; ++s) {
    for (Elem x = 0; x < n1 * m1; ++x)
      a1[s * n1 * m1 + x] = static_cast<Elem>(H.s1(s, x / m1) * m1 + G.s1(s, x % m1));
    for (Elem y = 0; y < n0 * m1; ++y)
      a0[s * n0 * m1 + y] = static_cast<Elem>(H.s0(s, y / m1) * m1 + G.s1(s, y % m1));
  }
  GammaCrossedModule hp{xp, H.gamma, {H.gamma, prod.group, Side::Left, std::move(a1)},
                        {H.gamma, E0, Side::Left, std::move(a0)}};
  StrictMorphism P{{prod.group, H.x.g1, {}}, {E0, H.x.g0, {}}};
  StrictMorphism Fp{{prod.group, G.x.g1, {}}, {E0, G.x.g0, {}}};
  for (Elem x = 0; x < n1 * m1; ++x) {
    P.f1.map.push_back(x / m1);
    Fp.f1.map.push_back(x % m1);
  }
  for (Elem y = 0; y < n0 * m1; ++y) {
    P.f0.map.push_back(y / m1);
    Fp.f0.map.push_back(G.G0().mul(F.f0(y / m1), G.x.d(y % m1)));
  }
  StrictMorphism S{{H.x.g1, prod.group, {}}, {H.x.g0, E0, {}}};
  for (Elem b = 0; b < n1; ++b) S.f1.map.push_back(static_cast<Elem>(b * m1 + F.f1(b)));
  for (Elem h = 0; h < n0; ++h) S.f0.map.push_back(static_cast<Elem>(h * m1));
  return {std::move(hp), std::move(P), std::move(Fp), std::move(S)};
}

// Product crossed module with diagonal gamma action; pairs indexed as in direct_product.
struct ProductXmod {
  GammaCrossedModule x;
  ProductResult p1, p0;
};

inline ProductXmod product_xmod(const GammaCrossedModule& a, const GammaCrossedModule& b) {
  auto p1 = direct_product(a.x.g1, b.x.g1);
  auto p0 = direct_product(a.x.g0, b.x.g0);
  const std::size_t m1 = b.G1().order(), m0 = b.G0().order();
  GroupHom d{p1.group, p0.group, {}};
  for (Elem x = 0; x < p1.group->order(); ++x)
    d.map.push_back(static_cast<Elem>(a.x.d(x / m1) * m0 + b.x.d(x % m1)));
  std::vector<Elem> at(p0.group->order() * p1.group->order());
  for (Elem g = 0; g < p0.group->order(); ++g)
    for (Elem x = 0; x < p1.group->order(); ++x)
      at[g * p1.group->order() + x] =
          static_cast<Elem>(a.x.act(x / m1, g / m0) * m1 + b.x.act(x % m1, g % m0));
  const std::size_t ng = a.Gam().order();
  std::vector<Elem> s1(ng * p1.group->order()), s0(ng * p0.group->order());
  for (Elem s = 0; s < ng; ++s) {
    for (Elem x = 0; x < p1.group->order(); ++x)
      s1[s * p1.group->order() + x] = static_cast<Elem>(a.s1(s, x / m1) * m1 + b.s1(s, x % m1));
    for (Elem g = 0; g < p0.group->order(); ++g)
      s0[s * p0.group->order() + g] = static_cast<Elem>(a.s0(s, g / m0) * m0 + b.s0(s, g % m0));
  }
  CrossedModule x = make_xmod(p1.group, p0.group, std::move(d),
                              {p0.group, p1.group, Side::Right, std::move(at)},
                              a.x.label + "x" + b.x.label);
  GammaCrossedModule gx{std::move(x), a.gamma, {a.gamma, p1.group, Side::Left, std::move(s1)},
                        {a.gamma, p0.group, Side::Left, std::move(s0)}};
  return {std::move(gx), std::move(p1), std::move(p0)};
}

inline Braiding product_braiding(const ProductXmod& p, const Braiding& ba, const Braiding& bb,
                                 std::size_t b_g0, std::size_t b_g1) {
  const std::size_t n = p.p0.group->order();
  Braiding br{n, std::vector<Elem>(n * n)};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      br.table[x * n + y] = static_cast<Elem>(ba(x / b_g0, y / b_g0) * b_g1 + bb(x % b_g0, y % b_g0));
  return br;
}

}  // namespace xcoh
