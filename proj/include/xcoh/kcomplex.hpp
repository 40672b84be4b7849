#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "cohomology.hpp"

namespace xcoh {

// Crossed module in groupoids over the action groupoid Z1 x C0 => Z1. Objects are
// Z1 indices, arrow labels are C0 codes; every fiber group is G1.
struct CrossedModuleInGroupoids {
  std::size_t n_objects = 0;
  std::size_t n_labels = 0;
  GroupPtr fiber;
  std::vector<Elem> target;                // object * n_labels + label
  std::vector<std::uint64_t> label_mul;    // label * n_labels + label
  std::vector<std::uint64_t> boundary;     // object * |fiber| + mu -> label of the loop d_c(mu)
  std::vector<Elem> transport;             // label * |fiber| + mu
  std::vector<std::vector<Elem>> object_key;  // flattened cocycle per object
  std::vector<std::vector<Elem>> label_key;   // flattened cochain per label

  Elem arrow_target(Elem obj, std::uint64_t label) const { return target[obj * n_labels + label]; }
  std::uint64_t compose(std::uint64_t a, std::uint64_t b) const { return label_mul[a * n_labels + b]; }
  std::uint64_t d(Elem obj, Elem mu) const { return boundary[obj * fiber->order() + mu]; }
  Elem move(std::uint64_t label, Elem mu) const { return transport[label * fiber->order() + mu]; }
};

// (d mu, s -> (mu^-1)^{p(s)} ^s mu); equals (d mu, theta_mu) when p is trivial.
inline Cochain0 loop_at(const Cochains& ch, const Cochain1& c, Elem mu) {
  const auto& G1 = ch.G1();
  Cochain0 r{ch.d(mu), std::vector<Elem>(ch.ng())};
  for (Elem s = 0; s < ch.ng(); ++s) r.theta[s] = G1.mul(ch.act(G1.inv(mu), c.p[s]), ch.s1(s, mu));
  return r;
}

inline CrossedModuleInGroupoids build_k1(const Cochains& ch, const H1Data& h1) {
  CrossedModuleInGroupoids k;
  const std::uint64_t n = ch.c0_size();
  const std::size_t m = h1.z1.size();
  if (static_cast<long double>(n) * std::max<std::size_t>(m, n) > ch.budget())
    throw BudgetError("crossed module in groupoids exceeds budget");
  k.n_objects = m;
  k.n_labels = n;
  k.fiber = ch.gx().x.g1;
  std::vector<Cochain0> c0(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    c0[a] = ch.c0_decode(a);
    k.label_key.push_back(flatten(c0[a]));
  }
  for (const auto& c : h1.z1) k.object_key.push_back(flatten(c));
  k.target.resize(m * n);
  for (Elem o = 0; o < m; ++o)
    for (std::uint64_t a = 0; a < n; ++a) {
      Elem t = h1.index_of(ch.act(h1.z1[o], c0[a]));
      if (t == kNone) throw PreconditionError("C0 action leaves Z1");
      k.target[o * n + a] = t;
    }
  k.label_mul.resize(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) k.label_mul[a * n + b] = ch.c0_encode(ch.c0_mul(c0[a], c0[b]));
  const std::size_t g1 = ch.G1().order();
  for (Elem o = 0; o < m; ++o)
    for (Elem mu = 0; mu < g1; ++mu) k.boundary.push_back(ch.c0_encode(loop_at(ch, h1.z1[o], mu)));
  k.transport.resize(n * g1);
  for (std::uint64_t a = 0; a < n; ++a)
    for (Elem mu = 0; mu < g1; ++mu) k.transport[a * g1 + mu] = ch.act(mu, c0[a].g);
  return k;
}

inline std::uint64_t label_inverse(const CrossedModuleInGroupoids& k, std::uint64_t a) {
  for (std::uint64_t b = 0; b < k.n_labels; ++b)
    if (k.compose(a, b) == 0) return b;
  throw PreconditionError("label without inverse");
}

inline ValidationReport validate_cmg(const CrossedModuleInGroupoids& k) {
  ValidationReport r;
  r.subject = "crossed module in groupoids";
  const auto& G = *k.fiber;
  const Elem n = static_cast<Elem>(k.n_labels);
  for (Elem o = 0; o < k.n_objects; ++o) {
    r.expect(k.arrow_target(o, 0) == o, "identity arrow", {o});
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        r.expect(k.arrow_target(k.arrow_target(o, a), b) == k.arrow_target(o, k.compose(a, b)),
                 "arrow composition", {o, a, b});
    for (Elem mu = 0; mu < G.order(); ++mu) {
      r.expect(k.arrow_target(o, k.d(o, mu)) == o, "boundary is a loop", {o, mu});
      for (Elem nu = 0; nu < G.order(); ++nu) {
        r.expect(k.d(o, G.mul(mu, nu)) == k.compose(k.d(o, mu), k.d(o, nu)),
                 "boundary multiplicative", {o, mu, nu});
        r.expect(k.move(k.d(o, nu), mu) == G.conj(mu, nu), "peiffer", {o, mu, nu});
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    std::uint64_t ai = label_inverse(k, a);
    for (Elem o = 0; o < k.n_objects; ++o) {
      Elem t = k.arrow_target(o, a);
      for (Elem mu = 0; mu < G.order(); ++mu)
        r.expect(k.d(t, k.move(a, mu)) == k.compose(k.compose(ai, k.d(o, mu)), a),
                 "boundary equivariant", {o, a, mu});
    }
    for (Elem mu = 0; mu < G.order(); ++mu) {
      for (Elem nu = 0; nu < G.order(); ++nu)
        r.expect(k.move(a, G.mul(mu, nu)) == G.mul(k.move(a, mu), k.move(a, nu)),
                 "transport multiplicative", {a, mu, nu});
      for (Elem b = 0; b < n; ++b)
        r.expect(k.move(k.compose(a, b), mu) == k.move(b, k.move(a, mu)), "transport functorial",
                 {a, b, mu});
    }
  }
  return r;
}

struct CmgCohomology {
  CohomologySet h1, h0, hm1;
  std::vector<Elem> component;  // object -> component
};

// Components, and coker / ker of the automorphism crossed module at the basepoint.
inline CmgCohomology cohomology_of_cmg(const CrossedModuleInGroupoids& k, Elem base = 0) {
  CmgCohomology out;
  std::vector<Elem> parent(k.n_objects);
  std::iota(parent.begin(), parent.end(), Elem{0});
  std::function<Elem(Elem)> find = [&](Elem x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Elem o = 0; o < k.n_objects; ++o)
    for (std::uint64_t a = 0; a < k.n_labels; ++a) {
      Elem x = find(o), y = find(k.arrow_target(o, a));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  out.component.assign(k.n_objects, kNone);
  out.h1.degree = 1;
  for (Elem o = 0; o < k.n_objects; ++o) {
    Elem root = find(o);
    if (root == o) {
      out.component[o] = static_cast<Elem>(out.h1.elements.size());
      out.h1.elements.push_back(k.object_key[o]);
    }
    out.component[o] = out.component[root];
  }
  // automorphism group of the basepoint
  std::vector<std::uint64_t> aut;
  for (std::uint64_t a = 0; a < k.n_labels; ++a)
    if (k.arrow_target(base, a) == base) aut.push_back(a);
  std::vector<Elem> pos(k.n_labels, kNone);
  for (Elem i = 0; i < aut.size(); ++i) pos[aut[i]] = i;
  const std::size_t na = aut.size();
  std::vector<Elem> t(na * na);
  for (Elem i = 0; i < na; ++i)
    for (Elem j = 0; j < na; ++j) t[i * na + j] = pos[k.compose(aut[i], aut[j])];
  auto A = make_group("Aut(base)", na, std::move(t));
  ElementSet im;
  for (Elem mu = 0; mu < k.fiber->order(); ++mu) im.push_back(pos[k.d(base, mu)]);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  auto q = quotient(A, im, "coker");
  out.h0.degree = 0;
  for (Elem r : q.reps) out.h0.elements.push_back(k.label_key[aut[r]]);
  out.h0.table = q.group->table();
  out.h0.abelian = q.group->is_abelian();
  ElementSet ker;
  for (Elem mu = 0; mu < k.fiber->order(); ++mu)
    if (k.d(base, mu) == 0) ker.push_back(mu);
  auto ks = subgroup_of(k.fiber, ker, "ker");
  out.hm1.degree = -1;
  for (Elem mu : ker) out.hm1.elements.push_back({mu});
  out.hm1.table = ks.group->table();
  out.hm1.abelian = ks.group->is_abelian();
  return out;
}

// ---------------------------------------------------------------- 2-crossed modules

// [L -> M -> N]; N acts on M and L, M acts on L, all from the right.
struct TwoCrossedModule {
  GroupPtr L, M, N;
  GroupHom dLM, dMN;
  GroupAction n_on_m, n_on_l, m_on_l;
  std::vector<Elem> bracket;  // M x M -> L

  Elem br(Elem g, Elem h) const { return bracket[g * M->order() + h]; }
};

inline ValidationReport validate_two_crossed_module(const TwoCrossedModule& c) {
  ValidationReport r;
  r.subject = "2-crossed module";
  const auto& L = *c.L;
  const auto& M = *c.M;
  const auto& N = *c.N;
  r.merge(validate_hom(c.dLM));
  r.merge(validate_hom(c.dMN));
  r.merge(validate_action(c.n_on_m));
  r.merge(validate_action(c.n_on_l));
  r.merge(validate_action(c.m_on_l));
  auto nm = [&](Elem g, Elem x) { return c.n_on_m(x, g); };
  auto nl = [&](Elem a, Elem x) { return c.n_on_l(x, a); };
  auto ml = [&](Elem a, Elem g) { return c.m_on_l(g, a); };
  for (Elem a = 0; a < L.order(); ++a) {
    r.expect(c.dMN(c.dLM(a)) == 0, "d^2 = 1", {a});
    for (Elem x = 0; x < N.order(); ++x)
      r.expect(c.dLM(nl(a, x)) == nm(c.dLM(a), x), "d: L -> M is N-equivariant", {a, x});
  }
  for (Elem g = 0; g < M.order(); ++g)
    for (Elem x = 0; x < N.order(); ++x)
      r.expect(c.dMN(nm(g, x)) == N.conj(c.dMN(g), x), "d: M -> N is N-equivariant", {g, x});
  for (Elem g = 0; g < M.order(); ++g) {
    Elem dg = c.dMN(g);
    for (Elem h = 0; h < M.order(); ++h) {
      r.expect(c.dLM(c.br(g, h)) == M.mul({M.inv(g), M.inv(h), g, nm(h, dg)}),
               "d{g,h} = g^-1 h^-1 g h^(dg)", {g, h});
      for (Elem k = 0; k < M.order(); ++k) {
        r.expect(c.br(g, M.mul(h, k)) == L.mul(c.br(g, k), ml(c.br(g, h), nm(k, dg))),
                 "{g,hk} = {g,k}{g,h}^(k^dg)", {g, h, k});
        r.expect(c.br(M.mul(g, h), k) == L.mul(ml(c.br(g, k), h), c.br(h, nm(k, dg))),
                 "{gh,k} = {g,k}^h {h,k^dg}", {g, h, k});
      }
      for (Elem x = 0; x < N.order(); ++x)
        r.expect(nl(c.br(g, h), x) == c.br(nm(g, x), nm(h, x)), "{g,h}^x = {g^x,h^x}", {g, h, x});
    }
    for (Elem a = 0; a < L.order(); ++a) {
      r.expect(c.br(c.dLM(a), g) == L.mul(L.inv(a), ml(a, g)), "{da,g} = a^-1 a^g", {a, g});
      r.expect(c.br(g, c.dLM(a)) == L.mul(ml(L.inv(a), g), nl(a, dg)),
               "{g,da} = (a^-1)^g a^(dg)", {a, g});
    }
  }
  return r;
}

struct K1Braided {
  TwoCrossedModule tcm;
  std::vector<std::uint64_t> m_code;  // M index -> C0 code (identity map here)
};

// [G1 -> C0 -> Z1]: C0 with the braided product, Z1 acting trivially on G1.
inline K1Braided build_k1_braided(const Cochains& ch, const H1Data& h1) {
  const std::uint64_t n = ch.c0_size();
  const std::size_t m = h1.z1.size();
  const std::size_t g1 = ch.G1().order();
  std::vector<Cochain0> c0(n);
  for (std::uint64_t a = 0; a < n; ++a) c0[a] = ch.c0_decode(a);
  std::vector<Elem> mt(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      mt[a * n + b] = static_cast<Elem>(ch.c0_encode(ch.c0_mul_braided(c0[a], c0[b])));
  auto M = make_group("C0", n, std::move(mt));
  std::vector<Elem> nt(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      Elem v = h1.index_of(ch.c1_mul(h1.z1[a], h1.z1[b]));
      if (v == kNone) throw PreconditionError("product of cocycles left Z1");
      nt[a * m + b] = v;
    }
  auto N = make_group("Z1", m, std::move(nt));
  auto L = ch.gx().x.g1;
  TwoCrossedModule t;
  t.L = L;
  t.M = M;
  t.N = N;
  t.dLM = {L, M, {}};
  for (Elem mu = 0; mu < g1; ++mu) t.dLM.map.push_back(static_cast<Elem>(ch.c0_encode(ch.boundary0(mu))));
  t.dMN = {M, N, {}};
  for (std::uint64_t a = 0; a < n; ++a) {
    Elem v = h1.index_of(ch.d1(c0[a]));
    if (v == kNone) throw PreconditionError("d leaves Z1");
    t.dMN.map.push_back(v);
  }
  std::vector<Elem> nmt(m * n);
  for (Elem x = 0; x < m; ++x)
    for (std::uint64_t a = 0; a < n; ++a)
      nmt[x * n + a] = static_cast<Elem>(ch.c0_encode(ch.act_on_c0(c0[a], h1.z1[x])));
  t.n_on_m = {N, M, Side::Right, std::move(nmt)};
  t.n_on_l = trivial_action(N, L, Side::Right);
  std::vector<Elem> mlt(n * g1);
  for (std::uint64_t a = 0; a < n; ++a)
    for (Elem mu = 0; mu < g1; ++mu) mlt[a * g1 + mu] = ch.act(mu, c0[a].g);
  t.m_on_l = {M, L, Side::Right, std::move(mlt)};
  t.bracket.resize(n * n);
  const auto& br = ch.bracket();
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) t.bracket[a * n + b] = br(c0[a].g, c0[b].g);
  K1Braided out{std::move(t), {}};
  for (std::uint64_t a = 0; a < n; ++a) out.m_code.push_back(a);
  return out;
}

// Hypotheses of the braided 2-crossed-module criterion for [K -> L -> M] with a
// bracket M x M -> L. Here K = G1, L = C0, M = Z1.
inline ValidationReport validate_braided_2cm(const TwoCrossedModule& c,
                                             const std::vector<Elem>& top_bracket) {
  ValidationReport r;
  r.subject = "braided 2-crossed module criterion";
  const auto& K = *c.L;
  const auto& L = *c.M;
  const auto& M = *c.N;
  auto tb = [&](Elem x, Elem y) { return top_bracket[x * M.order() + y]; };
  for (Elem x = 0; x < M.order(); ++x)
    for (Elem a = 0; a < K.order(); ++a)
      r.expect(c.n_on_l(x, a) == a, "M acts trivially on K", {x, a});
  for (Elem g = 0; g < L.order(); ++g)
    for (Elem h = 0; h < L.order(); ++h) {
      r.expect(K.mul(c.br(g, h), c.br(h, g)) == 0, "L bracket symmetric", {g, h});
      Elem comm = L.commutator(g, h);
      r.expect(c.m_on_l(comm, c.br(g, h)) == c.br(g, h), "{g,h}^[g,h] = {g,h}", {g, h});
      // derived bracket (1)(0) is the transpose of (2)(1)
      Elem b10 = c.br(h, g);
      r.expect(K.mul(b10, c.br(g, h)) == 0, "{g,h}_(1)(0) = {g,h}_(2)(1)^-1", {g, h});
    }
  for (Elem x = 0; x < M.order(); ++x)
    for (Elem y = 0; y < M.order(); ++y)
      r.expect(c.dMN(tb(x, y)) == M.commutator(x, y), "d{x,y} = x^-1 y^-1 x y", {x, y});
  for (Elem g = 0; g < L.order(); ++g)
    for (Elem x = 0; x < M.order(); ++x) {
      Elem gx = c.n_on_m(x, g);
      r.expect(tb(c.dMN(g), x) == L.mul(L.inv(g), gx), "{dg,x} = g^-1 g^x", {g, x});
      r.expect(tb(x, c.dMN(g)) == L.mul(c.n_on_m(x, L.inv(g)), g), "{x,dg} = (g^-1)^x g", {g, x});
    }
  return r;
}

// Z1 x Z1 -> C0, (1, {p2, p1}) as C0 codes indexed by Z1 positions.
inline std::vector<Elem> z1_top_bracket(const Cochains& ch, const H1Data& h1) {
  const std::size_t m = h1.z1.size();
  std::vector<Elem> t(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      t[a * m + b] = static_cast<Elem>(ch.c0_encode(ch.z1_bracket(h1.z1[a], h1.z1[b])));
  return t;
}

// ---------------------------------------------------------------- 2-groupoid

// Strict 2-groupoid of a crossed module in groupoids. For f: x -> y a 2-arrow
// f => f d_y(alpha) is alpha in the fiber at y.
struct TwoGroupoid {
  const CrossedModuleInGroupoids* k = nullptr;

  std::uint64_t two_arrow_target(Elem x, std::uint64_t f, Elem alpha) const {
    return k->compose(f, k->d(k->arrow_target(x, f), alpha));
  }
  Elem vertical(Elem alpha, Elem beta) const { return k->fiber->mul(alpha, beta); }
  Elem whisker_right(Elem alpha, std::uint64_t kk) const { return k->move(kk, alpha); }
  Elem whisker_left(std::uint64_t, Elem alpha) const { return alpha; }

  // 2-automorphisms of the identity arrow at x
  std::vector<Elem> identity_two_automorphisms(Elem x) const {
    std::vector<Elem> out;
    for (Elem a = 0; a < k->fiber->order(); ++a)
      if (two_arrow_target(x, 0, a) == 0) out.push_back(a);
    return out;
  }
};

inline TwoGroupoid two_groupoid_of(const CrossedModuleInGroupoids& k,
                                   std::uint64_t budget = kDefaultBudget) {
  const long double cells = static_cast<long double>(k.n_objects) * k.n_labels * k.fiber->order();
  if (cells > budget) throw BudgetError("2-groupoid has too many 2-cells");
  return {&k};
}

inline ValidationReport validate_two_groupoid(const TwoGroupoid& t) {
  ValidationReport r;
  r.subject = "strict 2-groupoid";
  const auto& k = *t.k;
  const auto& G = *k.fiber;
  const Elem n = static_cast<Elem>(k.n_labels);
  for (Elem x = 0; x < k.n_objects; ++x)
    for (Elem f = 0; f < n; ++f) {
      const Elem y = k.arrow_target(x, f);
      r.expect(t.two_arrow_target(x, f, 0) == f, "identity 2-arrow", {x, f});
      for (Elem a = 0; a < G.order(); ++a) {
        std::uint64_t g = t.two_arrow_target(x, f, a);
        r.expect(k.arrow_target(x, g) == y, "2-arrow between parallel arrows", {x, f, a});
        for (Elem b = 0; b < G.order(); ++b)
          r.expect(t.two_arrow_target(x, f, t.vertical(a, b)) == t.two_arrow_target(x, g, b),
                   "vertical composition", {x, f, a, b});
        for (Elem kk = 0; kk < n; ++kk) {
          r.expect(t.two_arrow_target(x, k.compose(f, kk), t.whisker_right(a, kk)) ==
                       k.compose(g, kk),
                   "right whiskering", {x, f, a, kk});
          for (Elem w = 0; w < k.n_objects; ++w)
            if (k.arrow_target(w, kk) == x)
              r.expect(t.two_arrow_target(w, k.compose(kk, f), t.whisker_left(kk, a)) ==
                           k.compose(kk, g),
                       "left whiskering", {w, f, a, kk});
        }
      }
    }
  // interchange: a: f => g (x -> y), c: f' => h' (y -> z); a f' . c = c . a h' at z.
  for (Elem y = 0; y < k.n_objects; ++y)
    for (Elem fp = 0; fp < n; ++fp)
      for (Elem a = 0; a < G.order(); ++a)
        for (Elem c = 0; c < G.order(); ++c) {
          std::uint64_t hp = t.two_arrow_target(y, fp, c);
          r.expect(G.mul(t.whisker_right(a, fp), c) == G.mul(c, t.whisker_right(a, hp)),
                   "interchange law", {y, fp, a, c});
        }
  return r;
}

// ---------------------------------------------------------------- functoriality

struct InducedMaps {
  std::vector<Elem> hm1, h0, h1;  // class index maps
  ValidationReport report;
};

// Cocycle-level map of a strict gamma-equivariant morphism and its effect on H^i.
inline InducedMaps f_star(const Cochains& chH, const Cohomology& coH, const Cochains& chG,
                          const Cohomology& coG, const StrictMorphism& f) {
  InducedMaps out;
  auto& r = out.report;
  r.subject = "induced maps on cohomology";
  const std::size_t ng = chH.ng();
  auto map0 = [&](const Cochain0& a) {
    Cochain0 b{f.f0(a.g), std::vector<Elem>(ng)};
    for (Elem s = 0; s < ng; ++s) b.theta[s] = f.f1(a.theta[s]);
    return b;
  };
  auto map1 = [&](const Cochain1& c) {
    Cochain1 d{std::vector<Elem>(ng), std::vector<Elem>(ng * ng)};
    for (Elem s = 0; s < ng; ++s) d.p[s] = f.f0(c.p[s]);
    for (Elem i = 0; i < ng * ng; ++i) d.eps[i] = f.f1(c.eps[i]);
    return d;
  };
  // H^-1
  for (const auto& e : coH.hm1.elements) {
    Elem v = f.f1(e[0]);
    Elem idx = kNone;
    for (Elem j = 0; j < coG.hm1.size(); ++j)
      if (coG.hm1.elements[j][0] == v) idx = j;
    r.expect(idx != kNone, "H-1 maps into H-1", {e[0]});
    out.hm1.push_back(idx);
  }
  // H^0
  out.h0.assign(coH.h0.set.size(), kNone);
  for (Elem i = 0; i < coH.h0.z0.size(); ++i) {
    Elem c = coH.h0.cls[i];
    Elem v = coG.h0.class_of(map0(coH.h0.z0[i]));
    r.expect(v != kNone, "Z0 maps into Z0", {i});
    if (out.h0[c] == kNone)
      out.h0[c] = v;
    else
      r.expect(out.h0[c] == v, "H0 map well defined", {i});
  }
  // H^1, together with compatibility with the action on cells
  out.h1.assign(coH.h1.set.size(), kNone);
  for (Elem i = 0; i < coH.h1.z1.size(); ++i) {
    Elem c = coH.h1.cls[i];
    auto img = map1(coH.h1.z1[i]);
    Elem v = coG.h1.class_of(img);
    r.expect(v != kNone, "Z1 maps into Z1", {i});
    if (out.h1[c] == kNone)
      out.h1[c] = v;
    else
      r.expect(out.h1[c] == v, "H1 map well defined", {i});
  }
  for (Elem i = 0; i < coH.h1.z1.size(); ++i)
    for (const auto& a : chH.c0_generators())
      r.expect(map1(chH.act(coH.h1.z1[i], a)) == chG.act(map1(coH.h1.z1[i]), map0(a)),
               "commutes with the C0 action", {i});
  for (Elem mu = 0; mu < chH.G1().order(); ++mu)
    r.expect(map0(chH.boundary0(mu)) == chG.boundary0(f.f1(mu)), "commutes with boundary", {mu});
  auto hom_check = [&](const CohomologySet& a, const CohomologySet& b, const std::vector<Elem>& m,
                       const char* what) {
    if (!a.table || !b.table) return;
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        r.expect(m[a.mul(x, y)] == b.mul(m[x], m[y]), what, {x, y});
  };
  if (r.ok()) {
    hom_check(coH.hm1, coG.hm1, out.hm1, "H-1 map is a homomorphism");
    hom_check(coH.h0.set, coG.h0.set, out.h0, "H0 map is a homomorphism");
    hom_check(coH.h1.set, coG.h1.set, out.h1, "H1 map is a homomorphism");
  }
  return out;
}

inline bool induced_bijective(const InducedMaps& m, const Cohomology& coG) {
  return is_bijective(m.hm1, coG.hm1.size()) && is_bijective(m.h0, coG.h0.set.size()) &&
         is_bijective(m.h1, coG.h1.set.size());
}

}  // namespace xcoh
