#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cochain.hpp"

namespace xcoh {

// Canonical representatives, basepoint first; table present when a group law is known.
struct CohomologySet {
  int degree = 0;
  std::vector<std::vector<Elem>> elements;
  std::optional<std::vector<Elem>> table;
  bool abelian = false;

  std::size_t size() const { return elements.size(); }
  Elem mul(Elem a, Elem b) const { return (*table)[a * size() + b]; }
  GroupPtr as_group(std::string label) const {
    if (!table) throw PreconditionError("cohomology set carries no group law");
    return make_group(std::move(label), size(), *table);
  }
};

inline bool table_is_abelian(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (t[a * n + b] != t[b * n + a]) return false;
  return true;
}

// ---------------------------------------------------------------- H^-1

inline CohomologySet h_minus1(const Cochains& ch) {
  const auto& gx = ch.gx();
  ElementSet fixed;
  for (Elem a : kernel(gx.x.boundary)) {
    bool f = true;
    for (Elem s = 0; s < ch.ng() && f; ++s) f = gx.s1(s, a) == a;
    if (f) fixed.push_back(a);
  }
  auto sub = subgroup_of(gx.x.g1, fixed, "H-1");
  CohomologySet h;
  h.degree = -1;
  for (Elem a : fixed) h.elements.push_back({a});
  h.table = sub.group->table();
  h.abelian = sub.group->is_abelian();
  return h;
}

// ---------------------------------------------------------------- H^0

struct H0Data {
  std::vector<Cochain0> z0, b0;
  std::map<Cochain0, Elem> index;
  std::vector<Elem> cls;   // z0 index -> class
  std::vector<Elem> reps;  // class -> z0 index
  CohomologySet set;

  Elem class_of(const Cochain0& a) const {
    auto it = index.find(a);
    return it == index.end() ? kNone : cls[it->second];
  }
};

inline H0Data h_zero(const Cochains& ch) {
  H0Data h;
  h.z0 = ch.enumerate_z0();
  h.b0 = ch.enumerate_b0();
  for (Elem i = 0; i < h.z0.size(); ++i) h.index[h.z0[i]] = i;
  h.cls.assign(h.z0.size(), kNone);
  for (const auto& b : h.b0)
    if (!h.index.count(b)) throw PreconditionError("B0 is not contained in Z0");
  for (Elem i = 0; i < h.z0.size(); ++i) {
    if (h.cls[i] != kNone) continue;
    Elem c = static_cast<Elem>(h.reps.size());
    h.reps.push_back(i);
    for (const auto& b : h.b0) h.cls[h.index.at(ch.c0_mul(h.z0[i], b))] = c;
  }
  const std::size_t n = h.reps.size();
  h.set.degree = 0;
  for (Elem r : h.reps) h.set.elements.push_back(flatten(h.z0[r]));
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = h.class_of(ch.c0_mul(h.z0[h.reps[a]], h.z0[h.reps[b]]));
  h.set.abelian = table_is_abelian(t, n);
  h.set.table = std::move(t);
  return h;
}

// ---------------------------------------------------------------- H^1

struct H1Data {
  std::vector<Cochain1> z1;
  std::map<Cochain1, Elem> index;
  std::vector<Elem> cls;
  std::vector<Elem> reps;
  CohomologySet set;
  std::string note;

  Elem class_of(const Cochain1& c) const {
    auto it = index.find(c);
    return it == index.end() ? kNone : cls[it->second];
  }
  Elem index_of(const Cochain1& c) const {
    auto it = index.find(c);
    return it == index.end() ? kNone : it->second;
  }
};

// Orbits of Z1 under C0. With a braiding the orbit set also gets the group law
// induced by the product on Z1.
inline H1Data h_one(const Cochains& ch) {
  H1Data h;
  h.z1 = ch.enumerate_z1();
  for (Elem i = 0; i < h.z1.size(); ++i) h.index[h.z1[i]] = i;
  h.cls.assign(h.z1.size(), kNone);
  auto gens = ch.c0_generators();
  for (Elem i = 0; i < h.z1.size(); ++i) {
    if (h.cls[i] != kNone) continue;
    Elem c = static_cast<Elem>(h.reps.size());
    h.reps.push_back(i);
    std::vector<Elem> queue{i};
    h.cls[i] = c;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& a : gens) {
        Elem j = h.index_of(ch.act(h.z1[queue[q]], a));
        if (j == kNone) throw PreconditionError("C0 action leaves Z1");
        if (h.cls[j] == kNone) {
          h.cls[j] = c;
          queue.push_back(j);
        }
      }
  }
  h.set.degree = 1;
  for (Elem r : h.reps) h.set.elements.push_back(flatten(h.z1[r]));
  if (ch.braiding()) {
    const std::size_t n = h.reps.size();
    std::vector<Elem> t(n * n);
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b) {
        Elem c = h.class_of(ch.c1_mul(h.z1[h.reps[a]], h.z1[h.reps[b]]));
        if (c == kNone) closed = false;
        t[a * n + b] = c;
      }
    if (closed) {
      h.set.abelian = table_is_abelian(t, n);
      h.set.table = std::move(t);
    } else {
      h.note = "product of cocycles left Z1; no group law on H1";
    }
  }
  return h;
}

struct Cohomology {
  CohomologySet hm1;
  H0Data h0;
  H1Data h1;
};

inline Cohomology compute_cohomology(const Cochains& ch) {
  return {h_minus1(ch), h_zero(ch), h_one(ch)};
}

// ---------------------------------------------------------------- checks

// Right action law and unit on every (c, a, b).
inline ValidationReport verify_action(const Cochains& ch, const H1Data& h1) {
  ValidationReport r;
  r.subject = "C0 action on Z1";
  const std::uint64_t n = ch.c0_size();
  std::vector<Cochain0> c0;
  for (std::uint64_t i = 0; i < n; ++i) c0.push_back(ch.c0_decode(i));
  for (Elem i = 0; i < h1.z1.size(); ++i) {
    const auto& c = h1.z1[i];
    r.expect(ch.act(c, ch.c0_identity()) == c, "unit acts trivially", {i});
    for (Elem a = 0; a < n; ++a) {
      auto ca = ch.act(c, c0[a]);
      if (!r.expect(h1.index.count(ca) > 0, "action preserves Z1", {i, a})) continue;
      for (Elem b = 0; b < n; ++b)
        r.expect(ch.act(ca, c0[b]) == ch.act(c, ch.c0_mul(c0[a], c0[b])), "right action law",
                 {i, a, b});
    }
  }
  return r;
}

// Orbit of c equals the coset c.im(d): (p,e)^(g,t) = (p,e) d(g, t delta(p,g)).
inline ValidationReport verify_coincide(const Cochains& ch, const H1Data& h1) {
  ValidationReport r;
  r.subject = "orbits coincide with cosets of im d";
  const std::uint64_t n = ch.c0_size();
  for (Elem i = 0; i < h1.z1.size(); ++i) {
    const auto& c = h1.z1[i];
    for (Elem a = 0; a < n; ++a) {
      Cochain0 x = ch.c0_decode(a);
      auto del = ch.delta(c, x.g);
      Cochain0 y = x;
      for (Elem s = 0; s < ch.ng(); ++s) y.theta[s] = ch.G1().mul(x.theta[s], del[s]);
      r.expect(ch.act(c, x) == ch.c1_mul(c, ch.d1(y)), "coincide", {i, a});
    }
  }
  return r;
}

// Group axioms of the product on Z1, and well-definedness of the induced law on H1.
inline ValidationReport verify_z1_group(const Cochains& ch, const H1Data& h1) {
  ValidationReport r;
  r.subject = "group law on Z1 and H1";
  const Elem n = static_cast<Elem>(h1.z1.size());
  std::vector<Elem> t(std::size_t(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      t[a * n + b] = h1.index_of(ch.c1_mul(h1.z1[a], h1.z1[b]));
      r.expect(t[a * n + b] != kNone, "closure", {a, b});
    }
  if (!r.ok()) return r;
  for (Elem a = 0; a < n; ++a) {
    r.expect(ch.c1_mul(h1.z1[a], ch.c1_inv(h1.z1[a])) == ch.c1_identity(), "right inverse", {a});
    r.expect(ch.c1_mul(ch.c1_inv(h1.z1[a]), h1.z1[a]) == ch.c1_identity(), "left inverse", {a});
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        r.expect(t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]], "associativity", {a, b, c});
  }
  if (h1.set.table)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        r.expect(h1.cls[t[a * n + b]] == h1.set.mul(h1.cls[a], h1.cls[b]),
                 "H1 law independent of representatives", {a, b});
  return r;
}

// Associativity and inverses of a product on C0 given by encoded elements.
template <class Mul>
ValidationReport verify_c0_product(const Cochains& ch, Mul&& mul, const char* name) {
  ValidationReport r;
  r.subject = std::string("C0 ") + name + " product";
  const std::uint64_t n = ch.c0_size();
  std::vector<std::uint64_t> t(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) t[a * n + b] = ch.c0_encode(mul(ch.c0_decode(a), ch.c0_decode(b)));
  for (std::uint64_t a = 0; a < n; ++a) {
    bool has_inv = false;
    for (std::uint64_t b = 0; b < n; ++b) {
      if (t[a * n + b] == 0 && t[b * n + a] == 0) has_inv = true;
      for (std::uint64_t c = 0; c < n; ++c)
        r.expect(t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]], "associativity",
                 {Elem(a), Elem(b), Elem(c)});
    }
    r.expect(t[a] == a && t[a * n] == a, "identity", {Elem(a)});
    r.expect(has_inv, "inverse", {Elem(a)});
  }
  return r;
}

// In Z0: [(g,t),(g',t')] = (d mu, theta_mu) with mu = {g,g'}.
inline ValidationReport verify_commutator_lemma(const Cochains& ch, const H0Data& h0) {
  ValidationReport r;
  r.subject = "commutator lemma in Z0";
  const auto& br = ch.bracket();
  for (Elem i = 0; i < h0.z0.size(); ++i)
    for (Elem j = 0; j < h0.z0.size(); ++j) {
      const auto& a = h0.z0[i];
      const auto& b = h0.z0[j];
      auto comm = ch.c0_mul(ch.c0_mul(ch.c0_inv(a), ch.c0_inv(b)), ch.c0_mul(a, b));
      r.expect(comm == ch.boundary0(br(a.g, b.g)), "commutator", {i, j});
    }
  return r;
}

// ---------------------------------------------------------------- crossed modules

struct BraidedXmod {
  CrossedModule x;
  Braiding br;
  ValidationReport well_defined;
};

// [G1 -> Z0], mu -> (d mu, theta_mu), mu^(g,t) = mu^g, {(g,t),(g',t')} = {g,g'}.
inline BraidedXmod z0_crossed_module(const Cochains& ch, const H0Data& h0) {
  const std::size_t n = h0.z0.size();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = h0.index.at(ch.c0_mul(h0.z0[a], h0.z0[b]));
  auto Z0 = make_group("Z0", n, std::move(t));
  GroupHom d{ch.gx().x.g1, Z0, {}};
  for (Elem mu = 0; mu < ch.G1().order(); ++mu) d.map.push_back(h0.index.at(ch.boundary0(mu)));
  const std::size_t m = ch.G1().order();
  std::vector<Elem> at(n * m);
  for (Elem z = 0; z < n; ++z)
    for (Elem mu = 0; mu < m; ++mu) at[z * m + mu] = ch.act(mu, h0.z0[z].g);
  BraidedXmod r{make_xmod(ch.gx().x.g1, Z0, std::move(d), {Z0, ch.gx().x.g1, Side::Right, std::move(at)},
                          "[G1->Z0]"),
                {n, std::vector<Elem>(n * n, 0)},
                {}};
  r.well_defined.subject = "z0 crossed module data";
  if (ch.braiding())
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) r.br.table[a * n + b] = ch.bracket()(h0.z0[a].g, h0.z0[b].g);
  return r;
}

struct H1CrossedModule {
  BraidedXmod bx;                        // [C0/B0 -> Z1]
  std::vector<std::uint64_t> coset_rep;  // class -> C0 code
  std::vector<Elem> coset_of;            // C0 code -> class
};

// [C0/B0 -> Z1] with the braided product on C0 and the symmetric bracket on Z1.
inline H1CrossedModule build_h1_crossed_module(const Cochains& ch, const H0Data& h0,
                                               const H1Data& h1) {
  H1CrossedModule out;
  auto& wd = out.bx.well_defined;
  wd.subject = "[C0/B0 -> Z1] well defined";
  const std::uint64_t n = ch.c0_size();
  std::vector<std::uint64_t> b0;
  for (const auto& b : h0.b0) b0.push_back(ch.c0_encode(b));
  out.coset_of.assign(n, kNone);
  for (std::uint64_t a = 0; a < n; ++a) {
    if (out.coset_of[a] != kNone) continue;
    Elem c = static_cast<Elem>(out.coset_rep.size());
    out.coset_rep.push_back(a);
    Cochain0 x = ch.c0_decode(a);
    for (auto b : b0) {
      auto y = ch.c0_encode(ch.c0_mul_braided(x, ch.c0_decode(b)));
      if (out.coset_of[y] != kNone && out.coset_of[y] != c)
        wd.fail("cosets of B0 partition C0", {Elem(a), Elem(b)});
      out.coset_of[y] = c;
    }
  }
  // normality: left cosets equal right cosets
  for (std::uint64_t a = 0; a < n; ++a)
    for (auto b : b0)
      wd.expect(out.coset_of[ch.c0_encode(ch.c0_mul_braided(ch.c0_decode(b), ch.c0_decode(a)))] ==
                    out.coset_of[a],
                "B0 normal in C0", {Elem(a), Elem(b)});
  const std::size_t q = out.coset_rep.size();
  std::vector<Elem> qt(q * q);
  for (Elem i = 0; i < q; ++i)
    for (Elem j = 0; j < q; ++j)
      qt[i * q + j] = out.coset_of[ch.c0_encode(
          ch.c0_mul_braided(ch.c0_decode(out.coset_rep[i]), ch.c0_decode(out.coset_rep[j])))];
  auto Q = make_group("C0/B0", q, std::move(qt));
  const std::size_t m = h1.z1.size();
  std::vector<Elem> zt(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      Elem v = h1.index_of(ch.c1_mul(h1.z1[a], h1.z1[b]));
      if (v == kNone) throw PreconditionError("product of cocycles left Z1");
      zt[a * m + b] = v;
    }
  auto Z1 = make_group("Z1", m, std::move(zt));
  GroupHom d{Q, Z1, {}};
  for (Elem i = 0; i < q; ++i) d.map.push_back(h1.index_of(ch.d1(ch.c0_decode(out.coset_rep[i]))));
  for (std::uint64_t a = 0; a < n; ++a)
    wd.expect(h1.index_of(ch.d1(ch.c0_decode(a))) == d.map[out.coset_of[a]],
              "d constant on cosets", {Elem(a)});
  std::vector<Elem> at(m * q);
  for (Elem z = 0; z < m; ++z)
    for (Elem i = 0; i < q; ++i)
      at[z * q + i] = out.coset_of[ch.c0_encode(ch.act_on_c0(ch.c0_decode(out.coset_rep[i]), h1.z1[z]))];
  for (Elem z = 0; z < m; ++z)
    for (std::uint64_t a = 0; a < n; ++a)
      wd.expect(out.coset_of[ch.c0_encode(ch.act_on_c0(ch.c0_decode(a), h1.z1[z]))] ==
                    at[z * q + out.coset_of[a]],
                "Z1 action constant on cosets", {z, Elem(a)});
  Braiding br{m, std::vector<Elem>(m * m)};
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      br.table[a * m + b] = out.coset_of[ch.c0_encode(ch.z1_bracket(h1.z1[a], h1.z1[b]))];
  out.bx.x = make_xmod(Q, Z1, std::move(d), {Z1, Q, Side::Right, std::move(at)}, "[C0/B0->Z1]");
  out.bx.br = std::move(br);
  return out;
}

}  // namespace xcoh
