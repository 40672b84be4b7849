#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"

namespace xcoh {

// Finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string label, std::size_t order, std::vector<Elem> table)
      : label_(std::move(label)), n_(order), mul_(std::move(table)), inv_(order, 0) {
    if (n_ == 0 || mul_.size() != n_ * n_)
      throw InvalidGroupError(label_ + ": table size does not match order");
    for (Elem v : mul_)
      if (v >= n_) throw InvalidGroupError(label_ + ": table entry out of range");
    for (Elem a = 0; a < n_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a)
        throw InvalidGroupError(label_ + ": element 0 is not an identity");
    for (Elem a = 0; a < n_; ++a) {
      bool found = false;
      for (Elem b = 0; b < n_ && !found; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inv_[a] = b;
          found = true;
        }
      if (!found) throw InvalidGroupError(label_ + ": element without inverse");
    }
  }

  const std::string& label() const { return label_; }
  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem mul(std::initializer_list<Elem> xs) const {
    Elem r = 0;
    for (Elem x : xs) r = mul(r, x);
    return r;
  }
  // g^-1 a g
  Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  const std::vector<Elem>& table() const { return mul_; }

  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  std::string label_;
  std::size_t n_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(std::string label, std::size_t order, std::vector<Elem> table) {
  return std::make_shared<const FiniteGroup>(std::move(label), order, std::move(table));
}

// Full associativity scan. The constructor only checks identity and inverses.
inline ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport r;
  r.subject = "group " + g.label();
  const Elem n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        r.expect(g.mul(ab, c) == g.mul(a, g.mul(b, c)), "associativity", {a, b, c});
    }
  return r;
}

struct GroupHom {
  GroupPtr src, dst;
  std::vector<Elem> map;
  Elem operator()(Elem x) const { return map[x]; }
};

inline ValidationReport validate_hom(const GroupHom& f) {
  ValidationReport r;
  r.subject = "hom " + f.src->label() + " -> " + f.dst->label();
  if (f.map.size() != f.src->order()) {
    r.fail("size", {});
    return r;
  }
  const Elem n = static_cast<Elem>(f.src->order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      r.expect(f(f.src->mul(a, b)) == f.dst->mul(f(a), f(b)), "multiplicative", {a, b});
  return r;
}

inline GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elem> m(g->order());
  std::iota(m.begin(), m.end(), Elem{0});
  return {g, g, std::move(m)};
}

inline GroupHom trivial_hom(const GroupPtr& s, const GroupPtr& t) {
  return {s, t, std::vector<Elem>(s->order(), 0)};
}

inline GroupHom compose(const GroupHom& g, const GroupHom& f) {  // g after f
  std::vector<Elem> m(f.src->order());
  for (Elem x = 0; x < m.size(); ++x) m[x] = g(f(x));
  return {f.src, g.dst, std::move(m)};
}

enum class Side { Left, Right };

// table[a * |carrier| + x] is ^a x (left) or x^a (right).
struct GroupAction {
  GroupPtr actor, carrier;
  Side side;
  std::vector<Elem> table;
  Elem operator()(Elem a, Elem x) const { return table[a * carrier->order() + x]; }
};

inline GroupAction trivial_action(const GroupPtr& actor, const GroupPtr& carrier, Side side) {
  std::vector<Elem> t(actor->order() * carrier->order());
  for (Elem a = 0; a < actor->order(); ++a)
    for (Elem x = 0; x < carrier->order(); ++x) t[a * carrier->order() + x] = x;
  return {actor, carrier, side, std::move(t)};
}

// Right conjugation action of a group on itself: x^g = g^-1 x g.
inline GroupAction conjugation_action(const GroupPtr& g) {
  std::vector<Elem> t(g->order() * g->order());
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem x = 0; x < g->order(); ++x) t[a * g->order() + x] = g->conj(x, a);
  return {g, g, Side::Right, std::move(t)};
}

// Right action of the actor on the carrier through a hom into the carrier: x^a = f(a)^-1 x f(a).
inline GroupAction conjugation_through(const GroupHom& f) {
  const auto& c = *f.dst;
  std::vector<Elem> t(f.src->order() * c.order());
  for (Elem a = 0; a < f.src->order(); ++a)
    for (Elem x = 0; x < c.order(); ++x) t[a * c.order() + x] = c.conj(x, f(a));
  return {f.src, f.dst, Side::Right, std::move(t)};
}

// Left action of a cyclic group generated by 1 through the automorphism phi.
inline GroupAction cyclic_action(const GroupPtr& cyclic, const GroupPtr& carrier,
                                 const std::vector<Elem>& phi, Side side = Side::Left) {
  const std::size_t m = carrier->order();
  std::vector<Elem> t(cyclic->order() * m);
  for (Elem x = 0; x < m; ++x) t[x] = x;
  // element k of a cyclic group built by make_cyclic is the k-th power of 1
  for (Elem k = 1; k < cyclic->order(); ++k)
    for (Elem x = 0; x < m; ++x) t[k * m + x] = phi[t[(k - 1) * m + x]];
  for (Elem x = 0; x < m; ++x)
    if (phi[t[(cyclic->order() - 1) * m + x]] != x)
      throw PreconditionError("cyclic_action: automorphism order does not divide group order");
  return {cyclic, carrier, side, std::move(t)};
}

inline ValidationReport validate_action(const GroupAction& act) {
  ValidationReport r;
  r.subject = "action of " + act.actor->label() + " on " + act.carrier->label();
  const auto& A = *act.actor;
  const auto& X = *act.carrier;
  if (act.table.size() != A.order() * X.order()) {
    r.fail("size", {});
    return r;
  }
  for (Elem x = 0; x < X.order(); ++x) r.expect(act(0, x) == x, "unit acts trivially", {x});
  for (Elem a = 0; a < A.order(); ++a)
    for (Elem x = 0; x < X.order(); ++x)
      for (Elem y = 0; y < X.order(); ++y)
        r.expect(act(a, X.mul(x, y)) == X.mul(act(a, x), act(a, y)), "acts by automorphisms",
                 {a, x, y});
  for (Elem a = 0; a < A.order(); ++a)
    for (Elem b = 0; b < A.order(); ++b)
      for (Elem x = 0; x < X.order(); ++x) {
        Elem lhs = act(A.mul(a, b), x);
        Elem rhs = act.side == Side::Left ? act(a, act(b, x)) : act(b, act(a, x));
        r.expect(lhs == rhs, "composition law", {a, b, x});
      }
  return r;
}

struct PointedMap {
  GroupPtr src, dst;
  std::vector<Elem> map;
  Elem operator()(Elem x) const { return map[x]; }
};

// ---------------------------------------------------------------- constructors

inline GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("make_cyclic: n must be positive");
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return make_group("Z/" + std::to_string(n), n, std::move(t));
}

struct ProductResult {
  GroupPtr group;
  GroupHom pr1, pr2, in1, in2;
};

// Pairs (a, b) are indexed a * |B| + b.
inline ProductResult direct_product(const GroupPtr& A, const GroupPtr& B) {
  const std::size_t na = A->order(), nb = B->order(), n = na * nb;
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Elem>(A->mul(x / nb, y / nb) * nb + B->mul(x % nb, y % nb));
  auto P = make_group(A->label() + "x" + B->label(), n, std::move(t));
  ProductResult r{P, {P, A, {}}, {P, B, {}}, {A, P, {}}, {B, P, {}}};
  for (Elem x = 0; x < n; ++x) {
    r.pr1.map.push_back(static_cast<Elem>(x / nb));
    r.pr2.map.push_back(static_cast<Elem>(x % nb));
  }
  for (Elem a = 0; a < na; ++a) r.in1.map.push_back(static_cast<Elem>(a * nb));
  for (Elem b = 0; b < nb; ++b) r.in2.map.push_back(b);
  return r;
}

struct SemidirectResult {
  GroupPtr group;
  GroupHom inclusion;   // N -> N x| H
  GroupHom projection;  // N x| H -> H
  GroupHom section;     // H -> N x| H
};

// (n1, h1)(n2, h2) = (n1 . ^{h1} n2, h1 h2) for a left action of H on N.
// Pairs are indexed n * |H| + h, so a trivial action gives the direct product table.
inline SemidirectResult make_semidirect(const GroupPtr& N, const GroupPtr& H,
                                        const GroupAction& act) {
  if (act.side != Side::Left || act.actor.get() != H.get() || act.carrier.get() != N.get())
    throw PreconditionError("make_semidirect: expected a left action of H on N");
  const std::size_t nn = N->order(), nh = H->order(), n = nn * nh;
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem n1 = x / nh, h1 = x % nh, n2 = y / nh, h2 = y % nh;
      t[x * n + y] = static_cast<Elem>(N->mul(n1, act(h1, n2)) * nh + H->mul(h1, h2));
    }
  auto G = make_group(N->label() + "x|" + H->label(), n, std::move(t));
  SemidirectResult r{G, {N, G, {}}, {G, H, {}}, {H, G, {}}};
  for (Elem a = 0; a < nn; ++a) r.inclusion.map.push_back(static_cast<Elem>(a * nh));
  for (Elem x = 0; x < n; ++x) r.projection.map.push_back(static_cast<Elem>(x % nh));
  for (Elem h = 0; h < nh; ++h) r.section.map.push_back(h);
  return r;
}

// ---------------------------------------------------------------- subgroups

using ElementSet = std::vector<Elem>;  // sorted

inline ElementSet kernel(const GroupHom& f) {
  ElementSet k;
  for (Elem x = 0; x < f.src->order(); ++x)
    if (f(x) == 0) k.push_back(x);
  return k;
}

inline ElementSet image(const GroupHom& f) {
  std::vector<char> seen(f.dst->order(), 0);
  for (Elem x : f.map) seen[x] = 1;
  ElementSet im;
  for (Elem y = 0; y < seen.size(); ++y)
    if (seen[y]) im.push_back(y);
  return im;
}

inline ElementSet generate_subgroup(const FiniteGroup& g, const ElementSet& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal(const FiniteGroup& g, const ElementSet& sub) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : sub) in[x] = 1;
  for (Elem x : sub)
    for (Elem a = 0; a < g.order(); ++a)
      if (!in[g.conj(x, a)]) return false;
  return true;
}

// Greedy generating set: walk elements in index order, keep those outside the current span.
inline ElementSet generators(const FiniteGroup& g) {
  ElementSet gens, span{0};
  for (Elem x = 1; x < g.order(); ++x)
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = generate_subgroup(g, gens);
    }
  return gens;
}

struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;
};

// Materialise a subgroup given by an element set; new index i maps to elems[i].
inline Subgroup subgroup_of(const GroupPtr& g, const ElementSet& elems, std::string label) {
  std::vector<Elem> pos(g->order(), ~Elem{0});
  for (Elem i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  const std::size_t n = elems.size();
  std::vector<Elem> t(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      Elem p = pos[g->mul(elems[i], elems[j])];
      if (p == ~Elem{0}) throw PreconditionError("subgroup_of: set not closed");
      t[i * n + j] = p;
    }
  auto s = make_group(std::move(label), n, std::move(t));
  return {s, {s, g, elems}};
}

struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
  std::vector<Elem> reps;  // reps[i] = least element of coset i
};

// Coset representative is the minimal element index of each coset.
inline QuotientResult quotient(const GroupPtr& g, const ElementSet& sub, std::string label = {}) {
  if (!is_normal(*g, sub)) throw NormalityError("quotient: subgroup is not normal in " + g->label());
  const std::size_t n = g->order();
  std::vector<Elem> cls(n, ~Elem{0});
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (cls[x] != ~Elem{0}) continue;
    Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem s : sub) cls[g->mul(x, s)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> t(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) t[i * m + j] = cls[g->mul(reps[i], reps[j])];
  if (label.empty()) label = g->label() + "/N";
  auto q = make_group(std::move(label), m, std::move(t));
  return {q, {g, q, std::move(cls)}, std::move(reps)};
}

// Fixed points of a left action.
inline ElementSet fixed_points(const GroupAction& act) {
  ElementSet f;
  for (Elem x = 0; x < act.carrier->order(); ++x) {
    bool fixed = true;
    for (Elem a = 0; a < act.actor->order() && fixed; ++a) fixed = act(a, x) == x;
    if (fixed) f.push_back(x);
  }
  return f;
}

// Induced left action on a subgroup given by its inclusion (assumed invariant).
inline GroupAction restrict_action(const GroupAction& act, const GroupHom& incl) {
  std::vector<Elem> pos(act.carrier->order(), ~Elem{0});
  for (Elem i = 0; i < incl.map.size(); ++i) pos[incl.map[i]] = i;
  const std::size_t m = incl.src->order();
  std::vector<Elem> t(act.actor->order() * m);
  for (Elem a = 0; a < act.actor->order(); ++a)
    for (Elem i = 0; i < m; ++i) {
      Elem p = pos[act(a, incl(i))];
      if (p == ~Elem{0}) throw PreconditionError("restrict_action: subgroup not invariant");
      t[a * m + i] = p;
    }
  return {act.actor, incl.src, act.side, std::move(t)};
}

// Induced action on a quotient (assumes the kernel is invariant).
inline GroupAction quotient_action(const GroupAction& act, const QuotientResult& q) {
  const std::size_t m = q.group->order();
  std::vector<Elem> t(act.actor->order() * m);
  for (Elem a = 0; a < act.actor->order(); ++a)
    for (Elem i = 0; i < m; ++i) t[a * m + i] = q.projection(act(a, q.reps[i]));
  return {act.actor, q.group, act.side, std::move(t)};
}

// ---------------------------------------------------------------- enumeration

// Enumerate maps f: src -> dst with f(0) = 0, assigning f(1), f(2), ... in order.
// prune(partial, k) sees entries [0, k) assigned; returning false cuts the branch.
// visit returns false to stop the enumeration early.
inline void enumerate_pointed_maps(
    std::size_t src_order, std::size_t dst_order,
    const std::function<bool(const std::vector<Elem>&, std::size_t)>& prune,
    const std::function<bool(const std::vector<Elem>&)>& visit,
    const std::function<std::vector<Elem>(const std::vector<Elem>&, std::size_t)>& candidates =
        nullptr) {
  std::vector<Elem> f(src_order, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == src_order) {
      if (!visit(f)) stop = true;
      return;
    }
    auto try_value = [&](Elem v) {
      f[k] = v;
      if (!prune || prune(f, k + 1)) rec(k + 1);
    };
    if (candidates) {
      for (Elem v : candidates(f, k)) {
        try_value(v);
        if (stop) return;
      }
    } else {
      for (Elem v = 0; v < dst_order && !stop; ++v) try_value(v);
    }
    f[k] = 0;
  };
  if (src_order == 0) return;
  if (!prune || prune(f, 1)) rec(1);
}

// Extend generator images to a hom src -> dst if consistent.
inline std::optional<GroupHom> extend_hom(const GroupPtr& src, const GroupPtr& dst,
                                          const ElementSet& gens, const std::vector<Elem>& imgs) {
  const Elem none = ~Elem{0};
  std::vector<Elem> m(src->order(), none);
  m[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = src->mul(x, gens[j]);
      Elem v = dst->mul(m[x], imgs[j]);
      if (m[y] == none) {
        m[y] = v;
        queue.push_back(y);
      } else if (m[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != src->order()) return std::nullopt;
  return GroupHom{src, dst, std::move(m)};
}

// Isomorphism search through images of a generating set.
inline std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  auto gens = generators(*a);
  std::vector<Elem> imgs(gens.size(), 0);
  std::optional<GroupHom> found;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found) return;
    if (k == gens.size()) {
      auto h = extend_hom(a, b, gens, imgs);
      if (h && image(*h).size() == b->order()) found = std::move(h);
      return;
    }
    for (Elem y = 0; y < b->order() && !found; ++y)
      if (b->element_order(y) == a->element_order(gens[k])) {
        imgs[k] = y;
        rec(k + 1);
      }
  };
  rec(0);
  return found;
}

inline bool is_bijective(const std::vector<Elem>& m, std::size_t target_size) {
  if (m.size() != target_size) return false;
  std::vector<char> seen(target_size, 0);
  for (Elem x : m) {
    if (x >= target_size || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace xcoh
