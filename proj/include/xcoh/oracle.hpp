#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "cohomology.hpp"

namespace xcoh {

// Classical group cohomology from normalized bar cochains, kept independent of the
// crossed-module code so the two can be compared.
namespace oracle {

// f(s_1, ..., s_n) stored at index s_1 |G|^{n-1} + ... + s_n.
using BarCochain = std::vector<Elem>;

class Bar {
 public:
  // act is a left action of gamma on the abelian group A.
  Bar(GroupAction act, std::uint64_t budget = kDefaultBudget)
      : act_(std::move(act)), budget_(budget) {
    if (!act_.carrier->is_abelian()) throw PreconditionError("bar oracle needs an abelian module");
  }

  const FiniteGroup& A() const { return *act_.carrier; }
  const FiniteGroup& G() const { return *act_.actor; }

  std::vector<BarCochain> cocycles(int n) const {
    std::vector<BarCochain> out;
    const std::size_t g = G().order();
    if (n == 0) {
      for (Elem a : fixed_points(act_)) out.push_back({a});
      return out;
    }
    if (n == 1) {
      BarCochain f(g, 0);
      enumerate(f, 1, [&](const BarCochain& c) { return partial_z1(c); }, out);
      return out;
    }
    if (n == 2) {
      BarCochain f(g * g, 0);
      enumerate(f, 2, [&](const BarCochain& c) { return partial_z2(c); }, out);
      return out;
    }
    throw PreconditionError("bar oracle covers degrees 0, 1 and 2");
  }

  std::vector<BarCochain> coboundaries(int n) const {
    std::vector<BarCochain> out;
    const std::size_t g = G().order();
    if (n == 0) return {{0}};
    if (n == 1) {
      for (Elem a = 0; a < A().order(); ++a) {
        BarCochain f(g);
        for (Elem s = 0; s < g; ++s) f[s] = A().mul(act_(s, a), A().inv(a));
        out.push_back(f);
      }
    } else if (n == 2) {
      // d of every normalized 1-cochain
      BarCochain h(g, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g) {
          BarCochain f(g * g);
          for (Elem s = 0; s < g; ++s)
            for (Elem t = 0; t < g; ++t)
              f[s * g + t] = A().mul({act_(s, h[t]), A().inv(h[G().mul(s, t)]), h[s]});
          out.push_back(f);
          return;
        }
        for (Elem a = 0; a < A().order(); ++a) {
          h[i] = a;
          rec(i + 1);
        }
      };
      rec(1);
    } else {
      throw PreconditionError("bar oracle covers degrees 0, 1 and 2");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // H^n with its group law; representatives are the least cocycle of each class.
  CohomologySet cohomology(int n) const {
    auto z = cocycles(n);
    auto b = coboundaries(n);
    std::sort(z.begin(), z.end());
    std::map<BarCochain, Elem> cls;
    std::vector<BarCochain> reps;
    for (const auto& c : z) {
      if (cls.count(c)) continue;
      Elem k = static_cast<Elem>(reps.size());
      reps.push_back(c);
      for (const auto& e : b) cls[add(c, e)] = k;
    }
    CohomologySet h;
    h.degree = n;
    h.elements = reps;
    const std::size_t m = reps.size();
    std::vector<Elem> t(m * m);
    for (Elem i = 0; i < m; ++i)
      for (Elem j = 0; j < m; ++j) t[i * m + j] = cls.at(add(reps[i], reps[j]));
    h.abelian = table_is_abelian(t, m);
    h.table = std::move(t);
    return h;
  }

 private:
  BarCochain add(const BarCochain& a, const BarCochain& b) const {
    BarCochain c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = A().mul(a[i], b[i]);
    return c;
  }

  // f(st) = f(s) + s f(t), on the entries assigned so far
  bool partial_z1(const BarCochain& f) const {
    const std::size_t g = G().order();
    for (Elem s = 0; s < g; ++s)
      for (Elem t = 0; t < g; ++t) {
        Elem st = G().mul(s, t);
        if (!assigned(s) || !assigned(t) || !assigned(st)) continue;
        if (f[st] != A().mul(f[s], act_(s, f[t]))) return false;
      }
    return true;
  }

  // s f(t,u) - f(st,u) + f(s,tu) - f(s,t) = 0, on the entries assigned so far
  bool partial_z2(const BarCochain& f) const {
    const std::size_t g = G().order();
    for (Elem s = 0; s < g; ++s)
      for (Elem t = 0; t < g; ++t)
        for (Elem u = 0; u < g; ++u) {
          Elem a = t * g + u, b = G().mul(s, t) * g + u, c = s * g + G().mul(t, u), d = s * g + t;
          if (!assigned(a) || !assigned(b) || !assigned(c) || !assigned(d)) continue;
          Elem lhs = A().mul({act_(s, f[a]), A().inv(f[b]), f[c], A().inv(f[d])});
          if (lhs != 0) return false;
        }
    return true;
  }

  bool assigned(Elem i) const { return i < cursor_; }

  // Entries with an identity argument stay 0; the rest are assigned in index order.
  void enumerate(BarCochain& f, int n, const std::function<bool(const BarCochain&)>& check,
                 std::vector<BarCochain>& out) const {
    const std::size_t g = G().order();
    auto free = [&](std::size_t i) { return n == 1 ? i % g != 0 : (i / g != 0 && i % g != 0); };
    std::uint64_t nodes = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (++nodes > budget_) throw BudgetError("bar cocycle search exceeded the budget");
      while (i < f.size() && !free(i)) ++i;
      cursor_ = static_cast<Elem>(i);
      if (!check(f)) return;
      if (i == f.size()) {
        out.push_back(f);
        return;
      }
      for (Elem a = 0; a < A().order(); ++a) {
        f[i] = a;
        rec(i + 1);
      }
      f[i] = 0;
      cursor_ = static_cast<Elem>(i);
    };
    rec(0);
    cursor_ = static_cast<Elem>(f.size());
  }

  GroupAction act_;
  std::uint64_t budget_;
  mutable Elem cursor_ = ~Elem{0};
};

// H^n(gamma, A) for n in {0, 1, 2}.
inline CohomologySet classical_cohomology(const GroupAction& act, int n,
                                          std::uint64_t budget = kDefaultBudget) {
  return Bar(act, budget).cohomology(n);
}

// Crossed homomorphisms p(st) = p(s) ^s p(t) modulo p ~ g^-1 p(s) ^s g, as a pointed set.
inline CohomologySet nonabelian_h1(const GroupAction& act, std::uint64_t budget = kDefaultBudget) {
  const auto& G = *act.carrier;
  const auto& Gam = *act.actor;
  const std::size_t ng = Gam.order();
  std::vector<std::vector<Elem>> z;
  std::vector<Elem> p(ng, 0);
  std::uint64_t nodes = 0;
  std::function<void(Elem)> rec = [&](Elem i) {
    if (++nodes > budget) throw BudgetError("crossed homomorphism search exceeded the budget");
    for (Elem s = 0; s < i; ++s)
      for (Elem t = 0; t < i; ++t) {
        Elem st = Gam.mul(s, t);
        if (st < i && p[st] != G.mul(p[s], act(s, p[t]))) return;
      }
    if (i == ng) {
      z.push_back(p);
      return;
    }
    for (Elem a = 0; a < G.order(); ++a) {
      p[i] = a;
      rec(i + 1);
    }
    p[i] = 0;
  };
  rec(1);
  std::map<std::vector<Elem>, Elem> cls;
  CohomologySet h;
  h.degree = 1;
  for (const auto& c : z) {
    if (cls.count(c)) continue;
    Elem k = static_cast<Elem>(h.elements.size());
    h.elements.push_back(c);
    for (Elem g = 0; g < G.order(); ++g) {
      std::vector<Elem> q(ng);
      for (Elem s = 0; s < ng; ++s) q[s] = G.mul({G.inv(g), c[s], act(s, g)});
      cls[q] = k;
    }
  }
  return h;
}

}  // namespace oracle
}  // namespace xcoh
