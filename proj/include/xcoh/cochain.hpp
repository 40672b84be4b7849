#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xmod.hpp"

namespace xcoh {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

inline std::string count_text(long double n) {
  if (n < 1e18L) return std::to_string(static_cast<std::uint64_t>(std::llround(n)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3Le", n);
  return buf;
}

// (g, theta) with theta: gamma -> G1 pointed.
struct Cochain0 {
  Elem g = 0;
  std::vector<Elem> theta;
  auto operator<=>(const Cochain0&) const = default;
};

// (p, eps) with eps stored row-major: eps[s * |gamma| + t].
struct Cochain1 {
  std::vector<Elem> p;
  std::vector<Elem> eps;
  auto operator<=>(const Cochain1&) const = default;
};

inline std::vector<Elem> flatten(const Cochain0& c) {
  std::vector<Elem> v{c.g};
  v.insert(v.end(), c.theta.begin(), c.theta.end());
  return v;
}
inline std::vector<Elem> flatten(const Cochain1& c) {
  std::vector<Elem> v = c.p;
  v.insert(v.end(), c.eps.begin(), c.eps.end());
  return v;
}

// Cochain-level operations for one gamma crossed module. Products that need a
// bracket throw PreconditionError when no braiding was supplied.
class Cochains {
 public:
  Cochains(GammaCrossedModule gx, std::optional<Braiding> br = std::nullopt,
           std::uint64_t budget = kDefaultBudget)
      : gx_(std::move(gx)), br_(std::move(br)), budget_(budget), ng_(gx_.Gam().order()) {}

  const GammaCrossedModule& gx() const { return gx_; }
  const std::optional<Braiding>& braiding() const { return br_; }
  std::uint64_t budget() const { return budget_; }
  std::size_t ng() const { return ng_; }

  // ------------------------------------------------------------ degree 0

  Cochain0 c0_identity() const { return {0, std::vector<Elem>(ng_, 0)}; }

  // Group law under which C0 acts on Z1 from the right:
  // (g, t)(g', t') = (gg', s -> t'(s) t(s)^{^s g'}).
  Cochain0 c0_mul(const Cochain0& a, const Cochain0& b) const {
    Cochain0 r{G0().mul(a.g, b.g), std::vector<Elem>(ng_)};
    for (Elem s = 0; s < ng_; ++s)
      r.theta[s] = G1().mul(b.theta[s], act(a.theta[s], s0(s, b.g)));
    return r;
  }

  Cochain0 c0_inv(const Cochain0& a) const {
    Elem gi = G0().inv(a.g);
    Cochain0 r{gi, std::vector<Elem>(ng_)};
    for (Elem s = 0; s < ng_; ++s) r.theta[s] = G1().inv(act(a.theta[s], s0(s, gi)));
    return r;
  }

  // (g, t)(g', t') = (gg', s -> t(s)^{g'} t'(s)). Agrees with c0_mul when the
  // second factor lies in Z0, but is not compatible with the action otherwise.
  Cochain0 c0_mul_untwisted(const Cochain0& a, const Cochain0& b) const {
    Cochain0 r{G0().mul(a.g, b.g), std::vector<Elem>(ng_)};
    for (Elem s = 0; s < ng_; ++s) r.theta[s] = G1().mul(act(a.theta[s], b.g), b.theta[s]);
    return r;
  }

  // Product used for the braided structure on C0.
  Cochain0 c0_mul_braided(const Cochain0& a, const Cochain0& b) const {
    const auto& br = bracket();
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    Cochain0 r{G0.mul(a.g, b.g), std::vector<Elem>(ng_)};
    Elem g1i = G0.inv(a.g), g2i = G0.inv(b.g);
    for (Elem s = 0; s < ng_; ++s) {
      Elem sg2 = s0(s, b.g);
      Elem p2 = G0.mul({g2i, sg2, G0.inv(d(b.theta[s]))});
      Elem corr = act(br(g2i, G0.mul(g1i, s0(s, a.g))), sg2);
      r.theta[s] = G1.mul({act(a.theta[s], p2), b.theta[s], corr});
    }
    return r;
  }

  // (d mu, s -> mu^-1 ^s mu)
  Cochain0 boundary0(Elem mu) const {
    Cochain0 r{d(mu), std::vector<Elem>(ng_)};
    for (Elem s = 0; s < ng_; ++s) r.theta[s] = G1().mul(G1().inv(mu), s1(s, mu));
    return r;
  }

  bool in_z0(const Cochain0& a) const {
    if (a.theta[0] != 0) return false;
    for (Elem s = 0; s < ng_; ++s)
      if (d(a.theta[s]) != G0().mul(G0().inv(a.g), s0(s, a.g))) return false;
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t)
        if (a.theta[gmul(s, t)] != G1().mul(a.theta[s], s1(s, a.theta[t]))) return false;
    return true;
  }

  // Mixed radix code, g most significant, so code order is lexicographic order.
  std::uint64_t c0_size() const {
    long double sz = static_cast<long double>(G0().order()) *
                     std::pow(static_cast<long double>(G1().order()), ng_ - 1);
    if (sz > static_cast<long double>(budget_))
      throw BudgetError("C0 has " + count_text(sz) +
                        " elements, over budget " + std::to_string(budget_));
    return static_cast<std::uint64_t>(sz);
  }
  std::uint64_t c0_encode(const Cochain0& a) const {
    std::uint64_t code = a.g;
    for (Elem s = 1; s < ng_; ++s) code = code * G1().order() + a.theta[s];
    return code;
  }
  Cochain0 c0_decode(std::uint64_t code) const {
    Cochain0 a{0, std::vector<Elem>(ng_, 0)};
    for (Elem s = static_cast<Elem>(ng_) - 1; s >= 1; --s) {
      a.theta[s] = static_cast<Elem>(code % G1().order());
      code /= G1().order();
    }
    a.g = static_cast<Elem>(code);
    return a;
  }

  // Generators of C0 under the plain product: (g_i, 1) and (1, single-entry theta).
  std::vector<Cochain0> c0_generators() const {
    std::vector<Cochain0> gens;
    for (Elem g : generators(G0())) {
      auto c = c0_identity();
      c.g = g;
      gens.push_back(c);
    }
    for (Elem s = 1; s < ng_; ++s)
      for (Elem a : generators(G1())) {
        auto c = c0_identity();
        c.theta[s] = a;
        gens.push_back(c);
      }
    return gens;
  }

  std::vector<Cochain0> enumerate_z0() const {
    std::vector<Cochain0> out;
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    for (Elem g = 0; g < G0.order(); ++g) {
      Elem gi = G0.inv(g);
      // candidates per s: d theta(s) = g^-1 ^s g
      std::vector<std::vector<Elem>> fib(ng_);
      for (Elem s = 0; s < ng_; ++s)
        for (Elem a = 0; a < G1.order(); ++a)
          if (d(a) == G0.mul(gi, s0(s, g))) fib[s].push_back(a);
      enumerate_pointed_maps(
          ng_, G1.order(),
          [&](const std::vector<Elem>& th, std::size_t k) {
            for (Elem s = 0; s < k; ++s)
              for (Elem t = 0; t < k; ++t) {
                Elem st = gmul(s, t);
                if (st < k && th[st] != G1.mul(th[s], s1(s, th[t]))) return false;
              }
            return true;
          },
          [&](const std::vector<Elem>& th) {
            out.push_back({g, th});
            return true;
          },
          [&](const std::vector<Elem>&, std::size_t k) { return fib[k]; });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Cochain0> enumerate_b0() const {
    std::vector<Cochain0> out;
    for (Elem mu = 0; mu < G1().order(); ++mu) out.push_back(boundary0(mu));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // ------------------------------------------------------------ degree 1

  Elem& eps(Cochain1& c, Elem s, Elem t) const { return c.eps[s * ng_ + t]; }
  Elem eps(const Cochain1& c, Elem s, Elem t) const { return c.eps[s * ng_ + t]; }

  Cochain1 c1_identity() const {
    return {std::vector<Elem>(ng_, 0), std::vector<Elem>(ng_ * ng_, 0)};
  }

  bool in_z1(const Cochain1& c) const {
    const auto& G0 = this->G0();
    if (c.p[0] != 0) return false;
    for (Elem s = 0; s < ng_; ++s)
      if (eps(c, 0, s) != 0 || eps(c, s, 0) != 0) return false;
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t)
        if (G0.mul(c.p[gmul(s, t)], d(eps(c, s, t))) != G0.mul(c.p[s], s0(s, c.p[t])))
          return false;
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t)
        for (Elem u = 0; u < ng_; ++u)
          if (!cond2(c, s, t, u)) return false;
    return true;
  }

  // eps(s,tu) ^s eps(t,u) = eps(st,u) eps(s,t)^{^{st} p(u)}
  bool cond2(const Cochain1& c, Elem s, Elem t, Elem u) const {
    const auto& G1 = this->G1();
    Elem st = gmul(s, t);
    Elem lhs = G1.mul(eps(c, s, gmul(t, u)), s1(s, eps(c, t, u)));
    Elem rhs = G1.mul(eps(c, st, u), act(eps(c, s, t), s0(st, c.p[u])));
    return lhs == rhs;
  }

  // Right action of (C0, plain product) on Z1.
  Cochain1 act(const Cochain1& c, const Cochain0& a) const {
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    Cochain1 r = c1_identity();
    Elem gi = G0.inv(a.g);
    for (Elem s = 0; s < ng_; ++s)
      r.p[s] = G0.mul({gi, c.p[s], s0(s, a.g), G0.inv(d(a.theta[s]))});
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t) {
        Elem st = gmul(s, t);
        eps(r, s, t) = G1.mul({a.theta[st], act(eps(c, s, t), s0(st, a.g)),
                               G1.inv(s1(s, a.theta[t])),
                               act(G1.inv(a.theta[s]), s0(s, r.p[t]))});
      }
    return r;
  }

  Cochain1 c1_mul(const Cochain1& a, const Cochain1& b) const {
    const auto& br = bracket();
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    Cochain1 r = c1_identity();
    for (Elem s = 0; s < ng_; ++s) r.p[s] = G0.mul(a.p[s], b.p[s]);
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t) {
        Elem st = gmul(s, t);
        eps(r, s, t) = G1.mul({act(eps(a, s, t), b.p[st]), eps(b, s, t),
                               act(br(b.p[s], s0(s, a.p[t])), s0(s, b.p[t]))});
      }
    return r;
  }

  Cochain1 c1_inv(const Cochain1& a) const {
    const auto& br = bracket();
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    Cochain1 r = c1_identity();
    for (Elem s = 0; s < ng_; ++s) r.p[s] = G0.inv(a.p[s]);
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t) {
        Elem st = gmul(s, t);
        eps(r, s, t) = G1.mul(act(G1.inv(eps(a, s, t)), G0.inv(a.p[st])),
                              br(G0.inv(a.p[s]), G0.inv(s0(s, a.p[t]))));
      }
    return r;
  }

  // d: C0 -> Z1
  Cochain1 d1(const Cochain0& a) const {
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    Cochain1 r = c1_identity();
    Elem gi = G0.inv(a.g);
    for (Elem s = 0; s < ng_; ++s) r.p[s] = G0.mul({gi, s0(s, a.g), G0.inv(d(a.theta[s]))});
    for (Elem s = 0; s < ng_; ++s)
      for (Elem t = 0; t < ng_; ++t) {
        Elem st = gmul(s, t);
        Elem x = G0.mul(G0.inv(s0(s, a.g)), s0(st, a.g));
        eps(r, s, t) =
            G1.mul({a.theta[st], act(G1.inv(a.theta[s]), x), G1.inv(s1(s, a.theta[t]))});
      }
    return r;
  }

  // (g, theta)^{(p, eps)} for the action of Z1 on C0.
  Cochain0 act_on_c0(const Cochain0& a, const Cochain1& c) const {
    const auto& br = bracket();
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    Cochain0 r{a.g, std::vector<Elem>(ng_)};
    Elem gi = G0.inv(a.g);
    for (Elem s = 0; s < ng_; ++s) {
      Elem sg = s0(s, a.g);
      r.theta[s] = G1.mul({act(a.theta[s], c.p[s]), br(c.p[s], sg),
                           act(br(a.g, c.p[s]), G0.mul(gi, sg))});
    }
    return r;
  }

  // delta(p, g)(s) = {g, p(s)}^{g^-1 ^s g}
  std::vector<Elem> delta(const Cochain1& c, Elem g) const {
    const auto& br = bracket();
    std::vector<Elem> r(ng_);
    for (Elem s = 0; s < ng_; ++s)
      r[s] = act(br(g, c.p[s]), G0().mul(G0().inv(g), s0(s, g)));
    return r;
  }

  // Bracket on Z1 for a symmetric braiding: (1, s -> {p2(s), p1(s)}).
  Cochain0 z1_bracket(const Cochain1& a, const Cochain1& b) const {
    const auto& br = bracket();
    Cochain0 r = c0_identity();
    for (Elem s = 0; s < ng_; ++s) r.theta[s] = br(b.p[s], a.p[s]);
    return r;
  }

  // |G0|^(n-1) |ker d|^((n-1)^2), the size of the Z1 search space after fibering.
  long double z1_search_estimate() const {
    const long double n1 = static_cast<long double>(ng_ - 1);
    return std::pow(static_cast<long double>(G0().order()), n1) *
           std::pow(static_cast<long double>(kernel(gx_.x.boundary).size()), n1 * n1);
  }

  std::vector<Cochain1> enumerate_z1() const {
    long double est = z1_search_estimate();
    if (est > static_cast<long double>(budget_))
      throw BudgetError("Z1 search space " + count_text(est) +
                        " exceeds budget " + std::to_string(budget_));
    const auto& G0 = this->G0();
    const auto& G1 = this->G1();
    std::vector<std::vector<Elem>> fiber(G0.order());
    for (Elem a = 0; a < G1.order(); ++a) fiber[d(a)].push_back(a);
    std::vector<Cochain1> out;
    const std::size_t m = ng_ - 1;
    enumerate_pointed_maps(
        ng_, G0.order(),
        [&](const std::vector<Elem>& p, std::size_t k) {
          for (Elem s = 1; s < k; ++s)
            for (Elem t = 1; t < k; ++t) {
              Elem st = gmul(s, t);
              if (st >= k) continue;
              Elem defect = G0.mul({G0.inv(p[st]), p[s], s0(s, p[t])});
              if (fiber[defect].empty()) return false;
            }
          return true;
        },
        [&](const std::vector<Elem>& p) {
          Cochain1 c{p, std::vector<Elem>(ng_ * ng_, 0)};
          if (m == 0) {
            out.push_back(c);
            return true;
          }
          // eps entries (s,t), s,t >= 1, assigned row-major
          std::vector<const std::vector<Elem>*> fib(m * m);
          for (Elem s = 1; s < ng_; ++s)
            for (Elem t = 1; t < ng_; ++t)
              fib[(s - 1) * m + (t - 1)] =
                  &fiber[G0.mul({G0.inv(p[gmul(s, t)]), p[s], s0(s, p[t])})];
          auto pos = [&](Elem s, Elem t) -> std::size_t {
            return (s == 0 || t == 0) ? 0 : (s - 1) * m + (t - 1) + 1;
          };
          std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == m * m) {
              out.push_back(c);
              return;
            }
            Elem s = static_cast<Elem>(k / m + 1), t = static_cast<Elem>(k % m + 1);
            for (Elem v : *fib[k]) {
              c.eps[s * ng_ + t] = v;
              bool ok = true;
              // check every triple whose last-assigned entry is k
              for (Elem a = 1; a < ng_ && ok; ++a)
                for (Elem b = 1; b < ng_ && ok; ++b)
                  for (Elem e = 1; e < ng_ && ok; ++e) {
                    std::size_t q = std::max({pos(a, gmul(b, e)), pos(b, e),
                                              pos(gmul(a, b), e), pos(a, b)});
                    if (q == k + 1) ok = cond2(c, a, b, e);
                  }
              if (ok) rec(k + 1);
            }
            c.eps[s * ng_ + t] = 0;
          };
          rec(0);
          return true;
        });
    std::sort(out.begin(), out.end());
    return out;
  }

  // ------------------------------------------------------------ shorthands

  const FiniteGroup& G0() const { return gx_.G0(); }
  const FiniteGroup& G1() const { return gx_.G1(); }
  const FiniteGroup& Gam() const { return gx_.Gam(); }
  Elem gmul(Elem s, Elem t) const { return gx_.Gam().mul(s, t); }
  Elem d(Elem a) const { return gx_.x.d(a); }
  Elem act(Elem a, Elem g) const { return gx_.x.act(a, g); }
  Elem s0(Elem s, Elem g) const { return gx_.s0(s, g); }
  Elem s1(Elem s, Elem a) const { return gx_.s1(s, a); }

  const Braiding& bracket() const {
    if (!br_) throw PreconditionError("operation requires a braiding");
    return *br_;
  }

 private:
  GammaCrossedModule gx_;
  std::optional<Braiding> br_;
  std::uint64_t budget_;
  std::size_t ng_;
};

}  // namespace xcoh
