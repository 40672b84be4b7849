#pragma once

#include <string>
#include <vector>

#include "butterfly.hpp"

namespace xcoh {

// Formulas fixed by search or derivation. Every report carries them.
inline std::vector<std::string> formula_notes(const ZTranslation& tr) {
  return {
      "E product: " + tr.product_formula(),
      "derived " + tr.rho_formula(),
      "arrow (t, g): rho'(t x) = g^-1 rho(x) ^{pi x} g, t(iota a) = iota'(a^g)",
      "star product on E x_gamma E': (x1,y1)(x2,y2) = (x1 x2 iota(^{(s1 s2)^-1}{rho'(y1)^-1, ^{s1} "
      "rho(x2)}^-1), y1 y2), s_i = pi(x_i)",
      "star of arrows (t,g)*(t',g') = (f * id) then (id * f'): u = t(x) iota(^{s^-1}{^s g, "
      "rho'(y)^-1}), (x,y) -> (u iota(^{s^-1}{rho(u), g'}), t'(y)), label g g'",
      "pushforward: K = {(x,b): rho(x) = p(b)} modulo (kappa(c), iota(c)), arrows labelled r s(h)",
      "four-term sequence: (k,b)(k',b') = (kk', b^{c0 k'} b'), (h,a)(h',a') = (hh', a^{b0 h'} a'), "
      "j(g) = (d g, c1(g^-1)), phi(k,b) = (c0(k) d b, b1(b)^-1 psi(k)), omega(h,a) = b0(h) d a",
      "H-1 connecting map: x least with phi(x) = (1,a), theta(s) = j^-1(x^-1 ^s x)",
      "H0 connecting map: (h,a) least with b0(h) d a = g, w(s) = (h^-1 ^s h, theta'(s)^-1), "
      "x(s) least phi-preimage, p(s) = k(x(s)), eps(s,t) = j^-1(x(st)^-1 x(s) ^s x(t))",
      "1 -> G1 -> G0 -> G -> 1 read as [1 -> G1] -d-> [1 -> G0] -(1,id)-> G, psi the least valid table "
      "(k -> k^-1 is always valid)",
  };
}

}  // namespace xcoh
