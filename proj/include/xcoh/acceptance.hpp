#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "butterfly.hpp"
#include "catalog.hpp"
#include "exact.hpp"
#include "kcomplex.hpp"
#include "notes.hpp"
#include "oracle.hpp"

namespace xcoh {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;  // one line per case checked
};

struct AcceptanceOptions {
  std::uint64_t budget = kDefaultBudget;
  bool corrupt_fixture = false;  // negative control: break the z4-double braiding
  std::vector<int> only;         // empty runs every criterion
};

struct AcceptanceRun {
  std::vector<CriterionResult> results;
  std::vector<std::string> notes;
  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  }
};

namespace acceptance_detail {

inline std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    r_.pass = r_.pass && ok;
  }
  void check(const ValidationReport& v, const std::string& what) {
    if (v.ok() || v.violations.empty()) return check(v.ok(), what);
    const auto& first = v.violations.front();
    check(false, what + " :: " + v.subject + ", " + std::to_string(v.total_failures) + " failures, first: " +
                     first.axiom);
  }

 private:
  CriterionResult& r_;
};

inline bool same_group(const CohomologySet& a, const CohomologySet& b) {
  if (!a.table || !b.table) return true;
  return find_isomorphism(a.as_group("a"), b.as_group("b")).has_value();
}

struct Fixtures {
  std::vector<DeskInstance> desk;
  ZTranslation tr;
  std::vector<std::string> translation_notes;
  bool translation_found = false;
};

inline Fixtures make_fixtures(const AcceptanceOptions& o) {
  Fixtures f;
  f.desk = desk_instances();
  if (o.corrupt_fixture)
    for (auto& d : f.desk)
      if (d.name == "z4-double") d.br->table[1 * 4 + 1] = 1;
  TranslationSearch ts;
  for (const auto& d : f.desk) {
    Cochains ch(d.gx, d.br, o.budget);
    search_translation(ts, ch, ch.enumerate_z1());
  }
  finish_translation(ts);
  f.translation_notes = ts.notes;
  f.translation_found = ts.chosen.has_value();
  if (ts.chosen) f.tr = *ts.chosen;
  return f;
}

// ---------------------------------------------------------------- 1, 2

inline void classical_top(Recorder& rec, const Fixtures&, const AcceptanceOptions& o) {
  auto z2 = make_cyclic(2), z3 = make_cyclic(3), v4 = make_klein();
  struct Case {
    std::string name;
    GroupPtr a, gamma;
    std::vector<Elem> phi;
  };
  std::vector<Case> cases = {
      {"Z/2 trivial, gamma Z/2", z2, z2, identity_map(2)},
      {"Z/2 trivial, gamma Z/3", z2, z3, identity_map(2)},
      {"Z/3 trivial, gamma Z/2", z3, z2, identity_map(3)},
      {"Z/3 inversion, gamma Z/2", z3, z2, inversion_map(*z3)},
      {"Z/3 trivial, gamma Z/3", z3, z3, identity_map(3)},
      {"V4 trivial, gamma Z/2", v4, z2, identity_map(4)},
      {"V4 swap, gamma Z/2", v4, z2, {0, 2, 1, 3}},
      {"V4 trivial, gamma Z/3", v4, z3, identity_map(4)},
      {"V4 rotation, gamma Z/3", v4, z3, {0, 2, 3, 1}},
  };
  for (const auto& c : cases) {
    auto d = desk_abelian_top(c.name, c.a, c.gamma, c.phi);
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    oracle::Bar bar(d.gx.act1, o.budget);
    CohomologySet h[3] = {bar.cohomology(0), bar.cohomology(1), bar.cohomology(2)};
    const CohomologySet* ours[3] = {&co.hm1, &co.h0.set, &co.h1.set};
    bool sizes = true, tables = true;
    for (int i = 0; i < 3; ++i) {
      sizes = sizes && ours[i]->size() == h[i].size();
      tables = tables && same_group(*ours[i], h[i]);
    }
    rec.check(sizes && tables, c.name + ": " +
                                   triple(co.hm1.size(), co.h0.set.size(), co.h1.set.size()) +
                                   " vs bar " + triple(h[0].size(), h[1].size(), h[2].size()) +
                                   (tables ? ", tables isomorphic" : ", tables differ"));
  }
}

inline void classical_bottom(Recorder& rec, const Fixtures&, const AcceptanceOptions& o) {
  auto z2 = make_cyclic(2), z3 = make_cyclic(3), z4 = make_cyclic(4);
  auto s3 = make_s3();
  struct Case {
    std::string name;
    GroupPtr g, gamma;
    std::vector<Elem> phi;
  };
  std::vector<Case> cases = {
      {"Z/2 trivial, gamma Z/2", z2, z2, identity_map(2)},
      {"Z/2 trivial, gamma Z/3", z2, z3, identity_map(2)},
      {"Z/4 trivial, gamma Z/2", z4, z2, identity_map(4)},
      {"Z/4 inversion, gamma Z/2", z4, z2, inversion_map(*z4)},
      {"S3 trivial, gamma Z/2", s3, z2, identity_map(6)},
      {"S3 inner, gamma Z/2", s3, z2, conjugation_map(*s3, 1)},
      {"S3 trivial, gamma Z/3", s3, z3, identity_map(6)},
  };
  for (const auto& c : cases) {
    auto d = desk_group(c.name, c.g, c.gamma, c.phi);
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    ElementSet h0;
    for (Elem r : co.h0.reps) h0.push_back(co.h0.z0[r].g);
    std::sort(h0.begin(), h0.end());
    bool h0_ok = h0 == fixed_points(d.gx.act0);
    auto h1 = oracle::nonabelian_h1(d.gx.act0, o.budget);
    std::vector<Elem> map;
    const std::size_t ng = c.gamma->order();
    for (const auto& p : h1.elements)
      map.push_back(co.h1.class_of({p, std::vector<Elem>(ng * ng, 0)}));
    bool h1_ok = is_bijective(map, co.h1.set.size()) && !map.empty() && map[0] == 0;
    rec.check(h0_ok && h1_ok, c.name + ": H0 " + std::to_string(h0.size()) + " vs fixed points " +
                                  std::to_string(fixed_points(d.gx.act0).size()) + ", H1 " +
                                  std::to_string(co.h1.set.size()) + " vs crossed homs mod conjugacy " +
                                  std::to_string(h1.size()) + (h1_ok ? " (pointed bijection)" : ""));
  }
}

// ---------------------------------------------------------------- 3, 4, 5

inline void cmg_matches(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  for (const auto& d : f.desk) {
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    auto k = build_k1(ch, co.h1);
    auto cc = cohomology_of_cmg(k);
    bool same = cc.h1.elements == co.h1.set.elements && cc.h0.elements == co.h0.set.elements &&
                cc.hm1.elements == co.hm1.elements && cc.h0.table == co.h0.set.table &&
                cc.hm1.table == co.hm1.table;
    rec.check(validate_cmg(k), d.name + ": K1 is a crossed module in groupoids");
    rec.check(same, d.name + ": " + triple(cc.hm1.size(), cc.h0.size(), cc.h1.size()) + " vs " +
                        triple(co.hm1.size(), co.h0.set.size(), co.h1.set.size()) +
                        ", representatives identical");
  }
}

inline void coincide(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  for (const auto& d : f.desk) {
    if (!d.br) continue;
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    auto v = verify_coincide(ch, co.h1);
    rec.check(v, d.name + ": identity on " + std::to_string(v.checked) + " pairs");
    // orbit of each cocycle = its coset under d(C0)
    bool partition = true;
    const std::uint64_t n = ch.c0_size();
    for (Elem i = 0; i < co.h1.z1.size() && partition; ++i) {
      std::set<Elem> coset, orbit;
      for (std::uint64_t a = 0; a < n; ++a) {
        auto x = ch.c0_decode(a);
        coset.insert(co.h1.index_of(ch.c1_mul(co.h1.z1[i], ch.d1(x))));
        orbit.insert(co.h1.index_of(ch.act(co.h1.z1[i], x)));
      }
      partition = coset == orbit && !coset.count(kNone);
    }
    rec.check(partition, d.name + ": orbit partition = coset partition of im d");
  }
}

inline void braided_structure(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  auto it = std::find_if(f.desk.begin(), f.desk.end(), [](const auto& d) { return d.name == "z2-pairing"; });
  const auto d = it != f.desk.end() ? *it : desk_z2_pairing(make_cyclic(2));
  Cochains ch(d.gx, d.br, o.budget);
  auto co = compute_cohomology(ch);
  rec.check(co.h0.set.abelian, d.name + ": H0 abelian");
  rec.check(co.h1.set.table.has_value(), d.name + ": H1 carries a group table");
  rec.check(verify_z1_group(ch, co.h1), d.name + ": group law on Z1 and H1");
  auto kb = build_k1_braided(ch, co.h1);
  rec.check(validate_two_crossed_module(kb.tcm), d.name + ": 2-crossed module axioms");
  rec.check(validate_braided_2cm(kb.tcm, z1_top_bracket(ch, co.h1)), d.name + ": braided 2-crossed module");
  rec.check(co.h1.set.table && co.h1.set.abelian, d.name + ": H1 abelian (symmetric braiding)");
}

// ---------------------------------------------------------------- 6, 7

inline void z_against_cocycles(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  rec.check(f.translation_found, "a cocycle translation valid on every instance");
  if (!f.translation_found) return;
  for (const auto& d : f.desk) {
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    auto zc = verify_z_against_cocycles(ch, co, f.tr);
    rec.check(zc.report, d.name + ": objects " + std::to_string(zc.objects) + ", H1 classes " +
                             std::to_string(zc.classes_h1) + ", base self-arrows " +
                             std::to_string(zc.arrows_base) + " in " + std::to_string(zc.classes_h0) +
                             " 2-classes, H-1 " + std::to_string(zc.h_minus1));
  }
}

inline void star_product(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  for (const auto& d : f.desk) {
    if (!d.br) continue;
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    const auto& gx = d.gx;
    const auto& br = *d.br;
    const auto& z1 = co.h1.z1;
    std::vector<ZObject> objs;
    for (const auto& c : z1) objs.push_back(zobject_from_cocycle(ch, c, f.tr));
    const Elem base = co.h1.index_of(ch.c1_identity());
    const bool sym = d.level != BraidingLevel::Braided;
    std::size_t pairs = 0, bad_obj = 0, bad_cls = 0, bad_unit = 0, bad_br = 0, bad_brid = 0;
    auto h1 = build_h1_crossed_module(ch, co.h0, co.h1);
    for (Elem i = 0; i < z1.size(); ++i)
      for (Elem j = 0; j < z1.size(); ++j) {
        ++pairs;
        auto S = star_objects(gx, br, objs[i], objs[j]);
        if (!S.report.ok() || !validate_zobject(gx, S.obj).ok()) {
          ++bad_obj;
          continue;
        }
        Elem c = co.h1.class_of(cocycle_from_zobject(ch, S.obj, f.tr));
        Elem want = co.h1.cls[co.h1.index_of(ch.c1_mul(z1[i], z1[j]))];
        if (c != want || !co.h1.set.table || c != co.h1.set.mul(co.h1.cls[i], co.h1.cls[j])) ++bad_cls;
        if (j == base) {
          auto u = find_zarrow(gx, S.obj, objs[i]);
          if (!u || !validate_zarrow(gx, S.obj, objs[i], *u).ok()) ++bad_unit;
        }
        if (sym) {
          auto T = star_objects(gx, br, objs[j], objs[i]);
          auto b1 = symmetric_braiding(gx, br, objs[i], objs[j], S, T);
          auto b2 = symmetric_braiding(gx, br, objs[j], objs[i], T, S);
          if (!b1.descent.ok() || !validate_zarrow(gx, S.obj, T.obj, b1.arrow).ok()) ++bad_br;
          auto id = compose(b1.arrow, b2.arrow, gx.G0());
          if (id.t.map != identity_hom(S.obj.e).map || id.g != 0) ++bad_brid;
        }
      }
    rec.check(h1.bx.well_defined, d.name + ": [C0/B0 -> Z1] well defined");
    rec.check(bad_obj + bad_cls == 0, d.name + ": class(a*b) = class(a)class(b), " +
                                          std::to_string(pairs - bad_obj - bad_cls) + "/" +
                                          std::to_string(pairs) + " pairs");
    rec.check(bad_unit == 0, d.name + ": a * E_triv ~ a by an explicit arrow, " +
                                 std::to_string(z1.size() - bad_unit) + "/" + std::to_string(z1.size()));
    if (sym)
      rec.check(bad_br + bad_brid == 0, d.name + ": symmetry arrows valid and inverse, " +
                                            std::to_string(pairs - bad_br - bad_brid) + "/" +
                                            std::to_string(pairs) + " pairs");
  }
}

// ---------------------------------------------------------------- 8, 9

struct MonoidalScan {
  std::size_t pairs = 0, arrows = 0, failures = 0;
};

// Comparison arrows F_{a,b} on the first `limit` objects, and the coherence square for every
// pair of generator arrows out of them.
inline MonoidalScan monoidal_scan(const Butterfly& bf, const GammaCrossedModule& gh, const Braiding& bh,
                                  const GammaCrossedModule& gg, const Braiding& bg,
                                  const ZTranslation& tr, std::size_t limit, std::uint64_t budget) {
  MonoidalScan out;
  Cochains chH(gh, bh, budget);
  auto coH = compute_cohomology(chH);
  const auto& z1 = coH.h1.z1;
  std::vector<ZObject> objs;
  std::vector<PairObject> push;
  for (const auto& c : z1) {
    objs.push_back(zobject_from_cocycle(chH, c, tr));
    push.push_back(pushforward_object(bf, gg, objs.back()));
  }
  struct Square {
    PairObject star_g, star_h, push_star;
    DescendedArrow F;
  };
  std::map<std::pair<Elem, Elem>, Square> cache;
  auto square = [&](Elem i, Elem j) -> const Square& {
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
    Square s{star_objects(gg, bg, push[i].obj, push[j].obj), star_objects(gh, bh, objs[i], objs[j]), {}, {}};
    s.push_star = pushforward_object(bf, gg, s.star_h.obj);
    s.F = monoidal_comparison(bf, push[i], push[j], s.star_g, s.star_h, s.push_star);
    return cache.emplace(std::make_pair(i, j), std::move(s)).first->second;
  };
  const auto gens = chH.c0_generators();
  for (Elem i = 0; i < z1.size() && i < limit; ++i)
    for (Elem j = 0; j < z1.size() && j < limit; ++j) {
      ++out.pairs;
      const auto& S = square(i, j);
      bool ok = S.F.descent.ok() && validate_zarrow(gg, S.star_g.obj, S.push_star.obj, S.F.arrow).ok() &&
                is_bijective(S.F.arrow.t.map, S.push_star.obj.e->order()) &&
                validate_hom(S.F.arrow.t).ok();
      if (!ok) {
        ++out.failures;
        continue;
      }
      for (const auto& a : gens)
        for (const auto& b : gens) {
          ++out.arrows;
          Elem i2 = coH.h1.index_of(chH.act(z1[i], a)), j2 = coH.h1.index_of(chH.act(z1[j], b));
          auto f = zarrow_from_cochain(chH, objs[i], objs[i2], a, tr);
          auto fp = zarrow_from_cochain(chH, objs[j], objs[j2], b, tr);
          const auto& S2 = square(i2, j2);
          auto uf = pushforward_arrow(bf, objs[i], push[i], push[i2], f);
          auto ufp = pushforward_arrow(bf, objs[j], push[j], push[j2], fp);
          auto st = star_arrows(gg, bg, push[i].obj, push[i2].obj, uf.arrow, push[j].obj, push[j2].obj,
                                ufp.arrow, S.star_g, S2.star_g);
          auto sh = star_arrows(gh, bh, objs[i], objs[i2], f, objs[j], objs[j2], fp, S.star_h, S2.star_h);
          auto ush = pushforward_arrow(bf, S.star_h.obj, S.push_star, S2.push_star, sh.arrow);
          auto top = compose(S.F.arrow, ush.arrow, gg.G0());
          auto bot = compose(st.arrow, S2.F.arrow, gg.G0());
          Elem eps = section_defect(bf, f.g, fp.g);
          if (!validate_two_arrow(gg, S2.push_star.obj, top, bot, eps).ok()) ++out.failures;
        }
    }
  return out;
}

inline void pushforward(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  for (const auto& d : f.desk) {
    Cochains ch(d.gx, d.br, o.budget);
    auto co = compute_cohomology(ch);
    auto bf = strict_butterfly(d.gx, d.gx, identity_morphism(d.gx.x));
    rec.check(validate_gamma_butterfly(bf, d.gx, d.gx), d.name + ": identity strong gamma-butterfly");
    auto pm = pushforward_on_cohomology(bf, ch, co, ch, co, f.tr);
    rec.check(pm.report.ok() && induced_bijective(pm, co), d.name + ": identity butterfly, H-1/H0/H1 bijective");
    auto pb = double_pullback(d.gx);
    Cochains chP(pb.x, std::nullopt, o.budget);
    auto coP = compute_cohomology(chP);
    auto bf2 = strict_butterfly(pb.x, d.gx, pb.proj);
    rec.check(validate_gamma_butterfly(bf2, pb.x, d.gx), d.name + ": pullback strong gamma-butterfly");
    auto pm2 = pushforward_on_cohomology(bf2, chP, coP, ch, co, f.tr);
    rec.check(pm2.report.ok() && induced_bijective(pm2, co),
              d.name + ": pullback butterfly, H-1/H0/H1 bijective");
  }
  // the multiplication butterfly of a symmetric braided crossed module
  for (const char* name : {"z2-top/z2", "z2-top/z3", "z2-bottom/z2", "z2-pairing"}) {
    auto it = std::find_if(f.desk.begin(), f.desk.end(), [&](const auto& d) { return d.name == name; });
    if (it == f.desk.end() || !it->br) continue;
    auto mb = braided_mult_butterfly(it->gx, *it->br);
    rec.check(mb.group_report, it->name + ": multiplication butterfly, B is a group");
    rec.check(validate_gamma_butterfly(mb.bf, mb.product.x, it->gx), it->name + ": multiplication gamma-butterfly");
    rec.check(validate_braided_butterfly(mb.bf, mb.product_braiding, *it->br),
              it->name + ": multiplication butterfly is braided");
    auto scan = monoidal_scan(mb.bf, mb.product.x, mb.product_braiding, it->gx, *it->br, f.tr, 4, o.budget);
    rec.check(scan.failures == 0, it->name + ": comparison isomorphisms on " + std::to_string(scan.pairs) +
                                      " pairs, coherence up to eps on " + std::to_string(scan.arrows) +
                                      " arrow pairs, failures " + std::to_string(scan.failures));
  }
}

inline void equivalences(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  auto degree_ok = [](const InducedMaps& m, const Cohomology& src, const Cohomology& dst) {
    bool ok = m.report.ok() && induced_bijective(m, dst);
    ok = ok && src.hm1.table && src.h0.set.table;  // f_star checks homomorphisms when tables exist
    return ok;
  };
  for (const auto& d : f.desk) {
    Cochains ch(d.gx, std::nullopt, o.budget);
    auto co = compute_cohomology(ch);
    auto pb = double_pullback(d.gx);
    Cochains chP(pb.x, std::nullopt, o.budget);
    auto coP = compute_cohomology(chP);
    rec.check(is_equivalence(pb.x.x, d.gx.x, pb.proj), d.name + ": x2 pullback projection is an equivalence");
    auto fp = f_star(chP, coP, ch, co, pb.proj);
    rec.check(degree_ok(fp, coP, co), d.name + ": x2 pullback projection, H-1/H0/H1 bijective");
    auto sj = surjectify(pb.x, d.gx, pb.proj);
    rec.check(validate_gamma_xmod(sj.h_prime), d.name + ": surjectified crossed module");
    Cochains chS(sj.h_prime, std::nullopt, o.budget);
    auto coS = compute_cohomology(chS);
    auto lp = f_star(chS, coS, chP, coP, sj.p);
    auto lf = f_star(chS, coS, ch, co, sj.f_prime);
    rec.check(degree_ok(lp, coS, coP), d.name + ": surjectify leg to the source, H-1/H0/H1 bijective");
    rec.check(degree_ok(lf, coS, co), d.name + ": surjectify leg to the target, H-1/H0/H1 bijective");
  }
}

// ---------------------------------------------------------------- 10, 11

inline void long_exact(Recorder& rec, const Fixtures& f, const AcceptanceOptions& o) {
  for (const auto& d : f.desk) {
    if (d.name != "z4-double" && d.name != "z4-double-inv") continue;
    auto ps = p_short_check(d.gx, o.budget);
    rec.check(ps.first_check.ok(), d.name + ": " + ps.first.label + " is a strict short exact sequence");
    rec.check(ps.second_check.ok() && !ps.second_reading.empty(),
              d.name + ": " + ps.second.label + " is a strict short exact sequence");
    for (const auto* les : {&ps.first_les, &ps.second_les}) {
      std::string sizes;
      for (std::size_t i = 0; i < 9; ++i) sizes += (i ? "," : "") + std::to_string(les->terms[i].size());
      rec.check(les->all_exact() && les->report.ok(),
                d.name + ": " + les->label + " exact at every junction, sizes " + sizes);
    }
    rec.check(ps.intertwining, d.name + ": intertwining squares commute");
    // classical values of the outer terms
    auto kc = ker_coker(d.gx);
    auto ka = restrict_action(d.gx.act1, kc.ker.inclusion);
    auto qa = quotient_action(d.gx.act0, kc.coker);
    const auto& A = ps.first_les;
    const auto& B = ps.second_les;
    std::vector<std::pair<std::string, bool>> cmp;
    if (kc.ker.group->is_abelian()) {
      oracle::Bar bar(ka, o.budget);
      for (int n = 0; n < 3; ++n)
        cmp.push_back({"H" + std::to_string(n - 1) + "(K) = H" + std::to_string(n) + "(gamma, ker d)",
                       A.terms[3 * n].size() == bar.cohomology(n).size()});
    }
    cmp.push_back({"H0(G) of coker = coker^gamma", A.terms[5].size() == fixed_points(qa).size()});
    cmp.push_back({"H1(G) of coker = H1(gamma, coker d)", A.terms[8].size() == oracle::nonabelian_h1(qa, o.budget).size()});
    cmp.push_back({"H0([1 -> G1]) = G1^gamma", B.terms[3].size() == fixed_points(d.gx.act1).size()});
    cmp.push_back({"H0([1 -> G0]) = G0^gamma", B.terms[4].size() == fixed_points(d.gx.act0).size()});
    cmp.push_back({"H1([1 -> G1]) = H1(gamma, G1)", B.terms[6].size() == oracle::nonabelian_h1(d.gx.act1, o.budget).size()});
    cmp.push_back({"H1([1 -> G0]) = H1(gamma, G0)", B.terms[7].size() == oracle::nonabelian_h1(d.gx.act0, o.budget).size()});
    for (const auto& [what, ok] : cmp) rec.check(ok, d.name + ": " + what);
  }
}

inline void identities(Recorder& rec, const Fixtures& f, const AcceptanceOptions&) {
  for (const auto& d : f.desk) {
    if (!d.br) continue;
    auto v = validate_identities(d.gx.x, *d.br);
    rec.check(v, d.name + ": " + std::to_string(v.checked) + " checks");
  }
}

}  // namespace acceptance_detail

inline const std::vector<std::pair<int, std::string>>& acceptance_titles() {
  static const std::vector<std::pair<int, std::string>> t = {
      {1, "classical reduction, shifted degrees, [A -> 1]"},
      {2, "classical reduction, degrees 0 and 1, [1 -> G]"},
      {3, "cohomology of K1 equals the cocycle H-sets"},
      {4, "orbits are cosets of im d"},
      {5, "braided structure on [Z/2 -0-> Z/2]"},
      {6, "Z against cocycles"},
      {7, "star product"},
      {8, "pushforward along butterflies"},
      {9, "equivalences induce bijections"},
      {10, "long exact sequences"},
      {11, "braiding identities"},
      {12, "determinism"},
  };
  return t;
}

// Criteria 1-11; criterion 12 compares two rendered runs and is added by the caller.
inline AcceptanceRun run_acceptance(const AcceptanceOptions& o) {
  using namespace acceptance_detail;
  using Fn = void (*)(Recorder&, const Fixtures&, const AcceptanceOptions&);
  static const Fn fns[] = {classical_top, classical_bottom, cmg_matches, coincide, braided_structure,
                           z_against_cocycles, star_product, pushforward, equivalences, long_exact,
                           identities};
  AcceptanceRun run;
  auto want = [&](int id) { return o.only.empty() || std::count(o.only.begin(), o.only.end(), id); };
  Fixtures fx = make_fixtures(o);
  run.notes = formula_notes(fx.tr);
  for (const auto& n : fx.translation_notes) run.notes.push_back("translation search: " + n);
  for (int id = 1; id <= 11; ++id) {
    if (!want(id)) continue;
    CriterionResult r;
    r.id = id;
    r.title = acceptance_titles()[id - 1].second;
    Recorder rec(r);
    try {
      fns[id - 1](rec, fx, o);
    } catch (const BudgetError& e) {
      rec.check(false, std::string("budget exceeded: ") + e.what());
    } catch (const std::exception& e) {
      rec.check(false, std::string("error: ") + e.what());
    }
    run.results.push_back(std::move(r));
  }
  return run;
}

}  // namespace xcoh
