#pragma once

#include <string>

#include "json.hpp"

#include "acceptance.hpp"
#include "spec_io.hpp"

namespace xcoh {

using Doc = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobResult {
  Doc doc;
  int exit_code = 0;  // 0 ok, 1 verification failure
};

inline std::string render(const Doc& d) { return d.dump(2) + "\n"; }

namespace jobs_detail {

inline Doc to_doc(const ValidationReport& r) {
  Doc d;
  d["subject"] = r.subject;
  d["checks"] = r.checked;
  d["failures"] = r.total_failures;
  d["violations"] = Doc::array();
  for (const auto& v : r.violations) {
    Doc x;
    x["axiom"] = v.axiom;
    x["witness"] = v.witness;
    if (!v.detail.empty()) x["detail"] = v.detail;
    d["violations"].push_back(x);
  }
  return d;
}

inline Doc to_doc(const CohomologySet& s) {
  Doc d;
  d["size"] = s.size();
  d["elements"] = s.elements;
  if (s.table) {
    d["abelian"] = s.abelian;
    Doc rows = Doc::array();
    for (std::size_t a = 0; a < s.size(); ++a)
      rows.push_back(std::vector<Elem>(s.table->begin() + a * s.size(), s.table->begin() + (a + 1) * s.size()));
    d["table"] = rows;
  }
  return d;
}

inline Doc group_doc(const FiniteGroup& g) {
  Doc d;
  d["label"] = g.label();
  d["order"] = g.order();
  return d;
}

inline Doc header(const std::string& command, const JobSpec& js, std::uint64_t budget) {
  Doc d;
  d["command"] = command;
  Doc in;
  in["gamma"] = group_doc(js.gx.Gam());
  in["g1"] = group_doc(js.gx.G1());
  in["g0"] = group_doc(js.gx.G0());
  in["boundary"] = js.gx.x.boundary.map;
  in["braiding"] = js.br ? to_string(js.level) : "none";
  d["input"] = in;
  d["budget"] = budget;
  return d;
}

inline void require_valid(const JobSpec& js) {
  ValidationReport r;
  r.merge(validate_gamma_xmod(js.gx));
  if (js.br) r.merge(validate_gamma_braiding(js.gx, *js.br, js.level));
  if (!r.ok())
    throw InputError("input is not a valid gamma-crossed module" +
                     std::string(js.br ? " with braiding" : "") + ": " + r.violations.front().axiom +
                     " (run 'verify' for the full list)");
}

inline Doc maps_doc(const InducedMaps& m, const Cohomology& target) {
  Doc d;
  d["H-1"] = m.hm1;
  d["H0"] = m.h0;
  d["H1"] = m.h1;
  d["bijective"] = induced_bijective(m, target);
  d["report"] = to_doc(m.report);
  return d;
}

inline Doc les_doc(const LESReport& les, const StrictSES& s, const SESCheck& c) {
  Doc d;
  d["label"] = les.label;
  d["psi"] = s.psi;
  d["morphisms"] = to_doc(c.morphisms);
  d["exactness_conditions"] = to_doc(c.bullets);
  d["four_term_sequence"] = to_doc(c.sequence);
  Doc terms = Doc::array();
  for (std::size_t i = 0; i < 9; ++i) {
    Doc t;
    t["name"] = les.names[i];
    t["size"] = les.terms[i].size();
    t["elements"] = les.terms[i].elements;
    terms.push_back(t);
  }
  d["terms"] = terms;
  Doc maps = Doc::array();
  for (std::size_t i = 0; i < 8; ++i) {
    Doc m;
    m["from"] = les.names[i];
    m["to"] = les.names[i + 1];
    m["map"] = les.maps[i];
    m["exact_at_source"] = les.exact[i];
    maps.push_back(m);
  }
  d["maps"] = maps;
  d["all_exact"] = les.all_exact();
  d["report"] = to_doc(les.report);
  return d;
}

inline ZTranslation default_translation() { return {true, 1}; }

}  // namespace jobs_detail

inline JobResult run_cohomology(const JobSpec& js, std::uint64_t budget) {
  using namespace jobs_detail;
  require_valid(js);
  JobResult out{header("cohomology", js, budget), 0};
  Cochains ch(js.gx, js.br, budget);
  auto co = compute_cohomology(ch);
  out.doc["counts"] = {{"Z0", co.h0.z0.size()}, {"B0", co.h0.b0.size()}, {"Z1", co.h1.z1.size()}};
  out.doc["H-1"] = to_doc(co.hm1);
  out.doc["H0"] = to_doc(co.h0.set);
  out.doc["H1"] = to_doc(co.h1.set);
  if (!co.h1.note.empty()) out.doc["H1"]["note"] = co.h1.note;
  out.doc["notes"] = formula_notes(default_translation());
  return out;
}

inline JobResult run_verify(const JobSpec& js, std::uint64_t budget) {
  using namespace jobs_detail;
  JobResult out{header("verify", js, budget), 0};
  Doc suites = Doc::array();
  bool ok = true;
  auto add = [&](const ValidationReport& r) {
    suites.push_back(to_doc(r));
    ok = ok && r.ok();
  };
  add(validate_group(js.gx.Gam()));
  add(validate_group(js.gx.G1()));
  add(validate_group(js.gx.G0()));
  add(validate_hom(js.gx.x.boundary));
  add(validate_action(js.gx.x.action));
  add(validate_action(js.gx.act1));
  add(validate_action(js.gx.act0));
  if (ok) add(validate_crossed_module(js.gx.x));
  if (ok) add(validate_gamma_xmod(js.gx));
  if (ok && js.br) {
    add(validate_gamma_braiding(js.gx, *js.br, js.level));
    add(validate_identities(js.gx.x, *js.br));
  }
  std::vector<std::string> skipped;
  if (ok) {
    Cochains ch(js.gx, js.br, budget);
    auto co = compute_cohomology(ch);
    auto k = build_k1(ch, co.h1);
    add(validate_cmg(k));
    add(validate_two_groupoid(two_groupoid_of(k, budget)));
    if (js.br) {
      add(verify_coincide(ch, co.h1));
      add(verify_z1_group(ch, co.h1));
      auto kb = build_k1_braided(ch, co.h1);
      add(validate_two_crossed_module(kb.tcm));
      if (validate_braiding(js.gx.x, *js.br, BraidingLevel::Symmetric).ok())
        add(validate_braided_2cm(kb.tcm, z1_top_bracket(ch, co.h1)));
      else
        skipped.push_back("braided 2-crossed module criterion: the bracket is not symmetric");
    } else {
      skipped.push_back("braided suites: no bracket given");
    }
  } else {
    skipped.push_back("cocycle suites: the input failed the basic axioms");
  }
  out.doc["suites"] = suites;
  out.doc["skipped"] = skipped;
  Doc all = Doc::array();
  for (const auto& s : suites)
    for (const auto& v : s["violations"]) {
      Doc x = v;
      x["suite"] = s["subject"];
      all.push_back(x);
    }
  out.doc["violations"] = all;
  out.doc["ok"] = ok;
  out.exit_code = ok ? 0 : 1;
  return out;
}

inline JobResult run_butterfly(const JobSpec& js, std::uint64_t budget) {
  using namespace jobs_detail;
  require_valid(js);
  JobResult out{header("butterfly", js, budget), 0};
  bool ok = true;
  Cochains ch(js.gx, js.br, budget);
  auto co = compute_cohomology(ch);
  TranslationSearch ts;
  search_translation(ts, ch, co.h1.z1);
  finish_translation(ts, default_translation());
  if (!ts.chosen) throw PreconditionError("no cocycle translation is valid on this input");
  const ZTranslation tr = *ts.chosen;
  out.doc["notes"] = formula_notes(tr);
  out.doc["translation_search"] = ts.notes;

  auto zc = verify_z_against_cocycles(ch, co, tr);
  ok = ok && zc.report.ok();
  out.doc["z"] = {{"objects", zc.objects},      {"H1_classes", zc.classes_h1}, {"base_self_arrows", zc.arrows_base},
                  {"H0_classes", zc.classes_h0}, {"H-1", zc.h_minus1},       {"report", to_doc(zc.report)}};

  if (js.br) {
    const auto& br = *js.br;
    const std::size_t n = co.h1.reps.size();
    std::vector<ZObject> reps;
    for (Elem r : co.h1.reps) reps.push_back(zobject_from_cocycle(ch, co.h1.z1[r], tr));
    Doc table = Doc::array();
    bool agrees = co.h1.set.table.has_value();
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> row;
      for (Elem b = 0; b < n; ++b) {
        auto S = star_objects(js.gx, br, reps[a], reps[b]);
        Elem c = S.report.ok() ? co.h1.class_of(cocycle_from_zobject(ch, S.obj, tr)) : kNone;
        row.push_back(c);
        agrees = agrees && c == co.h1.set.mul(a, b);
      }
      table.push_back(row);
    }
    ok = ok && agrees;
    out.doc["star_product"] = {{"table", table}, {"agrees_with_H1", agrees}};
  } else {
    out.doc["star_product"] = "no bracket given";
  }

  auto push_doc = [&](const Butterfly& bf, const GammaCrossedModule& src, const std::optional<Braiding>& bsrc) {
    Cochains chS(src, bsrc, budget);
    auto coS = compute_cohomology(chS);
    auto m = pushforward_on_cohomology(bf, chS, coS, ch, co, tr);
    ok = ok && m.report.ok() && induced_bijective(m, co);
    return maps_doc(m, co);
  };
  auto bf_id = strict_butterfly(js.gx, js.gx, identity_morphism(js.gx.x));
  Doc push;
  push["identity"] = push_doc(bf_id, js.gx, js.br);
  auto pb = double_pullback(js.gx);
  auto bf_pb = strict_butterfly(pb.x, js.gx, pb.proj);
  std::optional<Braiding> pbr;
  if (js.br) pbr = pullback_braiding(pb, *js.br);
  push["pullback_x2"] = push_doc(bf_pb, pb.x, pbr);
  out.doc["pushforward"] = push;

  if (js.br && js.level != BraidingLevel::Braided) {
    auto mb = braided_mult_butterfly(js.gx, *js.br);
    auto braided = validate_braided_butterfly(mb.bf, mb.product_braiding, *js.br);
    ok = ok && mb.group_report.ok() && braided.ok();
    out.doc["multiplication_butterfly"] = {{"group", to_doc(mb.group_report)}, {"braided", to_doc(braided)}};
  }
  out.doc["ok"] = ok;
  out.exit_code = ok ? 0 : 1;
  return out;
}

inline JobResult run_les(const JobSpec& js, std::uint64_t budget) {
  using namespace jobs_detail;
  require_valid(js);
  JobResult out{header("les", js, budget), 0};
  auto ps = p_short_check(js.gx, budget);
  out.doc["notes"] = formula_notes(default_translation());
  out.doc["ker_coker"] = les_doc(ps.first_les, ps.first, ps.first_check);
  if (!ps.second_reading.empty())
    out.doc["group_sequence"] = les_doc(ps.second_les, ps.second, ps.second_check);
  out.doc["group_sequence_reading"] = ps.second_reading;
  out.doc["rejected_readings"] = ps.rejected_readings;
  out.doc["intertwining"] = to_doc(ps.intertwining);
  out.doc["ok"] = ps.ok();
  out.exit_code = ps.ok() ? 0 : 1;
  return out;
}

inline Doc acceptance_doc(const AcceptanceRun& run) {
  Doc d;
  d["command"] = "selftest";
  Doc crit = Doc::array();
  for (const auto& r : run.results) {
    Doc c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["verdict"] = r.pass ? "PASS" : "FAIL";
    c["details"] = r.details;
    crit.push_back(c);
  }
  d["criteria"] = crit;
  d["notes"] = run.notes;
  d["ok"] = run.ok();
  return d;
}

// Criteria 1-11, then 12 by rendering a second run and comparing bytes.
inline AcceptanceRun run_selftest(const AcceptanceOptions& o) {
  auto first = run_acceptance(o);
  auto second = run_acceptance(o);
  const bool same = render(acceptance_doc(first)) == render(acceptance_doc(second));
  CriterionResult r;
  r.id = 12;
  r.title = acceptance_titles()[11].second;
  r.pass = same;
  r.details.push_back(std::string(same ? "ok   " : "FAIL ") + "two runs render byte-identical reports");
  first.results.push_back(std::move(r));
  return first;
}

inline JobResult run_job(const std::string& command, const JobSpec& js, std::uint64_t budget) {
  if (command == "cohomology") return run_cohomology(js, budget);
  if (command == "verify") return run_verify(js, budget);
  if (command == "butterfly") return run_butterfly(js, budget);
  if (command == "les") return run_les(js, budget);
  throw InputError("unknown command '" + command + "'");
}

}  // namespace xcoh
