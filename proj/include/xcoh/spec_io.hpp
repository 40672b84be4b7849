#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace xcoh {

// Line-oriented job specification:
//
//   [groups]            name = cyclic n | product a b | semidirect n h k | table (rows follow)
//   [xmod]              g1 = name, g0 = name, boundary = trivial | identity | images...,
//                       action = trivial | conjugation | table
//   [gamma]             group = name, act1 / act0 = trivial | inversion | generator images... | table
//   [braiding]          bracket = trivial | commutator | table, level = braided | symmetric | picard
//   [job]               budget = N, command = cohomology | verify | butterfly | les, out = path
//
// '#' starts a comment. A "table" value takes the following lines of integers as rows.
struct ParseError : std::runtime_error {
  std::size_t line, column;
  ParseError(std::size_t l, std::size_t c, const std::string& msg)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

struct JobSpec {
  std::map<std::string, GroupPtr> groups;
  GammaCrossedModule gx;
  std::optional<Braiding> br;
  BraidingLevel level = BraidingLevel::Braided;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> command, out;
};

namespace spec_detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Entry {
  std::string section, key;
  std::vector<Token> value;
  std::vector<std::vector<Elem>> rows;
  std::size_t line = 0;
  std::vector<std::size_t> row_lines;
};

inline std::vector<Token> tokenize(const std::string& s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), offset + i + 1});
    i = j;
  }
  return out;
}

inline std::optional<Elem> to_int(const std::string& s) {
  Elem v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

inline Elem need_int(const Token& t, std::size_t line) {
  auto v = to_int(t.text);
  if (!v) throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return *v;
}

inline std::vector<Entry> read_entries(std::istream& in) {
  std::vector<Entry> out;
  std::string raw, section;
  std::size_t lineno = 0;
  bool in_table = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw.substr(0, raw.find('#'));
    auto toks = tokenize(s, 0);
    if (toks.empty()) continue;
    if (in_table && std::all_of(toks.begin(), toks.end(), [](const Token& t) { return to_int(t.text).has_value(); })) {
      std::vector<Elem> row;
      for (const auto& t : toks) row.push_back(*to_int(t.text));
      out.back().rows.push_back(std::move(row));
      out.back().row_lines.push_back(lineno);
      continue;
    }
    in_table = false;
    if (toks[0].text.front() == '[') {
      if (toks.size() != 1 || toks[0].text.back() != ']' || toks[0].text.size() < 3)
        throw ParseError(lineno, toks[0].column, "malformed section header");
      section = toks[0].text.substr(1, toks[0].text.size() - 2);
      static const char* known[] = {"groups", "xmod", "gamma", "braiding", "job"};
      if (std::find(std::begin(known), std::end(known), section) == std::end(known))
        throw ParseError(lineno, toks[0].column, "unknown section '" + section + "'");
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, toks[0].column, "expected 'key = value'");
    if (section.empty()) throw ParseError(lineno, toks[0].column, "entry outside of a section");
    auto key = tokenize(s.substr(0, eq), 0);
    if (key.size() != 1) throw ParseError(lineno, toks[0].column, "expected a single key before '='");
    Entry e{section, key[0].text, tokenize(s.substr(eq + 1), eq + 1), {}, lineno, {}};
    if (e.value.empty()) throw ParseError(lineno, eq + 2, "missing value");
    for (const auto& prev : out)
      if (prev.section == e.section && prev.key == e.key)
        throw ParseError(lineno, key[0].column, "duplicate key '" + e.key + "' in [" + section + "]");
    in_table = e.value.size() == 1 && e.value[0].text == "table";
    out.push_back(std::move(e));
  }
  return out;
}

class Builder {
 public:
  explicit Builder(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  JobSpec build() {
    JobSpec js;
    for (const auto& e : entries_) check_known(e);
    for (const auto& e : entries_)
      if (e.section == "groups") js.groups[e.key] = build_group(e, js);
    const auto& g1e = need("xmod", "g1");
    const auto& g0e = need("xmod", "g0");
    auto g1 = group_ref(js, g1e, 0);
    auto g0 = group_ref(js, g0e, 0);
    CrossedModule x;
    x.g1 = g1;
    x.g0 = g0;
    x.label = "[" + g1->label() + "->" + g0->label() + "]";
    x.boundary = boundary(need("xmod", "boundary"), g1, g0);
    x.action = xmod_action(need("xmod", "action"), g1, g0);
    GroupPtr gamma = make_cyclic(1);
    if (auto* ge = find("gamma", "group")) gamma = group_ref(js, *ge, 0);
    js.gx = {x, gamma, gamma_action(find("gamma", "act1"), gamma, g1),
             gamma_action(find("gamma", "act0"), gamma, g0)};
    if (auto* be = find("braiding", "bracket")) js.br = bracket(*be, g1, g0);
    if (auto* le = find("braiding", "level")) {
      const auto& v = le->value[0].text;
      if (v == "braided") js.level = BraidingLevel::Braided;
      else if (v == "symmetric") js.level = BraidingLevel::Symmetric;
      else if (v == "picard") js.level = BraidingLevel::Picard;
      else throw ParseError(le->line, le->value[0].column, "level must be braided, symmetric or picard");
      if (!js.br) throw ParseError(le->line, 1, "level given without a bracket");
    }
    if (auto* b = find("job", "budget")) js.budget = need_int(b->value[0], b->line);
    if (auto* c = find("job", "command")) js.command = single(*c);
    if (auto* o = find("job", "out")) js.out = single(*o);
    return js;
  }

 private:
  const Entry* find(const std::string& sec, const std::string& key) const {
    for (const auto& e : entries_)
      if (e.section == sec && e.key == key) return &e;
    return nullptr;
  }
  const Entry& need(const std::string& sec, const std::string& key) const {
    if (auto* e = find(sec, key)) return *e;
    throw ParseError(0, 0, "missing '" + key + "' in [" + sec + "]");
  }

  static std::string single(const Entry& e) {
    if (e.value.size() != 1) throw ParseError(e.line, 1, "'" + e.key + "' takes one word");
    return e.value[0].text;
  }

  static void check_known(const Entry& e) {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"xmod", {"g1", "g0", "boundary", "action"}},
        {"gamma", {"group", "act1", "act0"}},
        {"braiding", {"bracket", "level"}},
        {"job", {"budget", "command", "out"}},
    };
    auto it = keys.find(e.section);
    if (it == keys.end()) return;
    if (std::find(it->second.begin(), it->second.end(), e.key) == it->second.end())
      throw ParseError(e.line, 1, "unknown key '" + e.key + "' in [" + e.section + "]");
  }

  static GroupPtr group_ref(const JobSpec& js, const Entry& e, std::size_t idx) {
    if (idx >= e.value.size()) throw ParseError(e.line, 1, "missing group name");
    const auto& t = e.value[idx];
    auto it = js.groups.find(t.text);
    if (it == js.groups.end()) throw ParseError(e.line, t.column, "unknown group '" + t.text + "'");
    return it->second;
  }

  static std::vector<Elem> table_of(const Entry& e, std::size_t rows, std::size_t cols, std::size_t range) {
    if (e.rows.size() != rows)
      throw ParseError(e.line, e.value[0].column,
                       "table needs " + std::to_string(rows) + " rows, found " + std::to_string(e.rows.size()));
    std::vector<Elem> t;
    for (std::size_t r = 0; r < rows; ++r) {
      if (e.rows[r].size() != cols)
        throw ParseError(e.row_lines[r], 1, "row needs " + std::to_string(cols) + " entries");
      for (Elem v : e.rows[r]) {
        if (v >= range) throw ParseError(e.row_lines[r], 1, "entry " + std::to_string(v) + " out of range");
        t.push_back(v);
      }
    }
    return t;
  }

  static std::vector<Elem> images(const Entry& e, std::size_t from, std::size_t n, std::size_t range) {
    if (e.value.size() - from != n)
      throw ParseError(e.line, e.value[0].column, "expected " + std::to_string(n) + " images");
    std::vector<Elem> m;
    for (std::size_t i = from; i < e.value.size(); ++i) {
      Elem v = need_int(e.value[i], e.line);
      if (v >= range) throw ParseError(e.line, e.value[i].column, "image out of range");
      m.push_back(v);
    }
    return m;
  }

  GroupPtr build_group(const Entry& e, const JobSpec& js) const {
    const auto& v = e.value;
    const std::string& kind = v[0].text;
    auto arity = [&](std::size_t n) {
      if (v.size() != n + 1)
        throw ParseError(e.line, v[0].column, "'" + kind + "' takes " + std::to_string(n) + " arguments");
    };
    try {
      if (kind == "cyclic") {
        arity(1);
        Elem n = need_int(v[1], e.line);
        if (n == 0) throw ParseError(e.line, v[1].column, "cyclic order must be positive");
        return make_cyclic(n);
      }
      if (kind == "product") {
        arity(2);
        return direct_product(group_ref(js, e, 1), group_ref(js, e, 2)).group;
      }
      if (kind == "semidirect") {
        arity(3);
        Elem n = need_int(v[1], e.line), h = need_int(v[2], e.line), k = need_int(v[3], e.line);
        if (n == 0 || h == 0) throw ParseError(e.line, v[1].column, "orders must be positive");
        auto N = make_cyclic(n), H = make_cyclic(h);
        std::vector<Elem> phi(n);
        for (Elem x = 0; x < n; ++x) phi[x] = static_cast<Elem>((std::uint64_t(k) * x) % n);
        auto act = cyclic_action(H, N, phi);
        if (!validate_action(act).ok())
          throw ParseError(e.line, v[3].column, "x -> kx is not an automorphism of Z/n");
        return make_semidirect(N, H, act).group;
      }
      if (kind == "table") {
        const std::size_t n = e.rows.size();
        if (n == 0) throw ParseError(e.line, v[0].column, "empty group table");
        auto g = make_group(e.key, n, table_of(e, n, n, n));
        auto r = validate_group(*g);
        if (!r.ok()) throw ParseError(e.line, v[0].column, "not a group: " + r.violations.front().axiom);
        return g;
      }
    } catch (const PreconditionError& ex) {
      throw ParseError(e.line, v[0].column, ex.what());
    } catch (const InvalidGroupError& ex) {
      throw ParseError(e.line, v[0].column, ex.what());
    }
    throw ParseError(e.line, v[0].column, "unknown constructor '" + kind + "'");
  }

  static GroupHom boundary(const Entry& e, const GroupPtr& g1, const GroupPtr& g0) {
    const auto& w = e.value[0].text;
    if (w == "trivial") return trivial_hom(g1, g0);
    if (w == "identity") {
      if (g1 != g0) throw ParseError(e.line, e.value[0].column, "identity boundary needs g1 = g0");
      return identity_hom(g1);
    }
    return {g1, g0, images(e, 0, g1->order(), g0->order())};
  }

  static GroupAction xmod_action(const Entry& e, const GroupPtr& g1, const GroupPtr& g0) {
    const auto& w = e.value[0].text;
    if (w == "trivial") return trivial_action(g0, g1, Side::Right);
    if (w == "conjugation") {
      if (g1 != g0) throw ParseError(e.line, e.value[0].column, "conjugation action needs g1 = g0");
      return conjugation_action(g1);
    }
    if (w == "table") return {g0, g1, Side::Right, table_of(e, g0->order(), g1->order(), g1->order())};
    throw ParseError(e.line, e.value[0].column, "action must be trivial, conjugation or table");
  }

  static GroupAction gamma_action(const Entry* e, const GroupPtr& gamma, const GroupPtr& g) {
    if (!e) return trivial_action(gamma, g, Side::Left);
    const auto& w = e->value[0].text;
    try {
      if (w == "trivial") return trivial_action(gamma, g, Side::Left);
      if (w == "inversion") {
        if (!g->is_abelian()) throw ParseError(e->line, e->value[0].column, "inversion needs an abelian group");
        return cyclic_action(gamma, g, inversion_map(*g));
      }
      if (w == "generator") return cyclic_action(gamma, g, images(*e, 1, g->order(), g->order()));
    } catch (const PreconditionError& ex) {
      throw ParseError(e->line, e->value[0].column, ex.what());
    }
    if (w == "table") return {gamma, g, Side::Left, table_of(*e, gamma->order(), g->order(), g->order())};
    throw ParseError(e->line, e->value[0].column, "action must be trivial, inversion, generator or table");
  }

  static Braiding bracket(const Entry& e, const GroupPtr& g1, const GroupPtr& g0) {
    const auto& w = e.value[0].text;
    const std::size_t n = g0->order();
    if (w == "trivial") return {n, std::vector<Elem>(n * n, 0)};
    if (w == "commutator") {
      if (g1 != g0) throw ParseError(e.line, e.value[0].column, "commutator bracket needs g1 = g0");
      Braiding b{n, std::vector<Elem>(n * n)};
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) b.table[x * n + y] = g0->commutator(x, y);
      return b;
    }
    if (w == "table") return {n, table_of(e, n, n, g1->order())};
    throw ParseError(e.line, e.value[0].column, "bracket must be trivial, commutator or table");
  }

  std::vector<Entry> entries_;
};

}  // namespace spec_detail

inline JobSpec parse_spec(std::istream& in) {
  return spec_detail::Builder(spec_detail::read_entries(in)).build();
}

inline JobSpec parse_spec_string(const std::string& text) {
  std::istringstream in(text);
  return parse_spec(in);
}

}  // namespace xcoh
