#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "cht/abelian.hpp"
#include "cht/io.hpp"
#include "cht/nerve.hpp"
#include "cht/paths.hpp"
#include "cht/presentation.hpp"
#include "cht/spaces.hpp"
#include "cht/tietze.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"
#include "cht/vankampen.hpp"
#include "cht/words.hpp"

namespace cht {

/// Exit codes shared by every subcommand. Inconclusive is distinct from
/// failure so callers can separate bounded-search timeouts from mismatches.
enum CliExit : int {
  kCliOk = 0,
  kCliInputError = 1,
  kCliInconclusive = 2,
  kCliFailure = 3,
};

namespace detail {

inline int exit_for_verdict(const std::string& v) {
  if (v == "pass") return kCliOk;
  if (v == "inconclusive") return kCliInconclusive;
  return kCliFailure;
}

/// Reports go to --out when given, stdout otherwise.
inline void deliver(const std::string& text, const std::string& out_path,
                    std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline const char* yn(bool b) { return b ? "yes" : "no"; }

inline std::vector<Rational> parse_eps_list(const std::string& text) {
  std::vector<Rational> eps;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string item = comma == std::string::npos
                           ? text.substr(pos)
                           : text.substr(pos, comma - pos);
    eps.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return eps;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string torsion_str(const AbelianInvariants& a) {
  if (a.torsion.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < a.torsion.size(); ++i)
    s += (i ? "," : "") + std::to_string(a.torsion[i]);
  return s;
}

/// Relator words are emitted only below the vertex threshold; counts always.
inline Json group_json(const GroupPresentation& g, bool full) {
  Json j{{"n_gens", g.n_gens}, {"n_relators", (int)g.relators.size()}};
  if (full) {
    Json rels = Json::array();
    for (const auto& r : g.relators) rels.push_back(letters_to_json(r));
    j["relators"] = rels;
  }
  return j;
}

inline Json pres_json(const Presentation& p, bool full) {
  if (full) return presentation_to_json(p);
  return Json{
      {"kind", p.kind == PresKind::kGroupoid ? "groupoid" : "category"},
      {"n_objects", p.n_objects},
      {"n_gens", (int)p.gens.size()},
      {"n_relations", (int)p.relations.size()}};
}

struct OutputOpts {
  std::string format = "text";
  std::string out_path;
};

struct Bounds {
  int max_len = 4;
  long long budget = 4000000;
};

/// Either a positional spec or a --file trunc document, never both.
inline std::variant<TruncSymSet, TruncDirSet> load_trunc_space(
    const std::string& spec, const std::string& file) {
  require(spec.empty() != file.empty(),
          "give exactly one of a space spec or --file");
  if (!spec.empty()) {
    BuiltSpace s = build_space(spec);
    if (is_directed(s)) return to_dir_trunc(s);
    return to_sym_trunc(s);
  }
  Json j = Json::parse(read_file(file));
  if (j.value("directed", false)) return dir_trunc_from_json(j);
  return sym_trunc_from_json(j);
}

inline int cmd_catalog(const std::string& spec, const OutputOpts& o,
                       std::ostream& out) {
  if (spec.empty()) {
    std::string text;
    if (o.format == "json") {
      Json names = Json::array();
      for (const std::string& n : space_catalog()) names.push_back(n);
      text = dump_json(Json{{"command", "catalog"}, {"specs", names}});
    } else {
      for (const std::string& n : space_catalog()) text += n + "\n";
    }
    deliver(text, o.out_path, out);
    return kCliOk;
  }
  auto space = load_trunc_space(spec, "");
  bool directed = std::holds_alternative<TruncDirSet>(space);
  int vertices, edges, triangles;
  Json doc;
  if (directed) {
    const TruncDirSet& t = std::get<TruncDirSet>(space);
    vertices = t.n_vertices();
    edges = (int)t.edges().size();
    triangles = (int)t.triangles().size();
    doc = trunc_to_json(t);
  } else {
    const TruncSymSet& t = std::get<TruncSymSet>(space);
    vertices = t.n_vertices();
    edges = (int)(t.edges().size() / 2);
    triangles = (int)t.triangles().size();
    doc = trunc_to_json(t);
  }
  std::string text;
  if (o.format == "json") {
    text = dump_json(Json{{"command", "catalog"}, {"spec", spec},
                          {"space", doc}});
  } else {
    std::ostringstream os;
    os << "spec " << spec << "\ndirected " << yn(directed) << "\nvertices "
       << vertices << "\nedges " << edges << "\ntriangles " << triangles
       << "\n";
    text = os.str();
  }
  deliver(text, o.out_path, out);
  return kCliOk;
}

inline int invariants_sym(const TruncSymSet& t, const std::string& label,
                          int base, int pres_threshold, const OutputOpts& o,
                          std::ostream& out) {
  Pi0 comps = pi0(t);
  Json j{{"command", "invariants"}, {"directed", false}, {"space", label},
         {"vertices", t.n_vertices()},
         {"edges", (int)(t.edges().size() / 2)},
         {"triangles", (int)t.triangles().size()},
         {"components", comps.count}};
  std::ostringstream text;
  text << "directed no\nspace " << label << "\nvertices " << t.n_vertices()
       << "\nedges " << t.edges().size() / 2 << "\ntriangles "
       << t.triangles().size() << "\ncomponents " << comps.count << "\n";
  if (t.n_vertices() > 0) {
    int b = base >= 0 ? base : 0;
    require(b < t.n_vertices(), "base vertex out of range");
    EdgePresentation ep = edge_path_groupoid(t);
    GroupPresentation g = vertex_group(ep.pres, b);
    GroupPresentation s = tietze_simplify(g);
    AbelianInvariants inv = abelianize(s);
    bool full = t.n_vertices() <= pres_threshold;
    j["base"] = b;
    j["group"] = group_json(g, full);
    j["simplified"] = group_json(s, full);
    j["h1"] = invariants_to_json(inv);
    text << "base " << b << "\ngroup generators " << g.n_gens << " relators "
         << g.relators.size() << "\nsimplified generators " << s.n_gens
         << " relators " << s.relators.size() << "\nh1 rank " << inv.rank
         << "\nh1 torsion " << torsion_str(inv) << "\n";
  }
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return kCliOk;
}

inline int invariants_dir(const TruncDirSet& t, const std::string& label,
                          int pres_threshold, const Bounds& b,
                          const OutputOpts& o, std::ostream& out) {
  Pi0 comps = pi0(t);
  EdgePresentation ep = fundamental_category(t);
  bool full = t.n_vertices() <= pres_threshold;
  Json j{{"command", "invariants"}, {"directed", true}, {"space", label},
         {"vertices", t.n_vertices()},
         {"edges", (int)t.edges().size()},
         {"triangles", (int)t.triangles().size()},
         {"components", comps.count},
         {"presentation", pres_json(ep.pres, full)}};
  std::ostringstream text;
  text << "directed yes\nspace " << label << "\nvertices " << t.n_vertices()
       << "\nedges " << t.edges().size() << "\ntriangles "
       << t.triangles().size() << "\ncomponents " << comps.count << "\n";
  bool all_saturated = true;
  if (full) {
    WordEngine eng(ep.pres, b.max_len, (std::size_t)b.budget);
    Json homs = Json::array();
    text << "hom table (max_len " << b.max_len << ")\n";
    for (int x = 0; x < t.n_vertices(); ++x)
      for (int y = 0; y < t.n_vertices(); ++y) {
        bool sat = eng.saturated(x, y);
        int count = eng.hom_count(x, y);
        all_saturated = all_saturated && sat;
        homs.push_back({{"src", x}, {"dst", y}, {"count", count},
                        {"saturated", sat}});
        text << "hom " << x << " " << y << " count " << count
             << " saturated " << yn(sat) << "\n";
      }
    j["hom"] = homs;
  } else {
    text << "hom table suppressed above " << pres_threshold << " vertices\n";
  }
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return all_saturated ? kCliOk : kCliInconclusive;
}

inline int cmd_invariants(const std::string& spec, const std::string& file,
                          int base, int pres_threshold, const Bounds& b,
                          const OutputOpts& o, std::ostream& out) {
  auto space = load_trunc_space(spec, file);
  std::string label = spec.empty() ? file : spec;
  if (std::holds_alternative<TruncDirSet>(space))
    return invariants_dir(std::get<TruncDirSet>(space), label, pres_threshold,
                          b, o, out);
  return invariants_sym(std::get<TruncSymSet>(space), label, base,
                        pres_threshold, o, out);
}

inline int cmd_adjunction(const std::string& file, int max_len,
                          const OutputOpts& o, std::ostream& out) {
  Json doc = Json::parse(read_file(file));
  std::string kind = doc.value("kind", "");
  AdjunctionReport rep;
  int objects = 0, arrows = 0;
  if (kind == "groupoid") {
    FiniteGroupoid g = groupoid_from_json(doc);
    objects = g.n_objects;
    arrows = g.n_arrows();
    rep = counit_check(g, max_len);
  } else if (kind == "category") {
    FiniteCategory c = category_from_json(doc);
    objects = c.n_objects;
    arrows = c.n_arrows();
    rep = dir_counit_check(c, max_len);
  } else {
    throw input_error("file is neither a groupoid nor a category document");
  }
  Json j{{"command", "adjunction"}, {"kind", kind}, {"objects", objects},
         {"arrows", arrows}, {"verdict", rep.verdict()},
         {"saturated", rep.saturated}, {"sizes_ok", rep.sizes_ok},
         {"injective_ok", rep.injective_ok}, {"table_ok", rep.table_ok},
         {"mismatches", rep.mismatches}};
  std::ostringstream text;
  text << "kind " << kind << "\nobjects " << objects << "\narrows " << arrows
       << "\nverdict " << rep.verdict() << "\nsaturated " << yn(rep.saturated)
       << "\nsizes_ok " << yn(rep.sizes_ok) << "\ninjective_ok "
       << yn(rep.injective_ok) << "\ntable_ok " << yn(rep.table_ok) << "\n";
  for (const std::string& m : rep.mismatches) text << "mismatch " << m << "\n";
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return exit_for_verdict(rep.verdict());
}

inline int cmd_vankampen(const std::string& file, int max_len,
                         const OutputOpts& o, std::ostream& out) {
  Json doc = Json::parse(read_file(file));
  bool directed = span_json_directed(doc);
  VanKampenReport rep;
  if (directed) {
    DirSpanDoc s = dir_span_from_json(doc);
    rep = vankampen_check(s.crown, s.left, s.right, s.to_left, s.to_right,
                          max_len);
  } else {
    SymSpanDoc s = sym_span_from_json(doc);
    rep = vankampen_check(s.crown, s.left, s.right, s.to_left, s.to_right,
                          max_len);
  }
  Json j{{"command", "vankampen"}, {"directed", directed},
         {"verdict", rep.verdict()}, {"saturated", rep.saturated},
         {"certified", rep.certified}, {"invariants_ok", rep.invariants_ok},
         {"hom_ok", rep.hom_ok}, {"mismatches", rep.mismatches}};
  if (!rep.direct_h1.empty()) {
    Json dh = Json::array(), gh = Json::array();
    for (const AbelianInvariants& a : rep.direct_h1)
      dh.push_back(invariants_to_json(a));
    for (const AbelianInvariants& a : rep.glued_h1)
      gh.push_back(invariants_to_json(a));
    j["direct_h1"] = dh;
    j["glued_h1"] = gh;
  }
  std::ostringstream text;
  text << "directed " << yn(directed) << "\nverdict " << rep.verdict()
       << "\nsaturated " << yn(rep.saturated) << "\ncertified "
       << yn(rep.certified) << "\ninvariants_ok " << yn(rep.invariants_ok)
       << "\nhom_ok " << yn(rep.hom_ok) << "\n";
  for (std::size_t v = 0; v < rep.direct_h1.size(); ++v)
    text << "vertex " << v << " h1 direct rank " << rep.direct_h1[v].rank
         << " torsion " << torsion_str(rep.direct_h1[v]) << " glued rank "
         << rep.glued_h1[v].rank << " torsion "
         << torsion_str(rep.glued_h1[v]) << "\n";
  for (const std::string& m : rep.mismatches) text << "mismatch " << m << "\n";
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return exit_for_verdict(rep.verdict());
}

inline int cmd_sweep(const std::string& file, const std::string& input_format,
                     const std::string& metric, const std::string& threshold,
                     const std::string& eps_csv, const std::string& step_rule,
                     int base, const Bounds& b, const OutputOpts& o,
                     std::ostream& out) {
  std::string fmt = input_format;
  if (fmt.empty()) {
    std::size_t slash = file.find_last_of("/\\");
    std::size_t dot = file.rfind('.');
    bool in_name = dot != std::string::npos && dot + 1 < file.size() &&
                   (slash == std::string::npos || dot > slash);
    require(in_name,
            "cannot deduce the input format of '" + file + "'; pass --input");
    fmt = file.substr(dot + 1);
  }
  LoadOptions lo;
  lo.threshold = parse_rational(threshold);
  lo.metric = metric_from_name(metric);
  PointCloud cloud = load_points(file, fmt, lo);
  std::vector<Rational> eps = parse_eps_list(eps_csv);
  SweepOptions so;
  so.base = base;
  so.max_len = b.max_len;
  so.budget = b.budget;
  InvariantReport rep;
  if (step_rule.empty()) {
    rep = eps_sweep(cloud, eps, so);
  } else {
    StepMetricSpace s;
    s.cloud = std::move(cloud);
    s.rule = step_rule_from_name(step_rule);
    require(s.rule != StepRule::kPairList,
            "the pairs rule needs an explicit pair list; use coords or "
            "intensity");
    s.validate();
    rep = eps_sweep(s, eps, so);
  }
  std::string text;
  if (o.format == "json") {
    Json j = report_to_json(rep);
    j["command"] = "sweep";
    text = dump_json(j);
  } else {
    text = report_to_text(rep);
  }
  deliver(text, o.out_path, out);
  if (rep.directed)
    for (const InvariantRow& row : rep.rows)
      if (!row.loops_saturated) return kCliInconclusive;
  return kCliOk;
}

inline int normalize_sym(const TruncSymSet& t, const Json& pj,
                         const OutputOpts& o, std::ostream& out) {
  PathSeq<TruncSymSet> p = path_from_json(t, pj);
  PathSeq<TruncSymSet> nf = delay_normal_form(p);
  PathSeq<TruncSymSet> snf = strong_normal_form(p);
  Json j{{"command", "normalize"}, {"directed", false},
         {"input", path_to_json(p)}, {"normal_form", path_to_json(nf)},
         {"strong_normal_form", path_to_json(snf)}};
  std::ostringstream text;
  text << "directed no\ninput start " << p.start << " edges ["
       << join_ints(p.edges) << "]\nnormal_form start " << nf.start
       << " edges [" << join_ints(nf.edges) << "]\nstrong_normal_form start "
       << snf.start << " edges [" << join_ints(snf.edges) << "]\n";
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return kCliOk;
}

inline int normalize_dir(const TruncDirSet& t, const Json& pj,
                         const OutputOpts& o, std::ostream& out) {
  PathSeq<TruncDirSet> p = path_from_json(t, pj);
  PathSeq<TruncDirSet> nf = delay_normal_form(p);
  Json j{{"command", "normalize"}, {"directed", true},
         {"input", path_to_json(p)}, {"normal_form", path_to_json(nf)}};
  std::ostringstream text;
  text << "directed yes\ninput start " << p.start << " edges ["
       << join_ints(p.edges) << "]\nnormal_form start " << nf.start
       << " edges [" << join_ints(nf.edges) << "]\n";
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return kCliOk;
}

inline int cmd_normalize(const std::string& file, const OutputOpts& o,
                         std::ostream& out) {
  Json doc = Json::parse(read_file(file));
  require(doc.contains("space") && doc.contains("path"),
          "normalize needs a document with space and path fields");
  const Json& sp = doc.at("space");
  if (sp.is_string()) {
    BuiltSpace s = build_space(sp.get<std::string>());
    if (is_directed(s))
      return normalize_dir(to_dir_trunc(s), doc.at("path"), o, out);
    return normalize_sym(to_sym_trunc(s), doc.at("path"), o, out);
  }
  if (sp.value("directed", false))
    return normalize_dir(dir_trunc_from_json(sp), doc.at("path"), o, out);
  return normalize_sym(sym_trunc_from_json(sp), doc.at("path"), o, out);
}

inline int cmd_oracle(const std::string& spec, int pairs_cap, long long seed,
                      const Bounds& b, const OutputOpts& o,
                      std::ostream& out) {
  auto space = load_trunc_space(spec, "");
  Json rows = Json::array();
  std::ostringstream text;
  bool any_incomparable = false, any_mismatch = false;
  auto run = [&](const auto& t, const Presentation& pres) {
    int n = t.n_vertices();
    std::vector<std::pair<int, int>> all;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) all.push_back({x, y});
    if ((int)all.size() > pairs_cap) {
      // Seeded subsample for large spaces; rows stay sorted so the output
      // is deterministic for a given seed.
      std::mt19937 rng((unsigned long)seed);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(pairs_cap);
      std::sort(all.begin(), all.end());
    }
    WordEngine eng(pres, b.max_len, (std::size_t)b.budget);
    for (auto [x, y] : all) {
      int pc = -1, oc = -1;
      bool ps = false, os = false;
      try {
        ps = eng.saturated(x, y);
        pc = eng.hom_count(x, y);
      } catch (const budget_error&) {
      }
      try {
        BruteClasses bc =
            brute_force_classes(t, x, y, b.max_len, (std::size_t)b.budget);
        oc = bc.count;
        os = bc.sat.ok();
      } catch (const budget_error&) {
      }
      bool comparable = ps && os && pc >= 0 && oc >= 0;
      bool agree = comparable && pc == oc;
      if (comparable && !agree) any_mismatch = true;
      if (!comparable) any_incomparable = true;
      Json row{{"src", x}, {"dst", y}, {"presentation_count", pc},
               {"presentation_saturated", ps}, {"oracle_count", oc},
               {"oracle_saturated", os}};
      row["agree"] = comparable ? Json(agree) : Json(nullptr);
      rows.push_back(std::move(row));
      auto cell = [](int c, bool sat) {
        return c < 0 ? std::string("budget")
                     : std::to_string(c) + (sat ? "" : "*");
      };
      text << "pair " << x << " " << y << "  presentation " << cell(pc, ps)
           << "  oracle " << cell(oc, os) << "  agree "
           << (comparable ? yn(agree) : "-") << "\n";
    }
  };
  if (std::holds_alternative<TruncDirSet>(space)) {
    const TruncDirSet& t = std::get<TruncDirSet>(space);
    run(t, fundamental_category(t).pres);
  } else {
    const TruncSymSet& t = std::get<TruncSymSet>(space);
    run(t, edge_path_groupoid(t).pres);
  }
  std::string verdict =
      any_mismatch ? "fail" : any_incomparable ? "inconclusive" : "pass";
  text << "verdict " << verdict << "\n";
  Json j{{"command", "oracle"}, {"spec", spec}, {"max_len", b.max_len},
         {"pairs", rows}, {"verdict", verdict}};
  deliver(o.format == "json" ? dump_json(j) : text.str(), o.out_path, out);
  return exit_for_verdict(verdict);
}

}  // namespace detail

/// Parses argv and dispatches. All reports are deterministic byte-for-byte
/// for a given argument list and seed.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"combinatorial homotopy toolkit"};
  app.require_subcommand(1);

  auto add_output = [](CLI::App* sub, detail::OutputOpts& o) {
    sub->add_option("--format", o.format, "output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path,
                    "write the report to this file instead of stdout");
  };
  auto add_bounds = [](CLI::App* sub, detail::Bounds& b) {
    sub->add_option("--max-len", b.max_len, "word length bound")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", b.budget, "word enumeration budget")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* cat = app.add_subcommand(
      "catalog", "list known space specs, or emit one space");
  std::string cat_spec;
  detail::OutputOpts cat_o;
  cat->add_option("spec", cat_spec,
                  "space spec to emit; lists all specs when omitted");
  add_output(cat, cat_o);

  CLI::App* inv = app.add_subcommand(
      "invariants", "components, vertex group, and abelian invariants");
  std::string inv_spec, inv_file;
  int inv_base = -1, inv_threshold = 500;
  detail::Bounds inv_b;
  detail::OutputOpts inv_o;
  inv->add_option("spec", inv_spec, "space spec to analyze");
  inv->add_option("--file", inv_file, "space document to analyze instead");
  inv->add_option("--base", inv_base, "base vertex for the vertex group")
      ->check(CLI::NonNegativeNumber);
  inv->add_option("--pres-threshold", inv_threshold,
                  "emit full presentations and hom tables only at or below "
                  "this many vertices")
      ->check(CLI::NonNegativeNumber);
  add_bounds(inv, inv_b);
  add_output(inv, inv_o);

  CLI::App* adj = app.add_subcommand(
      "adjunction", "counit check for a groupoid or category document");
  std::string adj_file;
  int adj_max_len = 2;
  detail::OutputOpts adj_o;
  adj->add_option("file", adj_file, "groupoid or category JSON document")
      ->required();
  adj->add_option("--max-len", adj_max_len, "word length bound")
      ->check(CLI::PositiveNumber);
  add_output(adj, adj_o);

  CLI::App* vk = app.add_subcommand(
      "vankampen", "compare a pushout's path classes with the glued "
                   "presentation of a span document");
  std::string vk_file;
  int vk_max_len = 4;
  detail::OutputOpts vk_o;
  vk->add_option("file", vk_file, "span JSON document")->required();
  vk->add_option("--max-len", vk_max_len, "word length bound")
      ->check(CLI::PositiveNumber);
  add_output(vk, vk_o);

  CLI::App* sw = app.add_subcommand(
      "sweep", "invariants of a point cloud across resolutions");
  std::string sw_file, sw_input, sw_metric = "linf", sw_threshold = "1";
  std::string sw_eps = "1,2,3,4", sw_step;
  int sw_base = -1;
  detail::Bounds sw_b;
  detail::OutputOpts sw_o;
  sw->add_option("file", sw_file, "csv or pgm input file")->required();
  sw->add_option("--input", sw_input,
                 "input format, deduced from the extension when omitted")
      ->check(CLI::IsMember({"csv", "pgm"}));
  sw->add_option("--metric", sw_metric, "distance measure")
      ->check(CLI::IsMember({"linf", "l1", "l2sq"}));
  sw->add_option("--threshold", sw_threshold,
                 "pgm only: samples at or above this become points");
  sw->add_option("--eps", sw_eps, "comma-separated increasing resolutions");
  sw->add_option("--step", sw_step,
                 "precedence rule; makes the sweep directed")
      ->check(CLI::IsMember({"coords", "intensity"}));
  sw->add_option("--base", sw_base, "vertex whose component is measured")
      ->check(CLI::NonNegativeNumber);
  add_bounds(sw, sw_b);
  add_output(sw, sw_o);

  CLI::App* nrm = app.add_subcommand(
      "normalize", "delay and strong normal forms of a path document");
  std::string nrm_file;
  detail::OutputOpts nrm_o;
  nrm->add_option("file", nrm_file, "path JSON document")->required();
  add_output(nrm, nrm_o);

  CLI::App* orc = app.add_subcommand(
      "oracle", "compare presentation-side class counts with the "
                "brute-force chain oracle");
  std::string orc_spec;
  int orc_pairs = 64;
  long long orc_seed = 0;
  detail::Bounds orc_b;
  detail::OutputOpts orc_o;
  orc->add_option("spec", orc_spec, "space spec to compare on")->required();
  orc->add_option("--pairs", orc_pairs, "vertex pair sample cap")
      ->check(CLI::PositiveNumber);
  orc->add_option("--seed", orc_seed, "seed for the pair subsample");
  add_bounds(orc, orc_b);
  add_output(orc, orc_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kCliInputError;
  }

  try {
    if (app.got_subcommand(cat))
      return detail::cmd_catalog(cat_spec, cat_o, out);
    if (app.got_subcommand(inv))
      return detail::cmd_invariants(inv_spec, inv_file, inv_base,
                                    inv_threshold, inv_b, inv_o, out);
    if (app.got_subcommand(adj))
      return detail::cmd_adjunction(adj_file, adj_max_len, adj_o, out);
    if (app.got_subcommand(vk))
      return detail::cmd_vankampen(vk_file, vk_max_len, vk_o, out);
    if (app.got_subcommand(sw))
      return detail::cmd_sweep(sw_file, sw_input, sw_metric, sw_threshold,
                               sw_eps, sw_step, sw_base, sw_b, sw_o, out);
    if (app.got_subcommand(nrm))
      return detail::cmd_normalize(nrm_file, nrm_o, out);
    if (app.got_subcommand(orc))
      return detail::cmd_oracle(orc_spec, orc_pairs, orc_seed, orc_b, orc_o,
                                out);
  } catch (const budget_error& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kCliInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCliInputError;
  }
  return kCliInputError;
}

}  // namespace cht
