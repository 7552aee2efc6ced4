#pragma once

// File formats: CSV point lists, PGM images, and the JSON documents the
// command line tools exchange. Parsers report positions; serializers are
// deterministic so identical inputs give identical bytes.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cht/metric.hpp"
#include "cht/nerve.hpp"
#include "cht/paths.hpp"
#include "cht/presentation.hpp"
#include "cht/trunc.hpp"
#include "cht/util.hpp"

namespace cht {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write '" + path + "'");
  out << content;
}

// ---------------------------------------------------------------------------
// CSV point lists: one point per line, comma separated, entries integer or
// rational "p/q". Blank lines are skipped.

inline std::vector<std::vector<Rational>> points_from_csv(
    const std::string& text) {
  std::vector<std::vector<Rational>> points;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty()) continue;
    std::vector<Rational> p;
    std::istringstream cells(body);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        p.push_back(parse_rational(trim(cell)));
      } catch (const input_error& e) {
        throw input_error("csv line " + std::to_string(line_no) + ": " +
                          e.what());
      }
    }
    if (!points.empty() && points[0].size() != p.size())
      throw input_error("csv line " + std::to_string(line_no) + ": expected " +
                        std::to_string(points[0].size()) +
                        " coordinates, got " + std::to_string(p.size()));
    points.push_back(std::move(p));
  }
  return points;
}

// ---------------------------------------------------------------------------
// PGM images, plain (P2) and raw (P5). Samples are at most 65535; raw
// two-byte samples are big-endian. Header comments (#) are honored.

struct PgmImage {
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::vector<int> samples;  // row major

  int at(int x, int y) const { return samples[(std::size_t)y * width + x]; }
};

namespace detail {

struct PgmReader {
  const std::string& bytes;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("pgm: " + what + " at byte " + std::to_string(pos));
  }

  void skip_separators() {
    while (pos < bytes.size()) {
      char c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos;
      } else {
        break;
      }
    }
  }

  int number(const char* what) {
    skip_separators();
    std::size_t start = pos;
    while (pos < bytes.size() && std::isdigit((unsigned char)bytes[pos])) ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (bytes[i] - '0');
      if (v > 1000000000LL) fail(std::string(what) + " out of range");
    }
    return (int)v;
  }
};

}  // namespace detail

inline PgmImage parse_pgm(const std::string& bytes) {
  detail::PgmReader r{bytes};
  if (bytes.size() < 2 || bytes[0] != 'P' ||
      (bytes[1] != '2' && bytes[1] != '5')) {
    std::string magic = bytes.substr(0, std::min<std::size_t>(2, bytes.size()));
    throw input_error("pgm: unsupported magic number '" + magic + "'");
  }
  bool raw = bytes[1] == '5';
  r.pos = 2;
  PgmImage img;
  img.width = r.number("width");
  img.height = r.number("height");
  img.maxval = r.number("maxval");
  if (img.width <= 0 || img.height <= 0) r.fail("empty image dimensions");
  if (img.maxval <= 0 || img.maxval > 65535) r.fail("maxval out of range");
  std::size_t count = (std::size_t)img.width * img.height;
  img.samples.reserve(count);
  if (raw) {
    // Exactly one separator byte sits between the header and the samples.
    if (r.pos >= bytes.size() || !std::isspace((unsigned char)bytes[r.pos]))
      r.fail("expected a separator before the samples");
    ++r.pos;
    int width_bytes = img.maxval > 255 ? 2 : 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (r.pos + width_bytes > bytes.size()) r.fail("truncated pixel data");
      int v = (unsigned char)bytes[r.pos];
      if (width_bytes == 2) v = v * 256 + (unsigned char)bytes[r.pos + 1];
      r.pos += width_bytes;
      if (v > img.maxval) r.fail("sample exceeds maxval");
      img.samples.push_back(v);
    }
    if (r.pos != bytes.size()) r.fail("trailing bytes after the samples");
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      int v = r.number("a sample");
      if (v > img.maxval) r.fail("sample exceeds maxval");
      img.samples.push_back(v);
    }
    r.skip_separators();
    if (r.pos != bytes.size()) r.fail("trailing data after the samples");
  }
  return img;
}

struct LoadOptions {
  Rational threshold = 1;  // pgm only: sample >= threshold becomes a point
  Metric metric = Metric::kLInf;
};

/// Pixels at or above the threshold become points (column, row), keeping
/// their sample value.
inline PointCloud points_from_pgm(const PgmImage& img,
                                  const LoadOptions& opt = {}) {
  PointCloud cloud;
  cloud.metric = opt.metric;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      Rational v = img.at(x, y);
      if (opt.threshold <= v) {
        cloud.points.push_back({Rational(x), Rational(y)});
        cloud.values.push_back(v);
      }
    }
  return cloud;
}

inline PointCloud load_points(const std::string& path,
                              const std::string& format,
                              const LoadOptions& opt = {}) {
  if (format == "csv") {
    PointCloud cloud;
    cloud.points = points_from_csv(read_file(path));
    cloud.metric = opt.metric;
    cloud.validate();
    return cloud;
  }
  if (format == "pgm") return points_from_pgm(parse_pgm(read_file(path)), opt);
  throw input_error("unknown input format '" + format + "' (csv, pgm)");
}

// ---------------------------------------------------------------------------
// JSON documents. Letters in relation words are 1-based and sign-carrying:
// +k is generator k-1 forward, -k its inverse. Edge references are raw
// integers where a negative entry -1-v is the degenerate loop at vertex v.

inline Json rational_to_json(const Rational& r) {
  if (r.den() == 1 && r.num() >= -(BigInt(1) << 62) &&
      r.num() <= (BigInt(1) << 62))
    return (long long)r.num();
  return r.str();
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational((long long)j.get<long long>());
  require(j.is_string(), "expected a number or 'p/q' string");
  return parse_rational(j.get<std::string>());
}

inline Json letters_to_json(const std::vector<int>& word) {
  Json out = Json::array();
  for (int l : word)
    out.push_back(letter_forward(l) ? letter_gen(l) + 1
                                    : -(letter_gen(l) + 1));
  return out;
}

inline std::vector<int> letters_from_json(const Json& j) {
  std::vector<int> word;
  for (const Json& e : j) {
    long long v = e.get<long long>();
    require(v != 0, "letter 0 is not valid");
    word.push_back(v > 0 ? (int)(v - 1) : inv_letter((int)(-v - 1)));
  }
  return word;
}

inline Json trunc_to_json(const TruncSymSet& x) {
  Json edges = Json::array();
  for (const auto& e : x.edges())
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"rev", e.rev}});
  Json tris = Json::array();
  for (const Triangle& t : x.triangles())
    tris.push_back({t[0], t[1], t[2]});
  return {{"directed", false},
          {"n_vertices", x.n_vertices()},
          {"edges", edges},
          {"triangles", tris}};
}

inline Json trunc_to_json(const TruncDirSet& x) {
  Json edges = Json::array();
  for (const auto& e : x.edges())
    edges.push_back({{"src", e.src}, {"dst", e.dst}});
  Json tris = Json::array();
  for (const Triangle& t : x.triangles())
    tris.push_back({t[0], t[1], t[2]});
  return {{"directed", true},
          {"n_vertices", x.n_vertices()},
          {"edges", edges},
          {"triangles", tris}};
}

namespace detail {

inline std::vector<Triangle> triangles_from_json(const Json& j) {
  std::vector<Triangle> tris;
  for (const Json& t : j.at("triangles")) {
    require(t.size() == 3, "triangle must have three entries");
    tris.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return tris;
}

}  // namespace detail

inline TruncSymSet sym_trunc_from_json(const Json& j) {
  require(!j.value("directed", false), "expected a symmetric structure");
  std::vector<TruncSymSet::Edge> edges;
  for (const Json& e : j.at("edges"))
    edges.push_back(
        {e.at("src").get<int>(), e.at("dst").get<int>(), e.at("rev").get<int>()});
  return TruncSymSet(j.at("n_vertices").get<int>(), std::move(edges),
                     detail::triangles_from_json(j));
}

inline TruncDirSet dir_trunc_from_json(const Json& j) {
  require(j.value("directed", false), "expected a directed structure");
  std::vector<TruncDirSet::Edge> edges;
  for (const Json& e : j.at("edges"))
    edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>()});
  return TruncDirSet(j.at("n_vertices").get<int>(), std::move(edges),
                     detail::triangles_from_json(j));
}

inline Json map_to_json(const TruncMap& f) {
  return {{"v", f.v}, {"e", f.e}};
}

inline TruncMap map_from_json(const Json& j) {
  TruncMap f;
  f.v = j.at("v").get<std::vector<int>>();
  f.e = j.at("e").get<std::vector<int>>();
  return f;
}

// Span document: a crown mapped into two feet, the shape a pasting check
// consumes.

struct SymSpanDoc {
  TruncSymSet crown, left, right;
  TruncMap to_left, to_right;
};

struct DirSpanDoc {
  TruncDirSet crown, left, right;
  TruncMap to_left, to_right;
};

inline Json span_to_json(const SymSpanDoc& s) {
  return {{"kind", "span"},           {"directed", false},
          {"crown", trunc_to_json(s.crown)}, {"left", trunc_to_json(s.left)},
          {"right", trunc_to_json(s.right)}, {"to_left", map_to_json(s.to_left)},
          {"to_right", map_to_json(s.to_right)}};
}

inline Json span_to_json(const DirSpanDoc& s) {
  return {{"kind", "span"},           {"directed", true},
          {"crown", trunc_to_json(s.crown)}, {"left", trunc_to_json(s.left)},
          {"right", trunc_to_json(s.right)}, {"to_left", map_to_json(s.to_left)},
          {"to_right", map_to_json(s.to_right)}};
}

inline bool span_json_directed(const Json& j) {
  require(j.value("kind", "") == "span", "expected a span document");
  return j.value("directed", false);
}

inline SymSpanDoc sym_span_from_json(const Json& j) {
  require(!span_json_directed(j), "expected a symmetric span");
  SymSpanDoc s;
  s.crown = sym_trunc_from_json(j.at("crown"));
  s.left = sym_trunc_from_json(j.at("left"));
  s.right = sym_trunc_from_json(j.at("right"));
  s.to_left = map_from_json(j.at("to_left"));
  s.to_right = map_from_json(j.at("to_right"));
  require(is_map(s.crown, s.left, s.to_left), "to_left is not a map");
  require(is_map(s.crown, s.right, s.to_right), "to_right is not a map");
  return s;
}

inline DirSpanDoc dir_span_from_json(const Json& j) {
  require(span_json_directed(j), "expected a directed span");
  DirSpanDoc s;
  s.crown = dir_trunc_from_json(j.at("crown"));
  s.left = dir_trunc_from_json(j.at("left"));
  s.right = dir_trunc_from_json(j.at("right"));
  s.to_left = map_from_json(j.at("to_left"));
  s.to_right = map_from_json(j.at("to_right"));
  require(is_map(s.crown, s.left, s.to_left), "to_left is not a map");
  require(is_map(s.crown, s.right, s.to_right), "to_right is not a map");
  return s;
}

// Composition tables.

inline Json category_to_json(const FiniteCategory& c) {
  return {{"kind", "category"}, {"n_objects", c.n_objects},
          {"src", c.src},       {"dst", c.dst},
          {"identity", c.identity}, {"then", c.then}};
}

inline Json groupoid_to_json(const FiniteGroupoid& g) {
  return {{"kind", "groupoid"}, {"n_objects", g.n_objects},
          {"src", g.src},       {"dst", g.dst},
          {"identity", g.identity}, {"inverse", g.inverse},
          {"then", g.then}};
}

inline FiniteCategory category_from_json(const Json& j) {
  require(j.value("kind", "") == "category", "expected a category document");
  FiniteCategory c;
  c.n_objects = j.at("n_objects").get<int>();
  c.src = j.at("src").get<std::vector<int>>();
  c.dst = j.at("dst").get<std::vector<int>>();
  c.identity = j.at("identity").get<std::vector<int>>();
  c.then = j.at("then").get<std::vector<std::vector<int>>>();
  c.validate();
  return c;
}

inline FiniteGroupoid groupoid_from_json(const Json& j) {
  require(j.value("kind", "") == "groupoid", "expected a groupoid document");
  FiniteGroupoid g;
  g.n_objects = j.at("n_objects").get<int>();
  g.src = j.at("src").get<std::vector<int>>();
  g.dst = j.at("dst").get<std::vector<int>>();
  g.identity = j.at("identity").get<std::vector<int>>();
  g.inverse = j.at("inverse").get<std::vector<int>>();
  g.then = j.at("then").get<std::vector<std::vector<int>>>();
  g.validate();
  return g;
}

// Presentations.

inline Json presentation_to_json(const Presentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.gens)
    gens.push_back({{"src", g.src}, {"dst", g.dst}});
  Json rels = Json::array();
  for (const Relation& r : p.relations)
    rels.push_back({{"src", r.src},
                    {"dst", r.dst},
                    {"lhs", letters_to_json(r.lhs)},
                    {"rhs", letters_to_json(r.rhs)}});
  return {{"kind", p.kind == PresKind::kGroupoid ? "groupoid" : "category"},
          {"n_objects", p.n_objects},
          {"gens", gens},
          {"relations", rels}};
}

inline Json group_presentation_to_json(const GroupPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(letters_to_json(r));
  return {{"n_gens", p.n_gens}, {"relators", rels}};
}

inline Json invariants_to_json(const AbelianInvariants& a) {
  return {{"rank", a.rank}, {"torsion", a.torsion}};
}

// Paths: a start vertex and raw edge references relative to a context the
// consumer supplies.

template <typename T>
Json path_to_json(const PathSeq<T>& p) {
  return {{"base", p.base}, {"start", p.start}, {"edges", p.edges}};
}

template <typename T>
PathSeq<T> path_from_json(const T& ctx, const Json& j) {
  PathSeq<T> p;
  p.ctx = &ctx;
  p.base = j.value("base", 0);
  p.start = j.at("start").get<int>();
  p.edges = j.at("edges").get<std::vector<EdgeRef>>();
  require(p.valid(), "path does not fit the space");
  return p;
}

// Sweep reports.

inline Json report_to_json(const InvariantReport& rep) {
  Json rows = Json::array();
  for (const InvariantRow& r : rep.rows) {
    Json row = {{"eps", rational_to_json(r.eps)},
                {"components", r.components},
                {"h1", invariants_to_json(r.h1)},
                {"generators", r.generators},
                {"relators", r.relators}};
    if (rep.directed) {
      row["loop_classes"] = r.loop_classes;
      row["loops_saturated"] = r.loops_saturated;
    }
    rows.push_back(std::move(row));
  }
  return {{"directed", rep.directed}, {"rows", rows}};
}

inline std::string report_to_text(const InvariantReport& rep) {
  std::vector<std::string> header = {"eps", "components", "h1_rank",
                                     "torsion", "generators", "relators"};
  if (rep.directed) {
    header.push_back("loop_classes");
    header.push_back("saturated");
  }
  std::vector<std::vector<std::string>> cells;
  for (const InvariantRow& r : rep.rows) {
    std::string torsion;
    for (std::size_t i = 0; i < r.h1.torsion.size(); ++i)
      torsion += (i ? "," : "") + std::to_string(r.h1.torsion[i]);
    if (torsion.empty()) torsion = "-";
    std::vector<std::string> row = {r.eps.str(),
                                    std::to_string(r.components),
                                    std::to_string(r.h1.rank),
                                    torsion,
                                    std::to_string(r.generators),
                                    std::to_string(r.relators)};
    if (rep.directed) {
      row.push_back(r.loop_classes < 0 ? "-"
                                       : std::to_string(r.loop_classes));
      row.push_back(r.loops_saturated ? "yes" : "no");
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c] << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out.str();
}

}  // namespace cht
