#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cht/cli.hpp"
#include "cht/nerve.hpp"
#include "cht/spaces.hpp"

using namespace cht;
using Catch::Matchers::ContainsSubstring;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cht"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult res;
  res.code = run_cli((int)argv.size(), argv.data(), out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

std::string temp_doc(const std::string& name, const std::string& content) {
  std::string path =
      (std::filesystem::temp_directory_path() / name).string();
  write_file(path, content);
  return path;
}

/// Runs the installed binary through the shell, stdout only.
CliResult run_tool(const std::string& args) {
  CliResult res;
  FILE* pipe = popen((std::string(CHT_TOOL_PATH) + " " + args).c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[512];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  res.code = WEXITSTATUS(status);
  return res;
}

}  // namespace

TEST_CASE("catalog command") {
  CliResult list = run({"catalog"});
  CHECK(list.code == 0);
  CHECK_THAT(list.out, ContainsSubstring("circle:k"));
  CHECK_THAT(list.out, ContainsSubstring("wedge(spec,spec)"));
  CHECK(list.err.empty());

  CliResult text = run({"catalog", "circle:5"});
  CHECK(text.code == 0);
  CHECK(text.out ==
        "spec circle:5\ndirected no\nvertices 5\nedges 5\ntriangles 0\n");

  // circle:5 goes through the clique complex, so the emitted truncation is
  // isomorphic to the direct builder's, not identical.
  CliResult json = run({"catalog", "circle:5", "--format", "json"});
  CHECK(json.code == 0);
  Json j = Json::parse(json.out);
  CHECK(isomorphic(sym_trunc_from_json(j.at("space")), circle_trunc(5)));

  CliResult dir = run({"catalog", "dcircle:3", "--format", "json"});
  Json dj = Json::parse(dir.out);
  CHECK(isomorphic(dir_trunc_from_json(dj.at("space")), dir_circle_trunc(3)));

  CHECK(run({"catalog", "nonsense:7"}).code == 1);
}

TEST_CASE("invariants command") {
  CliResult circle = run({"invariants", "circle:5"});
  CHECK(circle.code == 0);
  CHECK(circle.out ==
        "directed no\nspace circle:5\nvertices 5\nedges 5\ntriangles 0\n"
        "components 1\nbase 0\ngroup generators 1 relators 0\n"
        "simplified generators 1 relators 0\nh1 rank 1\nh1 torsion -\n");

  CliResult wedge =
      run({"invariants", "wedge(circle:3,circle:3)", "--format", "json"});
  CHECK(wedge.code == 0);
  Json wj = Json::parse(wedge.out);
  CHECK(wj.at("h1").at("rank") == 2);
  CHECK(wj.at("components") == 1);
  CHECK(wj.at("simplified").at("n_gens") == 2);
  CHECK(wj.at("simplified").at("n_relators") == 0);

  CliResult sphere = run({"invariants", "csphere:2:3", "--format", "json"});
  Json sj = Json::parse(sphere.out);
  CHECK(sj.at("h1").at("rank") == 0);
  CHECK(sj.at("h1").at("torsion").empty());
  CHECK(sj.at("simplified").at("n_gens") == 0);

  // Full relator words appear only below the vertex threshold.
  CliResult full = run({"invariants", "circle:5", "--format", "json"});
  CHECK(Json::parse(full.out).at("group").contains("relators"));
  CliResult capped = run(
      {"invariants", "circle:5", "--pres-threshold", "3", "--format", "json"});
  CHECK_FALSE(Json::parse(capped.out).at("group").contains("relators"));

  // Directed spaces report the hom table; a free directed loop never
  // saturates, so the exit code marks the report inconclusive.
  CliResult simplex =
      run({"invariants", "osimplex:2", "--max-len", "2", "--format", "json"});
  CHECK(simplex.code == 0);
  Json xj = Json::parse(simplex.out);
  REQUIRE(xj.at("hom").size() == 9);
  for (const Json& h : xj.at("hom")) {
    bool reachable = h.at("src").get<int>() <= h.at("dst").get<int>();
    CHECK(h.at("count") == (reachable ? 1 : 0));
    CHECK(h.at("saturated") == true);
  }
  CHECK(run({"invariants", "dcircle:3"}).code == 2);

  // A space document on disk is interchangeable with a spec.
  std::string doc =
      temp_doc("cli_circle.json", trunc_to_json(circle_trunc(5)).dump());
  CliResult from_file = run({"invariants", "--file", doc, "--format", "json"});
  CHECK(from_file.code == 0);
  CHECK(Json::parse(from_file.out).at("h1").at("rank") == 1);

  CHECK(run({"invariants"}).code == 1);
  CHECK(run({"invariants", "circle:5", "--file", doc}).code == 1);
  CliResult bad_base = run({"invariants", "circle:5", "--base", "9"});
  CHECK(bad_base.code == 1);
  CHECK_THAT(bad_base.err, ContainsSubstring("base vertex out of range"));
}

TEST_CASE("adjunction command") {
  // The bundled tables stay in lockstep with the library constructors.
  CHECK(groupoid_from_json(Json::parse(read_file("data/z2_groupoid.json"))) ==
        cyclic_group(2));
  CHECK(category_from_json(
            Json::parse(read_file("data/ordinal3_category.json"))) ==
        ordinal_category(3));

  CliResult z2 = run({"adjunction", "data/z2_groupoid.json"});
  CHECK(z2.code == 0);
  CHECK_THAT(z2.out, ContainsSubstring("verdict pass"));
  CHECK_THAT(z2.out, ContainsSubstring("saturated yes"));

  CliResult ord =
      run({"adjunction", "data/ordinal3_category.json", "--format", "json"});
  CHECK(ord.code == 0);
  Json oj = Json::parse(ord.out);
  CHECK(oj.at("verdict") == "pass");
  CHECK(oj.at("kind") == "category");
  CHECK(oj.at("objects") == 4);
  CHECK(oj.at("arrows") == 10);
  CHECK(oj.at("mismatches").empty());

  // A corrupted table is rejected at load time, naming the axiom instance.
  Json bad = Json::parse(read_file("data/z2_groupoid.json"));
  bad["then"][1][1] = 1;
  CliResult broken =
      run({"adjunction", temp_doc("cli_bad_groupoid.json", bad.dump())});
  CHECK(broken.code == 1);
  CHECK_THAT(broken.err, ContainsSubstring("arrow 1"));
  CHECK_THAT(broken.err, ContainsSubstring("inverse laws"));
  CHECK(broken.out.empty());

  Json badcat = Json::parse(read_file("data/ordinal3_category.json"));
  badcat["then"][0][4] = badcat["then"][0][4] == 0 ? 1 : 0;
  CliResult brokencat =
      run({"adjunction", temp_doc("cli_bad_category.json", badcat.dump())});
  CHECK(brokencat.code == 1);
  CHECK_THAT(brokencat.err, ContainsSubstring("then[0][4]"));

  CHECK(run({"adjunction", "data/no_such.json"}).code == 1);
  std::string span = temp_doc("cli_not_table.json", R"({"kind":"span"})");
  CliResult wrong = run({"adjunction", span});
  CHECK(wrong.code == 1);
  CHECK_THAT(wrong.err, ContainsSubstring("neither a groupoid"));
}

TEST_CASE("vankampen command") {
  CliResult pasting = run({"vankampen", "data/interval_pasting_span.json",
                           "--format", "json"});
  CHECK(pasting.code == 0);
  Json pj = Json::parse(pasting.out);
  CHECK(pj.at("verdict") == "pass");
  CHECK(pj.at("certified") == true);
  CHECK(pj.at("saturated") == false);
  for (const Json& side : {pj.at("direct_h1"), pj.at("glued_h1")}) {
    REQUIRE(side.size() == 2);
    for (const Json& inv : side) {
      CHECK(inv.at("rank") == 1);
      CHECK(inv.at("torsion").empty());
    }
  }

  CliResult wedge = run({"vankampen", "data/wedge_span.json", "--format",
                         "json"});
  CHECK(wedge.code == 0);
  Json wj = Json::parse(wedge.out);
  CHECK(wj.at("verdict") == "pass");
  CHECK(wj.at("direct_h1")[0].at("rank") == 2);
  CHECK(wj.at("glued_h1")[0].at("rank") == 2);

  CliResult same = run({"vankampen", "data/identity_span.json"});
  CHECK(same.code == 0);
  CHECK_THAT(same.out, ContainsSubstring("verdict pass"));
  CHECK_THAT(same.out, ContainsSubstring("saturated yes"));

  // Breaking a leg of the span fails validation before any comparison.
  Json bad = Json::parse(read_file("data/wedge_span.json"));
  bad["to_left"]["v"][0] = 7;
  CliResult broken =
      run({"vankampen", temp_doc("cli_bad_span.json", bad.dump())});
  CHECK(broken.code == 1);
  CHECK_THAT(broken.err, ContainsSubstring("to_left"));
}

TEST_CASE("sweep command") {
  // The table matches the library report byte for byte.
  CliResult ring = run({"sweep", "data/ring.pgm"});
  CHECK(ring.code == 0);
  PointCloud cloud = load_points("data/ring.pgm", "pgm");
  CHECK(ring.out == report_to_text(eps_sweep(cloud, {1, 2, 3, 4})));
  CHECK_THAT(ring.out, ContainsSubstring("h1_rank"));

  CliResult json = run({"sweep", "data/ring.pgm", "--eps", "1,3", "--format",
                        "json"});
  CHECK(json.code == 0);
  Json rj = Json::parse(json.out);
  CHECK(rj.at("directed") == false);
  REQUIRE(rj.at("rows").size() == 2);
  CHECK(rj.at("rows")[0].at("h1").at("rank") == 1);
  CHECK(rj.at("rows")[1].at("h1").at("rank") == 0);
  CHECK(rj.at("rows")[0].at("components") == 1);

  CliResult blobs =
      run({"sweep", "data/blobs.csv", "--eps", "1,5,6", "--format", "json"});
  Json bj = Json::parse(blobs.out);
  CHECK(bj.at("rows")[0].at("components") == 2);
  CHECK(bj.at("rows")[1].at("components") == 2);
  CHECK(bj.at("rows")[2].at("components") == 1);

  // Directed sweep over the coordinatewise order: no directed loops, so
  // the base count saturates at one class.
  CliResult dir = run({"sweep", "data/blobs.csv", "--step", "coords", "--eps",
                       "1", "--format", "json"});
  CHECK(dir.code == 0);
  Json dj = Json::parse(dir.out);
  CHECK(dj.at("directed") == true);
  CHECK(dj.at("rows")[0].at("loops_saturated") == true);
  CHECK(dj.at("rows")[0].at("loop_classes") == 1);

  // Equal intensities make every tolerance edge two-way, the hole turns
  // into a free loop, and the capped enumeration reports inconclusive.
  CliResult stuck = run({"sweep", "data/ring.pgm", "--step", "intensity",
                         "--eps", "1", "--budget", "200000", "--format",
                         "json"});
  CHECK(stuck.code == 2);
  Json sj = Json::parse(stuck.out);
  CHECK(sj.at("rows")[0].at("loops_saturated") == false);
  CHECK(sj.at("rows")[0].at("loop_classes") == -1);

  // Reports can land in a file instead of stdout.
  std::string out_path =
      (std::filesystem::temp_directory_path() / "cli_sweep.txt").string();
  CliResult to_file = run({"sweep", "data/ring.pgm", "--out", out_path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(read_file(out_path) == ring.out);

  // Empty input is an empty table, not an error.
  std::string empty = temp_doc("cli_empty.csv", "");
  CliResult none = run({"sweep", empty, "--input", "csv"});
  CHECK(none.code == 0);
  CHECK(none.out == "eps  components  h1_rank  torsion  generators  relators\n");

  CHECK(run({"sweep", "data/blobs.csv", "--eps", "2,1"}).code == 1);
  CHECK(run({"sweep", "data/blobs.csv", "--eps", ""}).code == 1);
  CHECK(run({"sweep", "/no/such/file.csv"}).code == 1);
  CliResult noext = run({"sweep", temp_doc("cli_noext", "0,0\n")});
  CHECK(noext.code == 1);
  CHECK_THAT(noext.err, ContainsSubstring("--input"));
  // Intensity order needs sample values, which csv points lack.
  CHECK(run({"sweep", "data/blobs.csv", "--step", "intensity"}).code == 1);
}

TEST_CASE("normalize command") {
  CliResult zigzag = run({"normalize", "data/zigzag_path.json"});
  CHECK(zigzag.code == 0);
  CHECK(zigzag.out ==
        "directed no\ninput start 0 edges [0 -2 1 0 4]\n"
        "normal_form start 0 edges [0 1 0 4]\n"
        "strong_normal_form start 0 edges [0 4]\n");

  CliResult json = run({"normalize", "data/zigzag_path.json", "--format",
                        "json"});
  Json j = Json::parse(json.out);
  CHECK(j.at("normal_form").at("edges") == Json::array({0, 1, 0, 4}));
  CHECK(j.at("strong_normal_form").at("edges") == Json::array({0, 4}));

  // Directed paths only have the delay normal form.
  Json dirdoc = {{"space", "dline:0:3"},
                 {"path", {{"start", 0}, {"edges", {0, -2, 1, -3, 2}}}}};
  CliResult dir = run(
      {"normalize", temp_doc("cli_dir_path.json", dirdoc.dump()), "--format",
       "json"});
  CHECK(dir.code == 0);
  Json dj = Json::parse(dir.out);
  CHECK(dj.at("directed") == true);
  CHECK(dj.at("normal_form").at("edges") == Json::array({0, 1, 2}));
  CHECK_FALSE(dj.contains("strong_normal_form"));

  // An embedded space document works like a spec string.
  Json embedded = {{"space", trunc_to_json(circle_trunc(5))},
                   {"path", {{"start", 0}, {"edges", {0, 1}}}}};
  CliResult emb = run({"normalize",
                       temp_doc("cli_emb_path.json", embedded.dump()),
                       "--format", "json"});
  CHECK(emb.code == 0);
  CHECK(Json::parse(emb.out).at("normal_form").at("edges") ==
        Json::array({0, 1}));

  Json broken = {{"space", "circle:5"},
                 {"path", {{"start", 0}, {"edges", {4}}}}};
  CliResult bad =
      run({"normalize", temp_doc("cli_bad_path.json", broken.dump())});
  CHECK(bad.code == 1);
  CHECK_THAT(bad.err, ContainsSubstring("path does not fit"));
}

TEST_CASE("oracle command") {
  CliResult simplex = run({"oracle", "osimplex:3", "--max-len", "3"});
  CHECK(simplex.code == 0);
  CHECK_THAT(simplex.out, ContainsSubstring("verdict pass"));

  // Free loops keep some pairs unsaturated: inconclusive, never fail, and
  // every comparable pair agrees.
  CliResult circle =
      run({"oracle", "circle:5", "--max-len", "3", "--format", "json"});
  CHECK(circle.code == 2);
  Json cj = Json::parse(circle.out);
  CHECK(cj.at("verdict") == "inconclusive");
  int comparable = 0;
  for (const Json& p : cj.at("pairs")) {
    if (p.at("agree").is_null()) continue;
    CHECK(p.at("agree") == true);
    ++comparable;
  }
  CHECK(comparable > 0);

  // The pair sample is capped and seeded, and the output is reproducible.
  CliResult a = run({"oracle", "codisc:3", "--pairs", "5", "--seed", "11",
                     "--format", "json"});
  CliResult b = run({"oracle", "codisc:3", "--pairs", "5", "--seed", "11",
                     "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out).at("pairs").size() == 5);
}

TEST_CASE("process entry point") {
  CliResult list = run_tool("catalog");
  CHECK(list.code == 0);
  CHECK_THAT(list.out, ContainsSubstring("circle:k"));

  CliResult inv = run_tool("invariants circle:5 --format json");
  CHECK(inv.code == 0);
  CHECK(Json::parse(inv.out).at("h1").at("rank") == 1);

  CliResult bad = run_tool("adjunction /no/such/file.json 2>/dev/null");
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());

  CliResult inconclusive = run_tool("invariants dcircle:3 2>/dev/null >/dev/null");
  CHECK(inconclusive.code == 2);
}
