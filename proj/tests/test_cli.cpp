// Copyright 2026 The prbg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "prbg/io.hpp"

using namespace prbg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("prbg_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

const char* kK22 = R"({"u_count":2,"v_count":2,"edges":[[1,1],[1,2],[2,1],[2,2]]})";

}  // namespace

TEST_CASE("gen") {
  const Result a = run({"gen", "circle", "16", "--seed", "7"});
  const Result b = run({"gen", "circle", "16", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["points"].size() == 16);
  CHECK(run({"gen", "circle", "16", "--seed", "8"}).out != a.out);

  const Result hex = run({"gen", "regular", "6", "--side", "1"});
  REQUIRE(hex.code == 0);
  const Points2<double> p = points_from_json(Json::parse(hex.out));
  CHECK(p.cols() == 6);
  for (int k = 0; k < 6; ++k) CHECK((p.col(k) - p.col((k + 1) % 6)).norm() == doctest::Approx(1.0));

  const Result bad = run({"gen", "circle", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("n >= 3") != std::string::npos);
  CHECK(run({"gen", "triangle", "5"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"gen", "lens", "12", "--format", "svg"}).out.find("<svg") == 0);
}

TEST_CASE("build") {
  TempDir dir;
  const std::string hex = dir.file("hex.json", run({"gen", "regular", "6"}).out);
  const Result udg = run({"build", "udg", hex});
  REQUIRE(udg.code == 0);
  CHECK(Json::parse(udg.out)["edges"].size() == 6);
  CHECK(Json::parse(udg.out)["class"] == "udg");

  const std::string three = dir.file("three.json", R"({"points":[[0,0],[2,0],[1,0.1]]})");
  CHECK(Json::parse(run({"build", "gabriel", three}).out)["edges"].size() == 2);
  const std::string two = dir.file("two.json", R"({"points":[[0,0],[1,0]]})");
  CHECK(Json::parse(run({"build", "lgg", two}).out)["edges"].size() == 1);
  CHECK(run({"build", "lgg", dir.file("missing.json")}).code == 2);
  const std::string broken = dir.file("broken.json", "{");
  CHECK(run({"build", "udg", broken}).code == 2);
}

TEST_CASE("verify") {
  TempDir dir;
  const Result k22 = run({"verify", "prbg", dir.file("k22.json", kK22)});
  CHECK(k22.code == 1);
  CHECK(Json::parse(k22.out)["witness"]["back_edge"] == Json::parse("[2,1]"));

  const std::string a8 = dir.file("a8.json", run({"extremal", "8"}).out);
  const Result ok = run({"verify", "prbg", a8});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["ok"] == true);
  const Result strict = run({"verify", "sprbg", a8});
  CHECK(strict.code == 0);
  CHECK(Json::parse(strict.out)["strict"] == true);

  const std::string star =
      dir.file("star.json", R"({"points":[[0,0],[2,0],[1,0.5]],"edges":[[0,1],[0,2]],"class":"lgg"})");
  const Result lgg = run({"verify", "lgg", star});
  CHECK(lgg.code == 1);
  CHECK(Json::parse(lgg.out)["witness"]["u"] == 0);
  CHECK(run({"verify", "lgg", star, "--format", "svg"}).out.find("edge conflict") != std::string::npos);
  CHECK(run({"verify", "prbg", star}).code == 2);
}

TEST_CASE("extremal") {
  CHECK(Json::parse(run({"extremal", "8"}).out)["ones"] == 21);
  CHECK(Json::parse(run({"extremal", "16"}).out)["ones"] == 54);
  const Json one = Json::parse(run({"extremal", "1"}).out);
  CHECK(one["ones"] == 1);
  CHECK(run({"extremal", "0"}).code == 2);
  CHECK(run({"extremal", "8", "--format", "csv"}).out == "n,ones,closed_form,n_log2_n,ratio,floor_holds\n8,21,21,24,0.875,true\n");
  CHECK(count(run({"extremal", "8", "--format", "svg"}).out, "cell-one") == 21);
}

TEST_CASE("certify") {
  TempDir dir;
  const std::string a32 = dir.file("a32.json", run({"extremal", "32"}).out);
  const Result r = run({"certify", a32});
  CHECK(r.code == 0);
  CHECK(r.err.find("bound holds") != std::string::npos);
  CHECK(Json::parse(r.out)["problems"].empty());

  const Result single = run({"certify", dir.file("one.json", R"({"u_count":1,"v_count":1,"edges":[[1,1]]})")});
  CHECK(single.code == 0);
  CHECK(Json::parse(single.out)["nodes"].size() == 1);

  const Result k22 = run({"certify", dir.file("k22.json", kK22)});
  CHECK(Json::parse(k22.out)["prbg"] == false);
  CHECK(k22.err.find("not guaranteed") != std::string::npos);
}

TEST_CASE("decompose and render") {
  TempDir dir;
  const std::string pts = dir.file("pts.json", run({"gen", "lens", "18", "--seed", "3"}).out);
  const std::string graph = dir.file("g.json", run({"build", "lgg", pts, "--shuffle", "--seed", "3"}).out);
  const std::string svg = dir.file("d.svg");
  const Result d = run({"decompose", graph, "--svg", svg});
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out)["verified"] == true);
  std::stringstream text;
  text << std::ifstream(svg).rdbuf();
  CHECK(text.str().find("class=\"antipodal\"") != std::string::npos);

  const std::string hex = dir.file("hex.json", run({"gen", "regular", "6"}).out);
  const std::string udg = dir.file("udg.json", run({"build", "udg", hex}).out);
  const Result r = run({"render", udg});
  CHECK(count(r.out, "<line class=\"edge\"") == 6);
  CHECK(count(r.out, "unit-bar") == 1);
  CHECK(run({"render", udg, "--overlay"}).out.find("class=\"antipodal\"") != std::string::npos);
  const std::string a8 = dir.file("a8.json", run({"extremal", "8"}).out);
  CHECK(count(run({"render", a8}).out, "cell-one") == 21);
  CHECK(run({"render", hex}).out.find("<circle") != std::string::npos);
  CHECK(run({"render", dir.file("x.json", R"({"foo":1})")}).code == 2);

  const std::string square = dir.file("sq.json", R"({"points":[[0,0],[1,0],[1,1],[0,1],[0.5,0.5]],"edges":[[0,1]]})");
  CHECK(run({"decompose", square}).code == 2);
}

TEST_CASE("experiment") {
  const Result d = run({"experiment", "decompose", "--trials", "50", "--seed", "1"});
  CHECK(d.code == 0);
  CHECK(count(d.out, "\n") == 51);
  CHECK(d.out.rfind("n,class,edges,bound,removed,verified,seed,millis\n", 0) == 0);
  CHECK(count(d.out, ",true,") == 50);
  CHECK(Json::parse(d.err)["families"]["chain-udg"]["verified"] == 50);

  const Result threaded = run({"experiment", "decompose", "--trials", "50", "--seed", "1", "--threads", "3"});
  CHECK(threaded.out == d.out);

  const Result empty = run({"experiment", "decompose", "--trials", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "n,class,edges,bound,removed,verified,seed,millis\n");

  const Result ex = run({"experiment", "extremal", "--format", "json"});
  CHECK(ex.code == 0);
  CHECK(Json::parse(ex.out)["closed_form_matches"] == true);
  const Result listed = run({"experiment", "extremal", "--ns", "8,16", "--format", "json"});
  CHECK(Json::parse(listed.out)["rows"] == 2);

  for (const char* sweep : {"p3", "structure", "bounded-path", "crossing", "certify"}) {
    const Result s = run({"experiment", sweep, "--trials", "10", "--format", "json"});
    CHECK_MESSAGE(s.code == 0, sweep);
  }
  CHECK(run({"experiment", "decompose", "--family", "nope"}).code == 2);
}

TEST_CASE("environment overrides mirror flags") {
  ::setenv("PRBG_SEED", "7", 1);
  const Result env = run({"gen", "circle", "16"});
  ::unsetenv("PRBG_SEED");
  CHECK(env.out == run({"gen", "circle", "16", "--seed", "7"}).out);

  TempDir dir;
  const std::string out = dir.file("out.json");
  CHECK(run({"gen", "regular", "5", "--out", out}).out.empty());
  CHECK(fs::exists(out));
}
