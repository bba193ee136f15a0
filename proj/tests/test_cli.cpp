// Copyright (c) 2026 The qcy authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcy/cli.hpp"
#include "qcy/textio.hpp"

using qcy::cli::run;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

Invocation call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Writes a temp file and removes it on scope exit.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = std::string(std::tmpnam(nullptr)) + ".qcy";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("completion listing for the diagonal-loop family") {
  Invocation r = call({"gb", "--family", "j", "--degree", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rules: 4") != std::string::npos);
  CHECK(r.out.find("b*c^2 -> a^2*b") != std::string::npos);
  CHECK(r.out.find("d*a^2 -> c^2*d") != std::string::npos);
}

TEST_CASE("series blocks agree for a dimension-two family") {
  Invocation r = call({"hilbert", "--family", "dq", "--q", "5", "--degree", "6"});
  CHECK(r.exit_code == 0);
  std::size_t head = r.out.find("closed form");
  std::size_t mid = r.out.find("algebra series:\n");
  REQUIRE(head != std::string::npos);
  REQUIRE(mid != std::string::npos);
  std::string first = r.out.substr(r.out.find('\n', head) + 1, mid - r.out.find('\n', head) - 1);
  std::string second = r.out.substr(mid + std::string("algebra series:\n").size());
  CHECK(first == second);  // the two TSV blocks are identical
}

TEST_CASE("isomorphism verdicts and exit codes") {
  Invocation r = call({"iso", "--family", "bq", "--p", "2", "--q", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("not isomorphic") != std::string::npos);

  r = call({"iso", "--family", "bq", "--p", "2", "--q", "3", "--expect", "false"});
  CHECK(r.exit_code == 0);
  r = call({"iso", "--family", "bq", "--p", "2", "--q", "3", "--expect", "true"});
  CHECK(r.exit_code == 1);

  r = call({"iso", "--family", "an", "--p", "1,2,3", "--q", "3,2,1", "--witness"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("isomorphic") == 0);
  CHECK(r.out.find("sigma:") != std::string::npos);
  CHECK(r.out.find("a0 ->") != std::string::npos);
}

TEST_CASE("construct emits parseable artifacts") {
  Invocation r = call({"construct", "--family", "an", "--n", "4", "--q", "1,2,3,4",
                       "--emit", "quiver"});
  CHECK(r.exit_code == 0);
  qcy::Quiver q = qcy::parse_quiver(r.out);
  CHECK(q.vertex_count() == 4);
  CHECK(q.arrow_count() == 8);

  r = call({"construct", "--family", "bq", "--q", "2", "--emit", "mesh"});
  CHECK(r.exit_code == 0);
  qcy::PresentationFile pf = qcy::parse_presentation(r.out);
  CHECK(pf.has_tau);
  CHECK(pf.has_mu);

  r = call({"construct", "--family", "j", "--emit", "relations"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("relation a^2 - b*d") != std::string::npos);
}

TEST_CASE("series check and unit-circle check") {
  Invocation r = call({"cy-check", "--family", "j", "--degree", "10", "--expect", "true"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") == 0);

  r = call({"gk-check", "--adjacency", "0,2;2,0", "--nakayama", "swap", "--expect", "false"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("det(I - Mt + Pt^2) = -t^4 + 4*t^3 - 4*t^2 + 1") != std::string::npos);
  CHECK(r.out.find("infinite GK") != std::string::npos);

  r = call({"gk-check", "--adjacency", "0,2;2,0", "--nakayama", "id"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("finite GK") != std::string::npos);
}

TEST_CASE("classify reads a mesh file") {
  Invocation made = call({"construct", "--family", "aq", "--q", "3", "--emit", "mesh"});
  REQUIRE(made.exit_code == 0);
  TempFile f(made.out);
  Invocation r = call({"classify", "--input", f.path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tag A(q)") == 0);
  bool has_param = r.out.find("q = 3") != std::string::npos;
  bool has_inverse = r.out.find("q = 1/3") != std::string::npos;
  CHECK(has_param != has_inverse);
}

TEST_CASE("enumerate prints the two-vertex inventory") {
  Invocation r = call({"enumerate", "--vertices", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "M = [[0,2],[2,0]]  P: identity\n"
        "M = [[1,1],[1,1]]  P: identity, swap\n");
}

TEST_CASE("input failures exit with the input-error code") {
  Invocation r = call({"gb", "--family", "nope"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("input error") != std::string::npos);

  r = call({"classify", "--input", "/nonexistent/path.qcy"});
  CHECK(r.exit_code == 2);

  TempFile bad("vertices: 2\narrow a e1 e9\n");
  r = call({"gb", "--input", bad.path});
  CHECK(r.exit_code == 2);

  r = call({"bogus-subcommand"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("custom completion order") {
  Invocation r = call({"gb", "--family", "dq", "--q", "5", "--order", "c,b,d,a",
                       "--degree", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rules: 2") != std::string::npos);
  CHECK(r.out.find("b*a ->") != std::string::npos);
  CHECK(r.out.find("c*d ->") != std::string::npos);
}

TEST_CASE("command output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"gb", "--family", "j", "--degree", "6"},
        {"hilbert", "--family", "aq", "--q", "2", "--degree", "8"},
        {"enumerate"}}) {
    Invocation first = call(args);
    Invocation second = call(args);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
  }
}
