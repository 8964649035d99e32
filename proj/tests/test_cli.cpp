#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sphsys/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = sphsys::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SPHSYS_TEST_DATA) + "/" + name; }

const char* kB4 = "system\n  roots B4\n  sp a4\n  sigma a1+a2, a3+a4\nend\n";

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", data("fix_b4.sys")}).code == 0);
  Result bad = run({"validate", data("bad_root.sys")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3, column 9: unknown root a5") != std::string::npos);
  CHECK(run({"validate", data("apart_without_sigma.sys")}).code == 2);
  CHECK(run({"validate", data("missing.sys")}).code == 2);
  Result invalid = run({"validate", "-"}, "system\n roots A2\n sp a2\n sigma 2*a1\nend\n");
  CHECK(invalid.code == 1);
  CHECK(invalid.out.find("invalid") != std::string::npos);
}

TEST_CASE("info") {
  Result r = run({"info", "-"}, kB4);
  CHECK(r.code == 0);
  CHECK(r.out.find("defect 1\n") != std::string::npos);
  CHECK(r.out.find("reductive no\n") != std::string::npos);
  CHECK(r.out.find("primitive yes\n") != std::string::npos);
  Result j = run({"--format", "json", "info", "-"}, kB4);
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["colors"].size() == 3);
  CHECK(doc["matrix"] == nlohmann::json({{1, 0}, {1, -1}, {-1, 1}}));
  CHECK(doc["flags"]["primitive"] == true);
  CHECK(doc.contains("witness"));
}

TEST_CASE("quotient") {
  Result r = run({"quotient", "--colors", "D1", "-"}, kB4);
  CHECK(r.code == 0);
  CHECK(r.out == "system\n  roots B4\n  sp a1,a4\n  sigma a3+a4\nend\n");
  Result no = run({"quotient", "--colors", "D2", "-"}, kB4);
  CHECK(no.code == 1);
  CHECK(no.err.find("kernel basis") != std::string::npos);
  CHECK(run({"quotient", "--colors", "D9", "-"}, kB4).code == 2);
  Result q = run({"quotients", "--minimal", "--homogeneous", "-"}, kB4);
  CHECK(q.out.rfind("{D1,D3}", 0) == 0);
}

TEST_CASE("round trip through the tool") {
  Result r = run({"localize", "--roots", "a1,a2,a3,a4", "-"}, kB4);
  CHECK(r.code == 0);
  CHECK(r.out == kB4);
  Result s = run({"localize", "--sigma", "a3+a4", "-"}, kB4);
  CHECK(s.out.find("sigma a3+a4\n") != std::string::npos);
}

TEST_CASE("structure commands") {
  CHECK(run({"tails", "-"}, kB4).out == "a3+a4  b(2)  {D1}\n");
  Result p = run({"primitive", "-"}, kB4);
  CHECK(p.code == 0);
  CHECK(p.out.rfind("primitive", 0) == 0);
  CHECK(run({"primitive", data("fix_q1.sys")}).code == 1);
  Result t = run({"reduce", "--tree", data("fix_q1.sys")});
  CHECK(t.out.find("ParabolicInduction") != std::string::npos);
  CHECK(t.out.find("Closed") != std::string::npos);
  Result c = run({"center", "--q", "D1,D3", "-"}, kB4);
  CHECK(c.out.find("dim C 1") != std::string::npos);
  CHECK(run({"monoid", "--q", "D1,D2,D3", "-"}, kB4).out == "a1+a2+a3+a4\n");
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "A1", "--count"}).out == "4\n");
  CHECK(run({"enumerate", "A2", "--count", "--mod-aut"}).out == "9\n");
  Result j = run({"--format", "json", "enumerate", "A1"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["count"] == 4);
  CHECK(doc["systems"][0].contains("flags"));
  CHECK(run({"enumerate", "A1", "--probe-star"}).code == 0);
  Result hit = run({"enumerate", "A2", "--probe-star"});
  CHECK(hit.code == 1);
  CHECK(hit.out.rfind("# distinguished, not (*): {A1+}", 0) == 0);
  CHECK(run({"enumerate", "Q7"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"info"}).code == 2);
  CHECK(run({"--format", "xml", "info", "-"}, kB4).code == 2);
  CHECK(run({"--help"}).code == 0);
}
