#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  std::string out;
  int status = 0;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIECHAR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("beta 3,2 reports 1/2") {
  const auto r = run("beta 3,2");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "liechar/1");
  CHECK(j["value"]["num"] == 1);
  CHECK(j["value"]["den"] == 2);
}

TEST_CASE("G2 table has two rows") {
  const auto r = run("table --group G2");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 2);
}

TEST_CASE("identical arguments give byte-identical output") {
  for (const char* args : {"chartable --kind SL --n 2 --q 5", "walk --kind SL --n 2 --q 5 --class-rep '0,1;4,3' --tmax 6",
                           "alpha --family Sp --n 8 --levi 2 --classical 4", "group --kind GL --n 2 --q 4"}) {
    INFO(args);
    const auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output formats") {
  const auto csv = run("--out csv group --kind SL --n 2 --q 3");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("index,", 0) == 0);
  const auto text = run("beta 3,2 --out text");
  CHECK(text.status == 0);
  CHECK(text.out.find("value: 1/2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("beta").status == 2);
  CHECK(run("group --kind GL --n 2 --q 6").status == 2);
  CHECK(run("bounds --family Sp --n 5").status == 2);
  CHECK(run("group --kind GL --n 4 --q 7").status == 1);
}
