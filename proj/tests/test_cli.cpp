#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SOLIDTORUS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json report(const std::string& args) {
  const auto r = run("--json " + args);
  return nlohmann::json::parse(r.out);
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "solidtorus_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("generate, validate and compute homology") {
  CHECK(run("gen --family 2 --labels --out " + path("t2.tri")).code == 0);
  CHECK(fs::exists(path("t2.tri")));
  CHECK(run("validate --in " + path("t2.tri")).code == 0);
  const auto h = report("homology --in " + path("t2.tri"));
  CHECK(h["exit_code"] == 0);
  CHECK(h["inputs"].is_array());
  CHECK(h["inputs"][0]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("invalid input exits with 2") {
  std::ofstream(path("broken.tri")) << "tets 1\n0: 0:3012 - - 0:9999\n";
  CHECK(run("validate --in " + path("broken.tri")).code == 2);
  CHECK(run("validate --in " + path("missing.tri")).code == 2);
  CHECK(run("verify 61-2").code == 2);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("meridian search outcomes") {
  CHECK(run("gen --family 0 --out " + path("t0.tri")).code == 0);
  CHECK(run("gen --family 3 --out " + path("t3.tri")).code == 0);
  const auto t0 = report("meridian --in " + path("t0.tri") + " --out " + path("d0.json"));
  CHECK(t0["exit_code"] == 0);
  CHECK(fs::exists(path("d0.json")));
  CHECK(run("meridian --in " + path("t3.tri") + " --max-pieces 4").code == 3);
  CHECK(run("meridian --in " + path("t3.tri") + " --max-pieces 80").code == 0);
}

TEST_CASE("bundle and curve commands") {
  CHECK(run("gen --family 1 --out " + path("t1.tri")).code == 0);
  CHECK(run("meridian --in " + path("t1.tri") + " --max-pieces 30 --out " + path("d1.json")).code == 0);
  CHECK(run("bundle --in " + path("t1.tri") + " --disc " + path("d1.json") + " --max-pieces 30").code == 0);
  CHECK(run("curve make-61 --i 1 --max-pieces 30 --out " + path("c1.json")).code == 0);
  CHECK(run("curve check --in " + path("c1.json") + " --tri " + path("t1.tri") + " --disc " + path("d1.json")).code == 0);
}

TEST_CASE("verification reports") {
  const auto r = report("verify 61-2 --i 20");
  CHECK(r["exit_code"] == 0);
  REQUIRE(r["results"].is_array());
  CHECK(r["results"][0]["status"] == "pass");
  CHECK(r.contains("timing"));
  CHECK(run("verify 61-1 --i 1 --max-pieces 30").code == 0);
}

TEST_CASE("deterministic reports do not depend on worker count") {
  auto a = report("--deterministic --jobs 1 verify 61-1 --i 2 --max-pieces 50");
  auto b = report("--deterministic --jobs 4 verify 61-1 --i 2 --max-pieces 50");
  CHECK_FALSE(a.contains("timing"));
  a.erase("command");
  b.erase("command");
  CHECK(a == b);
  const auto again = run("--json --deterministic --jobs 1 verify 61-1 --i 2 --max-pieces 50");
  const auto first = run("--json --deterministic --jobs 1 verify 61-1 --i 2 --max-pieces 50");
  CHECK(again.out == first.out);
}
