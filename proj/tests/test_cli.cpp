#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "support.hpp"

#include "lieboson/report.hpp"

using namespace lieboson;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIEBOSON_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("build u2").code == 0);
  CHECK(run("build u9").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("tensor u4 --jset X").code == 2);
  CHECK(run("spectrum --N 1 --alpha x").code == 2);
  CHECK(run("tensor u4 --jset L").code == 0);
  CHECK(run("tensor u4 --jset W").code == 0);
  CHECK(run("tensor u4 --jset Y").code == 3);
  CHECK(run("tensor u4 --jset 222").code == 3);
}

TEST_CASE("json reports round-trip") {
  for (const char* args : {"build u4", "classify u3", "tensor u3 --jset W", "chains u2u2", "spectrum --N 2 --beta 1",
                           "fock u4 --op W2 --N 1"}) {
    const auto r = run(std::string(args) + " --format json");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(nlohmann::json::parse(j.dump()) == j);
    CHECK(j.at("exit_code") == r.code);
  }
  const Report rep = cmd_chains("u3");
  CHECK(nlohmann::json::parse(rep.render(Format::json)) == rep.to_json());
}

TEST_CASE("reports carry the expected results") {
  const auto b = nlohmann::json::parse(run("build u4 --format json").out)["results"];
  CHECK(b["generators"].size() == 16u);
  CHECK(b["levi"]["dimension"] == 15);
  CHECK(b["radical"]["basis"][0] == "sqrt(3)*g1+g16");
  CHECK(nlohmann::json::parse(run("build u2 --format json").out)["results"]["radical"]["basis"][0] == "g1+g4");
  CHECK(nlohmann::json::parse(run("classify u4 --format json").out)["results"]["classes"].size() == 4u);
  CHECK(nlohmann::json::parse(run("chains u3 --format json").out)["results"]["count"] == 6);

  const auto t = nlohmann::json::parse(run("tensor u3 --jset W --format json").out)["results"];
  CHECK(t["signature"] == "0,0,1/2,1/2,1");

  const auto f = nlohmann::json::parse(run("fock u4 --op W2 --N 1 --format json").out)["results"];
  CHECK(f["eigenvalues"] == nlohmann::json::array({0.0, 0.0, 0.75, 0.75}));
  CHECK(f["groups"][1]["j"] == "1/2");

  const auto s = nlohmann::json::parse(run("spectrum --delta 1 --N 1 --format json").out)["results"];
  std::vector<std::string> e;
  for (const auto& l : s["levels"]) e.push_back(l["E"]);
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<std::string>{"0", "0", "0", "2"});
}

TEST_CASE("output is deterministic") {
  CHECK(run("tensor u4 --jset T").out == run("tensor u4 --jset T").out);
  CHECK(run("build u4 --exec serial").out == run("build u4 --exec parallel").out);
}

TEST_CASE("environment sets the default format") {
  const auto r = run("chains u2");
  CHECK(r.out.rfind("model u2", 0) == 0);
  setenv("LIEBOSON_FORMAT", "json", 1);
  CHECK(run("chains u2").out.front() == '{');
  unsetenv("LIEBOSON_FORMAT");
}
