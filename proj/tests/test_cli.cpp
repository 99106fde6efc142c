#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "invw/cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = invw::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

// First value of each key in a key: value report.
std::map<std::string, std::string> keys(const std::string& text) {
  std::map<std::string, std::string> m;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) m.emplace(line.substr(0, colon), line.substr(colon + 2));
  }
  return m;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("invw_cli_" + name)).string();
}

}  // namespace

TEST_CASE("decompose") {
  const auto seven = run({"decompose", "-m", "7", "(1 2 3 4 5 6 7)"});
  CHECK(seven.status == 0);
  CHECK(keys(seven.out)["factors"] == "3");
  CHECK(keys(seven.out)["verified"] == "true");
  CHECK(count_lines(seven.out, "factor: ") == 3);

  const auto identity = run({"decompose", "-m", "5", "()"});
  CHECK(identity.status == 0);
  CHECK(keys(identity.out)["factors"] == "0");

  const auto odd = run({"decompose", "-m", "5", "(1 2)"});
  CHECK(odd.status != 0);
  CHECK(odd.err.find("odd permutation") != std::string::npos);

  CHECK(run({"decompose", "-m", "5", "(1 2"}).status != 0);
  CHECK(run({"decompose", "(1 2 3)"}).status != 0);
}

TEST_CASE("table workflow: compute, validate, eta, cover") {
  const std::string path = temp_path("a5.json");
  const auto computed = run({"table-compute", "-g", "A5", "-o", path});
  REQUIRE(computed.status == 0);
  CHECK(keys(computed.out)["degrees"] == "1 3 3 4 5");
  CHECK(keys(computed.out)["valid"] == "true");

  const auto valid = run({"table-validate", path});
  CHECK(valid.status == 0);
  CHECK(keys(valid.out)["valid"] == "true");

  const auto e = run({"eta", path, "2A", "2A", "-t", "3A"});
  CHECK(e.status == 0);
  CHECK(keys(e.out)["eta"] == "3");
  CHECK(keys(e.out)["kappa"] == "4/5");
  CHECK(keys(run({"eta", path, "2A 2A", "--target", "1A"}).out)["eta"] == "15");

  const auto misspelled = run({"eta", path, "2A", "2X", "-t", "3A"});
  CHECK(misspelled.status != 0);
  CHECK(misspelled.err.find("1A 2A 3A 5A 5B") != std::string::npos);

  const auto cover = run({"cover", path, "-k", "3"});
  CHECK(cover.status == 0);
  CHECK(keys(cover.out)["width"] == "2");

  {
    std::ofstream broken(temp_path("broken.json"));
    broken << "{\"group_name\": 1}";
  }
  CHECK(run({"table-validate", temp_path("broken.json")}).status != 0);
  CHECK(run({"eta", temp_path("missing.json"), "2A", "-t", "1A"}).status != 0);
  std::filesystem::remove(path);
  std::filesystem::remove(temp_path("broken.json"));
}

TEST_CASE("validate flags a corrupted table with a nonzero exit") {
  const std::string path = temp_path("c2.json");
  REQUIRE(run({"table-compute", "-g", "C2", "-o", path}).status == 0);
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  in.close();
  j["classes"][1]["size"] = "2";
  std::ofstream(path) << j.dump();
  const auto v = run({"table-validate", path});
  CHECK(v.status != 0);
  CHECK(keys(v.out)["valid"] == "false");
  CHECK(count_lines(v.out, "failure: ") >= 1);
  std::filesystem::remove(path);
}

TEST_CASE("width") {
  const auto w = run({"width", "-g", "A7"});
  CHECK(w.status == 0);
  CHECK(keys(w.out)["width"] == "3");
  CHECK(run({"width", "-g", "C3"}).status != 0);
  CHECK(run({"width"}).status != 0);

  const std::string gens = temp_path("s4.txt");
  std::ofstream(gens) << "perm 4\n(1 2)\n(1 2 3 4)\n";
  const auto s4 = run({"width", "--generators", gens});
  CHECK(s4.status == 0);
  CHECK(keys(s4.out)["order"] == "24");
  std::filesystem::remove(gens);
}

TEST_CASE("Lie-type subcommands") {
  CHECK(keys(run({"degree", "-p", "4,2,1", "-q", "2"}).out)["degree"] == "7568");
  CHECK(keys(run({"degree", "-p", "2,1", "-q", "2", "--variant", "linear"}).out)["degree"] == "6");
  CHECK(run({"degree", "-p", "2,1", "-q", "2", "--variant", "orthogonal"}).status != 0);
  CHECK(keys(run({"ppd", "-q", "2", "-n", "6"}).out)["count"] == "0");
  CHECK(keys(run({"ppd", "-q", "3", "-n", "6"}).out)["primes"] == "7");
  CHECK(keys(run({"torus", "-s", "1,1,4", "-q", "2"}).out)["order"] == "45");
  const auto weil = run({"weil", "-n", "7", "-q", "2"});
  CHECK(keys(weil.out)["zeta"] == "128");
  CHECK(count_lines(weil.out, "chi: ") == 3);
  CHECK(weil.out.find("chi: t=0 42") != std::string::npos);
  CHECK(keys(run({"weil", "-n", "7", "-q", "2", "-t", "1"}).out)["chi"] == "t=1 43");
  CHECK(keys(run({"d2closed", "-q", "2", "-r", "7", "--r1", "7"}).out)["value"] == "946");
  auto d3 = keys(run({"d3closed", "-q", "2", "-r", "7", "--r1", "7"}).out);
  CHECK(d3["value"] == "202544/27");
  CHECK(d3["integral"] == "false");
  const auto t1 = run({"table1", "-n", "7", "-q", "2"});
  CHECK(count_lines(t1.out, "row: ") == 17);
  CHECK(t1.out.find("row: q^2-q:(q+1) 7568") != std::string::npos);
  CHECK(run({"table1", "-n", "7", "-q", "2", "--row", "bogus"}).status != 0);
}

TEST_CASE("dual pair subcommands") {
  const auto d = run({"dalpha", "-k", "3", "-n", "7", "-q", "2", "--alpha-degree", "2"});
  CHECK(d.status == 0);
  CHECK(keys(d.out)["group_order"] == "648");
  CHECK(d.out.find("value=7568") != std::string::npos);
  const auto r = run({"reconcile", "-n", "7", "-q", "2"});
  CHECK(r.status == 0);
  CHECK(count_lines(r.out, "entry: ") > 0);
  CHECK(r.out.find("point=transvection") != std::string::npos);
  CHECK(keys(r.out)["table1_absent"] == "2");
  CHECK(keys(r.out)["table1_empty"] == "3");
}

TEST_CASE("json mode mirrors the keys") {
  const auto j = run({"--json", "decompose", "-m", "7", "(1 2 3 4 5 6 7)"});
  REQUIRE(j.status == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["factors"] == "3");
  CHECK(doc["factor"].size() == 3);
  CHECK(doc["verified"] == "true");
}

TEST_CASE("reports are deterministic") {
  CHECK(run({"width", "-g", "A6"}).out == run({"width", "-g", "A6"}).out);
  CHECK(run({"table-compute", "-g", "PSL(2,7)"}).out == run({"table-compute", "-g", "PSL(2,7)"}).out);
}

TEST_CASE("unknown subcommand and help") {
  CHECK(run({"frobnicate"}).status != 0);
  CHECK(run({}).status != 0);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("installed binary exit statuses") {
  const std::string bin = INVW_CLI_PATH;
  const std::string ok = bin + " decompose -m 7 '(1 2 3 4 5 6 7)' > /dev/null 2>&1";
  const std::string bad = bin + " decompose -m 5 '(1 2)' > /dev/null 2>&1";
  CHECK(std::system(ok.c_str()) == 0);
  CHECK(std::system(bad.c_str()) != 0);
  FILE* pipe = popen((bin + " ppd -q 2 -n 4").c_str(), "r");
  REQUIRE(pipe);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) text += buf;
  CHECK(pclose(pipe) == 0);
  CHECK(keys(text)["primes"] == "5");
}
