#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ROOTQCA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect = 0) {
  const Run r = run(args);
  CHECK(r.code == expect);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("a2-demo") {
  for (const char* ell : {"3", "5"}) {
    const auto r = run(std::string("a2-demo --ell ") + ell);
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  const auto j = run_json("a2-demo --ell 3 --json");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() >= 7);
}

TEST_CASE("mutate") {
  const auto back = run_json("mutate --word 1,1");
  CHECK(back["seed"]["frame"] == json({"x1", "x2"}));
  CHECK(back["seed"]["path"] == json({1, 1}));
  const auto one = run_json("mutate --word 1");
  CHECK(one["seed"]["frame"][0] == "x1^-1 + z*x1^-1*x2");
  CHECK(one["seed"]["compatible"] == true);
  CHECK(one["seed"]["quasi_commuting"] == true);
}

TEST_CASE("graph") {
  const auto dot = run("graph --mode unlabelled --format dot");
  CHECK(dot.code == 0);
  std::size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.out.find("\n  v", pos)) != std::string::npos) {
    const auto end = dot.out.find('\n', pos + 1);
    (dot.out.substr(pos, end - pos).find("--") != std::string::npos ? edges : nodes)++;
    pos = end;
  }
  CHECK(nodes == 5);
  CHECK(edges == 5);
  const auto j = run_json("graph --mode labelled");
  CHECK(j["vertices"].size() == 10);
}

TEST_CASE("seed files") {
  const std::string path = "cli_test_b2.json";
  {
    std::ofstream f(path);
    f << R"({"ell": 5, "n": 2, "btilde": [[0, 2], [-1, 0]], "lambda": [[0, 1], [-1, 0]], "d": [1, 2]})";
  }
  const auto j = run_json("graph --seed-file " + path);
  CHECK(j["vertices"].size() == 6);
  std::remove(path.c_str());
  const auto missing = run_json("graph --seed-file no_such_seed.json", 2);
  CHECK(missing.contains("error"));
}

TEST_CASE("trace and ch-check") {
  const auto t = run_json("trace --element x1^3 --element x1 --kind reduced");
  CHECK(t["results"][0]["trace"] == "3*x1^3");
  CHECK(t["results"][1]["trace"] == "0");
  const auto c = run_json("ch-check --element \"x1 + x2\"");
  CHECK(c["pass"] == true);
  CHECK(c["results"][0]["sigma"][2] == "x2^3 + x1^3");
  CHECK(c["results"][0]["psi"].size() == 3);
  const auto a = run("ch-check --count 4 --rng-seed 9");
  const auto b = run("ch-check --count 4 --rng-seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto wrong = run_json("ch-check --element \"x1 + x2\" --degree 2", 1);
  CHECK(wrong["pass"] == false);
}

TEST_CASE("member") {
  const auto ok = run_json("member --element \"x1^-1 + z*x1^-1*x2\"");
  CHECK(ok["member"] == true);
  const auto no = run_json("member --element x1^-1", 1);
  CHECK(no["member"] == false);
  bool cert = false;
  for (const auto& s : no["results"][0]["seeds"])
    if (s["path"] == json({1})) cert = s.contains("failure");
  CHECK(cert);
  CHECK(run_json("member --element x1^3 --test central")["member"] == true);
  CHECK(run_json("member --element x1 --test center", 1)["member"] == false);
}

TEST_CASE("classify-monoid") {
  const auto sq = run_json("classify-monoid --gens \"4,0;3,1;1,3;0,4\" --lambda \"0,1;-1,0\" --ell 3");
  CHECK(sq["integrally_convex"] == false);
  CHECK(sq["witness"] == json({2, 2}));
  CHECK(sq["ch_degree"] == "3");
  const auto hs = run_json("classify-monoid --rank 2 --ineq \"x1 > 0\"");
  CHECK(hs["integrally_closed"] == false);
  CHECK(hs["redundant"] == false);
}

TEST_CASE("errors") {
  const auto bad = run_json("member --element x3", 2);
  CHECK(bad.contains("error"));
  CHECK(bad.contains("position"));
  CHECK(run_json("mutate --word 7", 2).contains("error"));
  CHECK(run_json("trace --element x1 --kind nope", 2).contains("error"));
  CHECK(run_json("frobnicate", 2).contains("error"));
  CHECK(run_json("classify-monoid", 2).contains("error"));
}
