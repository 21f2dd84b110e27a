#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SALPETER_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("correct: all methods agree on the 3D ground state") {
  const Run r = run("correct --d 3 --n 0 --l 0 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "AGREE");
  CHECK(j["eps0"]["value_pq"] == "3/2");
  int methods = 0;
  for (const auto& e : j["results"])
    if (e["quantity"] == "eps1") {
      CHECK(e["value_pq"] == "-15/32");
      ++methods;
    }
  CHECK(methods == 4);
  const Run text = run("correct --d 3 --n 0 --l 0");
  CHECK(text.out.find("verdict AGREE") != std::string::npos);
  CHECK(text.out.find("-15/32") != std::string::npos);
}

TEST_CASE("correct: ladder mode") {
  const Run r = run("correct --d 2 --N 2 --m 0 --method ladder --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["method"] == "ladder");
  CHECK(j["results"][0]["value_pq"] == "-7/4");
  CHECK(j["verdict"] == "AGREE");
  CHECK(run("correct --d 2 --N 3 --m -1").code == 0);
}

TEST_CASE("correct: one-dimensional levels") {
  const Run r = run("correct --d 1 --N 1 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& e : j["results"]) {
    if (e["quantity"] == "eps1") CHECK(e["value_pq"] == "-15/32");
    if (e["quantity"] == "eps2") CHECK(e["value_pq"] == "255/512");
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("correct --d 0 --n 0 --l 0").code == 2);
  CHECK(run("correct --d 3 --n -1 --l 0").code == 2);
  CHECK(run("correct --d 3 --n 0").code == 2);
  CHECK(run("correct --d 3 --N 3 --l 0").code == 2);
  CHECK(run("correct --d 3 --N 2 --m 0").code == 2);
  CHECK(run("correct --d 3 --n 0 --l 0 --method magic").code == 2);
  CHECK(run("table --d 3 --lambda abc").code == 2);
  CHECK(run("table --d 3 --lambda -1/2").code == 2);
  CHECK(run("table --d 3 --format xml").code == 2);
  CHECK(run("verify --grid huge").code == 2);
  CHECK(run("oracle --d 1 --n 0 --l 0").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("table output") {
  const Run csv = run("table --d 3 --Nmax 4 --lambda 1/1000");
  REQUIRE(csv.code == 0);
  CHECK(count_lines(csv.out) == 1 + 9);
  CHECK(csv.out.rfind("N,l,eps0,eps1,eps2,energy,degeneracy\n", 0) == 0);
  CHECK(csv.out.find("\n0,0,3/2,-15/32,255/512,") != std::string::npos);

  const Run d1 = run("table --d 1 --Nmax 3 --format json");
  REQUIRE(d1.code == 0);
  const auto j = nlohmann::json::parse(d1.out);
  CHECK(j["rows"].size() == 4);
  for (const auto& row : j["rows"]) CHECK(row["degeneracy"] == "1");

  CHECK(run("table --d 3 --Nmax 4 --lambda 0.001").out == csv.out);
  CHECK(run("table --d 3 --Nmax 4").out == csv.out);
  CHECK(run("table --d 3 --Nmax 4 --format text").code == 0);
}

TEST_CASE("table and diagram files are deterministic") {
  const auto dir = std::filesystem::temp_directory_path() / "salpeter_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.svg", b = dir / "b.svg";
  REQUIRE(run("diagram --d 3 --Nmax 5 --output " + a.string()).code == 0);
  REQUIRE(run("diagram --d 3 --Nmax 5 --output " + b.string()).code == 0);
  const std::string svg = slurp(a);
  CHECK(svg == slurp(b));
  CHECK(count_of(svg, "class=\"sublevel\"") == 12);
  CHECK(svg.find("l=0") != std::string::npos);

  const Run flat = run("diagram --d 1 --Nmax 3");
  CHECK(count_of(flat.out, "class=\"sublevel\"") == 4);
  CHECK(run("diagram --d 3 --Nmax 3 --format text").code == 0);

  const auto t1 = dir / "t1.json", t2 = dir / "t2.json";
  REQUIRE(run("table --d 4 --Nmax 6 --format json -o " + t1.string()).code == 0);
  REQUIRE(run("table --d 4 --Nmax 6 --format json -o " + t2.string()).code == 0);
  CHECK(slurp(t1) == slurp(t2));
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable output exits with 3") {
  CHECK(run("table --d 3 --output /nonexistent-dir/x.csv").code == 3);
  CHECK(run("diagram --d 3 --output /nonexistent-dir/x.svg").code == 3);
}

TEST_CASE("verify subcommand") {
  const auto dir = std::filesystem::temp_directory_path() / "salpeter_cli_verify";
  std::filesystem::create_directories(dir);
  const auto report = dir / "report.json";
  const Run ok = run("verify --grid small --report " + report.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["status"] == "pass");
  CHECK(j["entries"][0].contains("value_pq"));

  const Run bad = run("verify --grid small --perturb");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("first failure: (d=1, N=1) eps1") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("oracle subcommand honours the precision variable") {
  const Run r = run("oracle --d 3 --n 1 --l 2 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["working_digits"] == 50);
  const Run env = run("oracle --d 3 --n 1 --l 2 --format json", "SALPETER_PRECISION=80");
  REQUIRE(env.code == 0);
  CHECK(nlohmann::json::parse(env.out)["working_digits"] == 80);
  CHECK(run("oracle --d 5 --n 2 --l 1").out.find("PASS") != std::string::npos);
  CHECK(run("oracle --d 3 --n 0 --l 0", "SALPETER_PRECISION=5").code == 2);
  CHECK(run("oracle --d 3 --n 0 --l 0", "SALPETER_PRECISION=abc").code == 2);
}
