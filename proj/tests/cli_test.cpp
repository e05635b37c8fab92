#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" CORNERINDEX_CLI "' " + args + " 2>&1";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::fgets(buf, sizeof buf, p)) r.out += buf;
  const int raw = ::pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("cornerindex_cli_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("chi on A prints 0") {
  const auto dir = scratch("chi");
  const auto r = run("chi --domain A --out " + dir.string());
  CHECK(r.status == 0);
  CHECK(r.out.rfind("0\n", 0) == 0);
  CHECK(r.out.find("chi PASS") != std::string::npos);
  CHECK(fs::exists(dir / "chi.csv"));
  CHECK(fs::exists(dir / "chi.svg"));
}

TEST_CASE("chi on the notched domains prints -1") {
  for (const char* d : {"\"P'\"", "\"Q'\""}) {
    const auto r = run(std::string("chi --domain ") + d + " --out " + scratch("chi2").string());
    CHECK(r.status == 0);
    CHECK(r.out.rfind("-1\n", 0) == 0);
  }
}

TEST_CASE("turning at 3 pi / 2 reports the failed inequality") {
  const auto r = run("turning --theta 4.71238898 --out " + scratch("turning").string());
  CHECK(r.status == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);
  const auto ok = run("turning --theta 1.5707963267948966,3.141592653589793 --out " + scratch("turning").string());
  CHECK(ok.status == 0);
}

TEST_CASE("index on A over three mesh levels") {
  const auto dir = scratch("index");
  const auto r = run("index --domain A --h 0.2,0.1,0.05 --rho 0.2,0.1 --out " + dir.string());
  INFO(r.out);
  CHECK(r.status == 0);
  CHECK(r.out.find("index PASS: index on A: 1 1 1 1 1 1") != std::string::npos);
  const auto csv = slurp(dir / "index.csv");
  CHECK(csv.rfind("h,rho,even_kernel,odd_kernel_minimal,odd_kernel_maximal,index,control_index,verdict\n", 0) == 0);
  CHECK(fs::exists(dir / "index.svg"));
}

TEST_CASE("usage and configuration errors exit with 1") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("index --h 0.1,0.2 --out " + scratch("bad").string()).status == 1);
  CHECK(run("spectrum --tol -1").status == 1);
  CHECK(run("chi --no-such-flag").status == 1);
  CHECK(run("--help").status == 0);
}

TEST_CASE("property: identical configuration gives bit-identical CSV") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  for (const auto& d : {a, b}) {
    CHECK(run("capacity --out " + d.string()).status == 0);
    CHECK(run("bochner --seed 5 --out " + d.string()).status == 0);
    CHECK(run("gap --h 0.4,0.2 --rho 0.2 --out " + d.string()).status == 0);
    CHECK(run("cornermap --out " + d.string()).status == 0);
  }
  for (const char* f : {"capacity.csv", "schedule.csv", "bochner.csv", "gap.csv", "gap_spectrum.csv",
                        "cornermap.csv", "lipschitz.csv"}) {
    INFO(f);
    CHECK(!slurp(a / f).empty());
    CHECK(slurp(a / f) == slurp(b / f));
  }
}

TEST_CASE("config file values yield to flags") {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  std::ofstream(dir / "run.ini") << "# turning run\ntheta = 4.71238898\nradius = 0.2\n";
  const auto from_file = run("turning --config " + (dir / "run.ini").string() + " --out " + dir.string());
  CHECK(from_file.status == 2);
  CHECK(slurp(dir / "turning.csv").find(",0.2,") != std::string::npos);
  const auto overridden =
      run("turning --config " + (dir / "run.ini").string() + " --theta 1.5 --out " + dir.string());
  CHECK(overridden.status == 0);
}

TEST_CASE("environment variable overrides the output directory") {
  const auto dir = scratch("env"), ignored = scratch("env_ignored");
  const auto r = run("capacity --out " + ignored.string(), "CORNERINDEX_OUTPUT_DIR=" + dir.string());
  CHECK(r.status == 0);
  CHECK(fs::exists(dir / "capacity.csv"));
  CHECK_FALSE(fs::exists(ignored));
}

TEST_CASE("all runs a subset of criteria") {
  const auto r = run("all --criteria 1,8,9 --out " + scratch("all").string());
  CHECK(r.status == 0);
  CHECK(r.out.find("criterion 1 PASS") != std::string::npos);
  CHECK(r.out.find("criterion 8 PASS") != std::string::npos);
  CHECK(r.out.find("criterion 9 PASS") != std::string::npos);
  CHECK(r.out.find("all PASS: 3/3") != std::string::npos);
}
