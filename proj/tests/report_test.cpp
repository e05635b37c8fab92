#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cornerindex/errors.hpp"
#include "cornerindex/report.hpp"
#include "doctest.h"

using namespace cornerindex;
using report::Verdict;

TEST_SUITE("report") {
  TEST_CASE("verdicts") {
    CHECK(std::string(report::to_string(Verdict::pass)) == "PASS");
    CHECK(std::string(report::to_string(Verdict::fail)) == "FAIL");
    CHECK(std::string(report::to_string(Verdict::inconclusive)) == "INCONCLUSIVE");
    CHECK(report::exit_code(Verdict::pass) == 0);
    CHECK(report::exit_code(Verdict::fail) == 2);
    CHECK(report::exit_code(Verdict::inconclusive) == 3);
    for (auto a : {Verdict::pass, Verdict::fail, Verdict::inconclusive})
      for (auto b : {Verdict::pass, Verdict::fail, Verdict::inconclusive}) {
        CHECK(report::combine(a, b) == report::combine(b, a));
        CHECK(report::combine(a, Verdict::pass) == a);
        CHECK(report::combine(a, Verdict::fail) == Verdict::fail);
      }
    CHECK(report::combine(Verdict::pass, Verdict::inconclusive) == Verdict::inconclusive);
  }

  TEST_CASE("property: numbers round-trip exactly") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
      const double x = std::exp(u(rng)) * (i % 2 ? 1 : -1);
      const auto s = report::number(x);
      double y = 0.0;
      std::from_chars(s.data(), s.data() + s.size(), y);
      CHECK(y == x);
    }
    CHECK(report::number(0.5) == "0.5");
    CHECK(report::number(2.0) == "2");
  }

  TEST_CASE("CSV quoting and width checks") {
    report::CsvTable t({"a", "b"});
    t.add_row({"plain", "with,comma"});
    t.add_row({"say \"hi\"", ""});
    CHECK(t.str() == "a,b\nplain,\"with,comma\"\n\"say \"\"hi\"\"\",\n");
    CHECK_THROWS_AS(t.add_row({"one"}), Error);
  }

  TEST_CASE("SVG plots are standalone documents") {
    const auto svg = report::svg_line_plot({{"s <1>", {{0.1, 1.0}, {0.2, 2.0}, {0.0, -1.0}}}},
                                           {"t & u", "x", "y", true, true});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("s &lt;1&gt;") != std::string::npos);
    CHECK(svg.find("t &amp; u") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
  }

  TEST_CASE("atomic writes and the output directory override") {
    const auto dir = std::filesystem::temp_directory_path() / "cornerindex_report_test";
    std::filesystem::remove_all(dir);
    report::write_atomic(dir / "sub" / "x.csv", "1,2\n");
    report::write_atomic(dir / "sub" / "x.csv", "3,4\n");
    std::ifstream in(dir / "sub" / "x.csv");
    std::stringstream s;
    s << in.rdbuf();
    CHECK(s.str() == "3,4\n");
    CHECK_FALSE(std::filesystem::exists(dir / "sub" / "x.csv.tmp"));

    ::unsetenv(report::kOutputDirEnv);
    CHECK(report::output_directory("out") == std::filesystem::path("out"));
    ::setenv(report::kOutputDirEnv, dir.c_str(), 1);
    CHECK(report::output_directory("out") == dir);
    ::setenv(report::kOutputDirEnv, "", 1);
    CHECK(report::output_directory("out") == std::filesystem::path("out"));
    ::unsetenv(report::kOutputDirEnv);
    std::filesystem::remove_all(dir);
  }
}
