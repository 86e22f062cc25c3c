#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmg/sweep.hpp"
#include "lmgcli/app.hpp"
#include "lmgcli/figures.hpp"
#include "lmgcli/output.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lmgcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> fields(const std::string& row) {
  std::vector<double> out;
  std::istringstream in(row);
  for (std::string f; std::getline(in, f, ',');) out.push_back(std::stod(f));
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lmg_cli_test_" + std::to_string(std::random_device{}()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli: usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"cycle", "--no-such-flag", "1"}).code == 2);
  CHECK(call({"cycle", "--n", "abc"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli: cycle prints the header and one row") {
  const auto r = call({"cycle", "--n", "2", "--t-hot", "0.6", "--t-cold", "0.3", "--lambda1", "0.5", "--lambda2", "4"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "lambda1,eta,eta_carnot,work,q_h,q_ab,q_bc,q_cd,q_da,s_a,s_b,s_c,s_d");
  const auto v = fields(ls[1]);
  REQUIRE(v.size() == 13);
  CHECK(v[0] == 0.5);
  CHECK(v[2] == doctest::Approx(0.5));
  const auto direct = lmg::run_cycle({2, 0.6, 0.3, 0.5, 4.0});
  CHECK(v[1] == doctest::Approx(direct.efficiency).epsilon(1e-11));
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("cli: domain errors exit 1 and name the precondition") {
  const auto r = call({"cycle", "--n", "2", "--t-hot", "0.3", "--t-cold", "0.6", "--lambda1", "0.5", "--lambda2", "4"});
  CHECK(r.code == 1);
  CHECK(r.err.find("t_hot > t_cold") != std::string::npos);
  CHECK(call({"cycle", "--lambda1", "5", "--lambda2", "4"}).code == 1);
  CHECK(call({"cycle", "--n", "2.5"}).code == 1);
  CHECK(call({"cycle", "--backend", "magic"}).code == 1);
  CHECK(call({"sweep", "--figure", "99z"}).code == 1);
  CHECK(call({"sweep", "--figure", "3b"}).code == 1);
  CHECK(call({"sweep", "--grid", "0.5"}).code == 1);
  CHECK(call({"thermal", "--temperature", "-1"}).code == 1);
}

TEST_CASE("cli: spectrum and thermal") {
  const auto s = call({"spectrum", "--n", "2", "--lambda", "0.5"});
  REQUIRE(s.code == 0);
  const auto ls = lines(s.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "twice_m,m,energy,ground");
  CHECK(ls[1] == "-2,-1,0,0");
  CHECK(ls[2] == "0,0,-2,1");
  CHECK(ls[3] == "2,1,-2,1");

  const auto t = call({"thermal", "--n", "2", "--lambda", "0.5", "--temperature", "0", "--populations"});
  REQUIRE(t.code == 0);
  const auto tl = lines(t.out);
  REQUIRE(tl.size() >= 2);
  const auto v = fields(tl[1]);
  CHECK(v[5] == doctest::Approx(std::log(2.0)));
  CHECK(t.out.find("twice_m,population") != std::string::npos);
}

TEST_CASE("cli: sweep to stdout uses the requested grid") {
  const auto r = call({"sweep", "--n", "4", "--t-hot", "0.3", "--t-cold", "0.15", "--lambda2", "4", "--grid", "11"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 12);
  CHECK(fields(ls.back())[0] == 4.0);
}

TEST_CASE("cli: sweep --figure 4a writes a two-peak CSV") {
  TempDir tmp;
  const auto file = tmp.path / "fig4a.csv";
  const auto r = call({"sweep", "--figure", "4a", "--out", file.string()});
  REQUIRE(r.code == 0);
  const auto text = slurp(file);
  const auto ls = lines(text);
  REQUIRE(ls.size() > 200);
  CHECK(ls[0] == lmgcli::kSweepHeader);
  std::vector<lmg::SweepRecord> recs;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto v = fields(ls[i]);
    REQUIRE(v.size() == 13);
    lmg::SweepRecord rec;
    rec.lambda1 = v[0];
    rec.efficiency = v[1];
    recs.push_back(rec);
  }
  CHECK(lmg::detect_peaks(recs).size() == 2);
  // No temporaries left behind.
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) ++entries;
  CHECK(entries == 1);
}

TEST_CASE("cli: svg output") {
  TempDir tmp;
  const auto file = tmp.path / "run.csv";
  const auto r = call({"sweep", "--n", "6", "--t-hot", "0.3", "--t-cold", "0.2", "--lambda2", "2", "--grid", "41",
                       "--format", "both", "--out", file.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(file));
  const auto svg = slurp(tmp.path / "run.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(call({"sweep", "--format", "svg"}).code == 1);  // svg needs a file
}

TEST_CASE("cli: figures for one panel and the catalogue") {
  TempDir tmp;
  const auto r = call({"figures", "--out", tmp.path.string(), "--figure", "2a", "--grid", "21", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(tmp.path / "fig2a_th0.8.csv"));
  CHECK(fs::exists(tmp.path / "fig2a_th80.csv"));

  std::vector<std::string> ids;
  for (const auto& f : lmgcli::figure_catalog()) ids.push_back(f.id);
  const std::vector<std::string> want{"2a", "2b", "3a", "3b", "4a", "4b", "4c", "4d",
                                      "5a", "5b", "5c", "5d", "6",  "7a", "7b", "8"};
  CHECK(ids == want);

  const auto all = call({"figures", "--out", tmp.path.string(), "--grid", "5"});
  REQUIRE(all.code == 0);
  for (const auto& id : want) CHECK(fs::exists(tmp.path / ("fig" + id + ".svg")));
  CHECK(fs::exists(tmp.path / "fig3b.csv"));
  CHECK(fs::exists(tmp.path / "fig6_high_t_formula.csv"));
}

TEST_CASE("cli: figure catalogue parameters") {
  const auto f6 = lmgcli::find_figure("6");
  REQUIRE(f6);
  CHECK(f6->curves.front().cycle.n == 100);
  CHECK(f6->curves.front().cycle.t_hot == 800);
  CHECK(f6->curves.front().cycle.t_cold == 500);
  CHECK(f6->curves.front().cycle.lambda2 == 30);
  const auto f4c = lmgcli::find_figure("4c");
  REQUIRE(f4c);
  CHECK(f4c->curves.front().cycle.n == 8);
  CHECK(f4c->curves.front().cycle.t_cold == 0.06);
  CHECK_FALSE(lmgcli::find_figure("9"));
}

TEST_CASE("cli: validate runs clean") {
  const auto r = call({"validate"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 9);
}

TEST_CASE("number formatting") {
  CHECK(lmgcli::format_number(0.5) == "0.5");
  CHECK(lmgcli::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(lmgcli::format_number(-2.0) == "-2");
  CHECK(lmgcli::format_number(1e-20) == "1e-20");
}
