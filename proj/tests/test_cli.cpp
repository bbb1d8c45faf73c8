#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "filiform/cli.hpp"

using namespace filiform;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  auto d = fs::temp_directory_path() / "filiform_cli_test";
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  out << body;
}

int run_quiet(const std::vector<std::string>& args) {
  std::ostringstream captured;
  auto* old = std::cout.rdbuf(captured.rdbuf());
  int rc = cli::run(args);
  std::cout.rdbuf(old);
  return rc;
}

std::string identity_ip(int n) {
  jsonio::Json j;
  j["gram"] = jsonio::matrix_json(Matrix<Rational>::identity(n));
  return jsonio::dump(j);
}

}  // namespace

TEST_CASE("build writes an algebra that passes jacobi") {
  auto dir = work_dir();
  auto g9 = (dir / "g9.json").string();
  CHECK(run_quiet({"build", "--family", "g", "--dim", "9", "--alpha", "1/2",
                   "--out", g9}) == 0);
  auto j = jsonio::read_json_file(g9);
  CHECK(j.at("schema_version") == "v1");
  CHECK(j.at("dim") == 9);
  CHECK(j.at("family") == "g9");
  CHECK(run_quiet({"jacobi", g9}) == 0);
}

TEST_CASE("restriction violations exit 2") {
  CHECK(run_quiet({"build", "--family", "g", "--dim", "7", "--alpha", "-2"}) ==
        2);
  CHECK(run_quiet({"build", "--family", "g", "--dim", "9", "--alpha",
                   "-5/2"}) == 2);
  CHECK(run_quiet({"build", "--family", "nope", "--dim", "5"}) == 2);
  CHECK(run_quiet({"build", "--family", "m0"}) == 2);  // missing --dim
  CHECK(run_quiet({"no-such-verb"}) == 2);
}

TEST_CASE("unchecked build bypasses the duplicate-family restriction") {
  auto dir = work_dir();
  auto out = (dir / "g7m2.json").string();
  CHECK(run_quiet({"build", "--family", "g", "--dim", "7", "--alpha", "-2",
                   "--unchecked", "--out", out}) == 0);
  CHECK(run_quiet({"jacobi", out}) == 0);
}

TEST_CASE("jacobi flags a corrupted algebra with exit 1") {
  auto dir = work_dir();
  auto bad = dir / "bad.json";
  // m0(5) plus a spurious [X2,X3] = X4 breaks Jacobi at (1,2,3)
  spit(bad, R"({"dim":5,"scalar":"rational","graded":true,"brackets":[
    {"i":1,"j":2,"value":["0","0","1","0","0"]},
    {"i":1,"j":3,"value":["0","0","0","1","0"]},
    {"i":1,"j":4,"value":["0","0","0","0","1"]},
    {"i":2,"j":3,"value":["0","0","0","1","0"]}]})");
  auto rep = (dir / "jrep.json").string();
  CHECK(run_quiet({"jacobi", bad.string(), "--out", rep}) == 1);
  auto j = jsonio::read_json_file(rep);
  CHECK(j.at("ok") == false);
  CHECK(j.at("violations")[0].at("i") == 1);
  CHECK(j.at("violations")[0].at("j") == 2);
  CHECK(j.at("violations")[0].at("k") == 3);
}

TEST_CASE("tgs-check distinguishes verdicts by exit code") {
  auto dir = work_dir();
  auto alg = (dir / "m06.json").string();
  REQUIRE(run_quiet({"build", "--family", "m0", "--dim", "6", "--out", alg}) ==
          0);
  spit(dir / "ip6.json", identity_ip(6));
  spit(dir / "heven.json",
       R"({"basis":[["0","1","0","0","0","0"],["0","0","0","1","0","0"],
                    ["0","0","0","0","0","1"]]})");
  spit(dir / "htop.json",
       R"({"basis":[["0","0","0","0","1","0"],["0","0","0","0","0","1"]]})");
  auto rep = (dir / "trep.json").string();
  CHECK(run_quiet({"tgs-check", alg, (dir / "ip6.json").string(),
                   (dir / "heven.json").string(), "--out", rep}) == 0);
  auto j = jsonio::read_json_file(rep);
  CHECK(j.at("verdict") == true);
  CHECK(j.at("is_subalgebra") == true);
  CHECK(j.at("witness").is_null());

  CHECK(run_quiet({"tgs-check", alg, (dir / "ip6.json").string(),
                   (dir / "htop.json").string(), "--out", rep}) == 1);
  j = jsonio::read_json_file(rep);
  CHECK(j.at("verdict") == false);
  CHECK(!j.at("witness").is_null());
  CHECK(j.at("witness").at("residual") == "1");
}

TEST_CASE("search-graded reports the attained maximum") {
  auto dir = work_dir();
  auto alg = (dir / "m06.json").string();
  REQUIRE(run_quiet({"build", "--family", "m0", "--dim", "6", "--out", alg}) ==
          0);
  spit(dir / "ip6.json", identity_ip(6));
  auto rep = (dir / "srep.json").string();
  CHECK(run_quiet({"search-graded", alg, (dir / "ip6.json").string(), "--out",
                   rep}) == 0);
  auto j = jsonio::read_json_file(rep);
  CHECK(j.at("max_dimension") == 3);
  std::vector<int> even{2, 4, 6};
  bool found = false;
  for (const auto& s : j.at("passing"))
    if (s.get<std::vector<int>>() == even) found = true;
  CHECK(found);
  CHECK(j.at("note").get<std::string>().find("adapted-basis subsets") !=
        std::string::npos);
}

TEST_CASE("classify reports O1 and O2 membership") {
  auto dir = work_dir();
  auto v12 = (dir / "v12.json").string();
  REQUIRE(run_quiet({"build", "--family", "V", "--dim", "12", "--out", v12}) ==
          0);
  auto rep = (dir / "crep.json").string();
  CHECK(run_quiet({"classify", v12, "--out", rep}) == 0);
  auto j = jsonio::read_json_file(rep);
  CHECK(j.at("o1") == true);
  CHECK(j.at("o2") == true);
}

TEST_CASE("construct-m01 writes four files and certifies") {
  auto dir = work_dir() / "m01";
  fs::remove_all(dir);
  CHECK(run_quiet({"construct-m01", "--k", "3", "--out", dir.string()}) == 0);
  for (const char* f :
       {"algebra.json", "subalgebra.json", "witness.json", "report.json"})
    CHECK(fs::exists(dir / f));
  auto rep = jsonio::read_json_file((dir / "report.json").string());
  CHECK(rep.at("certified") == true);
  CHECK(rep.at("dim") == 7);
  CHECK(rep.at("subalgebra_dim") == 3);
  for (const auto& line : rep.at("checks")) CHECK(line.at("ok") == true);

  auto alg = jsonio::read_json_file((dir / "algebra.json").string());
  CHECK(alg.at("scalar") == "radical");
  spit(work_dir() / "ip7.json", identity_ip(7));
  CHECK(run_quiet({"tgs-check", (dir / "algebra.json").string(),
                   (work_dir() / "ip7.json").string(),
                   (dir / "subalgebra.json").string()}) == 0);
  CHECK(run_quiet({"jacobi", (dir / "algebra.json").string()}) == 0);
}

TEST_CASE("kernel-k ties the formula to the nullspace oracle") {
  auto dir = work_dir();
  auto rep = (dir / "krep.json").string();
  CHECK(run_quiet({"kernel-k", "--k", "3", "--b", "1", "--out", rep}) == 0);
  auto j = jsonio::read_json_file(rep);
  CHECK(j.at("formula")[2] == "2");
  CHECK(j.at("nullspace").size() == 1);
  CHECK(j.at("proportionality") == "2");
  CHECK(run_quiet({"kernel-k", "--k", "3"}) == 2);  // zero combination
}

TEST_CASE("quotient-check and iso-check exit codes") {
  CHECK(run_quiet({"quotient-check", "--family", "g", "--dim", "8", "--alpha",
                   "1", "--to-family", "g", "--to-alpha", "1"}) == 0);
  CHECK(run_quiet({"quotient-check", "--family", "g", "--dim", "8", "--alpha",
                   "1", "--to-family", "g", "--to-alpha", "2"}) == 1);
  CHECK(run_quiet({"quotient-check", "--family", "g", "--dim", "7", "--alpha",
                   "-1", "--to-family", "m2"}) == 0);

  auto dir = work_dir();
  auto rep = (dir / "irep.json").string();
  CHECK(run_quiet({"iso-check", "--family", "g", "--dim", "9", "--alpha", "8",
                   "--to-family", "V", "--out", rep}) == 0);
  auto j = jsonio::read_json_file(rep);
  CHECK(j.at("ok") == true);
  CHECK(!j.at("witness").is_null());
  CHECK(run_quiet({"iso-check", "--family", "m0", "--dim", "5", "--to-family",
                   "m2"}) == 1);

  // explicit witness route
  auto w = catalog::gn8_to_vn_witness(9);
  jsonio::Json wj;
  wj["schema_version"] = jsonio::kSchemaVersion;
  wj["matrix"] = jsonio::matrix_json(w);
  spit(dir / "wit.json", jsonio::dump(wj));
  CHECK(run_quiet({"iso-check", "--family", "g", "--dim", "9", "--alpha", "8",
                   "--to-family", "V", "--witness",
                   (dir / "wit.json").string()}) == 0);
  spit(dir / "wbad.json",
       R"({"matrix":[["1","0"],["0","1"]]})");
  CHECK(run_quiet({"iso-check", "--family", "g", "--dim", "9", "--alpha", "8",
                   "--to-family", "V", "--witness",
                   (dir / "wbad.json").string()}) == 2);
}

TEST_CASE("identical inputs produce byte-identical reports") {
  auto dir = work_dir();
  auto a = (dir / "det_a.json").string(), b = (dir / "det_b.json").string();
  for (const auto& out : {a, b})
    REQUIRE(run_quiet({"build", "--family", "g", "--dim", "11", "--alpha",
                       "8", "--out", out}) == 0);
  CHECK(slurp(a) == slurp(b));

  spit(dir / "ip8.json", identity_ip(8));
  auto m28 = (dir / "m28.json").string();
  REQUIRE(run_quiet({"build", "--family", "m2", "--dim", "8", "--out", m28}) ==
          0);
  for (const auto& out : {a, b})
    REQUIRE(run_quiet({"search-graded", m28, (dir / "ip8.json").string(),
                       "--threads", "4", "--out", out}) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("malformed input files exit 2") {
  auto dir = work_dir();
  spit(dir / "garbage.json", "{not json");
  CHECK(run_quiet({"jacobi", (dir / "garbage.json").string()}) == 2);
  CHECK(run_quiet({"jacobi", (dir / "missing.json").string()}) == 2);
  spit(dir / "badscalar.json", R"({"dim":2,"scalar":"real","brackets":[]})");
  CHECK(run_quiet({"jacobi", (dir / "badscalar.json").string()}) == 2);
}
