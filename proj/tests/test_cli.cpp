#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rdw");
  std::ostringstream out, err;
  const int code = rdw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "rdw_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("growth on Z prints the exact rows") {
    const auto r = invoke({"growth", "--group", "zd:1", "--radius", "5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "group,radius,count\nzd:1,0,1\nzd:1,1,3\nzd:1,2,5\nzd:1,3,7\nzd:1,4,9\nzd:1,5,11\n");
    CHECK(r.err.empty());
  }

  TEST_CASE("growth --out writes CSV and sidecar") {
    const auto path = scratch("growth.csv");
    const auto r = invoke({"growth", "--group", "free:2", "--radius", "4", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto csv = slurp(path);
    CHECK(csv.rfind("group,radius,count\n", 0) == 0);
    CHECK(csv.find("free:2,4,161\n") != std::string::npos);
    const auto doc = json::parse(slurp(path.string() + ".json"));
    CHECK(doc["schema"] == "rdw/growth");
    CHECK(doc["manifest"]["group"] == "free:2");
    CHECK(doc["manifest"]["version"] == rdw::cli::kVersion);
  }

  TEST_CASE("identical invocations produce byte-identical CSV bodies") {
    const auto a = scratch("rd_a.csv"), b = scratch("rd_b.csv");
    for (const auto& p : {a, b}) {
      REQUIRE(invoke({"rd-degree", "--group", "zd:2", "--family", "random", "--rmax", "6", "--seed", "9",
                      "--out", p.string()})
                  .code == 0);
    }
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("group,family,r,l2,op_lower,op_upper\n", 0) == 0);
    CHECK(lines(slurp(a)) == 8);

    const auto c1 = scratch("c_a.csv"), c2 = scratch("c_b.csv");
    for (const auto& p : {c1, c2}) {
      REQUIRE(invoke({"centroid-verify", "--group", "free:2", "--rmax", "3", "--hradius", "4", "--sample", "40",
                      "--seed", "2", "--out", p.string()})
                  .code == 0);
    }
    CHECK(slurp(c1) == slurp(c2));
    auto j1 = json::parse(slurp(c1.string() + ".json")), j2 = json::parse(slurp(c2.string() + ".json"));
    j1["result"].erase("csv");
    j2["result"].erase("csv");
    CHECK(j1["result"] == j2["result"]);
  }

  TEST_CASE("rd-degree on Z reports s_hat near 1") {
    const auto r = invoke({"rd-degree", "--group", "zd:1", "--family", "balls", "--rmax", "40", "--window", "5:40"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["schema"] == "rdw/rdprofile");
    const double s_hat = doc["result"]["s_hat"];
    CHECK(std::abs(s_hat - 1.0) <= 0.1);
    CHECK(doc["result"]["generators"] == json::array({"a", "a'"}));
  }

  TEST_CASE("opnorm and kesten") {
    auto r = invoke({"opnorm", "--group", "zd:1", "--fn", "gen-sum", "--radius", "10", "--dense"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    const double lower = doc["result"]["lower"];
    CHECK(lower == doctest::Approx(2.0 * std::cos(std::acos(-1.0) / 22.0)).epsilon(1e-12));
    const double dense = doc["result"]["dense_lower"];
    CHECK(dense == doctest::Approx(lower).epsilon(1e-10));

    r = invoke({"kesten", "--group", "free:2", "--fn", "gen-sum", "--radius", "8"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    const double gap = doc["result"]["gap"];
    CHECK(gap >= 0.5);
  }

  TEST_CASE("median-check and hyperplanes") {
    auto r = invoke({"median-check", "--graph", "cube:3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["result"]["is_median"] == true);

    r = invoke({"median-check", "--graph", "k23"});
    CHECK(r.code == 4);
    CHECK(json::parse(r.out)["result"]["violating_triple"].size() == 3);
    CHECK(r.err.rfind("error:check:", 0) == 0);
    CHECK(lines(r.err) == 1);

    r = invoke({"hyperplanes", "--graph", "grid:4x4", "--pair", "0,15"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["result"]["pair"]["width"] == 2);

    r = invoke({"hyperplanes", "--graph", "cycle:6", "--pair", "0,3"});
    CHECK(r.code == 4);
  }

  TEST_CASE("coeff-decay") {
    const auto r = invoke({"coeff-decay", "--group", "zd:1", "--xi", "delta:", "--eta", "delta:aa", "--s", "2",
                           "--radius", "5"});
    REQUIRE(r.code == 0);
    const double v = json::parse(r.out)["result"]["value"];
    CHECK(v == doctest::Approx(1.0 / 9.0));
  }

  TEST_CASE("exit codes and error lines") {
    auto r = invoke({});
    CHECK(r.code == 2);
    r = invoke({"growth", "--group", "nope:3", "--radius", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error:", 0) == 0);
    CHECK(lines(r.err) == 1);
    r = invoke({"growth", "--group", "zd:1"});
    CHECK(r.code == 2);
    r = invoke({"--cap", "100", "growth", "--group", "free:2", "--radius", "10"});
    CHECK(r.code == 3);
    CHECK(r.err.rfind("error:capacity:", 0) == 0);
    r = invoke({"centroid-verify", "--group", "zd:1", "--rmax", "5", "--hradius", "3"});
    CHECK(r.code == 2);

    ::setenv("RD_WORKBENCH_CAP", "50", 1);
    r = invoke({"growth", "--group", "free:2", "--radius", "4"});
    CHECK(r.code == 3);
    r = invoke({"--cap", "1000", "growth", "--group", "free:2", "--radius", "4"});
    CHECK(r.code == 0);
    ::setenv("RD_WORKBENCH_CAP", "lots", 1);
    r = invoke({"growth", "--group", "free:2", "--radius", "4"});
    CHECK(r.code == 2);
    ::unsetenv("RD_WORKBENCH_CAP");
  }
}
