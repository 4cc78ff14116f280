#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(WHITFORM_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("dim: sl2 stabilizes at the Weyl group order") {
  const RunResult r = run("dim --algebra sl2 --eta 1 --chi casimir2=0 --max-degree 8");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["stabilized_dimension"] == 2);
  CHECK(doc["weyl_order"] == 2);
  CHECK(doc["hypothesis_flags"]["matches_prediction"] == true);
}

TEST_CASE("dim: degenerate eta routes through the Levi pipeline") {
  const RunResult r = run("dim --algebra sl3 --eta 1,0 --max-degree 5");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["weyl_eta_order"] == 2);
  CHECK(doc["weyl_order"] == 6);
  CHECK(doc["stabilized_dimension"] == 2);
  CHECK(doc["hypothesis_flags"]["levi_pipeline"] == true);
  CHECK(doc["hypothesis_flags"]["eta_nondegenerate"] == false);
}

TEST_CASE("dim: too small a window exits with the prediction code") {
  const RunResult r = run("dim --algebra sl2 --max-degree 1");
  CHECK(r.exit_code == 3);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["stabilized_dimension"].is_null());
}

TEST_CASE("gram: verma depth three at lambda = 3") {
  const RunResult r = run("gram --algebra sl2 --module verma --lambda 3 --depth 3");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["entries"][0][0] == "36");
  CHECK(doc["symmetric"] == true);
}

TEST_CASE("gram: whittaker matches the worked example") {
  const RunResult r =
      run("gram --algebra sl2 --module whittaker --eta 1 --coeffs 1,0 --depth 1");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["basis_labels"] == nlohmann::json::array({"1", "h[a1]"}));
  CHECK(doc["entries"][0][0] == "1");
  CHECK(doc["entries"][0][1] == "0");
  CHECK(doc["entries"][1][1] == "-4");
}

TEST_CASE("gram: whittaker with degenerate eta is rejected") {
  const RunResult r = run("gram --algebra sl3 --module whittaker --eta 1,0 --depth 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("config file with flag overrides") {
  const std::string path = "/tmp/whitform_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"algebra": "sl2", "eta": {"a1": "1"}, "chi": {"casimir2": "0"}, "max_degree": 4})";
  }
  const RunResult base = run("dim --config " + path);
  CHECK(base.exit_code == 0);
  CHECK(nlohmann::json::parse(base.out)["max_degree"] == 4);
  const RunResult overridden = run("dim --config " + path + " --max-degree 6");
  CHECK(nlohmann::json::parse(overridden.out)["max_degree"] == 6);
  std::remove(path.c_str());
}

TEST_CASE("config may specify a raw Cartan matrix") {
  const std::string path = "/tmp/whitform_test_cartan.json";
  {
    std::ofstream f(path);
    f << R"({"cartan": [[2,-1],[-1,2]], "eta": ["1","1"], "max_degree": 5})";
  }
  const RunResult r = run("dim --config " + path);
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["algebra"] == "A2");
  CHECK(doc["stabilized_dimension"] == 6);
  std::remove(path.c_str());
}

TEST_CASE("errors: unknown algebra and unknown generator") {
  CHECK(run("dim --algebra G2").exit_code == 2);
  CHECK(run("dim --algebra sl2 --chi bogus=1").exit_code == 2);
  CHECK(run("dim --algebra sl2 --eta nonsense").exit_code == 2);
}

TEST_CASE("verify: pbw passes, projections reports the known red identity") {
  const RunResult ok = run("verify pbw --algebra sl2 --samples 25");
  CHECK(ok.exit_code == 0);
  CHECK(nlohmann::json::parse(ok.out)["all_pass"] == true);

  const RunResult red = run("verify projections --algebra sl2 --samples 50");
  CHECK(red.exit_code == 4);
  const auto doc = nlohmann::json::parse(red.out);
  for (const auto& item : doc["results"]) {
    if (item["property"] == "h-semilinearity-over-center")
      CHECK(item["pass"] == false);
    else
      CHECK(item["pass"] == true);
  }
}

TEST_CASE("verify: sl2-oracle forces A1") {
  const RunResult r = run("verify sl2-oracle --algebra sl3");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["algebra"] == "A1");
  CHECK(doc["all_pass"] == true);
}

TEST_CASE("byte-identical reruns and golden files") {
  const std::string dim_args = "dim --algebra sl2 --eta 1 --chi casimir2=0 --max-degree 8";
  const RunResult a = run(dim_args);
  const RunResult b = run(dim_args);
  CHECK(a.out == b.out);
  CHECK(a.out == golden("dim_sl2.json"));

  CHECK(run("roots --algebra B2").out == golden("roots_b2.json"));
  CHECK(run("gram --algebra sl2 --module whittaker --eta 1 --coeffs 1,0 --depth 1 --format csv").out ==
        golden("gram_whittaker_sl2.csv"));
  CHECK(run("dim --algebra sl3 --eta 1,1 --max-degree 6 --format csv").out ==
        golden("dim_sl3.csv"));
}
