#include <doctest.h>

#include <fstream>
#include <sstream>

#include "linhash/claims.hpp"
#include "linhash/cli.hpp"
#include "linhash/serialize.hpp"

using namespace linhash;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("farey subcommand lists F_5") {
  const CliResult r = run({"farey", "--m", "5"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  const std::vector<std::string> expected = {"0/1", "1/5", "1/4", "1/3",
                                             "2/5", "1/2", "3/5", "2/3",
                                             "3/4", "4/5", "1/1"};
  CHECK(j.at("fractions").get<std::vector<std::string>>() == expected);
}

TEST_CASE("pairprob prints the exact fraction") {
  const CliResult r = run(
      {"pairprob", "--family", "twobin-mult", "--p", "7", "--x", "1", "--y", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "2/3\n");
}

TEST_CASE("maxload subcommand") {
  const CliResult r = run({"maxload", "--family", "strided-int", "-m", "12",
                           "--bins", "3", "--set", "strided", "--stride", "3",
                           "--n", "3", "--a", "5"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("maxload") == 3);
  CHECK(j.at("histogram") == Json::array({3, 0, 0}));
}

TEST_CASE("sweep subcommand, exact and MC") {
  const CliResult exact = run({"sweep", "--family", "twobin-mult", "-m", "7",
                               "--set", "random", "--set-seed", "4", "--n", "2"});
  CHECK(exact.code == 0);
  CHECK(Json::parse(exact.out).at("mode") == "exact");

  const CliResult mc =
      run({"sweep", "--family", "twobin-mult", "-m", "7", "--set", "interval",
           "--n", "2", "--trials", "50", "--seed", "9"});
  CHECK(mc.code == 0);
  CHECK(Json::parse(mc.out).at("mode") == "monte-carlo");

  // --trials without --seed is a usage error.
  const CliResult bad = run({"sweep", "--family", "twobin-mult", "-m", "7",
                             "--set", "interval", "--n", "2", "--trials", "50"});
  CHECK(bad.code == 2);
}

TEST_CASE("fdist subcommand CSV") {
  const CliResult r =
      run({"fdist", "--n", "2", "--universe", "8", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k,measure_num,measure_den\n1,1,16\n") == 0);
}

TEST_CASE("overlap subcommand") {
  const CliResult r = run({"overlap", "--p", "7", "--x", "3"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("overlap") == 2);
  CHECK(j.at("excess_num") == 1);
  CHECK(j.at("excess_den") == 4);
}

TEST_CASE("verify subcommand passes and is byte-stable") {
  const CliResult a = run({"verify", "blockZsucks", "collide-1-3", "--seed", "7"});
  CHECK(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j.at("reports").size() == 2);
  CHECK(j.at("reports")[0].at("status") == "pass");
  CHECK(j.at("reports")[1].at("status") == "pass");

  const CliResult b = run({"verify", "blockZsucks", "collide-1-3", "--seed", "7"});
  CHECK(a.out == b.out);  // byte-identical
}

TEST_CASE("verify rejects unknown ids") {
  const CliResult r = run({"verify", "not-a-claim", "--seed", "7"});
  CHECK(r.code == 2);
}

TEST_CASE("verify exits 1 when a claim fails") {
  // A registry with an impossible constant: strided n*[n] maxload is 8, so
  // demanding k = n and n = 9 keeps the experiment valid but the stored
  // fdist-upper constant 0 cannot hold.
  const std::string path = "/tmp/linhash_bad_registry.json";
  {
    std::ofstream f(path);
    f << ClaimRegistry().config().dump();
  }
  nlohmann::json cfg = ClaimRegistry().config();
  cfg["fdist-upper"]["c"] = 0;
  cfg["fdist-upper"]["nu"] = {100};
  {
    std::ofstream f(path);
    f << cfg.dump();
  }
  const CliResult r =
      run({"verify", "fdist-upper", "--seed", "7", "--registry", path});
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  CHECK(j.at("reports")[0].at("status") == "fail");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"unknown-subcommand"}).code == 2);
  CHECK(run({"farey"}).code == 2);                       // missing --m
  CHECK(run({"pairprob", "--family", "twobin-mult", "--p", "8", "--x", "1",
             "--y", "3"})
            .code == 2);                                 // composite p
}

TEST_CASE("search subcommand emits JSONL trace plus summary") {
  const CliResult r =
      run({"search", "--family", "smart-blocked", "-m", "24", "--bins", "3",
           "--set", "interval", "--n", "5", "--budget", "10", "--seed", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int64_t count = 0;
  Json last;
  while (std::getline(lines, line)) {
    last = Json::parse(line);
    ++count;
  }
  CHECK(count == 11);  // 10 trace lines + summary
  CHECK(last.contains("best"));
  CHECK(last.at("score_mode") == "exact");
}

TEST_CASE("claim registry is complete") {
  const ClaimRegistry registry;
  CHECK(registry.ids().size() == 23);
  for (const auto& id :
       {"blockZsucks", "blockZisok", "prGd", "slh-conditional", "linked-never",
        "farey-dist", "farey-neighbors", "fdist-exact", "fdist-upper",
        "restrictQ", "approxepx", "nothing-collides", "collide-1-3", "pigeons",
        "epicbound", "sum-excess", "dontneedb", "pairwise-2bin", "nisnice",
        "proffak", "random-inputs", "close-pairs", "zm13-consistency"}) {
    CHECK(registry.has(id));
  }
}
