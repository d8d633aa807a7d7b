#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsuper/cli.hpp"
#include "qsuper/expr.hpp"
#include "qsuper/json_io.hpp"

using namespace qsuper;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CasimirOfA10Vector) {
  Outcome r = run({"casimir", "--type", "A(1,0)", "--module", "vector", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Algebra A(RootDatum::make("A(1,0)"));
  Element c = parse_expression(A, r.out);
  EXPECT_EQ(c.size(), 9u);
  EXPECT_EQ(render(c) + "\n", r.out);
  Outcome j = run({"--json", "casimir", "--type", "A(1,0)", "--module", "vector"});
  ASSERT_EQ(j.code, 0);
  json doc = json::parse(j.out);
  EXPECT_EQ(doc.at("schema_version"), kJsonSchemaVersion);
  EXPECT_EQ(element_from_json(A, doc.at("result")), c);
}

TEST(Cli, CheckCentral) {
  EXPECT_EQ(run({"check-central", "--type", "A(1,0)", "--expr", "E1"}).code, kExitCheckFailed);
  EXPECT_EQ(run({"check-central", "--type", "A(1,0)", "--module", "vector", "--k", "2"}).code, kExitOk);
  EXPECT_EQ(run({"check-central", "--type", "B(0,1)", "--module", "vector", "--z"}).code, kExitOk);
}

TEST(Cli, CheckWsup) {
  EXPECT_EQ(run({"check-wsup", "--type", "A(1,0)", "--module", "vector"}).code, kExitOk);
  Outcome r = run({"check-wsup", "--type", "A(1,0)", "--raw", "--expr", "K[1,0]"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("fail"), std::string::npos);
}

TEST(Cli, ValidationHappensFirst) {
  EXPECT_EQ(run({"casimir", "--type", "A(1,1)", "--module", "vector"}).code, kExitUsage);
  EXPECT_EQ(run({"casimir", "--type", "A(1,0)"}).code, kExitUsage);
  EXPECT_EQ(run({"casimir", "--type", "A(1,0)", "--module", "simple:1"}).code, kExitUsage);
  EXPECT_EQ(run({"casimir", "--type", "A(1,0)", "--module", "simple:1/3,0"}).code, kExitUsage);
  EXPECT_EQ(run({"casimir", "--type", "A(1,0)", "--module", "vector", "--k", "9"}).code, kExitUsage);
  Outcome p = run({"normalize", "--type", "A(1,0)", "--expr", "E1 + E3"});
  EXPECT_EQ(p.code, kExitUsage);
  EXPECT_NE(p.err.find("position 6"), std::string::npos);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  // a Verma module is not finite-dimensional
  EXPECT_EQ(run({"casimir", "--type", "A(1,0)", "--module", "verma:1,1"}).code, kExitUsage);
}

TEST(Cli, OtherSubcommands) {
  Outcome rd = run({"root-datum", "--type", "B(1,1)"});
  EXPECT_EQ(rd.code, 0);
  EXPECT_NE(rd.out.find("positive isotropic roots (2)"), std::string::npos);
  Outcome n = run({"normalize", "--type", "A(1,0)", "--expr", "K[0,0]"});
  EXPECT_EQ(n.out, "1\n");
  Outcome p = run({"pair", "--type", "A(1,0)", "--left", "(q-q^-1)*F1*F2", "--right", "q*E1*E2 - E2*E1"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "1\n");
  Outcome db = run({"dual-basis", "--type", "A(1,0)", "--weight", "1,1"});
  EXPECT_NE(db.out.find("# dim 2"), std::string::npos);
  Outcome th = run({"theta", "--type", "A(1,0)", "--cutoff", "1"});
  EXPECT_NE(th.out.find("F1 (x) E1"), std::string::npos);
  Outcome hc = run({"hc", "--type", "A(1,0)", "--module", "vector"});
  EXPECT_EQ(hc.out, "-K[-2,-4] + K[-2,-2] + K[0,-2]\n");
  Outcome ch = run({"--json", "character", "--type", "A(1,0)", "--module", "simple:1,1"});
  json doc = json::parse(ch.out);
  EXPECT_EQ(doc.at("result").at("module").at("dim"), 8);
  Outcome z = run({"z-element", "--type", "A(1,0)", "--module", "dual:vector"});
  Outcome c = run({"casimir", "--type", "A(1,0)", "--module", "vector"});
  EXPECT_EQ(z.out, c.out);
}

TEST(Cli, CacheIsUsedAndCorruptionReported) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qsuper_cli_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> args{"casimir", "--type", "A(1,0)", "--module", "vector", "--cache-dir", dir.string()};
  Outcome first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  ASSERT_FALSE(fs::is_empty(dir));
  Outcome second = run(args);
  EXPECT_EQ(second.out, first.out);
  for (auto& f : fs::recursive_directory_iterator(dir))
    if (f.is_regular_file()) {
      std::fstream s(f.path(), std::ios::in | std::ios::out);
      s.seekp(20);
      s << "#";
    }
  Outcome bad = run(args);
  EXPECT_EQ(bad.code, kExitCache);
  EXPECT_NE(bad.err.find("cache"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, VerifyIsReproducible) {
  Outcome a = run({"verify", "--type", "A(1,0)"});
  Outcome b = run({"verify", "--type", "A(1,0)"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  int rows = 0;
  std::istringstream is(a.out);
  for (std::string line; std::getline(is, line);) {
    ++rows;
    EXPECT_EQ(line.rfind("PASS", 0), 0u) << line;
  }
  EXPECT_EQ(rows, 10);
}
