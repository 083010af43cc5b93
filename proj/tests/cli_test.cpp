#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "genus_forge/cli.hpp"
#include "genus_forge/json_io.hpp"

namespace genus_forge {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json::Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  CliRun r = run(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::Json::parse(r.out);
  EXPECT_EQ(doc.at("schema"), json::kSchema);
  return doc;
}

TEST(Cli, PointsText) {
  CliRun r = run({"points", "--p", "5", "--a", "1", "--b", "0"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("points (4): inf (0,0) (2,0) (3,0)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("structure: Z/2 x Z/2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"points", "--p", "5", "--a", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"points", "--p", "5", "--a", "1", "--b", "0", "--frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"points", "--p", "9", "--a", "1", "--b", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"preset", "paper-9.9"}).code, kExitUsage);
  EXPECT_EQ(run({"ideal", "--p", "5", "--a", "1", "--b", "0", "--point", "1,1"}).code, kExitDomain);
  EXPECT_EQ(run({"isotropy", "--p", "3", "--form", "1,1,t+1"}).code, kExitDomain);
  EXPECT_EQ(run({"--help"}).code, kExitOk);

  CliRun singular = run({"points", "--p", "5", "--a", "0", "--b", "0"});
  EXPECT_EQ(singular.code, kExitDomain);
  EXPECT_NE(singular.err.find("singular"), std::string::npos);
}

TEST(Cli, GeneraSummary) {
  CliRun r = run({"genera", "--p", "3", "--places", "t,inf", "--rank", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("2 genera, each of size 1, total classes 2"), std::string::npos) << r.out;
}

TEST(Cli, PresetEllipticExample) {
  auto doc = run_json({"preset", "paper-5.1"});
  const auto& classes = doc.at("classify").at("classes");
  ASSERT_EQ(classes.size(), 4u);
  EXPECT_EQ(doc.at("pic").at("mod2_order"), 4);

  const EllipticCurve e(5, 1, 0);
  const auto& first = classes.at(1);
  EXPECT_EQ(json::decode_point(first.at("point"), e), e.point(0, 0));
  auto k = [&](const char* s) { return parse_kelem(s, e); };
  GramMatrix<KElem> golden({{k("2*x*y"), k("-2*x^2-1"), k("0")}, {k("-2*x^2-1"), k("2*y"), k("0")},
                            {k("0"), k("0"), k("1")}});
  EXPECT_EQ(json::decode_gram(first.at("gram"), e), golden);
}

TEST(Cli, PresetLaurentExample) {
  auto doc = run_json({"preset", "paper-5.2"});
  EXPECT_TRUE(doc.at("isotropy").at(0).at("isotropic").get<bool>());
  EXPECT_FALSE(doc.at("isotropy").at(1).at("isotropic").get<bool>());
  EXPECT_TRUE(doc.at("witt").at(0).at("trivial").get<bool>());
  EXPECT_FALSE(doc.at("witt").at(1).at("trivial").get<bool>());
  EXPECT_EQ(doc.at("witt").at(1).at("residues"), (json::Json{{"t", 1}, {"inf", 1}}));
  EXPECT_EQ(doc.at("genera").at("genera"), 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"preset", "paper-5.1"},
           {"preset", "paper-5.2", "--json"},
           {"classify", "--p", "7", "--a", "3", "--b", "0", "--mode", "full", "--json"},
           {"points", "--p", "13", "--a", "2", "--b", "5"}}) {
    CliRun a = run(args);
    CliRun b = run(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, ClassifyJsonRoundTrip) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        std::vector<std::string> args{"classify", "--p", std::to_string(p), "--a", std::to_string(a),
                                      "--b", std::to_string(b), "--json"};
        CliRun r = run(args);
        if (r.code == kExitDomain) continue;  // singular
        ASSERT_EQ(r.code, kExitOk) << r.err;
        auto doc = json::Json::parse(r.out);
        const EllipticCurve e = json::decode_curve(doc.at("curve"));
        for (const auto& c : doc.at("classes")) {
          auto g = json::decode_gram(c.at("gram"), e);
          EXPECT_TRUE(g.matrix().is_symmetric());
          EXPECT_TRUE(is_regular(g));
          EXPECT_TRUE(c.at("regular").get<bool>());
          EXPECT_EQ(json::encode(g), c.at("gram"));
        }
      }
    }
  }
}

TEST(Cli, IsotropyWitnessRoundTrip) {
  auto doc = run_json({"isotropy", "--p", "5", "--form", "1,1,t", "--bound", "1"});
  ASSERT_TRUE(doc.at("isotropic").get<bool>());
  auto q = json::decode_laurent_gram(doc.at("form"), 5);
  std::vector<LaurentElem> w;
  for (const auto& x : doc.at("witness")) w.push_back(json::decode_laurent(x, 5));
  EXPECT_TRUE(evaluate(q, w).is_zero());
}

TEST(Cli, JsonToFileKeepsText) {
  const std::string path = ::testing::TempDir() + "genus_forge_cli_test.json";
  CliRun r = run({"pic", "--p", "3", "--ring", "laurent", "--json", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("order 1"), std::string::npos);
  std::ifstream in(path);
  auto doc = json::Json::parse(in);
  EXPECT_EQ(doc.at("order"), 1);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace genus_forge
