#include "infoparity/cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "infoparity/io.h"
#include "infoparity/synth.h"

namespace infoparity::cli {
namespace {

namespace fs = std::filesystem;

RunConfig Parse(std::vector<const char*> args) {
  args.insert(args.begin(), "infoparity");
  return ParseArgs(static_cast<int>(args.size()), args.data());
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "infoparity");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / ("infoparity_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteCorr(const CorrelationMatrix& cm, const fs::path& p) {
  std::ofstream out(p);
  io::WriteCorrelationCsv(cm, out);
}

TEST(ParseArgsTest, ParityBits) {
  const auto c = Parse({"parity", "--graph", "g.edges", "--log-base", "bits"});
  EXPECT_EQ(c.command, Command::kParity);
  EXPECT_EQ(c.log_base, LogBase::kBits);
  EXPECT_EQ(c.graph_path, "g.edges");
}

TEST(ParseArgsTest, SweepGrid) {
  const auto c = Parse({"sweep", "--corr", "c.csv", "--mean-degrees", "8:40:4"});
  EXPECT_EQ(c.command, Command::kSweep);
  EXPECT_EQ(c.mean_degrees, (std::vector<double>{8, 12, 16, 20, 24, 28, 32, 36, 40}));
  EXPECT_EQ(Parse({"sweep", "--corr", "c.csv"}).mean_degrees.size(), 9u);
  EXPECT_EQ(Parse({"sweep", "--corr", "c.csv", "--mean-degrees", "5,7.5"}).mean_degrees,
            (std::vector<double>{5, 7.5}));
}

TEST(ParseArgsTest, MissingCorrB) {
  try {
    Parse({"compare", "--corr-a", "a.csv"});
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_EQ(e.exit_code(), 2);
    EXPECT_NE(std::string(e.what()).find("--corr-b"), std::string::npos);
  }
}

TEST(ParseArgsTest, Contradictions) {
  EXPECT_THROW(Parse({"build", "--corr", "c.csv", "--series", "s.csv"}), UsageError);
  EXPECT_THROW(Parse({"build"}), UsageError);
  EXPECT_THROW(Parse({"build", "--corr", "c", "--threshold", "0.3", "--mean-degree", "10"}),
               UsageError);
  EXPECT_THROW(Parse({"compare", "--corr-a", "a", "--corr-b", "b", "--cluster-pairs", "x:y"}),
               UsageError);
  EXPECT_THROW(Parse({"sweep", "--corr", "c", "--format", "xml"}), UsageError);
  EXPECT_THROW(Parse({"sweep", "--corr", "c", "--bogus"}), UsageError);
  EXPECT_THROW(Parse({"synth", "--model", "er"}), UsageError);
  EXPECT_THROW(Parse({"synth", "--model", "lattice", "--n", "4"}), UsageError);
  EXPECT_THROW(Parse({"parity", "--graph", "g", "--log-base", "ten"}), UsageError);
  EXPECT_THROW(Parse({}), UsageError);
}

TEST(ParseArgsTest, BuildDefaults) {
  const auto c = Parse({"build", "--corr", "c.csv"});
  EXPECT_EQ(c.mean_degrees, (std::vector<double>{kDefaultMeanDegree}));
  const auto t = Parse({"build", "--corr", "c.csv", "--threshold", "0.4"});
  EXPECT_TRUE(t.mean_degrees.empty());
  EXPECT_EQ(t.threshold, 0.4);
}

TEST(ParseArgsTest, ExportDefaultCutoff) {
  EXPECT_EQ(Parse({"export", "--parity", "p.csv"}).cutoff, kDefaultExportCutoff);
}

TEST(ParseArgsTest, HelpIsNotAnError) {
  const auto r = Invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("parity"), std::string::npos);
}

TEST(HelpersTest, ClusterPairs) {
  EXPECT_EQ(ParseClusterPairs("limbic:frontal,frontal:posterior"),
            (std::vector<ClusterPair>{{"limbic", "frontal"}, {"frontal", "posterior"}}));
  EXPECT_THROW(ParseClusterPairs("nocolon"), Error);
  EXPECT_THROW(ParseMeanDegrees("8:4:1"), Error);
  EXPECT_THROW(ParseMeanDegrees("a,b"), Error);
}

TEST(RunConfigTest, JsonRoundTrip) {
  RunConfig c = Parse({"compare", "--corr-a", "a.csv", "--corr-b", "b.csv", "--partition", "p.csv",
                       "--cluster-pairs", "x:y,y:z", "--mean-degrees", "4,8.25", "--log-base",
                       "nats", "--giant-component", "--workers", "3", "--subject", "s9"});
  EXPECT_EQ(FromJson(nlohmann::json::parse(ToJson(c).dump())), c);
  c.threshold = 0.125;
  c.cutoff = -INFINITY;
  c.block_sizes = {3, 4};
  c.seed = 0xFFFFFFFFFFFFFFFFull;
  EXPECT_EQ(FromJson(nlohmann::json::parse(ToJson(c).dump())), c);
  for (Command k : {Command::kBuild, Command::kSynth, Command::kExport}) {
    c.command = k;
    EXPECT_EQ(FromJson(ToJson(c)), c);
    EXPECT_EQ(ParseCommand(ToString(k)), k);
  }
}

TEST(RunConfigTest, EchoOmitsExecutionDetails) {
  RunConfig c = Parse({"sweep", "--corr", "c.csv", "--workers", "4", "--out", "r.json"});
  const auto echo = EchoJson(c);
  EXPECT_FALSE(echo.contains("workers"));
  EXPECT_FALSE(echo.contains("output_path"));
  EXPECT_TRUE(echo.contains("mean_degrees"));
}

TEST(MainTest, ErrorsAreReportedWithExitCodes) {
  const auto usage = Invoke({"compare", "--corr-a", "a.csv"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(usage.err.rfind("infoparity:", 0), 0u);
  const auto missing = Invoke({"sweep", "--corr", "/nonexistent/c.csv"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("/nonexistent/c.csv"), std::string::npos);
}

TEST(MainTest, SynthParityExportPipeline) {
  const fs::path dir = ScratchDir("pipeline");
  const std::string edges = (dir / "star.edges").string();
  const std::string parity = (dir / "star.csv").string();
  ASSERT_EQ(Invoke({"synth", "--model", "star", "--n", "5", "--out", edges}).code, 0);
  ASSERT_EQ(Invoke({"parity", "--graph", edges, "--out", parity}).code, 0);
  EXPECT_TRUE(fs::exists(parity + ".json"));
  const auto exported = Invoke({"export", "--parity", parity});
  ASSERT_EQ(exported.code, 0) << exported.err;
  std::istringstream in(exported.out);
  EXPECT_EQ(io::ParseWeightedEdgeList(in, "export").size(), 6u);

  const auto to_stdout = Invoke({"parity", "--graph", edges});
  ASSERT_EQ(to_stdout.code, 0) << to_stdout.err;
  EXPECT_EQ(to_stdout.out, Slurp(parity));
}

TEST(MainTest, BuildProducesExactEdgeCount) {
  const fs::path dir = ScratchDir("build");
  WriteCorr(BlockCorrelation(BlocksFromSizes({10, 10}), 0.5, 0.1, 0.05, Seed{1}), dir / "c.csv");
  const auto r = Invoke({"build", "--corr", (dir / "c.csv").string(), "--mean-degree", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(io::ParseEdgeList(in, "build").edge_count(), 40u);
}

TEST(MainTest, CompareOutputsAreByteIdenticalAcrossRunsAndWorkers) {
  const fs::path dir = ScratchDir("compare");
  const auto a = BlockCorrelation(BlocksFromSizes({10, 10, 10}), 0.5, 0.1, 0.05, Seed{3});
  WriteCorr(a, dir / "a.csv");
  WriteCorr(PerturbCorrelation(a, 0.1, Seed{4}), dir / "b.csv");
  {
    std::ofstream p(dir / "part.csv");
    p << "0,x\n1,x\n2,x\n15,y\n16,y\n25,z\n26,z\n";
  }
  std::vector<std::string> base = {"compare", "--corr-a", (dir / "a.csv").string(),
                                   "--corr-b", (dir / "b.csv").string(), "--partition",
                                   (dir / "part.csv").string(), "--mean-degrees", "4:8:2"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return Invoke(args);
  };
  const auto one = with({"--workers", "1"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(with({"--workers", "1"}).out, one.out);
  EXPECT_EQ(with({"--workers", "3"}).out, one.out);
  const auto doc = nlohmann::json::parse(one.out);
  EXPECT_EQ(doc.at("schema"), "infoparity.compare");
  EXPECT_EQ(with({"--format", "csv", "--workers", "2"}).out, with({"--format", "csv"}).out);
}

}  // namespace
}  // namespace infoparity::cli
