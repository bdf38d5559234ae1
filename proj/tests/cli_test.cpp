#include "sumcubes/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace sumcubes::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sumcubes_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }

  // Runs the built binary and returns its exit status.
  int run(const std::string& args) const {
    const std::string cmd = std::string(SUMCUBES_CLI) + " " + args + " >" + path("stdout") + " 2>" + path("stderr");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::ostringstream out_, err_;
  fs::path dir_;
};

TEST_F(CliTest, Classes) {
  EXPECT_EQ(cmd_classes(out_), kSuccess);
  const auto text = out_.str();
  EXPECT_NE(text.find("class 6: 1 triple\n  8+8+8  spellings(4): 8+8+8 8+8-1 8-1-1 -1-1-1\n"), std::string::npos);
  EXPECT_NE(text.find("class 4: infeasible"), std::string::npos);
  EXPECT_NE(text.find("class 5: infeasible"), std::string::npos);
  EXPECT_NE(text.find("class 0: 2 triples"), std::string::npos);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST_F(CliTest, GraphDotCounts) {
  GraphOptions opts;
  opts.dot_file = path("g.dot");
  EXPECT_EQ(cmd_graph(opts, out_, err_), kSuccess);
  const auto dot = slurp(path("g.dot"));
  EXPECT_EQ(count(dot, " -> "), 27u);
  EXPECT_EQ(count(dot, "\" [label=\"") - count(dot, " -> "), 9u);

  GraphOptions bin;
  bin.alphabet = "01";
  std::ostringstream out;
  EXPECT_EQ(cmd_graph(bin, out, err_), kSuccess);
  EXPECT_EQ(count(out.str(), " -> "), 8u);

  GraphOptions e1;
  e1.subgraph = "E1";
  e1.dot_file = path("g1.dot");
  EXPECT_EQ(cmd_graph(e1, out_, err_), kSuccess);
  const auto g1 = slurp(path("g1.dot"));
  EXPECT_EQ(count(g1, " -> "), 12u);
  EXPECT_EQ(count(g1, "\" [label=\"") - 12u, 6u);
}

TEST_F(CliTest, GraphErrors) {
  GraphOptions opts;
  opts.subgraph = "E7";
  EXPECT_EQ(cmd_graph(opts, out_, err_), kUsageError);
  GraphOptions unwritable;
  unwritable.dot_file = path("no/such/dir/g.dot");
  EXPECT_EQ(cmd_graph(unwritable, out_, err_), kUsageError);
}

TEST_F(CliTest, GraphHighlightAndDashed) {
  GraphOptions opts;
  opts.highlight_class = 6;
  opts.dashed = "E0";
  std::ostringstream out;
  EXPECT_EQ(cmd_graph(opts, out, err_), kSuccess);
  EXPECT_NE(out.str().find("[label=\"888\", color=red, penwidth=2]"), std::string::npos);
  EXPECT_EQ(count(out.str(), "style=dashed"), 6u);
}

TEST_F(CliTest, Cycle) {
  GraphOptions bin;
  bin.alphabet = "01";
  EXPECT_EQ(cmd_cycle(bin, out_, err_), kSuccess);
  EXPECT_EQ(out_.str(), "cycle 01011100\nlength 8\nleast-rotation 00010111\n");

  std::ostringstream ter;
  EXPECT_EQ(cmd_cycle(GraphOptions{}, ter, err_), kSuccess);
  EXPECT_NE(ter.str().find("length 27\n"), std::string::npos);

  GraphOptions e0;
  e0.subgraph = "E0";
  std::ostringstream err;
  EXPECT_EQ(cmd_cycle(e0, out_, err), kValidationFailure);
  EXPECT_NE(err.str().find("3 strongly connected component(s)"), std::string::npos);
}

TEST_F(CliTest, Validate) {
  EXPECT_EQ(cmd_validate("00010111", "01", 3, "full", out_, err_), kSuccess);
  EXPECT_NE(out_.str().find("verdict complete\n"), std::string::npos);

  std::ostringstream a3;
  EXPECT_EQ(cmd_validate("00088808881118100010110", "018", 3, "full", a3, err_), kValidationFailure);
  EXPECT_NE(a3.str().find("missing 9: 018 080 081 108 180 188 800 801 818\n"), std::string::npos);

  std::ostringstream single;
  EXPECT_EQ(cmd_validate("888", "018", 3, "full", single, err_), kValidationFailure);
  EXPECT_NE(single.str().find("covered 1/27\nmissing 26:"), std::string::npos);

  std::ostringstream e1;
  EXPECT_EQ(cmd_validate("011180188800", "018", 3, "E1", e1, err_), kSuccess);

  EXPECT_EQ(cmd_validate("0120", "018", 3, "full", out_, err_), kUsageError);
  EXPECT_EQ(cmd_validate("000", "018", 3, "E9", out_, err_), kUsageError);
}

TEST_F(CliTest, Search) {
  SearchOptions opts;
  opts.bound = 4;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_search("29", opts, out, err), kSuccess);
  EXPECT_EQ(out.str(), "k,x,y,z,class,path\n29,-3,-2,4,2,0+1+1\n29,1,1,3,2,0+1+1\n");

  opts.bound = 100;
  opts.out_file = path("four.csv");
  std::ostringstream summary;
  EXPECT_EQ(cmd_search("4", opts, summary, err_), kSuccess);
  EXPECT_NE(summary.str().find("infeasible (class 4)"), std::string::npos);
  EXPECT_EQ(slurp(path("four.csv")), "k,x,y,z,class,path\n");

  EXPECT_EQ(cmd_search("abc", opts, out_, err_), kUsageError);
  opts.bound = 0;
  EXPECT_EQ(cmd_search("3", opts, out_, err_), kUsageError);
}

TEST_F(CliTest, ScanSkipsInfeasibleAndRoundTrips) {
  SearchOptions opts;
  opts.bound = 50;
  opts.out_file = path("scan.csv");
  EXPECT_EQ(cmd_scan(1, 20, opts, out_, err_), kSuccess);
  const auto csv = slurp(path("scan.csv"));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const auto k = std::stol(line.substr(0, line.find(',')));
    EXPECT_TRUE(k != 4 && k != 5 && k != 13 && k != 14) << line;
    ++rows;
  }
  EXPECT_GT(rows, 0u);

  std::ostringstream report, diag;
  EXPECT_EQ(cmd_verify_corpus(path("scan.csv"), report, diag), kSuccess);
  EXPECT_NE(diag.str().find("invalid=0 parse_errors=0"), std::string::npos);
}

TEST_F(CliTest, VerifyCorpus) {
  std::ofstream(path("corpus.csv")) << "k,x,y,z\n15,-265,-262,332\n0,0,0,0\n35,1,2,3\n";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify_corpus(path("corpus.csv"), out, err), kValidationFailure);
  EXPECT_NE(out.str().find("2,15,-265,-262,332,true,6,8+8+8,-1-1+8,\n"), std::string::npos);
  EXPECT_NE(out.str().find("3,0,0,0,0,true,0,0+0+0,0+0+0,\n"), std::string::npos);
  EXPECT_NE(out.str().find("4,35,1,2,3,false,8,,,sum=36\n"), std::string::npos);
  EXPECT_NE(err.str().find("line 4: invalid, sum=36"), std::string::npos);

  std::ofstream(path("broken.csv")) << "k,x,y,z\n15,-1,2,2\nnope,1,1,1\n";
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_verify_corpus(path("broken.csv"), out2, err2), kUsageError);
  EXPECT_NE(err2.str().find("line 3: not an integer"), std::string::npos);
  EXPECT_NE(out2.str().find("2,15,-1,2,2,true"), std::string::npos);

  EXPECT_EQ(cmd_verify_corpus(path("missing.csv"), out_, err_), kUsageError);
}

TEST_F(CliTest, KnownSolutionsCorpus) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify_corpus(std::string(SUMCUBES_DATA_DIR) + "/known_solutions.csv", out, err), kSuccess)
      << err.str();
}

TEST_F(CliTest, BinaryExitCodes) {
  EXPECT_EQ(run("classes"), 0);
  EXPECT_EQ(run("validate --alphabet 01 00010111"), 0);
  EXPECT_EQ(run("validate 00088808881118100010110"), 1);
  EXPECT_EQ(run("cycle --subgraph E0"), 1);
  EXPECT_EQ(run("search 29 --bound 4"), 0);
  EXPECT_EQ(slurp(path("stdout")), "k,x,y,z,class,path\n29,-3,-2,4,2,0+1+1\n29,1,1,3,2,0+1+1\n");
  EXPECT_EQ(run("search -15 --bound 5"), 0);
  EXPECT_EQ(slurp(path("stdout")), "k,x,y,z,class,path\n-15,-2,-2,1,3,1+1+1\n");
  EXPECT_EQ(run("search 3 --bound -1"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("graph --class 9"), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(CliTest, BinaryScanIsDeterministic) {
  ASSERT_EQ(run("scan --from -10 --to 10 --bound 20 --jobs 1 --out " + path("a.csv")), 0);
  ASSERT_EQ(run("scan --from -10 --to 10 --bound 20 --jobs 4 --out " + path("b.csv")), 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(run("verify " + path("a.csv")), 0);
}

}  // namespace
}  // namespace sumcubes::cli
