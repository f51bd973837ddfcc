#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "homlie/cli.hpp"
#include "homlie/io.hpp"
#include "homlie/random.hpp"
#include "oracles.hpp"

namespace homlie {
namespace {

namespace fs = std::filesystem;
using io::json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "homlie");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const char* name) { return oracle::fixture(name).string(); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("homlie_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }
  fs::path path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Cli, CheckExample4) {
  const Result r = run({"check", fx("example4.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["is_lie"], false);
  EXPECT_EQ(j["is_hom_lie"], false);
  EXPECT_EQ(j["nullity"], 0);
  EXPECT_TRUE(j["witness"].is_null());
}

TEST(Cli, CheckCrossProduct) {
  const Result r = run({"check", fx("cross_product3.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["is_lie"], true);
  EXPECT_EQ(j["nullity"], 6);
  const LinearMap w = io::map_from_json(j["witness"]);
  EXPECT_FALSE(w.is_zero());
  EXPECT_TRUE(is_in_kernel(cross_product3(), w));
}

TEST(Cli, MatrixGolden) {
  const Result r = run({"matrix", fx("example4.json"), "--format", "plain"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, io::read_text_file(oracle::fixture("example4.plain.txt")));
  const Result j = run({"matrix", fx("example4.json")});
  ASSERT_EQ(j.status, 0);
  EXPECT_EQ(json::parse(j.out)["rows"], 16);
  EXPECT_EQ(run({"matrix", fx("example4.json"), "--format", "xml"}).status, 1);
}

TEST(Cli, Det) {
  const Result r = run({"det", fx("example4.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["det"], "7574844564");
  EXPECT_EQ(json::parse(run({"det", fx("sl2_plus_K4.json")}).out)["det"], "0");
  const Result bad = run({"det", fx("cross_product3.json")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("shape"), std::string::npos);
}

TEST(Cli, Kernel) {
  const Result r = run({"kernel", fx("cross_product3.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto maps = io::maps_from_json(json::parse(r.out));
  EXPECT_EQ(maps.size(), 6u);
  EXPECT_EQ(json::parse(run({"kernel", fx("example4.json")}).out), json::array());
}

TEST(Cli, Verify) {
  const Result yes = run({"verify", fx("cross_product3.json"), fx("identity3.json")});
  ASSERT_EQ(yes.status, 0) << yes.err;
  EXPECT_EQ(json::parse(yes.out)["in_kernel"], true);
  const Result no = run({"verify", fx("cross_product3.json"), fx("rotation3.json")});
  ASSERT_EQ(no.status, 0) << no.err;
  const json j = json::parse(no.out);
  EXPECT_EQ(j["in_kernel"], false);
  ASSERT_EQ(j["defects"].size(), 1u);
  EXPECT_EQ(j["defects"][0]["triple"], json({1, 2, 3}));
  EXPECT_EQ(run({"verify", fx("example4.json"), fx("identity3.json")}).status, 1);
}

TEST(Cli, Restrict) {
  const Result r = run({"restrict", fx("example4.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["support"].size(), 7u);
  EXPECT_EQ(j["matrix"]["cols"], 7);
  EXPECT_EQ(j["rank"], 7);
  EXPECT_TRUE(j["kernel"].empty());
  const Result d = run({"restrict", fx("cross_product3.json"), "--support", "diag"});
  EXPECT_EQ(json::parse(d.out)["kernel"].size(), 3u);
  const Result e = run({"restrict", fx("cross_product3.json"), "--support", "2,1;1,2"});
  ASSERT_EQ(e.status, 0) << e.err;
  EXPECT_EQ(json::parse(e.out)["rank"], 1);
  EXPECT_EQ(run({"restrict", fx("cross_product3.json"), "--support", "9,9"}).status, 1);
  EXPECT_EQ(run({"restrict", fx("cross_product3.json"), "--support", "nope"}).status, 1);
}

TEST(Cli, SampleIsReproducible) {
  const std::vector<std::string> args{"sample", "--dim", "4", "--trials", "40", "--seed", "3"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["p"], 10007);
  EXPECT_EQ(j["trials"], 40);
  EXPECT_NE(a.err.find("not a proof"), std::string::npos);
  const Result q = run({"sample", "--dim", "3", "--trials", "5", "--prime", "0", "--bound", "2"});
  ASSERT_EQ(q.status, 0) << q.err;
  EXPECT_TRUE(json::parse(q.out)["p"].is_null());
  EXPECT_EQ(json::parse(q.out)["full_rank"], 0);
  EXPECT_EQ(run({"sample", "--prime", "10005"}).status, 1);
  EXPECT_EQ(run({"sample", "--dim", "2"}).status, 1);
  EXPECT_EQ(run({"sample", "--trials", "0"}).status, 1);
}

TEST(Cli, TransportRoundTrip) {
  TempDir dir;
  const std::string moved = (dir.path() / "moved.json").string();
  ASSERT_EQ(run({"--output", moved, "transport", fx("cross_product3.json"), fx("rotation3.json")}).status, 0);
  const SkewAlgebra t = io::algebra_from_json(io::parse_json(io::read_text_file(moved)));
  const LinearMap g = io::map_from_json(io::parse_json(io::read_text_file(oracle::fixture("rotation3.json"))));
  EXPECT_EQ(transport(t, *inverse(g)), cross_product3());
  EXPECT_EQ(json::parse(run({"check", moved}).out)["nullity"], 6);

  const std::string singular = dir.write("zero.json", io::to_json(LinearMap(3, FieldSpec::rational())).dump());
  const Result s = run({"transport", fx("cross_product3.json"), singular});
  EXPECT_EQ(s.status, 1);
  EXPECT_NE(s.err.find("singular"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 1);
  EXPECT_EQ(run({"frobnicate"}).status, 1);
  EXPECT_EQ(run({"check"}).status, 1);
  EXPECT_EQ(run({"check", "/nonexistent/file.json"}).status, 1);
  EXPECT_EQ(run({"--help"}).status, 0);
}

// Corrupted variants of a valid file must all exit 1 with a diagnostic,
// never crash and never exit 2.
TEST(Cli, FuzzedInputsAreInputErrors) {
  TempDir dir;
  const std::string base = io::read_text_file(oracle::fixture("example4.json"));
  CounterRng rng(2024);
  const std::string alphabet = "{}[]\",:-/0123456789abc \n";
  int rejected = 0;
  for (int i = 0; i < 150; ++i) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng.below(4));
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng.below(text.size());
      switch (rng.below(3)) {
        case 0: text.erase(pos, 1 + rng.below(5)); break;
        case 1: text.insert(pos, 1, alphabet[rng.below(alphabet.size())]); break;
        default: text[pos] = alphabet[rng.below(alphabet.size())]; break;
      }
    }
    const std::string path = dir.write("fuzz.json", text);
    const Result r = run({"check", path});
    ASSERT_NE(r.status, 2) << text << "\n" << r.err;
    if (r.status == 1) {
      EXPECT_FALSE(r.err.empty());
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 50);
}

TEST(CliBinary, RunsAsProcess) {
  const std::string cmd = std::string("\"") + HOMLIE_CLI_PATH + "\" det \"" + fx("example4.json") + "\" 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = ::pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(out, "{\"det\":\"7574844564\"}\n");
  const std::string bad = std::string("\"") + HOMLIE_CLI_PATH + "\" det /nonexistent >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 1);
}

}  // namespace
}  // namespace homlie
