#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gaspin/cli.hpp"
#include "gaspin/mv_text.hpp"
#include "gaspin/spinor.hpp"

using gaspin::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Result r = invoke(args);
  return json::parse(r.out);
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// A golden file holds "args: <argv>", "exit: <code>", a "---" line and the
// expected stdout.
struct Golden {
  std::vector<std::string> args;
  int exit_code = 0;
  std::string expected;
};

Golden read_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  Golden g;
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("args: ", 0), 0u) << path;
  g.args = split_words(line.substr(6));
  std::getline(in, line);
  EXPECT_EQ(line.rfind("exit: ", 0), 0u) << path;
  g.exit_code = std::stoi(line.substr(6));
  std::getline(in, line);
  EXPECT_EQ(line, "---") << path;
  std::ostringstream rest;
  rest << in.rdbuf();
  g.expected = rest.str();
  return g;
}

}  // namespace

TEST(CliGolden, AllFilesMatch) {
  const std::filesystem::path dir(GASPIN_GOLDEN_DIR);
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".golden") continue;
    ++seen;
    const Golden g = read_golden(entry.path());
    const Result r = invoke(g.args);
    EXPECT_EQ(r.code, g.exit_code) << entry.path().filename() << "\n" << r.err;
    EXPECT_EQ(r.out, g.expected) << entry.path().filename();
  }
  EXPECT_GE(seen, 12);
}

TEST(CliExp, Examples) {
  const json a = invoke_json({"--signature", "0,4", "exp", "--b", "1,0,0,0,0,0"});
  EXPECT_EQ(a["exp"], "1 + 1 e12");
  EXPECT_EQ(a["lambda"], 2.0);

  const json b = invoke_json({"--signature", "1,3", "exp", "--b", "0,0,0,0,0,0"});
  EXPECT_EQ(b["exp"], "1");
  EXPECT_EQ(b["lambda"], 1.0);

  const json c = invoke_json({"--signature", "1,3", "exp", "--b", "0,0,0,0,0,1"});
  EXPECT_EQ(c["rho"], 0.0);

  const json d = invoke_json({"--signature", "2,1", "exp", "--b", "1,0,0"});
  EXPECT_TRUE(d["lambda"].is_null());
  EXPECT_TRUE(d["rho"].is_null());
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"exp"}).code, 2);
  EXPECT_EQ(invoke({"exp", "--b", "1,2"}).code, 2);
  EXPECT_EQ(invoke({"--signature", "9,9", "exp", "--b", "1"}).code, 2);
  EXPECT_EQ(invoke({"--signature", "x", "exp", "--b", "1"}).code, 2);
  EXPECT_EQ(invoke({"--format", "yaml", "exp", "--b", "0,0,0,0,0,0"}).code, 2);
  EXPECT_EQ(invoke({"--tolerance", "-1", "exp", "--b", "0,0,0,0,0,0"}).code, 2);
  EXPECT_EQ(invoke({"spin", "--b", "0,0,0,0,0,0", "--sign", "2"}).code, 2);
  EXPECT_EQ(invoke({"rotate"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--p", "1,0,0,1"}).code, 2);
  EXPECT_EQ(invoke({"decompose", "--s", "1 + e21"}).code, 2);
  EXPECT_EQ(invoke({"--signature", "1,4", "spin", "--b", "0,0,0,0,0,0,0,0,0,0"}).code, 2);
  EXPECT_EQ(invoke({"sample", "--count", "0"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliExitCodes, DomainFailures) {
  // In (1,3), (e12)^2 = +e, so lambda vanishes for B = e12.
  const Result r = invoke({"spin", "--b", "1,0,0,0,0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("LambdaNotPositive"), std::string::npos) << r.err;

  const json j = invoke_json({"spin", "--b", "1,0,0,0,0,0"});
  EXPECT_EQ(j["command"], "spin");
  EXPECT_EQ(j["error"]["code"], "LambdaNotPositive");

  const json k = invoke_json({"spin", "--branch", "adjoint", "--b", "1,0,0,0,0,1"});
  EXPECT_EQ(k["error"]["code"], "NotSimpleBivector");

  const json m = invoke_json({"decompose", "--s", "1 + e1"});
  EXPECT_EQ(m["error"]["code"], "NotSpinElement");

  EXPECT_EQ(invoke({"verify", "--s", "2"}).code, 1);
  EXPECT_EQ(invoke({"verify", "--p", "-1,0,0,0,0,-1,0,0,0,0,1,0,0,0,0,1"}).code, 1);
  EXPECT_EQ(invoke({"verify", "--p", "1,0,0,0,0,1,0,0,0,0,-1,0,0,0,0,-1"}).code, 0);
}

TEST(CliRoundTrip, DecomposeInvertsSpinOnRegularBranch) {
  std::mt19937_64 rng(40);
  const std::vector<std::pair<int, int>> sigs{{0, 4}, {4, 0}, {1, 3}, {2, 2}, {3, 1}};
  for (const auto& [p, q] : sigs) {
    const std::string sig = std::to_string(p) + "," + std::to_string(q);
    int checked = 0;
    while (checked < 20) {
      std::vector<double> b(6);
      std::string btext;
      for (std::size_t i = 0; i < 6; ++i) {
        b[i] = std::uniform_real_distribution<double>(-1.5, 1.5)(rng);
        if (i) btext += ',';
        btext += gaspin::format_number(b[i]);
      }
      const gaspin::Bivector biv(gaspin::Signature(p, q), b);
      if (gaspin::lambda_of(biv) <= 1e-3) continue;
      ++checked;
      const std::string sign = (checked & 1) ? "-1" : "1";
      const json s = invoke_json({"--signature", sig, "spin", "--b", btext, "--sign", sign});
      ASSERT_TRUE(s.contains("s")) << s.dump();
      const json d =
          invoke_json({"--signature", sig, "decompose", "--s", s["s"].get<std::string>()});
      ASSERT_EQ(d["branch"], "regular") << d.dump();
      EXPECT_EQ(d["sign"], std::stoi(sign));
      for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(d["b"][i].get<double>(), b[i], 1e-9);
    }
  }
}

TEST(CliSample, SeededAndReproducible) {
  const Result a = invoke({"--seed", "7", "sample", "--count", "3"});
  const Result b = invoke({"--seed", "7", "sample", "--count", "3"});
  const Result c = invoke({"--seed", "8", "sample", "--count", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  std::istringstream lines(a.out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    const Result v = invoke({"verify", "--s", line});
    EXPECT_EQ(v.code, 0) << line << "\n" << v.out;
  }
  EXPECT_EQ(count, 3);
}

TEST(CliJson, RecordsAreOneLinePerElement) {
  const Result r = invoke({"--format", "json", "--seed", "3", "sample", "--count", "4"});
  std::istringstream lines(r.out);
  int index = 0;
  for (std::string line; std::getline(lines, line); ++index) {
    const json j = json::parse(line);
    EXPECT_EQ(j["command"], "sample");
    EXPECT_EQ(j["index"], index);
    EXPECT_EQ(j["signature"], json::array({1, 3}));
  }
  EXPECT_EQ(index, 4);
}
