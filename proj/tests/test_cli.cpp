#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "posr/io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(POSR_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, ClassifyText) {
  const auto r = run("classify --group cyclic:6 --m 2 --kind posr");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "No: cyclic POSR exception \"m=2 and o(x) <= 6\"\n");
  const auto y = run("classify --group cyclic:7 --m 2 --kind posr");
  EXPECT_EQ(y.code, 0);
  EXPECT_EQ(y.out.rfind("Yes: ", 0), 0U) << y.out;
}

TEST(Cli, ClassifyJson) {
  const auto r = run("classify --group q8 --m 2 --kind posr --output json");
  ASSERT_EQ(r.code, 0);
  const auto j = posr::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "No");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("classify --group cyclic:6").code, 2);
  EXPECT_EQ(run("classify --group bogus:1 --m 2").code, 2);
  EXPECT_EQ(run("search --group cyclic:3").code, 2);
  EXPECT_EQ(run("build --fixed fig1_9 --output graphml").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SearchExitCodes) {
  const auto none = run("search --group cyclic:6 --m 2 --expect none");
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(posr::json::parse(none.out).at("status"), "ExhaustedNone");
  const auto found = run("search --group cyclic:7 --m 2 --expect none");
  EXPECT_EQ(found.code, 1);
  EXPECT_EQ(posr::json::parse(found.out).at("status"), "FoundWitness");
  EXPECT_EQ(run("search --group cyclic:7 --m 2 --expect witness").code, 0);
  const auto aborted = run("search --group q8 --m 2 --max-candidates 10");
  EXPECT_EQ(aborted.code, 3);
  EXPECT_EQ(posr::json::parse(aborted.out).at("status"), "Aborted");
}

TEST(Cli, AntisymmetricSearch) {
  EXPECT_EQ(run("search --antisymmetric --m 7 --k 3 --expect none").code, 0);
  EXPECT_EQ(run("search --antisymmetric --m 5 --k 3 --digons --expect none").code, 0);
}

TEST(Cli, VerifyJsonStableAcrossThreads) {
  const auto a = run("verify --output json --threads 1");
  const auto b = run("verify --output json --threads 4");
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  const auto j = posr::json::parse(a.out);
  EXPECT_EQ(j.at("tier"), "default");
  EXPECT_EQ(j.at("summary").at("total"), posr::default_claims().size());
}

TEST(Cli, VerifyExitMatchesReport) {
  const auto r = run("verify --output json");
  const auto failed = posr::json::parse(r.out).at("summary").at("failed").get<int>();
  EXPECT_EQ(r.code, failed > 0 ? 1 : 0);
}

TEST(Cli, VerifyAbortExitsThree) {
  const std::string path = testing::TempDir() + "posr_abort_claims.json";
  posr::Claim c{"Q8/m=2/POSR", posr::GroupSpec::of(posr::GroupKind::quaternion8), 2, posr::RepKind::posr,
                posr::Expectation::not_exists, std::nullopt, "", posr::Tier::standard};
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    ASSERT_NE(f, nullptr);
    const auto text = posr::claims_to_json({c}).dump();
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  EXPECT_EQ(run("verify --claims " + path + " --max-candidates 10").code, 3);
  EXPECT_EQ(run("verify --claims " + path).code, 0);
}

TEST(Cli, BuildEdgelist) {
  const auto r = run("build --fixed fig1_10");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n 10\n", 0), 0U);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 31);
  EXPECT_NE(run("build --fixed fig1_10 --output dot").out.find("digraph"), std::string::npos);
}

TEST(Cli, BuildFromSets) {
  const std::string path = testing::TempDir() + "posr_z7_sets.json";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    ASSERT_NE(f, nullptr);
    const auto text = posr::to_json(posr::cyclic_posr_words(7, 2)).dump();
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  const auto r = run("build --group cyclic:7 --sets " + path + " --m 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 43);
}

TEST(Cli, AutOnFixedDigraph) {
  const auto r = run(std::string("aut --input ") + POSR_DATA_DIR + "/fig1_9.edges");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("order 1\n", 0), 0U) << r.out;
}

}  // namespace
