#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "test_support.hpp"

#ifndef KAGASKIT_CLI_PATH
#error "KAGASKIT_CLI_PATH must be defined"
#endif

namespace fs = std::filesystem;
namespace kt = kagaskit::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout captured; stderr goes to err_file when given, else discarded
Run run(const std::string& args, const std::string& err_file = "") {
  std::string cmd = std::string("KAGASKIT_DATA_DIR='") + KAGASKIT_TEST_DATA_DIR + "' '" +
                    KAGASKIT_CLI_PATH + "' " + args + " 2>" + (err_file.empty() ? "/dev/null" : err_file);
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("kagaskit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& content) {
    auto p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string golden_pairs() {
    std::string s;
    for (const auto& r : kt::read_tsv(kt::fixture_path("golden_types.tsv"))) s += r[1] + "\t" + r[2] + "\n";
    return write("golden.tsv", s);
  }
};

}  // namespace

TEST_F(Cli, AnnotateGolden) {
  auto out = (dir / "g.m2").string();
  auto r = run("annotate " + golden_pairs() + " -o " + out + " --stats " + (dir / "stats.txt").string());
  ASSERT_EQ(r.code, 0);
  auto m2 = kt::slurp(out);
  for (const auto& row : kt::read_tsv(kt::fixture_path("golden_types.tsv"))) {
    EXPECT_NE(m2.find("|||" + row[0] + "|||"), std::string::npos) << row[0];
  }
  EXPECT_NE(kt::slurp(dir / "stats.txt").find("sentences\t14"), std::string::npos);
}

TEST_F(Cli, SelfScore) {
  auto m2 = (dir / "g.m2").string();
  ASSERT_EQ(run("annotate " + golden_pairs() + " -o " + m2).code, 0);
  auto r = run("m2score --self " + m2);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("overall\t0\t0\t14\t100.00\t0.00\t0.00\n"), std::string::npos) << r.out;
}

TEST_F(Cli, ScorePerfectHypothesis) {
  auto m2 = (dir / "g.m2").string();
  ASSERT_EQ(run("annotate " + golden_pairs() + " -o " + m2).code, 0);
  std::string hyp;
  for (const auto& row : kt::read_tsv(kt::fixture_path("golden_types.tsv"))) hyp += row[2] + "\n";
  auto r = run("m2score " + m2 + " " + write("hyp.txt", hyp) + " --workers 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("overall\t14\t0\t0\t100.00\t100.00\t100.00\n"), std::string::npos) << r.out;
  EXPECT_EQ(run("m2score " + m2 + " " + write("short.txt", "one line\n")).code, 2);
}

TEST_F(Cli, Gleu) {
  auto src = write("src.txt", "a b c d\nx y\n");
  auto ref = write("ref.txt", "a b e d\nx z\n");
  auto r = run("gleu " + src + " " + ref + " " + ref);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "GLEU\t100.00\n");
  r = run("gleu " + src + " " + ref + " " + src + " --max-n 1");
  EXPECT_EQ(r.out, "GLEU\t33.33\n");  // unigram numerators 2 + 0 over 4 + 2
  EXPECT_EQ(run("gleu " + src + " " + ref + " " + write("h.txt", "a\n")).code, 2);
}

TEST_F(Cli, FilterLang8) {
  auto log = (dir / "log.tsv").string();
  auto r = run("filter lang8 " + kt::fixture_path("lang8_rules.tsv").string() + " --log " + log,
               (dir / "err.txt").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "저는 어제 친구와 함께 학교에 갔어요 .\t저는 어제 친구와 함께 학교에 갔습니다 .\n");
  auto rows = kt::read_tsv(log);
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"line", "decision", "rule", "r_t", "r_l", "lcs", "jamo_dist"}));
  std::ifstream exp(kt::fixture_path("lang8_rules.expected"));
  std::size_t i = 1;
  for (std::string rule; std::getline(exp, rule); ++i) EXPECT_EQ(rows[i][2], rule);
  EXPECT_NE(kt::slurp(dir / "err.txt").find("kept 1, discarded 12"), std::string::npos);
}

TEST_F(Cli, FilterNative) {
  auto in = write("native.tsv",
                  "저는 학교에 갔어요\t저는 학교에 갔어요\n"
                  "서울에 갔어요\t써울에 갔어요\n"
                  "저는 학교에 갔어여\t저는 학교에 갔어요\n");
  auto gaz = write("gaz.txt", "서울\n");
  auto r = run("filter native " + in + " --gazetteer " + gaz + " --log " + (dir / "log.tsv").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "저는 학교에 갔어여\t저는 학교에 갔어요\n");
  auto rows = kt::read_tsv(dir / "log.tsv");
  EXPECT_EQ(rows[1][2], "identical");
  EXPECT_EQ(rows[2][2], "named-entity");
  EXPECT_EQ(rows[3][2], "pass");
}

TEST_F(Cli, IngestNikl) {
  auto r = run("ingest nikl " + kt::fixture_path("nikl_sample.xml").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "오후 5시 반에 집에 들었어요.\t오후 5시 반에 집에 들어왔어요.\n");
  fs::create_directories(dir / "corpus");
  fs::copy_file(kt::fixture_path("nikl_sample.xml"), dir / "corpus" / "a.xml");
  fs::copy_file(kt::fixture_path("nikl_sample.xml"), dir / "corpus" / "b.xml");
  r = run("ingest nikl " + (dir / "corpus").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_EQ(run("ingest nikl " + write("bad.xml", "<text><s>x</text>")).code, 2);
}

TEST_F(Cli, MergeMorphemes) {
  EXPECT_EQ(run("merge-morphemes 들어오 았 어요 .").out, "들어왔어요.\n");
  EXPECT_EQ(run("merge-morphemes 언어이 었 어요").out, "언어였어요\n");
}

TEST_F(Cli, Stats) {
  auto m2 = (dir / "g.m2").string();
  ASSERT_EQ(run("annotate " + golden_pairs() + " -o " + m2).code, 0);
  auto r = run("stats " + m2);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("edits\t14\n"), std::string::npos);
  EXPECT_NE(r.out.find("coverage_pct\t100.00\n"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("annotate").code, 2);
  EXPECT_EQ(run("annotate /nonexistent/file.tsv").code, 2);
  EXPECT_EQ(run("stats " + write("bad.m2", "A 0 1|||X|||y|||REQUIRED|||-NONE-|||0\n")).code, 2);
  EXPECT_EQ(run("annotate " + golden_pairs() + " --spell-lexicon /nonexistent").code, 2);
  // a line without a tab is skipped with a warning
  auto r = run("annotate " + write("warn.tsv", "저는 학교에 갔어요\t저는 학교에 갔어요.\nno tab here\n"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("S ", 0), 0u);
  EXPECT_EQ(r.out.find("\nS "), std::string::npos);
  EXPECT_EQ(run("--version").code, 0);
}

TEST_F(Cli, ExternalTaggerFlag) {
  auto in = write("p.tsv", "학교에 갔어요\t학교에 갔어요 .\n");
  auto r = run("annotate " + in + " --tagger-cmd " + kt::fixture_path("fake_tagger.sh").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A 2 2|||INS|||.|||"), std::string::npos) << r.out;
  // the fake tagger does not know 학교에서, the bundled one does
  in = write("q.tsv", "학교에 갔어요\t학교에서 갔어요\n");
  EXPECT_NE(run("annotate " + in).out.find("|||PART|||"), std::string::npos);
  r = run("annotate " + in + " --tagger-cmd " + kt::fixture_path("fake_tagger.sh").string());
  EXPECT_NE(r.out.find("|||UNK|||"), std::string::npos) << r.out;
}

TEST_F(Cli, WorkersDeterminism) {
  std::string s;
  for (const auto& [o, c] : kt::synthetic_pairs(200)) s += o + "\t" + c + "\n";
  auto in = write("syn.tsv", s);
  auto a = run("annotate " + in + " --workers 1");
  auto b = run("annotate " + in + " --workers 8");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
