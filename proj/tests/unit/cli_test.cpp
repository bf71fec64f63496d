#include "arrowtips/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "arrowtips/errors.hpp"

using namespace arrowtips;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "arrowtips");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("arrowtips_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

}  // namespace

TEST(PathLiteral, Parses) {
    const HostPath p = cli::parse_path_literal("M 0,0 L 100,0 C 110,0 120,10 120,20");
    ASSERT_EQ(p.segments().size(), 2u);
    EXPECT_EQ(p.end(), (Point{120, 20}));
    EXPECT_EQ(cli::parse_path_literal("M 0,0 L 1,0 2,0").segments().size(), 2u);
}

TEST(PathLiteral, Rejects) {
    EXPECT_THROW(cli::parse_path_literal(""), InvalidPathError);
    EXPECT_THROW(cli::parse_path_literal("L 0,0"), InvalidPathError);
    EXPECT_THROW(cli::parse_path_literal("M 0,0 L"), InvalidPathError);
    EXPECT_THROW(cli::parse_path_literal("M 0,0 L 1;0"), InvalidPathError);
    EXPECT_THROW(cli::parse_path_literal("M 0,0 C 1,1 2,2"), InvalidPathError);
    EXPECT_THROW(cli::parse_path_literal("M 0,0 1,1"), InvalidPathError);
    EXPECT_THROW(cli::parse_path_literal("M 0,0 L 1,0 M 2,2 L 3,3"), InvalidPathError);
}

TEST_F(CliTest, GalleryDefaultWidths) {
    const fs::path out = dir_ / "g.svg";
    const Result r = run_cli({"gallery", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string doc = slurp(out);
    EXPECT_EQ(count(doc, "<g id=\"scene-"), registry().size() * 3);
    EXPECT_NE(doc.find(">latex&apos; @ 1.6</text>"), std::string::npos);

    const fs::path again = dir_ / "g2.svg";
    ASSERT_EQ(run_cli({"gallery", "--out", again.string()}).code, 0);
    EXPECT_EQ(slurp(again), doc);
}

TEST_F(CliTest, GallerySingleWidthIsOneColumn) {
    const fs::path out = dir_ / "g.svg";
    ASSERT_EQ(run_cli({"gallery", "--widths", "0.8", "--out", out.string()}).code, 0);
    const std::string doc = slurp(out);
    EXPECT_EQ(count(doc, "<g id=\"scene-"), registry().size());
    EXPECT_EQ(count(doc, "<g id=\"scene-1\" transform=\"translate(0 "), 1u);
}

TEST_F(CliTest, GalleryErrors) {
    EXPECT_EQ(run_cli({"gallery", "--out", (dir_ / "missing" / "g.svg").string()}).code, cli::io_error);
    EXPECT_EQ(run_cli({"gallery", "--widths", "0.4,-1", "--out", (dir_ / "g.svg").string()}).code, cli::usage_error);
    EXPECT_FALSE(fs::exists(dir_ / "g.svg"));
    EXPECT_EQ(run_cli({"gallery"}).code, cli::usage_error);
    EXPECT_EQ(run_cli({}).code, cli::usage_error);
}

TEST_F(CliTest, RenderLatex) {
    const fs::path out = dir_ / "r.svg";
    const Result r = run_cli({"render", "--spec", "-latex'", "--path", "M 0,0 L 100,0", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    // right extent of latex' at w = 0.4 is 6 * (0.28 + 0.12) = 2.4
    EXPECT_NE(slurp(out).find("<path d=\"M 0 0 L 97.6 0\""), std::string::npos);
}

TEST_F(CliTest, RenderPlainAndErrors) {
    const fs::path out = dir_ / "r.svg";
    ASSERT_EQ(run_cli({"render", "--spec", "-", "--path", "M 0,0 L 100,0", "--width", "1", "--out", out.string()}).code, 0);
    EXPECT_EQ(count(slurp(out), "<path "), 1u);

    const fs::path bad = dir_ / "bad.svg";
    const Result r = run_cli({"render", "--spec", "x-y", "--path", "M 0,0 L 100,0", "--out", bad.string()});
    EXPECT_EQ(r.code, cli::usage_error);
    EXPECT_NE(r.err.find("unknown tip \"x\""), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(fs::exists(bad));

    EXPECT_EQ(run_cli({"render", "--spec", "-latex'", "--path", "M 0,0 L 1,0", "--out", bad.string()}).code,
              cli::usage_error);
    EXPECT_FALSE(fs::exists(bad));
}

TEST(CliExtents, Values) {
    EXPECT_EQ(run_cli({"extents", "--tip", "angle 60", "--width", "0.4"}).out, "left=-3.116 right=0.6\n");
    EXPECT_EQ(run_cli({"extents", "--tip", "round cap", "--side", "end", "--width", "1.0"}).out, "left=0 right=1\n");
    EXPECT_EQ(run_cli({"extents", "--tip", "butt cap", "--width", "1.0"}).out, "left=-0.1 right=0.5\n");
    EXPECT_EQ(run_cli({"extents", "--tip", "[", "--side", "start", "--width", "0.4"}).out, "left=-1.5 right=0.2\n");
}

TEST(CliExtents, Errors) {
    const Result r = run_cli({"extents", "--tip", "bogus", "--width", "1"});
    EXPECT_EQ(r.code, cli::usage_error);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run_cli({"extents", "--tip", "o", "--side", "middle", "--width", "1"}).code, cli::usage_error);
    EXPECT_EQ(run_cli({"extents", "--tip", "o", "--width", "0"}).code, cli::usage_error);
}

TEST(CliCatalog, DumpsEveryDeclaration) {
    const Result r = run_cli({"catalog"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, catalog_dump());
}
