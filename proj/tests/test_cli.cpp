#include "app.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "symdec");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = symdec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "symdec-cli-test";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path.string();
}

const char* semigroup_job = R"({
  "field": {"char": 0},
  "vars": ["x", "y", "z"],
  "J": ["y^2-x*z", "y^2", "x*z", "x^3-z^2"],
  "I": ["z"]
})";

} // namespace

TEST(Cli, DecomposeText) {
    const auto r = run({"decompose", write_temp("semigroup.json", semigroup_job)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("HF    6  2  2\nH(0)  2  2  2\nH(1)  0  0  0\nH(2)  4  0  0\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("length 10"), std::string::npos);
    EXPECT_NE(r.out.find("G(I) Gorenstein: no"), std::string::npos);
}

TEST(Cli, DecomposeFormJobJson) {
    const auto path = write_temp("xy.json", R"({"vars": ["x", "y"], "form": "X*Y", "I": ["x", "y^2"]})");
    const auto r = run({"--format", "json", "decompose", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["decomposition"]["hf"], nlohmann::json({2, 2}));
    EXPECT_EQ(j["decomposition"]["rows"], nlohmann::json({{2, 2}, {0, 0}}));
    EXPECT_EQ(j["gorenstein"]["verdict"], true);
    // Round trip and determinism.
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    EXPECT_EQ(run({"--format", "json", "decompose", path}).out, r.out);
}

TEST(Cli, CharacteristicOverride) {
    const auto path = write_temp("xy.json", R"({"vars": ["x", "y"], "form": "X*Y", "I": ["x", "y^2"]})");
    const auto r = run({"--char", "5", "--format", "json", "decompose", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["field"], "GF(5)");
    EXPECT_EQ(run({"--char", "6", "decompose", path}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run({"decompose", write_temp("unit.json", R"({"vars": ["x"], "J": ["1"], "I": ["x"]})")}).code, 2);
    EXPECT_EQ(run({"decompose", write_temp("both.json", R"({"vars": ["x"], "J": ["x"], "form": "X", "I": []})")}).code,
              2);
    EXPECT_EQ(run({"decompose", write_temp("bad.json", "{not json")}).code, 2);
    EXPECT_EQ(run({"decompose", "/nonexistent/job.json"}).code, 2);
    EXPECT_EQ(run({"decompose", write_temp("parse.json", R"({"vars": ["x"], "J": ["x^2+"], "I": ["x"]})")}).code, 2);
    EXPECT_EQ(run({"decompose", write_temp("nogor.json", R"({"vars": ["x","y"], "J": ["x^2","x*y","y^2"], "I": ["x"]})")})
                  .code,
              2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, TruncationCap) {
    const auto path = write_temp("deep.json", R"({"vars": ["x","y"], "J": ["x^6","y^6"], "I": ["x"]})");
    EXPECT_EQ(run({"decompose", path}).code, 0);
    EXPECT_EQ(run({"--trunc-cap", "4", "decompose", path}).code, 2);
}

TEST(Cli, Apolar) {
    const auto r = run({"apolar", "X+Y^2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("length 3, socle degree 2"), std::string::npos) << r.out;
    EXPECT_EQ(run({"apolar", "X-X"}).code, 2);
}

TEST(Cli, AdmissibleCheck) {
    EXPECT_EQ(run({"admissible", "check", "-b", "2", "2,2,3,4"}).out, "true\n");
    EXPECT_EQ(run({"admissible", "check", "-b", "2", "(2,1,2)"}).out, "false\n");
    EXPECT_EQ(run({"admissible", "check", "-b", "2", "2,-1"}).code, 2);
    EXPECT_EQ(run({"admissible", "check", "-b", "2", "2,x"}).code, 2);
}

TEST(Cli, AdmissibleEnumerate) {
    const auto r = run({"admissible", "enumerate", "-b", "2", "--h0", "2", "--umax", "3", "--humax", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(2,4,4,2)\n"), std::string::npos);
    EXPECT_NE(r.out.find("count 33\n"), std::string::npos) << r.out;
}

TEST(Cli, Candidates) {
    const auto none = run({"candidates", "(2,2,3,2)"});
    EXPECT_NE(none.out.find("count 0\nstatus: no symmetric decomposition\n"), std::string::npos) << none.out;
    const auto two = run({"candidates", "2,4,1"});
    EXPECT_NE(two.out.find("count 2\nstatus: candidates exist\n"), std::string::npos) << two.out;
    const auto both = run({"--format", "json", "candidates", "4,4,1"});
    const auto j = nlohmann::json::parse(both.out);
    std::vector<nlohmann::json> rows;
    for (const auto& c : j["candidates"])
        rows.push_back(c["rows"]);
    EXPECT_NE(std::find(rows.begin(), rows.end(), nlohmann::json({{1, 2, 1}, {2, 2, 0}, {1, 0, 0}})), rows.end());
    EXPECT_NE(std::find(rows.begin(), rows.end(), nlohmann::json({{1, 1, 1}, {3, 3, 0}, {0, 0, 0}})), rows.end());
    const auto filtered = run({"candidates", "2,4,1,1", "--filters", "prop52,h0pos"});
    EXPECT_NE(filtered.out.find("count 0\n"), std::string::npos);
    EXPECT_EQ(run({"candidates", "2,0,1"}).code, 2);
    EXPECT_EQ(run({"candidates", "2,1", "--filters", "nope"}).code, 2);
}

TEST(Cli, Search) {
    const auto path = write_temp("search.json", R"({
      "vars": ["x", "y"],
      "sequence": [4, 4, 1],
      "sources": [{"J": ["x^2*y^2-x^3", "y^3"]}, {"J": ["y^4-x^5", "x*y"]}, {"form": "X*Y^4"}],
      "ideals": [["x^2", "y^2"], ["x^3", "y^2"]]
    })");
    const auto r = run({"--format", "json", "search", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], 2);
    EXPECT_NE(j["witnesses"][0]["decomposition"], j["witnesses"][1]["decomposition"]);
}

TEST(Cli, VerifyBuiltin) {
    const auto r = run({"verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, VerifyTamperedCorpusFails) {
    auto corpus = nlohmann::json::parse(symdec::cli::builtin_corpus);
    corpus["entries"][0]["expect"]["hf"] = {6, 2, 1};
    const auto r = run({"verify", write_temp("tampered.json", corpus.dump())});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL semigroup-ring:(6,2,2)"), std::string::npos) << r.out;
    EXPECT_EQ(run({"verify", "/nonexistent/corpus.json"}).code, 2);
}
