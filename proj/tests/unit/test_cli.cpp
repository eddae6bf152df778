#include "chflag/cli.hpp"
#include "chflag/transcriptions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace chflag;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string certificate_path() { return (data_dir() / "published_certificate.json").string(); }

std::string tmp(const std::string& name) { return std::string(CHFLAG_TEST_TMP) + "/" + name; }

int count_lines(const std::string& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(Cli, EnumerateText) {
    Result r = run({"enumerate", "--type", "0", "--order", "4", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 32);
}

TEST(Cli, EnumerateJson) {
    Result r = run({"enumerate", "--type", "beta", "--order", "3"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], 8);
    EXPECT_EQ(j["basis"], "K");
    EXPECT_EQ(j["flags"][1]["index"], 1);
}

TEST(Cli, EnumerateUsageErrors) {
    EXPECT_EQ(run({"enumerate", "--type", "W", "--order", "3"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--type", "T", "--order", "2"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--type", "0", "--order", "6"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--type", "0"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--type", "0", "--order", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, TablesDiff) {
    Result r = run({"tables", "--which", "cs", "--diff"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("64/64 entries match"), std::string::npos);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["diff"]["cs"]["ok"], true);
    EXPECT_FALSE(j.contains("reg"));
}

TEST(Cli, TablesAllDiffReportsRegScale) {
    Result r = run({"tables", "--diff"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["diff"]["reg_scale"]["fitted"], "12");
    EXPECT_EQ(j["diff"]["reg_scale"]["stated_in_text"], 24);
    for (const char* key : {"cs", "reg", "ind_T", "ind_V", "fork"}) {
        EXPECT_EQ(j["diff"][key]["ok"], true) << key;
    }
}

TEST(Cli, TablesCsv) {
    Result r = run({"tables", "--which", "fork", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("table,i,j,h,value\n", 0), 0u);
    EXPECT_EQ(count_lines(r.out), 1 + 32 + 1);
    EXPECT_NE(r.out.find("fork.linear,,,8,3\n"), std::string::npos);
}

TEST(Cli, TablesFailingDiffExitsOne) {
    // A data directory whose Table 1 has one entry changed.
    namespace fs = std::filesystem;
    fs::path dir = tmp("altered_data");
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(data_dir())) {
        fs::copy_file(entry.path(), dir / entry.path().filename(), fs::copy_options::overwrite_existing);
    }
    auto j = read_json_file(dir / "cs_table.json");
    j["cs"][0][0]["1"] = 3;
    std::ofstream(dir / "cs_table.json") << j.dump();
    // published_tables() caches, so run the check in a fresh process.
    std::string cmd = "CHFLAG_DATA_DIR=" + dir.string() + " " + CHFLAG_CLI_PATH +
                      " tables --which cs --diff >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 1);
}

TEST(Cli, VerifyPublishedCertificate) {
    Result r = run({"verify", "--certificate", certificate_path()});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["max_coefficient_decimal"], "-1.246394");
    EXPECT_NE(r.err.find("max coefficient -1.246394"), std::string::npos);
}

TEST(Cli, VerifyLowerCFails) {
    Result r = run({"verify", "--certificate", certificate_path(), "--c", "0.34"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["valid"], false);
}

TEST(Cli, VerifyInputErrors) {
    EXPECT_EQ(run({"verify", "--certificate", tmp("missing.json")}).code, 2);
    EXPECT_EQ(run({"verify", "--certificate", certificate_path(), "--c", "0.2"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(Cli, SearchWritesTrace) {
    std::string trace = tmp("trace.jsonl");
    Result r = run({"search", "--max-iters", "2", "--trace", trace});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["iterations"], 2);
    EXPECT_EQ(j["candidate"]["cs_vectors"].size(), 2u);
    std::ifstream in(trace);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        auto rec = nlohmann::json::parse(line);
        EXPECT_EQ(rec["k"], lines);
        EXPECT_EQ(rec["r_k"].size(), 32u);
        ++lines;
    }
    EXPECT_EQ(lines, 2);
}

TEST(Cli, SearchWithSeedCuts) {
    Result r = run({"search", "--c-hi", "0.36", "--max-iters", "1", "--seed-cuts",
                    certificate_path(), "--trace", tmp("seeded.jsonl")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["candidate"]["cs_vectors"].size(), 5u);
    EXPECT_LT(parse_rational(j["c_final"].get<std::string>()), parse_decimal("0.3466"));
}

TEST(Cli, SearchUsageErrors) {
    EXPECT_EQ(run({"search", "--max-iters", "1"}).code, 2);
    EXPECT_EQ(run({"search", "--c-lo", "0.2", "--trace", tmp("x.jsonl")}).code, 2);
    EXPECT_EQ(run({"search", "--tol-c", "abc", "--trace", tmp("x.jsonl")}).code, 2);
}

TEST(Cli, OracleChecks) {
    Result density = run({"oracle", "--check", "density"});
    EXPECT_EQ(density.code, 0);
    EXPECT_EQ(nlohmann::json::parse(density.out)["ok"], true);

    Result blowup = run({"oracle", "--check", "blowup", "--trials", "50", "--seed", "3"});
    EXPECT_EQ(blowup.code, 0);
    auto j = nlohmann::json::parse(blowup.out);
    EXPECT_EQ(j["reports"][0]["seed"], 3);
    EXPECT_EQ(j["reports"][0]["trials"], 50);

    Result chain = run({"oracle", "--check", "chain", "--trials", "5"});
    EXPECT_EQ(chain.code, 0);

    EXPECT_EQ(run({"oracle", "--check", "nothing"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"oracle", "--check", "blowup", "--trials", "30"},
          std::vector<std::string>{"tables", "--which", "reg", "--diff"},
          std::vector<std::string>{"enumerate", "--type", "V", "--order", "4"}}) {
        Result a = run(args);
        Result b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.err, b.err);
    }
}
