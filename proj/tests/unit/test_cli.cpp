#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ballot/cli.hpp"
#include "ballot/report.hpp"
#include "ballot/seqio.hpp"
#include "temp_dir.hpp"

namespace ballot::cli {
namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override { ::setenv(seqio::kCacheEnvVar, cache_.path().c_str(), 1); }
    void TearDown() override { ::unsetenv(seqio::kCacheEnvVar); }

    Result call(std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = run(args, out, err);
        return {status, out.str(), err.str()};
    }

    testing::TempDir cache_;
    testing::TempDir work_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST_F(Cli, EnumerateEmptyWalk) {
    const auto r = call({"enumerate", "--mode", "fixed", "--weights", "1,1", "--terms", "0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0 1\n");
}

TEST_F(Cli, EnumerateWritesFileAndUsesCache) {
    const auto path = (work_.path() / "m.b").string();
    const auto r = call({"enumerate", "--mode", "free", "--weights", "1,1,1", "--terms", "6", "--out", path});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "");
    const auto seq = seqio::read_bfile(std::filesystem::path(path));
    EXPECT_EQ(seq.terms, (std::vector<mpz_class>{1, 1, 2, 4, 9, 21, 51}));
    EXPECT_TRUE(std::filesystem::exists(cache_.path() / "N:1,1,1" / "meta.json"));
    const auto again = call({"enumerate", "--mode", "free", "--weights", "1,1,1", "--terms", "6", "--no-cache"});
    EXPECT_EQ(again.out, seqio::to_bfile(seq));
}

TEST_F(Cli, ValidationErrors) {
    const auto r = call({"enumerate", "--weights", "4,2", "--terms", "3"});
    EXPECT_EQ(r.status, 2);
    EXPECT_EQ(first_line(r.err), "error: NotCoprime");
    EXPECT_EQ(first_line(call({"enumerate", "--weights", "1,2", "--terms", "3"}).err), "error: NotSorted");
    EXPECT_EQ(first_line(call({"enumerate", "--weights", "1,0", "--terms", "3"}).err), "error: NonPositiveWeight");
    EXPECT_EQ(call({"enumerate", "--weights", "1,x", "--terms", "3"}).status, 2);
}

TEST_F(Cli, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {}, {"frobnicate"}, {"enumerate", "--terms", "3"}, {"reproduce", "4d-table"},
             {"enumerate", "--weights", "1,1", "--terms", "3", "--mode", "sideways"}}) {
        const auto r = call(args);
        EXPECT_EQ(r.status, 2);
        EXPECT_EQ(first_line(r.err), "error: UsageError");
    }
    const auto help = call({"--help"});
    EXPECT_EQ(help.status, 0);
    EXPECT_NE(help.out.find("reproduce"), std::string::npos);
}

TEST_F(Cli, ResourceLimit) {
    const auto r = call({"enumerate", "--weights", "1,1,1,1,1,1", "--terms", "100000", "--no-cache"});
    EXPECT_EQ(r.status, 4);
    EXPECT_EQ(first_line(r.err), "error: ResourceLimit");
}

TEST_F(Cli, ComputationError) {
    const auto path = work_.path() / "bad.b";
    std::ofstream(path) << "0 1\n2 2\n";
    const auto r = call({"estimate", "--seq", path.string()});
    EXPECT_EQ(r.status, 3);
    EXPECT_EQ(first_line(r.err), "error: NonContiguousIndices");
}

TEST_F(Cli, ClosedForm) {
    EXPECT_EQ(call({"closed-form", "catalan", "--args", "0,3,10"}).out, "1\n5\n16796\n");
    EXPECT_EQ(call({"closed-form", "super-catalan", "--args", "4,2"}).out, "14\n");
    EXPECT_EQ(call({"closed-form", "walk-count", "--args", "2,1"}).out, "2\n");
    EXPECT_EQ(call({"closed-form", "multinomial", "--args", "1,1,1"}).out, "6\n");
    EXPECT_EQ(call({"closed-form", "discriminant", "--args", "2,1,0"}).out, "2\n");
    EXPECT_EQ(call({"closed-form", "mu", "--args", "2,1"}).out, "27/4\n");
    EXPECT_EQ(first_line(call({"closed-form", "mu", "--args", "4,2"}).err), "error: NotCoprime");
    EXPECT_EQ(first_line(call({"closed-form", "walk-count", "--args", "1,2"}).err), "error: NotSorted");
}

TEST_F(Cli, ReproduceK13) {
    const auto r = call({"reproduce", "k13"});
    EXPECT_EQ(r.status, 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        EXPECT_NE(line.find(" ok"), std::string::npos) << line;
    }
    EXPECT_EQ(count, 16);
    EXPECT_NE(r.out.find("46206511"), std::string::npos);
}

TEST_F(Cli, ReproduceClassicalRow) {
    const auto r = call({"reproduce", "3d-table", "--terms", "100", "--only", "1,1,1", "--json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto reports = seqio::parse_reports(r.out);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].problem_key, "F:1,1,1");
    ASSERT_TRUE(reports[0].fit);
    EXPECT_NEAR(std::stod(reports[0].fit->theta), -4.0, 1e-4);
    EXPECT_EQ(reports[0].mu, "27");
}

TEST_F(Cli, ReproduceIsDeterministicColdAndWarm) {
    const auto cold = call({"reproduce", "3d-table", "--terms", "40", "--only", "2,1,1"});
    const auto warm = call({"reproduce", "3d-table", "--terms", "40", "--only", "2,1,1"});
    const auto uncached = call({"reproduce", "3d-table", "--terms", "40", "--only", "2,1,1", "--no-cache"});
    EXPECT_EQ(cold.status, 0);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(cold.out, uncached.out);
    EXPECT_EQ(call({"reproduce", "3d-table", "--only", "2,2,2"}).status, 2);
}

TEST_F(Cli, EstimateFromFileMatchesWeights) {
    const auto path = (work_.path() / "f.b").string();
    ASSERT_EQ(call({"enumerate", "--weights", "2,1", "--terms", "80", "--out", path}).status, 0);
    for (const auto* mu : {"auto", "27/4", "joint"}) {
        const auto from_file = call({"estimate", "--seq", path, "--mu", mu, "--json"});
        const auto from_weights = call({"estimate", "--weights", "2,1", "--terms", "80", "--mu", mu, "--json"});
        ASSERT_EQ(from_file.status, 0) << from_file.err;
        ASSERT_EQ(from_weights.status, 0) << from_weights.err;
        const auto a = seqio::parse_report(from_file.out);
        const auto b = seqio::parse_report(from_weights.out);
        EXPECT_EQ(a.fit, b.fit) << mu;
        EXPECT_EQ(a.mu, b.mu) << mu;
        EXPECT_EQ(a.terms_digest, b.terms_digest);
        EXPECT_EQ(b.problem_key, "F:2,1");
    }
}

TEST_F(Cli, EstimateText) {
    const auto r = call({"estimate", "--weights", "1,1", "--terms", "100", "--mu", "from-weights", "--order", "10"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("theta          -1.50000000000"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("mu             4\n"), std::string::npos);
    EXPECT_EQ(call({"estimate", "--weights", "1,1", "--mode", "free", "--mu", "from-weights"}).status, 2);
    EXPECT_EQ(call({"estimate", "--weights", "1,1", "--mu", "-3/2"}).status, 2);
    EXPECT_EQ(call({"estimate", "--weights", "1,1", "--mu", "0"}).status, 2);
}

TEST_F(Cli, EstimateStratified) {
    const auto r = call({"estimate", "--weights", "1,1", "--mode", "free", "--terms", "120", "--mu", "joint",
                         "--stratify", "2", "--order", "4", "--json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto reports = seqio::parse_reports(r.out);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].fit->stratum, "0 mod 2");
    EXPECT_EQ(reports[1].fit->stratum, "1 mod 2");
    for (const auto& rep : reports) EXPECT_NEAR(std::stod(rep.fit->theta), -0.5, 1e-3);
}

TEST_F(Cli, GuessRecurrence) {
    const auto path = (work_.path() / "c.b").string();
    ASSERT_EQ(call({"enumerate", "--weights", "1,1", "--terms", "29", "--out", path}).status, 0);
    const auto r = call({"guess-recurrence", "--seq", path, "--max-order", "1", "--max-degree", "1"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "(n+2)*x(n+1) + (-4n-2)*x(n) = 0\n");

    const auto none = call({"guess-recurrence", "--weights", "2,1,1", "--terms", "99", "--max-order", "4",
                            "--max-degree", "4", "--json"});
    ASSERT_EQ(none.status, 0) << none.err;
    const auto report = seqio::parse_report(none.out);
    EXPECT_EQ(std::get<std::string>(report.recurrence), "not-found(4,4)");
    EXPECT_EQ(report.terms_count, 100u);

    EXPECT_EQ(first_line(call({"guess-recurrence", "--seq", path, "--max-order", "4", "--max-degree", "4"}).err),
              "error: InsufficientTerms");
}

TEST_F(Cli, ExitCodeMapping) {
    EXPECT_EQ(exit_code(ErrorCode::NotCoprime), 2);
    EXPECT_EQ(exit_code(ErrorCode::InvalidKey), 2);
    EXPECT_EQ(exit_code(ErrorCode::ResourceLimit), 4);
    EXPECT_EQ(exit_code(ErrorCode::SingularSystem), 3);
    EXPECT_EQ(exit_code(ErrorCode::CorruptCacheEntry), 3);
}

}  // namespace
}  // namespace ballot::cli
