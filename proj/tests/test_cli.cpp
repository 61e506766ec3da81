#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "abp/cli.hpp"
#include "support/taxi.hpp"

using namespace abp;
using namespace abp::testing;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string taxi_abp() { return domains_dir() + "/taxi.abp"; }
std::string taxi_p() { return domains_dir() + "/taxi.p"; }
std::string nofuel_p() { return domains_dir() + "/taxi-nofuel.p"; }

}  // namespace

TEST_CASE("plan exit codes follow the contract") {
    CliRun solved = run({"plan", taxi_abp(), taxi_p()});
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find(":status solved") != std::string::npos);
    CHECK(solved.out.find("(:conjecture :weight 0") != std::string::npos);

    CliRun assumed = run({"plan", taxi_abp(), nofuel_p(), "--max-assumptions", "1"});
    CHECK(assumed.exit_code == 0);
    CHECK(assumed.out.find("(:conjecture :weight 1") != std::string::npos);
    CHECK(assumed.out.find("(hasfuel cab38 10)") != std::string::npos);

    CliRun classical = run({"plan", taxi_abp(), nofuel_p(), "--max-assumptions", "0"});
    CHECK(classical.exit_code == 2);
    CHECK(classical.out.find(":status no-solution-within-bounds") != std::string::npos);

    CliRun budget = run({"plan", taxi_abp(), taxi_p(), "--node-budget", "1"});
    CHECK(budget.exit_code == 3);

    CliRun missing = run({"plan", domains_dir() + "/nothere.abp", taxi_p()});
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("error") != std::string::npos);

    CliRun unparsable = run({"plan"});
    CHECK(unparsable.exit_code == 1);
}

TEST_CASE("validate accepts plan output and rejects tampering") {
    CliRun planned = run({"plan", taxi_abp(), nofuel_p(), "--max-assumptions", "1"});
    REQUIRE(planned.exit_code == 0);

    auto tmp = std::filesystem::temp_directory_path() / "abp-test-chi.sexp";
    {
        std::ofstream f(tmp);
        f << planned.out;
    }
    CliRun ok = run({"validate", taxi_abp(), nofuel_p(), tmp.string()});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find(":valid true") != std::string::npos);
    CHECK(ok.out.find("(at fred park)") != std::string::npos);

    // drop the assumption and revalidate
    std::string tampered = planned.out;
    std::size_t pos = tampered.find("((hasfuel cab38 10))");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, std::string("((hasfuel cab38 10))").size(), "()");
    {
        std::ofstream f(tmp);
        f << tampered;
    }
    CliRun bad = run({"validate", taxi_abp(), nofuel_p(), tmp.string()});
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find(":valid false") != std::string::npos);
    CHECK(bad.out.find(":first-failure :step 2") != std::string::npos);
    std::filesystem::remove(tmp);
}

TEST_CASE("oracle subcommand reports the minimum weight") {
    CliRun res = run({"oracle", taxi_abp(), nofuel_p(), "--depth", "8", "--weight", "2"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find(":min-weight 1") != std::string::npos);
    CHECK(res.out.find(":witnesses 1") != std::string::npos);
}

TEST_CASE("bench emits rows per instance and bound") {
    CliRun res = run({"bench", domains_dir(), "--repeat", "1", "--format", "json"});
    CHECK(res.exit_code == 0);
    // all four shipped problems at bounds 0 and 2
    std::size_t rows = 0;
    std::istringstream lines(res.out);
    std::string line;
    std::map<std::string, std::map<int, std::uint64_t>> expansions;
    while (std::getline(lines, line)) {
        if (line.find("\"instance\"") == std::string::npos) continue;
        ++rows;
        CHECK(line.find("\"milliseconds\"") != std::string::npos);
        std::size_t i = line.find("\"instance\":\"");
        std::size_t e = line.find("\"expansions\":");
        REQUIRE(i != std::string::npos);
        REQUIRE(e != std::string::npos);
        std::string instance = line.substr(i + 12, line.find('"', i + 12) - (i + 12));
        int bound = line.find("\"bound\":0") != std::string::npos ? 0 : 2;
        expansions[instance][bound] = std::stoull(line.substr(e + 13));
    }
    CHECK(rows == 8);
    CHECK(expansions.size() == 4);
    // the tighter bound never searches more than the looser one
    for (const auto& [instance, per_bound] : expansions) {
        REQUIRE(per_bound.count(0));
        REQUIRE(per_bound.count(2));
        CHECK(per_bound.at(0) <= per_bound.at(2));
    }
}

TEST_CASE("json format round-trips through the report") {
    CliRun res = run({"plan", taxi_abp(), nofuel_p(), "--max-assumptions", "1", "--format",
                      "json"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"status\":\"solved\"") != std::string::npos);
    CHECK(res.out.find("\"weight\":1") != std::string::npos);
    CHECK(res.out.find("(hasfuel cab38 10)") != std::string::npos);
}

TEST_CASE("plan output is byte-identical across runs") {
    auto once = [&](std::vector<std::string> args) { return run(std::move(args)).out; };
    std::vector<std::vector<std::string>> cases{
        {"plan", taxi_abp(), taxi_p()},
        {"plan", taxi_abp(), nofuel_p(), "--max-assumptions", "1"},
        {"plan", taxi_abp(), nofuel_p(), "--widen-assumptions"},
        {"plan", domains_dir() + "/taxi-loaded.abp", domains_dir() + "/taxi-fleet.p"},
        {"oracle", taxi_abp(), nofuel_p(), "--depth", "6", "--weight", "2"},
    };
    for (auto& c : cases) CHECK(once(c) == once(c));
}

TEST_CASE("every shipped problem plans and validates") {
    namespace fs = std::filesystem;
    std::vector<fs::path> domain_files, problem_files;
    for (const auto& entry : fs::directory_iterator(domains_dir())) {
        if (entry.path().extension() == ".abp") domain_files.push_back(entry.path());
        if (entry.path().extension() == ".p") problem_files.push_back(entry.path());
    }
    REQUIRE(domain_files.size() >= 2);
    REQUIRE(problem_files.size() >= 4);

    for (const fs::path& pf : problem_files) {
        // pair by declared domain name
        std::string text;
        {
            std::ifstream f(pf);
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        for (const fs::path& df : domain_files) {
            Domain d = parse_domain_file(df.string());
            if (text.find("defproblem") == std::string::npos) continue;
            if (text.find(" " + d.name + "\n") == std::string::npos &&
                text.find(" " + d.name + " ") == std::string::npos)
                continue;
            CliRun planned = run({"plan", df.string(), pf.string()});
            CHECK(planned.exit_code == 0);

            auto tmp = std::filesystem::temp_directory_path() / "abp-ci-chi.sexp";
            {
                std::ofstream f(tmp);
                f << planned.out;
            }
            CliRun valid = run({"validate", df.string(), pf.string(), tmp.string()});
            CHECK(valid.exit_code == 0);
            std::filesystem::remove(tmp);
        }
    }
}
