#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tautring/cache.hpp"
#include "tautring/cli.hpp"

using namespace tautring;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("tautring-test-" + tag);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("expression parser inverts the canonical text form") {
    TautExpression e = parse_expression("35*k2 + 3*k1^2 - 6*k1*p1");
    CHECK(e.str() == "35*k2 + 3*k1^2 - 6*k1*p1");
    CHECK(parse_expression("-p1^2 + 1/2*k1*p2").str() == "1/2*k1*p2 - p1^2");
    CHECK(parse_expression("k2").str() == "k2");
    CHECK(parse_expression("7").str() == "7");
    CHECK(parse_expression(e.str()) == e);
    CHECK_THROWS_AS(parse_expression("k2 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("q3"), std::invalid_argument);
}

TEST_CASE("parser round trips random expressions") {
    unsigned long long seed = 424242;
    auto next = [&](int span) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((seed >> 33) % span);
    };
    for (int trial = 0; trial < 50; ++trial) {
        TautExpression e;
        int terms = 1 + next(5);
        for (int t = 0; t < terms; ++t) {
            TautMonomial m;
            if (next(2)) m = m * TautMonomial::kappa(1 + next(3), 1 + next(2));
            if (next(2)) m = m * TautMonomial::psi(1 + next(4), 1 + next(2));
            e.add_term(m, Rational(next(19) - 9, 1 + next(6)));
        }
        if (e.is_zero()) continue;
        CHECK(parse_expression(e.str()) == e);
    }
}

TEST_CASE("range parser") {
    CHECK(parse_range("1..12") == std::pair<int, int>{1, 12});
    CHECK(parse_range("7") == std::pair<int, int>{7, 7});
    CHECK_THROWS_AS(parse_range("5..2"), std::invalid_argument);
}

TEST_CASE("relations command emits one record per relation") {
    auto res = run_cli({"relations", "--genus", "3", "--n", "4", "--degree", "2", "--format", "json"});
    CHECK(res.code == 0);
    /* families: empty, {1,1}, {1}+a_k (4), a_k=a_l=1 (6) -> 12 records */
    std::size_t count = 0, pos = 0;
    while ((pos = res.out.find("\"relation\"", pos)) != std::string::npos) {
        ++count;
        pos += 10;
    }
    CHECK(count == 12);
}

TEST_CASE("socle command evaluates a parsed class") {
    auto res = run_cli({"socle", "--genus", "3", "--n", "2", "--class", "k2", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out == "1,1\n");
    auto res2 = run_cli({"socle", "--genus", "3", "--n", "2", "--class", "p1*p2"});
    CHECK(res2.code == 0);
    CHECK(res2.out == "5/6 5/6\n");
}

TEST_CASE("verify command exit codes and output") {
    auto res = run_cli({"verify", "det", "--n", "1..3"});
    CHECK(res.code == 0);
    CHECK(res.out.find("FAIL") == std::string::npos);
    std::size_t lines = std::count(res.out.begin(), res.out.end(), '\n');
    CHECK(lines == 3);
}

TEST_CASE("ranks command in csv") {
    auto res = run_cli({"ranks", "--genus", "4", "--n", "1..3", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out.find("4,2,2,4\n") != std::string::npos);   // r^2_4(2) = 4
    CHECK(res.out.find("4,3,2,7\n") != std::string::npos);   // r^2_4(3) = 7
    CHECK(res.out.find("4,3,3,3\n") != std::string::npos);   // r^3_4(3) = 3
}

TEST_CASE("deterministic output for identical argv") {
    std::vector<std::string> argv = {"relations", "--genus", "4", "--n", "3", "--degree", "2",
                                     "--format", "json"};
    auto a = run_cli(argv);
    auto b = run_cli(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"relations", "--genus", "3"}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"socle", "--genus", "3", "--n", "2", "--class", "k2*p1"}).code == 2);  // degree
    CHECK(run_cli({"relations", "--genus", "1", "--n", "0", "--degree", "2"}).code == 2);  // stability
}

TEST_CASE("matrix command round trips through the cache") {
    auto dir = temp_dir("cache");
    std::vector<std::string> argv = {"matrix", "--n", "3", "--which", "Mhat", "--format", "csv",
                                     "--cache-dir", dir.string()};
    auto first = run_cli(argv);
    CHECK(first.code == 0);
    auto second = run_cli(argv);
    CHECK(second.code == 0);
    CHECK(first.out == second.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache rejects tampered payloads and recomputes") {
    auto dir = temp_dir("tamper");
    ResultCache cache(dir.string());
    cache.store("k1", "payload-bytes");
    CHECK(cache.load("k1").value() == "payload-bytes");

    /* corrupt every record in the directory */
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ofstream f(entry.path(), std::ios::binary | std::ios::app);
        f << "garbage";
    }
    bool corrupt = false;
    CHECK_FALSE(cache.load("k1", &corrupt).has_value());
    CHECK(corrupt);

    /* a fresh store repairs the entry */
    cache.store("k1", "payload-bytes");
    CHECK(cache.load("k1").value() == "payload-bytes");
    std::filesystem::remove_all(dir);
}

TEST_CASE("verification suites aggregate checks") {
    auto checks = run_suite("complement", 2, 4);
    CHECK(checks.size() == 3);
    for (const auto& c : checks) CHECK(c.ok);
}

TEST_CASE("output flag writes the report to a file atomically") {
    auto dir = temp_dir("output");
    std::filesystem::create_directories(dir);
    auto path = dir / "report.json";
    auto res = run_cli({"verify", "det", "--n", "1..2", "--format", "json", "--output", path.string()});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content.find("\"verdict\": \"OK\"") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache ignores entries from a different key") {
    auto dir = temp_dir("keys");
    ResultCache cache(dir.string());
    cache.store("a", "one");
    CHECK_FALSE(cache.load("b").has_value());
    CHECK(cache.load("a").value() == "one");
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache treats records from another artifact version as stale") {
    auto dir = temp_dir("version");
    ResultCache cache(dir.string());
    cache.store("k", "payload");
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        in.close();
        auto pos = content.find("\"version\":\"");
        REQUIRE(pos != std::string::npos);
        content.replace(pos, 12, "\"version\":\"0");
        std::ofstream out(entry.path(), std::ios::binary | std::ios::trunc);
        out << content;
    }
    bool corrupt = false;
    CHECK_FALSE(cache.load("k", &corrupt).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory falls back to the environment variable") {
    auto dir = temp_dir("envdir");
    setenv("TAUTRING_CACHE_DIR", dir.c_str(), 1);
    auto res = run_cli({"matrix", "--n", "1", "--which", "Mhat", "--format", "csv"});
    unsetenv("TAUTRING_CACHE_DIR");
    CHECK(res.code == 0);
    CHECK(std::filesystem::exists(dir));
    bool has_record = false;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        has_record = has_record || entry.path().extension() == ".cache";
    CHECK(has_record);
    std::filesystem::remove_all(dir);
}

TEST_CASE("exceptional suite reports the computed delta") {
    auto res = run_cli({"verify", "exceptional", "--n", "10..10"});
    CHECK(res.code == 0);
    CHECK(res.out.find("delta = 2/13") != std::string::npos);
    CHECK(res.out.find("1/12") != std::string::npos);  // the quoted value, shown alongside
}

TEST_CASE("relations csv format") {
    auto res = run_cli({"relations", "--genus", "2", "--n", "2", "--degree", "1", "--format", "csv"});
    CHECK(res.code == 0);
    CHECK(res.out.find("g,n,d,sigma,a,relation") == 0);
    CHECK(res.out.find("k1 - p1 - p2") != std::string::npos);
}
