#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oberwolfach/hosts.hpp"
#include "oberwolfach/solver.hpp"

using namespace oberwolfach;

namespace {

bool solved_ok(int n, const char* type, const SolveOptions& o = {}) {
    auto r = solve(n, CycleType::parse(type), o);
    return r.status == SolveStatus::Solved && r.factorization->report.passed &&
           static_cast<int>(r.factorization->factors.size()) == n - 1;
}

}  // namespace

TEST_CASE("wh decompositions") {
    auto seven = wh_decompose(7);
    REQUIRE(seven.h_cycles.size() == 1);
    CHECK(seven.h_cycles[0] == std::vector<int>{0, 3, 6, 2, 5, 1, 4});
    CHECK(wh_decompose(11).h_cycles.size() == 3);
    CHECK(wh_decompose(13).h_cycles.size() == 4);
    for (int m : {9, 15, 21}) {
        auto w = wh_decompose(m);
        CAPTURE(m);
        CHECK(static_cast<int>(w.h_cycles.size()) == (m - 5) / 2);
        std::set<std::pair<int, int>> used;
        for (const auto& c : w.h_cycles) {
            CHECK(static_cast<int>(c.size()) == m);
            CHECK(std::set<int>(c.begin(), c.end()).size() == static_cast<std::size_t>(m));
            for (std::size_t i = 0; i < c.size(); ++i) {
                int a = c[i], b = c[(i + 1) % c.size()];
                int d = ((b - a) % m + m) % m;
                d = std::min(d, m - d);
                CHECK(d >= 3);
                CHECK(used.insert(std::minmax(a, b)).second);
            }
        }
    }
    CHECK_THROWS_AS(wh_decompose(8), DomainError);
}

TEST_CASE("round robin") {
    auto two = round_robin_two_cycles(2);
    REQUIRE(two.factors.size() == 1);
    CHECK(two.factors[0] == TwoRegularDigraph::parse("(x0,y0)"));
    auto six = round_robin_two_cycles(6);
    CHECK(six.factors.size() == 5);
    for (const auto& f : six.factors) CHECK(f.cycles().size() == 3);
    CHECK(six.report.passed);
}

TEST_CASE("small orders") {
    CHECK(small_order_solve(6, CycleType::parse("[6]")).status == SolveStatus::Nonexistent);
    CHECK(small_order_solve(6, CycleType::parse("[2,4]")).factorization->factors.size() == 5);
    SolveOptions o;
    o.search_only = true;
    auto r = small_order_solve(10, CycleType::parse("[4,6]"), o);
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(r.factorization->factors.size() == 9);
    CHECK(r.factorization->report.passed);
    CHECK(r.method == "search");
}

TEST_CASE("solve examples") {
    CHECK(solved_ok(14, "[14]"));
    CHECK(solved_ok(18, "[2,4,4,8]"));
    CHECK(solved_ok(14, "[2,4,8]"));
    CHECK(solved_ok(10, "[10]"));
    auto six = solve(6, CycleType::parse("[6]"));
    CHECK(six.status == SolveStatus::Nonexistent);
    CHECK(six.message.find("no [6]") != std::string::npos);
}

TEST_CASE("solve rejects bad requests") {
    CHECK_THROWS_AS(solve(12, CycleType::parse("[12]")), DomainError);
    CHECK_THROWS_AS(solve(14, CycleType::parse("[3,11]")), DomainError);
    CHECK_THROWS_AS(solve(14, CycleType::parse("[4,8]")), DomainError);
}

TEST_CASE("solve is deterministic") {
    auto a = solve(22, CycleType::parse("[4,6,12]"));
    auto b = solve(22, CycleType::parse("[4,6,12]"));
    CHECK(a.factorization->factors == b.factorization->factors);
    SolveOptions o;
    o.search_only = true;
    o.seed = 7;
    auto c = solve(10, CycleType::parse("[2,8]"), o);
    auto d = solve(10, CycleType::parse("[2,8]"), o);
    CHECK(c.factorization->factors == d.factorization->factors);
}

TEST_CASE("small-order cache") {
    auto path = std::filesystem::temp_directory_path() / "oberwolfach_cache_test.json";
    std::filesystem::remove(path);
    SolveOptions o;
    o.search_only = true;
    o.cache_path = path.string();
    auto first = solve(10, CycleType::parse("[2,2,6]"), o);
    REQUIRE(first.status == SolveStatus::Solved);
    CHECK(first.method == "search");
    CHECK(std::filesystem::exists(path));
    auto second = solve(10, CycleType::parse("[2,2,6]"), o);
    CHECK(second.method == "search (cached)");
    CHECK(second.factorization->factors == first.factorization->factors);
    std::filesystem::remove(path);
}

TEST_CASE("even partitions") {
    CHECK(even_partitions(6).size() == 3);
    CHECK(even_partitions(10).size() == 7);
    CHECK(even_partitions(14).size() == 15);
    CHECK(even_partitions(18).size() == 30);
    CHECK(even_partitions(20).size() == 42);
    CHECK(even_partitions(26).size() == 101);
    CHECK(even_partitions(6).front().str() == "[6]");
}
