#include <doctest.h>

#include <set>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/hstar.hpp"
#include "oberwolfach/solver.hpp"

using namespace oberwolfach;

namespace {

bool verified(const CycleType& f, int m) {
    auto h = factorize_h_star(f, m);
    return h.factors.size() == 4 && verify_factorization(make_host({HostKind::HStar, m}), h.factors, f).passed;
}

std::set<std::pair<Vertex, Vertex>> edge_set(const UndirectedFactor& f) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (const auto& c : f)
        for (std::size_t i = 0; i < c.size(); ++i) {
            Vertex a = c[i], b = c[(i + 1) % c.size()];
            out.insert(std::minmax(a, b));
        }
    return out;
}

std::vector<int> lengths(const UndirectedFactor& f) {
    std::vector<int> out;
    for (const auto& c : f) out.push_back(static_cast<int>(c.size()));
    return CycleType(out).lengths();
}

}  // namespace

TEST_CASE("two-cycle gadgets") {
    auto g = two_cycle_gadgets(7);
    CHECK(g[0] == DirectedCycle::parse("(x0,x6)"));
    CHECK(g[1] == DirectedCycle::parse("(y0,x6)"));
    CHECK(g[2] == DirectedCycle::parse("(y0,y6)"));
    CHECK(g[3] == DirectedCycle::parse("(x0,y6)"));
}

TEST_CASE("second chain at k = 2") {
    auto c = chain_cycles(ChainPosition::Second, 0, 2);
    CHECK(c[0] == DirectedCycle::parse("(y0,y1,y2,x1)"));
    for (const auto& cyc : c) CHECK(cyc.length() == 4);
}

TEST_CASE("[2,4] on H*_6") {
    auto h = factorize_h_star(CycleType::parse("[2,4]"), 3);
    CHECK(h.factors[0] == TwoRegularDigraph::parse("(x0,x2) (y0,y1,y2,x1)"));
    CHECK(verified(CycleType::parse("[2,4]"), 3));
}

TEST_CASE("Hamiltonian and all-2-cycle types") {
    CHECK(verified(CycleType::parse("[10]"), 5));
    auto h = factorize_h_star(CycleType::parse("[2^4]"), 4);
    for (const auto& f : h.factors) CHECK(f.cycles().size() == 4);
    CHECK(verified(CycleType::parse("[2^4]"), 4));
}

TEST_CASE("every bipartite type for 2 <= m <= 10") {
    int count = 0;
    for (int m = 2; m <= 10; ++m)
        for (const auto& f : even_partitions(2 * m)) {
            CAPTURE(f.str());
            CHECK(verified(f, m));
            ++count;
        }
    CHECK(count == 137);
}

TEST_CASE("bad requests") {
    CHECK_THROWS_AS(factorize_h_star(CycleType::parse("[3,3]"), 3), DomainError);
    CHECK_THROWS_AS(factorize_h_star(CycleType::parse("[4,4]"), 5), DomainError);
}

TEST_CASE("undirected factorizations of H_2m") {
    for (auto [text, m] : {std::pair{"[10]", 5}, std::pair{"[4,6]", 5}, std::pair{"[6]", 3}, std::pair{"[4,4,8]", 8}}) {
        CycleType f = CycleType::parse(text);
        auto parts = haggkvist_undirected(f, m);
        auto a = edge_set(parts[0]), b = edge_set(parts[1]);
        std::set<std::pair<Vertex, Vertex>> all;
        for (const auto& e : h_edges(m)) all.insert(std::minmax(e.a, e.b));
        CAPTURE(text);
        CHECK(lengths(parts[0]) == f.lengths());
        CHECK(lengths(parts[1]) == f.lengths());
        CHECK(a.size() == static_cast<std::size_t>(2 * m));
        CHECK(b.size() == static_cast<std::size_t>(2 * m));
        std::set<std::pair<Vertex, Vertex>> u = a;
        u.insert(b.begin(), b.end());
        CHECK(u == all);
    }
    auto s = haggkvist_by_search(CycleType::parse("[6]"), 3);
    REQUIRE(s.has_value());
    CHECK(edge_set((*s)[0]).size() + edge_set((*s)[1]).size() == 12);
}
