#include <doctest.h>

#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"

using namespace oberwolfach;

TEST_CASE("arc counts") {
    CHECK(complete_symmetric(2).arcs.size() == 2);
    CHECK(complete_symmetric(6).arcs.size() == 30);
    CHECK(h_star(7).arcs.size() == 56);
    CHECK(w_star(7).arcs.size() == 126);
    CHECK(j_star(7).arcs.size() == 126);
    for (int m = 5; m <= 12; ++m) {
        CHECK(h_star(m).arcs.size() == static_cast<std::size_t>(8 * m));
        CHECK(w_star(m).arcs.size() == static_cast<std::size_t>(18 * m));
        CHECK(j_star(m).arcs.size() == static_cast<std::size_t>(18 * m));
    }
}

TEST_CASE("hosts are regular") {
    for (int m = 5; m <= 9; ++m) {
        auto w = w_star(m);
        for (Vertex v : w.vertices) {
            CHECK(w.out_degree(v) == 9);
            CHECK(w.in_degree(v) == 9);
        }
        auto h = h_star(m);
        for (Vertex v : h.vertices) CHECK(h.out_degree(v) == 4);
    }
}

TEST_CASE("small hosts with doubled edges keep multiplicities") {
    Host h4 = make_host({HostKind::HStar, 2});
    CHECK_FALSE(h4.simple());
    CHECK(h4.arc_count() == 16);
    Host w8 = make_host({HostKind::WStar, 4});
    CHECK_FALSE(w8.simple());
    CHECK(w8.arc_count() == 72);
    CHECK(make_host({HostKind::CompleteSymmetric, 6}).simple());
    CHECK_THROWS_AS(make_host({HostKind::CompleteSymmetric, 1}), DomainError);
}

TEST_CASE("host kind names round trip") {
    for (auto k : {HostKind::CompleteSymmetric, HostKind::HStar, HostKind::WStar, HostKind::JStar})
        CHECK(host_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(host_kind_from_string("Petersen"), DomainError);
}

TEST_CASE("fold maps J* arcs injectively onto W* arcs") {
    for (int m = 5; m <= 9; ++m) {
        auto folded = fold(j_star(m), m);
        CHECK(folded.arcs == w_star(m).arcs);
    }
    CHECK(fold(xv(7), 7) == xv(0));
    CHECK(fold(yv(8), 7) == yv(1));
    CHECK(fold(xv(3), 7) == xv(3));
}

TEST_CASE("folding the spliced [2,6,6] digraph gives a 2-factor of W*_14") {
    auto f = TwoRegularDigraph::parse("(x0,x1) (y1,y2,x2,x3,y4,y3)");
    auto g = TwoRegularDigraph::parse("(x0,x2,y3,x1,y2,y1)");
    auto spliced = disjoint_union(f, shift(g, 4));
    auto folded = fold(spliced, 7);
    CHECK(cycle_type_of(folded).str() == "[2,6^2]");
    CHECK(folded.vertex_set() == make_host({HostKind::WStar, 7}).vertices);
    auto w = w_star(7);
    for (const auto& a : folded.arcs()) CHECK(w.arcs.count(a) == 1);
}
