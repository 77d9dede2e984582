#include <doctest.h>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"
#include "oberwolfach/solver.hpp"

using namespace oberwolfach;

namespace {

const auto kFirst = TwoRegularDigraph::parse("(x0,x1) (y1,y2,x2,x3,y4,y3)");
const auto kSecond = TwoRegularDigraph::parse("(x0,x2,y3,x1,y2,y1)");

bool passes(const AdmissibleDecomposition& d) {
    return verify_admissible_decomposition(d.m, d, pattern_x()).passed;
}

}  // namespace

TEST_CASE("external patterns") {
    ExternalPattern expected{xv(0), xv(1), yv(1)};
    CHECK(external_pattern(kFirst) == expected);
    CHECK(external_pattern(kSecond) == expected);
    CHECK(external_pattern(TwoRegularDigraph::parse("(x2,y3)")).empty());
    CHECK(pattern_str(expected) == "{x0,x1,y1}");
    CHECK(pattern_x().size() == 9);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(kFirst, 4));
    CHECK(is_admissible(kSecond, 3));
    auto with_x5 = TwoRegularDigraph::parse("(x0,x1) (y1,y2,x2,x3,y4,y3) (x5,y5)");
    CHECK_FALSE(is_admissible(with_x5, 4));
    for (const auto& f : small_factor(CycleType::parse("[4,8]")).factors) CHECK(is_admissible(f, 6));
}

TEST_CASE("a [2,6] piece and a shifted [6] piece splice to [2,6,6] on J*_14") {
    auto d = disjoint_union(kFirst, shift(kSecond, 4));
    CHECK(cycle_type_of(d).str() == "[2,6^2]");
    CHECK(is_admissible(d, 7));
    CHECK(external_pattern(d) == ExternalPattern{xv(0), xv(1), yv(1)});
    auto j = j_arcs(7);
    for (const auto& a : d.arcs()) CHECK(j.count(a) == 1);
    // The other order also works.
    auto e = disjoint_union(kSecond, shift(kFirst, 3));
    CHECK(is_admissible(e, 7));
}

TEST_CASE("splice of decompositions") {
    auto d = splice(small_factor(CycleType::parse("[2,6]")), small_factor(CycleType::parse("[6]")));
    CHECK(d.m == 7);
    CHECK(d.type.str() == "[2,6^2]");
    CHECK(passes(d));
    auto twos = splice(small_factor(CycleType::parse("[2^3]")), small_factor(CycleType::parse("[2^3]")));
    CHECK(twos.type.str() == "[2^6]");
    CHECK(twos.pattern == pattern_x());
    CHECK(passes(twos));
}

TEST_CASE("internal patterns") {
    auto e = InternalPatternEntry::parse("(x1,y1,{x0,y0})");
    CHECK(e.str() == "(x1,y1,{x0,y0})");
    CHECK(InternalPatternEntry::parse("(y0,x0,{})").absent.empty());
    const auto& left = standard_left_cap();
    const auto& right = right_cap(Family::Cycle, 4);
    for (int i = 1; i <= 9; ++i) CHECK(internal_pattern(left, i) == internal_pattern(right, i));
    CHECK_THROWS(internal_pattern(left, 0));
    CHECK_THROWS(internal_pattern(left, 10));
}

TEST_CASE("centre piece concatenation") {
    const auto& c = standard_centre_piece();
    auto one = concat_centre(c, 1);
    CHECK(one.c == 4);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(one.pairs[i].q == c.pairs[i].q);
        CHECK(one.pairs[i].u == c.pairs[i].u);
    }
    auto two = concat_centre(c, 2);
    CHECK(two.c == 8);
    for (const auto& p : two.pairs) CHECK(p.q.length() + p.u.length() == 16);
    CHECK(verify_centre_piece(concat_centre(c, 3)).passed);
}

TEST_CASE("assemble") {
    auto eight = assemble(standard_left_cap(), std::nullopt, 0, right_cap(Family::Cycle, 4));
    CHECK(eight.m == 4);
    CHECK(eight.type.str() == "[8]");
    CHECK(passes(eight));
    auto big = assemble(standard_left_cap(), standard_centre_piece(), 1, right_cap(Family::CycleFour, 5));
    CHECK(big.m == 11);
    CHECK(big.type.str() == "[4,18]");
    CHECK(passes(big));
}

TEST_CASE("general factors") {
    CHECK(general_family_of(CycleType::parse("[16,2]")) == std::pair{Family::CycleTwo, 8});
    CHECK_FALSE(general_family_of(CycleType::parse("[8,4]")).has_value());
    CHECK(right_cap(Family::Cycle, 4).elements[3].path == DirectedPath::parse("<y1,x1>"));
    CHECK(passes(general_factor(CycleType::parse("[8]"))));
    CHECK(passes(general_factor(CycleType::parse("[2,16]"))));
    auto ten_four = general_factor(CycleType::parse("[4,10]"));
    CHECK(passes(ten_four));
    auto four = DirectedCycle::parse("(x6,y7,y6,x8)");
    bool found = false;
    for (const auto& f : ten_four.factors)
        for (const auto& c : f.cycles()) found = found || c == four;
    CHECK(found);
}

TEST_CASE("small factors") {
    CHECK(small_factor(CycleType::parse("[6]")).factors[0] == TwoRegularDigraph::parse("(y1,x2,x4,y2,x3,y3)"));
    CHECK(small_factor(CycleType::parse("[4,8]")).factors[0] ==
          TwoRegularDigraph::parse("(y1,x2,y2,x3) (y3,x4,y4,x6,y6,x5,x7,y5)"));
    auto twos = small_factor(CycleType::parse("[2^3]"));
    CHECK(twos.m == 3);
    CHECK(twos.factors.size() == 9);
    for (const auto& f : twos.factors) CHECK(f.cycles().size() == 3);
    CHECK(small_factor_types().size() == 12);
    CHECK_FALSE(has_small_factor(CycleType::parse("[2,4,4]")));
    CHECK(passes(searched_2_4_4()));
    CHECK(small_table().size() == 13);
}

TEST_CASE("drawn cap elements agree with the tables") {
    const auto& left = standard_left_cap();
    const auto& centre = standard_centre_piece();
    const auto& right = right_cap(Family::CycleFour, 5);
    for (const auto& e : pictured_cap_example()) {
        bool l = false, c = false, r = false;
        for (int i = 1; i <= 9; ++i) {
            const auto& idx = static_cast<std::size_t>(i - 1);
            l = l || left.paths[idx] == e.left;
            const auto& pr = centre.pairs[idx];
            // The drawing lists each pair in either order.
            c = c || (e.centre.size() == 2 && ((pr.q == e.centre[0] && pr.u == e.centre[1]) ||
                                               (pr.q == e.centre[1] && pr.u == e.centre[0])));
            r = r || (right.elements[idx].path == e.right.path && right.elements[idx].cycles == e.right.cycles);
        }
        CHECK(l);
        CHECK(c);
        CHECK(r);
    }
}

TEST_CASE("recursion plans") {
    auto plan = j_plan(CycleType::parse("[2,6,6]"));
    REQUIRE(plan.size() == 2);
    CHECK(plan[0].type.str() == "[2,6]");
    CHECK(plan[1].type.str() == "[6]");
    auto p2 = j_plan(CycleType::parse("[4,4,6]"));
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].type.str() == "[4^2]");
    auto p3 = j_plan(CycleType::parse("[2,2,2,8]"));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0].type.str() == "[2^3]");
    CHECK(p3[1].type.str() == "[8]");
    CHECK_THROWS_AS(j_decompose(CycleType::parse("[2^5]")), DomainError);
}

TEST_CASE("j_decompose and the fold for 4 <= m <= 13") {
    int count = 0;
    for (int m = 4; m <= 13; ++m)
        for (const auto& f : even_partitions(2 * m)) {
            if (f.lengths().back() == 2) continue;
            CAPTURE(f.str());
            auto d = j_decompose(f);
            CHECK(passes(d));
            auto w = w_star_factorization(f);
            CHECK(w.size() == 9);
            CHECK(verify_factorization(make_host({HostKind::WStar, m}), w, f).passed);
            ++count;
        }
    CHECK(count == 356);
}

TEST_CASE("W*_14 examples") {
    auto w = w_star_factorization(CycleType::parse("[14]"));
    CHECK(w.size() == 9);
    for (const auto& f : w) CHECK(f.cycles().size() == 1);
    CHECK(verify_factorization(make_host({HostKind::WStar, 7}), w_star_factorization(CycleType::parse("[2,6,6]")),
                               CycleType::parse("[2,6,6]"))
              .passed);
}
