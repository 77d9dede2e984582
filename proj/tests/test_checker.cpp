#include <doctest.h>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"
#include "oberwolfach/solver.hpp"

using namespace oberwolfach;

namespace {

std::string failed_check(const VerificationReport& r) {
    const Check* c = r.first_failure();
    return c ? c->name : "";
}

}  // namespace

TEST_CASE("report bookkeeping") {
    VerificationReport r;
    r.add("a", true);
    CHECK(r.passed);
    CHECK(r.summary() == "PASS (1 checks)");
    VerificationReport s;
    s.add("b", false, "broken");
    r.merge(s, "inner.");
    CHECK_FALSE(r.passed);
    CHECK(failed_check(r) == "inner.b");
    CHECK(r.summary() == "FAIL inner.b: broken");
}

TEST_CASE("round robin passes on K*_6") {
    auto fz = round_robin_two_cycles(6);
    CHECK(fz.factors.size() == 5);
    CHECK(verify_factorization(make_host({HostKind::CompleteSymmetric, 6}), fz.factors, CycleType::parse("[2^3]")).passed);
}

TEST_CASE("mutations are named") {
    auto fz = round_robin_two_cycles(6);
    Host host = make_host({HostKind::CompleteSymmetric, 6});
    CycleType f = CycleType::parse("[2^3]");
    auto arcs = to_arc_factors(fz.factors);

    auto deleted = arcs;
    deleted[2].pop_back();
    CHECK_FALSE(verify_factorization(host, deleted, f).passed);

    auto duplicated = arcs;
    duplicated[1].push_back(arcs[0][0]);
    CHECK_FALSE(verify_factorization(host, duplicated, f).passed);

    auto foreign = arcs;
    foreign[0][0].head = yv(9);
    CHECK(failed_check(verify_factorization(host, foreign, f)) != "");

    CHECK(failed_check(verify_factorization(host, arcs, CycleType::parse("[2,4]"))) == "cycle_type");
    auto short_list = arcs;
    short_list.pop_back();
    CHECK(failed_check(verify_factorization(host, short_list, f)) == "factor_count");
}

TEST_CASE("admissible decomposition checks") {
    auto d = small_factor(CycleType::parse("[6]"));
    CHECK(verify_admissible_decomposition(3, d, pattern_x()).passed);

    auto arcs = to_arc_factors(d.factors);
    arcs[2].pop_back();
    auto r = verify_admissible_decomposition(3, arcs, d.type, pattern_x());
    CHECK_FALSE(r.passed);

    auto pictured = small_table().back();
    REQUIRE(pictured.pictured);
    CHECK(verify_admissible_decomposition(6, pictured.decomposition, pattern_x()).passed);

    auto spliced = splice(small_factor(CycleType::parse("[2,6]")), small_factor(CycleType::parse("[6]")));
    CHECK(verify_admissible_decomposition(7, spliced, pattern_x()).passed);

    // A factor holding both y0 and y3 on J*_6 breaks the one-of-each-pair rule.
    auto both = to_arc_factors(d.factors);
    both[0] = DirectedCycle::parse("(y0,y2,y3,x2)").arcs();
    auto rb = verify_admissible_decomposition(3, both, d.type, pattern_x());
    CHECK_FALSE(rb.passed);
    bool named = false;
    for (const auto& c : rb.checks) named = named || (!c.ok && c.name == "one_of_each_pair");
    CHECK(named);

    auto other = pattern_x();
    std::swap(other[0], other[1]);
    CHECK(failed_check(verify_admissible_decomposition(3, d, other)) == "external_pattern");
}

TEST_CASE("cap complementarity") {
    auto eight = verify_cap_complementarity(standard_left_cap(), right_cap(Family::Cycle, 4), standard_centre_piece());
    CHECK(eight.report.passed);
    CHECK(eight.m0 == 8);
    auto ten = verify_cap_complementarity(standard_left_cap(), right_cap(Family::CycleFour, 5), standard_centre_piece());
    CHECK(ten.report.passed);
    CHECK(ten.m0 == 10);
    CHECK(right_cap(Family::CycleFour, 5).cycles.str() == "[4]");

    // Right cap elements in a different order no longer line up with the left cap.
    RightCap shuffled = right_cap(Family::Cycle, 4);
    std::swap(shuffled.elements[0], shuffled.elements[4]);
    auto bad = verify_cap_complementarity(standard_left_cap(), shuffled, standard_centre_piece());
    CHECK_FALSE(bad.report.passed);
}

TEST_CASE("every table row passes") {
    for (const auto& row : right_cap_table()) {
        CAPTURE(family_name(row.family));
        CAPTURE(row.s0);
        auto c = verify_cap_complementarity(standard_left_cap(), row.cap, standard_centre_piece());
        CHECK(c.report.passed);
        CHECK(c.m0 == 2 * row.s0);
    }
    for (const auto& row : small_table()) {
        CAPTURE(row.type.str());
        CHECK(verify_admissible_decomposition(row.decomposition.m, row.decomposition, pattern_x()).passed);
    }
}

TEST_CASE("transposed vertices in a table are caught") {
    auto d = small_factor(CycleType::parse("[4,6]"));
    auto v = d.factors[0].cycles()[0].vertices();
    std::swap(v[0], v[1]);
    std::vector<DirectedCycle> cs{DirectedCycle(v)};
    for (std::size_t i = 1; i < d.factors[0].cycles().size(); ++i) cs.push_back(d.factors[0].cycles()[i]);
    d.factors[0] = TwoRegularDigraph(cs);
    CHECK_FALSE(verify_admissible_decomposition(d.m, d, pattern_x()).passed);

    RightCap r = right_cap(Family::CycleTwo, 5);
    auto pv = r.elements[2].path.vertices();
    std::swap(pv[1], pv[2]);
    r.elements[2].path = DirectedPath(pv);
    CHECK_FALSE(verify_cap_complementarity(standard_left_cap(), r, standard_centre_piece()).report.passed);
}

TEST_CASE("oracle") {
    auto k6 = make_host({HostKind::CompleteSymmetric, 6});
    CHECK(brute_force_factorization(k6, CycleType::parse("[6]"), 0).status == OracleStatus::Nonexistent);
    auto twos = brute_force_factorization(k6, CycleType::parse("[2^3]"), 0);
    CHECK(twos.status == OracleStatus::Found);
    CHECK(twos.factors.size() == 5);
    auto k2 = brute_force_factorization(make_host({HostKind::CompleteSymmetric, 2}), CycleType::parse("[2]"), 0);
    CHECK(k2.status == OracleStatus::Found);
    CHECK(k2.factors.size() == 1);
    CHECK(brute_force_factorization(k6, CycleType::parse("[2,4]"), 1).status == OracleStatus::BudgetExceeded);
    CHECK_THROWS_AS(brute_force_factorization(make_host({HostKind::CompleteSymmetric, 14}), CycleType::parse("[14]"), 0),
                    DomainError);
}
