// find_brick - searches J*_2m for an admissible decomposition of a given type
// whose external pattern is the standard nine-entry list, and prints the
// factors in the text form used by the embedded tables.
//
//   find_brick --factor "[2,4,4]" --seed 1

#include <iostream>

#include <CLI11.hpp>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"
#include "oberwolfach/search.hpp"

using namespace oberwolfach;

int main(int argc, char** argv) {
    CLI::App app{"search for an admissible brick of J*_2m"};
    std::string spec;
    std::uint64_t seed = 1;
    std::uint64_t nodes = 2'000'000;
    int restarts = 1000;
    app.add_option("--factor", spec, "cycle type, e.g. [2,4,4]")->required();
    app.add_option("--seed", seed, "restart seed");
    app.add_option("--nodes", nodes, "node budget per restart");
    app.add_option("--restarts", restarts, "maximum restarts");
    CLI11_PARSE(app, argc, argv);

    CycleType type = CycleType::parse(spec);
    if (!type.bipartite() || type.order() < 6) {
        std::cerr << "need a bipartite type of order at least 6\n";
        return 1;
    }
    const int m = type.order() / 2;
    SearchProblem p;
    for (int i = 0; i <= m + 1; ++i) {
        p.labels.push_back(xv(i));
        p.labels.push_back(yv(i));
    }
    auto arcs = j_arcs(m);
    p.arcs.assign(arcs.begin(), arcs.end());
    for (const auto& e : pattern_x()) {
        std::set<Vertex> s;
        for (Vertex v : seam_vertices()) s.insert(e.count(v) ? v : shift(v, m));
        for (int j = 2; j <= m - 1; ++j) {
            s.insert(xv(j));
            s.insert(yv(j));
        }
        p.factor_sets.push_back(s);
    }
    p.type = type;

    auto res = search_with_restarts(p, seed, nodes, restarts, std::nullopt);
    if (res.status != SearchStatus::Found) {
        std::cerr << "no decomposition found after " << res.nodes << " nodes\n";
        return 2;
    }
    auto report = verify_admissible_decomposition(m, res.factors, type, pattern_x());
    std::cerr << report.summary() << " after " << res.nodes << " nodes, " << res.restarts + 1 << " runs\n";
    if (!report.passed) return 1;
    for (const auto& f : res.factors) std::cout << TwoRegularDigraph::from_arcs(f).str() << "\n";
    return 0;
}
