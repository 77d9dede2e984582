#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"
#include "oberwolfach/serialize.hpp"
#include "oberwolfach/solver.hpp"

namespace py = pybind11;
using namespace oberwolfach;

namespace {

// Returns (status, json document or message, method).
py::tuple solve_json(int n, const std::string& factor, std::uint64_t seed, std::uint64_t timeout_ms, bool search_only,
                     const std::string& cache_path) {
    CycleType f = CycleType::parse(factor);
    SolveOptions o;
    o.seed = seed;
    o.timeout_ms = timeout_ms;
    o.search_only = search_only;
    o.cache_path = cache_path;
    SolveResult r;
    {
        py::gil_scoped_release release;
        r = solve(n, f, o);
    }
    switch (r.status) {
        case SolveStatus::Solved: {
            Document d;
            d.n = n;
            d.type = f;
            d.host = {HostKind::CompleteSymmetric, n};
            d.seed = seed;
            d.verified = r.factorization->report.passed;
            d.factors = r.factorization->factors;
            return py::make_tuple("solved", to_json(d), r.method);
        }
        case SolveStatus::Nonexistent: return py::make_tuple("nonexistent", r.message, r.method);
        case SolveStatus::TimedOut: return py::make_tuple("timed_out", r.message, r.method);
    }
    return py::make_tuple("error", "", "");
}

std::string construction_json(const std::string& host, const std::string& factor, const std::string& format) {
    HostKind kind = host_kind_from_string(host);
    return render(construction_document(kind, CycleType::parse(factor)), format_from_string(format));
}

std::vector<std::string> partitions(int n) {
    std::vector<std::string> out;
    for (const auto& f : even_partitions(n)) out.push_back(f.str());
    return out;
}

py::tuple tables_check() {
    std::vector<std::string> failures;
    for (const auto& row : right_cap_table()) {
        auto c = verify_cap_complementarity(standard_left_cap(), row.cap, standard_centre_piece());
        if (!c.report.passed || c.m0 != 2 * row.s0)
            failures.push_back(family_name(row.family) + " s0=" + std::to_string(row.s0) + ": " + c.report.summary());
    }
    for (const auto& row : small_table()) {
        auto r = verify_admissible_decomposition(row.decomposition.m, row.decomposition, pattern_x());
        if (!r.passed) failures.push_back(row.type.str() + ": " + r.summary());
    }
    return py::make_tuple(right_cap_table().size(), small_table().size(), failures);
}

}  // namespace

PYBIND11_MODULE(_oberwolfach, m) {
    m.doc() = "Directed Oberwolfach factorizations of K*_n for n = 2 (mod 4)";
    m.def("solve_json", &solve_json, py::arg("n"), py::arg("factor"), py::arg("seed") = 1,
          py::arg("timeout_ms") = 600000, py::arg("search_only") = false, py::arg("cache_path") = "");
    m.def("verify_json", [](const std::string& text) { return report_json(verify_json(text)); }, py::arg("text"));
    m.def("construction", &construction_json, py::arg("host"), py::arg("factor"), py::arg("format") = "json");
    m.def("canonical_type", [](const std::string& text) { return CycleType::parse(text).str(); }, py::arg("text"));
    m.def("even_partitions", &partitions, py::arg("n"));
    m.def("tables_json", &tables_json);
    m.def("tables_check", &tables_check);
}
