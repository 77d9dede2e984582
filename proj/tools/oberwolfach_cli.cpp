// oberwolfach - solve, verify, self-test, audit tables and export constructions.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"
#include "oberwolfach/serialize.hpp"
#include "oberwolfach/solver.hpp"

using namespace oberwolfach;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNonexistent = 2;

int write_output(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return kError;
    }
    f << text;
    return kOk;
}

struct SolveArgs {
    int n = 0;
    std::string factor;
    std::string format = "json";
    std::uint64_t seed = 1;
    std::uint64_t timeout_ms = 600'000;
    std::string out;
    bool search_only = false;
};

int cmd_solve(const SolveArgs& a) {
    Format fmt = format_from_string(a.format);
    CycleType f = CycleType::parse(a.factor);
    SolveOptions o;
    o.seed = a.seed;
    o.timeout_ms = a.timeout_ms;
    o.search_only = a.search_only;
    SolveResult r = solve(a.n, f, o);
    if (r.status == SolveStatus::Nonexistent) {
        std::cerr << r.message << "\n";
        return kNonexistent;
    }
    if (r.status == SolveStatus::TimedOut) {
        std::cerr << "error: " << r.message << "\n";
        return kError;
    }
    Document d;
    d.n = a.n;
    d.type = f;
    d.host = {HostKind::CompleteSymmetric, a.n};
    d.seed = a.seed;
    d.verified = r.factorization->report.passed;
    d.factors = r.factorization->factors;
    return write_output(render(d, fmt), a.out);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cmd_verify(const std::string& path, bool as_json) {
    VerificationReport r = verify_json(read_file(path));
    if (as_json)
        std::cout << report_json(r);
    else
        std::cout << r.summary() << "\n";
    return r.passed ? kOk : kError;
}

int cmd_selftest(int max_n) {
    int failures = 0, rows = 0;
    auto start = std::chrono::steady_clock::now();
    std::printf("%-4s %-24s %-12s %-10s %s\n", "n", "type", "status", "ms", "method");
    for (int n = 6; n <= max_n; n += 4) {
        for (const auto& f : even_partitions(n)) {
            ++rows;
            auto t0 = std::chrono::steady_clock::now();
            std::string status, method;
            bool ok = false;
            try {
                SolveResult r = solve(n, f);
                method = r.method;
                switch (r.status) {
                    case SolveStatus::Solved:
                        ok = r.factorization->report.passed &&
                             static_cast<int>(r.factorization->factors.size()) == n - 1;
                        status = ok ? "verified" : "FAILED";
                        break;
                    case SolveStatus::Nonexistent:
                        ok = n == 6 && f == CycleType(std::vector<int>{6});
                        status = ok ? "nonexistent" : "FAILED";
                        break;
                    case SolveStatus::TimedOut:
                        status = "TIMEOUT";
                        break;
                }
            } catch (const std::exception& e) {
                status = "ERROR";
                method = e.what();
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            std::printf("%-4d %-24s %-12s %-10lld %s\n", n, f.str().c_str(), status.c_str(),
                        static_cast<long long>(ms.count()), method.c_str());
            if (!ok) ++failures;
        }
    }
    auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::printf("%d types, %d failures, %lld ms\n", rows, failures, static_cast<long long>(total.count()));
    return failures ? kError : kOk;
}

int cmd_tables_check() {
    int failures = 0;
    const auto& left = standard_left_cap();
    const auto& centre = standard_centre_piece();
    std::printf("cap rows:\n");
    for (const auto& row : right_cap_table()) {
        auto c = verify_cap_complementarity(left, row.cap, centre);
        bool ok = c.report.passed && c.m0 && *c.m0 == 2 * row.s0;
        if (c.report.passed && !ok) c.report.add("m0", false, "expected " + std::to_string(2 * row.s0));
        std::printf("  %-10s s0=%-3d r=%-3d %s\n", family_name(row.family).c_str(), row.s0, row.cap.r,
                    c.report.summary().c_str());
        if (!ok) ++failures;
    }
    std::printf("decomposition rows:\n");
    for (const auto& row : small_table()) {
        auto r = verify_admissible_decomposition(row.decomposition.m, row.decomposition, pattern_x());
        std::printf("  %-14s J*_%-3d %s%s\n", row.type.str().c_str(), 2 * row.decomposition.m, r.summary().c_str(),
                    row.pictured ? " (pictured)" : "");
        if (!r.passed) ++failures;
    }
    auto s = searched_2_4_4();
    auto r = verify_admissible_decomposition(s.m, s, pattern_x());
    std::printf("searched brick:\n  %-14s J*_%-3d %s\n", s.type.str().c_str(), 2 * s.m, r.summary().c_str());
    if (!r.passed) ++failures;
    std::printf("%zu cap rows, %zu decomposition rows, %d failures\n", right_cap_table().size(), small_table().size(),
                failures);
    return failures ? kError : kOk;
}

int cmd_export(const std::string& what, const std::string& factor, const std::string& format, const std::string& out) {
    if (what == "tables") return write_output(tables_json(), out);
    Format fmt = format_from_string(format);
    if (factor.empty()) throw DomainError("export " + what + " needs --factor");
    HostKind kind = what == "jstar" ? HostKind::JStar : what == "wstar" ? HostKind::WStar : HostKind::HStar;
    Document d = construction_document(kind, CycleType::parse(factor));
    return write_output(render(d, fmt), out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed Oberwolfach factorizations of K*_n for n = 2 (mod 4)"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Build and verify an F-factorization of K*_n");
    solve_cmd->add_option("--n", sa.n, "Order of K*_n")->required();
    solve_cmd->add_option("--factor", sa.factor, "Cycle type, e.g. \"[2^3,4]\"")->required();
    solve_cmd->add_option("--format", sa.format, "json, edges, dot or text")->capture_default_str();
    solve_cmd->add_option("--seed", sa.seed, "Seed for the small-order search")->capture_default_str();
    solve_cmd->add_option("--timeout-ms", sa.timeout_ms, "Search budget")->capture_default_str();
    solve_cmd->add_option("--out", sa.out, "Output file (default stdout)");
    solve_cmd->add_flag("--search-only", sa.search_only, "Search n = 10 instead of using W*_10");

    std::string verify_path;
    bool verify_json_out = false;
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a factorization file");
    verify_cmd->add_option("file", verify_path, "JSON document")->required();
    verify_cmd->add_flag("--json", verify_json_out, "Print the full report as JSON");

    int max_n = 14;
    auto* selftest_cmd = app.add_subcommand("selftest", "Solve every even partition for 6 <= n <= max-n");
    selftest_cmd->add_option("--max-n", max_n, "Largest n")->capture_default_str();

    bool tables_check_flag = false;
    auto* tables_cmd = app.add_subcommand("tables", "Audit or print the embedded tables");
    tables_cmd->add_flag("--check", tables_check_flag, "Audit every table");
    auto* tables_check_cmd = tables_cmd->add_subcommand("check", "Audit every table");
    auto* tables_show_cmd = tables_cmd->add_subcommand("show", "Print the tables as JSON");

    std::string export_what, export_factor, export_format = "json", export_out;
    auto* export_cmd = app.add_subcommand("export", "Export a construction on J*, W* or H*, or the tables");
    export_cmd->add_option("what", export_what, "tables, jstar, wstar or hstar")
        ->required()
        ->check(CLI::IsMember({"tables", "jstar", "wstar", "hstar"}));
    export_cmd->add_option("--factor", export_factor, "Cycle type");
    export_cmd->add_option("--format", export_format, "json, edges, dot or text")->capture_default_str();
    export_cmd->add_option("--out", export_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*solve_cmd) return cmd_solve(sa);
        if (*verify_cmd) return cmd_verify(verify_path, verify_json_out);
        if (*selftest_cmd) return cmd_selftest(max_n);
        if (*tables_cmd) {
            if (*tables_show_cmd && !tables_check_flag) return write_output(tables_json(), "");
            (void)tables_check_cmd;
            return cmd_tables_check();
        }
        if (*export_cmd) return cmd_export(export_what, export_factor, export_format, export_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
