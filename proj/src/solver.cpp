#include "oberwolfach/solver.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "oberwolfach/hosts.hpp"
#include "oberwolfach/hstar.hpp"
#include "oberwolfach/jmachine.hpp"
#include "oberwolfach/search.hpp"

namespace oberwolfach {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Edge-disjoint Hamiltonian cycles of Circ(m, ±diffs), as many as diffs.
class HamiltonSearch {
public:
    HamiltonSearch(int m, const std::vector<int>& diffs) : m_(m), k_(static_cast<int>(diffs.size())) {
        adj_.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
        for (int d : diffs)
            for (int v = 0; v < m; ++v) {
                set(v, mod(v + d, m), true);
                set(mod(v + d, m), v, true);
            }
    }

    std::optional<std::vector<std::vector<int>>> run() {
        if (next_cycle()) return found_;
        return std::nullopt;
    }

private:
    void set(int a, int b, bool on) { adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = on; }
    bool has(int a, int b) const { return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    bool next_cycle() {
        if (static_cast<int>(found_.size()) == k_) return true;
        std::vector<int> path{0};
        std::vector<bool> seen(static_cast<std::size_t>(m_), false);
        seen[0] = true;
        return extend(path, seen);
    }

    bool extend(std::vector<int>& path, std::vector<bool>& seen) {
        int cur = path.back();
        if (static_cast<int>(path.size()) == m_) {
            if (!has(cur, 0)) return false;
            // Fix orientation: the second vertex is below the last one.
            if (path[1] > path.back()) return false;
            auto cyc = path;
            toggle(cyc, false);
            found_.push_back(cyc);
            if (next_cycle()) return true;
            found_.pop_back();
            toggle(cyc, true);
            return false;
        }
        for (int v = 0; v < m_; ++v) {
            if (seen[static_cast<std::size_t>(v)] || !has(cur, v)) continue;
            seen[static_cast<std::size_t>(v)] = true;
            path.push_back(v);
            if (extend(path, seen)) return true;
            path.pop_back();
            seen[static_cast<std::size_t>(v)] = false;
        }
        return false;
    }

    void toggle(const std::vector<int>& cyc, bool on) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            set(a, b, on);
            set(b, a, on);
        }
    }

    int m_;
    int k_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<int>> found_;
};

std::vector<int> step_cycle(int m, int d) {
    std::vector<int> c;
    for (int i = 0; i < m; ++i) c.push_back(mod(i * d, m));
    return c;
}

Factorization certified(int n, const CycleType& f, std::vector<TwoRegularDigraph> factors) {
    Factorization out;
    out.n = n;
    out.type = f;
    out.factors = std::move(factors);
    out.report = verify_factorization(make_host({HostKind::CompleteSymmetric, n}), out.factors, f);
    return out;
}

SolveResult solved(Factorization fz, std::string method) {
    if (!fz.report.passed)
        throw std::runtime_error("internal verification failure (" + method + "): " + fz.report.summary());
    SolveResult r;
    r.status = SolveStatus::Solved;
    r.factorization = std::move(fz);
    r.method = std::move(method);
    return r;
}

std::string cache_file(const SolveOptions& o) {
    if (!o.cache_path.empty()) return o.cache_path;
    if (const char* env = std::getenv("OBERWOLFACH_CACHE")) return env;
    return {};
}

std::string cache_key(int n, const CycleType& f) { return std::to_string(n) + ":" + f.str(); }

nlohmann::json read_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return nlohmann::json::object();
    try {
        auto j = nlohmann::json::parse(in);
        return j.is_object() ? j : nlohmann::json::object();
    } catch (const nlohmann::json::exception&) {
        return nlohmann::json::object();
    }
}

std::optional<Factorization> cache_lookup(const std::string& path, int n, const CycleType& f) {
    if (path.empty()) return std::nullopt;
    auto j = read_cache(path);
    auto it = j.find(cache_key(n, f));
    if (it == j.end() || !it->is_array()) return std::nullopt;
    try {
        std::vector<TwoRegularDigraph> fs;
        for (const auto& s : *it) fs.push_back(TwoRegularDigraph::parse(s.get<std::string>()));
        auto fz = certified(n, f, std::move(fs));
        if (fz.report.passed) return fz;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

void cache_store(const std::string& path, const Factorization& fz) {
    if (path.empty()) return;
    auto j = read_cache(path);
    auto arr = nlohmann::json::array();
    for (const auto& f : fz.factors) arr.push_back(f.str());
    j[cache_key(fz.n, fz.type)] = arr;
    std::ofstream out(path);
    if (out) out << j.dump(1) << "\n";
}

void check_request(int n, const CycleType& f) {
    if (n < 2 || n % 4 != 2) throw DomainError("n = " + std::to_string(n) + " is not 2 mod 4");
    if (!f.bipartite()) throw DomainError(f.str() + " has an odd cycle length");
    if (f.order() != n)
        throw DomainError(f.str() + " has order " + std::to_string(f.order()) + ", not " + std::to_string(n));
}

}  // namespace

WHDecomposition wh_decompose(int m) {
    if (m < 7 || m % 2 == 0) throw DomainError("wh_decompose needs an odd m >= 7");
    WHDecomposition out;
    out.m = m;
    std::vector<int> coprime, shared;
    for (int d = 3; d <= (m - 1) / 2; ++d) (std::gcd(d, m) == 1 ? coprime : shared).push_back(d);
    // Differences sharing a factor with m give short cycles; pair them with
    // coprime ones until the combined circulant splits into Hamiltonian cycles.
    while (!shared.empty()) {
        if (auto found = HamiltonSearch(m, shared).run()) {
            out.h_cycles = *found;
            break;
        }
        if (coprime.empty()) throw std::runtime_error("no Hamiltonian decomposition for m = " + std::to_string(m));
        shared.push_back(coprime.back());
        coprime.pop_back();
    }
    for (int d : coprime) out.h_cycles.push_back(step_cycle(m, d));
    return out;
}

std::vector<TwoRegularDigraph> embed_h_factors(const std::vector<TwoRegularDigraph>& factors,
                                               const std::vector<int>& cycle) {
    std::vector<TwoRegularDigraph> out;
    for (const auto& f : factors) {
        std::vector<DirectedCycle> cs;
        for (const auto& c : f.cycles()) {
            std::vector<Vertex> vs;
            for (Vertex v : c.vertices()) vs.push_back({v.side, cycle.at(static_cast<std::size_t>(v.index))});
            cs.emplace_back(std::move(vs));
        }
        out.emplace_back(std::move(cs));
    }
    return out;
}

Factorization round_robin_two_cycles(int n) {
    if (n < 2 || n % 2) throw DomainError("round robin needs an even n >= 2");
    auto label = [](int i) { return Vertex{i % 2 ? Side::Y : Side::X, i / 2}; };
    std::vector<TwoRegularDigraph> factors;
    const int q = n - 1;
    for (int r = 0; r < q; ++r) {
        std::vector<DirectedCycle> cs{DirectedCycle({label(r), label(q)})};
        for (int i = 1; i < n / 2; ++i) cs.push_back(DirectedCycle({label(mod(r + i, q)), label(mod(r - i, q))}));
        factors.emplace_back(std::move(cs));
    }
    return certified(n, CycleType(std::vector<int>(static_cast<std::size_t>(n / 2), 2)), std::move(factors));
}

SolveResult small_order_solve(int n, const CycleType& f, const SolveOptions& options) {
    check_request(n, f);
    if (n != 6 && n != 10) throw DomainError("small_order_solve handles n = 6 and n = 10");
    const int m = n / 2;
    if (n == 10 && !options.search_only && f.lengths().back() > 2)
        return solved(certified(n, f, w_star_factorization(f)), "W*_10");

    const std::string cache = cache_file(options);
    if (auto hit = cache_lookup(cache, n, f)) return solved(std::move(*hit), "search (cached)");

    Host host = make_host({HostKind::CompleteSymmetric, n});
    SearchProblem p;
    p.labels.assign(host.vertices.begin(), host.vertices.end());
    for (const auto& [a, mult] : host.arcs) p.arcs.push_back(a);
    p.factor_sets.assign(static_cast<std::size_t>(n - 1), host.vertices);
    p.type = f;
    p.interchangeable = true;
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(options.timeout_ms);

    SearchResult res;
    if (m == 3) {
        SearchOptions o;
        o.deadline = deadline;
        res = search_decomposition(p, o);
    } else {
        res = search_with_restarts(p, options.seed, 200'000, 1'000'000, deadline);
    }
    SolveResult out;
    switch (res.status) {
        case SearchStatus::Found: {
            std::vector<TwoRegularDigraph> fs;
            for (const auto& a : res.factors) fs.push_back(TwoRegularDigraph::from_arcs(a));
            auto fz = certified(n, f, std::move(fs));
            cache_store(cache, fz);
            return solved(std::move(fz), "search");
        }
        case SearchStatus::Exhausted:
            out.status = SolveStatus::Nonexistent;
            out.message = "no " + f.str() + "-factorization of K*_" + std::to_string(n) + " exists (exhaustive search, " +
                          std::to_string(res.nodes) + " nodes)";
            return out;
        default:
            out.status = SolveStatus::TimedOut;
            out.message = "search for " + f.str() + " on K*_" + std::to_string(n) + " stopped after " +
                          std::to_string(res.nodes) + " nodes";
            return out;
    }
}

SolveResult solve(int n, const CycleType& f, const SolveOptions& options) {
    check_request(n, f);
    if (f.lengths().back() == 2) return solved(round_robin_two_cycles(n), "round robin");
    if (n == 6 || n == 10) return small_order_solve(n, f, options);

    const int m = n / 2;
    auto wh = wh_decompose(m);
    std::vector<TwoRegularDigraph> factors = w_star_factorization(f);
    auto h = factorize_h_star(f, m);
    for (const auto& cycle : wh.h_cycles) {
        auto embedded = embed_h_factors(h.factors, cycle);
        factors.insert(factors.end(), embedded.begin(), embedded.end());
    }
    return solved(certified(n, f, std::move(factors)), "W* + H*");
}

std::vector<CycleType> even_partitions(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 2; p -= 2) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (n > 0 && n % 2 == 0) rec(n, n);
    return out;
}

}  // namespace oberwolfach
