#include "oberwolfach/hstar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/hosts.hpp"

namespace oberwolfach {

namespace {

// Vertex at relative index j of a chain starting at block a.
Vertex at(Side s, int a, int j) { return {s, a + j}; }

Vertex parity_vertex(int a, int j, bool even_is_x) {
    bool x = (j % 2 == 0) == even_is_x;
    return at(x ? Side::X : Side::Y, a, j);
}

std::array<DirectedCycle, 4> second_chain(int a, int k) {
    std::vector<Vertex> c0, c1, c2, c3;
    for (int j = 0; j <= k; ++j) c0.push_back(at(Side::Y, a, j));
    for (int j = k - 1; j >= 1; --j) c0.push_back(at(Side::X, a, j));
    if (k % 2 == 0) {
        c1 = {at(Side::X, a, 0), at(Side::X, a, 1)};
        for (int j = 2; j <= k; ++j) c1.push_back(parity_vertex(a, j, false));
        for (int j = k - 1; j >= 1; --j) c1.push_back(parity_vertex(a, j, true));

        c2 = {at(Side::X, a, 0), at(Side::Y, a, 1)};
        for (int j = 2; j <= k; ++j) c2.push_back(at(Side::X, a, j));
        for (int j = k - 1; j >= 2; --j) c2.push_back(at(Side::Y, a, j));
        c2.push_back(at(Side::X, a, 1));

        c3 = {at(Side::Y, a, 0), at(Side::X, a, 1)};
        for (int j = 2; j <= k; ++j) c3.push_back(parity_vertex(a, j, true));
        for (int j = k - 1; j >= 2; --j) c3.push_back(parity_vertex(a, j, false));
        c3.push_back(at(Side::Y, a, 1));
    } else {
        for (int j = 0; j <= k - 1; ++j) c1.push_back(at(Side::X, a, j));
        for (int j = k; j >= 1; --j) c1.push_back(at(Side::Y, a, j));

        for (int j = 0; j <= k - 1; ++j) c2.push_back(parity_vertex(a, j, true));
        c2.push_back(at(Side::X, a, k));
        for (int j = k - 1; j >= 1; --j) c2.push_back(parity_vertex(a, j, false));

        for (int j = 0; j <= k - 1; ++j) c3.push_back(parity_vertex(a, j, false));
        c3.push_back(at(Side::X, a, k));
        for (int j = k - 1; j >= 1; --j) c3.push_back(parity_vertex(a, j, true));
    }
    return {DirectedCycle(c0), DirectedCycle(c1), DirectedCycle(c2), DirectedCycle(c3)};
}

std::array<DirectedCycle, 4> later_chain(int a, int k) {
    std::vector<Vertex> c0, c2;
    if (k % 2 == 0) {
        for (int j = 0; j <= k - 1; ++j) c0.push_back(at(Side::X, a, j));
        for (int j = k; j >= 1; --j) c0.push_back(at(Side::Y, a, j));

        for (int j = 0; j <= k - 1; ++j) c2.push_back(parity_vertex(a, j, false));
        c2.push_back(at(Side::X, a, k));
        for (int j = k - 1; j >= 1; --j) c2.push_back(parity_vertex(a, j, true));
    } else {
        c0 = {at(Side::X, a, 0), at(Side::X, a, 1)};
        for (int j = 2; j <= k - 1; ++j) c0.push_back(parity_vertex(a, j, false));
        c0.push_back(at(Side::Y, a, k));
        for (int j = k - 1; j >= 1; --j) c0.push_back(parity_vertex(a, j, true));

        c2.push_back(at(Side::Y, a, 0));
        for (int j = 1; j <= k; ++j) c2.push_back(at(Side::X, a, j));
        for (int j = k - 1; j >= 1; --j) c2.push_back(at(Side::Y, a, j));
    }
    DirectedCycle d0(c0), d2(c2);
    return {d0, reverse_cycle(d0), d2, reverse_cycle(d2)};
}

// ---- undirected H_2m ----

using Edge = UndirectedEdge;

Edge edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Vertex wrap(Vertex v, int m) { return {v.side, ((v.index % m) + m) % m}; }

std::vector<Edge> cycle_edges(const UndirectedCycle& c) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(edge(c[i], c[(i + 1) % c.size()]));
    return out;
}

// Splits a 2-regular simple edge set into its cycles.
std::optional<UndirectedFactor> cycles_of(const std::vector<Edge>& edges) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (const auto& [v, ns] : adj)
        if (ns.size() != 2) return std::nullopt;
    std::set<Vertex> done;
    UndirectedFactor out;
    for (const auto& [start, ns] : adj) {
        if (done.count(start)) continue;
        UndirectedCycle c{start};
        done.insert(start);
        Vertex prev = start, cur = ns[0];
        while (cur != start) {
            c.push_back(cur);
            done.insert(cur);
            const auto& nn = adj[cur];
            Vertex next = nn[0] == prev ? nn[1] : nn[0];
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(c));
    }
    return out;
}

CycleType undirected_type(const UndirectedFactor& f) {
    std::vector<int> l;
    for (const auto& c : f) l.push_back(static_cast<int>(c.size()));
    return CycleType(std::move(l));
}

// Factor A from consecutive segments; B is the complement.
std::optional<std::array<UndirectedFactor, 2>> segment_gadget(const std::vector<int>& halves, int m,
                                                               const CycleType& f) {
    std::vector<Edge> a_edges;
    int a = 0;
    for (int k : halves) {
        UndirectedCycle c;
        for (int j = 0; j <= k - 1; ++j) c.push_back(wrap(xv(a + j), m));
        for (int j = k; j >= 1; --j) c.push_back(wrap(yv(a + j), m));
        auto es = cycle_edges(c);
        a_edges.insert(a_edges.end(), es.begin(), es.end());
        a += k;
    }
    std::set<Edge> in_a(a_edges.begin(), a_edges.end());
    if (in_a.size() != a_edges.size()) return std::nullopt;
    std::vector<Edge> b_edges;
    for (const auto& e : h_edges(m))
        if (!in_a.count(e)) b_edges.push_back(e);
    auto fa = cycles_of(a_edges);
    auto fb = cycles_of(b_edges);
    if (!fa || !fb || undirected_type(*fa) != f || undirected_type(*fb) != f) return std::nullopt;
    return std::array<UndirectedFactor, 2>{*fa, *fb};
}

// Exhaustive choice of A, junction by junction, with degree pruning.
class UndirectedSearch {
public:
    UndirectedSearch(const CycleType& f, int m) : f_(f), m_(m), edges_(h_edges(m)) {}

    std::optional<std::array<UndirectedFactor, 2>> run() {
        if (dfs(0)) return result_;
        return std::nullopt;
    }

private:
    int& deg(Vertex v) { return degree_[v]; }

    bool dfs(std::size_t i) {
        if (i == edges_.size()) return leaf();
        // Edges come in groups of four per junction; block j is complete once
        // junction j has been decided (block 0 only at the very end).
        const Edge& e = edges_[i];
        for (bool take : {true, false}) {
            if (take && (deg(e.a) == 2 || deg(e.b) == 2)) continue;
            if (take) {
                ++deg(e.a);
                ++deg(e.b);
                chosen_.push_back(e);
            }
            bool ok = true;
            if ((i + 1) % 4 == 0) {
                int j = static_cast<int>(i / 4);
                if (j >= 1 && (deg(xv(j)) != 2 || deg(yv(j)) != 2)) ok = false;
            }
            if (ok && dfs(i + 1)) return true;
            if (take) {
                --deg(e.a);
                --deg(e.b);
                chosen_.pop_back();
            }
        }
        return false;
    }

    bool leaf() {
        for (const auto& [v, d] : degree_)
            if (d != 2) return false;
        if (static_cast<int>(degree_.size()) != 2 * m_) return false;
        auto fa = cycles_of(chosen_);
        if (!fa || undirected_type(*fa) != f_) return false;
        std::set<Edge> in_a(chosen_.begin(), chosen_.end());
        std::vector<Edge> rest;
        for (const auto& e : edges_)
            if (!in_a.count(e)) rest.push_back(e);
        auto fb = cycles_of(rest);
        if (!fb || undirected_type(*fb) != f_) return false;
        result_ = {*fa, *fb};
        return true;
    }

    CycleType f_;
    int m_;
    std::vector<Edge> edges_;
    std::map<Vertex, int> degree_;
    std::vector<Edge> chosen_;
    std::array<UndirectedFactor, 2> result_;
};

TwoRegularDigraph directed(const UndirectedFactor& f, bool forward) {
    std::vector<DirectedCycle> cs;
    for (const auto& c : f) {
        DirectedCycle d(c);
        cs.push_back(forward ? d : reverse_cycle(d));
    }
    return TwoRegularDigraph(std::move(cs));
}

void check_input(const CycleType& f, int m) {
    if (m < 2) throw DomainError("H*_2m needs m >= 2");
    if (!f.bipartite()) throw DomainError(f.str() + " has an odd cycle length");
    if (f.order() != 2 * m)
        throw DomainError(f.str() + " has order " + std::to_string(f.order()) + ", expected " + std::to_string(2 * m));
}

}  // namespace

std::array<DirectedCycle, 4> two_cycle_gadgets(int m) {
    if (m < 3) throw DomainError("the 2-cycle gadgets need m >= 3");
    return {DirectedCycle({xv(0), xv(m - 1)}), DirectedCycle({yv(0), xv(m - 1)}), DirectedCycle({yv(0), yv(m - 1)}),
            DirectedCycle({xv(0), yv(m - 1)})};
}

std::array<DirectedCycle, 4> chain_cycles(ChainPosition position, int a, int k) {
    if (k < 2) throw DomainError("chains need k >= 2");
    if (a < 0) throw RangeError("chain offset below 0");
    return position == ChainPosition::Second ? second_chain(a, k) : later_chain(a, k);
}

std::array<UndirectedFactor, 2> haggkvist_undirected(const CycleType& f, int m) {
    check_input(f, m);
    if (m == 2) {
        // H_4 is the 4-cycle with every edge doubled.
        UndirectedFactor c{{xv(0), xv(1), yv(0), yv(1)}};
        return {c, c};
    }
    std::vector<int> halves;
    for (int l : f.lengths()) halves.push_back(l / 2);
    std::vector<std::vector<int>> orders{halves};
    std::sort(halves.begin(), halves.end());
    do {
        if (std::find(orders.begin(), orders.end(), halves) == orders.end()) orders.push_back(halves);
    } while (std::next_permutation(halves.begin(), halves.end()) && orders.size() < 64);
    for (const auto& o : orders)
        if (auto r = segment_gadget(o, m, f)) return *r;
    if (auto r = haggkvist_by_search(f, m)) return *r;
    throw std::runtime_error("no undirected " + f.str() + "-factorization of H_" + std::to_string(2 * m) + " found");
}

std::optional<std::array<UndirectedFactor, 2>> haggkvist_by_search(const CycleType& f, int m) {
    check_input(f, m);
    if (m < 3) throw DomainError("the search needs a simple H_2m, m >= 3");
    return UndirectedSearch(f, m).run();
}

HStarFactorization factorize_h_star(const CycleType& f, int m) {
    check_input(f, m);
    HStarFactorization out;
    out.m = m;
    const int s = f.count(2);
    if (s == 1) {
        auto gadgets = two_cycle_gadgets(m);
        std::array<std::vector<DirectedCycle>, 4> parts;
        for (int i = 0; i < 4; ++i) parts[static_cast<std::size_t>(i)].push_back(gadgets[static_cast<std::size_t>(i)]);
        int a = 0;
        bool second = true;
        for (int l : f.lengths()) {
            if (l == 2) continue;
            auto cs = chain_cycles(second ? ChainPosition::Second : ChainPosition::Later, a, l / 2);
            for (std::size_t i = 0; i < 4; ++i) parts[i].push_back(cs[i]);
            a += l / 2;
            second = false;
        }
        for (auto& p : parts) out.factors.emplace_back(std::move(p));
    } else if (s >= 2) {
        std::vector<int> merged{2 * s};
        for (int l : f.lengths())
            if (l != 2) merged.push_back(l);
        for (const auto& uf : haggkvist_undirected(CycleType(merged), m)) {
            auto big = std::find_if(uf.begin(), uf.end(), [&](const UndirectedCycle& c) {
                return static_cast<int>(c.size()) == 2 * s;
            });
            std::array<std::vector<DirectedCycle>, 2> parts;
            for (std::size_t j = 0; j < big->size(); ++j)
                parts[j % 2].push_back(DirectedCycle({(*big)[j], (*big)[(j + 1) % big->size()]}));
            for (auto it = uf.begin(); it != uf.end(); ++it) {
                if (it == big) continue;
                DirectedCycle d(*it);
                parts[0].push_back(d);
                parts[1].push_back(reverse_cycle(d));
            }
            for (auto& p : parts) out.factors.emplace_back(std::move(p));
        }
    } else {
        for (const auto& uf : haggkvist_undirected(f, m)) {
            out.factors.push_back(directed(uf, true));
            out.factors.push_back(directed(uf, false));
        }
    }
    auto report = verify_factorization(make_host({HostKind::HStar, m}), out.factors, f);
    if (!report.passed)
        throw std::runtime_error("H*_" + std::to_string(2 * m) + " " + f.str() + " failed verification: " +
                                 report.summary());
    return out;
}

}  // namespace oberwolfach
