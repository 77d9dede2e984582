#include "oberwolfach/hosts.hpp"

namespace oberwolfach {

namespace {

void join_blocks(std::map<Arc, int>& arcs, int i, int j) {
    for (Side a : {Side::X, Side::Y})
        for (Side b : {Side::X, Side::Y}) {
            ++arcs[{{a, i}, {b, j}}];
            ++arcs[{{b, j}, {a, i}}];
        }
}

void add_rung(std::map<Arc, int>& arcs, int i) {
    ++arcs[{xv(i), yv(i)}];
    ++arcs[{yv(i), xv(i)}];
}

std::set<Vertex> blocks(int count) {
    std::set<Vertex> vs;
    for (int i = 0; i < count; ++i) {
        vs.insert(xv(i));
        vs.insert(yv(i));
    }
    return vs;
}

Digraph to_digraph(const Host& h) {
    Digraph g;
    g.vertices = h.vertices;
    for (const auto& [a, mult] : h.arcs) g.arcs.insert(a);
    return g;
}

}  // namespace

std::string to_string(HostKind kind) {
    switch (kind) {
        case HostKind::CompleteSymmetric: return "CompleteSymmetric";
        case HostKind::HStar: return "HStar";
        case HostKind::WStar: return "WStar";
        case HostKind::JStar: return "JStar";
    }
    return "?";
}

HostKind host_kind_from_string(const std::string& name) {
    for (HostKind k : {HostKind::CompleteSymmetric, HostKind::HStar, HostKind::WStar, HostKind::JStar})
        if (to_string(k) == name) return k;
    throw DomainError("unknown host kind '" + name + "'");
}

std::size_t Host::arc_count() const {
    std::size_t n = 0;
    for (const auto& [a, mult] : arcs) n += static_cast<std::size_t>(mult);
    return n;
}

bool Host::simple() const {
    for (const auto& [a, mult] : arcs)
        if (mult != 1) return false;
    return true;
}

Host make_host(HostDescriptor d) {
    Host h;
    h.descriptor = d;
    const int m = d.m_or_n;
    switch (d.kind) {
        case HostKind::CompleteSymmetric: {
            if (m < 2) throw DomainError("K*_n needs n >= 2");
            for (int i = 0; i < m; ++i) h.vertices.insert({i % 2 ? Side::Y : Side::X, i / 2});
            for (Vertex u : h.vertices)
                for (Vertex v : h.vertices)
                    if (u != v) h.arcs[{u, v}] = 1;
            break;
        }
        case HostKind::HStar:
            if (m < 2) throw DomainError("H*_2m needs m >= 2");
            h.vertices = blocks(m);
            for (int i = 0; i < m; ++i) join_blocks(h.arcs, i, (i + 1) % m);
            break;
        case HostKind::WStar:
            if (m < 4) throw DomainError("W*_2m needs m >= 4");
            h.vertices = blocks(m);
            for (int i = 0; i < m; ++i) {
                add_rung(h.arcs, i);
                join_blocks(h.arcs, i, (i + 1) % m);
                join_blocks(h.arcs, i, (i + 2) % m);
            }
            break;
        case HostKind::JStar:
            if (m < 3) throw DomainError("J*_2m needs m >= 3");
            h.vertices = blocks(m + 2);
            for (int i = 1; i <= m; ++i) add_rung(h.arcs, i);
            for (int i = 0; i < m; ++i) {
                join_blocks(h.arcs, i, i + 1);
                join_blocks(h.arcs, i, i + 2);
            }
            break;
    }
    return h;
}

Digraph complete_symmetric(int n) { return to_digraph(make_host({HostKind::CompleteSymmetric, n})); }

Digraph h_star(int m) {
    if (m < 3) throw DomainError("h_star needs m >= 3");
    return to_digraph(make_host({HostKind::HStar, m}));
}

Digraph w_star(int m) {
    if (m < 5) throw DomainError("w_star needs m >= 5");
    return to_digraph(make_host({HostKind::WStar, m}));
}

Digraph j_star(int m) { return to_digraph(make_host({HostKind::JStar, m})); }

std::set<Arc> j_arcs(int m) {
    if (m < 1) throw DomainError("J*_2m needs m >= 1");
    std::map<Arc, int> arcs;
    for (int i = 1; i <= m; ++i) add_rung(arcs, i);
    for (int i = 0; i < m; ++i) {
        join_blocks(arcs, i, i + 1);
        join_blocks(arcs, i, i + 2);
    }
    std::set<Arc> out;
    for (const auto& [a, mult] : arcs) out.insert(a);
    return out;
}

std::vector<UndirectedEdge> h_edges(int m) {
    if (m < 2) throw DomainError("H_2m needs m >= 2");
    std::vector<UndirectedEdge> out;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        for (Side a : {Side::X, Side::Y})
            for (Side b : {Side::X, Side::Y}) {
                Vertex u{a, i}, v{b, j};
                out.push_back(u < v ? UndirectedEdge{u, v} : UndirectedEdge{v, u});
            }
    }
    return out;
}

Vertex fold(Vertex v, int m) {
    if (m < 1) throw RangeError("fold modulus must be positive");
    return {v.side, v.index % m};
}

TwoRegularDigraph fold(const TwoRegularDigraph& g, int m) {
    Host w = make_host({HostKind::WStar, m});
    std::vector<DirectedCycle> cycles;
    for (const auto& c : g.cycles()) {
        std::vector<Vertex> vs;
        for (Vertex v : c.vertices()) {
            if (v.index > m + 1) throw RangeError(v.str() + " lies outside J*_" + std::to_string(2 * m));
            vs.push_back(fold(v, m));
        }
        DirectedCycle folded(std::move(vs));
        for (const auto& a : folded.arcs())
            if (!w.arcs.count(a)) throw DomainError("folded arc " + a.str() + " is not an arc of W*");
        cycles.push_back(std::move(folded));
    }
    return TwoRegularDigraph(std::move(cycles));
}

Digraph fold(const Digraph& g, int m) {
    Host w = make_host({HostKind::WStar, m});
    Digraph out;
    for (Vertex v : g.vertices) out.vertices.insert(fold(v, m));
    for (const auto& a : g.arcs) {
        Arc f{fold(a.tail, m), fold(a.head, m)};
        if (!w.arcs.count(f)) throw DomainError("folded arc " + f.str() + " is not an arc of W*");
        out.arcs.insert(f);
    }
    return out;
}

}  // namespace oberwolfach
