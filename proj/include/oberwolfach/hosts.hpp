// hosts.hpp - the host digraphs K*_n, H*_2m, W*_2m, J*_2m and the fold J* -> W*.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "oberwolfach/core.hpp"

namespace oberwolfach {

enum class HostKind { CompleteSymmetric, HStar, WStar, JStar };

std::string to_string(HostKind kind);
HostKind host_kind_from_string(const std::string& name);

struct HostDescriptor {
    HostKind kind = HostKind::CompleteSymmetric;
    int m_or_n = 0;

    bool operator==(const HostDescriptor&) const = default;
};

// Arc multiset view of a host. Every host is simple except H*_4 and W*_8,
// whose underlying graphs have doubled edges.
struct Host {
    HostDescriptor descriptor;
    std::set<Vertex> vertices;
    std::map<Arc, int> arcs;

    std::size_t arc_count() const;
    bool simple() const;
};

Digraph complete_symmetric(int n);
Digraph h_star(int m);
Digraph w_star(int m);
Digraph j_star(int m);

// Arc set of J*_2m for any m >= 1; caps and centre pieces live on small J*.
std::set<Arc> j_arcs(int m);

// m >= 2 for HStar, m >= 4 for WStar; n >= 2 for CompleteSymmetric.
Host make_host(HostDescriptor d);

struct UndirectedEdge {
    Vertex a;
    Vertex b;
    auto operator<=>(const UndirectedEdge&) const = default;
};

// Edge list of H_2m (with multiplicity 2 when m = 2).
std::vector<UndirectedEdge> h_edges(int m);

Vertex fold(Vertex v, int m);
TwoRegularDigraph fold(const TwoRegularDigraph& g, int m);
Digraph fold(const Digraph& g, int m);

}  // namespace oberwolfach
