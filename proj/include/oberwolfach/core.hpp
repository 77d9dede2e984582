// core.hpp - vertices, arcs, paths, cycles, 2-regular digraphs and cycle types.
// Vertices are x_i / y_i; ordering is side X < Y, then index.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oberwolfach {

// Bad input values (wrong order, odd lengths, malformed text).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A shift or fold left the admissible index range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

struct Vertex {
    Side side = Side::X;
    int index = 0;

    auto operator<=>(const Vertex&) const = default;

    std::string str() const;
    static Vertex parse(std::string_view text);
};

inline Vertex xv(int i) { return {Side::X, i}; }
inline Vertex yv(int i) { return {Side::Y, i}; }

struct Arc {
    Vertex tail;
    Vertex head;

    auto operator<=>(const Arc&) const = default;

    std::string str() const;
};

struct Digraph {
    std::set<Vertex> vertices;
    std::set<Arc> arcs;

    void add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const { return arcs.count({u, v}) != 0; }
    std::size_t out_degree(Vertex v) const;
    std::size_t in_degree(Vertex v) const;

    bool operator==(const Digraph&) const = default;
};

class DirectedPath {
public:
    DirectedPath() = default;
    explicit DirectedPath(std::vector<Vertex> vs);

    const std::vector<Vertex>& vertices() const { return vs_; }
    Vertex source() const { return vs_.front(); }
    Vertex terminal() const { return vs_.back(); }
    int length() const { return static_cast<int>(vs_.size()) - 1; }
    bool contains(Vertex v) const;
    bool is_internal(Vertex v) const;
    std::vector<Arc> arcs() const;
    std::string str() const;
    static DirectedPath parse(std::string_view text);

    bool operator==(const DirectedPath&) const = default;

private:
    std::vector<Vertex> vs_;
};

// Stored rotated so that the least vertex comes first.
class DirectedCycle {
public:
    DirectedCycle() = default;
    explicit DirectedCycle(std::vector<Vertex> vs);

    const std::vector<Vertex>& vertices() const { return vs_; }
    int length() const { return static_cast<int>(vs_.size()); }
    std::vector<Arc> arcs() const;
    std::string str() const;
    static DirectedCycle parse(std::string_view text);

    auto operator<=>(const DirectedCycle&) const = default;

private:
    std::vector<Vertex> vs_;
};

class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<int> lengths);

    const std::vector<int>& lengths() const { return lengths_; }
    int order() const;
    int count(int length) const;
    bool bipartite() const;
    bool empty() const { return lengths_.empty(); }
    std::size_t size() const { return lengths_.size(); }
    // Exponent form, e.g. "[2^3,4]".
    std::string str() const;
    // Accepts "[2^3,4]", "[2,2,2,4]" and "[]".
    static CycleType parse(std::string_view text);
    CycleType merged(const CycleType& other) const;

    auto operator<=>(const CycleType&) const = default;

private:
    std::vector<int> lengths_;
};

class TwoRegularDigraph {
public:
    TwoRegularDigraph() = default;
    explicit TwoRegularDigraph(std::vector<DirectedCycle> cycles);

    const std::vector<DirectedCycle>& cycles() const { return cycles_; }
    std::set<Vertex> vertex_set() const;
    std::vector<Arc> arcs() const;
    int order() const;
    bool contains(Vertex v) const;
    std::string str() const;
    static TwoRegularDigraph parse(std::string_view text);
    // Rebuild the cycles from a raw arc list; throws DomainError if not 2-regular.
    static TwoRegularDigraph from_arcs(const std::vector<Arc>& arcs);

    bool operator==(const TwoRegularDigraph&) const = default;

private:
    std::vector<DirectedCycle> cycles_;
};

CycleType cycle_type_of(const TwoRegularDigraph& d);

Vertex shift(Vertex v, int k);
Arc shift(const Arc& a, int k);
DirectedPath shift(const DirectedPath& p, int k);
DirectedCycle shift(const DirectedCycle& c, int k);
TwoRegularDigraph shift(const TwoRegularDigraph& d, int k);
Digraph shift(const Digraph& g, int k);

DirectedCycle reverse_cycle(const DirectedCycle& c);
DirectedPath reverse_path(const DirectedPath& p);

using PathOrCycle = std::variant<DirectedPath, DirectedCycle>;

PathOrCycle concat(const DirectedPath& p, const DirectedPath& q);
// Same as concat but insists on a path result.
DirectedPath concat_path(const DirectedPath& p, const DirectedPath& q);
// Same as concat but insists on a cycle result.
DirectedCycle close_cycle(const DirectedPath& p, const DirectedPath& q);

// Vertex-disjoint union; throws DomainError on a shared vertex.
TwoRegularDigraph disjoint_union(const TwoRegularDigraph& a, const TwoRegularDigraph& b);

// Splits "a,b,c" on top-level commas, trimming blanks.
std::vector<std::string> split_list(std::string_view text);

}  // namespace oberwolfach
