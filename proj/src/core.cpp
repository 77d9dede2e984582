#include "oberwolfach/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace oberwolfach {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("not an integer: '" + std::string(s) + "'");
    return value;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += vs[i].str();
    }
    return out;
}

std::vector<Vertex> parse_vertices(std::string_view inner) {
    std::vector<Vertex> vs;
    for (const auto& tok : split_list(inner)) vs.push_back(Vertex::parse(tok));
    return vs;
}

void require_distinct(const std::vector<Vertex>& vs, const char* what) {
    std::set<Vertex> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) throw DomainError(std::string(what) + " repeats a vertex: " + join(vs));
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            out.emplace_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

std::string Vertex::str() const {
    return (side == Side::X ? "x" : "y") + std::to_string(index);
}

Vertex Vertex::parse(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || (text[0] != 'x' && text[0] != 'y'))
        throw DomainError("bad vertex: '" + std::string(text) + "'");
    int idx = parse_int(text.substr(1));
    if (idx < 0) throw DomainError("negative vertex index: '" + std::string(text) + "'");
    return {text[0] == 'x' ? Side::X : Side::Y, idx};
}

std::string Arc::str() const { return tail.str() + "->" + head.str(); }

void Digraph::add_arc(Vertex u, Vertex v) {
    if (u == v) throw DomainError("loop at " + u.str());
    vertices.insert(u);
    vertices.insert(v);
    arcs.insert({u, v});
}

std::size_t Digraph::out_degree(Vertex v) const {
    auto lo = arcs.lower_bound({v, {Side::X, 0}});
    std::size_t n = 0;
    for (auto it = lo; it != arcs.end() && it->tail == v; ++it) ++n;
    return n;
}

std::size_t Digraph::in_degree(Vertex v) const {
    return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.head == v; }));
}

DirectedPath::DirectedPath(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    if (vs_.empty()) throw DomainError("empty path");
    require_distinct(vs_, "path");
}

bool DirectedPath::contains(Vertex v) const { return std::find(vs_.begin(), vs_.end(), v) != vs_.end(); }

bool DirectedPath::is_internal(Vertex v) const {
    if (vs_.size() < 3) return false;
    return std::find(vs_.begin() + 1, vs_.end() - 1, v) != vs_.end() - 1;
}

std::vector<Arc> DirectedPath::arcs() const {
    std::vector<Arc> out;
    for (std::size_t i = 0; i + 1 < vs_.size(); ++i) out.push_back({vs_[i], vs_[i + 1]});
    return out;
}

std::string DirectedPath::str() const { return "<" + join(vs_) + ">"; }

DirectedPath DirectedPath::parse(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw DomainError("path must be written <...>: '" + std::string(text) + "'");
    return DirectedPath(parse_vertices(text.substr(1, text.size() - 2)));
}

DirectedCycle::DirectedCycle(std::vector<Vertex> vs) : vs_(std::move(vs)) {
    if (vs_.size() < 2) throw DomainError("cycle needs at least two vertices");
    require_distinct(vs_, "cycle");
    std::rotate(vs_.begin(), std::min_element(vs_.begin(), vs_.end()), vs_.end());
}

std::vector<Arc> DirectedCycle::arcs() const {
    std::vector<Arc> out;
    for (std::size_t i = 0; i < vs_.size(); ++i) out.push_back({vs_[i], vs_[(i + 1) % vs_.size()]});
    return out;
}

std::string DirectedCycle::str() const { return "(" + join(vs_) + ")"; }

DirectedCycle DirectedCycle::parse(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw DomainError("cycle must be written (...): '" + std::string(text) + "'");
    return DirectedCycle(parse_vertices(text.substr(1, text.size() - 2)));
}

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    for (int l : lengths_)
        if (l < 2) throw DomainError("cycle length below 2: " + std::to_string(l));
    std::sort(lengths_.begin(), lengths_.end());
}

int CycleType::order() const {
    int s = 0;
    for (int l : lengths_) s += l;
    return s;
}

int CycleType::count(int length) const {
    return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), length));
}

bool CycleType::bipartite() const {
    return std::all_of(lengths_.begin(), lengths_.end(), [](int l) { return l % 2 == 0; });
}

std::string CycleType::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < lengths_.size();) {
        std::size_t j = i;
        while (j < lengths_.size() && lengths_[j] == lengths_[i]) ++j;
        if (i) out += ',';
        out += std::to_string(lengths_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + "]";
}

CycleType CycleType::parse(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw DomainError("cycle type must be written [...]: '" + std::string(text) + "'");
    std::vector<int> lengths;
    for (const auto& tok : split_list(text.substr(1, text.size() - 2))) {
        auto caret = tok.find('^');
        int len = parse_int(std::string_view(tok).substr(0, caret));
        int mult = caret == std::string::npos ? 1 : parse_int(std::string_view(tok).substr(caret + 1));
        if (len < 2) throw DomainError("cycle length below 2 in '" + std::string(text) + "'");
        if (mult < 1) throw DomainError("exponent below 1 in '" + std::string(text) + "'");
        lengths.insert(lengths.end(), static_cast<std::size_t>(mult), len);
    }
    return CycleType(std::move(lengths));
}

CycleType CycleType::merged(const CycleType& other) const {
    auto all = lengths_;
    all.insert(all.end(), other.lengths_.begin(), other.lengths_.end());
    return CycleType(std::move(all));
}

TwoRegularDigraph::TwoRegularDigraph(std::vector<DirectedCycle> cycles) : cycles_(std::move(cycles)) {
    std::set<Vertex> seen;
    for (const auto& c : cycles_)
        for (Vertex v : c.vertices())
            if (!seen.insert(v).second) throw DomainError("cycles share vertex " + v.str());
    std::sort(cycles_.begin(), cycles_.end());
}

std::set<Vertex> TwoRegularDigraph::vertex_set() const {
    std::set<Vertex> out;
    for (const auto& c : cycles_) out.insert(c.vertices().begin(), c.vertices().end());
    return out;
}

std::vector<Arc> TwoRegularDigraph::arcs() const {
    std::vector<Arc> out;
    for (const auto& c : cycles_) {
        auto a = c.arcs();
        out.insert(out.end(), a.begin(), a.end());
    }
    return out;
}

int TwoRegularDigraph::order() const {
    int n = 0;
    for (const auto& c : cycles_) n += c.length();
    return n;
}

bool TwoRegularDigraph::contains(Vertex v) const {
    for (const auto& c : cycles_)
        for (Vertex u : c.vertices())
            if (u == v) return true;
    return false;
}

std::string TwoRegularDigraph::str() const {
    std::string out;
    for (std::size_t i = 0; i < cycles_.size(); ++i) {
        if (i) out += ' ';
        out += cycles_[i].str();
    }
    return out;
}

TwoRegularDigraph TwoRegularDigraph::parse(std::string_view text) {
    std::vector<DirectedCycle> cycles;
    std::size_t pos = 0;
    while (true) {
        auto open = text.find('(', pos);
        if (open == std::string_view::npos) break;
        auto close = text.find(')', open);
        if (close == std::string_view::npos) throw DomainError("unterminated cycle in '" + std::string(text) + "'");
        cycles.push_back(DirectedCycle::parse(text.substr(open, close - open + 1)));
        pos = close + 1;
    }
    return TwoRegularDigraph(std::move(cycles));
}

TwoRegularDigraph TwoRegularDigraph::from_arcs(const std::vector<Arc>& arcs) {
    std::map<Vertex, Vertex> succ;
    std::set<Vertex> heads;
    for (const auto& a : arcs) {
        if (a.tail == a.head) throw DomainError("loop at " + a.tail.str());
        if (!succ.emplace(a.tail, a.head).second) throw DomainError("out-degree above 1 at " + a.tail.str());
        if (!heads.insert(a.head).second) throw DomainError("in-degree above 1 at " + a.head.str());
    }
    for (const auto& [t, h] : succ)
        if (!succ.count(h)) throw DomainError("out-degree 0 at " + h.str());
    std::set<Vertex> done;
    std::vector<DirectedCycle> cycles;
    for (const auto& [start, unused] : succ) {
        if (done.count(start)) continue;
        std::vector<Vertex> cyc;
        Vertex v = start;
        do {
            cyc.push_back(v);
            done.insert(v);
            v = succ.at(v);
        } while (v != start);
        cycles.emplace_back(std::move(cyc));
    }
    return TwoRegularDigraph(std::move(cycles));
}

CycleType cycle_type_of(const TwoRegularDigraph& d) {
    std::vector<int> lengths;
    for (const auto& c : d.cycles()) lengths.push_back(c.length());
    return CycleType(std::move(lengths));
}

Vertex shift(Vertex v, int k) {
    int i = v.index + k;
    if (i < 0) throw RangeError("shift by " + std::to_string(k) + " takes " + v.str() + " below index 0");
    return {v.side, i};
}

Arc shift(const Arc& a, int k) { return {shift(a.tail, k), shift(a.head, k)}; }

DirectedPath shift(const DirectedPath& p, int k) {
    std::vector<Vertex> vs;
    for (Vertex v : p.vertices()) vs.push_back(shift(v, k));
    return DirectedPath(std::move(vs));
}

DirectedCycle shift(const DirectedCycle& c, int k) {
    std::vector<Vertex> vs;
    for (Vertex v : c.vertices()) vs.push_back(shift(v, k));
    return DirectedCycle(std::move(vs));
}

TwoRegularDigraph shift(const TwoRegularDigraph& d, int k) {
    std::vector<DirectedCycle> cs;
    for (const auto& c : d.cycles()) cs.push_back(shift(c, k));
    return TwoRegularDigraph(std::move(cs));
}

Digraph shift(const Digraph& g, int k) {
    Digraph out;
    for (Vertex v : g.vertices) out.vertices.insert(shift(v, k));
    for (const auto& a : g.arcs) out.arcs.insert(shift(a, k));
    return out;
}

DirectedCycle reverse_cycle(const DirectedCycle& c) {
    std::vector<Vertex> vs(c.vertices().rbegin(), c.vertices().rend());
    return DirectedCycle(std::move(vs));
}

DirectedPath reverse_path(const DirectedPath& p) {
    std::vector<Vertex> vs(p.vertices().rbegin(), p.vertices().rend());
    return DirectedPath(std::move(vs));
}

PathOrCycle concat(const DirectedPath& p, const DirectedPath& q) {
    if (p.terminal() != q.source())
        throw DomainError("cannot concatenate " + p.str() + " and " + q.str() + ": endpoint mismatch");
    const auto& qv = q.vertices();
    bool closes = p.source() == q.terminal() && p.length() + q.length() >= 2;
    std::size_t end = closes ? qv.size() - 1 : qv.size();
    std::vector<Vertex> vs = p.vertices();
    for (std::size_t i = 1; i < end; ++i) {
        if (p.contains(qv[i]))
            throw DomainError("cannot concatenate " + p.str() + " and " + q.str() + ": shared vertex " + qv[i].str());
        vs.push_back(qv[i]);
    }
    if (closes) return DirectedCycle(std::move(vs));
    return DirectedPath(std::move(vs));
}

DirectedPath concat_path(const DirectedPath& p, const DirectedPath& q) {
    auto r = concat(p, q);
    if (auto* path = std::get_if<DirectedPath>(&r)) return *path;
    throw DomainError("concatenation of " + p.str() + " and " + q.str() + " closed into a cycle");
}

DirectedCycle close_cycle(const DirectedPath& p, const DirectedPath& q) {
    auto r = concat(p, q);
    if (auto* cyc = std::get_if<DirectedCycle>(&r)) return *cyc;
    throw DomainError("concatenation of " + p.str() + " and " + q.str() + " is not closed");
}

TwoRegularDigraph disjoint_union(const TwoRegularDigraph& a, const TwoRegularDigraph& b) {
    auto cs = a.cycles();
    cs.insert(cs.end(), b.cycles().begin(), b.cycles().end());
    return TwoRegularDigraph(std::move(cs));
}

}  // namespace oberwolfach
