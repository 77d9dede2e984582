#include "oberwolfach/jmachine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "oberwolfach/hosts.hpp"
#include "tables_data.hpp"

namespace oberwolfach {

namespace {

std::vector<std::string> tokens(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string set_str(const std::set<Vertex>& s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ',';
        out += v.str();
        first = false;
    }
    return out + "}";
}

RightCapElement parse_element(std::string_view text) {
    auto toks = tokens(text);
    if (toks.empty() || toks.front().front() != '<') throw DomainError("right cap element needs a path first");
    RightCapElement e;
    e.path = DirectedPath::parse(toks.front());
    for (std::size_t i = 1; i < toks.size(); ++i) e.cycles.push_back(DirectedCycle::parse(toks[i]));
    return e;
}

int family_r(Family f, int s0) {
    switch (f) {
        case Family::Cycle: return s0 - 2;
        case Family::CycleTwo: return s0 - 1;
        case Family::CycleTwoTwo:
        case Family::CycleFour: return s0;
    }
    return s0;
}

CycleType family_cycles(Family f) {
    switch (f) {
        case Family::Cycle: return CycleType();
        case Family::CycleTwo: return CycleType({2});
        case Family::CycleTwoTwo: return CycleType({2, 2});
        case Family::CycleFour: return CycleType({4});
    }
    return CycleType();
}

AdmissibleDecomposition decomposition_from(int m, const CycleType& type, std::vector<TwoRegularDigraph> factors) {
    AdmissibleDecomposition d;
    d.m = m;
    d.type = type;
    for (const auto& f : factors) d.pattern.push_back(external_pattern(f));
    d.factors = std::move(factors);
    return d;
}

void require_admissible(const AdmissibleDecomposition& d, const char* what) {
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (!is_admissible(d.factors[i], d.m))
            throw DomainError(std::string(what) + ": factor " + std::to_string(i + 1) + " is not admissible in J*_" +
                              std::to_string(2 * d.m));
        if (cycle_type_of(d.factors[i]) != d.type)
            throw DomainError(std::string(what) + ": factor " + std::to_string(i + 1) + " has type " +
                              cycle_type_of(d.factors[i]).str() + ", expected " + d.type.str());
    }
}

}  // namespace

const std::vector<Vertex>& seam_vertices() {
    static const std::vector<Vertex> seam{xv(0), xv(1), yv(0), yv(1)};
    return seam;
}

const std::vector<ExternalPattern>& pattern_x() {
    static const std::vector<ExternalPattern> p{
        {yv(1)},
        {xv(0), xv(1), yv(1)},
        {xv(1), yv(0), yv(1)},
        {xv(0), xv(1), yv(0), yv(1)},
        {yv(1)},
        {xv(0), xv(1), yv(0)},
        {xv(1), yv(1)},
        {xv(1)},
        {xv(0), xv(1), yv(0), yv(1)},
    };
    return p;
}

std::string pattern_str(const ExternalPattern& p) { return set_str(p); }

std::string InternalPatternEntry::str() const {
    return "(" + first.str() + "," + second.str() + "," + set_str(absent) + ")";
}

InternalPatternEntry InternalPatternEntry::parse(std::string_view text) {
    auto open = text.find('(');
    auto brace = text.find('{');
    auto close_brace = text.find('}');
    if (open == std::string_view::npos || brace == std::string_view::npos || close_brace == std::string_view::npos)
        throw DomainError("malformed internal pattern '" + std::string(text) + "'");
    auto head = split_list(text.substr(open + 1, brace - open - 1));
    // head ends with an empty token left by the comma before '{'
    if (head.size() != 3 || !head[2].empty())
        throw DomainError("malformed internal pattern '" + std::string(text) + "'");
    InternalPatternEntry e;
    e.first = Vertex::parse(head[0]);
    e.second = Vertex::parse(head[1]);
    for (const auto& tok : split_list(text.substr(brace + 1, close_brace - brace - 1))) e.absent.insert(Vertex::parse(tok));
    return e;
}

ExternalPattern external_pattern(const TwoRegularDigraph& d) {
    ExternalPattern p;
    for (Vertex v : seam_vertices())
        if (d.contains(v)) p.insert(v);
    return p;
}

bool is_admissible(const TwoRegularDigraph& d, int m) {
    if (m < 1 || d.order() != 2 * m) return false;
    auto vs = d.vertex_set();
    for (Vertex v : vs)
        if (v.index > m + 1) return false;
    for (Vertex v : seam_vertices())
        if (vs.count(v) + vs.count(shift(v, m)) != 1) return false;
    for (int j = 2; j <= m - 1; ++j)
        if (!vs.count(xv(j)) || !vs.count(yv(j))) return false;
    return true;
}

AdmissibleDecomposition splice(const AdmissibleDecomposition& a, const AdmissibleDecomposition& b) {
    if (a.factors.size() != b.factors.size()) throw DomainError("splice needs equally many factors");
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (external_pattern(a.factors[i]) != external_pattern(b.factors[i]))
            throw DomainError("splice: factor " + std::to_string(i + 1) + " has incompatible external patterns");
    std::vector<TwoRegularDigraph> fs;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        fs.push_back(disjoint_union(a.factors[i], shift(b.factors[i], a.m)));
    auto out = decomposition_from(a.m + b.m, a.type.merged(b.type), std::move(fs));
    require_admissible(out, "splice");
    return out;
}

InternalPatternEntry internal_pattern(const LeftCap& cap, int i) {
    const auto& p = cap.paths.at(static_cast<std::size_t>(i - 1));
    InternalPatternEntry e;
    e.first = shift(p.source(), -cap.ell);
    e.second = shift(p.terminal(), -cap.ell);
    for (Vertex v : seam_vertices()) {
        Vertex w = shift(v, cap.ell);
        if (p.is_internal(w)) e.absent.insert(v);
    }
    return e;
}

InternalPatternEntry internal_pattern(const RightCap& cap, int i) {
    const auto& el = cap.elements.at(static_cast<std::size_t>(i - 1));
    InternalPatternEntry e;
    e.first = el.path.terminal();
    e.second = el.path.source();
    for (Vertex v : seam_vertices()) {
        bool seen = el.path.contains(v);
        for (const auto& c : el.cycles)
            seen = seen || std::find(c.vertices().begin(), c.vertices().end(), v) != c.vertices().end();
        if (!seen) e.absent.insert(v);
    }
    return e;
}

InternalPatternEntry internal_pattern(const CentrePiece& piece, int i) {
    const auto& pr = piece.pairs.at(static_cast<std::size_t>(i - 1));
    InternalPatternEntry e;
    e.first = pr.u.terminal();
    e.second = pr.q.source();
    for (Vertex v : seam_vertices())
        if (!pr.q.contains(v) && !pr.u.contains(v)) e.absent.insert(v);
    return e;
}

CentrePiece concat_centre(const CentrePiece& piece, int k) {
    if (piece.c != 4) throw DomainError("concat_centre expects a centre piece of length 4");
    if (k < 1) throw DomainError("concat_centre needs k >= 1");
    CentrePiece out;
    out.c = 4 * k;
    for (const auto& pr : piece.pairs) {
        DirectedPath q = pr.q;
        for (int j = 1; j < k; ++j) q = concat_path(q, shift(pr.q, 4 * j));
        DirectedPath u = shift(pr.u, 4 * (k - 1));
        for (int j = k - 2; j >= 0; --j) u = concat_path(u, shift(pr.u, 4 * j));
        out.pairs.push_back({std::move(q), std::move(u)});
    }
    return out;
}

AdmissibleDecomposition assemble(const LeftCap& left, const std::optional<CentrePiece>& centre, int k,
                                 const RightCap& right) {
    if (k < 0) throw DomainError("assemble needs k >= 0");
    if (k > 0 && !centre) throw DomainError("assemble with k >= 1 needs a centre piece");
    if (left.paths.size() != 9 || right.elements.size() != 9) throw DomainError("caps must have nine elements");
    for (int i = 1; i <= 9; ++i) {
        if (internal_pattern(left, i) != internal_pattern(right, i))
            throw DomainError("caps are not complementary at element " + std::to_string(i));
        if (k > 0 && internal_pattern(left, i) != internal_pattern(*centre, i))
            throw DomainError("centre piece is not complementary at element " + std::to_string(i));
    }
    std::optional<CentrePiece> long_centre;
    if (k > 0) long_centre = concat_centre(*centre, k);

    const int ell = left.ell;
    std::optional<int> m0;
    std::vector<TwoRegularDigraph> factors;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& L = left.paths[i];
        const auto& R = right.elements[i];
        int len = L.length() + R.path.length();
        if (m0 && *m0 != len) throw DomainError("len(L_i) + len(P_i) is not constant");
        m0 = len;
        DirectedCycle longest;
        if (k == 0) {
            longest = close_cycle(L, shift(R.path, ell));
        } else {
            const auto& pr = long_centre->pairs[i];
            DirectedPath d = concat_path(L, shift(pr.q, ell));
            d = concat_path(d, shift(R.path, ell + 4 * k));
            longest = close_cycle(d, shift(pr.u, ell));
        }
        std::vector<DirectedCycle> cycles{longest};
        for (const auto& c : R.cycles) cycles.push_back(shift(c, ell + 4 * k));
        factors.emplace_back(std::move(cycles));
    }
    CycleType type = CycleType({*m0 + 8 * k}).merged(right.cycles);
    auto out = decomposition_from(ell + 4 * k + right.r, type, std::move(factors));
    require_admissible(out, "assemble");
    return out;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Cycle: return "[2s]";
        case Family::CycleTwo: return "[2s,2]";
        case Family::CycleTwoTwo: return "[2s,2^2]";
        case Family::CycleFour: return "[2s,4]";
    }
    return "?";
}

int family_min_s(Family f) { return f == Family::CycleFour ? 5 : 4; }

CycleType family_type(Family f, int s) { return CycleType({2 * s}).merged(family_cycles(f)); }

const LeftCap& standard_left_cap() {
    static const LeftCap cap = [] {
        LeftCap c;
        c.ell = 2;
        for (const char* p : data::kLeftCap) c.paths.push_back(DirectedPath::parse(p));
        return c;
    }();
    return cap;
}

const CentrePiece& standard_centre_piece() {
    static const CentrePiece piece = [] {
        CentrePiece c;
        c.c = 4;
        for (const auto& pr : data::kCentre) c.pairs.push_back({DirectedPath::parse(pr[0]), DirectedPath::parse(pr[1])});
        return c;
    }();
    return piece;
}

const std::vector<RightCapRow>& right_cap_table() {
    static const std::vector<RightCapRow> rows = [] {
        std::vector<RightCapRow> out;
        for (const auto& d : data::kRightCaps) {
            RightCap cap;
            cap.r = family_r(d.family, d.s0);
            cap.cycles = family_cycles(d.family);
            for (const char* e : d.elements) cap.elements.push_back(parse_element(e));
            out.push_back({d.family, d.s0, std::move(cap)});
        }
        return out;
    }();
    return rows;
}

const RightCap& right_cap(Family f, int s0) {
    for (const auto& row : right_cap_table())
        if (row.family == f && row.s0 == s0) return row.cap;
    throw DomainError("no right cap for " + family_name(f) + " with s0 = " + std::to_string(s0));
}

std::optional<std::pair<Family, int>> general_family_of(const CycleType& f) {
    if (!f.bipartite()) return std::nullopt;
    const auto& l = f.lengths();
    if (l.size() == 1 && l[0] >= 8) return std::pair{Family::Cycle, l[0] / 2};
    if (l.size() == 2 && l[0] == 2 && l[1] >= 8) return std::pair{Family::CycleTwo, l[1] / 2};
    if (l.size() == 2 && l[0] == 4 && l[1] >= 10) return std::pair{Family::CycleFour, l[1] / 2};
    if (l.size() == 3 && l[0] == 2 && l[1] == 2 && l[2] >= 8) return std::pair{Family::CycleTwoTwo, l[2] / 2};
    return std::nullopt;
}

AdmissibleDecomposition general_factor(const CycleType& f) {
    auto fam = general_family_of(f);
    if (!fam) throw DomainError(f.str() + " is not in one of the general families");
    auto [family, s] = *fam;
    int lo = family_min_s(family);
    int s0 = lo + (s - lo) % 4;
    int k = (s - s0) / 4;
    auto out = assemble(standard_left_cap(), k > 0 ? std::optional(standard_centre_piece()) : std::nullopt, k,
                        right_cap(family, s0));
    if (out.type != f) throw DomainError("general_factor produced " + out.type.str() + " for " + f.str());
    return out;
}

const std::vector<SmallRow>& small_table() {
    static const std::vector<SmallRow> rows = [] {
        std::vector<SmallRow> out;
        for (const auto& d : data::kSmall) {
            CycleType type = CycleType::parse(d.type);
            std::vector<TwoRegularDigraph> fs;
            for (const char* f : d.factors) fs.push_back(TwoRegularDigraph::parse(f));
            out.push_back({type, d.pictured, decomposition_from(type.order() / 2, type, std::move(fs))});
        }
        return out;
    }();
    return rows;
}

std::vector<CycleType> small_factor_types() {
    std::vector<CycleType> out;
    for (const auto& row : small_table())
        if (!row.pictured) out.push_back(row.type);
    return out;
}

bool has_small_factor(const CycleType& f) {
    for (const auto& row : small_table())
        if (!row.pictured && row.type == f) return true;
    return false;
}

AdmissibleDecomposition small_factor(const CycleType& f) {
    for (const auto& row : small_table())
        if (!row.pictured && row.type == f) return row.decomposition;
    throw DomainError("no small decomposition for " + f.str());
}

AdmissibleDecomposition searched_2_4_4() {
    static const AdmissibleDecomposition dec = [] {
        std::vector<TwoRegularDigraph> fs;
        for (const char* f : data::kSearched244) fs.push_back(TwoRegularDigraph::parse(f));
        return decomposition_from(5, CycleType({2, 4, 4}), std::move(fs));
    }();
    if (dec.factors.front().cycles().empty()) throw DomainError("the [2,4,4] brick has not been generated");
    return dec;
}

const std::vector<PicturedElement>& pictured_cap_example() {
    static const std::vector<PicturedElement> els = [] {
        std::vector<PicturedElement> out;
        for (const auto& d : data::kPictured) {
            PicturedElement e;
            e.left = DirectedPath::parse(d.left);
            for (const auto& tok : tokens(d.centre)) e.centre.push_back(DirectedPath::parse(tok));
            e.right = parse_element(d.right);
            e.stated_internal = InternalPatternEntry::parse(d.internal);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return els;
}

namespace {

using Lengths = std::vector<int>;

void remove_one(Lengths& l, int v) { l.erase(std::find(l.begin(), l.end(), v)); }

Brick general(std::vector<int> l) { return {CycleType(std::move(l)), BrickSource::General}; }
Brick small(std::vector<int> l) { return {CycleType(std::move(l)), BrickSource::Small}; }

void repeat(std::vector<Brick>& out, const Brick& b, int times) {
    for (int i = 0; i < times; ++i) out.push_back(b);
}

// Every length is at least 6.
void plan_long(const Lengths& l, std::vector<Brick>& out) {
    for (int len : l) out.push_back(len == 6 ? small({6}) : general({len}));
}

// Smallest length is at least 4.
void plan_no_twos(Lengths l, std::vector<Brick>& out) {
    if (l.empty()) return;
    if (l.front() >= 6) return plan_long(l, out);
    int alpha = static_cast<int>(std::count(l.begin(), l.end(), 4));
    Lengths rest(l.begin() + alpha, l.end());
    if (alpha >= 2) {
        int gamma = alpha % 2;
        int beta = (alpha - 3 * gamma) / 2;
        repeat(out, small({4, 4}), beta);
        repeat(out, small({4, 4, 4}), gamma);
        return plan_long(rest, out);
    }
    if (rest.empty()) throw DomainError("[4] has no admissible decomposition");
    int m2 = rest.front();
    rest.erase(rest.begin());
    out.push_back(m2 <= 8 ? small({4, m2}) : general({4, m2}));
    plan_long(rest, out);
}

}  // namespace

std::vector<Brick> j_plan(const CycleType& f) {
    if (!f.bipartite()) throw DomainError(f.str() + " has an odd cycle length");
    if (f.empty()) throw DomainError("empty cycle type");
    Lengths l = f.lengths();
    if (l.back() == 2) throw DomainError(f.str() + " is [2^m], which has no admissible decomposition here");
    std::vector<Brick> out;
    if (l.front() >= 4) {
        plan_no_twos(l, out);
        return out;
    }
    int alpha = static_cast<int>(std::count(l.begin(), l.end(), 2));
    Lengths rest(l.begin() + alpha, l.end());
    const Brick triple = small({2, 2, 2});
    int m2 = rest.front();

    // A remainder of exactly [4] has no brick of its own; absorb it.
    if (alpha % 3 == 0 && rest == Lengths{4}) {
        out.push_back(small({2, 2, 2, 4}));
        repeat(out, triple, alpha / 3 - 1);
        return out;
    }
    if (alpha % 3 == 2 && rest == Lengths{4, 4}) {
        out.push_back(small({2, 2, 4, 4}));
        repeat(out, triple, alpha / 3);
        return out;
    }
    if (alpha % 3 == 1 && rest == Lengths{4, 4}) {
        if (alpha == 1) {
            out.push_back({CycleType({2, 4, 4}), BrickSource::Searched});
            return out;
        }
        out.push_back(small({2, 4}));
        out.push_back(small({2, 2, 2, 4}));
        repeat(out, triple, alpha / 3 - 1);
        return out;
    }

    if (alpha % 3 == 0) {
        repeat(out, triple, alpha / 3);
    } else if (alpha % 3 == 1) {
        out.push_back(m2 <= 6 ? small({2, m2}) : general({2, m2}));
        repeat(out, triple, alpha / 3);
        remove_one(rest, m2);
    } else {
        out.push_back(m2 <= 6 ? small({2, 2, m2}) : general({2, 2, m2}));
        repeat(out, triple, alpha / 3);
        remove_one(rest, m2);
    }
    plan_no_twos(rest, out);
    return out;
}

AdmissibleDecomposition brick_decomposition(const Brick& b) {
    switch (b.source) {
        case BrickSource::General: return general_factor(b.type);
        case BrickSource::Small: return small_factor(b.type);
        case BrickSource::Searched: return searched_2_4_4();
    }
    throw DomainError("unknown brick source");
}

AdmissibleDecomposition j_decompose(const CycleType& f) {
    if (!f.bipartite()) throw DomainError(f.str() + " has an odd cycle length");
    if (f.order() < 8) throw DomainError("j_decompose needs m >= 4");
    auto plan = j_plan(f);
    AdmissibleDecomposition acc = brick_decomposition(plan.front());
    for (std::size_t i = 1; i < plan.size(); ++i) acc = splice(acc, brick_decomposition(plan[i]));
    if (acc.type != f) throw DomainError("j_decompose produced " + acc.type.str() + " for " + f.str());
    return acc;
}

std::vector<TwoRegularDigraph> w_star_factorization(const CycleType& f) {
    auto dec = j_decompose(f);
    std::vector<TwoRegularDigraph> out;
    for (const auto& d : dec.factors) out.push_back(fold(d, dec.m));
    return out;
}

}  // namespace oberwolfach
