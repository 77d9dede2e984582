#include "oberwolfach/checker.hpp"

#include <algorithm>
#include <map>

#include "oberwolfach/search.hpp"

namespace oberwolfach {

void VerificationReport::add(std::string name, bool ok, std::string detail) {
    if (!ok) passed = false;
    checks.push_back({std::move(name), ok, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) add(prefix + c.name, c.ok, c.detail);
}

const Check* VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.ok) return &c;
    return nullptr;
}

std::string VerificationReport::summary() const {
    if (const Check* f = first_failure()) return "FAIL " + f->name + (f->detail.empty() ? "" : ": " + f->detail);
    return "PASS (" + std::to_string(checks.size()) + " checks)";
}

std::vector<ArcFactor> to_arc_factors(const std::vector<TwoRegularDigraph>& factors) {
    std::vector<ArcFactor> out;
    for (const auto& f : factors) out.push_back(f.arcs());
    return out;
}

namespace {

// Collects the first failure per named check, so that a report has one row per
// check regardless of how many factors were examined.
class Ledger {
public:
    void fail(const std::string& name, std::string detail) {
        auto [it, fresh] = failures_.emplace(name, std::move(detail));
        (void)it;
        (void)fresh;
    }
    void emit(VerificationReport& r, const std::string& name) const {
        auto it = failures_.find(name);
        r.add(name, it == failures_.end(), it == failures_.end() ? std::string() : it->second);
    }

private:
    std::map<std::string, std::string> failures_;
};

std::string fstr(std::size_t i) { return "factor " + std::to_string(i + 1); }

// Shared structural checks; returns the parsed factors (empty optional where malformed).
std::vector<std::optional<TwoRegularDigraph>> structural(const std::map<Arc, int>& host_arcs,
                                                         const std::vector<ArcFactor>& factors, Ledger& led) {
    std::vector<std::optional<TwoRegularDigraph>> parsed;
    std::map<Arc, int> used;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        try {
            parsed.emplace_back(TwoRegularDigraph::from_arcs(factors[i]));
        } catch (const DomainError& e) {
            parsed.emplace_back(std::nullopt);
            led.fail("two_regular", fstr(i) + ": " + e.what());
        }
        std::set<Arc> within;
        for (const auto& a : factors[i]) {
            if (!within.insert(a).second) led.fail("two_regular", fstr(i) + " repeats arc " + a.str());
            if (!host_arcs.count(a)) led.fail("arc_membership", fstr(i) + " uses " + a.str() + ", not a host arc");
            ++used[a];
        }
    }
    for (const auto& [a, n] : used) {
        auto it = host_arcs.find(a);
        if (it != host_arcs.end() && n > it->second)
            led.fail("arc_disjointness", a.str() + " used " + std::to_string(n) + " times");
    }
    for (const auto& [a, mult] : host_arcs) {
        auto it = used.find(a);
        if ((it == used.end() ? 0 : it->second) < mult) led.fail("coverage", a.str() + " is not covered");
    }
    return parsed;
}

std::map<Arc, int> as_multiset(const std::set<Arc>& arcs) {
    std::map<Arc, int> m;
    for (const auto& a : arcs) m[a] = 1;
    return m;
}

}  // namespace

VerificationReport verify_factorization(const Host& host, const std::vector<ArcFactor>& factors,
                                        const CycleType& type) {
    VerificationReport r;
    Ledger led;
    std::size_t degree = host.vertices.empty() ? 0 : host.arc_count() / host.vertices.size();
    if (factors.size() != degree)
        led.fail("factor_count", std::to_string(factors.size()) + " factors, expected " + std::to_string(degree));
    auto parsed = structural(host.arcs, factors, led);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        if (!parsed[i]) continue;
        if (parsed[i]->vertex_set() != host.vertices) led.fail("spanning", fstr(i) + " does not span the host");
        if (cycle_type_of(*parsed[i]) != type)
            led.fail("cycle_type", fstr(i) + " has type " + cycle_type_of(*parsed[i]).str() + ", expected " + type.str());
    }
    for (const char* n : {"factor_count", "two_regular", "arc_membership", "arc_disjointness", "coverage", "spanning",
                          "cycle_type"})
        led.emit(r, n);
    return r;
}

VerificationReport verify_factorization(const Host& host, const std::vector<TwoRegularDigraph>& factors,
                                        const CycleType& type) {
    return verify_factorization(host, to_arc_factors(factors), type);
}

VerificationReport verify_factorization(const Digraph& host, const std::vector<TwoRegularDigraph>& factors,
                                        const CycleType& type) {
    Host h;
    h.vertices = host.vertices;
    h.arcs = as_multiset(host.arcs);
    return verify_factorization(h, to_arc_factors(factors), type);
}

VerificationReport verify_admissible_decomposition(int m, const std::vector<ArcFactor>& factors,
                                                   const std::optional<CycleType>& type,
                                                   const std::optional<std::vector<ExternalPattern>>& expected) {
    VerificationReport r;
    Ledger led;
    if (m < 1) {
        r.add("order", false, "m must be positive");
        return r;
    }
    if (factors.size() != 9) led.fail("factor_count", std::to_string(factors.size()) + " factors, expected 9");
    auto parsed = structural(as_multiset(j_arcs(m)), factors, led);
    std::vector<ExternalPattern> seen;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        if (!parsed[i]) {
            seen.emplace_back();
            continue;
        }
        const auto& d = *parsed[i];
        auto vs = d.vertex_set();
        if (d.order() != 2 * m) led.fail("order", fstr(i) + " has order " + std::to_string(d.order()));
        for (Vertex v : seam_vertices()) {
            Vertex w = shift(v, m);
            if (vs.count(v) + vs.count(w) != 1)
                led.fail("one_of_each_pair", fstr(i) + " must contain exactly one of " + v.str() + ", " + w.str());
        }
        for (int j = 2; j <= m - 1; ++j)
            for (Vertex v : {xv(j), yv(j)})
                if (!vs.count(v)) led.fail("middle_saturated", fstr(i) + " misses " + v.str());
        if (type && cycle_type_of(d) != *type)
            led.fail("cycle_type", fstr(i) + " has type " + cycle_type_of(d).str() + ", expected " + type->str());
        seen.push_back(external_pattern(d));
    }
    if (expected) {
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (i >= expected->size() || seen[i] != (*expected)[i])
                led.fail("external_pattern", fstr(i) + " meets the seam in " + pattern_str(seen[i]));
        if (seen.size() != expected->size()) led.fail("external_pattern", "pattern length mismatch");
    }
    for (const char* n : {"factor_count", "two_regular", "arc_membership", "arc_disjointness", "coverage", "order",
                          "one_of_each_pair", "middle_saturated"})
        led.emit(r, n);
    if (type) led.emit(r, "cycle_type");
    if (expected) led.emit(r, "external_pattern");
    return r;
}

VerificationReport verify_admissible_decomposition(int m, const AdmissibleDecomposition& dec,
                                                   const std::optional<std::vector<ExternalPattern>>& expected) {
    return verify_admissible_decomposition(m, to_arc_factors(dec.factors), dec.type, expected);
}

namespace {

std::string estr(std::size_t i) { return "element " + std::to_string(i + 1); }

void union_checks(const std::vector<std::vector<Arc>>& pieces, const std::set<Arc>& target, Ledger& led) {
    std::map<Arc, int> used;
    for (const auto& p : pieces)
        for (const auto& a : p) ++used[a];
    for (const auto& [a, n] : used) {
        if (n > 1) led.fail("arc_disjointness", a.str() + " used " + std::to_string(n) + " times");
        if (!target.count(a)) led.fail("arc_union", a.str() + " lies outside the prescribed arc set");
    }
    for (const auto& a : target)
        if (!used.count(a)) led.fail("arc_union", a.str() + " is not covered");
}

bool is_seam(Vertex v) {
    const auto& s = seam_vertices();
    return std::find(s.begin(), s.end(), v) != s.end();
}

}  // namespace

VerificationReport verify_left_cap(const LeftCap& cap, const std::vector<ExternalPattern>& pattern) {
    VerificationReport r;
    Ledger led;
    const int l = cap.ell;
    if (l < 1 || cap.paths.size() != 9 || pattern.size() != 9) {
        r.add("shape", false, "a left cap has ell >= 1 and nine paths");
        return r;
    }
    std::set<Arc> target = j_arcs(l);
    target.erase({xv(l), yv(l)});
    std::vector<std::vector<Arc>> pieces;
    std::set<Vertex> ends{xv(l), xv(l + 1), yv(l), yv(l + 1)};
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& p = cap.paths[i];
        pieces.push_back(p.arcs());
        ExternalPattern e;
        for (Vertex v : seam_vertices())
            if (p.contains(v)) e.insert(v);
        if (e != pattern[i]) led.fail("external_pattern", estr(i) + " meets the seam in " + pattern_str(e));
        for (int j = 2; j <= l - 1; ++j)
            if (!p.contains(xv(j)) || !p.contains(yv(j)))
                led.fail("middle_saturated", estr(i) + " misses block " + std::to_string(j));
        if (!ends.count(p.source()) || !ends.count(p.terminal()))
            led.fail("endpoints", estr(i) + " has endpoints " + p.source().str() + ", " + p.terminal().str());
    }
    union_checks(pieces, target, led);
    for (const char* n : {"arc_disjointness", "arc_union", "external_pattern", "middle_saturated", "endpoints"})
        led.emit(r, n);
    return r;
}

VerificationReport verify_right_cap(const RightCap& cap, const std::vector<ExternalPattern>& pattern) {
    VerificationReport r;
    Ledger led;
    const int rr = cap.r;
    if (rr < 1 || cap.elements.size() != 9 || pattern.size() != 9) {
        r.add("shape", false, "a right cap has r >= 1 and nine elements");
        return r;
    }
    std::set<Arc> target = j_arcs(rr);
    target.insert({xv(0), yv(0)});
    std::vector<std::vector<Arc>> pieces;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& el = cap.elements[i];
        std::vector<Arc> arcs = el.path.arcs();
        std::multiset<Vertex> vs(el.path.vertices().begin(), el.path.vertices().end());
        std::vector<int> lengths;
        for (const auto& c : el.cycles) {
            auto ca = c.arcs();
            arcs.insert(arcs.end(), ca.begin(), ca.end());
            vs.insert(c.vertices().begin(), c.vertices().end());
            lengths.push_back(c.length());
        }
        pieces.push_back(arcs);
        std::set<Vertex> distinct(vs.begin(), vs.end());
        if (distinct.size() != vs.size()) led.fail("vertex_disjoint", estr(i) + " reuses a vertex");
        if (CycleType(lengths) != cap.cycles)
            led.fail("cycle_type", estr(i) + " has cycles " + CycleType(lengths).str() + ", expected " + cap.cycles.str());
        for (Vertex v : seam_vertices()) {
            bool far = distinct.count(shift(v, rr)) != 0;
            if (far == (pattern[i].count(v) != 0))
                led.fail("external_pattern", estr(i) + ": " + shift(v, rr).str() + " disagrees with " + v.str());
        }
        for (int j = 2; j <= rr - 1; ++j)
            if (!distinct.count(xv(j)) || !distinct.count(yv(j)))
                led.fail("middle_saturated", estr(i) + " misses block " + std::to_string(j));
        if (!is_seam(el.path.source()) || !is_seam(el.path.terminal()))
            led.fail("endpoints", estr(i) + " has endpoints " + el.path.source().str() + ", " + el.path.terminal().str());
    }
    union_checks(pieces, target, led);
    for (const char* n : {"arc_disjointness", "arc_union", "vertex_disjoint", "cycle_type", "external_pattern",
                          "middle_saturated", "endpoints"})
        led.emit(r, n);
    return r;
}

VerificationReport verify_centre_piece(const CentrePiece& piece) {
    VerificationReport r;
    Ledger led;
    const int c = piece.c;
    if (c < 1 || piece.pairs.size() != 9) {
        r.add("shape", false, "a centre piece has c >= 1 and nine pairs");
        return r;
    }
    std::set<Arc> target = j_arcs(c);
    target.insert({xv(0), yv(0)});
    // The table data keeps y_c -> x_c; the rung left out is x_c -> y_c.
    target.erase({xv(c), yv(c)});
    std::vector<std::vector<Arc>> pieces;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto& [q, u] = piece.pairs[i];
        auto arcs = q.arcs();
        auto ua = u.arcs();
        arcs.insert(arcs.end(), ua.begin(), ua.end());
        pieces.push_back(arcs);
        if (q.length() + u.length() != 2 * c)
            led.fail("length", estr(i) + " has total length " + std::to_string(q.length() + u.length()));
        bool ends_ok = is_seam(q.source()) && q.terminal() == shift(q.source(), c) && u.source().index >= c &&
                       is_seam(shift(u.source(), -c)) && u.terminal() == shift(u.source(), -c);
        if (!ends_ok) led.fail("endpoints", estr(i) + " has misplaced endpoints");
        for (Vertex v : seam_vertices()) {
            if (v == q.source() || v == u.terminal()) continue;
            Vertex w = shift(v, c);
            int hits = (q.contains(v) || u.contains(v)) + (q.contains(w) || u.contains(w));
            if (hits != 1) led.fail("one_of_each_pair", estr(i) + " at " + v.str() + "/" + w.str());
        }
        for (int j = 2; j <= c - 1; ++j)
            for (Vertex v : {xv(j), yv(j)})
                if (q.contains(v) + u.contains(v) != 1)
                    led.fail("middle_exactly_once", estr(i) + " at " + v.str());
    }
    union_checks(pieces, target, led);
    for (const char* n : {"arc_disjointness", "arc_union", "length", "endpoints", "one_of_each_pair",
                          "middle_exactly_once"})
        led.emit(r, n);
    return r;
}

ComplementarityReport verify_cap_complementarity(const LeftCap& left, const RightCap& right,
                                                 const std::optional<CentrePiece>& centre,
                                                 const std::vector<ExternalPattern>& pattern) {
    ComplementarityReport out;
    auto& r = out.report;
    r.merge(verify_left_cap(left, pattern), "left.");
    r.merge(verify_right_cap(right, pattern), "right.");
    if (centre) r.merge(verify_centre_piece(*centre), "centre.");
    if (left.paths.size() != 9 || right.elements.size() != 9) return out;

    std::string bad;
    for (int i = 1; i <= 9 && bad.empty(); ++i)
        if (internal_pattern(left, i) != internal_pattern(right, i))
            bad = "element " + std::to_string(i) + ": " + internal_pattern(left, i).str() + " vs " +
                  internal_pattern(right, i).str();
    r.add("internal_pattern", bad.empty(), bad);
    if (centre && centre->pairs.size() == 9) {
        bad.clear();
        for (int i = 1; i <= 9 && bad.empty(); ++i)
            if (internal_pattern(left, i) != internal_pattern(*centre, i))
                bad = "element " + std::to_string(i) + ": " + internal_pattern(*centre, i).str();
        r.add("centre_internal_pattern", bad.empty(), bad);
    }
    std::optional<int> m0;
    bad.clear();
    for (std::size_t i = 0; i < 9; ++i) {
        int len = left.paths[i].length() + right.elements[i].path.length();
        if (m0 && *m0 != len && bad.empty()) bad = estr(i) + " gives " + std::to_string(len);
        if (!m0) m0 = len;
    }
    r.add("m0_constant", bad.empty(), bad);
    if (bad.empty()) out.m0 = m0;
    return out;
}

OracleResult brute_force_factorization(const Host& host, const CycleType& type, std::uint64_t node_budget,
                                       int max_vertices) {
    if (static_cast<int>(host.vertices.size()) > max_vertices)
        throw DomainError("oracle refuses hosts above " + std::to_string(max_vertices) + " vertices");
    if (!host.simple()) throw DomainError("oracle needs a simple host");
    OracleResult out;
    if (type.order() != static_cast<int>(host.vertices.size())) return out;
    SearchProblem p;
    p.labels.assign(host.vertices.begin(), host.vertices.end());
    for (const auto& [a, mult] : host.arcs) p.arcs.push_back(a);
    std::size_t degree = host.arc_count() / host.vertices.size();
    p.factor_sets.assign(degree, host.vertices);
    p.type = type;
    p.interchangeable = true;
    SearchOptions o;
    o.node_budget = node_budget;
    auto res = search_decomposition(p, o);
    out.nodes = res.nodes;
    switch (res.status) {
        case SearchStatus::Found:
            out.status = OracleStatus::Found;
            for (const auto& f : res.factors) out.factors.push_back(TwoRegularDigraph::from_arcs(f));
            break;
        case SearchStatus::Exhausted: out.status = OracleStatus::Nonexistent; break;
        default: out.status = OracleStatus::BudgetExceeded; break;
    }
    return out;
}

}  // namespace oberwolfach
