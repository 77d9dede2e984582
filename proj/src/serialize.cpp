#include "oberwolfach/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "oberwolfach/hstar.hpp"

namespace oberwolfach {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + quoted(vs[i].str());
    return out + "]";
}

std::string factor_json(const TwoRegularDigraph& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.cycles().size(); ++i) out += (i ? "," : "") + vertex_list(f.cycles()[i].vertices());
    return out + "]";
}

template <class T>
T field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw DomainError(std::string("missing field '") + key + "'");
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw DomainError(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

Format format_from_string(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "edges") return Format::Edges;
    if (name == "dot") return Format::Dot;
    if (name == "text") return Format::Text;
    throw DomainError("unknown format '" + name + "'");
}

std::string to_json(const Document& doc) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": " << doc.n << ",\n";
    out << "  \"factor_type\": [";
    for (std::size_t i = 0; i < doc.type.lengths().size(); ++i) out << (i ? "," : "") << doc.type.lengths()[i];
    out << "],\n";
    out << "  \"host\": {\"kind\": " << quoted(to_string(doc.host.kind)) << ", \"m\": " << doc.host.m_or_n << "},\n";
    out << "  \"seed\": " << doc.seed << ",\n";
    out << "  \"verified\": " << (doc.verified ? "true" : "false") << ",\n";
    if (doc.external_pattern) {
        out << "  \"external_pattern\": [";
        for (std::size_t i = 0; i < doc.external_pattern->size(); ++i) {
            const auto& p = (*doc.external_pattern)[i];
            out << (i ? "," : "") << vertex_list({p.begin(), p.end()});
        }
        out << "],\n";
    }
    out << "  \"factors\": [";
    for (std::size_t i = 0; i < doc.factors.size(); ++i) out << (i ? ",\n    " : "\n    ") << factor_json(doc.factors[i]);
    out << (doc.factors.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

Document document_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("document must be a JSON object");
    Document d;
    d.n = field<int>(j, "n");
    d.type = CycleType(field<std::vector<int>>(j, "factor_type"));
    auto host = j.find("host");
    if (host == j.end() || !host->is_object()) throw DomainError("missing object 'host'");
    d.host.kind = host_kind_from_string(field<std::string>(*host, "kind"));
    d.host.m_or_n = field<int>(*host, "m");
    d.seed = j.contains("seed") ? field<std::uint64_t>(j, "seed") : 0;
    d.verified = j.contains("verified") ? field<bool>(j, "verified") : false;
    for (const auto& f : field<std::vector<std::vector<std::vector<std::string>>>>(j, "factors")) {
        std::vector<DirectedCycle> cs;
        for (const auto& c : f) {
            std::vector<Vertex> vs;
            for (const auto& v : c) vs.push_back(Vertex::parse(v));
            cs.emplace_back(std::move(vs));
        }
        d.factors.emplace_back(std::move(cs));
    }
    if (j.contains("external_pattern")) {
        std::vector<ExternalPattern> ps;
        for (const auto& p : field<std::vector<std::vector<std::string>>>(j, "external_pattern")) {
            ExternalPattern e;
            for (const auto& v : p) e.insert(Vertex::parse(v));
            ps.push_back(std::move(e));
        }
        d.external_pattern = std::move(ps);
    }
    return d;
}

std::string to_edges(const std::vector<TwoRegularDigraph>& factors) {
    std::ostringstream out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (const auto& a : factors[i].arcs()) out << i + 1 << ' ' << a.tail.str() << ' ' << a.head.str() << '\n';
    return out.str();
}

std::string to_dot(const std::vector<TwoRegularDigraph>& factors, const std::string& name) {
    static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4",
                                    "magenta", "gold3", "gray40", "navy"};
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n";
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (const auto& a : factors[i].arcs())
            out << "  " << quoted(a.tail.str()) << " -> " << quoted(a.head.str()) << " [label=\"F" << i + 1
                << "\", color=" << palette[i % 12] << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_text(const Document& doc) {
    std::ostringstream out;
    out << doc.type.str() << "-factorization of " << to_string(doc.host.kind) << " (m = " << doc.host.m_or_n
        << "), " << doc.factors.size() << " factors" << (doc.verified ? ", verified" : "") << "\n";
    for (std::size_t i = 0; i < doc.factors.size(); ++i) out << "F" << i + 1 << ": " << doc.factors[i].str() << "\n";
    return out.str();
}

std::string render(const Document& doc, Format format) {
    switch (format) {
        case Format::Json: return to_json(doc);
        case Format::Edges: return to_edges(doc.factors);
        case Format::Dot: return to_dot(doc.factors);
        case Format::Text: return to_text(doc);
    }
    return {};
}

namespace {

VerificationReport verify_arcs(int n, const CycleType& type, const HostDescriptor& host_desc,
                               const std::vector<ArcFactor>& factors,
                               const std::optional<std::vector<ExternalPattern>>& pattern) {
    VerificationReport r;
    if (type.order() != n) r.add("order", false, "factor_type does not have order n");
    if (host_desc.kind == HostKind::JStar) {
        if (n != 2 * host_desc.m_or_n) r.add("order", false, "n must equal 2m for J*");
        r.merge(verify_admissible_decomposition(host_desc.m_or_n, factors, type, pattern));
        return r;
    }
    Host host = make_host(host_desc);
    if (static_cast<int>(host.vertices.size()) != n) r.add("order", false, "host order differs from n");
    r.merge(verify_factorization(host, factors, type));
    return r;
}

}  // namespace

VerificationReport verify_document(const Document& doc) {
    return verify_arcs(doc.n, doc.type, doc.host, to_arc_factors(doc.factors), doc.external_pattern);
}

VerificationReport verify_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("document must be a JSON object");
    // Header fields through the strict reader, with the factors left out.
    json header = j;
    header["factors"] = json::array();
    Document d = document_from_json(header.dump());
    std::vector<ArcFactor> factors;
    for (const auto& f : field<std::vector<std::vector<std::vector<std::string>>>>(j, "factors")) {
        ArcFactor arcs;
        for (const auto& c : f) {
            std::vector<Vertex> vs;
            for (const auto& v : c) vs.push_back(Vertex::parse(v));
            for (std::size_t i = 0; i < vs.size(); ++i) arcs.push_back({vs[i], vs[(i + 1) % vs.size()]});
        }
        factors.push_back(std::move(arcs));
    }
    return verify_arcs(d.n, d.type, d.host, factors, d.external_pattern);
}

std::string report_json(const VerificationReport& report) {
    json j;
    j["passed"] = report.passed;
    j["checks"] = json::array();
    for (const auto& c : report.checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return j.dump(2) + "\n";
}

Document construction_document(HostKind kind, const CycleType& f) {
    if (f.order() % 2) throw DomainError(f.str() + " has odd order");
    const int m = f.order() / 2;
    Document d;
    d.n = f.order();
    d.type = f;
    d.host = {kind, m};
    switch (kind) {
        case HostKind::JStar: {
            auto dec = j_decompose(f);
            d.factors = dec.factors;
            d.external_pattern = dec.pattern;
            break;
        }
        case HostKind::WStar: d.factors = w_star_factorization(f); break;
        case HostKind::HStar: d.factors = factorize_h_star(f, m).factors; break;
        case HostKind::CompleteSymmetric: throw DomainError("use solve for K*_n");
    }
    d.verified = verify_document(d).passed;
    return d;
}

std::string tables_json() {
    json j;
    for (const auto& p : standard_left_cap().paths) j["left_cap"].push_back(p.str());
    for (const auto& pr : standard_centre_piece().pairs) j["centre_piece"].push_back({pr.q.str(), pr.u.str()});
    for (const auto& row : right_cap_table()) {
        json els = json::array();
        for (const auto& e : row.cap.elements) {
            std::string s = e.path.str();
            for (const auto& c : e.cycles) s += " " + c.str();
            els.push_back(s);
        }
        j["right_caps"].push_back({{"family", family_name(row.family)}, {"s0", row.s0}, {"r", row.cap.r},
                                   {"elements", els}});
    }
    for (const auto& row : small_table()) {
        json fs = json::array();
        for (const auto& f : row.decomposition.factors) fs.push_back(f.str());
        j["small"].push_back({{"type", row.type.str()}, {"pictured", row.pictured}, {"factors", fs}});
    }
    json fs = json::array();
    for (const auto& f : searched_2_4_4().factors) fs.push_back(f.str());
    j["searched"].push_back({{"type", searched_2_4_4().type.str()}, {"factors", fs}});
    return j.dump(2) + "\n";
}

}  // namespace oberwolfach
