// serialize.hpp - the JSON document exchanged by the command line tool, and
// the edge-list, DOT and plain-text renderings of a list of factors.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/core.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"

namespace oberwolfach {

// {"n", "factor_type", "host": {"kind", "m"}, "seed", "verified", "factors",
//  optional "external_pattern"}. For CompleteSymmetric hosts "m" holds n.
struct Document {
    int n = 0;
    CycleType type;
    HostDescriptor host;
    std::uint64_t seed = 0;
    bool verified = false;
    std::vector<TwoRegularDigraph> factors;
    std::optional<std::vector<ExternalPattern>> external_pattern;
};

enum class Format { Json, Edges, Dot, Text };

Format format_from_string(const std::string& name);

// One factor per line, so diffs stay readable; parse + write is byte-identical.
std::string to_json(const Document& doc);
Document document_from_json(const std::string& text);

std::string to_edges(const std::vector<TwoRegularDigraph>& factors);
std::string to_dot(const std::vector<TwoRegularDigraph>& factors, const std::string& name = "factorization");
std::string to_text(const Document& doc);
std::string render(const Document& doc, Format format);

// Re-runs the checker appropriate for the document's host.
VerificationReport verify_document(const Document& doc);
// Same, straight from JSON text: cycles that overlap or repeat vertices are
// reported as failed checks rather than rejected while parsing.
VerificationReport verify_json(const std::string& text);

std::string report_json(const VerificationReport& report);

// The construction for F on J*_2m, W*_2m or H*_2m (2m = order of F), checked.
Document construction_document(HostKind kind, const CycleType& f);

// Left cap, centre piece, right caps and small decompositions in text form.
std::string tables_json();

}  // namespace oberwolfach
