// jmachine.hpp - admissible decompositions of J*_2m: patterns, caps, centre
// pieces, splicing, assembly, the embedded data tables and the recursion
// that reaches every bipartite type other than [2^m].
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oberwolfach/core.hpp"

namespace oberwolfach {

// Subset of the seam {x0, x1, y0, y1}.
using ExternalPattern = std::set<Vertex>;

const std::vector<Vertex>& seam_vertices();
// The nine-entry pattern shared by every decomposition built here.
const std::vector<ExternalPattern>& pattern_x();
std::string pattern_str(const ExternalPattern& p);

struct InternalPatternEntry {
    Vertex first;
    Vertex second;
    std::set<Vertex> absent;

    auto operator<=>(const InternalPatternEntry&) const = default;
    std::string str() const;
    // "(y0,x0,{})" or "(x1,y1,{x0,y0})".
    static InternalPatternEntry parse(std::string_view text);
};

struct LeftCap {
    int ell = 0;
    std::vector<DirectedPath> paths;
};

struct RightCapElement {
    DirectedPath path;
    std::vector<DirectedCycle> cycles;
};

struct RightCap {
    int r = 0;
    CycleType cycles;  // the multiset M; t = cycles.size()
    std::vector<RightCapElement> elements;
};

struct CentrePair {
    DirectedPath q;
    DirectedPath u;
};

struct CentrePiece {
    int c = 0;
    std::vector<CentrePair> pairs;
};

struct AdmissibleDecomposition {
    int m = 0;
    CycleType type;
    std::vector<TwoRegularDigraph> factors;
    std::vector<ExternalPattern> pattern;
};

ExternalPattern external_pattern(const TwoRegularDigraph& d);
bool is_admissible(const TwoRegularDigraph& d, int m);

// Factor j of the result is A_j together with B_j shifted by A.m.
AdmissibleDecomposition splice(const AdmissibleDecomposition& a, const AdmissibleDecomposition& b);

// i runs from 1 to 9.
InternalPatternEntry internal_pattern(const LeftCap& cap, int i);
InternalPatternEntry internal_pattern(const RightCap& cap, int i);
InternalPatternEntry internal_pattern(const CentrePiece& piece, int i);

CentrePiece concat_centre(const CentrePiece& piece, int k);

AdmissibleDecomposition assemble(const LeftCap& left, const std::optional<CentrePiece>& centre, int k,
                                 const RightCap& right);

enum class Family { Cycle, CycleTwo, CycleTwoTwo, CycleFour };

std::string family_name(Family f);
// Smallest s for which the family is defined: 4, or 5 for CycleFour.
int family_min_s(Family f);
CycleType family_type(Family f, int s);

struct RightCapRow {
    Family family;
    int s0;
    RightCap cap;
};

const LeftCap& standard_left_cap();
const CentrePiece& standard_centre_piece();
const std::vector<RightCapRow>& right_cap_table();
const RightCap& right_cap(Family f, int s0);

// Returns the family and s if F is one of [2s], [2s,2], [2s,2^2] (s >= 4) or [2s,4] (s >= 5).
std::optional<std::pair<Family, int>> general_family_of(const CycleType& f);
AdmissibleDecomposition general_factor(const CycleType& f);

struct SmallRow {
    CycleType type;
    bool pictured;  // the [4,8] decomposition given as drawings rather than a list
    AdmissibleDecomposition decomposition;
};

const std::vector<SmallRow>& small_table();
std::vector<CycleType> small_factor_types();
bool has_small_factor(const CycleType& f);
AdmissibleDecomposition small_factor(const CycleType& f);

// The [2,4,4]-decomposition of J*_10, found by computer search; see tools/find_brick.
AdmissibleDecomposition searched_2_4_4();

// One element of the drawn [4,18] example: left path, centre pair, right element.
struct PicturedElement {
    DirectedPath left;
    std::vector<DirectedPath> centre;
    RightCapElement right;
    InternalPatternEntry stated_internal;
};
const std::vector<PicturedElement>& pictured_cap_example();

enum class BrickSource { General, Small, Searched };

struct Brick {
    CycleType type;
    BrickSource source;
};

// The bricks spliced (left to right) by j_decompose.
std::vector<Brick> j_plan(const CycleType& f);
AdmissibleDecomposition j_decompose(const CycleType& f);
AdmissibleDecomposition brick_decomposition(const Brick& b);

std::vector<TwoRegularDigraph> w_star_factorization(const CycleType& f);

}  // namespace oberwolfach
