// hstar.hpp - F-factorizations of H*_2m for bipartite F: four directed
// 2-factors built from explicit cycle families, or from an undirected
// factorization of H_2m directed both ways.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oberwolfach/core.hpp"

namespace oberwolfach {

struct HStarFactorization {
    int m = 0;
    std::vector<TwoRegularDigraph> factors;  // exactly four
};

// (x0,x_{m-1}), (y0,x_{m-1}), (y0,y_{m-1}), (x0,y_{m-1}).
std::array<DirectedCycle, 4> two_cycle_gadgets(int m);

enum class ChainPosition { Second, Later };

// Four cycles of length 2k starting at block a. The residue of 2k mod 4 picks
// the formula; for Later chains C^1 and C^3 reverse C^0 and C^2.
std::array<DirectedCycle, 4> chain_cycles(ChainPosition position, int a, int k);

HStarFactorization factorize_h_star(const CycleType& f, int m);

// An undirected cycle is its vertex sequence; a 2-factor is a list of them.
using UndirectedCycle = std::vector<Vertex>;
using UndirectedFactor = std::vector<UndirectedCycle>;

// Two edge-disjoint 2-factors of H_2m, each of type F, covering every edge.
std::array<UndirectedFactor, 2> haggkvist_undirected(const CycleType& f, int m);

// The exhaustive fallback used when the segment gadget does not fit (m >= 3).
std::optional<std::array<UndirectedFactor, 2>> haggkvist_by_search(const CycleType& f, int m);

}  // namespace oberwolfach
