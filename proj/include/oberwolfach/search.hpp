// search.hpp - backtracking search for decompositions of a small digraph into
// 2-regular factors of a fixed cycle type, one prescribed vertex set per factor.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "oberwolfach/core.hpp"

namespace oberwolfach {

struct SearchProblem {
    std::vector<Vertex> labels;              // at most 64 vertices
    std::vector<Arc> arcs;                   // simple digraph to decompose
    std::vector<std::set<Vertex>> factor_sets;
    CycleType type;
    // Factors are interchangeable (all share one vertex set); the search then
    // orders them by the successor of the least vertex.
    bool interchangeable = false;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded, TimedOut };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<std::vector<Arc>> factors;
    std::uint64_t nodes = 0;
    int restarts = 0;
};

struct SearchOptions {
    std::uint64_t node_budget = 0;          // 0 means unlimited
    std::optional<std::uint64_t> shuffle_seed;  // randomized branching order when set
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

SearchResult search_decomposition(const SearchProblem& problem, const SearchOptions& options);

// Repeated randomized runs, each with a fresh seed derived from `seed`.
SearchResult search_with_restarts(const SearchProblem& problem, std::uint64_t seed,
                                  std::uint64_t nodes_per_restart, int max_restarts,
                                  std::optional<std::chrono::steady_clock::time_point> deadline);

}  // namespace oberwolfach
