// solver.hpp - F-factorizations of K*_n for n = 2 (mod 4): split K*_2m into
// one W*_2m and (m-5)/2 copies of H*_2m, and handle the small and uniform cases.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oberwolfach/checker.hpp"
#include "oberwolfach/core.hpp"

namespace oberwolfach {

struct WHDecomposition {
    int m = 0;
    // Each entry is a Hamiltonian cycle of K_m on block indices, using only
    // differences 3..(m-1)/2; block j of H_2m goes to block h[j].
    std::vector<std::vector<int>> h_cycles;
};

WHDecomposition wh_decompose(int m);

// Images of the four H*_2m factors under the block map of `cycle`.
std::vector<TwoRegularDigraph> embed_h_factors(const std::vector<TwoRegularDigraph>& factors,
                                               const std::vector<int>& cycle);

struct Factorization {
    int n = 0;
    CycleType type;
    std::vector<TwoRegularDigraph> factors;
    VerificationReport report;
};

enum class SolveStatus { Solved, Nonexistent, TimedOut };

struct SolveResult {
    SolveStatus status = SolveStatus::Solved;
    std::optional<Factorization> factorization;
    std::string message;
    std::string method;  // which construction produced the factors
};

struct SolveOptions {
    std::uint64_t seed = 1;
    std::uint64_t timeout_ms = 600'000;
    // n = 10 normally goes through W*_10 = K*_10; set to force the search.
    bool search_only = false;
    // Cache file for searched small orders; empty means $OBERWOLFACH_CACHE or none.
    std::string cache_path;
};

Factorization round_robin_two_cycles(int n);

SolveResult small_order_solve(int n, const CycleType& f, const SolveOptions& options = {});

SolveResult solve(int n, const CycleType& f, const SolveOptions& options = {});

// All partitions of n into even parts, largest part first.
std::vector<CycleType> even_partitions(int n);

}  // namespace oberwolfach
