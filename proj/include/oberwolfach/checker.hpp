// checker.hpp - independent verification of factorizations, admissible
// decompositions and cap tables, plus an exhaustive oracle for tiny hosts.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oberwolfach/core.hpp"
#include "oberwolfach/hosts.hpp"
#include "oberwolfach/jmachine.hpp"

namespace oberwolfach {

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct VerificationReport {
    bool passed = true;
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {});
    void merge(const VerificationReport& other, const std::string& prefix = {});
    const Check* first_failure() const;
    std::string summary() const;
};

using ArcFactor = std::vector<Arc>;

std::vector<ArcFactor> to_arc_factors(const std::vector<TwoRegularDigraph>& factors);

// Factors are raw arc lists so that malformed inputs reach the checks.
VerificationReport verify_factorization(const Host& host, const std::vector<ArcFactor>& factors,
                                        const CycleType& type);
VerificationReport verify_factorization(const Host& host, const std::vector<TwoRegularDigraph>& factors,
                                        const CycleType& type);
VerificationReport verify_factorization(const Digraph& host, const std::vector<TwoRegularDigraph>& factors,
                                        const CycleType& type);

VerificationReport verify_admissible_decomposition(int m, const std::vector<ArcFactor>& factors,
                                                   const std::optional<CycleType>& type,
                                                   const std::optional<std::vector<ExternalPattern>>& expected);
VerificationReport verify_admissible_decomposition(int m, const AdmissibleDecomposition& dec,
                                                   const std::optional<std::vector<ExternalPattern>>& expected);

VerificationReport verify_left_cap(const LeftCap& cap, const std::vector<ExternalPattern>& pattern);
VerificationReport verify_right_cap(const RightCap& cap, const std::vector<ExternalPattern>& pattern);
VerificationReport verify_centre_piece(const CentrePiece& piece);

struct ComplementarityReport {
    VerificationReport report;
    std::optional<int> m0;  // len(L_i) + len(P_i), when constant
};

ComplementarityReport verify_cap_complementarity(const LeftCap& left, const RightCap& right,
                                                 const std::optional<CentrePiece>& centre,
                                                 const std::vector<ExternalPattern>& pattern = pattern_x());

enum class OracleStatus { Found, Nonexistent, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::Nonexistent;
    std::vector<TwoRegularDigraph> factors;
    std::uint64_t nodes = 0;
};

// Exhaustive search; refuses hosts above `max_vertices`.
OracleResult brute_force_factorization(const Host& host, const CycleType& type, std::uint64_t node_budget,
                                       int max_vertices = 10);

}  // namespace oberwolfach
