#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sandrank/graph.hpp"

namespace sandrank {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Connected multigraph on n vertices: a random spanning tree plus extra
/// edges, multiplicities in 1..max_mult.
MultiGraph random_multigraph(int n, std::mt19937_64& rng, int extra_edges = 4, int max_mult = 2);

/// Random configuration with entries in [lo, hi].
Configuration random_configuration(std::size_t n, Int lo, Int hi, std::mt19937_64& rng);

/// Random parking configuration on K_n (n = size), entries not sorted.
Configuration random_parking_kn(std::size_t n, Int sink, std::mt19937_64& rng);

CriterionResult criterion_kn_example();
CriterionResult criterion_formula_table();
CriterionResult criterion_strip_statistics();
CriterionResult criterion_dyck_statistics(std::uint64_t seed);
CriterionResult criterion_riemann_roch(std::uint64_t seed);
CriterionResult criterion_oracle_equivalence();
CriterionResult criterion_wheel();
CriterionResult criterion_recurrence();
CriterionResult criterion_tutte();
CriterionResult criterion_series();
CriterionResult criterion_linear_ops(std::uint64_t seed);

/// All eleven criteria in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// "PASS  3  strip statistics  (0.01 s)  detail"
std::string format_result(const CriterionResult& r);

} // namespace sandrank
