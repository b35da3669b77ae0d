#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sandrank/graph.hpp"

namespace sandrank {

struct RankResult {
    Int rank = -1;
    /// Effective configuration of degree rank+1 with f - witness not effective.
    Configuration witness;
};

/// Memo of "is f toppling equivalent to an effective configuration", keyed by
/// the raw configuration. Bound to the first graph it is used with; using it
/// with another graph throws std::invalid_argument. Safe for concurrent use.
class EffectivenessCache {
public:
    bool test(const MultiGraph& g, const Configuration& f);
    std::size_t size() const;
    void clear();

private:
    struct Hash {
        std::size_t operator()(const Configuration& f) const noexcept;
    };
    mutable std::mutex mutex_;
    std::vector<std::vector<Int>> graph_;
    std::unordered_map<Configuration, bool, Hash> memo_;
};

/// Largest number of effective lambdas rank_bruteforce may have to test.
inline constexpr Int kDefaultRankSearchBound = 20'000'000;

/// Baker-Norine rank by testing effective lambdas of degree 0, 1, 2, ...
/// (lexicographic stars-and-bars order) until f - lambda leaves the effective
/// classes. Throws std::invalid_argument if the worst-case number of
/// candidates exceeds `search_bound`.
RankResult rank_bruteforce(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache = nullptr,
                           Int search_bound = kDefaultRankSearchBound);

/// kappa_i = d_i - 2.
Configuration kappa(const MultiGraph& g);

/// rho(f) - rho(kappa - f) == deg(f) + n - m, both ranks by brute force.
bool riemann_roch_check(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache = nullptr);

/// Checks the large-degree formula (when deg f > 2m - 2n) and
/// rho(f) <= rho(f + e_i) <= rho(f) + 1 for every vertex i.
bool rank_bounds_check(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache = nullptr);

} // namespace sandrank
