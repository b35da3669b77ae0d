#pragma once

#include <cstdint>
#include <vector>

#include "sandrank/graph.hpp"

namespace sandrank {

/// Nonnegative on every non-sink vertex.
bool is_sandpile(const MultiGraph& g, const Configuration& f);

/// f_i < d_i on every non-sink vertex. Throws std::invalid_argument when f is
/// not a sandpile configuration.
bool is_stable(const MultiGraph& g, const Configuration& f);

struct Stabilization {
    Configuration config;
    std::vector<Int> odometer; // topplings per vertex; the sink entry is always 0
};

/// Topples unstable non-sink vertices (lowest index first) until stable.
Stabilization stabilize(const MultiGraph& g, const Configuration& f);

/// Same result through a pseudo-random legal schedule, one toppling at a time.
Stabilization stabilize_shuffled(const MultiGraph& g, const Configuration& f, std::uint64_t seed);

/// Dhar's burning test: stabilizing f - Delta^(n) returns f with every
/// non-sink vertex toppling exactly once. Throws on unstable input.
bool is_recurrent_burning(const MultiGraph& g, const Configuration& f);

/// Subset characterization; exponential in n, for cross-validation only.
bool is_recurrent_subsets(const MultiGraph& g, const Configuration& f);

/// Non-sink vertices left unburnt when fire spreads from the sink
/// (v burns once f_v is below its edge count to burnt vertices). For a sandpile
/// configuration the result is empty iff f is parking; otherwise it is a set
/// whose simultaneous firing keeps every non-sink entry nonnegative.
std::vector<int> dhar_unburnt(const MultiGraph& g, const Configuration& f);

/// Parking (superstable) test through the duality with recurrence:
/// f is parking iff f is stable and beta(f) passes the burning test.
bool is_parking(const MultiGraph& g, const Configuration& f);

/// Subset-search definition of parking configurations; exponential oracle.
bool is_parking_subsets(const MultiGraph& g, const Configuration& f);

/// beta(f) = delta - f with delta_i = d_i - 1, applied to every entry
/// including the sink so that beta is an involution on all of Z^n.
Configuration beta(const MultiGraph& g, const Configuration& f);

/// The unique parking configuration toppling equivalent to f.
Configuration parking_representative(const MultiGraph& g, const Configuration& f);

/// The unique recurrent configuration toppling equivalent to f, obtained as
/// beta(parking_representative(delta - f)).
Configuration recurrent_representative(const MultiGraph& g, const Configuration& f);

/// Orientation in which all parallel edges of a pair point the same way.
class Orientation {
public:
    /// Orients every edge from the endpoint appearing earlier in `order`.
    /// `order` must be a permutation of the vertices. Always acyclic.
    static Orientation from_order(const MultiGraph& g, const std::vector<int>& order);

    /// direction[i][j] == 1 means the (i,j) edges go i -> j; must be
    /// antisymmetric and nonzero exactly where the graph has edges.
    Orientation(MultiGraph g, std::vector<std::vector<signed char>> direction);

    const MultiGraph& graph() const noexcept { return graph_; }
    /// Number of edges with tail i and head j.
    Int edges_from(int i, int j) const;
    Int indegree(int i) const;
    bool is_acyclic() const;
    Orientation reversed() const;

private:
    MultiGraph graph_;
    std::vector<std::vector<signed char>> dir_;
};

/// Peeling construction: starting from the sink, repeatedly take the lowest
/// index vertex k with f_k below its edge count to already peeled vertices and
/// orient those edges into k. Throws std::invalid_argument if f is not parking.
Orientation acyclic_orientation_from_parking(const MultiGraph& g, const Configuration& f);

/// (f_o)_i = indegree_i - 1.
Configuration orientation_configuration(const Orientation& o);

/// Toppling equivalent to a nonnegative configuration.
bool is_effective_class(const MultiGraph& g, const Configuration& f);

struct EffectiveClassCounts {
    /// by_parking[d]: parking configurations g with g_n = d - sum_{i<n} g_i >= 0.
    std::vector<Int> by_parking;
    /// by_level[d]: sum of t_k for k in [m-n+1-d, m-n+1].
    std::vector<Int> by_level;
    /// t_k: number of recurrent configurations (non-sink part) of level k,
    /// i.e. the coefficients of T_G(1, y).
    std::vector<Int> tutte_coefficients;
    Int spanning_trees = 0;
};

/// Upper bound on prod_{i<n} d_i accepted by effective_class_counts.
inline constexpr Int kMaxStableEnumeration = 10'000'000;

/// Number of toppling classes of each degree 0..d_max containing an effective
/// configuration, computed by parking enumeration and by the level statistic.
EffectiveClassCounts effective_class_counts(const MultiGraph& g, Int d_max);

} // namespace sandrank
