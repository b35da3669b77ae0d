#pragma once

#include <vector>

#include "sandrank/graph.hpp"
#include "sandrank/word.hpp"

namespace sandrank {

/// Tally of arithmetic operations performed by the K_n fast path.
struct OpCounter {
    Int ops = 0;
    void add(Int k = 1) noexcept { ops += k; }
};

void require_complete(const MultiGraph& g);

// The functions below work on K_n with n = f.size(), so the graph itself never
// has to be built. The overloads taking a MultiGraph reject anything but K_n.

/// deg f == 0 and all entries congruent mod n.
bool is_equiv_zero_kn(const Configuration& f);
bool is_equiv_zero_kn(const MultiGraph& g, const Configuration& f);
bool is_equiv_kn(const Configuration& f, const Configuration& h);
bool is_equiv_kn(const MultiGraph& g, const Configuration& f, const Configuration& h);

/// g_i = (f_i - f_1) mod n for i < n, g_n = deg f - sum.
Configuration compact_normalize(const Configuration& f, OpCounter* ops = nullptr);
Configuration compact_normalize(const MultiGraph& g, const Configuration& f);

/// Word of A_n whose i-th a is preceded by f_i b's; uses f_1..f_{n-1}, which
/// must satisfy 0 <= f_1 <= ... <= f_{n-1} <= n.
BinaryWord phi1(const Configuration& f);

/// Inverse of phi1 on a word with n-1 a's: the number of b's before each a.
std::vector<Int> b_counts_before_a(const BinaryWord& w);

/// Sorted parking configuration on K_n in word form: phi(f) and psi(f) = f_n.
struct SortedParking {
    BinaryWord word;
    Int sink = 0;

    std::size_t n() const { return static_cast<std::size_t>(word.count_a() + 1); }
    Configuration to_configuration() const;
    static SortedParking from_configuration(const Configuration& f);
    friend bool operator==(const SortedParking&, const SortedParking&) = default;
};

struct KnParking {
    SortedParking sorted;
    /// The parking representative of f itself (entries not sorted).
    Configuration representative;
};

/// Parking representative via compact normalization, counting sort and the
/// cyclic lemma. O(n) arithmetic.
KnParking parking_via_cyclic_lemma(const Configuration& f, OpCounter* ops = nullptr);
KnParking parking_via_cyclic_lemma(const MultiGraph& g, const Configuration& f);

/// One step of the rank recursion on words: phi = a u b v b maps to v a b u b
/// with sink s - |aub|_a. Requires n >= 2.
SortedParking theta_step(const SortedParking& p, OpCounter* ops = nullptr);

/// Sorted parking representative of f - e_1 for a sorted parking f.
Configuration rank_step_zero_coordinate(const Configuration& f);

/// (ab)^{n-1} b, the word of the staircase (0, 1, ..., n-2, a).
bool is_staircase(const BinaryWord& w);

/// Rank by repeated theta steps with the staircase shortcut.
Int rank_greedy(const Configuration& f, OpCounter* ops = nullptr);
Int rank_greedy(const MultiGraph& g, const Configuration& f);

struct FormulaBreakdown {
    Int q = 0;
    Int r = 0;
    std::vector<Int> eta;
    std::vector<Int> terms; // q - eta_i + [i <= r], before clipping at 0
    Int sum = 0;            // sum of the clipped terms, equal to rank + 1
    Int rank = -1;
};

FormulaBreakdown rank_formula_breakdown(const SortedParking& p, OpCounter* ops = nullptr);
Int rank_formula(const Configuration& f, OpCounter* ops = nullptr);
Int rank_formula(const MultiGraph& g, const Configuration& f);

/// Applies (theta_1, theta_2) k times to (w, s), w in D_n.
SortedParking theta_iterate(const BinaryWord& w, Int s, Int k);
/// Number of primitive factors of the Dyck part of w in D_n.
Int primitive_factor_count(const BinaryWord& w);
/// min{k >= 0 : theta_2^k(w, s) < 0} - 1.
Int rank_by_theta_iteration(const BinaryWord& w, Int s);

/// Sorted with f_{n-1} - f_1 <= n.
bool is_compact_sorted(const Configuration& f);
/// T(f) = sort(f - Delta^(n-1)) on compact sorted configurations, or its inverse.
Configuration t_operator(const Configuration& f, bool inverse = false);

/// sort(f) for the first n-1 entries, sink untouched.
Configuration sort_non_sink(Configuration f);

} // namespace sandrank
