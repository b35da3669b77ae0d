#pragma once

#include <random>
#include <vector>

#include "sandrank/word.hpp"

namespace sandrank {

/// eta_i = delta of the prefix before the i-th a.
std::vector<Int> heights(const BinaryWord& w);

struct CyclicFactorization {
    BinaryWord u; // shortest prefix of minimal delta
    BinaryWord v;
};

/// w = uv with vu in D_n. Throws unless |w|_b == |w|_a + 1.
CyclicFactorization cyclic_factorization(const BinaryWord& w);
/// The unique conjugate of w lying in D_n.
BinaryWord Dn_conjugate(const BinaryWord& w);

/// Uniformly random word of A_n, and its D_n conjugate.
BinaryWord random_An_word(std::size_t n, std::mt19937_64& rng);
BinaryWord random_Dn_word(std::size_t n, std::mt19937_64& rng);

/// Sum of heights; valid for Dyck and D_n words alike.
Int area(const BinaryWord& w);

/// First-return rotation on Dyck words: a u b v -> v a b u with u Dyck.
BinaryWord theta_dyck(const BinaryWord& w);

/// Coheights with m the largest index of maximal height.
std::vector<Int> coheights(const BinaryWord& w);

/// Smallest k with theta^k(w) = (ab)^p, by iteration.
Int prerank_by_theta(const BinaryWord& w);
/// Sum of coheights.
Int prerank_by_coheights(const BinaryWord& w);
/// Both routes; throws std::logic_error if they disagree.
Int prerank(const BinaryWord& w);

/// Pairs i < j with eta_i == eta_j or eta_j == eta_i - 1.
Int dinv(const BinaryWord& w);

/// Labels n*y - (n-1)*x of the start points of the north steps (a letters)
/// when w in D_n is drawn from the origin with a = north, b = east.
std::vector<Int> contacts(const BinaryWord& w);
/// Pairs of contacts at distance at most n - 1.
Int cdinv(const BinaryWord& w);

/// Phi on D_n: w = uv with u ending at the m-th a (m the largest index of
/// maximal height), mapped to reversed(u) reversed(v).
BinaryWord phi_involution(const BinaryWord& w);
/// Phi on Dyck words through w -> wb.
BinaryWord phi_dyck(const BinaryWord& w);

/// Haglund's zeta on Dyck words.
BinaryWord zeta_haglund(const BinaryWord& w);

/// Reverse-complement.
BinaryWord r_map(const BinaryWord& w);

} // namespace sandrank
