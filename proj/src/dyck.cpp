#include "sandrank/dyck.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sandrank {

std::vector<Int> heights(const BinaryWord& w) {
    std::vector<Int> eta(static_cast<std::size_t>(w.count_a()));
    for (std::size_t i = 0; i < eta.size(); ++i) eta[i] = w.delta_prefix(w.position_of_a(i));
    return eta;
}

CyclicFactorization cyclic_factorization(const BinaryWord& w) {
    if (!is_An(w)) throw std::invalid_argument("cyclic factorization needs |w|_b = |w|_a + 1, got " + w.str());
    std::size_t best = 0;
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (w.delta_prefix(k) < w.delta_prefix(best)) best = k;
    return {w.substr(0, best), w.substr(best, w.size() - best)};
}

BinaryWord Dn_conjugate(const BinaryWord& w) {
    auto [u, v] = cyclic_factorization(w);
    return v + u;
}

BinaryWord random_An_word(std::size_t n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    std::vector<bool> letters(2 * n - 1, false);
    std::fill(letters.begin(), letters.begin() + (n - 1), true);
    std::shuffle(letters.begin(), letters.end(), rng);
    return BinaryWord(std::move(letters));
}

BinaryWord random_Dn_word(std::size_t n, std::mt19937_64& rng) { return Dn_conjugate(random_An_word(n, rng)); }

Int area(const BinaryWord& w) {
    Int s = 0;
    for (Int h : heights(w)) s += h;
    return s;
}

BinaryWord theta_dyck(const BinaryWord& w) {
    require_dyck(w);
    if (w.empty()) return w;
    std::size_t k = 1;
    while (w.delta_prefix(k) != 0) ++k;
    const BinaryWord u = w.substr(1, k - 2);
    const BinaryWord v = w.substr(k, w.size() - k);
    return v + BinaryWord::parse("ab") + u;
}

namespace {

// Largest index of the maximal height (0-based); requires a nonempty sequence.
std::size_t last_max_index(const std::vector<Int>& eta) {
    std::size_t m = eta.size() - 1;
    for (std::size_t i = eta.size(); i-- > 0;)
        if (eta[i] > eta[m]) m = i;
    return m;
}

} // namespace

std::vector<Int> coheights(const BinaryWord& w) {
    const std::vector<Int> eta = heights(w);
    if (eta.empty()) return {};
    const std::size_t m = last_max_index(eta);
    std::vector<Int> co(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) co[i] = eta[m] - eta[i] - (i > m ? 1 : 0);
    return co;
}

Int prerank_by_theta(const BinaryWord& w) {
    require_dyck(w);
    const BinaryWord target = alternating_word(w.size() / 2);
    BinaryWord cur = w;
    Int k = 0;
    while (!(cur == target)) {
        cur = theta_dyck(cur);
        ++k;
    }
    return k;
}

Int prerank_by_coheights(const BinaryWord& w) {
    require_dyck(w);
    Int s = 0;
    for (Int c : coheights(w)) s += c;
    return s;
}

Int prerank(const BinaryWord& w) {
    const Int a = prerank_by_theta(w);
    const Int b = prerank_by_coheights(w);
    if (a != b) throw std::logic_error("prerank routes disagree on " + w.str());
    return a;
}

Int dinv(const BinaryWord& w) {
    const std::vector<Int> eta = heights(w);
    Int count = 0;
    for (std::size_t i = 0; i < eta.size(); ++i)
        for (std::size_t j = i + 1; j < eta.size(); ++j)
            if (eta[i] == eta[j] || eta[j] == eta[i] - 1) ++count;
    return count;
}

std::vector<Int> contacts(const BinaryWord& w) {
    require_Dn(w);
    const Int n = w.count_a() + 1;
    std::vector<Int> c;
    Int label = 0;
    for (bool a : w.letters()) {
        if (a) {
            c.push_back(label);
            label += n;
        } else {
            label -= n - 1;
        }
    }
    return c;
}

Int cdinv(const BinaryWord& w) {
    const std::vector<Int> c = contacts(w);
    const Int n = w.count_a() + 1;
    Int count = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (std::abs(c[i] - c[j]) <= n - 1) ++count;
    return count;
}

BinaryWord phi_involution(const BinaryWord& w) {
    require_Dn(w);
    if (w.count_a() == 0) return w;
    const std::size_t m = last_max_index(heights(w));
    const std::size_t cut = w.position_of_a(m) + 1;
    return w.substr(0, cut).reversed() + w.substr(cut, w.size() - cut).reversed();
}

BinaryWord phi_dyck(const BinaryWord& w) { return Dn_to_dyck(phi_involution(dyck_to_Dn(w))); }

BinaryWord zeta_haglund(const BinaryWord& w) {
    require_dyck(w);
    const std::vector<Int> eta = heights(w);
    if (eta.empty()) return w;
    const Int top = *std::max_element(eta.begin(), eta.end());
    // Bucket i collects values i (as a) and i-1 (as b) in their original order.
    std::vector<std::vector<bool>> bucket(static_cast<std::size_t>(top + 2));
    for (Int h : eta) {
        bucket[static_cast<std::size_t>(h)].push_back(true);
        bucket[static_cast<std::size_t>(h + 1)].push_back(false);
    }
    std::vector<bool> out;
    for (const auto& b : bucket) out.insert(out.end(), b.begin(), b.end());
    return BinaryWord(std::move(out));
}

BinaryWord r_map(const BinaryWord& w) {
    std::vector<bool> out(w.letters().rbegin(), w.letters().rend());
    out.flip();
    return BinaryWord(std::move(out));
}

} // namespace sandrank
