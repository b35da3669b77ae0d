#include "sandrank/rank.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sandrank/sandpile.hpp"

namespace sandrank {

std::size_t EffectivenessCache::Hash::operator()(const Configuration& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Int v : f) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
}

bool EffectivenessCache::test(const MultiGraph& g, const Configuration& f) {
    {
        std::lock_guard lock(mutex_);
        if (graph_.empty()) graph_ = g.matrix();
        else if (graph_ != g.matrix()) throw std::invalid_argument("effectiveness cache reused on a different graph");
        if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    }
    const bool value = is_effective_class(g, f);
    std::lock_guard lock(mutex_);
    memo_.emplace(f, value);
    return value;
}

std::size_t EffectivenessCache::size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

void EffectivenessCache::clear() {
    std::lock_guard lock(mutex_);
    memo_.clear();
    graph_.clear();
}

namespace {

bool effective_class(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache) {
    if (is_effective(f)) return true;
    if (degree(f) < 0) return false;
    return cache ? cache->test(g, f) : is_effective_class(g, f);
}

// C(top, k) saturating at `cap`.
Int binomial_capped(Int top, Int k, Int cap) {
    if (k < 0 || top < k) return 0;
    k = std::min(k, top - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (top - k + i) / i stays integral at every step.
        Int num;
        if (__builtin_mul_overflow(r, top - k + i, &num)) return cap;
        r = num / i;
        if (r >= cap) return cap;
    }
    return r;
}

// Visits effective configurations of the given degree in lexicographic order;
// stops as soon as `visit` returns false. Returns false iff stopped early.
bool for_each_effective(std::size_t n, Int d, const std::function<bool(const Configuration&)>& visit) {
    Configuration lambda(n);
    std::function<bool(std::size_t, Int)> rec = [&](std::size_t pos, Int left) {
        if (pos + 1 == n) {
            lambda[pos] = left;
            return visit(lambda);
        }
        for (Int v = 0; v <= left; ++v) {
            lambda[pos] = v;
            if (!rec(pos + 1, left - v)) return false;
        }
        lambda[pos] = 0;
        return true;
    };
    return rec(0, d);
}

} // namespace

RankResult rank_bruteforce(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache, Int search_bound) {
    require_size(g, f);
    const std::size_t n = f.size();
    const Int deg = degree(f);
    if (!effective_class(g, f, cache)) return {-1, Configuration(n)};

    const Int ceiling = std::max(deg - g.edge_count() + g.vertex_count(), deg) + 1;
    // Candidates of degree <= ceiling: C(ceiling + n, n).
    const Int worst = binomial_capped(ceiling + static_cast<Int>(n), static_cast<Int>(n), search_bound + 1);
    if (worst > search_bound)
        throw std::invalid_argument("rank search space exceeds bound " + std::to_string(search_bound));

    for (Int d = 1; d <= ceiling; ++d) {
        Configuration witness;
        const bool all_pass = for_each_effective(n, d, [&](const Configuration& lambda) {
            if (effective_class(g, f - lambda, cache)) return true;
            witness = lambda;
            return false;
        });
        if (!all_pass) return {d - 1, witness};
    }
    throw std::logic_error("rank search exhausted its ceiling");
}

Configuration kappa(const MultiGraph& g) {
    Configuration k(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) k[i] = g.vertex_degree(i) - 2;
    return k;
}

bool riemann_roch_check(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache) {
    const Int lhs = rank_bruteforce(g, f, cache).rank - rank_bruteforce(g, kappa(g) - f, cache).rank;
    return lhs == degree(f) + g.vertex_count() - g.edge_count();
}

bool rank_bounds_check(const MultiGraph& g, const Configuration& f, EffectivenessCache* cache) {
    const Int r = rank_bruteforce(g, f, cache).rank;
    const Int deg = degree(f);
    const Int m = g.edge_count();
    const Int n = g.vertex_count();
    if (deg > 2 * m - 2 * n && r != deg - m + n - 1) return false;
    for (int i = 0; i < g.vertex_count(); ++i) {
        const Int up = rank_bruteforce(g, f + Configuration::unit(f.size(), i), cache).rank;
        if (up < r || up > r + 1) return false;
    }
    return true;
}

} // namespace sandrank
