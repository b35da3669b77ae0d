#include "sandrank/sandpile.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace sandrank {

namespace {

void require_sandpile(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    if (!is_sandpile(g, f)) throw std::invalid_argument("not a sandpile configuration: negative non-sink entry");
}

void require_stable(const MultiGraph& g, const Configuration& f) {
    if (!is_stable(g, f)) throw std::invalid_argument("configuration is not stable");
}

constexpr int kMaxSubsetVertices = 24;

// Topples every non-sink vertex holding at least its degree, leaving other
// entries alone (they may be negative). Lowest index first.
void relax(const MultiGraph& g, Configuration& f, std::vector<Int>* odometer) {
    const int sink = g.sink();
    std::set<int> pending;
    for (int i = 0; i < sink; ++i)
        if (f[i] >= g.vertex_degree(i)) pending.insert(i);
    while (!pending.empty()) {
        int i = *pending.begin();
        pending.erase(pending.begin());
        const Int times = f[i] / g.vertex_degree(i);
        if (times == 0) continue;
        topple_in_place(g, f, i, times);
        if (odometer) (*odometer)[i] = checked_add((*odometer)[i], times);
        for (int j : g.neighbors(i))
            if (j != sink && f[j] >= g.vertex_degree(j)) pending.insert(j);
    }
}

void fire_set(const MultiGraph& g, Configuration& f, const std::vector<int>& set, Int times) {
    for (int v : set) topple_in_place(g, f, v, times);
}

} // namespace

bool is_sandpile(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    for (int i = 0; i < g.sink(); ++i)
        if (f[i] < 0) return false;
    return true;
}

bool is_stable(const MultiGraph& g, const Configuration& f) {
    require_sandpile(g, f);
    for (int i = 0; i < g.sink(); ++i)
        if (f[i] >= g.vertex_degree(i)) return false;
    return true;
}

Stabilization stabilize(const MultiGraph& g, const Configuration& f) {
    require_sandpile(g, f);
    Stabilization out{f, std::vector<Int>(g.vertex_count(), 0)};
    relax(g, out.config, &out.odometer);
    return out;
}

Stabilization stabilize_shuffled(const MultiGraph& g, const Configuration& f, std::uint64_t seed) {
    require_sandpile(g, f);
    std::mt19937_64 rng(seed);
    Stabilization out{f, std::vector<Int>(g.vertex_count(), 0)};
    std::vector<int> unstable;
    for (;;) {
        unstable.clear();
        for (int i = 0; i < g.sink(); ++i)
            if (out.config[i] >= g.vertex_degree(i)) unstable.push_back(i);
        if (unstable.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, unstable.size() - 1);
        const int i = unstable[pick(rng)];
        topple_in_place(g, out.config, i, 1);
        ++out.odometer[i];
    }
    return out;
}

bool is_recurrent_burning(const MultiGraph& g, const Configuration& f) {
    require_stable(g, f);
    Configuration start = f - laplacian_row(g, g.sink());
    const Stabilization s = stabilize(g, start);
    if (s.config != f) return false;
    for (int i = 0; i < g.sink(); ++i)
        if (s.odometer[i] != 1) return false;
    return true;
}

bool is_recurrent_subsets(const MultiGraph& g, const Configuration& f) {
    require_stable(g, f);
    const int k = g.sink();
    if (k > kMaxSubsetVertices) throw std::invalid_argument("subset search limited to 24 non-sink vertices");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        bool witness = false;
        for (int v = 0; v < k && !witness; ++v) {
            if (!(mask >> v & 1u)) continue;
            Int inside = 0;
            for (int u = 0; u < k; ++u)
                if (mask >> u & 1u) inside += g.multiplicity(u, v);
            witness = f[v] >= inside;
        }
        if (!witness) return false;
    }
    return true;
}

std::vector<int> dhar_unburnt(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    const int n = g.vertex_count();
    std::vector<char> burnt(n, 0);
    std::vector<Int> to_burnt(n, 0);
    burnt[g.sink()] = 1;
    for (int j : g.neighbors(g.sink())) to_burnt[j] += g.multiplicity(g.sink(), j);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.sink(); ++v) {
            if (burnt[v] || f[v] >= to_burnt[v]) continue;
            burnt[v] = 1;
            changed = true;
            for (int j : g.neighbors(v)) to_burnt[j] += g.multiplicity(v, j);
            break; // restart from the lowest index
        }
    }
    std::vector<int> rest;
    for (int v = 0; v < g.sink(); ++v)
        if (!burnt[v]) rest.push_back(v);
    return rest;
}

Configuration beta(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    return max_stable(g) - f;
}

bool is_parking(const MultiGraph& g, const Configuration& f) {
    require_sandpile(g, f);
    if (!is_stable(g, f)) return false;
    return is_recurrent_burning(g, beta(g, f));
}

bool is_parking_subsets(const MultiGraph& g, const Configuration& f) {
    require_sandpile(g, f);
    const int k = g.sink();
    if (k > kMaxSubsetVertices) throw std::invalid_argument("subset search limited to 24 non-sink vertices");
    const int n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        bool witness = false;
        for (int v = 0; v < k && !witness; ++v) {
            if (!(mask >> v & 1u)) continue;
            Int outside = 0;
            for (int u = 0; u < n; ++u)
                if (u == k || !(mask >> u & 1u)) outside += g.multiplicity(u, v);
            witness = f[v] < outside;
        }
        if (!witness) return false;
    }
    return true;
}

Configuration parking_representative(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    const int sink = g.sink();
    Configuration h = f;

    // Phase 1: fire the sink until no non-sink entry is negative. Relaxing
    // between rounds pushes the injected tokens towards the deficits; the final
    // relax leaves a stable configuration regardless of how much was injected.
    relax(g, h, nullptr);
    for (;;) {
        Int deficit = 0;
        for (int i = 0; i < sink; ++i) deficit = std::max(deficit, -h[i]);
        if (deficit == 0) break;
        topple_in_place(g, h, sink, deficit);
        relax(g, h, nullptr);
    }

    // Phase 2: fire the Dhar-unburnt set as many times as stays legal.
    for (;;) {
        const std::vector<int> set = dhar_unburnt(g, h);
        if (set.empty()) break;
        std::vector<char> in(g.vertex_count(), 0);
        for (int v : set) in[v] = 1;
        Int times = -1;
        for (int v : set) {
            Int out = 0;
            for (int j : g.neighbors(v))
                if (!in[j]) out += g.multiplicity(v, j);
            if (out > 0) times = (times < 0) ? h[v] / out : std::min(times, h[v] / out);
        }
        if (times < 1) throw std::logic_error("Dhar search returned an illegal firing set");
        fire_set(g, h, set, times);
    }

    if (!is_parking(g, h)) throw std::logic_error("parking reduction produced a non-parking configuration");
    return h;
}

Configuration recurrent_representative(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    return beta(g, parking_representative(g, beta(g, f)));
}

Orientation Orientation::from_order(const MultiGraph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order must list every vertex once");
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        require_vertex(g, order[k]);
        if (pos[order[k]] >= 0) throw std::invalid_argument("order must list every vertex once");
        pos[order[k]] = k;
    }
    std::vector<std::vector<signed char>> dir(n, std::vector<signed char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i)) dir[i][j] = pos[i] < pos[j] ? 1 : -1;
    return Orientation(g, std::move(dir));
}

Orientation::Orientation(MultiGraph g, std::vector<std::vector<signed char>> direction)
    : graph_(std::move(g)), dir_(std::move(direction)) {
    const int n = graph_.vertex_count();
    if (static_cast<int>(dir_.size()) != n) throw std::invalid_argument("direction matrix has wrong size");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(dir_[i].size()) != n) throw std::invalid_argument("direction matrix has wrong size");
        for (int j = 0; j < n; ++j) {
            const bool has_edge = graph_.multiplicity(i, j) > 0;
            if (has_edge != (dir_[i][j] != 0)) throw std::invalid_argument("direction missing or set on a non-edge");
            if (dir_[i][j] != -dir_[j][i]) throw std::invalid_argument("direction matrix is not antisymmetric");
        }
    }
}

Int Orientation::edges_from(int i, int j) const {
    require_vertex(graph_, i);
    require_vertex(graph_, j);
    return dir_[i][j] == 1 ? graph_.multiplicity(i, j) : 0;
}

Int Orientation::indegree(int i) const {
    Int d = 0;
    for (int j : graph_.neighbors(i)) d += edges_from(j, i);
    return d;
}

bool Orientation::is_acyclic() const {
    const int n = graph_.vertex_count();
    std::vector<int> in(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : graph_.neighbors(i))
            if (dir_[j][i] == 1) ++in[i];
    std::vector<int> ready;
    for (int i = 0; i < n; ++i)
        if (in[i] == 0) ready.push_back(i);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int j : graph_.neighbors(v))
            if (dir_[v][j] == 1 && --in[j] == 0) ready.push_back(j);
    }
    return seen == n;
}

Orientation Orientation::reversed() const {
    auto dir = dir_;
    for (auto& row : dir)
        for (auto& d : row) d = static_cast<signed char>(-d);
    return Orientation(graph_, std::move(dir));
}

Orientation acyclic_orientation_from_parking(const MultiGraph& g, const Configuration& f) {
    if (!is_parking(g, f)) throw std::invalid_argument("acyclic orientation requires a parking configuration");
    const int n = g.vertex_count();
    std::vector<int> order{g.sink()};
    std::vector<char> peeled(n, 0);
    peeled[g.sink()] = 1;
    std::vector<Int> to_peeled(n, 0);
    for (int j : g.neighbors(g.sink())) to_peeled[j] += g.multiplicity(g.sink(), j);
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int v = 0; v < g.sink(); ++v)
            if (!peeled[v] && f[v] < to_peeled[v]) {
                next = v;
                break;
            }
        if (next < 0) throw std::logic_error("peeling stalled on a parking configuration");
        peeled[next] = 1;
        order.push_back(next);
        for (int j : g.neighbors(next)) to_peeled[j] += g.multiplicity(next, j);
    }
    // Each vertex's edges to earlier-peeled vertices point into it, which is
    // exactly orientation by peeling order.
    return Orientation::from_order(g, order);
}

Configuration orientation_configuration(const Orientation& o) {
    const int n = o.graph().vertex_count();
    Configuration f(n);
    for (int i = 0; i < n; ++i) f[i] = o.indegree(i) - 1;
    return f;
}

bool is_effective_class(const MultiGraph& g, const Configuration& f) {
    require_size(g, f);
    if (degree(f) < 0) return false;
    return parking_representative(g, f).sink() >= 0;
}

EffectiveClassCounts effective_class_counts(const MultiGraph& g, Int d_max) {
    if (d_max < 0) throw std::invalid_argument("d_max must be nonnegative");
    const int k = g.sink();
    Int space = 1;
    for (int i = 0; i < k; ++i) {
        space = checked_mul(space, g.vertex_degree(i));
        if (space > kMaxStableEnumeration)
            throw std::invalid_argument("stable configuration space exceeds 10^7; refusing to enumerate");
    }
    const Int m = g.edge_count();
    const Int n = g.vertex_count();
    const Int top_level = m - n + 1;

    EffectiveClassCounts out;
    out.tutte_coefficients.assign(static_cast<std::size_t>(top_level + 1), 0);
    std::vector<Int> parking_by_sum; // index: sum of non-sink entries

    Configuration f(g.vertex_count());
    for (Int idx = 0; idx < space; ++idx) {
        Int rest = idx;
        Int sum = 0;
        for (int i = 0; i < k; ++i) {
            f[i] = rest % g.vertex_degree(i);
            rest /= g.vertex_degree(i);
            sum += f[i];
        }
        f[k] = 0;
        if (is_recurrent_burning(g, f)) {
            const Int level = sum - m + g.vertex_degree(k);
            if (level < 0 || level > top_level) throw std::logic_error("recurrent level outside [0, m-n+1]");
            ++out.tutte_coefficients[static_cast<std::size_t>(level)];
        }
        if (is_recurrent_burning(g, beta(g, f))) {
            if (static_cast<Int>(parking_by_sum.size()) <= sum) parking_by_sum.resize(static_cast<std::size_t>(sum + 1), 0);
            ++parking_by_sum[static_cast<std::size_t>(sum)];
        }
    }

    out.by_parking.assign(static_cast<std::size_t>(d_max + 1), 0);
    out.by_level.assign(static_cast<std::size_t>(d_max + 1), 0);
    for (Int d = 0; d <= d_max; ++d) {
        Int a = 0;
        for (Int j = 0; j <= d && j < static_cast<Int>(parking_by_sum.size()); ++j) a += parking_by_sum[j];
        out.by_parking[d] = a;
        Int b = 0;
        for (Int t = std::max<Int>(0, top_level - d); t <= top_level; ++t) b += out.tutte_coefficients[t];
        out.by_level[d] = b;
    }
    out.spanning_trees = spanning_tree_count(g);
    return out;
}

} // namespace sandrank
