#include "sandrank/complete_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "sandrank/dyck.hpp"

namespace sandrank {

namespace {

void count(OpCounter* ops, Int k = 1) {
    if (ops) ops->add(k);
}

const BinaryWord& ab() {
    static const BinaryWord w = BinaryWord::parse("ab");
    return w;
}

} // namespace

void require_complete(const MultiGraph& g) {
    if (!g.is_complete()) throw std::invalid_argument("operation requires the complete graph K_n");
}

bool is_equiv_zero_kn(const Configuration& f) {
    if (f.empty()) throw std::invalid_argument("configuration on K_n needs n >= 1 entries");
    if (degree(f) != 0) return false;
    const Int n = static_cast<Int>(f.size());
    for (std::size_t i = 1; i < f.size(); ++i)
        if (floor_mod(checked_sub(f[i], f[0]), n) != 0) return false;
    return true;
}

bool is_equiv_zero_kn(const MultiGraph& g, const Configuration& f) {
    require_complete(g);
    require_size(g, f);
    return is_equiv_zero_kn(f);
}

bool is_equiv_kn(const Configuration& f, const Configuration& h) { return is_equiv_zero_kn(f - h); }

bool is_equiv_kn(const MultiGraph& g, const Configuration& f, const Configuration& h) {
    require_size(g, h);
    return is_equiv_zero_kn(g, f - h);
}

Configuration compact_normalize(const Configuration& f, OpCounter* ops) {
    if (f.empty()) throw std::invalid_argument("configuration on K_n needs n >= 1 entries");
    const std::size_t n = f.size();
    Configuration out(n);
    Int sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] = floor_mod(checked_sub(f[i], f[0]), static_cast<Int>(n));
        sum += out[i];
    }
    out[n - 1] = checked_sub(degree(f), sum);
    count(ops, 3 * static_cast<Int>(n));
    return out;
}

BinaryWord phi1(const Configuration& f) {
    if (f.empty()) throw std::invalid_argument("phi1 needs a nonempty configuration");
    const std::size_t n = f.size();
    std::vector<bool> letters;
    letters.reserve(2 * n - 1);
    Int bs = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (f[i] < 0 || f[i] > static_cast<Int>(n) || (i > 0 && f[i] < f[i - 1]))
            throw std::invalid_argument("phi1 needs 0 <= f_1 <= ... <= f_{n-1} <= n, got " + f.to_string());
        for (; bs < f[i]; ++bs) letters.push_back(false);
        letters.push_back(true);
    }
    for (; bs < static_cast<Int>(n); ++bs) letters.push_back(false);
    return BinaryWord(std::move(letters));
}

std::vector<Int> b_counts_before_a(const BinaryWord& w) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(w.count_a()));
    Int bs = 0;
    for (bool a : w.letters()) {
        if (a) out.push_back(bs);
        else ++bs;
    }
    return out;
}

Configuration SortedParking::to_configuration() const {
    std::vector<Int> v = b_counts_before_a(word);
    v.push_back(sink);
    return Configuration(std::move(v));
}

SortedParking SortedParking::from_configuration(const Configuration& f) {
    BinaryWord w = phi1(f);
    if (!is_Dn(w)) throw std::invalid_argument("not a sorted parking configuration: " + f.to_string());
    return {std::move(w), f.sink()};
}

Configuration compact_normalize(const MultiGraph& g, const Configuration& f) {
    require_complete(g);
    require_size(g, f);
    return compact_normalize(f);
}

KnParking parking_via_cyclic_lemma(const Configuration& f, OpCounter* ops) {
    const Int n = static_cast<Int>(f.size());
    if (n == 0) throw std::invalid_argument("configuration on K_n needs n >= 1 entries");
    if (n == 1) return {{BinaryWord::parse("b"), f[0]}, f};

    const Configuration c = compact_normalize(f, ops);

    // Counting sort of the residues, emitted directly as the word phi1.
    std::vector<Int> tally(static_cast<std::size_t>(n), 0);
    for (Int i = 0; i + 1 < n; ++i) ++tally[static_cast<std::size_t>(c[i])];
    std::vector<bool> letters;
    letters.reserve(static_cast<std::size_t>(2 * n - 1));
    for (Int v = 0; v < n; ++v) {
        letters.insert(letters.end(), static_cast<std::size_t>(tally[v]), true);
        letters.push_back(false);
    }
    count(ops, 3 * n);
    const BinaryWord w(std::move(letters));
    count(ops, 2 * n);

    // Cyclic lemma: u is the shortest prefix of minimal delta.
    std::size_t cut = 0;
    for (std::size_t k = 1; k <= w.size(); ++k)
        if (w.delta_prefix(k) < w.delta_prefix(cut)) cut = k;
    count(ops, 2 * n);
    const Int q = (static_cast<Int>(cut) - w.delta_prefix(cut)) / 2; // |u|_b
    const Int p = static_cast<Int>(cut) - q;                         // |u|_a
    count(ops, 3);

    KnParking out;
    out.sorted.word = w.rotated(cut);
    out.sorted.sink = checked_sub(checked_add(c.sink(), checked_mul(n, q - p)), q);
    count(ops, 2 * n + 4);

    out.representative = Configuration(static_cast<std::size_t>(n));
    for (Int i = 0; i + 1 < n; ++i) out.representative[i] = c[i] >= q ? c[i] - q : c[i] + n - q;
    out.representative[n - 1] = out.sorted.sink;
    count(ops, 2 * n);
    return out;
}

KnParking parking_via_cyclic_lemma(const MultiGraph& g, const Configuration& f) {
    require_complete(g);
    require_size(g, f);
    return parking_via_cyclic_lemma(f);
}

SortedParking theta_step(const SortedParking& p, OpCounter* ops) {
    const BinaryWord& w = p.word;
    require_Dn(w);
    if (w.count_a() == 0) throw std::invalid_argument("theta step needs n >= 2");
    std::size_t k = 1;
    while (w.delta_prefix(k) != 0) ++k;
    const BinaryWord u = w.substr(1, k - 2);
    const BinaryWord v = w.substr(k, w.size() - 1 - k);
    count(ops, 2 * static_cast<Int>(w.size()));
    return {(v + ab() + u).with_letter(false), checked_sub(p.sink, 1 + u.count_a())};
}

Configuration rank_step_zero_coordinate(const Configuration& f) {
    return theta_step(SortedParking::from_configuration(f)).to_configuration();
}

bool is_staircase(const BinaryWord& w) {
    if (w.size() % 2 == 0) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w.is_a(i) != (i % 2 == 0)) return false;
    return !w.is_a(w.size() - 1);
}

Int rank_greedy(const MultiGraph& g, const Configuration& f) {
    require_complete(g);
    require_size(g, f);
    return rank_greedy(f);
}

Int rank_greedy(const Configuration& f, OpCounter* ops) {
    SortedParking p = parking_via_cyclic_lemma(f, ops).sorted;
    for (Int steps = 0;; ++steps) {
        count(ops, 2);
        if (p.sink < 0) return steps - 1;
        if (is_staircase(p.word)) return steps + p.sink;
        p = theta_step(p, ops);
    }
}

FormulaBreakdown rank_formula_breakdown(const SortedParking& p, OpCounter* ops) {
    require_Dn(p.word);
    FormulaBreakdown out;
    const Int n = static_cast<Int>(p.n());
    if (n == 1) {
        out.rank = p.sink >= 0 ? p.sink : -1;
        out.sum = out.rank + 1;
        return out;
    }
    out.q = floor_div(checked_add(p.sink, 1), n - 1);
    out.r = floor_mod(checked_add(p.sink, 1), n - 1);
    out.eta = heights(p.word);
    out.terms.resize(out.eta.size());
    for (std::size_t i = 0; i < out.eta.size(); ++i) {
        out.terms[i] = out.q - out.eta[i] + (static_cast<Int>(i) + 1 <= out.r ? 1 : 0);
        out.sum = checked_add(out.sum, std::max<Int>(0, out.terms[i]));
    }
    count(ops, 5 * n + 4);
    out.rank = out.sum - 1;
    return out;
}

Int rank_formula(const Configuration& f, OpCounter* ops) {
    return rank_formula_breakdown(parking_via_cyclic_lemma(f, ops).sorted, ops).rank;
}

Int rank_formula(const MultiGraph& g, const Configuration& f) {
    require_complete(g);
    require_size(g, f);
    return rank_formula(f);
}

SortedParking theta_iterate(const BinaryWord& w, Int s, Int k) {
    if (k < 0) throw std::invalid_argument("theta iteration count must be nonnegative");
    SortedParking p{w, s};
    require_Dn(w);
    for (Int i = 0; i < k; ++i) p = theta_step(p);
    return p;
}

Int primitive_factor_count(const BinaryWord& w) {
    require_Dn(w);
    Int c = 0;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w.delta_prefix(k) == 0) ++c;
    return c;
}

Int rank_by_theta_iteration(const BinaryWord& w, Int s) {
    require_Dn(w);
    if (w.count_a() == 0) return s >= 0 ? s : -1;
    SortedParking p{w, s};
    Int k = 0;
    while (p.sink >= 0) {
        p = theta_step(p);
        ++k;
    }
    return k - 1;
}

bool is_compact_sorted(const Configuration& f) {
    if (f.size() < 2) return !f.empty();
    const std::size_t last = f.size() - 2;
    for (std::size_t i = 1; i <= last; ++i)
        if (f[i] < f[i - 1]) return false;
    return f[last] - f[0] <= static_cast<Int>(f.size());
}

Configuration t_operator(const Configuration& f, bool inverse) {
    if (f.size() < 2) throw std::invalid_argument("T operator needs n >= 2");
    if (!is_compact_sorted(f)) throw std::invalid_argument("T operator needs a compact sorted configuration: " + f.to_string());
    const std::size_t n = f.size();
    const Int nn = static_cast<Int>(n);
    Configuration g(n);
    if (!inverse) {
        g[0] = f[n - 2] - (nn - 1);
        for (std::size_t i = 1; i + 1 < n; ++i) g[i] = f[i - 1] + 1;
        g[n - 1] = f[n - 1] + 1;
    } else {
        for (std::size_t i = 0; i + 2 < n; ++i) g[i] = f[i + 1] - 1;
        g[n - 2] = f[0] + (nn - 1);
        g[n - 1] = f[n - 1] - 1;
    }
    return g;
}

Configuration sort_non_sink(Configuration f) {
    if (f.size() < 2) return f;
    std::vector<Int> v(f.begin(), f.end() - 1);
    std::sort(v.begin(), v.end());
    v.push_back(f.sink());
    return Configuration(std::move(v));
}

} // namespace sandrank
