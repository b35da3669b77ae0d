#include "sandrank/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "sandrank/complete_graph.hpp"
#include "sandrank/dyck.hpp"
#include "sandrank/genfun.hpp"
#include "sandrank/rank.hpp"
#include "sandrank/sandpile.hpp"
#include "sandrank/strip.hpp"

namespace sandrank {

namespace {

// Collects the first few mismatches of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ += (failures_ > 1 ? "; " : "") + what;
    }
    void note(const std::string& s) { extra_ += (extra_.empty() ? "" : "; ") + s; }
    bool ok() const { return failures_ == 0; }
    std::string detail() const {
        std::ostringstream out;
        out << checks_ << " checks";
        if (failures_) out << ", " << failures_ << " failed: " << notes_;
        if (!extra_.empty()) out << "; " << extra_;
        return out.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::string notes_;
    std::string extra_;
};

CriterionResult timed(int id, std::string name, const std::function<void(Check&)>& body, double limit_seconds) {
    CriterionResult r{id, std::move(name), false, "", 0};
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0) {
        std::ostringstream lim;
        lim << "time limit " << limit_seconds << " s";
        check.expect(r.seconds < limit_seconds, lim.str() + " exceeded");
    }
    r.pass = check.ok();
    r.detail = check.detail();
    return r;
}

std::string show(const Configuration& f) { return f.to_string(); }

template <class T>
std::string show_vec(const std::vector<T>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

// All configurations with non-sink entries 0 <= f_i < d_i and sink 0.
std::vector<Configuration> stable_configurations(const MultiGraph& g) {
    std::vector<Configuration> out;
    Configuration f(g.vertex_count());
    std::function<void(int)> rec = [&](int i) {
        if (i == g.sink()) {
            out.push_back(f);
            return;
        }
        for (Int v = 0; v < g.vertex_degree(i); ++v) {
            f[i] = v;
            rec(i + 1);
        }
        f[i] = 0;
    };
    rec(0);
    return out;
}

} // namespace

MultiGraph random_multigraph(int n, std::mt19937_64& rng, int extra_edges, int max_mult) {
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> mult(1, max_mult);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v, mult(rng)});
    }
    std::uniform_int_distribution<int> vertex(0, n - 1);
    for (int k = 0; k < extra_edges; ++k) {
        int u = vertex(rng);
        int v = vertex(rng);
        if (u != v) edges.push_back({u, v, mult(rng)});
    }
    return MultiGraph::from_edges(n, edges);
}

Configuration random_configuration(std::size_t n, Int lo, Int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> d(lo, hi);
    Configuration f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = d(rng);
    return f;
}

Configuration random_parking_kn(std::size_t n, Int sink, std::mt19937_64& rng) {
    std::vector<Int> v = b_counts_before_a(random_Dn_word(n, rng));
    std::shuffle(v.begin(), v.end(), rng);
    v.push_back(sink);
    return Configuration(std::move(v));
}

CriterionResult criterion_kn_example() {
    return timed(1, "K5 worked example", [](Check& c) {
        const MultiGraph k5 = MultiGraph::complete(5);
        const Configuration f{3, 1, 3, 4, -1};
        const Int formula = rank_formula(k5, f);
        const Int greedy = rank_greedy(k5, f);
        const Int brute = rank_bruteforce(k5, f).rank;
        c.expect(formula == 4, "formula rank " + std::to_string(formula));
        c.expect(greedy == 4, "greedy rank " + std::to_string(greedy));
        c.expect(brute == 4, "brute-force rank " + std::to_string(brute));
        const Configuration expected{0, 3, 0, 1, 6};
        const Configuration general = parking_representative(k5, f);
        const Configuration fast = parking_via_cyclic_lemma(k5, f).representative;
        c.expect(general == expected, "parking representative " + show(general));
        c.expect(fast == expected, "cyclic-lemma parking " + show(fast));
    }, 1.0);
}

CriterionResult criterion_formula_table() {
    return timed(2, "closed-formula table (n=11)", [](Check& c) {
        const Configuration f{0, 0, 0, 1, 1, 1, 4, 7, 7, 9, 26};
        const FormulaBreakdown b = rank_formula_breakdown(SortedParking::from_configuration(f));
        c.expect(b.q == 2 && b.r == 7, "q,r = " + std::to_string(b.q) + "," + std::to_string(b.r));
        const std::vector<Int> terms{3, 2, 1, 1, 0, -1, 1, 2, 1, 2};
        c.expect(b.terms == terms, "terms " + show_vec(b.terms));
        c.expect(b.eta == std::vector<Int>{0, 1, 2, 2, 3, 4, 2, 0, 1, 0}, "heights " + show_vec(b.eta));
        c.expect(b.sum == 13, "sum " + std::to_string(b.sum));
        c.expect(b.rank == 12, "rank " + std::to_string(b.rank));
        c.expect(rank_formula(f) == 12, "rank_formula on the configuration");
    }, 0);
}

CriterionResult criterion_strip_statistics() {
    return timed(3, "strip statistics", [](Check& c) {
        const BinaryWord w = phi1(Configuration{0, 0, 0, 1, 1, 1, 4, 7, 7, 9, 26});
        c.expect(w.str() == "aaabaaabbbabbbaabbabb", "phi1 word " + w.str());
        const LeftRight lr = left_right(w, 13);
        c.expect(lr.left == 5 && lr.right == 6,
                 "left,right at 13 = " + std::to_string(lr.left) + "," + std::to_string(lr.right));
        c.expect(left_right(w, 26).left == 13, "left at 26");
        const BinaryWord v = BinaryWord::parse("aabaaabbabbabbb");
        c.expect(lastright(v) == 18, "lastright " + std::to_string(lastright(v)));
        c.expect(cdinv(v) == 7, "cdinv(w) " + std::to_string(cdinv(v)));
        c.expect(cdinv(phi_involution(v)) == 7, "cdinv(Phi(w)) " + std::to_string(cdinv(phi_involution(v))));
    }, 0);
}

CriterionResult criterion_dyck_statistics(std::uint64_t seed) {
    return timed(4, "Dyck statistics and involutions", [seed](Check& c) {
        for (std::size_t n = 1; n <= 8; ++n) {
            c.expect(prerank(alternating_word(n)) == 0, "prerank((ab)^" + std::to_string(n) + ")");
            c.expect(prerank(block_word(n, n)) == static_cast<Int>(n * (n - 1) / 2), "prerank(a^n b^n), n=" + std::to_string(n));
        }
        const BinaryWord small = BinaryWord::parse("abaabb");
        c.expect(prerank(small) == 2 && area(small) == 1, "abaabb prerank/area");
        const BinaryWord w = BinaryWord::parse("aabaabbabbaabaabbabb");
        c.expect(zeta_haglund(w).str() == "aabaaabaaabbabbbabbb", "zeta(w) = " + zeta_haglund(w).str());
        c.expect(phi_dyck(w).str() == "aabaabbabbaabaabbbab", "Phi(w) = " + phi_dyck(w).str());
        c.expect(zeta_haglund(phi_dyck(w)).str() == "aaabaaabaabbbabbbabb", "zeta(Phi(w))");
        c.expect(r_map(zeta_haglund(w)) == zeta_haglund(phi_dyck(w)), "R(zeta(w)) on the example");

        auto identities = [&c](const BinaryWord& d) {
            const BinaryWord p = phi_dyck(d);
            c.expect(r_map(zeta_haglund(d)) == zeta_haglund(p), "R zeta = zeta Phi at " + d.str());
            c.expect(prerank(d) == area(p), "prerank = area Phi at " + d.str());
            c.expect(dinv(d) == dinv(p), "dinv = dinv Phi at " + d.str());
            c.expect(phi_dyck(p) == d, "Phi Phi = id at " + d.str());
        };
        const auto d6 = all_Dn_words(6);
        c.expect(d6.size() == 42, "|D_6| = " + std::to_string(d6.size()));
        for (const BinaryWord& x : d6) identities(Dn_to_dyck(x));
        std::mt19937_64 rng(seed);
        for (int k = 0; k < 500; ++k) identities(Dn_to_dyck(random_Dn_word(10, rng)));
    }, 10.0);
}

CriterionResult criterion_riemann_roch(std::uint64_t seed) {
    return timed(5, "Riemann-Roch on random configurations", [seed](Check& c) {
        std::mt19937_64 rng(seed);
        std::vector<std::pair<std::string, MultiGraph>> graphs{
            {"K3", MultiGraph::complete(3)}, {"K4", MultiGraph::complete(4)}, {"W5", MultiGraph::wheel(5)}};
        graphs.emplace_back("M5a", random_multigraph(5, rng));
        graphs.emplace_back("M5b", random_multigraph(5, rng));

        struct Job {
            std::size_t graph;
            std::string name;
            Configuration f;
        };
        std::vector<Job> jobs;
        for (std::size_t gi = 0; gi < graphs.size(); ++gi)
            for (int k = 0; k < 500; ++k)
                jobs.push_back({gi, graphs[gi].first, random_configuration(graphs[gi].second.vertex_count(), -3, 3, rng)});

        std::vector<signed char> verdict(jobs.size(), 0);
        std::vector<std::string> errors(jobs.size());
        const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                std::vector<EffectivenessCache> caches(graphs.size());
                for (std::size_t i = t; i < jobs.size(); i += workers) {
                    const std::size_t gi = jobs[i].graph;
                    try {
                        verdict[i] = riemann_roch_check(graphs[gi].second, jobs[i].f, &caches[gi]) ? 1 : 0;
                    } catch (const std::exception& e) {
                        errors[i] = e.what();
                    }
                }
            });
        for (auto& th : pool) th.join();
        for (std::size_t i = 0; i < jobs.size(); ++i)
            c.expect(verdict[i] == 1, jobs[i].name + " " + show(jobs[i].f) + (errors[i].empty() ? "" : ": " + errors[i]));
    }, 120.0);
}

CriterionResult criterion_oracle_equivalence() {
    return timed(6, "formula = greedy = brute force on K4, K5", [](Check& c) {
        for (int n : {4, 5}) {
            const MultiGraph g = MultiGraph::complete(n);
            const Int m = g.edge_count();
            EffectivenessCache cache;
            for (const BinaryWord& w : all_Dn_words(static_cast<std::size_t>(n)))
                for (Int s = -3; s <= 2 * m - 2 * n + 3; ++s) {
                    const Configuration f = SortedParking{w, s}.to_configuration();
                    const Int a = rank_formula(g, f);
                    const Int b = rank_greedy(g, f);
                    const Int r = rank_bruteforce(g, f, &cache).rank;
                    c.expect(a == b && b == r, "K" + std::to_string(n) + " " + show(f) + ": " + std::to_string(a) + "/" +
                                                   std::to_string(b) + "/" + std::to_string(r));
                }
        }
    }, 0);
}

CriterionResult criterion_wheel() {
    return timed(7, "wheel W5 ranks", [](Check& c) {
        const MultiGraph w5 = MultiGraph::wheel(5);
        const Int a = rank_bruteforce(w5, Configuration{0, 1, 0, 1, 0, 1}).rank;
        const Int b = rank_bruteforce(w5, Configuration{0, 1, -1, 1, 0, 1}).rank;
        c.expect(a == 0, "rank(0,1,0,1,0,1) = " + std::to_string(a));
        c.expect(b == 0, "rank(0,1,-1,1,0,1) = " + std::to_string(b));
    }, 0);
}

CriterionResult criterion_recurrence() {
    return timed(8, "burning = subsets, parking <=> recurrent", [](Check& c) {
        for (const MultiGraph& g : {MultiGraph::complete(3), MultiGraph::complete(4), MultiGraph::wheel(5)}) {
            Int recurrent = 0;
            for (const Configuration& f : stable_configurations(g)) {
                const bool burn = is_recurrent_burning(g, f);
                recurrent += burn;
                c.expect(burn == is_recurrent_subsets(g, f), "recurrence tests differ at " + show(f));
                const Configuration p = beta(g, f);
                c.expect(burn == is_parking(g, p), "beta duality fails at " + show(f));
                c.expect(is_parking(g, f) == is_parking_subsets(g, f), "parking tests differ at " + show(f));
            }
            c.expect(recurrent == spanning_tree_count(g), "recurrent count " + std::to_string(recurrent));
        }
    }, 0);
}

CriterionResult criterion_tutte() {
    return timed(9, "effective classes and Tutte coefficients", [](Check& c) {
        for (const MultiGraph& g : {MultiGraph::complete(3), MultiGraph::complete(4), MultiGraph::wheel(5)}) {
            const Int top = g.edge_count() - g.vertex_count() + 1;
            const EffectiveClassCounts e = effective_class_counts(g, top + 2);
            c.expect(e.by_parking == e.by_level, "parking vs level counts " + show_vec(e.by_parking) + " vs " + show_vec(e.by_level));
            for (Int d = top; d <= top + 2; ++d)
                c.expect(e.by_parking[d] == e.spanning_trees, "count at d=" + std::to_string(d) + " is not the tree number");
        }
        const EffectiveClassCounts k3 = effective_class_counts(MultiGraph::complete(3), 3);
        c.expect(k3.by_parking == std::vector<Int>{1, 3, 3, 3}, "K3 counts " + show_vec(k3.by_parking));
    }, 0);
}

CriterionResult criterion_series() {
    return timed(10, "generating-function identities", [](Check& c) {
        const int T = 10;
        for (int n = 2; n <= 5; ++n) {
            const TruncatedSeries direct = Ln_direct(n, T);
            c.expect(direct == Ln_via_toxy(n, T), "L_" + std::to_string(n) + " direct vs A_n sum");
            const TruncatedSeries swapped =
                direct.map_exponents([](const TruncatedSeries::Exponents& e) { return TruncatedSeries::Exponents{e[1], e[0], 0}; });
            c.expect(direct == swapped, "L_" + std::to_string(n) + " not symmetric");
        }
        c.expect(LnC_identity_check(5, 8), "closed form for sum L_n z^(n-1)");
        c.expect(carlitz_by_enumeration(28, 8) == carlitz_by_recurrence(28, 8), "Carlitz enumeration vs recurrence");
    }, 120.0);
}

CriterionResult criterion_linear_ops(std::uint64_t seed) {
    constexpr Int kOpsPerVertex = 40;
    return timed(11, "linear operation count", [seed](Check& c) {
        std::mt19937_64 rng(seed);
        for (std::size_t n : {std::size_t{100}, std::size_t{1000}, std::size_t{10000}, std::size_t{100000}}) {
            std::uniform_int_distribution<Int> sink(-static_cast<Int>(n), static_cast<Int>(n * n));
            const Configuration f = random_parking_kn(n, sink(rng), rng);
            OpCounter ops;
            const auto start = std::chrono::steady_clock::now();
            const Int r = rank_formula(f, &ops);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::ostringstream note;
            note << "n=" << n << " ops/n=" << static_cast<double>(ops.ops) / static_cast<double>(n) << " rank=" << r;
            c.note(note.str());
            c.expect(ops.ops <= kOpsPerVertex * static_cast<Int>(n), note.str() + " exceeds the linear bound");
            if (n == 100000) c.expect(secs < 1.0, "rank_formula at n=1e5 took " + std::to_string(secs) + " s");
            if (n == 100) c.expect(r == rank_greedy(f), "formula and greedy differ at n=100");
        }
    }, 0);
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    return {criterion_kn_example(),          criterion_formula_table(), criterion_strip_statistics(),
            criterion_dyck_statistics(seed), criterion_riemann_roch(seed), criterion_oracle_equivalence(),
            criterion_wheel(),               criterion_recurrence(),    criterion_tutte(),
            criterion_series(),              criterion_linear_ops(seed)};
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << "  (";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << r.seconds << " s)  " << r.detail;
    return out.str();
}

} // namespace sandrank
