#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "sandrank/acceptance.hpp"
#include "sandrank/complete_graph.hpp"
#include "sandrank/dyck.hpp"
#include "sandrank/rank.hpp"
#include "sandrank/sandpile.hpp"

using namespace sandrank;

TEST_CASE("class tests on K_n") {
    const MultiGraph k5 = MultiGraph::complete(5);
    for (int i = 0; i < 5; ++i) CHECK(is_equiv_zero_kn(k5, laplacian_row(k5, i)));
    CHECK_FALSE(is_equiv_zero_kn(k5, Configuration{1, -1, 0, 0, 0}));
    CHECK(is_equiv_kn(k5, Configuration{3, 1, 3, 4, -1}, Configuration{0, 3, 0, 1, 6}));
    CHECK_THROWS_AS(is_equiv_zero_kn(MultiGraph::cycle(5), Configuration(5)), std::invalid_argument);

    // Lattice membership through the general reduction: f ~ 0 iff its parking
    // representative is the zero configuration.
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 5; ++n) {
        const MultiGraph g = MultiGraph::complete(n);
        for (int k = 0; k < 80; ++k) {
            Configuration f = random_configuration(n, -6, 6, rng);
            f[n - 1] -= degree(f);
            CHECK(is_equiv_zero_kn(g, f) == (parking_representative(g, f) == Configuration(n)));
            const Configuration h = random_configuration(n, -6, 6, rng);
            for (int i = 0; i < n; ++i) CHECK(is_equiv_kn(g, h, topple(g, h, i)));
        }
    }
}

TEST_CASE("each class holds n small sandpile configurations") {
    for (int n = 3; n <= 4; ++n) {
        const MultiGraph g = MultiGraph::complete(n);
        for (Int d = -2; d <= 4; ++d) {
            std::map<Configuration, int> per_class;
            Configuration f(n);
            const Int total = static_cast<Int>(std::pow(n, n - 1));
            for (Int code = 0; code < total; ++code) {
                Int rest = code, sum = 0;
                for (int i = 0; i + 1 < n; ++i) {
                    f[i] = rest % n;
                    rest /= n;
                    sum += f[i];
                }
                f[n - 1] = d - sum;
                ++per_class[parking_representative(g, f)];
            }
            CHECK(static_cast<Int>(per_class.size()) == spanning_tree_count(g));
            for (const auto& [rep, count] : per_class) CHECK(count == n);
        }
    }
}

TEST_CASE("compact normalization") {
    CHECK(compact_normalize(Configuration{3, 1, 3, 4, -1}) == Configuration{0, 3, 0, 1, 6});
    CHECK(compact_normalize(Configuration{0, 2, 4, 1, 7}) == Configuration{0, 2, 4, 1, 7});
    std::mt19937_64 rng(32);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + rng() % 7;
        const Configuration f = random_configuration(n, -20, 20, rng);
        const Configuration c = compact_normalize(f);
        CHECK(is_equiv_kn(f, c));
        for (std::size_t i = 0; i + 1 < n; ++i) CHECK((c[i] >= 0 && c[i] < static_cast<Int>(n)));
    }
}

TEST_CASE("phi1") {
    CHECK(phi1(Configuration{0, 0, 0, 0, 0}).str() == "aaaabbbbb");
    CHECK(phi1(Configuration{0, 0, 0, 1, 1, 1, 4, 7, 7, 9, 26}).str() == "aaabaaabbbabbbaabbabb");
    CHECK(phi1(Configuration{0, 0, 1, 3, 6}).str() == "aababbabb");
    CHECK_THROWS_AS(phi1(Configuration{1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(phi1(Configuration{0, 4, 0}), std::invalid_argument);
    for (const BinaryWord& w : all_Dn_words(6)) {
        const SortedParking p{w, 3};
        CHECK(SortedParking::from_configuration(p.to_configuration()) == p);
    }
}

TEST_CASE("parking via the cyclic lemma") {
    const KnParking p = parking_via_cyclic_lemma(Configuration{3, 1, 3, 4, -1});
    CHECK(p.sorted.word.str() == "aababbabb");
    CHECK(p.sorted.sink == 6);
    CHECK(p.representative == Configuration{0, 3, 0, 1, 6});
    CHECK(p.sorted.to_configuration() == Configuration{0, 0, 1, 3, 6});

    const Configuration sorted{0, 0, 1, 3, 6};
    CHECK(parking_via_cyclic_lemma(sorted).representative == sorted);

    std::mt19937_64 rng(33);
    for (int n = 1; n <= 7; ++n) {
        const MultiGraph g = MultiGraph::complete(n);
        for (int k = 0; k < 60; ++k) {
            const Configuration f = random_configuration(n, -10, 10, rng);
            const KnParking fast = parking_via_cyclic_lemma(g, f);
            CHECK(fast.representative == parking_representative(g, f));
            CHECK(sort_non_sink(fast.representative) == fast.sorted.to_configuration());
            CHECK(is_Dn(fast.sorted.word));
        }
    }
    CHECK_THROWS_AS(parking_via_cyclic_lemma(MultiGraph::cycle(4), Configuration(4)), std::invalid_argument);
}

TEST_CASE("phi ignores the order of the non-sink entries") {
    std::mt19937_64 rng(34);
    for (int k = 0; k < 20; ++k) {
        Configuration f = random_configuration(5, -5, 8, rng);
        std::vector<int> perm{0, 1, 2, 3};
        const SortedParking base = parking_via_cyclic_lemma(f).sorted;
        do {
            Configuration h = f;
            for (int i = 0; i < 4; ++i) h[i] = f[perm[i]];
            CHECK(parking_via_cyclic_lemma(h).sorted == base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("one rank step") {
    CHECK(rank_step_zero_coordinate(Configuration{0, 0, 1, 3, 6}) == Configuration{0, 1, 2, 3, 3});
    CHECK(rank_step_zero_coordinate(Configuration{0, 1, 2, 3, 7}) == Configuration{0, 1, 2, 3, 6});
    CHECK_THROWS_AS(rank_step_zero_coordinate(Configuration{0, 2, 2, 3, 7}), std::invalid_argument);
    for (const BinaryWord& w : all_Dn_words(6)) {
        const SortedParking p{w, 10};
        const SortedParking q = theta_step(p);
        CHECK(q.word == dyck_to_Dn(theta_dyck(Dn_to_dyck(w))));
        // The step is the parking representative of f - e_1.
        Configuration f = p.to_configuration();
        f[0] -= 1;
        CHECK(parking_via_cyclic_lemma(f).sorted == q);
    }
}

TEST_CASE("greedy and formula ranks") {
    CHECK(rank_greedy(Configuration{3, 1, 3, 4, -1}) == 4);
    CHECK(rank_formula(Configuration{3, 1, 3, 4, -1}) == 4);
    CHECK(rank_formula(Configuration{0, 0, 0, 1, 1, 1, 4, 7, 7, 9, 26}) == 12);
    const FormulaBreakdown b = rank_formula_breakdown(SortedParking::from_configuration(Configuration{0, 0, 1, 3, 6}));
    CHECK(b.q == 1);
    CHECK(b.r == 3);
    CHECK(b.eta == std::vector<Int>{0, 1, 1, 0});
    CHECK(b.terms == std::vector<Int>{2, 1, 1, 1});
    for (int n = 2; n <= 7; ++n)
        for (Int a = -4; a <= 12; ++a) {
            Configuration stair(n);
            for (int i = 0; i + 1 < n; ++i) stair[i] = i;
            stair[n - 1] = a;
            const Int expected = a >= -1 ? a : -1;
            CHECK(rank_greedy(stair) == expected);
            CHECK(rank_formula(stair) == expected);
        }
    for (const BinaryWord& w : all_Dn_words(5))
        for (Int s = -9; s < 0; ++s) CHECK(rank_formula_breakdown({w, s}).sum == 0);
    CHECK(rank_formula(Configuration{4}) == 4);
    CHECK(rank_formula(Configuration{-3}) == -1);

    std::mt19937_64 rng(35);
    for (int n = 2; n <= 5; ++n) {
        const MultiGraph g = MultiGraph::complete(n);
        EffectivenessCache cache;
        for (int k = 0; k < 60; ++k) {
            const Configuration f = random_configuration(n, -2, 6, rng);
            const Int brute = rank_bruteforce(g, f, &cache).rank;
            CHECK(rank_greedy(g, f) == brute);
            CHECK(rank_formula(g, f) == brute);
        }
    }
}

TEST_CASE("theta iteration") {
    const SortedParking one = theta_iterate(BinaryWord::parse("abaabbb"), 5, 1);
    CHECK(one.word.str() == "aabbabb");
    CHECK(one.sink == 4);
    std::mt19937_64 rng(36);
    for (const BinaryWord& w : all_Dn_words(6)) {
        const Int k = primitive_factor_count(w);
        CHECK(theta_iterate(w, 20, k).sink == 20 - 5);
        const Int s = static_cast<Int>(rng() % 30) - 5;
        CHECK(rank_by_theta_iteration(w, s) == rank_formula_breakdown({w, s}).rank);
    }
    CHECK_THROWS_AS(theta_iterate(BinaryWord::parse("abba"), 0, 1), std::invalid_argument);
}

TEST_CASE("T operator") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 2 + rng() % 6;
        const Int nn = static_cast<Int>(n);
        std::vector<Int> v(n - 1);
        const Int base = static_cast<Int>(rng() % 9) - 4;
        for (auto& x : v) x = base + static_cast<Int>(rng() % (n + 1));
        std::sort(v.begin(), v.end());
        v.push_back(static_cast<Int>(rng() % 21) - 10);
        const Configuration f(v);
        REQUIRE(is_compact_sorted(f));
        CHECK(t_operator(t_operator(f), true) == f);
        CHECK(t_operator(t_operator(f, true)) == f);
        CHECK(is_equiv_kn(sort_non_sink(f - laplacian_row(MultiGraph::complete(static_cast<int>(n)), static_cast<int>(n) - 2)),
                          t_operator(f)));

        // n-1 inverse steps topple the sink.
        Configuration back = f;
        for (Int i = 0; i < nn - 1; ++i) back = t_operator(back, true);
        Configuration fired = f;
        for (std::size_t i = 0; i + 1 < n; ++i) fired[i] += 1;
        fired[n - 1] -= nn - 1;
        CHECK(back == fired);

        // The sorted parking representative lies on the orbit.
        const Configuration target = parking_via_cyclic_lemma(f).sorted.to_configuration();
        const Int steps = target.sink() - f.sink();
        Configuration orbit = f;
        for (Int i = 0; i < std::abs(steps); ++i) orbit = t_operator(orbit, steps < 0);
        CHECK(orbit == target);
    }
    CHECK_THROWS_AS(t_operator(Configuration{0, 9, 1}), std::invalid_argument);
}

TEST_CASE("operation count grows linearly") {
    std::mt19937_64 rng(38);
    for (std::size_t n : {std::size_t{50}, std::size_t{500}, std::size_t{5000}}) {
        OpCounter ops;
        const Configuration f = random_parking_kn(n, static_cast<Int>(n), rng);
        rank_formula(f, &ops);
        CHECK(ops.ops <= 40 * static_cast<Int>(n));
        CHECK(ops.ops >= static_cast<Int>(n));
    }
}
