#include <doctest.h>

#include <functional>
#include <random>

#include "sandrank/acceptance.hpp"
#include "sandrank/sandpile.hpp"

using namespace sandrank;

namespace {

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

std::vector<MultiGraph> corpus() {
    std::mt19937_64 rng(11);
    return {MultiGraph::complete(3), MultiGraph::complete(4), MultiGraph::wheel(5), MultiGraph::cycle(5),
            random_multigraph(5, rng), random_multigraph(6, rng, 3, 2)};
}

} // namespace

TEST_CASE("stability") {
    const MultiGraph k3 = MultiGraph::complete(3);
    CHECK(is_stable(k3, Configuration{0, 0, 7}));
    CHECK_FALSE(is_stable(k3, Configuration{2, 0, 0}));
    CHECK(is_stable(MultiGraph::complete(5), Configuration{0, 3, 0, 1, 6}));
    CHECK_THROWS_AS(is_stable(k3, Configuration{-1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_stable(k3, Configuration{0, 0}), std::invalid_argument);
}

TEST_CASE("stabilization") {
    const MultiGraph k3 = MultiGraph::complete(3);
    const Stabilization s = stabilize(k3, Configuration{2, 0, 0});
    CHECK(s.config == Configuration{0, 1, 1});
    CHECK(s.odometer == std::vector<Int>{1, 0, 0});
    const Stabilization fixed = stabilize(k3, Configuration{1, 1, 5});
    CHECK(fixed.config == Configuration{1, 1, 5});
    CHECK(fixed.odometer == std::vector<Int>{0, 0, 0});
    CHECK_THROWS_AS(stabilize(k3, Configuration{-1, 3, 0}), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (const MultiGraph& g : corpus())
        for (int k = 0; k < 20; ++k) {
            Configuration f = random_configuration(g.vertex_count(), 0, 12, rng);
            const Stabilization a = stabilize(g, f);
            const Stabilization b = stabilize_shuffled(g, f, rng());
            const Stabilization c = stabilize_shuffled(g, f, rng());
            CHECK(a.config == b.config);
            CHECK(a.odometer == b.odometer);
            CHECK(b.odometer == c.odometer);
            CHECK(is_stable(g, a.config));
        }
}

TEST_CASE("recurrence tests") {
    const MultiGraph k3 = MultiGraph::complete(3);
    CHECK(is_recurrent_burning(k3, Configuration{1, 1, 0}));
    CHECK_FALSE(is_recurrent_burning(k3, Configuration{0, 0, 0}));
    CHECK_THROWS_AS(is_recurrent_burning(k3, Configuration{2, 0, 0}), std::invalid_argument);
    for (const MultiGraph& g : corpus()) {
        Int recurrent = 0;
        for (const Configuration& f : stable_configurations(g)) {
            const bool r = is_recurrent_burning(g, f);
            recurrent += r;
            CHECK(r == is_recurrent_subsets(g, f));
            CHECK(r == is_parking(g, beta(g, f)));
            CHECK(is_parking(g, f) == is_parking_subsets(g, f));
            CHECK(dhar_unburnt(g, f).empty() == is_parking(g, f));
        }
        CHECK(recurrent == spanning_tree_count(g));
        CHECK(is_recurrent_burning(g, max_stable(g)));
    }
}

TEST_CASE("beta") {
    const MultiGraph k3 = MultiGraph::complete(3);
    const Configuration f{1, 1, 4};
    CHECK(beta(k3, f) == Configuration{0, 0, -3});
    CHECK(beta(k3, beta(k3, f)) == f);
    CHECK(beta(k3, max_stable(k3)) == Configuration(3));
}

TEST_CASE("parking representatives") {
    const MultiGraph k5 = MultiGraph::complete(5);
    CHECK(parking_representative(k5, Configuration{3, 1, 3, 4, -1}) == Configuration{0, 3, 0, 1, 6});
    CHECK(is_parking(k5, Configuration{0, 3, 0, 1, 6}));
    CHECK(is_parking(k5, Configuration(5)));
    CHECK_THROWS_AS(is_parking(k5, Configuration{-1, 0, 0, 0, 0}), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (const MultiGraph& g : corpus())
        for (int k = 0; k < 40; ++k) {
            const Configuration f = random_configuration(g.vertex_count(), -6, 6, rng);
            const Configuration p = parking_representative(g, f);
            CHECK(is_parking_subsets(g, p));
            CHECK(degree(p) == degree(f));
            CHECK(parking_representative(g, p) == p);
            for (int i = 0; i < g.vertex_count(); ++i) CHECK(parking_representative(g, topple(g, f, i)) == p);
        }
}

TEST_CASE("recurrent representatives") {
    const MultiGraph k3 = MultiGraph::complete(3);
    CHECK(recurrent_representative(k3, Configuration(3)) == Configuration{1, 1, -2});
    std::mt19937_64 rng(6);
    for (const MultiGraph& g : corpus())
        for (int k = 0; k < 30; ++k) {
            const Configuration f = random_configuration(g.vertex_count(), -5, 5, rng);
            const Configuration r = recurrent_representative(g, f);
            CHECK(is_recurrent_burning(g, r));
            CHECK(degree(r) == degree(f));
            CHECK(recurrent_representative(g, r) == r);
            CHECK(parking_representative(g, r) == parking_representative(g, f));
        }
}

TEST_CASE("orientations") {
    const MultiGraph k3 = MultiGraph::complete(3);
    const Orientation o = Orientation::from_order(k3, {0, 1, 2});
    CHECK(orientation_configuration(o) == Configuration{-1, 0, 1});
    CHECK(o.is_acyclic());
    CHECK(o.reversed().is_acyclic());
    CHECK(o.edges_from(0, 1) == 1);
    CHECK(o.edges_from(1, 0) == 0);
    const Orientation cyc(k3, {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    CHECK_FALSE(cyc.is_acyclic());
    CHECK(degree(orientation_configuration(cyc)) == 0);
    CHECK_THROWS_AS(Orientation(k3, {{0, 1, 1}, {1, 0, 1}, {-1, -1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Orientation::from_order(k3, {0, 0, 1}), std::invalid_argument);

    const Orientation z = acyclic_orientation_from_parking(k3, Configuration(3));
    CHECK(z.is_acyclic());
    CHECK(z.indegree(2) == 0);
    CHECK_THROWS_AS(acyclic_orientation_from_parking(k3, Configuration{1, 1, 0}), std::invalid_argument);

    std::mt19937_64 rng(8);
    for (const MultiGraph& g : corpus())
        for (int k = 0; k < 30; ++k) {
            const Configuration p = parking_representative(g, random_configuration(g.vertex_count(), -4, 4, rng));
            const Orientation a = acyclic_orientation_from_parking(g, p);
            const Configuration fo = orientation_configuration(a);
            CHECK(a.is_acyclic());
            CHECK(degree(fo) == g.edge_count() - g.vertex_count());
            CHECK_FALSE(is_effective_class(g, fo));
            for (int i = 0; i < g.sink(); ++i) CHECK(p[i] < a.indegree(i));
        }
}

TEST_CASE("effectiveness") {
    std::mt19937_64 rng(9);
    for (const MultiGraph& g : corpus()) {
        const Int m = g.edge_count();
        const Int n = g.vertex_count();
        for (int k = 0; k < 60; ++k) {
            const Configuration f = random_configuration(g.vertex_count(), -4, 5, rng);
            if (is_effective(f)) CHECK(is_effective_class(g, f));
            if (degree(f) < 0) CHECK_FALSE(is_effective_class(g, f));
            if (degree(f) > m - n) CHECK(is_effective_class(g, f));
            // Exactly one side of the orientation dichotomy holds.
            const Configuration p = parking_representative(g, f);
            const bool effective = is_effective_class(g, f);
            if (!effective) {
                const Orientation o = acyclic_orientation_from_parking(g, p);
                CHECK(is_effective_class(g, orientation_configuration(o) - f));
            } else {
                for (int t = 0; t < 5; ++t) {
                    std::vector<int> order(g.vertex_count());
                    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
                    std::shuffle(order.begin(), order.end(), rng);
                    CHECK_FALSE(is_effective_class(g, orientation_configuration(Orientation::from_order(g, order)) - f));
                }
            }
        }
    }
}

TEST_CASE("effective class counts") {
    const EffectiveClassCounts k3 = effective_class_counts(MultiGraph::complete(3), 4);
    CHECK(k3.by_parking == std::vector<Int>{1, 3, 3, 3, 3});
    CHECK(k3.by_level == k3.by_parking);
    CHECK(k3.tutte_coefficients == std::vector<Int>{2, 1});
    const EffectiveClassCounts k4 = effective_class_counts(MultiGraph::complete(4), 6);
    CHECK(k4.tutte_coefficients == std::vector<Int>{6, 6, 3, 1});
    CHECK(k4.by_parking == k4.by_level);
    for (const MultiGraph& g : corpus()) {
        const Int top = g.edge_count() - g.vertex_count() + 1;
        const EffectiveClassCounts e = effective_class_counts(g, top + 2);
        CHECK(e.by_parking == e.by_level);
        CHECK(e.by_parking[top] == e.spanning_trees);
        CHECK(e.by_parking[top + 2] == e.spanning_trees);
    }
    CHECK_THROWS_AS(effective_class_counts(MultiGraph::complete(12), 1), std::invalid_argument);
}
