#include <doctest.h>

#include <random>

#include "sandrank/graph.hpp"
#include "sandrank/io.hpp"

using namespace sandrank;

TEST_CASE("degree of configurations") {
    CHECK(degree(Configuration(4)) == 0);
    CHECK(degree(Configuration{3, 1, 3, 4, -1}) == 10);
    const MultiGraph w = MultiGraph::wheel(5);
    for (int i = 0; i < w.vertex_count(); ++i) CHECK(degree(laplacian_row(w, i)) == 0);
}

TEST_CASE("laplacian rows") {
    CHECK(laplacian_row(MultiGraph::complete(3), 0) == Configuration{2, -1, -1});
    CHECK(laplacian_row(MultiGraph::complete(5), 2) == Configuration{-1, -1, 4, -1, -1});
    const MultiGraph g = MultiGraph::from_edges(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 3}, {0, 3, 1}});
    Configuration sum(4);
    for (int i = 0; i < 4; ++i) sum += laplacian_row(g, i);
    CHECK(sum == Configuration(4));
    CHECK(laplacian_row(g, 2) == Configuration{0, -1, 4, -3});
    CHECK_THROWS_AS(laplacian_row(g, 4), std::out_of_range);
    CHECK_THROWS_AS(laplacian_row(g, -1), std::out_of_range);
}

TEST_CASE("toppling") {
    const MultiGraph k3 = MultiGraph::complete(3);
    CHECK(topple(k3, Configuration(3), 0) == Configuration{-2, 1, 1});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> d(-5, 5);
    const MultiGraph w = MultiGraph::wheel(4);
    for (int k = 0; k < 50; ++k) {
        Configuration f(5);
        for (auto i = 0; i < 5; ++i) f[i] = d(rng);
        const int i = static_cast<int>(rng() % 5);
        const int j = static_cast<int>(rng() % 5);
        CHECK(degree(topple(w, f, i)) == degree(f));
        CHECK(topple(w, topple(w, f, i), j) == topple(w, topple(w, f, j), i));
        Configuration all = f;
        for (int v = 0; v < 5; ++v) topple_in_place(w, all, v);
        CHECK(all == f);
    }
    CHECK_THROWS_AS(topple(k3, Configuration(3), 3), std::out_of_range);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(MultiGraph({{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph({{1, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph({{0, -1}, {-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph::from_edges(4, {{0, 1, 1}, {2, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph::from_edges(3, {{0, 0, 1}, {1, 2, 1}}), std::invalid_argument);
    CHECK_NOTHROW(MultiGraph::complete(1));
}

TEST_CASE("graph accessors") {
    const MultiGraph w = MultiGraph::wheel(5);
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 10);
    CHECK(w.vertex_degree(5) == 5);
    CHECK(w.vertex_degree(0) == 3);
    CHECK(w.sink() == 5);
    CHECK(MultiGraph::complete(4).is_complete());
    CHECK_FALSE(w.is_complete());
    CHECK(max_stable(MultiGraph::complete(3)) == Configuration{1, 1, 1});
}

TEST_CASE("spanning trees") {
    CHECK(spanning_tree_count(MultiGraph::complete(1)) == 1);
    CHECK(spanning_tree_count(MultiGraph::complete(3)) == 3);
    CHECK(spanning_tree_count(MultiGraph::complete(5)) == 125);
    CHECK(spanning_tree_count(MultiGraph::cycle(6)) == 6);
    CHECK(spanning_tree_count(MultiGraph::wheel(5)) == 121);
    CHECK(spanning_tree_count(MultiGraph::from_edges(2, {{0, 1, 3}})) == 3);
}

TEST_CASE("checked arithmetic") {
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), std::overflow_error);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_div(7, 3) == 2);
    CHECK_THROWS_AS(floor_div(1, 0), std::domain_error);
}

TEST_CASE("json round trip") {
    const MultiGraph g = graph_from_json(Json::parse(R"({"n":3,"edges":[[1,2],[2,3,2],[1,3]]})"));
    CHECK(g.multiplicity(1, 2) == 2);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(configuration_from_json(Json::parse("[1,-2,3]")) == Configuration{1, -2, 3});
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":3,"edges":[[1,4]]})")), std::invalid_argument);
    CHECK_THROWS_AS(configuration_from_json(Json::parse(R"([1,"a"])")), std::invalid_argument);
    CHECK_THROWS_AS(load_json("[1,2"), std::invalid_argument);
}
