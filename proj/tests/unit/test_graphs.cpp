#include "fiberlab/graph.hpp"
#include "fiberlab/graph_io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fiberlab;

namespace {

using Cliques = std::vector<std::vector<std::size_t>>;

}  // namespace

TEST_SUITE("graphs")
{
    TEST_CASE("complement examples")
    {
        CHECK(complement(complete_graph(3)).edge_count() == 0);
        const auto pc = complement(path_graph(3));
        CHECK(pc.edges() == std::vector<Graph::Edge>{{0, 2}});
        CHECK(pc.degree(1) == 0);
        CHECK(complement(edgeless_graph(4)) == complete_graph(4));
    }

    TEST_CASE("star vertices")
    {
        const auto p3 = path_graph(3);
        CHECK(is_star_vertex(p3, 1));
        CHECK_FALSE(is_star_vertex(p3, 0));
        CHECK(is_star_vertex(complete_graph(1), 0));
        CHECK(star_vertices(complete_graph(3)) == std::vector<std::size_t>{0, 1, 2});
        CHECK(star_vertices(cycle_graph(4)).empty());
    }

    TEST_CASE("whiskering")
    {
        const auto s2 = whisker_all(complete_graph(2));
        CHECK(s2.size() == 4);
        CHECK(s2.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {1, 3}});
        CHECK(s2.labels() == std::vector<std::string>{"v1", "v2", "w1", "w2"});
        CHECK(whisker_all(complete_graph(3)).edge_count() == 6);
        CHECK(whisker_all(complete_graph(1)).edges() == std::vector<Graph::Edge>{{0, 1}});

        const auto t2 = whisker_except(complete_graph(2), 1);
        CHECK(t2.labels() == std::vector<std::string>{"v1", "v2", "w1"});
        CHECK(t2.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}});
        CHECK(whisker_except(complete_graph(1), 0) == complete_graph(1));
        const auto p = whisker_except(path_graph(3), 1);
        CHECK(p.edge_count() == 4);
        CHECK(p.labels() == std::vector<std::string>{"v1", "v2", "v3", "w1", "w3"});
        CHECK(p.adjacent(0, 3));
        CHECK(p.adjacent(2, 4));
        CHECK_THROWS_AS(whisker_except(path_graph(3), 3), std::out_of_range);
    }

    TEST_CASE("maximal cliques examples")
    {
        CHECK(maximal_cliques(complement(path_graph(3))) == Cliques{{0, 2}, {1}});
        CHECK(maximal_cliques(complete_graph(3)) == Cliques{{0, 1, 2}});
        CHECK(maximal_cliques(edgeless_graph(3)) == Cliques{{0}, {1}, {2}});
        CHECK(maximal_cliques(cycle_graph(5)).size() == 5);
    }

    TEST_CASE("enumeration counts")
    {
        CHECK(enumerate_graphs(1).size() == 1);
        CHECK(enumerate_graphs(2).size() == 2);
        CHECK(enumerate_graphs(3).size() == 8);
        std::size_t count = 0;
        for (const auto& g : enumerate_graphs(3)) count += g.size() == 3;
        CHECK(count == 8);
        CHECK(enumerate_graphs(3).at(7) == complete_graph(3));
        CHECK_THROWS(enumerate_graphs(kMaxEnumerationVertices + 1));
    }

    TEST_CASE("structural invariants over all graphs on <= 5 vertices")
    {
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& g : enumerate_graphs(n)) {
                CHECK(complement(complement(g)) == g);
                const auto s = whisker_all(g);
                std::vector<std::size_t> first(n);
                for (std::size_t i = 0; i < n; ++i) first[i] = i;
                CHECK(s.induced(first) == g);
                for (std::size_t v = 0; v < s.size(); ++v) CHECK(s.degree(v) >= 1);
                for (std::size_t v = n; v < 2 * n; ++v) CHECK(s.degree(v) == 1);

                const auto gc = complement(g);
                const auto cliques = maximal_cliques(gc);
                for (auto v : star_vertices(g)) {
                    CHECK(gc.degree(v) == 0);
                    CHECK(std::find(cliques.begin(), cliques.end(), std::vector<std::size_t>{v}) != cliques.end());
                }
                VertexSet covered = 0;
                for (const auto& c : cliques)
                    for (auto v : c) covered |= VertexSet{1} << v;
                CHECK(covered == (VertexSet{1} << n) - 1);
            }
    }

    TEST_CASE("components and connectivity")
    {
        CHECK(is_connected(path_graph(4)));
        CHECK_FALSE(is_connected(complement(path_graph(3))));
        CHECK(connected_components(edgeless_graph(3)) == Cliques{{0}, {1}, {2}});
        CHECK(is_connected(complete_graph(1)));
    }

    TEST_CASE("star of edges")
    {
        const auto t = star_of_edges(2);
        CHECK(t.size() == 5);
        CHECK(t.labels() == std::vector<std::string>{"v", "v1_1", "v2_1", "v1_2", "v2_2"});
        CHECK(t.edge_count() == 6);
        CHECK(is_star_vertex(t, 0));
    }

    TEST_CASE("edge list and JSON round trips")
    {
        const auto g = parse_edge_list("# triangle\nn 3\n1 2\n\n1 3  # comment\n2 3\n");
        CHECK(g == complete_graph(3));
        CHECK(parse_edge_list(format_edge_list(g)) == g);
        CHECK(graph_from_json(graph_to_json(g)) == g);
        const auto t = star_of_edges(1);
        CHECK(graph_to_json(t).contains("labels"));
        CHECK(graph_from_json(graph_to_json(t)) == t);
        CHECK(parse_graph(graph_to_json(t).dump()) == t);
        CHECK_THROWS_AS(parse_edge_list("1 2\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_edge_list("n 2\n1 3\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_edge_list("n 2\n1 1\n"), std::invalid_argument);
        CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), std::invalid_argument);
    }
}
