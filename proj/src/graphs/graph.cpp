#include "fiberlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fiberlab {

namespace {

VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

std::vector<std::size_t> members(VertexSet s)
{
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<std::vector<std::size_t>>& out)
{
    if (p == 0 && x == 0) {
        out.push_back(members(r));
        return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    std::size_t best = 0;
    int best_count = -1;
    for (VertexSet ux = p | x; ux; ux &= ux - 1) {
        auto u = static_cast<std::size_t>(std::countr_zero(ux));
        int c = std::popcount(p & g.neighbors(u));
        if (c > best_count) best_count = c, best = u;
    }
    for (VertexSet cand = p & ~g.neighbors(best); cand; cand &= cand - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(cand));
        bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

}  // namespace

std::string default_vertex_label(std::size_t v) { return "v" + std::to_string(v + 1); }

Graph::Graph(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v) labels.push_back(default_vertex_label(v));
    *this = Graph(std::move(labels), edges);
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : adjacency_(labels.size(), 0), labels_(std::move(labels))
{
    if (labels_.size() > kMaxGraphVertices)
        throw std::length_error("graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= size() || v >= size())
        throw std::out_of_range("edge endpoint outside 1.." + std::to_string(size()));
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
    if (u >= size() || v >= size()) throw std::out_of_range("vertex out of range");
    return (adjacency_[u] >> v) & 1;
}

std::size_t Graph::degree(std::size_t v) const
{
    return static_cast<std::size_t>(std::popcount(adjacency_.at(v)));
}

std::vector<Graph::Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (auto j : members(adjacency_[i] & ~((bit(i) << 1) - 1))) out.emplace_back(i, j);
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto a : adjacency_) twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const
{
    std::vector<std::string> labels;
    for (auto v : vertices) labels.push_back(label(v));
    std::vector<Edge> es;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b])) es.emplace_back(a, b);
    return Graph(std::move(labels), es);
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (labels.size() != size()) throw std::invalid_argument("label count does not match vertex count");
    return Graph(std::move(labels), edges());
}

Graph complement(const Graph& g)
{
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) es.emplace_back(i, j);
    return Graph(g.labels(), es);
}

bool is_star_vertex(const Graph& g, std::size_t v)
{
    if (v >= g.size()) throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range");
    return g.degree(v) == g.size() - 1;
}

std::vector<std::size_t> star_vertices(const Graph& g)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (is_star_vertex(g, v)) out.push_back(v);
    return out;
}

std::string whisker_label(const std::string& label)
{
    if (!label.empty() && label[0] == 'v') return "w" + label.substr(1);
    return "w_" + label;
}

namespace {

Graph whisker_where(const Graph& g, std::size_t skip)
{
    const std::size_t n = g.size();
    auto labels = g.labels();
    auto es = g.edges();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip) continue;
        es.emplace_back(i, labels.size());
        labels.push_back(whisker_label(g.label(i)));
    }
    return Graph(std::move(labels), es);
}

}  // namespace

Graph whisker_all(const Graph& g) { return whisker_where(g, g.size()); }

Graph whisker_except(const Graph& g, std::size_t skip)
{
    if (skip >= g.size()) throw std::out_of_range("vertex " + std::to_string(skip + 1) + " out of range");
    return whisker_where(g, skip);
}

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g)
{
    std::vector<std::vector<std::size_t>> out;
    if (g.size() == 0) return out;
    const VertexSet all = g.size() == 64 ? ~VertexSet{0} : (bit(g.size()) - 1);
    bron_kerbosch(g, 0, all, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g)
{
    std::vector<std::vector<std::size_t>> out;
    VertexSet seen = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen & bit(s)) continue;
        VertexSet comp = bit(s), frontier = bit(s);
        while (frontier) {
            VertexSet next = 0;
            for (auto v : members(frontier)) next |= g.neighbors(v);
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(members(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph complete_graph(std::size_t n)
{
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph path_graph(std::size_t n)
{
    std::vector<Graph::Edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    auto es = path_graph(n).edges();
    es.emplace_back(0, n - 1);
    return Graph(n, es);
}

Graph edgeless_graph(std::size_t n) { return Graph(n); }

Graph star_of_edges(std::size_t n)
{
    std::vector<std::string> labels{"v"};
    std::vector<Graph::Edge> es;
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t a = labels.size(), b = a + 1;
        labels.push_back("v1_" + std::to_string(j));
        labels.push_back("v2_" + std::to_string(j));
        es.emplace_back(0, a);
        es.emplace_back(0, b);
        es.emplace_back(a, b);
    }
    return Graph(std::move(labels), es);
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n)
{
    if (n > kMaxEnumerationVertices)
        throw std::length_error("graph enumeration is limited to n <= " +
                                std::to_string(kMaxEnumerationVertices));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

Graph LabeledGraphs::at(std::uint64_t index) const
{
    std::vector<Graph::Edge> es;
    for (std::size_t e = 0; e < pairs_.size(); ++e)
        if ((index >> e) & 1) es.push_back(pairs_[e]);
    return Graph(n_, es);
}

}  // namespace fiberlab
