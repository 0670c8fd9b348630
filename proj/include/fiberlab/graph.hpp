#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace fiberlab {

// Bit i set means vertex i (0-based) is in the set.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxGraphVertices = 64;

// Finite simple graph on vertices 0..n-1. Each vertex carries a display label
// (v1..vn by default); labels become variable names in edge ideals.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;
    explicit Graph(std::size_t n, const std::vector<Edge>& edges = {});
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    std::size_t size() const { return adjacency_.size(); }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool adjacent(std::size_t u, std::size_t v) const;
    VertexSet neighbors(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const;
    // Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    // Subgraph on the given vertices, renumbered in the given order, labels kept.
    Graph induced(const std::vector<std::size_t>& vertices) const;
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
    }

private:
    void add_edge(std::size_t u, std::size_t v);

    std::vector<VertexSet> adjacency_;
    std::vector<std::string> labels_;
};

std::string default_vertex_label(std::size_t v);

Graph complement(const Graph& g);
bool is_star_vertex(const Graph& g, std::size_t v);
std::vector<std::size_t> star_vertices(const Graph& g);

// Adds a pendant vertex w_i at every vertex v_i. Vertex order: v_1..v_n, w_1..w_n.
Graph whisker_all(const Graph& g);
// Pendants at every vertex except `skip`; whisker vertices follow in index order.
Graph whisker_except(const Graph& g, std::size_t skip);
// Label of the whisker attached at a vertex labeled `label` (v3 -> w3).
std::string whisker_label(const std::string& label);

// Bron-Kerbosch with pivoting; each clique sorted, list sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g);
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
// A vertex v joined to n disjoint edges v_{1,j} - v_{2,j}, by edges to both endpoints.
// Vertex order: v, v_{1,1}, v_{2,1}, ..., v_{1,n}, v_{2,n}.
Graph star_of_edges(std::size_t n);

inline constexpr std::size_t kMaxEnumerationVertices = 8;

// All 2^(n(n-1)/2) labeled simple graphs on n vertices. Graph number k contains
// the e-th pair (in lexicographic order of (i, j), i < j) iff bit e of k is set.
class LabeledGraphs {
public:
    explicit LabeledGraphs(std::size_t n);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        using pointer = const Graph*;
        using reference = Graph;

        iterator(const LabeledGraphs* owner, std::uint64_t index) : owner_(owner), index_(index) {}
        Graph operator*() const { return owner_->at(index_); }
        iterator& operator++()
        {
            ++index_;
            return *this;
        }
        iterator operator++(int)
        {
            auto copy = *this;
            ++index_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const LabeledGraphs* owner_;
        std::uint64_t index_;
    };

    std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
    Graph at(std::uint64_t index) const;
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    std::size_t n_;
    std::vector<Graph::Edge> pairs_;
};

inline LabeledGraphs enumerate_graphs(std::size_t n) { return LabeledGraphs(n); }

}  // namespace fiberlab
