#include "fiberlab/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace fiberlab {

namespace {

bool has_default_labels(const Graph& g)
{
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.label(v) != default_vertex_label(v)) return false;
    return true;
}

Graph::Edge checked_edge(long long i, long long j, std::size_t n)
{
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
        throw std::invalid_argument("edge " + std::to_string(i) + " " + std::to_string(j) +
                                    " has an endpoint outside 1.." + std::to_string(n));
    return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    long long n = -1;
    std::vector<Graph::Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (n < 0) {
            if (first != "n" || !(ls >> n) || n < 0)
                throw std::invalid_argument("edge list must start with 'n <count>'");
            continue;
        }
        long long i = 0, j = 0;
        try {
            i = std::stoll(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected 'i j'");
        }
        if (!(ls >> j)) throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected 'i j'");
        edges.push_back(checked_edge(i, j, static_cast<std::size_t>(n)));
    }
    if (n < 0) throw std::invalid_argument("edge list must start with 'n <count>'");
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n " << g.size() << '\n';
    for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

nlohmann::json graph_to_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
    nlohmann::json out = {{"n", g.size()}, {"edges", edges}};
    if (!has_default_labels(g)) out["labels"] = g.labels();
    return out;
}

Graph graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs keys \"n\" and \"edges\"");
    const auto n = j.at("n").get<long long>();
    if (n < 0) throw std::invalid_argument("graph JSON: negative vertex count");
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edges are [i, j] pairs");
        edges.push_back(checked_edge(e[0].get<long long>(), e[1].get<long long>(), static_cast<std::size_t>(n)));
    }
    if (j.contains("labels")) {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        if (labels.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("graph JSON: label count does not match n");
        return Graph(std::move(labels), edges);
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_graph(std::string_view text)
{
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return graph_from_json(nlohmann::json::parse(text));
    return parse_edge_list(text);
}

}  // namespace fiberlab
