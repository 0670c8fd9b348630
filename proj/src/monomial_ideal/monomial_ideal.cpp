#include "fiberlab/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fiberlab {

std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), display_order);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    // Sorted by degree, so a divisor always precedes its multiples.
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens) : vars_(std::move(vars))
{
    std::set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    for (const auto& g : gens) {
        if (g.num_vars() != vars_.size())
            throw std::invalid_argument("generator has the wrong number of exponents");
        if (g.is_one()) throw std::invalid_argument("the unit ideal is not allowed (generator 1)");
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::has_linear_generator() const
{
    return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.degree() == 1; });
}

std::size_t MonomialIdeal::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    if (m.num_vars() != vars_.size()) throw std::invalid_argument("monomial over a different ring");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<std::string> MonomialIdeal::gen_strings() const
{
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(to_string(g, vars_));
    return out;
}

MonomialIdeal edge_ideal(const Graph& g)
{
    std::vector<Monomial> gens;
    for (auto [i, j] : g.edges()) gens.push_back(Monomial::variable(g.size(), i) * Monomial::variable(g.size(), j));
    return MonomialIdeal(g.labels(), std::move(gens));
}

MonomialIdeal add_squares(const MonomialIdeal& ideal, const std::vector<std::string>& vars)
{
    auto gens = ideal.gens();
    for (const auto& v : vars) gens.push_back(Monomial::variable(ideal.num_vars(), ideal.var_index(v), 2));
    return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal add_squares(const MonomialIdeal& ideal) { return add_squares(ideal, ideal.vars()); }

std::string polarization_name(const std::string& var, std::uint32_t j)
{
    return var + "§" + std::to_string(j);
}

MonomialIdeal polarize(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.num_vars();
    std::vector<std::uint32_t> max_exp(n, 0);
    for (const auto& g : ideal.gens())
        for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], g[i]);

    auto vars = ideal.vars();
    std::vector<std::size_t> first_copy(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        first_copy[i] = vars.size();
        for (std::uint32_t j = 1; j < max_exp[i]; ++j) vars.push_back(polarization_name(ideal.vars()[i], j));
    }
    if (vars.size() == n) return ideal;

    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        std::vector<std::uint32_t> e(vars.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] == 0) continue;
            e[i] = 1;
            for (std::uint32_t j = 1; j < g[i]; ++j) e[first_copy[i] + j - 1] = 1;
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal substitute(const MonomialIdeal& ideal, const std::map<std::string, std::string>& map)
{
    const std::size_t n = ideal.num_vars();
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    for (const auto& [from, to] : map) image[ideal.var_index(from)] = ideal.var_index(to);

    std::vector<bool> kept(n, false);
    for (auto t : image) kept[t] = true;
    std::vector<std::string> vars;
    std::vector<std::size_t> position(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (kept[i]) {
            position[i] = vars.size();
            vars.push_back(ideal.vars()[i]);
        }

    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        std::vector<std::uint32_t> e(vars.size(), 0);
        for (std::size_t i = 0; i < n; ++i) e[position[image[i]]] += g[i];
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal rename(const MonomialIdeal& ideal, const std::map<std::string, std::string>& names)
{
    auto vars = ideal.vars();
    for (auto& v : vars)
        if (auto it = names.find(v); it != names.end()) v = it->second;
    for (const auto& [from, to] : names) ideal.var_index(from);
    return MonomialIdeal(std::move(vars), ideal.gens());
}

MonomialIdeal kill_variables(const MonomialIdeal& ideal, const std::vector<std::string>& vars)
{
    std::vector<bool> killed(ideal.num_vars(), false);
    for (const auto& v : vars) killed[ideal.var_index(v)] = true;
    std::vector<std::string> kept_vars;
    for (std::size_t i = 0; i < ideal.num_vars(); ++i)
        if (!killed[i]) kept_vars.push_back(ideal.vars()[i]);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        bool vanishes = false;
        std::vector<std::uint32_t> e;
        for (std::size_t i = 0; i < ideal.num_vars(); ++i) {
            if (killed[i]) vanishes |= g[i] > 0;
            else e.push_back(g[i]);
        }
        if (!vanishes) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(std::move(kept_vars), std::move(gens));
}

Graph cross_graph(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.num_vars();
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!ideal.contains(Monomial::variable(n, i) * Monomial::variable(n, j))) edges.emplace_back(i, j);
    return Graph(ideal.vars(), edges);
}

bool VariableSplit::isolates(std::size_t var) const
{
    return std::any_of(components.begin(), components.end(),
                       [&](const auto& c) { return c.size() == 1 && c.front() == var; });
}

std::optional<VariableSplit> variable_partition_decomposable(const MonomialIdeal& ideal)
{
    if (ideal.has_linear_generator())
        throw std::invalid_argument("presentation is not minimal: a variable is among the generators");
    auto components = connected_components(cross_graph(ideal));
    if (components.size() < 2) return std::nullopt;
    VariableSplit split;
    const std::size_t last = ideal.num_vars() - 1;
    for (const auto& c : components) {
        auto& side = std::find(c.begin(), c.end(), last) != c.end() ? split.second : split.first;
        side.insert(side.end(), c.begin(), c.end());
    }
    std::sort(split.first.begin(), split.first.end());
    split.components = std::move(components);
    return split;
}

}  // namespace fiberlab
