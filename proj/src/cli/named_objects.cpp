#include "fiberlab/cli.hpp"

#include "fiberlab/graph_io.hpp"
#include "fiberlab/monomial_ideal.hpp"
#include "fiberlab/verify.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fiberlab::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t parse_count(std::string_view digits, std::string_view context)
{
    if (digits.empty() || digits.size() > 3)
        throw std::invalid_argument("expected a small count in '" + std::string(context) + "'");
    std::size_t n = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("expected a count in '" + std::string(context) + "'");
        n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    return n;
}

// "name(a,b)" -> {"name", {"a", "b"}}; arguments may contain nested parentheses.
std::pair<std::string, std::vector<std::string>> split_call(std::string_view text)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos) return {std::string(text), {}};
    if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
    std::vector<std::string> args;
    std::string cur;
    int depth = 0;
    for (char c : text.substr(open + 1, text.size() - open - 2)) {
        if (c == ',' && depth == 0) {
            args.push_back(cur);
            cur.clear();
            continue;
        }
        depth += c == '(' ? 1 : c == ')' ? -1 : 0;
        cur += c;
    }
    args.push_back(cur);
    return {std::string(text.substr(0, open)), args};
}

std::size_t vertex_of(const Graph& g, const std::string& spec)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.label(i) == spec) return i;
    const auto v = parse_count(spec, spec);
    if (v < 1 || v > g.size()) throw std::out_of_range("vertex " + spec + " out of range");
    return v - 1;
}

std::map<std::string, std::string> fold_map(const Graph& g, std::size_t skip)
{
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != skip) m[whisker_label(g.label(i))] = g.label(i);
    return m;
}

// (x^2) + (all monomials of degree 3) over the given variables.
MonomialIdeal square_plus_cube(const std::vector<std::string>& vars)
{
    const std::size_t n = vars.size();
    std::vector<Monomial> gens = {Monomial::variable(n, 0, 2)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c)
                gens.push_back(Monomial::variable(n, a) * Monomial::variable(n, b) * Monomial::variable(n, c));
    return MonomialIdeal(vars, gens);
}

MonomialIdeal monomials(const std::vector<std::string>& vars, const std::vector<std::string>& gens)
{
    std::vector<Monomial> ms;
    for (const auto& s : gens) ms.push_back(Polynomial::parse(s, vars).leading_monomial());
    return MonomialIdeal(vars, ms);
}

}  // namespace

Graph named_graph(std::string_view name)
{
    if (name.size() < 2) throw std::invalid_argument("unknown graph '" + std::string(name) + "'");
    const auto n = parse_count(name.substr(1), name);
    switch (name[0]) {
    case 'K': return complete_graph(n);
    case 'P': return path_graph(n);
    case 'C': return cycle_graph(n);
    case 'E': return edgeless_graph(n);
    case 'T': return star_of_edges(n);
    default: throw std::invalid_argument("unknown graph '" + std::string(name) + "'");
    }
}

Graph load_graph(const std::string& spec)
{
    if (std::filesystem::exists(spec)) return parse_graph(read_file(spec));
    return named_graph(spec);
}

std::vector<std::string> ring_names()
{
    return {"sigma(G)", "kprime(G)", "kdprime(G,v)", "tilde(G,v)", "edge(G)", "ex311(n)",
            "ex45",     "ex46a",     "ex46b",        "ex54R",      "ex54S"};
}

Presentation named_ring(std::string_view name, const FieldSpec& f)
{
    const auto [head, args] = split_call(name);
    auto need = [&, &head = head, &args = args](std::size_t count) {
        if (args.size() != count)
            throw std::invalid_argument(head + " takes " + std::to_string(count) + " argument(s)");
    };
    if (head == "sigma" || head == "kprime" || head == "edge") {
        need(1);
        const auto g = load_graph(args[0]);
        if (head == "sigma") return Presentation(edge_ideal(whisker_all(g)), f);
        if (head == "kprime") return Presentation(add_squares(edge_ideal(g)), f);
        return Presentation(edge_ideal(g), f);
    }
    if (head == "kdprime" || head == "tilde") {
        need(2);
        const auto g = load_graph(args[0]);
        const auto v = vertex_of(g, args[1]);
        const auto tilde = edge_ideal(whisker_except(g, v));
        if (head == "tilde") return Presentation(tilde, f);
        return Presentation(substitute(tilde, fold_map(g, v)), f);
    }
    if (head == "ex311") {
        need(1);
        const auto n = parse_count(args[0], name);
        if (n < 1 || n > 3) throw std::invalid_argument("ex311 needs 1 <= n <= 3");
        return Presentation(example_3_11_ring(n), f);
    }
    if (!args.empty()) throw std::invalid_argument(head + " takes no arguments");
    if (head == "ex45") {
        const std::vector<std::string> vars = {"x", "y"};
        return Presentation(vars, {Polynomial::parse("x^2+y^2", vars)}, f);
    }
    if (head == "ex46a") return Presentation(square_plus_cube({"x", "y", "z"}), f);
    if (head == "ex46b") return Presentation(square_plus_cube({"x", "u"}), f);
    if (head == "ex54R") return Presentation(monomials({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"}), f);
    if (head == "ex54S") return Presentation(monomials({"x", "y", "z"}, {"x^2", "x*y", "y^2"}), f);
    throw std::invalid_argument("unknown ring '" + std::string(name) + "'");
}

template <class K>
FPModule<K> load_module(std::shared_ptr<const LocalAlgebra<K>> a, const std::string& spec)
{
    if (spec == "k") return residue_field(a);
    if (spec == "free" || spec == "A") return free_module(a);
    if (spec.rfind("free:", 0) == 0) return free_module(a, parse_count(spec.substr(5), spec));
    if (spec == "canonical" || spec == "omega") return canonical_module(a);
    if (spec.rfind("cyclic:", 0) == 0) {
        std::vector<Vec<K>> gens;
        std::string item;
        std::istringstream in(spec.substr(7));
        while (std::getline(in, item, ','))
            gens.push_back(a->element(Polynomial::parse(item, a->vars())));
        if (gens.empty()) throw std::invalid_argument("cyclic: needs at least one generator");
        return cyclic_module(a, gens);
    }
    if (std::filesystem::exists(spec)) return module_from_json(a, nlohmann::json::parse(read_file(spec)));
    throw std::invalid_argument("unknown module '" + spec + "' (expected k, free, free:r, canonical, cyclic:f,... or a file)");
}

template <class K>
nlohmann::json module_to_json(const FPModule<K>& m)
{
    const auto& a = m.algebra();
    nlohmann::json actions = nlohmann::json::array();
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        const auto& mat = m.variable_action(i);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(m.field().to_string(mat(r, c)));
            rows.push_back(std::move(row));
        }
        actions.push_back(std::move(rows));
    }
    return {{"label", m.label()},
            {"field", m.field().spec().to_string()},
            {"vars", a.vars()},
            {"dim", m.dim()},
            {"actions", std::move(actions)}};
}

template <class K>
FPModule<K> module_from_json(std::shared_ptr<const LocalAlgebra<K>> a, const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("actions"))
        throw std::invalid_argument("module JSON needs keys \"dim\" and \"actions\"");
    if (j.contains("vars") && j.at("vars").get<std::vector<std::string>>() != a->vars())
        throw std::invalid_argument("module variables do not match the ring");
    if (j.contains("field") && FieldSpec::parse(j.at("field").get<std::string>()) != a->field().spec())
        throw std::invalid_argument("module field does not match the ring");
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& acts = j.at("actions");
    if (acts.size() != a->num_vars())
        throw std::invalid_argument("module needs one action matrix per ring variable");
    std::vector<Matrix<K>> mats;
    for (const auto& rows : acts) {
        if (rows.size() != dim) throw std::invalid_argument("action matrix has the wrong number of rows");
        Matrix<K> m(a->field(), dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (rows[r].size() != dim) throw std::invalid_argument("action matrix has the wrong number of columns");
            for (std::size_t c = 0; c < dim; ++c) {
                const auto& e = rows[r][c];
                const auto text = e.is_string() ? e.get<std::string>() : e.dump();
                m(r, c) = a->field().from_rational(parse_rational(text));
            }
        }
        mats.push_back(std::move(m));
    }
    return FPModule<K>(a, dim, std::move(mats), j.value("label", ""));
}

#define FIBERLAB_INSTANTIATE(K)                                                                        \
    template FPModule<K> load_module(std::shared_ptr<const LocalAlgebra<K>>, const std::string&);      \
    template nlohmann::json module_to_json(const FPModule<K>&);                                        \
    template FPModule<K> module_from_json(std::shared_ptr<const LocalAlgebra<K>>, const nlohmann::json&);

FIBERLAB_INSTANTIATE(PrimeField)
FIBERLAB_INSTANTIATE(RationalField)

}  // namespace fiberlab::cli
