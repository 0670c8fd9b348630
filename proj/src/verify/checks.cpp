#include "fiberlab/verify.hpp"

#include "fiberlab/graph_io.hpp"
#include "fiberlab/local_algebra.hpp"
#include "fiberlab/module.hpp"
#include "fiberlab/monomial_ideal.hpp"
#include "fiberlab/presentation.hpp"
#include "fiberlab/sr_invariants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fiberlab {

namespace {

using nlohmann::json;

class Check {
public:
    Check(std::string name, std::string instance, json input) : start_(std::chrono::steady_clock::now())
    {
        report_.check = std::move(name);
        report_.instance = std::move(instance);
        report_.witness["input"] = std::move(input);
    }

    json& witness() { return report_.witness; }

    void expect(bool ok, const std::string& assertion, json detail = nullptr)
    {
        if (ok) return;
        json entry = {{"assertion", assertion}};
        if (!detail.is_null()) entry["detail"] = std::move(detail);
        failed_.push_back(std::move(entry));
    }

    Report finish()
    {
        report_.pass = failed_.empty();
        if (!failed_.empty()) report_.witness["failed"] = failed_;
        report_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    Report report_;
    json failed_ = json::array();
    std::chrono::steady_clock::time_point start_;
};

std::vector<std::string> strings_of(const std::vector<Monomial>& ms, const std::vector<std::string>& vars)
{
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(to_string(m, vars));
    return out;
}

std::vector<Monomial> monomial_socle_of(const MonomialIdeal& ideal, const FieldSpec& f)
{
    const auto order = artinian_order(ideal);
    if (!order) throw std::logic_error("ideal is not artinian");
    return with_field(f, [&](auto field) {
        using K = decltype(field);
        LocalAlgebra<K> a(Presentation(ideal, f), *order);
        return monomial_socle(a);
    });
}

std::vector<Monomial> clique_products(const Graph& g)
{
    std::vector<Monomial> out;
    for (const auto& c : maximal_cliques(complement(g))) {
        Monomial m(g.size());
        for (auto v : c) m = m * Monomial::variable(g.size(), v);
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), display_order);
    return out;
}

json components_json(const VariableSplit& s, const std::vector<std::string>& vars)
{
    json out = json::array();
    for (const auto& c : s.components) {
        json names = json::array();
        for (auto v : c) names.push_back(vars[v]);
        out.push_back(std::move(names));
    }
    return out;
}

// w_i -> v_i for every whiskered vertex of g.
std::map<std::string, std::string> fold_map(const Graph& g, std::size_t skip)
{
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != skip) m[whisker_label(g.label(i))] = g.label(i);
    return m;
}

json graph_input(const Graph& g) { return graph_to_json(g); }

template <class Fn>
std::vector<Report> parallel_map(std::size_t count, std::size_t threads, Fn fn)
{
    std::vector<Report> out(count);
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

std::string part_name(Example4xPart part)
{
    switch (part) {
    case Example4xPart::i: return "i";
    case Example4xPart::ii: return "ii";
    case Example4xPart::iii: return "iii";
    default: return "all";
    }
}

Example4xPart part_from_name(const std::string& s)
{
    if (s == "i") return Example4xPart::i;
    if (s == "ii") return Example4xPart::ii;
    if (s == "iii") return Example4xPart::iii;
    if (s == "all") return Example4xPart::all;
    throw std::invalid_argument("unknown part '" + s + "' (expected i, ii, iii or all)");
}

Report example_4x_search(std::uint32_t p, Example4xPart part)
{
    const auto f = FieldSpec::prime(p);
    const bool full = part == Example4xPart::i;
    std::vector<std::string> vars = part == Example4xPart::i    ? std::vector<std::string>{"x", "y"}
                                    : part == Example4xPart::ii ? std::vector<std::string>{"x", "y", "z"}
                                                                : std::vector<std::string>{"x", "u"};
    const std::string gen = full ? "x^2+y^2" : "x^2";
    const std::size_t order = full ? 4 : 3;
    std::string ring = "GF(" + std::to_string(p) + ")[";
    for (std::size_t i = 0; i < vars.size(); ++i) ring += (i ? "," : "") + vars[i];
    ring += full ? "]/(" + gen + ") trunc 4" : "]/((x^2)+m^3)";

    Check c("ex4x", ring, {{"p", p}, {"part", part_name(part)}});
    Presentation pres(vars, {Polynomial::parse(gen, vars)}, f);
    LocalAlgebra<PrimeField> a(pres, order);
    c.witness()["dim"] = a.dim();
    c.witness()["hilbert"] = a.hilbert_function();
    const auto found = pair_decomposition_search(a, full ? SearchMode::full : SearchMode::necessary);
    c.witness()["mode"] = full ? "full" : "necessary";
    if (found) {
        c.witness()["pair"] = {found->first.to_string(a.field(), vars), found->second.to_string(a.field(), vars)};
    } else {
        c.witness()["pair"] = nullptr;
    }
    if (full) {
        c.expect(found.has_value(), "a decomposition witness exists");
        if (found) {
            const auto prod = a.multiply(found->first.in(a), found->second.in(a));
            c.expect(is_zero_vector(a.field(), prod), "witness forms multiply to zero", a.to_string(prod));
        }
    } else {
        c.expect(!found.has_value(), "no independent linear forms with zero product", c.witness()["pair"]);
    }
    return c.finish();
}

}  // namespace

MonomialIdeal example_3_11_ring(std::size_t n)
{
    std::vector<std::string> vars = {"Z"};
    for (std::size_t j = 1; j <= n; ++j)
        for (int i = 1; i <= 2; ++i) vars.push_back("X" + std::to_string(i) + "_" + std::to_string(j));
    vars.push_back("Y");
    const std::size_t nv = vars.size();
    std::vector<Monomial> gens = {Monomial::variable(nv, 0) * Monomial::variable(nv, nv - 1)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t a = 1 + 2 * j, b = 2 + 2 * j;
        gens.push_back(Monomial::variable(nv, a, 2));
        gens.push_back(Monomial::variable(nv, a) * Monomial::variable(nv, b));
        gens.push_back(Monomial::variable(nv, b, 2));
        gens.push_back(Monomial::variable(nv, 0) * Monomial::variable(nv, a));
        gens.push_back(Monomial::variable(nv, 0) * Monomial::variable(nv, b));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

Report check_theorem_A(const Graph& g, const FieldSpec& f)
{
    const auto stars = star_vertices(g);
    if (stars.empty()) throw std::invalid_argument("graph " + describe_graph(g) + " has no star vertex");
    const std::size_t n = g.size();
    Check c("thmA", describe_graph(g) + " " + f.to_string(), {{"graph", graph_input(g)}, {"field", f.to_string()}});
    auto& w = c.witness();

    const auto sigma = edge_ideal(whisker_all(g));
    const auto sigma_dim = krull_dim(sigma);
    const bool cm = is_cohen_macaulay(sigma, f);
    w["sigma_dim"] = sigma_dim;
    w["sigma_cm"] = cm;
    c.expect(sigma_dim == n, "dim k[Sigma G] = n", sigma_dim);
    c.expect(cm, "k[Sigma G] is Cohen-Macaulay");

    const auto kprime = add_squares(edge_ideal(g));
    const auto folded = substitute(sigma, fold_map(g, n));
    c.expect(folded == kprime, "k[Sigma G]/(v_i - w_i) = k[G]'", folded.gen_strings());
    const auto kprime_dim = krull_dim(kprime);
    w["kprime_dim"] = kprime_dim;
    c.expect(kprime_dim == 0, "dim k[G]' = 0", kprime_dim);

    if (n >= 2) {
        const auto split = variable_partition_decomposable(kprime);
        w["split"] = split ? components_json(*split, kprime.vars()) : json(nullptr);
        c.expect(split.has_value(), "k[G]' has a cross-graph split");
        if (split)
            for (auto s : stars) c.expect(split->isolates(s), "split isolates star vertex " + g.label(s));
    } else {
        const auto split = variable_partition_decomposable(sigma);
        w["split"] = split ? components_json(*split, sigma.vars()) : json(nullptr);
        c.expect(split.has_value(), "k[Sigma K1] has a cross-graph split");
    }

    const auto socle = strings_of(monomial_socle_of(kprime, f), kprime.vars());
    const auto cliques = strings_of(clique_products(g), kprime.vars());
    w["socle"] = socle;
    w["clique_products"] = cliques;
    c.expect(socle == cliques, "socle of k[G]' = clique products of G^c");
    return c.finish();
}

Report check_theorem_B(const Graph& g, std::size_t star, const FieldSpec& f)
{
    const std::size_t n = g.size();
    if (star >= n || !is_star_vertex(g, star))
        throw std::invalid_argument("vertex " + std::to_string(star + 1) + " is not a star vertex of " +
                                    describe_graph(g));
    if (n < 2) throw std::invalid_argument("thmB needs at least two vertices");
    Check c("thmB", describe_graph(g) + " star=" + g.label(star) + " " + f.to_string(),
            {{"graph", graph_input(g)}, {"star", star + 1}, {"field", f.to_string()}});
    auto& w = c.witness();

    const auto tilde = edge_ideal(whisker_except(g, star));
    const auto tdim = krull_dim(tilde);
    const auto tdepth = depth(tilde, f);
    w["tilde_dim"] = tdim;
    w["tilde_depth"] = tdepth;
    c.expect(tdim == n, "dim k[G~] = n", tdim);
    c.expect(tdepth + 1 == n, "depth k[G~] = n - 1", tdepth);

    std::vector<std::string> squared;
    for (std::size_t i = 0; i < n; ++i)
        if (i != star) squared.push_back(g.label(i));
    const auto expected = add_squares(edge_ideal(g), squared);
    const auto kdprime = substitute(tilde, fold_map(g, star));
    w["kdprime"] = kdprime.gen_strings();
    c.expect(kdprime == expected, "k[G~]/(v_i - w_i : i != star) = k[G]''", expected.gen_strings());

    const auto ddim = krull_dim(kdprime);
    const auto ddepth = depth(kdprime, f);
    w["kdprime_dim"] = ddim;
    w["kdprime_depth"] = ddepth;
    c.expect(ddim == 1, "dim k[G]'' = 1", ddim);
    c.expect(ddepth == 0, "depth k[G]'' = 0", ddepth);

    with_field(f, [&](auto field) {
        using K = decltype(field);
        LocalAlgebra<K> a(Presentation(kdprime, f), 3);
        const auto& vs = a.variable(star);
        for (std::size_t i = 0; i < n; ++i) {
            const auto prod = a.multiply(vs, a.variable(i));
            if (i == star)
                c.expect(!is_zero_vector(a.field(), prod), "v_star^2 != 0 in the truncation");
            else
                c.expect(is_zero_vector(a.field(), prod), "v_star * " + g.label(i) + " = 0", a.to_string(prod));
        }
    });
    return c.finish();
}

Report check_socle_cliques(const Graph& g, const FieldSpec& f)
{
    Check c("socle", describe_graph(g) + " " + f.to_string(), {{"graph", graph_input(g)}, {"field", f.to_string()}});
    const auto kprime = add_squares(edge_ideal(g));
    const auto socle = strings_of(monomial_socle_of(kprime, f), kprime.vars());
    const auto cliques = strings_of(clique_products(g), kprime.vars());
    c.witness()["socle"] = socle;
    c.witness()["clique_products"] = cliques;
    c.expect(socle == cliques, "socle of k[G]' = clique products of G^c");
    return c.finish();
}

Report check_star_factorization(const Graph& g)
{
    Check c("star_split", describe_graph(g), {{"graph", graph_input(g)}});
    const auto kprime = add_squares(edge_ideal(g));
    const auto split = variable_partition_decomposable(kprime);
    const bool disconnected = !is_connected(complement(g));
    c.witness()["split"] = split ? components_json(*split, kprime.vars()) : json(nullptr);
    c.witness()["complement_disconnected"] = disconnected;
    c.expect(split.has_value() == disconnected, "split exists iff G^c is disconnected");
    if (split)
        for (auto s : star_vertices(g))
            c.expect(split->isolates(s), "split isolates star vertex " + g.label(s));
    return c.finish();
}

Report check_gorenstein_exclusion(const std::vector<Graph>& corpus, const FieldSpec& f, std::size_t threads)
{
    Check c("gorenstein", std::to_string(corpus.size()) + " graphs " + f.to_string(),
            {{"graphs", corpus.size()}, {"field", f.to_string()}});
    // pass: no split or socle >= 2; the witness counts the cases.
    auto per_graph = parallel_map(corpus.size(), threads, [&](std::size_t i) {
        Report r;
        const auto& g = corpus[i];
        if (g.size() < 2) {
            r.check = "skipped";
            r.pass = true;
            return r;
        }
        const auto kprime = add_squares(edge_ideal(g));
        if (!variable_partition_decomposable(kprime)) {
            r.check = "indecomposable";
            r.pass = true;
            return r;
        }
        const auto socle = monomial_socle_of(kprime, f);
        r.check = "decomposable";
        r.pass = socle.size() >= 2;
        r.witness = {{"graph", graph_input(g)}, {"socle", strings_of(socle, kprime.vars())}};
        return r;
    });
    std::size_t skipped = 0, indecomposable = 0, decomposable = 0;
    json violations = json::array();
    for (const auto& r : per_graph) {
        if (r.check == "skipped") ++skipped;
        else if (r.check == "indecomposable") ++indecomposable;
        else ++decomposable;
        if (!r.pass) violations.push_back(r.witness);
    }
    c.witness()["skipped"] = skipped;
    c.witness()["indecomposable"] = indecomposable;
    c.witness()["decomposable"] = decomposable;
    c.witness()["gorenstein_decomposable"] = violations.size();
    c.expect(violations.empty(), "decomposable k[G]' has socle dimension >= 2", violations);
    return c.finish();
}

Report check_example_3_11(std::size_t n)
{
    if (n < 1 || n > 3) throw std::invalid_argument("ex311 needs 1 <= n <= 3, got " + std::to_string(n));
    const auto g = star_of_edges(n);
    Check c("ex311", "n=" + std::to_string(n), {{"n", n}});
    const auto folded = substitute(edge_ideal(whisker_all(g)), fold_map(g, 0));

    std::map<std::string, std::string> names = {{"v", "Z"}, {whisker_label("v"), "Y"}};
    for (std::size_t j = 1; j <= n; ++j)
        for (int i = 1; i <= 2; ++i) {
            const auto idx = std::to_string(i) + "_" + std::to_string(j);
            names["v" + idx] = "X" + idx;
        }
    const auto renamed = rename(folded, names);

    const auto expected = example_3_11_ring(n);

    c.witness()["folded"] = renamed.gen_strings();
    c.witness()["expected"] = expected.gen_strings();
    c.expect(renamed.vars() == expected.vars(), "variables match", renamed.vars());
    c.expect(renamed == expected, "presentations match");
    const auto d = krull_dim(renamed);
    const bool cm = is_cohen_macaulay(renamed, FieldSpec::rational());
    c.witness()["dim"] = d;
    c.witness()["cm"] = cm;
    c.expect(d == 1, "dim R = 1", d);
    c.expect(cm, "R is Cohen-Macaulay");
    return c.finish();
}

std::vector<Report> check_example_4x(std::uint32_t p, Example4xPart part)
{
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("ex4x runs over p in {2, 3, 5, 7}, got " + std::to_string(p));
    const bool square = p % 4 == 1;
    if (part == Example4xPart::i && !square)
        throw std::invalid_argument("part (i) needs p = 1 mod 4 so that x^2 + y^2 splits into distinct factors; got p = " +
                                    std::to_string(p));
    std::vector<Report> out;
    if ((part == Example4xPart::all && square) || part == Example4xPart::i)
        out.push_back(example_4x_search(p, Example4xPart::i));
    if (part == Example4xPart::all || part == Example4xPart::ii) out.push_back(example_4x_search(p, Example4xPart::ii));
    if (part == Example4xPart::all || part == Example4xPart::iii) out.push_back(example_4x_search(p, Example4xPart::iii));
    return out;
}

Report check_example_5_4(std::size_t bound, const FieldSpec& f)
{
    if (bound > kMaxHomologicalBound)
        throw std::length_error("bound " + std::to_string(bound) + " exceeds " + std::to_string(kMaxHomologicalBound));
    Check c("ex54", "b=" + std::to_string(bound) + " " + f.to_string(), {{"bound", bound}, {"field", f.to_string()}});
    auto& w = c.witness();
    const std::vector<std::string> xyz = {"x", "y", "z"};
    auto ideal = [&](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
        std::vector<Monomial> ms;
        for (const auto& s : gens) ms.push_back(Polynomial::parse(s, vars).leading_monomial());
        return MonomialIdeal(vars, ms);
    };
    const auto r_ideal = ideal(xyz, {"x^2", "x*y", "y^2", "z^2"});

    if (bound > 0) {
        const auto s_mod_z = kill_variables(ideal(xyz, {"x^2", "x*y", "y^2"}), {"z"});
        c.expect(s_mod_z == ideal({"x", "y"}, {"x^2", "x*y", "y^2"}), "S/(z) = k[x,y]/(x^2,xy,y^2)",
                 s_mod_z.gen_strings());
        const auto split = variable_partition_decomposable(s_mod_z);
        w["s_mod_z_split"] = split ? components_json(*split, s_mod_z.vars()) : json(nullptr);
        c.expect(split && split->components == std::vector<std::vector<std::size_t>>{{0}, {1}}, "S/(z) splits as {x}|{y}");
    }

    with_field(f, [&](auto field) {
        using K = decltype(field);
        auto a = std::make_shared<const LocalAlgebra<K>>(Presentation(r_ideal, f), *artinian_order(r_ideal));
        const auto socle = monomial_socle(*a);
        w["socle"] = strings_of(socle, xyz);
        c.expect(socle.size() == 2, "socle of R has dimension 2", socle.size());

        const auto m = cyclic_module(a, {a->variable(2)});
        const bool bidual = biduality_is_iso(m);
        w["biduality"] = bidual;
        c.expect(bidual, "M -> M** is bijective");
        if (bound == 0) return;
        const auto r = free_module(a);
        const auto ext_m = ext_dimensions(m, r, bound);
        const auto ext_dual = ext_dimensions(dual_module(m), r, bound);
        const auto betti = poincare_truncation(m, bound);
        w["ext_M_R"] = ext_m;
        w["ext_Mdual_R"] = ext_dual;
        w["betti"] = betti;
        bool vanish = true;
        for (std::size_t i = 1; i <= bound; ++i) vanish = vanish && ext_m[i] == 0 && ext_dual[i] == 0;
        c.expect(vanish, "Ext^i(M,R) = 0 = Ext^i(M*,R) for 1 <= i <= b");
        c.expect(is_totally_reflexive_up_to(m, bound), "M is totally reflexive up to b");
        c.expect(std::all_of(betti.begin(), betti.end(), [](std::size_t x) { return x > 0; }),
                 "betti_i(M) > 0 for i <= b", betti);
    });
    return c.finish();
}

std::vector<Graph> star_vertex_corpus(std::size_t n)
{
    std::vector<Graph> out;
    for (const auto& g : enumerate_graphs(n))
        if (!star_vertices(g).empty()) out.push_back(g);
    return out;
}

std::vector<Report> run_theorem_A(std::size_t max_n, const std::vector<FieldSpec>& fields, std::size_t threads)
{
    std::vector<std::pair<Graph, FieldSpec>> items;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& g : star_vertex_corpus(n))
            for (const auto& f : fields) items.emplace_back(g, f);
    return parallel_map(items.size(), threads,
                        [&](std::size_t i) { return check_theorem_A(items[i].first, items[i].second); });
}

std::vector<Report> run_theorem_B(std::size_t max_n, const std::vector<FieldSpec>& fields, std::size_t threads)
{
    struct Item {
        Graph g;
        std::size_t star;
        FieldSpec f;
    };
    std::vector<Item> items;
    for (std::size_t n = 2; n <= max_n; ++n)
        for (const auto& g : star_vertex_corpus(n))
            for (auto s : star_vertices(g))
                for (const auto& f : fields) items.push_back({g, s, f});
    return parallel_map(items.size(), threads,
                        [&](std::size_t i) { return check_theorem_B(items[i].g, items[i].star, items[i].f); });
}

std::vector<Report> run_socle_cliques(std::size_t max_n, const FieldSpec& f, std::size_t threads)
{
    std::vector<Graph> items;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate_graphs(n)) items.push_back(g);
    return parallel_map(items.size(), threads, [&](std::size_t i) { return check_socle_cliques(items[i], f); });
}

std::vector<Report> run_star_factorization(std::size_t max_n, std::size_t threads)
{
    std::vector<Graph> items;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate_graphs(n)) items.push_back(g);
    return parallel_map(items.size(), threads, [&](std::size_t i) { return check_star_factorization(items[i]); });
}

Report run_gorenstein_exclusion(std::size_t max_n, const FieldSpec& f, std::size_t threads)
{
    std::vector<Graph> corpus;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& g : enumerate_graphs(n)) corpus.push_back(g);
    auto r = check_gorenstein_exclusion(corpus, f, threads);
    r.instance = "n<=" + std::to_string(max_n) + " " + f.to_string();
    r.witness["input"] = {{"max_n", max_n}, {"field", f.to_string()}};
    return r;
}

Report replay(const Report& r)
{
    const auto& in = r.witness.at("input");
    auto field = [&] { return FieldSpec::parse(in.at("field").get<std::string>()); };
    if (r.check == "thmA") return check_theorem_A(graph_from_json(in.at("graph")), field());
    if (r.check == "thmB")
        return check_theorem_B(graph_from_json(in.at("graph")), in.at("star").get<std::size_t>() - 1, field());
    if (r.check == "socle") return check_socle_cliques(graph_from_json(in.at("graph")), field());
    if (r.check == "star_split") return check_star_factorization(graph_from_json(in.at("graph")));
    if (r.check == "gorenstein") {
        if (!in.contains("max_n")) throw std::invalid_argument("gorenstein report without a corpus bound");
        return run_gorenstein_exclusion(in.at("max_n").get<std::size_t>(), field());
    }
    if (r.check == "ex311") return check_example_3_11(in.at("n").get<std::size_t>());
    if (r.check == "ex4x")
        return check_example_4x(in.at("p").get<std::uint32_t>(), part_from_name(in.at("part").get<std::string>()))
            .front();
    if (r.check == "ex54") return check_example_5_4(in.at("bound").get<std::size_t>(), field());
    throw std::invalid_argument("cannot replay check '" + r.check + "'");
}

}  // namespace fiberlab
