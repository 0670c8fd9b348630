#include "fiberlab/cli.hpp"

#include "fiberlab/graph_io.hpp"
#include "fiberlab/local_algebra.hpp"
#include "fiberlab/sr_invariants.hpp"
#include "fiberlab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace fiberlab::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string field;
    std::size_t trunc = 0;
    std::size_t bound = 6;
    std::size_t max_n = 5;
    std::string output;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::string input;
    std::string ring;
    std::string module = "k";
    std::string with;
    std::string mode;
    std::string part = "all";
    std::string skip;
    bool timing = false;
    bool emit_module = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_table(const json& j, std::ostream& out)
{
    if (!j.is_object()) {
        out << j.dump() << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items())
        out << k << std::string(width - k.size() + 2, ' ') << (v.is_string() ? v.get<std::string>() : v.dump())
            << '\n';
}

void emit(const json& j, const Config& cfg, std::ostream& out)
{
    if (cfg.output == "table") print_table(j, out);
    else out << j.dump(2) << '\n';
}

FieldSpec field_or(const Config& cfg, const FieldSpec& fallback)
{
    return cfg.field.empty() ? fallback : FieldSpec::parse(cfg.field);
}

Presentation load_presentation(const Config& cfg)
{
    if (cfg.input.empty() == cfg.ring.empty()) throw UsageError("give exactly one of --input and --ring");
    if (!cfg.ring.empty()) return named_ring(cfg.ring, field_or(cfg, FieldSpec::rational()));
    auto p = presentation_from_json(json::parse(read_file(cfg.input)));
    return cfg.field.empty() ? p : p.with_field(FieldSpec::parse(cfg.field));
}

Graph input_graph(const Config& cfg)
{
    if (cfg.input.empty()) throw UsageError("--input is required");
    return load_graph(cfg.input);
}

// Graph verbs.

int graph_verb(const std::string& sub, const Config& cfg, std::ostream& out)
{
    auto g = input_graph(cfg);
    if (sub == "cliques") {
        json cliques = json::array();
        for (const auto& c : maximal_cliques(g)) {
            json names = json::array();
            for (auto v : c) names.push_back(g.label(v));
            cliques.push_back(std::move(names));
        }
        if (cfg.output == "table")
            for (const auto& c : cliques) out << c.dump() << '\n';
        else
            out << json{{"cliques", cliques}}.dump(2) << '\n';
        return 0;
    }
    if (sub == "complement") g = complement(g);
    if (sub == "whisker") {
        if (cfg.skip.empty()) {
            g = whisker_all(g);
        } else {
            std::size_t v = g.size();
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g.label(i) == cfg.skip || std::to_string(i + 1) == cfg.skip) v = i;
            if (v == g.size()) throw UsageError("--skip: no vertex '" + cfg.skip + "'");
            g = whisker_except(g, v);
        }
    }
    if (cfg.output == "table") out << format_edge_list(g);
    else out << graph_to_json(g).dump(2) << '\n';
    return 0;
}

// Ring verbs.

int ring_verb(const std::string& sub, const Config& cfg, std::ostream& out)
{
    const auto p = load_presentation(cfg);
    if (sub == "show") {
        emit(presentation_to_json(p), cfg, out);
        return 0;
    }
    if (!p.is_monomial()) throw UsageError("ring " + sub + " needs a monomial presentation");
    const auto ideal = p.monomial_ideal();
    if (sub == "split") {
        const auto split = variable_partition_decomposable(ideal);
        json j = {{"decomposable", split.has_value()}};
        json comps = json::array();
        if (split)
            for (const auto& c : split->components) {
                json names = json::array();
                for (auto v : c) names.push_back(ideal.vars()[v]);
                comps.push_back(std::move(names));
            }
        j["components"] = comps;
        emit(j, cfg, out);
        return 0;
    }
    const auto dim = krull_dim(ideal);
    json depths = json::object();
    std::vector<FieldSpec> fields = {FieldSpec::rational(), FieldSpec::prime(2)};
    if (std::find(fields.begin(), fields.end(), p.field()) == fields.end()) fields.push_back(p.field());
    std::size_t own_depth = 0;
    for (const auto& f : fields) {
        const auto d = depth(ideal, f);
        depths[f.to_string()] = d;
        if (f == p.field()) own_depth = d;
    }
    const auto hs = hilbert_series(ideal);
    emit({{"dim", dim},
          {"depth", depths},
          {"cm", own_depth == dim},
          {"f_vector", f_vector(stanley_reisner_complex(polarize(ideal)))},
          {"hilbert_numerator", hs.numerator},
          {"multiplicity", multiplicity(ideal)}},
         cfg, out);
    return 0;
}

// artin verb.

template <class K>
json decomposition(const LocalAlgebra<K>& a, const Config& cfg)
{
    if constexpr (std::is_same_v<K, PrimeField>) {
        const auto mode = cfg.mode == "necessary" ? SearchMode::necessary : SearchMode::full;
        const auto found = pair_decomposition_search(a, mode);
        json witness = json::array();
        if (found)
            witness = {found->first.to_string(a.field(), a.vars()), found->second.to_string(a.field(), a.vars())};
        return {{"found", found.has_value()},
                {"witness", witness},
                {"order", a.order()},
                {"mode", mode == SearchMode::full ? "full" : "necessary"}};
    } else {
        return {{"available", false}, {"reason", "linear-form search needs a finite field"}, {"order", a.order()}};
    }
}

int artin_verb(const Config& cfg, std::ostream& out)
{
    const auto p = load_presentation(cfg);
    if (!cfg.mode.empty() && p.field().is_rational())
        throw UsageError("the linear-form search runs only over finite fields; pass --field fp:p");
    const std::size_t order = cfg.trunc ? cfg.trunc : 3;
    return with_field(p.field(), [&](auto field) {
        using K = decltype(field);
        LocalAlgebra<K> a(p, order);
        const auto soc = socle(a);
        json socle_strings = json::array();
        for (const auto& v : soc) socle_strings.push_back(a.to_string(v));
        const bool artinian = is_artinian_at(p, order);
        emit({{"dim_k", a.dim()},
              {"hilbert", a.hilbert_function()},
              {"socle", socle_strings},
              {"socle_dim", soc.size()},
              {"artinian", artinian},
              {"gorenstein", artinian ? json(soc.size() == 1) : json(nullptr)},
              {"decomposition", decomposition(a, cfg)}},
             cfg, out);
        return 0;
    });
}

// resolve verb.

std::size_t algebra_order(const Presentation& p, const Config& cfg)
{
    if (cfg.trunc) {
        if (!is_artinian_at(p, cfg.trunc))
            throw UsageError("m^" + std::to_string(cfg.trunc) + " is not zero in the ring; raise --trunc");
        return cfg.trunc;
    }
    if (!p.is_monomial()) throw UsageError("a non-monomial presentation needs --trunc");
    const auto order = artinian_order(p.monomial_ideal());
    if (!order) throw UsageError("the ring is not artinian");
    return *order;
}

int resolve_verb(const Config& cfg, std::ostream& out)
{
    const auto p = load_presentation(cfg);
    const auto order = algebra_order(p, cfg);
    return with_field(p.field(), [&](auto field) {
        using K = decltype(field);
        auto a = std::make_shared<const LocalAlgebra<K>>(p, order);
        const auto m = load_module(a, cfg.module);
        if (cfg.emit_module) {
            out << module_to_json(m).dump(2) << '\n';
            return 0;
        }
        const auto b = cfg.bound;
        json j = {{"module", m.label()},
                  {"dim", m.dim()},
                  {"betti", poincare_truncation(m, b)},
                  {"bass", bass_truncation(m, b)},
                  {"totally_reflexive_up_to", is_totally_reflexive_up_to(m, b) ? json(b) : json(false)},
                  {"semidualizing_up_to", is_semidualizing_up_to(m, b) ? json(b) : json(false)}};
        if (!cfg.with.empty()) {
            const auto n = load_module(a, cfg.with);
            j["with"] = n.label();
            j["ext"] = ext_dimensions(m, n, b);
            j["tor"] = tor_dimensions(m, n, b);
        }
        emit(j, cfg, out);
        return 0;
    });
}

// verify verb.

std::vector<FieldSpec> fields_or(const Config& cfg, std::vector<FieldSpec> fallback)
{
    if (cfg.field.empty()) return fallback;
    return {FieldSpec::parse(cfg.field)};
}

Example4xPart part_of(const std::string& s)
{
    if (s == "i") return Example4xPart::i;
    if (s == "ii") return Example4xPart::ii;
    if (s == "iii") return Example4xPart::iii;
    return Example4xPart::all;
}

std::vector<Report> run_suite(const std::string& sub, const Config& cfg)
{
    const auto both = std::vector<FieldSpec>{FieldSpec::rational(), FieldSpec::prime(2)};
    const auto gf2 = std::vector<FieldSpec>{FieldSpec::prime(2)};
    std::vector<Report> out;
    auto append = [&](std::vector<Report> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
    const bool all = sub == "all";
    if (all || sub == "thmA") append(run_theorem_A(cfg.max_n, fields_or(cfg, both), cfg.threads));
    if (all || sub == "thmB") append(run_theorem_B(cfg.max_n, fields_or(cfg, both), cfg.threads));
    if (all || sub == "socle")
        for (const auto& f : fields_or(cfg, gf2)) append(run_socle_cliques(cfg.max_n, f, cfg.threads));
    if (all || sub == "split") append(run_star_factorization(cfg.max_n, cfg.threads));
    if (all || sub == "gorenstein")
        for (const auto& f : fields_or(cfg, gf2)) out.push_back(run_gorenstein_exclusion(cfg.max_n, f, cfg.threads));
    if (all || sub == "ex311")
        for (std::size_t n = 1; n <= std::min<std::size_t>(3, cfg.max_n); ++n) out.push_back(check_example_3_11(n));
    if (all || sub == "ex4x") {
        std::vector<std::uint32_t> primes = {2, 3, 5, 7};
        if (!cfg.field.empty()) {
            const auto f = FieldSpec::parse(cfg.field);
            if (!f.is_prime()) throw UsageError("ex4x runs over GF(p); pass --field fp:p");
            primes = {f.characteristic()};
        }
        for (auto p : primes) append(check_example_4x(p, part_of(cfg.part)));
    }
    if (all || sub == "ex54")
        for (const auto& f : fields_or(cfg, both)) out.push_back(check_example_5_4(cfg.bound, f));
    return out;
}

int verify_verb(const std::string& sub, const Config& cfg, std::ostream& out)
{
    const auto reports = run_suite(sub, cfg);
    if (cfg.output != "table") out << reports_to_json(reports, cfg.timing).dump(2) << '\n';
    if (cfg.output != "json") out << format_table(reports);
    return failure_count(reports) == 0 ? 0 : 1;
}

void add_ring_options(CLI::App* sub, Config& cfg)
{
    sub->add_option("--input", cfg.input, "Presentation JSON file");
    sub->add_option("--ring", cfg.ring, "Named ring: sigma(G), kprime(G), kdprime(G,v), tilde(G,v), edge(G), ex311(n), "
                                        "ex45, ex46a, ex46b, ex54R, ex54S");
    sub->add_option("--field", cfg.field, "q or fp:p");
}

void add_output(CLI::App* sub, Config& cfg)
{
    sub->add_option("--output", cfg.output, "json or table")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"fiberlab: edge-ideal rings, fiber products and truncated local algebras"};
    app.name("fiberlab");
    app.require_subcommand(1);

    std::function<int()> action;

    auto* graph = app.add_subcommand("graph", "Build and transform graphs");
    graph->require_subcommand(1);
    for (const char* name : {"build", "complement", "whisker", "cliques"}) {
        auto* sub = graph->add_subcommand(name, std::string("graph ") + name);
        sub->add_option("--input", cfg.input, "Edge list or graph JSON file, or a name K<n>, P<n>, C<n>, E<n>, T<n>")
            ->required();
        add_output(sub, cfg);
        if (std::string(name) == "whisker") sub->add_option("--skip", cfg.skip, "Vertex left without a whisker");
        sub->callback([&, name] { action = [&, name] { return graph_verb(name, cfg, out); }; });
    }

    auto* ring = app.add_subcommand("ring", "Stanley-Reisner invariants of monomial presentations");
    ring->require_subcommand(1);
    for (const char* name : {"invariants", "show", "split"}) {
        auto* sub = ring->add_subcommand(name, std::string("ring ") + name);
        add_ring_options(sub, cfg);
        add_output(sub, cfg);
        sub->callback([&, name] { action = [&, name] { return ring_verb(name, cfg, out); }; });
    }

    auto* artin = app.add_subcommand("artin", "Truncation, socle and linear-form decomposition search");
    add_ring_options(artin, cfg);
    add_output(artin, cfg);
    artin->add_option("--trunc", cfg.trunc, "Truncation order N (default 3)")->check(CLI::Range(1, 64));
    artin->add_option("--mode", cfg.mode, "necessary or full")->check(CLI::IsMember({"necessary", "full"}));
    artin->callback([&] { action = [&] { return artin_verb(cfg, out); }; });

    auto* resolve = app.add_subcommand("resolve", "Betti and Bass numbers, Ext, Tor, reflexivity");
    add_ring_options(resolve, cfg);
    add_output(resolve, cfg);
    resolve->add_option("--trunc", cfg.trunc, "Order N with m^N = 0 (monomial rings: detected)")
        ->check(CLI::Range(1, 64));
    resolve->add_option("--module", cfg.module, "k, free, free:r, canonical, cyclic:f,... or a module JSON file");
    resolve->add_option("--with", cfg.with, "Second module for Ext and Tor");
    resolve->add_option("--bound", cfg.bound, "Homological bound B")
        ->check(CLI::Range(std::size_t{0}, kMaxHomologicalBound));
    resolve->add_flag("--emit-module", cfg.emit_module, "Print the module as JSON and stop");
    resolve->callback([&] { action = [&] { return resolve_verb(cfg, out); }; });

    auto* verify = app.add_subcommand("verify", "Corpus and fixture checks");
    verify->require_subcommand(1);
    for (const char* name : {"thmA", "thmB", "socle", "split", "gorenstein", "ex311", "ex4x", "ex54", "all"}) {
        auto* sub = verify->add_subcommand(name, std::string("verify ") + name);
        sub->add_option("--max-n", cfg.max_n, "Corpus cap on the number of vertices")->check(CLI::Range(1, 7));
        sub->add_option("--field", cfg.field, "q or fp:p (default: q and fp:2 where both apply)");
        sub->add_option("--bound", cfg.bound, "Homological bound for ex54")
            ->check(CLI::Range(std::size_t{0}, kMaxHomologicalBound));
        sub->add_option("--threads", cfg.threads, "Worker threads for corpus runs")->check(CLI::Range(1, 256));
        sub->add_option("--part", cfg.part, "ex4x part: i, ii, iii or all")
            ->check(CLI::IsMember({"i", "ii", "iii", "all"}));
        sub->add_flag("--timing", cfg.timing, "Include per-check milliseconds in the JSON");
        add_output(sub, cfg);
        sub->callback([&, name] { action = [&, name] { return verify_verb(name, cfg, out); }; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace fiberlab::cli
