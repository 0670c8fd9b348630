#include "fiberlab/graph.hpp"
#include "fiberlab/local_algebra.hpp"
#include "fiberlab/module.hpp"
#include "fiberlab/presentation.hpp"
#include "fiberlab/sr_invariants.hpp"
#include "fiberlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>

using namespace fiberlab;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF2 = FieldSpec::prime(2);
const std::size_t kThreads = 1;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && s > limit_seconds) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + "s limit)";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %-34s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
}

Outcome tally(const std::vector<Report>& rs)
{
    const auto failed = failure_count(rs);
    std::string detail = std::to_string(rs.size()) + " checks, " + std::to_string(failed) + " failed";
    for (const auto& r : rs)
        if (!r.pass) {
            detail += "; first: " + r.instance;
            break;
        }
    return {failed == 0 && !rs.empty(), detail};
}

std::vector<Report> concat(std::vector<Report> a, const std::vector<Report>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Presentation monomial(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                      FieldSpec f = FieldSpec::rational())
{
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(Polynomial::parse(g, vars));
    return Presentation(vars, ps, f);
}

template <class K>
std::shared_ptr<const LocalAlgebra<K>> artinian(const Presentation& p)
{
    return std::make_shared<const LocalAlgebra<K>>(p, *artinian_order(p.monomial_ideal()));
}

Presentation random_monomial(std::mt19937_64& rng, const std::string& prefix)
{
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(prefix + std::to_string(i + 1));
    std::vector<Polynomial> gens;
    for (std::size_t k = rng() % 4; k > 0; --k) {
        std::vector<std::uint32_t> e(n, 0);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
        Monomial m(e);
        if (m.degree() >= 2) gens.emplace_back(m);
    }
    return Presentation(vars, gens, kQ);
}

Outcome betti_of_k(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                   const std::vector<std::size_t>& expected)
{
    const auto start = std::chrono::steady_clock::now();
    const auto a = artinian<RationalField>(monomial(vars, gens));
    const auto b = poincare_truncation(residue_field(a), 6);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string got;
    for (auto x : b) got += (got.empty() ? "" : ",") + std::to_string(x);
    return {b == expected && s < 1.0, "[" + got + "]"};
}

}  // namespace

int main()
{
    criterion(1, "Sigma G CM of dim n (n<=6)", 300, [] { return tally(run_theorem_A(6, {kQ, kF2}, kThreads)); });

    criterion(2, "socle = complement cliques (n<=6)", 0, [] { return tally(run_socle_cliques(6, kF2, kThreads)); });

    criterion(3, "G~ dim n, depth n-1 (2<=n<=5)", 300, [] {
        auto o = tally(run_theorem_B(5, {kQ, kF2}, kThreads));
        o.detail += "; n=1 excluded: G~ = K1 has depth 1";
        return o;
    });

    criterion(4, "star vertex factorization (n<=6)", 0, [] { return tally(run_star_factorization(6, kThreads)); });

    criterion(5, "Betti numbers of k", 0, [] {
        const auto a = betti_of_k({"x", "y"}, {"x^2", "x*y", "y^2"}, {1, 2, 4, 8, 16, 32, 64});
        const auto b = betti_of_k({"x", "y"}, {"x^2", "y^2"}, {1, 2, 3, 4, 5, 6, 7});
        const auto c = betti_of_k({"x"}, {"x^2"}, {1, 1, 1, 1, 1, 1, 1});
        return Outcome{a.pass && b.pass && c.pass, a.detail + " " + b.detail + " " + c.detail};
    });

    criterion(6, "R/(z) totally reflexive (b=6)", 5, [] {
        return tally({check_example_5_4(6, kQ), check_example_5_4(6, kF2)});
    });

    criterion(7, "finite-field decomposition checks", 10, [] {
        auto rs = check_example_4x(5, Example4xPart::i);
        for (std::uint32_t p : {2u, 3u}) {
            rs = concat(rs, check_example_4x(p, Example4xPart::ii));
            rs = concat(rs, check_example_4x(p, Example4xPart::iii));
        }
        return tally(rs);
    });

    criterion(8, "fiber product dim additivity", 0, [] {
        std::mt19937_64 rng(20261018);
        std::size_t bad = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto s = random_monomial(rng, "x"), t = random_monomial(rng, "y");
            const std::size_t n = 1 + rng() % 5;
            const auto fp = fiber_product_presentation(s, t);
            const auto lhs = LocalAlgebra<RationalField>(fp, n).dim() + 1;
            const auto rhs = LocalAlgebra<RationalField>(s, n).dim() + LocalAlgebra<RationalField>(t, n).dim();
            bad += lhs != rhs;
        }
        return Outcome{bad == 0, "50 pairs, " + std::to_string(bad) + " mismatches"};
    });

    criterion(9, "Gorenstein exclusion (n<=5)", 0, [] {
        const auto r = run_gorenstein_exclusion(5, kF2, kThreads);
        const auto& w = r.witness;
        return Outcome{r.pass, std::to_string(w.at("decomposable").get<std::size_t>()) + " decomposable, " +
                                   std::to_string(w.at("gorenstein_decomposable").get<std::size_t>()) +
                                   " Gorenstein"};
    });

    criterion(10, "A and omega semidualizing (b=6)", 0, [] {
        const std::vector<Presentation> fixtures = {
            monomial({"x"}, {"x^2"}),
            monomial({"x", "y"}, {"x^2", "y^2"}),
            monomial({"x", "y"}, {"x^2", "x*y", "y^2"}),
            Presentation(add_squares(edge_ideal(path_graph(3))), kQ),
            monomial({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"}),
        };
        std::size_t ok = 0;
        for (const auto& p : fixtures) {
            const auto a = artinian<RationalField>(p);
            ok += is_semidualizing_up_to(free_module(a), 6) && is_semidualizing_up_to(canonical_module(a), 6);
        }
        return Outcome{ok == fixtures.size(), std::to_string(ok) + "/" + std::to_string(fixtures.size()) + " fixtures"};
    });

    criterion(11, "Ext^0/Ext^1 vs brute force", 0, [] {
        const std::vector<Presentation> rings = {
            monomial({"x"}, {"x^4"}, FieldSpec::prime(3)),
            monomial({"x", "y"}, {"x^2", "y^2"}, FieldSpec::prime(3)),
            monomial({"x", "y"}, {"x^2", "x*y", "y^3"}, FieldSpec::prime(3)),
            monomial({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"}, FieldSpec::prime(3)),
            monomial({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y*z"}, FieldSpec::prime(3)),
        };
        std::mt19937_64 rng(1118);
        std::size_t bad = 0, pairs = 0;
        auto random_module = [&](const std::shared_ptr<const LocalAlgebra<PrimeField>>& a) {
            switch (rng() % 4) {
            case 0: return residue_field(a);
            case 1: return canonical_module(a);
            default: {
                Vec<PrimeField> g = a->zero();
                for (std::size_t i = 1; i < a->dim(); ++i) g[i] = static_cast<std::uint32_t>(rng() % 3);
                return cyclic_module(a, {g});
            }
            }
        };
        while (pairs < 20) {
            const auto a = artinian<PrimeField>(rings[rng() % rings.size()]);
            if (a->dim() > 8) return Outcome{false, "fixture algebra larger than 8"};
            const auto m = random_module(a), n = random_module(a);
            const auto e = ext_dimensions(m, n, 1);
            bad += e[0] != ext_bruteforce(m, n, 0) || e[1] != ext_bruteforce(m, n, 1);
            ++pairs;
        }
        return Outcome{bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
