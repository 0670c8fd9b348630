#include "helpers.hpp"

#include "fiberlab/graph.hpp"

#include <doctest.h>

using namespace fiberlab;
using namespace fiberlab::test;

namespace {

using Strings = std::vector<std::string>;

std::map<std::string, std::string> fold(const Graph& g)
{
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < g.size(); ++i) m[whisker_label(g.label(i))] = g.label(i);
    return m;
}

}  // namespace

TEST_SUITE("monomial_ideal")
{
    TEST_CASE("edge ideals")
    {
        CHECK(edge_ideal(complete_graph(2)).gen_strings() == Strings{"v1*v2"});
        CHECK(edge_ideal(whisker_all(complete_graph(2))).gen_strings() == Strings{"v1*v2", "v1*w1", "v2*w2"});
        CHECK(edge_ideal(edgeless_graph(3)).is_zero());
        CHECK(edge_ideal(whisker_all(complete_graph(3))).gens().size() == 6);
    }

    TEST_CASE("add_squares")
    {
        CHECK(add_squares(edge_ideal(path_graph(3))).gen_strings() ==
              Strings{"v1^2", "v1*v2", "v2^2", "v2*v3", "v3^2"});
        CHECK(add_squares(ideal({"x"}, {}), {"x"}).gen_strings() == Strings{"x^2"});
        const auto xx = ideal({"x"}, {"x^2"});
        CHECK(add_squares(xx, {"x"}) == xx);
        CHECK_THROWS_AS(add_squares(xx, {"y"}), std::invalid_argument);
    }

    TEST_CASE("polarize")
    {
        const auto sq = edge_ideal(cycle_graph(4));
        CHECK(polarize(sq) == sq);
        const auto p = polarize(ideal({"x"}, {"x^2"}));
        CHECK(p.vars() == Strings{"x", polarization_name("x", 1)});
        CHECK(p.gens() == std::vector<Monomial>{Monomial(std::vector<std::uint32_t>{1, 1})});
        CHECK(polarize(p) == p);
        const auto q = polarize(ideal({"x", "y"}, {"x^3", "x*y^2"}));
        CHECK(q.num_vars() == 5);
        CHECK(q.is_squarefree());
    }

    TEST_CASE("polarizing k[G]' gives I(Sigma G) for all graphs on <= 5 vertices")
    {
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& g : enumerate_graphs(n)) {
                std::map<std::string, std::string> names;
                for (std::size_t i = 0; i < n; ++i)
                    names[polarization_name(g.label(i), 1)] = whisker_label(g.label(i));
                CHECK(rename(polarize(add_squares(edge_ideal(g))), names) == edge_ideal(whisker_all(g)));
            }
    }

    TEST_CASE("substitute")
    {
        const auto s2 = edge_ideal(whisker_all(complete_graph(2)));
        const auto folded = substitute(s2, {{"w1", "v1"}, {"w2", "v2"}});
        CHECK(folded.vars() == Strings{"v1", "v2"});
        CHECK(folded.gen_strings() == Strings{"v1^2", "v1*v2", "v2^2"});
        CHECK(substitute(s2, {}) == s2);
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& g : enumerate_graphs(n))
                CHECK(substitute(edge_ideal(whisker_all(g)), fold(g)) == add_squares(edge_ideal(g)));

        const auto p = Presentation(s2, FieldSpec::prime(3));
        const auto sp = substitute(p, {{"w1", "v1"}, {"w2", "v2"}});
        CHECK(sp.monomial_ideal() == folded);
        CHECK(sp.field() == FieldSpec::prime(3));
        CHECK(substitute(p, {}) == p.minimalized());
    }

    TEST_CASE("fiber product presentations")
    {
        auto fp = fiber_product_presentation(pres({"x"}, {"x^2"}), pres({"y"}, {"y^2"}));
        CHECK(fp.vars() == Strings{"x", "y"});
        CHECK(fp.monomial_ideal().gen_strings() == Strings{"x^2", "x*y", "y^2"});
        fp = fiber_product_presentation(pres({"x"}, {}), pres({"y"}, {}));
        CHECK(fp.monomial_ideal().gen_strings() == Strings{"x*y"});
        fp = fiber_product_presentation(pres({"x"}, {"x^3"}), pres({"y", "z"}, {"y*z"}));
        CHECK(fp.monomial_ideal().gen_strings() == Strings{"x*y", "x*z", "y*z", "x^3"});
        CHECK(fp.gens().size() == 1 + 1 + 1 * 2);
        const auto clash = fiber_product_presentation(pres({"x", "y"}, {"x^2", "y^2"}), pres({"x"}, {"x^3"}));
        CHECK(clash.vars() == Strings{"x", "y", "x'"});
        CHECK(clash.gens().size() == 2 + 1 + 2 * 1);
        CHECK_THROWS_AS(fiber_product_presentation(pres({"x"}, {}), pres({"y"}, {}, FieldSpec::prime(2))),
                        std::invalid_argument);
    }

    TEST_CASE("membership")
    {
        const auto xy = ideal({"x", "y"}, {"x*y"});
        CHECK(xy.contains(Polynomial::parse("x^2*y", xy.vars()).leading_monomial()));
        CHECK_FALSE(xy.contains(Polynomial::parse("x^2", xy.vars()).leading_monomial()));
        const auto k3 = edge_ideal(complete_graph(3));
        CHECK(k3.contains(Monomial(std::vector<std::uint32_t>{1, 1, 1})));
        CHECK(ideal({"x", "y"}, {"x*y", "x^2*y", "x*y"}).gen_strings() == Strings{"x*y"});
    }

    TEST_CASE("variable partition splits")
    {
        const auto a2 = ideal({"x", "y"}, {"x^2", "y^2", "x*y"});
        auto s = variable_partition_decomposable(a2);
        REQUIRE(s.has_value());
        CHECK(s->first == std::vector<std::size_t>{0});
        CHECK(s->second == std::vector<std::size_t>{1});

        s = variable_partition_decomposable(add_squares(edge_ideal(path_graph(3))));
        REQUIRE(s.has_value());
        CHECK(s->first == std::vector<std::size_t>{1});
        CHECK(s->second == std::vector<std::size_t>{0, 2});
        CHECK(s->isolates(1));
        CHECK_FALSE(s->isolates(0));

        CHECK_FALSE(variable_partition_decomposable(ideal({"x", "y"}, {"x^2"})).has_value());
        CHECK_THROWS_AS(variable_partition_decomposable(ideal({"x", "y"}, {"x", "y^2"})), std::invalid_argument);
    }

    TEST_CASE("split iff complement disconnected; star vertices isolated (n <= 5)")
    {
        for (std::size_t n = 2; n <= 5; ++n)
            for (const auto& g : enumerate_graphs(n)) {
                const auto s = variable_partition_decomposable(add_squares(edge_ideal(g)));
                CHECK(s.has_value() == !is_connected(complement(g)));
                if (s)
                    for (auto v : star_vertices(g)) CHECK(s->isolates(v));
                if (is_star_vertex(g, n - 1)) {
                    REQUIRE(s.has_value());
                    CHECK(s->second == std::vector<std::size_t>{n - 1});
                }
            }
    }

    TEST_CASE("kill and rename")
    {
        const auto s = ideal({"x", "y", "z"}, {"x^2", "x*y", "y^2", "x*z"});
        const auto k = kill_variables(s, {"z"});
        CHECK(k.vars() == Strings{"x", "y"});
        CHECK(k.gen_strings() == Strings{"x^2", "x*y", "y^2"});
        CHECK(kill_variables(s, {"x"}).gen_strings() == Strings{"y^2"});
        const auto r = rename(k, {{"x", "a"}, {"y", "b"}});
        CHECK(r.gen_strings() == Strings{"a^2", "a*b", "b^2"});
        CHECK_THROWS(rename(k, {{"x", "y"}}));
        CHECK(cross_graph(k).edge_count() == 0);
    }

    TEST_CASE("polynomials and presentations")
    {
        const Strings v = {"x", "y"};
        const auto f = Polynomial::parse("x^2 + 2*x*y - 1/2*y^2", v);
        CHECK(f.terms().size() == 3);
        CHECK(f.to_string(v) == Polynomial::parse(f.to_string(v), v).to_string(v));
        CHECK(Polynomial::parse("x*y - y*x", v).is_zero());
        CHECK_THROWS_AS(Polynomial::parse("x + z", v), std::invalid_argument);
        CHECK_THROWS_AS(Polynomial::parse("x^", v), std::invalid_argument);
        CHECK_THROWS_AS(Polynomial::parse("1/0*x", v), std::invalid_argument);

        CHECK_THROWS_AS(pres(v, {"x+1"}), std::invalid_argument);
        const auto p = pres(v, {"x^2+y^2"}, FieldSpec::prime(5));
        CHECK_FALSE(p.is_monomial());
        CHECK_THROWS_AS(p.monomial_ideal(), std::invalid_argument);
        CHECK(presentation_from_json(presentation_to_json(p)) == p);
        const auto m = pres(v, {"x*y", "x^2*y", "2*y^3"});
        CHECK(m.minimalized().gen_strings() == Strings{"x*y", "y^3"});
        CHECK(presentation_from_json(presentation_to_json(m)) == m);
        CHECK(m.with_field(FieldSpec::prime(2)).field() == FieldSpec::prime(2));
        CHECK_THROWS_AS(presentation_from_json(nlohmann::json{{"vars", v}}), std::invalid_argument);
    }
}
