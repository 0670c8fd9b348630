#include "helpers.hpp"

#include "fiberlab/graph.hpp"
#include "fiberlab/sr_invariants.hpp"

#include <doctest.h>

#include <random>

using namespace fiberlab;
using namespace fiberlab::test;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF2 = FieldSpec::prime(2);

MonomialIdeal random_ideal(std::mt19937_64& rng, bool squarefree)
{
    const std::size_t n = 2 + rng() % 4;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
    std::vector<Monomial> gens;
    const std::size_t count = 1 + rng() % 4;
    while (gens.size() < count) {
        std::vector<std::uint32_t> e(n, 0);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (squarefree ? 2 : 3));
        Monomial m(e);
        if (m.degree() >= 2) gens.push_back(m);
    }
    return MonomialIdeal(vars, gens);
}

}  // namespace

TEST_SUITE("sr_invariants")
{
    TEST_CASE("Stanley-Reisner complexes")
    {
        const auto k2 = stanley_reisner_complex(edge_ideal(complete_graph(2)));
        CHECK(k2.facets() == std::vector<VertexSet>{0b01, 0b10});
        const auto s2 = stanley_reisner_complex(edge_ideal(whisker_all(complete_graph(2))));
        // vertices v1, v2, w1, w2 = bits 0..3
        CHECK(s2.facets() == std::vector<VertexSet>{0b0110, 0b1001, 0b1100});
        CHECK(stanley_reisner_complex(ideal({"a", "b"}, {})).facets() == std::vector<VertexSet>{0b11});
        CHECK_THROWS_AS(stanley_reisner_complex(ideal({"x"}, {"x^2"})), std::invalid_argument);
    }

    TEST_CASE("Krull dimension")
    {
        CHECK(krull_dim(edge_ideal(whisker_all(complete_graph(2)))) == 2);
        CHECK(krull_dim(add_squares(edge_ideal(path_graph(3)), {"v1", "v2"})) == 1);
        CHECK(krull_dim(ideal({"a", "b", "c"}, {})) == 3);
        CHECK(krull_dim(ideal({"x", "y"}, {"x^2", "x*y", "y^2"})) == 0);
    }

    TEST_CASE("depth and Cohen-Macaulayness")
    {
        for (const auto& f : {kQ, kF2}) {
            CHECK(depth(edge_ideal(whisker_all(complete_graph(2))), f) == 2);
            CHECK(depth(edge_ideal(whisker_except(complete_graph(2), 1)), f) == 1);
            const auto kdp = add_squares(edge_ideal(path_graph(3)), {"v1", "v3"});
            CHECK(depth(kdp, f) == 0);
            CHECK_FALSE(is_cohen_macaulay(kdp, f));
            CHECK(is_cohen_macaulay(ideal({"a", "b"}, {}), f));
        }
        CHECK(is_cohen_macaulay(edge_ideal(complete_graph(3)), kQ));
        CHECK(is_cohen_macaulay(edge_ideal(Graph(4, {{0, 1}, {2, 3}})), kQ));
        CHECK_FALSE(is_cohen_macaulay(edge_ideal(cycle_graph(4)), kQ));
        std::vector<std::string> many;
        for (int i = 0; i < 15; ++i) many.push_back("x" + std::to_string(i));
        CHECK_THROWS_AS(depth(MonomialIdeal(many, {}), kQ), std::length_error);
    }

    TEST_CASE("Sigma G is CM of dimension n for every graph on <= 5 vertices")
    {
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& g : enumerate_graphs(n)) {
                const auto s = edge_ideal(whisker_all(g));
                CHECK(krull_dim(s) == n);
                for (const auto& f : {kQ, kF2}) CHECK(is_cohen_macaulay(s, f));
            }
    }

    TEST_CASE("G~ has dimension n and depth n - 1 when a star vertex is left bare (n <= 4)")
    {
        for (std::size_t n = 2; n <= 4; ++n)
            for (const auto& g : enumerate_graphs(n))
                for (auto v : star_vertices(g)) {
                    const auto t = edge_ideal(whisker_except(g, v));
                    CHECK(krull_dim(t) == n);
                    for (const auto& f : {kQ, kF2}) CHECK(depth(t, f) == n - 1);
                }
    }

    TEST_CASE("characteristic dependence: the real projective plane")
    {
        // Six-vertex triangulation of RP^2: H~_1 = Z/2, so CM only away from characteristic 2.
        const std::vector<VertexSet> facets = {7, 13, 22, 25, 26, 35, 42, 44, 49, 52};
        const SimplicialComplex rp2(6, facets);
        CHECK(reduced_homology(rp2, kQ) == std::vector<std::size_t>{0, 0, 0, 0});
        CHECK(reduced_homology(rp2, kF2) == std::vector<std::size_t>{0, 0, 1, 1});
        std::vector<Monomial> nonfaces;
        std::vector<std::string> vars;
        for (int i = 0; i < 6; ++i) vars.push_back("x" + std::to_string(i + 1));
        for (VertexSet s = 1; s < 64; ++s) {
            if (rp2.contains(s)) continue;
            bool minimal = true;
            for (int i = 0; i < 6; ++i)
                if ((s >> i & 1) && !rp2.contains(s & ~(VertexSet{1} << i))) minimal = false;
            if (!minimal) continue;
            std::vector<std::uint32_t> e(6, 0);
            for (int i = 0; i < 6; ++i) e[i] = s >> i & 1;
            nonfaces.emplace_back(e);
        }
        const MonomialIdeal i(vars, nonfaces);
        CHECK(stanley_reisner_complex(i) == rp2);
        CHECK(is_cohen_macaulay(i, kQ));
        CHECK_FALSE(is_cohen_macaulay(i, kF2));
        CHECK(depth(i, kF2, DepthSearch::exhaustive) == depth(i, kF2));
    }

    TEST_CASE("pruned and exhaustive searches agree; depth <= dim")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 150; ++trial) {
            const auto i = random_ideal(rng, trial % 2 == 0);
            for (const auto& f : {kQ, kF2}) {
                const auto pd = projective_dimension(i, f);
                CHECK(pd == projective_dimension(i, f, DepthSearch::exhaustive));
                CHECK(depth(i, f) <= krull_dim(i));
            }
        }
    }

    TEST_CASE("cones have vanishing reduced homology")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            std::vector<VertexSet> facets;
            for (int k = 0; k < 1 + static_cast<int>(rng() % 5); ++k) facets.push_back(1 + rng() % ((VertexSet{1} << n) - 1));
            const auto c = SimplicialComplex(n, facets).cone();
            for (const auto& f : {kQ, kF2})
                for (auto h : reduced_homology(c, f)) CHECK(h == 0);
        }
    }

    TEST_CASE("f-vectors")
    {
        CHECK(f_vector(stanley_reisner_complex(edge_ideal(whisker_all(complete_graph(2))))) == FVector{1, 4, 3});
        CHECK(f_vector(SimplicialComplex::simplex(2)) == FVector{1, 2, 1});
        CHECK(f_vector(SimplicialComplex(2, {0b01, 0b10})) == FVector{1, 2});
    }

    TEST_CASE("Hilbert series and multiplicity")
    {
        auto h = hilbert_series(ideal({"x"}, {}));
        CHECK(h.numerator == std::vector<std::int64_t>{1});
        CHECK(h.dimension == 1);
        h = hilbert_series(edge_ideal(complete_graph(2)));
        CHECK(h.numerator == std::vector<std::int64_t>{1, 1});
        CHECK(h.dimension == 1);
        h = hilbert_series(edge_ideal(whisker_all(complete_graph(2))));
        CHECK(h.numerator == std::vector<std::int64_t>{1, 2});
        CHECK(h.dimension == 2);
        CHECK(h.expand(4) == std::vector<std::int64_t>{1, 4, 7, 10});
        CHECK(multiplicity(ideal({"x", "y"}, {})) == 1);
        CHECK(multiplicity(edge_ideal(complete_graph(2))) == 2);
        CHECK(multiplicity(edge_ideal(whisker_all(complete_graph(2)))) == 3);
    }

    TEST_CASE("numerator at 1 is the multiplicity; expansion matches truncated Hilbert functions")
    {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 80; ++trial) {
            const auto i = random_ideal(rng, trial % 2 == 0);
            const auto hs = hilbert_series(i);
            std::int64_t at_one = 0;
            for (auto c : hs.numerator) at_one += c;
            CHECK(at_one == static_cast<std::int64_t>(multiplicity(i)));

            // Polarization adds variables; the original ring has the same numerator over (1-t)^dim.
            const HilbertSeries original{hs.numerator, krull_dim(i)};
            const std::size_t order = 5;
            LocalAlgebra<PrimeField> a(Presentation(i, kF2), order);
            auto hf = a.hilbert_function();
            hf.resize(order, 0);
            const auto series = original.expand(order);
            for (std::size_t j = 0; j < order; ++j) CHECK(series[j] == static_cast<std::int64_t>(hf[j]));
        }
    }
}
