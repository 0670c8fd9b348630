#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace fiberlab;
using namespace fiberlab::test;

namespace {

using Sizes = std::vector<std::size_t>;

template <class K>
using Ptr = std::shared_ptr<const LocalAlgebra<K>>;

Ptr<RationalField> q_algebra(const std::vector<std::string>& vars, const std::vector<std::string>& gens)
{
    return artinian<RationalField>(ideal(vars, gens), FieldSpec::rational());
}

template <class K>
Vec<K> elem(const Ptr<K>& a, const std::string& f)
{
    return a->element(Polynomial::parse(f, a->vars()));
}

// Small artinian monomial algebras over GF(3) and cyclic modules over them.
struct RandomFixture {
    Ptr<PrimeField> algebra;
    std::vector<FPModule<PrimeField>> modules;
};

RandomFixture random_fixture(std::mt19937_64& rng)
{
    static const std::vector<std::vector<std::string>> rings = {
        {"x^2"}, {"x^3"}, {"x^2", "y^2"}, {"x^2", "x*y", "y^2"}, {"x^2", "y^3", "x*y"}, {"x^3", "y^2", "x*y"},
    };
    const auto& gens = rings[rng() % rings.size()];
    const bool two = gens.size() > 1;
    const std::vector<std::string> vars = two ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
    RandomFixture r;
    r.algebra = artinian<PrimeField>(ideal(vars, gens), FieldSpec::prime(3));
    const auto& a = r.algebra;
    r.modules.push_back(residue_field(a));
    r.modules.push_back(free_module(a));
    r.modules.push_back(canonical_module(a));
    for (int k = 0; k < 3; ++k) {
        Vec<PrimeField> g = a->zero();
        for (std::size_t i = 1; i < a->dim(); ++i) g[i] = static_cast<std::uint32_t>(rng() % 3);
        r.modules.push_back(cyclic_module(a, {g}));
    }
    return r;
}

}  // namespace

TEST_SUITE("modules_homology")
{
    TEST_CASE("Betti numbers of the residue field")
    {
        const auto a1 = q_algebra({"x"}, {"x^2"});
        CHECK(poincare_truncation(residue_field(a1), 6) == Sizes{1, 1, 1, 1, 1, 1, 1});
        const auto a2 = q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"});
        CHECK(poincare_truncation(residue_field(a2), 5) == Sizes{1, 2, 4, 8, 16, 32});
        const auto a3 = q_algebra({"x", "y"}, {"x^2", "y^2"});
        CHECK(poincare_truncation(residue_field(a3), 5) == Sizes{1, 2, 3, 4, 5, 6});
        CHECK(poincare_truncation(free_module(a3, 2), 3) == Sizes{2, 0, 0, 0});
        CHECK_THROWS_AS(poincare_truncation(residue_field(a3), kMaxHomologicalBound + 1), std::length_error);
    }

    TEST_CASE("Bass numbers")
    {
        const auto a = q_algebra({"x", "y"}, {"x^2", "y^2"});
        CHECK(bass_truncation(free_module(a), 4) == Sizes{1, 0, 0, 0, 0});
        const auto b = q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"});
        CHECK(bass_truncation(free_module(b), 2) == Sizes{2, 3, 6});
        CHECK(bass_truncation(canonical_module(b), 4) == Sizes{1, 0, 0, 0, 0});
    }

    TEST_CASE("Ext and Tor examples")
    {
        const auto a = q_algebra({"x"}, {"x^2"});
        const auto k = residue_field(a);
        CHECK(ext_dimensions(k, k, 3) == Sizes{1, 1, 1, 1});
        CHECK(tor_dimensions(k, k, 3) == Sizes{1, 1, 1, 1});
        CHECK(ext(k, free_module(a), 1) == 0);
        const auto b = q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"});
        const auto kb = residue_field(b);
        CHECK(ext_dimensions(kb, kb, 3) == Sizes{1, 2, 4, 8});
        CHECK(ext_dimensions(kb, free_module(b), 2) == Sizes{2, 3, 6});
        CHECK(tor(kb, free_module(b), 1) == 0);
    }

    TEST_CASE("duals, biduality and total reflexivity")
    {
        const auto a = q_algebra({"x"}, {"x^2"});
        const auto k = residue_field(a);
        CHECK(dual_module(k).dim() == 1);
        CHECK(dual_module(free_module(a)).dim() == 2);
        CHECK(biduality_is_iso(k));
        CHECK(is_totally_reflexive_up_to(k, 4));
        const auto b = q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"});
        const auto kb = residue_field(b);
        CHECK(dual_module(kb).dim() == 2);
        CHECK_FALSE(biduality_is_iso(kb));
        CHECK_FALSE(is_totally_reflexive_up_to(kb, 2));
        CHECK(is_totally_reflexive_up_to(free_module(b, 2), 3));
    }

    TEST_CASE("semidualizing modules")
    {
        for (const auto& a : {q_algebra({"x"}, {"x^2"}), q_algebra({"x", "y"}, {"x^2", "y^2"}),
                              q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"})}) {
            CHECK(is_semidualizing_up_to(free_module(a), 3));
            CHECK(is_semidualizing_up_to(canonical_module(a), 3));
        }
        CHECK_FALSE(is_semidualizing_up_to(residue_field(q_algebra({"x"}, {"x^2"})), 3));
    }

    TEST_CASE("canonical module")
    {
        const auto b = q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"});
        const auto w = canonical_module(b);
        CHECK(w.dim() == 3);
        CHECK(minimal_generator_count(w) == 2);
        const auto g = q_algebra({"x", "y"}, {"x^2", "y^2"});
        CHECK(minimal_generator_count(canonical_module(g)) == 1);
    }

    TEST_CASE("cyclic modules")
    {
        const auto a = q_algebra({"x", "y"}, {"x^2", "y^2"});
        const auto m = cyclic_module(a, {elem(a, "x")});
        CHECK(m.dim() == 2);
        CHECK(minimal_generator_count(m) == 1);
        CHECK(cyclic_module(a, {elem(a, "x"), elem(a, "y")}).dim() == 1);
        CHECK(cyclic_module(a, {}).dim() == a->dim());
        CHECK_THROWS_AS(cyclic_module(a, {a->one()}), std::invalid_argument);
        const auto r = q_algebra({"x", "y", "z"}, {"x^2", "x*y", "y^2", "z^2"});
        const auto rz = cyclic_module(r, {elem(r, "z")});
        CHECK(rz.dim() == 3);
        CHECK(poincare_truncation(rz, 4) == Sizes{1, 1, 1, 1, 1});
        CHECK(is_totally_reflexive_up_to(rz, 4));
    }

    TEST_CASE("module construction rejects non-commuting actions")
    {
        const auto a = q_algebra({"x", "y"}, {"x^2", "y^2"});
        RationalField q;
        Matrix<RationalField> x(q, 2, 2), y(q, 2, 2);
        x(1, 0) = 1;
        y(0, 1) = 1;
        CHECK_THROWS_AS(FPModule<RationalField>(a, 2, {x, y}), std::invalid_argument);
        CHECK_THROWS_AS(FPModule<RationalField>(a, 2, {x}), std::invalid_argument);
    }

    TEST_CASE("Tor(M, k) equals the Betti numbers and Betti numbers of k never drop")
    {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 12; ++trial) {
            const auto fx = random_fixture(rng);
            const auto k = residue_field(fx.algebra);
            for (const auto& m : fx.modules) CHECK(tor_dimensions(m, k, 3) == poincare_truncation(m, 3));
            const auto b = poincare_truncation(k, 5);
            for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i + 1] >= b[i]);
        }
    }

    TEST_CASE("Ext from minimal resolutions matches brute force for i <= 2")
    {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 10; ++trial) {
            const auto fx = random_fixture(rng);
            for (const auto& m : fx.modules)
                for (const auto& n : fx.modules) {
                    const auto e = ext_dimensions(m, n, 2);
                    for (std::size_t i = 0; i <= 2; ++i) CHECK(e[i] == ext_bruteforce(m, n, i));
                }
        }
        const auto a = q_algebra({"x"}, {"x^2"});
        CHECK_THROWS_AS(ext_bruteforce(residue_field(a), residue_field(a), 3), std::invalid_argument);
    }

    TEST_CASE("Hom via variables equals Hom via the full basis")
    {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            const auto fx = random_fixture(rng);
            for (const auto& m : fx.modules)
                for (const auto& n : fx.modules) CHECK(hom_dimension(m, n) == hom_dimension_full_basis(m, n));
        }
    }

    TEST_CASE("resolution differentials compose to zero")
    {
        const auto a = q_algebra({"x", "y"}, {"x^2", "x*y", "y^2"});
        const auto res = minimal_resolution(residue_field(a), 3);
        CHECK(res.betti == Sizes{1, 2, 4, 8});
        CHECK(res.differentials.size() == 3);
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t s = 0; s < res.betti[i - 1]; ++s)
                for (std::size_t t = 0; t < res.betti[i]; ++t) CHECK(a->in_maximal_ideal(res.entry(i, s, t)));
    }
}
