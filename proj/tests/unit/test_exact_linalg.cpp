#include "fiberlab/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace fiberlab;

namespace {

template <class K>
Matrix<K> from_ints(const K& f, const std::vector<std::vector<long long>>& rows)
{
    Matrix<K> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_int(rows[r][c]);
    return m;
}

template <class K>
bool equal(const Matrix<K>& a, const Matrix<K>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c)) return false;
    return true;
}

template <class K>
Matrix<K> random_matrix(const K& f, std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density)
{
    Matrix<K> m(f, rows, cols);
    std::uniform_int_distribution<int> pct(0, 99), val(-4, 4);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (pct(rng) < density) m(r, c) = f.from_int(val(rng));
    return m;
}

template <class K>
void check_invariants(const K& f, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(f, rng, dim(rng), dim(rng), 40);
        const auto ech = rref(m);
        const auto ker = kernel_basis(m);
        CHECK(ech.rank() + ker.size() == m.cols());
        CHECK(rank(m) == ech.rank());
        CHECK(equal(rref(ech.reduced).reduced, ech.reduced));
        for (const auto& v : ker) CHECK(is_zero_vector(f, m * v));
    }
}

}  // namespace

TEST_SUITE("exact_linalg")
{
    TEST_CASE("rref examples")
    {
        RationalField q;
        auto id = Matrix<RationalField>::identity(q, 2);
        auto e = rref(id);
        CHECK(equal(e.reduced, id));
        CHECK(e.pivots == std::vector<std::size_t>{0, 1});

        e = rref(from_ints(q, {{1, 2}, {2, 4}}));
        CHECK(equal(e.reduced, from_ints(q, {{1, 2}, {0, 0}})));
        CHECK(e.pivots == std::vector<std::size_t>{0});

        PrimeField f2(2);
        auto e2 = rref(from_ints(f2, {{1, 1}, {1, 1}}));
        CHECK(equal(e2.reduced, from_ints(f2, {{1, 1}, {0, 0}})));
        CHECK(e2.pivots == std::vector<std::size_t>{0});
    }

    TEST_CASE("kernel examples")
    {
        RationalField q;
        CHECK(kernel_basis(Matrix<RationalField>::identity(q, 3)).empty());
        CHECK(kernel_basis(Matrix<RationalField>(q, 2, 3)).size() == 3);
        PrimeField f2(2);
        const auto k = kernel_basis(from_ints(f2, {{1, 1, 0}, {0, 1, 1}}));
        REQUIRE(k.size() == 1);
        CHECK(k[0] == Vec<PrimeField>{1, 1, 1});
    }

    TEST_CASE("solve examples")
    {
        RationalField q;
        const Vec<RationalField> b = {mpq_class(3, 7), mpq_class(-2)};
        CHECK(solve(Matrix<RationalField>::identity(q, 2), b) == b);
        CHECK_FALSE(solve(Matrix<RationalField>(q, 2, 2), b).has_value());
        PrimeField f5(5);
        CHECK(solve(from_ints(f5, {{2}}), Vec<PrimeField>{1}) == Vec<PrimeField>{3});
        CHECK_THROWS_AS(solve(Matrix<RationalField>::identity(q, 3), b), std::invalid_argument);
    }

    TEST_CASE("rank + nullity, idempotent rref, kernel vectors are null")
    {
        check_invariants(RationalField{}, 1);
        check_invariants(PrimeField(2), 2);
        check_invariants(PrimeField(5), 3);
        check_invariants(PrimeField(2147483647u), 4);
    }

    TEST_CASE("exact rational arithmetic: Hilbert matrix system")
    {
        RationalField q;
        const std::size_t n = 6;
        Matrix<RationalField> h(q, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) h(r, c) = mpq_class(1, static_cast<unsigned long>(r + c + 1));
        Vec<RationalField> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = mpq_class(static_cast<long>(i) - 2, 3);
            x[i].canonicalize();
        }
        const auto b = h * x;
        const auto sol = solve(h, b);
        REQUIRE(sol.has_value());
        CHECK(*sol == x);
        CHECK(rank(h) == n);
    }

    TEST_CASE("GF(2) bit rank matches prime-field rank")
    {
        std::mt19937_64 rng(7);
        PrimeField f2(2);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t rows = rng() % 12, cols = 1 + rng() % 130;
            Matrix<PrimeField> m(f2, rows, cols);
            std::vector<std::vector<std::uint64_t>> bits(rows, std::vector<std::uint64_t>((cols + 63) / 64, 0));
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    if (rng() % 3 == 0) {
                        m(r, c) = 1;
                        bits[r][c / 64] |= std::uint64_t{1} << (c % 64);
                    }
            CHECK(rank_gf2(bits, cols) == rank(m));
        }
    }

    TEST_CASE("echelon basis coordinates")
    {
        RationalField q;
        EchelonBasis<RationalField> e(q, 3);
        CHECK(e.insert({1, 2, 0}));
        CHECK(e.insert({0, 1, 1}));
        CHECK_FALSE(e.insert({1, 3, 1}));
        CHECK(e.dimension() == 2);
        const auto basis = e.basis();
        const Vec<RationalField> v = {2, 5, 1};
        const auto c = e.coordinates(v);
        REQUIRE(c.has_value());
        Vec<RationalField> back(3, 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[i] * basis[i][j];
        CHECK(back == v);
        CHECK_FALSE(e.coordinates({0, 0, 1}).has_value());
    }

    TEST_CASE("field specs and prime field arithmetic")
    {
        CHECK(FieldSpec::parse("q").is_rational());
        CHECK(FieldSpec::parse("fp:5").characteristic() == 5);
        CHECK(FieldSpec::parse("fp:7").to_string() == "fp:7");
        CHECK_THROWS_AS(FieldSpec::parse("fp:4"), std::invalid_argument);
        CHECK_THROWS_AS(FieldSpec::parse("fp:"), std::invalid_argument);
        CHECK_THROWS_AS(FieldSpec::parse("r"), std::invalid_argument);
        PrimeField f7(7);
        for (std::uint32_t a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
        CHECK(f7.from_rational(mpq_class(1, 2)) == 4);
        CHECK(f7.from_int(-1) == 6);
        CHECK_THROWS_AS(f7.from_rational(mpq_class(1, 7)), std::domain_error);
        CHECK_THROWS_AS(f7.inv(0), std::domain_error);
        RationalField q;
        CHECK(q.add(mpq_class(1, 3), mpq_class(1, 6)) == mpq_class(1, 2));
        CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
    }
}
