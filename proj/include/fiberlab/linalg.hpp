#pragma once

#include "fiberlab/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace fiberlab {

template <class K>
struct RowEchelon {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination. Pivots are chosen left to right, each pivot row is
// normalized to a leading 1 and cleared above and below.
template <class K>
RowEchelon<K> rref(Matrix<K> m)
{
    const K& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        auto inv = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || f.is_zero(m(r, col))) continue;
            auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

// Forward elimination only; enough for ranks and cheaper than rref.
template <class K>
std::size_t rank(Matrix<K> m)
{
    const K& f = m.field();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        auto inv = f.inv(m(row, col));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (f.is_zero(m(r, col))) continue;
            auto factor = f.mul(m(r, col), inv);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        ++row;
    }
    return row;
}

// Basis of the right null space. Vector t has a 1 in free column free_columns[t]
// and 0 in every other free column, so the coordinates of any null vector in this
// basis are its entries at the free columns.
template <class K>
struct KernelBasis {
    std::vector<Vec<K>> vectors;
    std::vector<std::size_t> free_columns;

    std::size_t dimension() const { return vectors.size(); }

    Vec<K> coordinates(const Vec<K>& v) const
    {
        Vec<K> c;
        c.reserve(free_columns.size());
        for (auto col : free_columns) c.push_back(v[col]);
        return c;
    }
};

template <class K>
KernelBasis<K> kernel(const Matrix<K>& m)
{
    const K& f = m.field();
    auto ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    KernelBasis<K> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<K> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
        out.vectors.push_back(std::move(v));
        out.free_columns.push_back(free);
    }
    return out;
}

template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m)
{
    return kernel(m).vectors;
}

// One solution of m x = b, or nullopt when the system is inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) +
                                    ", matrix has " + std::to_string(m.rows()) + " rows");
    const K& f = m.field();
    Matrix<K> aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto ech = rref(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
    Vec<K> x(m.cols(), f.zero());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
    return x;
}

// Incrementally maintained row-echelon basis of a subspace of K^n.
template <class K>
class EchelonBasis {
public:
    EchelonBasis(K field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const K& field() const { return field_; }

    // Residue of v after elimination against the basis.
    Vec<K> reduce(Vec<K> v) const
    {
        for (const auto& [pivot, row] : rows_) {
            if (field_.is_zero(v[pivot])) continue;
            auto factor = v[pivot];
            for (std::size_t c = pivot; c < ambient_; ++c)
                if (!field_.is_zero(row[c])) v[c] = field_.sub(v[c], field_.mul(factor, row[c]));
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return is_zero_vector(field_, reduce(v)); }

    // Coefficients of v on basis(), or nullopt when v is outside the span.
    std::optional<Vec<K>> coordinates(Vec<K> v) const
    {
        Vec<K> out;
        out.reserve(rows_.size());
        for (const auto& [pivot, row] : rows_) {
            auto factor = v[pivot];
            out.push_back(factor);
            if (field_.is_zero(factor)) continue;
            for (std::size_t c = pivot; c < ambient_; ++c)
                if (!field_.is_zero(row[c])) v[c] = field_.sub(v[c], field_.mul(factor, row[c]));
        }
        if (!is_zero_vector(field_, v)) return std::nullopt;
        return out;
    }

    // Sorted lead positions of the basis rows.
    std::vector<std::size_t> pivots() const
    {
        std::vector<std::size_t> out;
        for (const auto& entry : rows_) out.push_back(entry.first);
        return out;
    }

    // Returns true when v enlarged the span.
    bool insert(const Vec<K>& v)
    {
        if (v.size() != ambient_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
        auto r = reduce(v);
        std::size_t lead = 0;
        while (lead < ambient_ && field_.is_zero(r[lead])) ++lead;
        if (lead == ambient_) return false;
        auto inv = field_.inv(r[lead]);
        for (std::size_t c = lead; c < ambient_; ++c) r[c] = field_.mul(r[c], inv);
        rows_.emplace(lead, std::move(r));
        return true;
    }

    std::vector<Vec<K>> basis() const
    {
        std::vector<Vec<K>> out;
        for (const auto& [pivot, row] : rows_) out.push_back(row);
        return out;
    }

private:
    K field_;
    std::size_t ambient_;
    std::map<std::size_t, Vec<K>> rows_;
};

template <class K>
std::size_t span_dimension(const K& f, std::size_t ambient, const std::vector<Vec<K>>& vectors)
{
    EchelonBasis<K> e(f, ambient);
    for (const auto& v : vectors) e.insert(v);
    return e.dimension();
}

// Rank over GF(2) of a bit matrix; each row is packed little-endian into words.
std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols);

}  // namespace fiberlab
