#include "fiberlab/simplicial.hpp"

#include "fiberlab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace fiberlab {

namespace {

VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

VertexSet all_vertices(std::size_t n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (auto s : sets) {
        bool covered = std::any_of(sets.begin(), sets.end(), [s](VertexSet t) { return t != s && (s & t) == s; });
        if (!covered) out.push_back(s);
    }
    return out;
}

void maximal_faces(std::size_t n, const std::vector<VertexSet>& nonfaces, std::size_t v, VertexSet current,
                   std::vector<VertexSet>& out)
{
    if (v == n) {
        for (std::size_t u = 0; u < n; ++u) {
            if (current & bit(u)) continue;
            const VertexSet grown = current | bit(u);
            bool blocked = std::any_of(nonfaces.begin(), nonfaces.end(),
                                       [&](VertexSet g) { return (g & bit(u)) && (g & grown) == g; });
            if (!blocked) return;
        }
        out.push_back(current);
        return;
    }
    const VertexSet grown = current | bit(v);
    bool allowed = std::none_of(nonfaces.begin(), nonfaces.end(),
                                [&](VertexSet g) { return (g & bit(v)) && (g & grown) == g; });
    if (allowed) maximal_faces(n, nonfaces, v + 1, grown, out);
    maximal_faces(n, nonfaces, v + 1, current, out);
}

// Boundary map from d-faces to (d-1)-faces, d >= 1, one row per d-face.
template <class K>
std::size_t boundary_rank(const K& field, const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper)
{
    if (lower.empty() || upper.empty()) return 0;
    Matrix<K> m(field, upper.size(), lower.size());
    for (std::size_t r = 0; r < upper.size(); ++r) {
        int position = 0;
        for (VertexSet rest = upper[r]; rest; rest &= rest - 1, ++position) {
            const VertexSet face = upper[r] & ~(rest & -rest);
            auto col = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), face) - lower.begin());
            m(r, col) = position % 2 ? field.neg(field.one()) : field.one();
        }
    }
    return rank(std::move(m));
}

std::size_t boundary_rank_gf2(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper)
{
    if (lower.empty() || upper.empty()) return 0;
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < upper.size(); ++r)
        for (VertexSet rest = upper[r]; rest; rest &= rest - 1) {
            const VertexSet face = upper[r] & ~(rest & -rest);
            auto col = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), face) - lower.begin());
            rows[r][col / 64] |= std::uint64_t{1} << (col % 64);
        }
    return rank_gf2(std::move(rows), lower.size());
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<VertexSet> facets) : n_(num_vertices)
{
    if (n_ > 64) throw std::length_error("simplicial complexes are limited to 64 vertices");
    for (auto f : facets)
        if (f & ~all_vertices(n_)) throw std::out_of_range("facet uses a vertex outside the vertex set");
    facets_ = maximal_only(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_nonfaces(std::size_t num_vertices, const std::vector<VertexSet>& nonfaces)
{
    if (num_vertices > 64) throw std::length_error("simplicial complexes are limited to 64 vertices");
    if (std::any_of(nonfaces.begin(), nonfaces.end(), [](VertexSet g) { return g == 0; }))
        return void_complex(num_vertices);
    std::vector<VertexSet> facets;
    maximal_faces(num_vertices, nonfaces, 0, 0, facets);
    return SimplicialComplex(num_vertices, std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t num_vertices)
{
    return SimplicialComplex(num_vertices, {all_vertices(num_vertices)});
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::contains(VertexSet face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return (face & f) == face; });
}

SimplicialComplex SimplicialComplex::induced(VertexSet vertices) const
{
    std::vector<VertexSet> facets;
    for (auto f : facets_) facets.push_back(f & vertices);
    return SimplicialComplex(n_, std::move(facets));
}

SimplicialComplex SimplicialComplex::cone() const
{
    std::vector<VertexSet> facets;
    for (auto f : facets_) facets.push_back(f | bit(n_));
    return SimplicialComplex(n_ + 1, std::move(facets));
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_dimension(int max_dim) const
{
    std::vector<std::vector<VertexSet>> faces(static_cast<std::size_t>(std::max(max_dim, -1) + 2));
    if (is_void()) return faces;
    for (auto f : facets_) {
        // Enumerate subsets of f by the standard submask walk.
        for (VertexSet s = f;; s = (s - 1) & f) {
            const int d = std::popcount(s) - 1;
            if (d <= max_dim) faces[static_cast<std::size_t>(d + 1)].push_back(s);
            if (s == 0) break;
        }
    }
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return faces;
}

FVector f_vector(const SimplicialComplex& c)
{
    FVector out;
    for (const auto& level : c.faces_by_dimension(c.dimension())) out.push_back(level.size());
    return out;
}

std::vector<std::size_t> reduced_homology(const std::vector<std::vector<VertexSet>>& faces, const FieldSpec& field,
                                          int max_degree)
{
    const std::size_t groups = static_cast<std::size_t>(max_degree + 2);
    auto count = [&](int d) -> std::size_t {
        auto idx = static_cast<std::size_t>(d + 1);
        return idx < faces.size() ? faces[idx].size() : 0;
    };
    // rank of the boundary out of dimension d (d = 0 maps vertices onto the empty face).
    auto rank_with = [&](auto&& upper_rank) {
        std::vector<std::size_t> r(groups + 1, 0);
        for (int d = 0; d <= max_degree + 1; ++d) {
            const auto idx = static_cast<std::size_t>(d + 1);
            if (d == 0) r[idx] = (count(0) > 0 && count(-1) > 0) ? 1 : 0;
            else if (idx < faces.size()) r[idx] = upper_rank(faces[idx - 1], faces[idx]);
        }
        return r;
    };
    auto homology_from = [&](const std::vector<std::size_t>& r) {
        std::vector<std::size_t> h(groups, 0);
        for (int i = -1; i <= max_degree; ++i) {
            const auto idx = static_cast<std::size_t>(i + 1);
            h[idx] = count(i) - r[idx] - r[idx + 1];
        }
        return h;
    };

    if (field.is_prime() && field.characteristic() == 2)
        return homology_from(rank_with(boundary_rank_gf2));
    if (field.is_prime()) {
        PrimeField k(field.characteristic());
        return homology_from(rank_with([&](const auto& lo, const auto& up) { return boundary_rank(k, lo, up); }));
    }

    // Over Q: integer boundary ranks can only drop mod 2, so H̃_i(GF(2)) = 0
    // forces H̃_i(Q) = 0. Exact rational ranks are computed only where needed.
    auto r2 = rank_with(boundary_rank_gf2);
    auto h2 = homology_from(r2);
    std::map<std::size_t, std::size_t> exact;
    RationalField q;
    auto exact_rank = [&](std::size_t idx) {
        if (idx <= 1 || idx >= faces.size()) return r2[idx];
        auto it = exact.find(idx);
        if (it == exact.end()) it = exact.emplace(idx, boundary_rank(q, faces[idx - 1], faces[idx])).first;
        return it->second;
    };
    std::vector<std::size_t> h(groups, 0);
    for (std::size_t idx = 0; idx < groups; ++idx) {
        if (h2[idx] == 0) continue;
        h[idx] = count(static_cast<int>(idx) - 1) - exact_rank(idx) - exact_rank(idx + 1);
    }
    return h;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& c, const FieldSpec& field)
{
    const int d = c.dimension();
    return reduced_homology(c.faces_by_dimension(d + 1), field, d);
}

}  // namespace fiberlab
