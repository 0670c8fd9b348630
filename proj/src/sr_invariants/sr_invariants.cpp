#include "fiberlab/sr_invariants.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fiberlab {

namespace {

VertexSet to_mask(const Monomial& m)
{
    VertexSet s = 0;
    for (auto i : m.support()) s |= VertexSet{1} << i;
    return s;
}

std::vector<VertexSet> nonfaces_of(const MonomialIdeal& ideal)
{
    std::vector<VertexSet> out;
    for (const auto& g : ideal.gens()) out.push_back(to_mask(g));
    return out;
}

MonomialIdeal squarefree_model(const MonomialIdeal& ideal)
{
    return ideal.is_squarefree() ? ideal : polarize(ideal);
}

// Faces of the complex restricted to W, in faces_by_dimension layout, up to max_dim.
class InducedFaces {
public:
    InducedFaces(std::size_t n, const std::vector<VertexSet>& nonfaces) : containing_(n)
    {
        for (auto g : nonfaces)
            for (VertexSet rest = g; rest; rest &= rest - 1)
                containing_[static_cast<std::size_t>(std::countr_zero(rest))].push_back(g);
    }

    bool is_cone(VertexSet w) const
    {
        for (VertexSet rest = w; rest; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            const auto& gs = containing_[v];
            if (std::none_of(gs.begin(), gs.end(), [w](VertexSet g) { return (g & w) == g; })) return true;
        }
        return false;
    }

    std::vector<std::vector<VertexSet>> faces(VertexSet w, int max_dim) const
    {
        std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(std::max(max_dim, -1) + 2));
        out[0].push_back(0);
        extend(0, w, max_dim, out);
        for (auto& level : out) std::sort(level.begin(), level.end());
        return out;
    }

private:
    bool blocked(VertexSet face, std::size_t v) const
    {
        const auto& gs = containing_[v];
        return std::any_of(gs.begin(), gs.end(), [face](VertexSet g) { return (g & face) == g; });
    }

    void extend(VertexSet face, VertexSet candidates, int max_dim,
                std::vector<std::vector<VertexSet>>& out) const
    {
        const int d = std::popcount(face);  // dimension of face | v
        if (d > max_dim) return;
        for (VertexSet rest = candidates; rest; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            const VertexSet grown = face | (VertexSet{1} << v);
            if (blocked(grown, v)) continue;
            out[static_cast<std::size_t>(d + 1)].push_back(grown);
            extend(grown, rest & (rest - 1), max_dim, out);
        }
    }

    std::vector<std::vector<VertexSet>> containing_;
};

}  // namespace

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree())
        throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal; polarize first");
    return SimplicialComplex::from_nonfaces(ideal.num_vars(), nonfaces_of(ideal));
}

std::size_t krull_dim(const MonomialIdeal& ideal)
{
    const auto model = squarefree_model(ideal);
    const auto added = model.num_vars() - ideal.num_vars();
    const int d = stanley_reisner_complex(model).dimension();
    return static_cast<std::size_t>(d + 1) - added;
}

std::size_t projective_dimension(const MonomialIdeal& ideal, const FieldSpec& field, DepthSearch search)
{
    const auto model = squarefree_model(ideal);
    const std::size_t n = model.num_vars();
    if (n > kMaxDepthVariables)
        throw std::length_error("depth is limited to " + std::to_string(kMaxDepthVariables) +
                                " variables after polarization, got " + std::to_string(n));
    const auto nonfaces = nonfaces_of(model);
    const InducedFaces complex(n, nonfaces);
    const bool pruned = search == DepthSearch::pruned;

    // pd is at least the codimension.
    int best = 0;
    if (pruned) {
        const int dim = SimplicialComplex::from_nonfaces(n, nonfaces).dimension() + 1;
        best = static_cast<int>(n) - dim;
    }
    const VertexSet all = n == 0 ? 0 : (VertexSet{1} << n) - 1;
    for (VertexSet w = all; w != 0; --w) {
        const int size = std::popcount(w);
        const int top = pruned ? size - 2 - best : size - 1;
        if (top < -1) continue;
        if (pruned && complex.is_cone(w)) continue;
        const auto h = reduced_homology(complex.faces(w, top + 1), field, top);
        for (int j = -1; j <= top; ++j)
            if (h[static_cast<std::size_t>(j + 1)] != 0) {
                best = std::max(best, size - 1 - j);
                break;
            }
    }
    return static_cast<std::size_t>(best);
}

std::size_t depth(const MonomialIdeal& ideal, const FieldSpec& field, DepthSearch search)
{
    return ideal.num_vars() - projective_dimension(ideal, field, search);
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldSpec& field)
{
    return depth(ideal, field) == krull_dim(ideal);
}

std::vector<std::int64_t> HilbertSeries::expand(std::size_t count) const
{
    // Multiply the numerator by 1/(1-t) once per unit of dimension.
    std::vector<std::int64_t> out(count, 0);
    for (std::size_t i = 0; i < std::min(count, numerator.size()); ++i) out[i] = numerator[i];
    for (std::size_t d = 0; d < dimension; ++d)
        for (std::size_t i = 1; i < count; ++i) out[i] += out[i - 1];
    return out;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal)
{
    const auto complex = stanley_reisner_complex(squarefree_model(ideal));
    const auto f = f_vector(complex);
    HilbertSeries out;
    out.dimension = static_cast<std::size_t>(complex.dimension() + 1);
    out.numerator.assign(out.dimension + 1, 0);
    // sum_i f_{i-1} t^i (1-t)^(d-i)
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<std::int64_t> term(out.dimension - i + 1, 0);
        term[0] = 1;
        for (std::size_t k = 0; k < out.dimension - i; ++k)
            for (std::size_t m = k + 1; m > 0; --m) term[m] -= term[m - 1];
        for (std::size_t m = 0; m < term.size(); ++m)
            out.numerator[i + m] += static_cast<std::int64_t>(f[i]) * term[m];
    }
    while (!out.numerator.empty() && out.numerator.back() == 0) out.numerator.pop_back();
    return out;
}

std::uint64_t multiplicity(const MonomialIdeal& ideal)
{
    const auto complex = stanley_reisner_complex(squarefree_model(ideal));
    const int d = complex.dimension();
    return static_cast<std::uint64_t>(std::count_if(complex.facets().begin(), complex.facets().end(),
                                                    [d](VertexSet s) { return std::popcount(s) - 1 == d; }));
}

}  // namespace fiberlab
