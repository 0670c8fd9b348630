#pragma once

#include "fiberlab/field.hpp"
#include "fiberlab/monomial_ideal.hpp"
#include "fiberlab/simplicial.hpp"

#include <cstdint>
#include <vector>

namespace fiberlab {

// Faces are the squarefree monomials outside the ideal; vertex i is variable i.
// Throws std::invalid_argument on a non-squarefree ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

// Krull dimension of k[vars]/ideal. Non-squarefree ideals are polarized first.
std::size_t krull_dim(const MonomialIdeal& ideal);

inline constexpr std::size_t kMaxDepthVariables = 14;

enum class DepthSearch {
    // Skips induced subcomplexes that are cones and homology degrees that
    // cannot raise the projective dimension above the codimension bound.
    pruned,
    // Every induced subcomplex, every homology degree.
    exhaustive,
};

// Projective dimension over k[vars] via Hochster's formula
// beta_{i,W} = dim H~_{|W|-i-1}(Delta_W; k). Polarizes non-squarefree ideals.
// Throws std::length_error when more than kMaxDepthVariables variables remain.
std::size_t projective_dimension(const MonomialIdeal& ideal, const FieldSpec& field,
                                 DepthSearch search = DepthSearch::pruned);

// depth = #vars - pd (Auslander-Buchsbaum).
std::size_t depth(const MonomialIdeal& ideal, const FieldSpec& field, DepthSearch search = DepthSearch::pruned);

bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldSpec& field);

// H(t) = numerator(t) / (1 - t)^dimension, numerator with trailing zeros removed.
struct HilbertSeries {
    std::vector<std::int64_t> numerator;
    std::size_t dimension = 0;

    // Coefficients of t^0..t^(count-1) in the power series expansion.
    std::vector<std::int64_t> expand(std::size_t count) const;
};

// Series of the polarized ring when the ideal is not squarefree.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

// Number of facets of maximal dimension (after polarization).
std::uint64_t multiplicity(const MonomialIdeal& ideal);

}  // namespace fiberlab
