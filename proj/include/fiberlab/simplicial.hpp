#pragma once

#include "fiberlab/field.hpp"
#include "fiberlab/graph.hpp"

#include <cstdint>
#include <vector>

namespace fiberlab {

// Simplicial complex on vertices 0..n-1 given by its facets (as vertex bitmasks).
// The void complex has no facets; the empty complex {∅} has the single facet 0.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::size_t num_vertices, std::vector<VertexSet> facets);
    // Complex of all sets containing none of the given (minimal) non-faces.
    static SimplicialComplex from_nonfaces(std::size_t num_vertices, const std::vector<VertexSet>& nonfaces);
    static SimplicialComplex void_complex(std::size_t num_vertices) { return {num_vertices, {}}; }
    static SimplicialComplex simplex(std::size_t num_vertices);

    std::size_t num_vertices() const { return n_; }
    // Sorted ascending.
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    // -1 for {∅}; the void complex also reports -1.
    int dimension() const;
    bool contains(VertexSet face) const;

    SimplicialComplex induced(VertexSet vertices) const;
    // Cone over the complex with apex a new last vertex.
    SimplicialComplex cone() const;

    // faces[d + 1] lists the d-dimensional faces (sorted), d = -1..max_dim.
    std::vector<std::vector<VertexSet>> faces_by_dimension(int max_dim) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> facets_;
};

// Entry i is f_{i-1}, the number of (i-1)-dimensional faces.
using FVector = std::vector<std::uint64_t>;

FVector f_vector(const SimplicialComplex& c);

// Reduced homology dimensions over the field: entry i + 1 is dim H̃_i, for
// i = -1..max_degree. `faces` is in faces_by_dimension layout and must list the
// faces up to dimension max_degree + 1 (fewer means those groups are zero).
std::vector<std::size_t> reduced_homology(const std::vector<std::vector<VertexSet>>& faces, const FieldSpec& field,
                                          int max_degree);
std::vector<std::size_t> reduced_homology(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace fiberlab
