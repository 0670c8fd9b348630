#pragma once

#include "fiberlab/graph.hpp"
#include "fiberlab/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fiberlab {

// Monomial ideal in k[vars], always stored by its unique minimal generating set
// in display_order, so two ideals over the same variables are equal iff their
// generator lists are.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t num_vars() const { return vars_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;
    // True when some variable is itself a generator.
    bool has_linear_generator() const;

    std::size_t var_index(const std::string& name) const;
    bool contains(const Monomial& m) const;

    std::vector<std::string> gen_strings() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

// Drops generators divisible by another one; sorts the rest in display_order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// I(G) in k[labels of G].
MonomialIdeal edge_ideal(const Graph& g);

// I + (x^2 : x in vars). Throws std::invalid_argument on an unknown variable.
MonomialIdeal add_squares(const MonomialIdeal& ideal, const std::vector<std::string>& vars);
MonomialIdeal add_squares(const MonomialIdeal& ideal);

// Fresh-variable name for the j-th polarization copy of `var` (j >= 1).
std::string polarization_name(const std::string& var, std::uint32_t j);

// x^j becomes x * x§1 * ... * x§(j-1). The copies of each variable x (as many as
// its largest exponent minus one) are appended after the original variables, in
// the order of the original variables. Squarefree ideals are returned unchanged.
MonomialIdeal polarize(const MonomialIdeal& ideal);

// Applies a variable-to-variable map (unmapped variables are fixed). Variables
// that are no longer the image of anything are dropped from the ambient list.
MonomialIdeal substitute(const MonomialIdeal& ideal, const std::map<std::string, std::string>& map);

// Bijective renaming of the ambient variables.
MonomialIdeal rename(const MonomialIdeal& ideal, const std::map<std::string, std::string>& names);

// Quotient by the listed variables: they are set to zero and removed.
MonomialIdeal kill_variables(const MonomialIdeal& ideal, const std::vector<std::string>& vars);

// Graph on the variables with an edge {x, y} whenever x*y is not in the ideal.
Graph cross_graph(const MonomialIdeal& ideal);

// A split m = (first) + (second) of the maximal ideal of k[vars]/ideal along a
// partition of the variables. `components` lists every connected component of
// the cross graph; `second` is the component holding the last variable and
// `first` is the union of the others.
struct VariableSplit {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    std::vector<std::vector<std::size_t>> components;

    bool isolates(std::size_t var) const;
};

// Returns a split when the cross graph is disconnected. Throws
// std::invalid_argument when a variable is among the generators.
std::optional<VariableSplit> variable_partition_decomposable(const MonomialIdeal& ideal);

}  // namespace fiberlab
