#pragma once

#include "fiberlab/field.hpp"
#include "fiberlab/linalg.hpp"
#include "fiberlab/presentation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fiberlab {

inline constexpr std::size_t kMaxAlgebraDimension = 2048;
inline constexpr std::size_t kFullTableCheckDimension = 60;
inline constexpr std::size_t kSampledTableChecks = 1000;

// The truncation k[x]/(I + m^N) as an explicit finite-dimensional local algebra.
// The basis is a set of monomials of degree < N in ascending degree order, so
// basis()[0] is 1 and the remaining basis elements span the maximal ideal.
template <class K>
class LocalAlgebra {
public:
    using Element = typename K::Element;
    using Vector = Vec<K>;

    // Throws std::invalid_argument for N = 0 or a field mismatch,
    // std::length_error when the algebra is larger than kMaxAlgebraDimension.
    LocalAlgebra(const Presentation& p, std::size_t order);

    const K& field() const { return field_; }
    const Presentation& presentation() const { return presentation_; }
    const std::vector<std::string>& vars() const { return presentation_.vars(); }
    std::size_t num_vars() const { return presentation_.num_vars(); }
    std::size_t order() const { return order_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }

    Vector zero() const { return Vector(dim(), field_.zero()); }
    Vector unit(std::size_t i) const;
    Vector one() const { return unit(0); }
    // Image of variable i; zero when N = 1.
    const Vector& variable(std::size_t i) const { return var_images_.at(i); }
    // Zero for monomials of degree >= N.
    Vector normal_form(const Monomial& m) const;
    // Throws std::domain_error when a coefficient is undefined in the field.
    Vector element(const Polynomial& f) const;

    Vector multiply(const Vector& a, const Vector& b) const;
    // b_i * v for the basis element b_i.
    Vector multiply_basis(std::size_t i, const Vector& v) const;
    // Column j is x_i * b_j.
    const Matrix<K>& variable_action(std::size_t i) const { return var_actions_.at(i); }
    // Matrix of multiplication by a.
    Matrix<K> action(const Vector& a) const;

    bool in_maximal_ideal(const Vector& v) const { return field_.is_zero(v.at(0)); }

    // Entry j is dim_k m^j for j = 0..N; the last entry is 0.
    const std::vector<std::size_t>& filtration() const { return filtration_; }
    // dim m^j / m^(j+1), trailing zeros removed.
    std::vector<std::size_t> hilbert_function() const;

    std::string to_string(const Vector& v) const;

private:
    using Sparse = std::vector<std::pair<std::size_t, Element>>;

    void build_monomial(const MonomialIdeal& ideal);
    void build_general();
    void finish();
    void verify_table() const;
    const Sparse* product(std::size_t i, std::size_t j) const;
    Vector densify(const Sparse& s) const;

    K field_;
    Presentation presentation_;
    std::size_t order_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> forms_index_;
    std::vector<Sparse> forms_;
    std::vector<std::int32_t> products_;
    std::vector<Vector> var_images_;
    std::vector<Matrix<K>> var_actions_;
    std::vector<std::size_t> filtration_;
};

template <class K>
LocalAlgebra<K> truncate(const Presentation& p, std::size_t order)
{
    return LocalAlgebra<K>(p, order);
}

// Monomials outside the ideal of degree < bound, ascending in display_order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, std::uint32_t bound);

// Smallest N with m^N contained in the ideal, or nullopt if the quotient is not artinian.
std::optional<std::size_t> artinian_order(const MonomialIdeal& ideal);

// True when m^N already lies in the ideal (in the local ring), so truncating at N
// loses nothing. Monomial ideals: every monomial of degree N is in the ideal.
// Otherwise: the truncations at N and N + 1 have equal dimension (Nakayama).
bool is_artinian_at(const Presentation& p, std::size_t order);

template <class K>
std::vector<Vec<K>> socle(const LocalAlgebra<K>& a);

// The socle basis as monomials; throws std::logic_error if a basis vector is not
// a monomial (possible only for non-monomial presentations).
template <class K>
std::vector<Monomial> monomial_socle(const LocalAlgebra<K>& a);

// Socle dimension 1. Throws std::domain_error unless the truncation order
// already kills m (see is_artinian_at).
template <class K>
bool is_gorenstein_artinian(const LocalAlgebra<K>& a);

// k-basis of the ideal generated by the given elements.
template <class K>
EchelonBasis<K> ideal_span(const LocalAlgebra<K>& a, const std::vector<Vec<K>>& gens);

// m = I + J with I and J both nonzero and I ∩ J = 0. Throws std::invalid_argument
// when a generator is not in m.
template <class K>
bool ideal_direct_sum_check(const LocalAlgebra<K>& a, const std::vector<Vec<K>>& gens1,
                            const std::vector<Vec<K>>& gens2);

// Linear form sum c_i x_i, coefficients indexed by the ambient variables.
template <class K>
struct LinearForm {
    std::vector<typename K::Element> coefficients;

    std::string to_string(const K& field, const std::vector<std::string>& vars) const;
    Vec<K> in(const LocalAlgebra<K>& a) const;
};

enum class SearchMode { necessary, full };

inline constexpr std::uint64_t kMaxSearchLines = 400;

// Exhaustive search over pairs of distinct lines in the span of a set of
// variables forming a basis of m/m^2. Lines are normalized (first nonzero
// coefficient 1) and ordered by support size, then support, then coefficients;
// the first pair (i < j) that qualifies is returned. necessary: alpha*alpha' = 0.
// full: additionally m = (alpha) ⊕ (alpha'). Only finite fields are searchable. Throws
// std::length_error when there are more than kMaxSearchLines lines.
std::optional<std::pair<LinearForm<PrimeField>, LinearForm<PrimeField>>> pair_decomposition_search(
    const LocalAlgebra<PrimeField>& a, SearchMode mode);

// Indices of variables whose images form a basis of m/m^2 (greedy in variable order).
template <class K>
std::vector<std::size_t> embedding_variables(const LocalAlgebra<K>& a);

}  // namespace fiberlab
