#pragma once

#include "fiberlab/local_algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fiberlab {

inline constexpr std::size_t kMaxHomologicalBound = 12;

// Finite-dimensional module over a LocalAlgebra: a k-vector space with one
// action matrix per ring variable. Construction checks that the matrices
// commute, that every defining relation acts as zero and that m^N acts as zero.
template <class K>
class FPModule {
public:
    using Algebra = LocalAlgebra<K>;

    FPModule(std::shared_ptr<const Algebra> algebra, std::size_t dim, std::vector<Matrix<K>> var_actions,
             std::string label = "");

    const Algebra& algebra() const { return *algebra_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
    const K& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    FPModule relabeled(std::string label) const;

    const Matrix<K>& variable_action(std::size_t i) const { return var_actions_.at(i); }
    const Matrix<K>& basis_action(std::size_t l) const { return basis_actions_.at(l); }
    // Action of an algebra element.
    Matrix<K> action(const Vec<K>& a) const;

private:
    std::shared_ptr<const Algebra> algebra_;
    std::size_t dim_;
    std::vector<Matrix<K>> var_actions_;
    std::vector<Matrix<K>> basis_actions_;
    std::string label_;
};

template <class K>
FPModule<K> residue_field(std::shared_ptr<const LocalAlgebra<K>> a);
template <class K>
FPModule<K> free_module(std::shared_ptr<const LocalAlgebra<K>> a, std::size_t rank = 1);

// A^(dim) ∋ v lives in blocks of length dim A.
template <class K>
FPModule<K> quotient_module(const FPModule<K>& m, const std::vector<Vec<K>>& gens, std::string label = "");
// The submodule generated by gens, with an echelon k-basis.
template <class K>
FPModule<K> submodule(const FPModule<K>& m, const std::vector<Vec<K>>& gens, std::string label = "");
// A/(gens). Throws std::invalid_argument when a generator is not in m.
template <class K>
FPModule<K> cyclic_module(std::shared_ptr<const LocalAlgebra<K>> a, const std::vector<Vec<K>>& gens,
                          std::string label = "");

// Hom_k(A, k) with (x.phi)(y) = phi(xy): the canonical module of an artinian A.
template <class K>
FPModule<K> canonical_module(std::shared_ptr<const LocalAlgebra<K>> a);

// Minimal number of generators, dim M/mM.
template <class K>
std::size_t minimal_generator_count(const FPModule<K>& m);

// Hom_A(M, N) as maps commuting with the variable actions. Each basis vector is
// a dim N x dim M matrix flattened row-major.
template <class K>
KernelBasis<K> hom_basis(const FPModule<K>& m, const FPModule<K>& n);
template <class K>
std::size_t hom_dimension(const FPModule<K>& m, const FPModule<K>& n);
// Same space cut out by commutation with every algebra basis element.
template <class K>
std::size_t hom_dimension_full_basis(const FPModule<K>& m, const FPModule<K>& n);

template <class K>
struct Resolution {
    std::size_t algebra_dim = 0;
    std::vector<std::size_t> betti;
    // Minimal generators of the module (images of the basis of F_0).
    std::vector<Vec<K>> generators;
    // differentials[i][t] is the image in F_i of basis element t of F_(i+1),
    // as betti[i] consecutive blocks of algebra coordinates.
    std::vector<std::vector<Vec<K>>> differentials;

    // Algebra element in row s, column t of the matrix of d_i : F_i -> F_(i-1), i >= 1.
    Vec<K> entry(std::size_t i, std::size_t s, std::size_t t) const;
};

// Betti numbers beta_0..beta_b of a minimal free resolution, with differentials
// d_1..d_b. Asserts d_i d_(i+1) = 0 and that all entries lie in m. Throws
// std::length_error for b > kMaxHomologicalBound.
template <class K>
Resolution<K> minimal_resolution(const FPModule<K>& m, std::size_t bound);

template <class K>
std::vector<std::size_t> poincare_truncation(const FPModule<K>& m, std::size_t bound);

// dim Ext^i(k, M), i = 0..b.
template <class K>
std::vector<std::size_t> bass_truncation(const FPModule<K>& m, std::size_t bound);

// dim Ext^i(M, N) and dim Tor_i(M, N) for i = 0..b.
template <class K>
std::vector<std::size_t> ext_dimensions(const FPModule<K>& m, const FPModule<K>& n, std::size_t bound);
template <class K>
std::vector<std::size_t> tor_dimensions(const FPModule<K>& m, const FPModule<K>& n, std::size_t bound);
template <class K>
std::size_t ext(const FPModule<K>& m, const FPModule<K>& n, std::size_t i);
template <class K>
std::size_t tor(const FPModule<K>& m, const FPModule<K>& n, std::size_t i);

// Ext^0..Ext^2 from the non-minimal presentation 0 -> L -> A^(dim M) -> M -> 0:
// dim Ext^1 = dim Hom(L, N) - dim M dim N + dim Hom(M, N), Ext^2(M, N) = Ext^1(L, N).
template <class K>
std::size_t ext_bruteforce(const FPModule<K>& m, const FPModule<K>& n, std::size_t i);

// Hom_A(M, A) with its natural action.
template <class K>
FPModule<K> dual_module(const FPModule<K>& m);
// The evaluation map M -> M** is bijective.
template <class K>
bool biduality_is_iso(const FPModule<K>& m);

// Biduality plus Ext^i(M, A) = 0 = Ext^i(M*, A) for 1 <= i <= b.
template <class K>
bool is_totally_reflexive_up_to(const FPModule<K>& m, std::size_t bound);
// Homothety A -> Hom(C, C) bijective and Ext^i(C, C) = 0 for 1 <= i <= b.
template <class K>
bool is_semidualizing_up_to(const FPModule<K>& c, std::size_t bound);

}  // namespace fiberlab
