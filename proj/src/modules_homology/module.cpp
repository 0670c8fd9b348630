#include "fiberlab/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiberlab {

namespace {

template <class K>
Matrix<K> monomial_action(const K& f, const std::vector<Matrix<K>>& vars, std::size_t dim, const Monomial& m)
{
    auto out = Matrix<K>::identity(f, dim);
    for (std::size_t v = 0; v < m.num_vars(); ++v)
        for (std::uint32_t e = 0; e < m[v]; ++e) out = vars[v] * out;
    return out;
}

template <class K>
Vec<K> flatten(const Matrix<K>& m)
{
    Vec<K> out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
    return out;
}

// Applies a dim A x dim A matrix to every block of a vector in A^r.
template <class K>
Vec<K> apply_blocks(const Matrix<K>& x, const Vec<K>& v)
{
    const std::size_t d = x.rows();
    const K& f = x.field();
    Vec<K> out(v.size(), f.zero());
    for (std::size_t base = 0; base < v.size(); base += d)
        for (std::size_t c = 0; c < d; ++c) {
            const auto& vc = v[base + c];
            if (f.is_zero(vc)) continue;
            for (std::size_t r = 0; r < d; ++r)
                if (!f.is_zero(x(r, c))) out[base + r] = f.add(out[base + r], f.mul(x(r, c), vc));
        }
    return out;
}

template <class K>
Vec<K> multiply_blocks(const LocalAlgebra<K>& a, std::size_t l, const Vec<K>& v)
{
    const std::size_t d = a.dim();
    Vec<K> out;
    out.reserve(v.size());
    for (std::size_t base = 0; base < v.size(); base += d) {
        const auto block = a.multiply_basis(l, Vec<K>(v.begin() + base, v.begin() + base + d));
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

template <class K>
Vec<K> slice(const Vec<K>& v, std::size_t block, std::size_t d)
{
    return Vec<K>(v.begin() + block * d, v.begin() + (block + 1) * d);
}

// Block matrix with rows x cols blocks of size n; block(i, j) = fill(i, j).
template <class K, class Fill>
Matrix<K> block_matrix(const K& f, std::size_t rows, std::size_t cols, std::size_t n, Fill&& fill)
{
    Matrix<K> out(f, rows * n, cols * n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Matrix<K> b = fill(i, j);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) out(i * n + r, j * n + c) = b(r, c);
        }
    return out;
}

void check_bound(std::size_t bound)
{
    if (bound > kMaxHomologicalBound)
        throw std::length_error("homological bound " + std::to_string(bound) + " exceeds the limit " +
                                std::to_string(kMaxHomologicalBound));
}

template <class K>
void check_same_algebra(const FPModule<K>& m, const FPModule<K>& n)
{
    if (m.algebra_ptr() != n.algebra_ptr()) throw std::invalid_argument("modules over different algebras");
}

template <class K>
Resolution<K> resolve(const FPModule<K>& m, std::size_t steps)
{
    const auto& a = m.algebra();
    const K& f = m.field();
    const std::size_t d = a.dim(), n = a.num_vars();
    Resolution<K> res;
    res.algebra_dim = d;

    EchelonBasis<K> mm(f, m.dim());
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < m.dim(); ++c) mm.insert(m.variable_action(v).column(c));
    for (std::size_t c = 0; c < m.dim(); ++c) {
        Vec<K> e(m.dim(), f.zero());
        e[c] = f.one();
        if (mm.insert(e)) res.generators.push_back(std::move(e));
    }
    res.betti.push_back(res.generators.size());

    // Matrix of F_0 -> M over k; column t*d + l is b_l * g_t.
    std::vector<Vec<K>> columns;
    for (const auto& g : res.generators)
        for (std::size_t l = 0; l < d; ++l) columns.push_back(m.basis_action(l) * g);
    Matrix<K> phi = Matrix<K>::from_columns(f, m.dim(), columns);
    auto kernel_vectors = kernel_basis(phi);

    for (std::size_t i = 1; i <= steps; ++i) {
        const std::size_t ambient = res.betti.back() * d;
        EchelonBasis<K> mk(f, ambient);
        for (const auto& v : kernel_vectors)
            for (std::size_t x = 0; x < n; ++x) mk.insert(apply_blocks(a.variable_action(x), v));
        std::vector<Vec<K>> gens;
        for (auto& v : kernel_vectors)
            if (mk.insert(v)) gens.push_back(std::move(v));
        for (const auto& g : gens) {
            if (!is_zero_vector(f, phi * g))
                throw std::logic_error("resolution differentials do not compose to zero");
            for (std::size_t s = 0; s < res.betti.back(); ++s)
                if (!f.is_zero(g[s * d]))
                    throw std::logic_error("resolution differential has an entry outside the maximal ideal");
        }
        res.betti.push_back(gens.size());
        res.differentials.push_back(gens);
        if (i == steps) break;
        columns.clear();
        for (const auto& g : gens)
            for (std::size_t l = 0; l < d; ++l) columns.push_back(multiply_blocks(a, l, g));
        phi = Matrix<K>::from_columns(f, ambient, columns);
        kernel_vectors = kernel_basis(phi);
    }
    return res;
}

// rank of Hom(d_i, N) or d_i ⊗ N for i >= 1; zero outside the computed range.
template <class K>
std::size_t induced_rank(const Resolution<K>& r, const FPModule<K>& n, std::size_t i, bool dual)
{
    if (i == 0 || i >= r.betti.size()) return 0;
    const std::size_t rows = r.betti[i - 1], cols = r.betti[i];
    if (rows == 0 || cols == 0 || n.dim() == 0) return 0;
    if (dual)
        return rank(block_matrix(n.field(), cols, rows, n.dim(),
                                 [&](std::size_t t, std::size_t s) { return n.action(r.entry(i, s, t)); }));
    return rank(block_matrix(n.field(), rows, cols, n.dim(),
                             [&](std::size_t s, std::size_t t) { return n.action(r.entry(i, s, t)); }));
}

}  // namespace

template <class K>
FPModule<K>::FPModule(std::shared_ptr<const Algebra> algebra, std::size_t dim, std::vector<Matrix<K>> var_actions,
                      std::string label)
    : algebra_(std::move(algebra)), dim_(dim), var_actions_(std::move(var_actions)), label_(std::move(label))
{
    const auto& a = *algebra_;
    const K& f = a.field();
    if (var_actions_.size() != a.num_vars()) throw std::invalid_argument("need one action matrix per variable");
    for (const auto& x : var_actions_)
        if (x.rows() != dim_ || x.cols() != dim_) throw std::invalid_argument("action matrix has the wrong size");
    for (std::size_t i = 0; i < var_actions_.size(); ++i)
        for (std::size_t j = i + 1; j < var_actions_.size(); ++j)
            if (!(var_actions_[i] * var_actions_[j] == var_actions_[j] * var_actions_[i]))
                throw std::invalid_argument("variable actions do not commute");
    for (const auto& g : a.presentation().gens()) {
        Matrix<K> sum(f, dim_, dim_);
        for (const auto& [mono, c] : g.terms())
            sum = sum + scale(monomial_action(f, var_actions_, dim_, mono), f.from_rational(c));
        if (!sum.is_zero())
            throw std::invalid_argument("relation " + g.to_string(a.vars()) + " does not act as zero");
    }
    // m^N M = 0.
    std::vector<Vec<K>> layer;
    for (std::size_t c = 0; c < dim_; ++c) {
        layer.emplace_back(dim_, f.zero());
        layer.back()[c] = f.one();
    }
    for (std::size_t step = 0; step < a.order() && !layer.empty(); ++step) {
        EchelonBasis<K> next(f, dim_);
        for (const auto& v : layer)
            for (const auto& x : var_actions_) next.insert(x * v);
        layer = next.basis();
    }
    if (!layer.empty())
        throw std::invalid_argument("m^" + std::to_string(a.order()) + " does not annihilate the module");
    for (const auto& b : a.basis()) basis_actions_.push_back(monomial_action(f, var_actions_, dim_, b));
}

template <class K>
FPModule<K> FPModule<K>::relabeled(std::string label) const
{
    auto copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

template <class K>
Matrix<K> FPModule<K>::action(const Vec<K>& a) const
{
    if (a.size() != algebra_->dim()) throw std::invalid_argument("element of a different algebra");
    const K& f = field();
    Matrix<K> out(f, dim_, dim_);
    for (std::size_t l = 0; l < a.size(); ++l)
        if (!f.is_zero(a[l])) out = out + scale(basis_actions_[l], a[l]);
    return out;
}

template <class K>
FPModule<K> residue_field(std::shared_ptr<const LocalAlgebra<K>> a)
{
    std::vector<Matrix<K>> zero(a->num_vars(), Matrix<K>(a->field(), 1, 1));
    return FPModule<K>(a, 1, std::move(zero), "k");
}

template <class K>
FPModule<K> free_module(std::shared_ptr<const LocalAlgebra<K>> a, std::size_t rank)
{
    const std::size_t d = a->dim();
    std::vector<Matrix<K>> actions;
    for (std::size_t v = 0; v < a->num_vars(); ++v)
        actions.push_back(block_matrix(a->field(), rank, rank, d, [&](std::size_t i, std::size_t j) {
            return i == j ? a->variable_action(v) : Matrix<K>(a->field(), d, d);
        }));
    return FPModule<K>(a, rank * d, std::move(actions), rank == 1 ? "A" : "A^" + std::to_string(rank));
}

template <class K>
FPModule<K> quotient_module(const FPModule<K>& m, const std::vector<Vec<K>>& gens, std::string label)
{
    const K& f = m.field();
    EchelonBasis<K> sub(f, m.dim());
    for (const auto& g : gens)
        for (std::size_t l = 0; l < m.algebra().dim(); ++l) sub.insert(m.basis_action(l) * g);
    std::vector<bool> pivot(m.dim(), false);
    for (auto p : sub.pivots()) pivot[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.dim(); ++c)
        if (!pivot[c]) keep.push_back(c);

    std::vector<Matrix<K>> actions;
    for (std::size_t v = 0; v < m.algebra().num_vars(); ++v) {
        Matrix<K> act(f, keep.size(), keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) {
            const auto image = sub.reduce(m.variable_action(v).column(keep[j]));
            for (std::size_t i = 0; i < keep.size(); ++i) act(i, j) = image[keep[i]];
        }
        actions.push_back(std::move(act));
    }
    return FPModule<K>(m.algebra_ptr(), keep.size(), std::move(actions), std::move(label));
}

template <class K>
FPModule<K> submodule(const FPModule<K>& m, const std::vector<Vec<K>>& gens, std::string label)
{
    const K& f = m.field();
    EchelonBasis<K> sub(f, m.dim());
    for (const auto& g : gens)
        for (std::size_t l = 0; l < m.algebra().dim(); ++l) sub.insert(m.basis_action(l) * g);
    const auto basis = sub.basis();
    std::vector<Matrix<K>> actions;
    for (std::size_t v = 0; v < m.algebra().num_vars(); ++v) {
        Matrix<K> act(f, basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto coords = sub.coordinates(m.variable_action(v) * basis[j]);
            if (!coords) throw std::logic_error("submodule is not closed under the action");
            for (std::size_t i = 0; i < basis.size(); ++i) act(i, j) = (*coords)[i];
        }
        actions.push_back(std::move(act));
    }
    return FPModule<K>(m.algebra_ptr(), basis.size(), std::move(actions), std::move(label));
}

template <class K>
FPModule<K> cyclic_module(std::shared_ptr<const LocalAlgebra<K>> a, const std::vector<Vec<K>>& gens,
                          std::string label)
{
    for (const auto& g : gens)
        if (!a->in_maximal_ideal(g))
            throw std::invalid_argument("generator " + a->to_string(g) + " is not in the maximal ideal");
    if (label.empty()) {
        label = "A/(";
        for (std::size_t i = 0; i < gens.size(); ++i) label += (i ? "," : "") + a->to_string(gens[i]);
        label += ")";
    }
    return quotient_module(free_module(a, 1), gens, std::move(label));
}

template <class K>
FPModule<K> canonical_module(std::shared_ptr<const LocalAlgebra<K>> a)
{
    std::vector<Matrix<K>> actions;
    for (std::size_t v = 0; v < a->num_vars(); ++v) actions.push_back(a->variable_action(v).transpose());
    return FPModule<K>(a, a->dim(), std::move(actions), "omega");
}

template <class K>
std::size_t minimal_generator_count(const FPModule<K>& m)
{
    EchelonBasis<K> mm(m.field(), m.dim());
    for (std::size_t v = 0; v < m.algebra().num_vars(); ++v)
        for (std::size_t c = 0; c < m.dim(); ++c) mm.insert(m.variable_action(v).column(c));
    return m.dim() - mm.dimension();
}

namespace {

// Linear conditions X_N f = f X_M on f : M -> N (row-major unknowns) for each X pair.
template <class K>
KernelBasis<K> commutant(const FPModule<K>& m, const FPModule<K>& n,
                         const std::vector<std::pair<const Matrix<K>*, const Matrix<K>*>>& pairs)
{
    const K& f = m.field();
    const std::size_t dm = m.dim(), dn = n.dim(), unknowns = dm * dn;
    Matrix<K> eq(f, pairs.size() * unknowns, unknowns);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& xm = *pairs[p].first;
        const auto& xn = *pairs[p].second;
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                const std::size_t row = p * unknowns + r * dm + c;
                for (std::size_t k = 0; k < dn; ++k)
                    if (!f.is_zero(xn(r, k))) eq(row, k * dm + c) = f.add(eq(row, k * dm + c), xn(r, k));
                for (std::size_t k = 0; k < dm; ++k)
                    if (!f.is_zero(xm(k, c))) eq(row, r * dm + k) = f.sub(eq(row, r * dm + k), xm(k, c));
            }
    }
    return kernel(eq);
}

}  // namespace

template <class K>
KernelBasis<K> hom_basis(const FPModule<K>& m, const FPModule<K>& n)
{
    check_same_algebra(m, n);
    std::vector<std::pair<const Matrix<K>*, const Matrix<K>*>> pairs;
    for (std::size_t v = 0; v < m.algebra().num_vars(); ++v)
        pairs.emplace_back(&m.variable_action(v), &n.variable_action(v));
    return commutant(m, n, pairs);
}

template <class K>
std::size_t hom_dimension(const FPModule<K>& m, const FPModule<K>& n)
{
    return hom_basis(m, n).dimension();
}

template <class K>
std::size_t hom_dimension_full_basis(const FPModule<K>& m, const FPModule<K>& n)
{
    check_same_algebra(m, n);
    std::vector<std::pair<const Matrix<K>*, const Matrix<K>*>> pairs;
    for (std::size_t l = 0; l < m.algebra().dim(); ++l) pairs.emplace_back(&m.basis_action(l), &n.basis_action(l));
    return commutant(m, n, pairs).dimension();
}

template <class K>
Vec<K> Resolution<K>::entry(std::size_t i, std::size_t s, std::size_t t) const
{
    return slice<K>(differentials.at(i - 1).at(t), s, algebra_dim);
}

template <class K>
Resolution<K> minimal_resolution(const FPModule<K>& m, std::size_t bound)
{
    check_bound(bound);
    return resolve(m, bound);
}

template <class K>
std::vector<std::size_t> poincare_truncation(const FPModule<K>& m, std::size_t bound)
{
    return minimal_resolution(m, bound).betti;
}

template <class K>
std::vector<std::size_t> ext_dimensions(const FPModule<K>& m, const FPModule<K>& n, std::size_t bound)
{
    check_bound(bound);
    check_same_algebra(m, n);
    const auto r = resolve(m, bound + 1);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= bound; ++i)
        out.push_back(r.betti[i] * n.dim() - induced_rank(r, n, i + 1, true) - induced_rank(r, n, i, true));
    return out;
}

template <class K>
std::vector<std::size_t> tor_dimensions(const FPModule<K>& m, const FPModule<K>& n, std::size_t bound)
{
    check_bound(bound);
    check_same_algebra(m, n);
    const auto r = resolve(m, bound + 1);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= bound; ++i)
        out.push_back(r.betti[i] * n.dim() - induced_rank(r, n, i, false) - induced_rank(r, n, i + 1, false));
    return out;
}

template <class K>
std::size_t ext(const FPModule<K>& m, const FPModule<K>& n, std::size_t i)
{
    return ext_dimensions(m, n, i).back();
}

template <class K>
std::size_t tor(const FPModule<K>& m, const FPModule<K>& n, std::size_t i)
{
    return tor_dimensions(m, n, i).back();
}

template <class K>
std::vector<std::size_t> bass_truncation(const FPModule<K>& m, std::size_t bound)
{
    return ext_dimensions(residue_field(m.algebra_ptr()), m, bound);
}

template <class K>
std::size_t ext_bruteforce(const FPModule<K>& m, const FPModule<K>& n, std::size_t i)
{
    check_same_algebra(m, n);
    if (i == 0) return hom_dimension(m, n);
    if (i > 2) throw std::invalid_argument("brute-force Ext is implemented for i <= 2");
    const std::size_t d = m.algebra().dim();
    // A^(dim M) -> M sending basis element c to the c-th basis vector of M.
    std::vector<Vec<K>> columns;
    for (std::size_t c = 0; c < m.dim(); ++c)
        for (std::size_t l = 0; l < d; ++l) columns.push_back(m.basis_action(l).column(c));
    const auto syzygies = kernel_basis(Matrix<K>::from_columns(m.field(), m.dim(), columns));
    const auto cover = free_module(m.algebra_ptr(), m.dim());
    const auto l = submodule(cover, syzygies);
    if (i == 2) return ext_bruteforce(l, n, 1);
    return hom_dimension(l, n) + hom_dimension(m, n) - m.dim() * n.dim();
}

template <class K>
FPModule<K> dual_module(const FPModule<K>& m)
{
    const auto a = free_module(m.algebra_ptr(), 1);
    const auto hb = hom_basis(m, a);
    const std::size_t dm = m.dim(), da = a.dim(), d = hb.dimension();
    std::vector<Matrix<K>> actions;
    for (std::size_t v = 0; v < m.algebra().num_vars(); ++v) {
        Matrix<K> act(m.field(), d, d);
        for (std::size_t t = 0; t < d; ++t) {
            Matrix<K> phi(m.field(), da, dm);
            for (std::size_t r = 0; r < da; ++r)
                for (std::size_t c = 0; c < dm; ++c) phi(r, c) = hb.vectors[t][r * dm + c];
            const auto coords = hb.coordinates(flatten(a.variable_action(v) * phi));
            for (std::size_t s = 0; s < d; ++s) act(s, t) = coords[s];
        }
        actions.push_back(std::move(act));
    }
    return FPModule<K>(m.algebra_ptr(), d, std::move(actions), m.label() + "*");
}

template <class K>
bool biduality_is_iso(const FPModule<K>& m)
{
    const auto a = free_module(m.algebra_ptr(), 1);
    const auto first = hom_basis(m, a);
    const auto dual = dual_module(m);
    if (hom_dimension(dual, a) != m.dim()) return false;
    const std::size_t dm = m.dim(), d1 = first.dimension();
    // ev(e_c) sends f_t to f_t(e_c); flattened as a dim A x dim M* matrix.
    std::vector<Vec<K>> images;
    for (std::size_t c = 0; c < dm; ++c) {
        Vec<K> ev(a.dim() * d1, m.field().zero());
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t t = 0; t < d1; ++t) ev[r * d1 + t] = first.vectors[t][r * dm + c];
        images.push_back(std::move(ev));
    }
    return span_dimension(m.field(), a.dim() * d1, images) == dm;
}

template <class K>
bool is_totally_reflexive_up_to(const FPModule<K>& m, std::size_t bound)
{
    check_bound(bound);
    if (!biduality_is_iso(m)) return false;
    if (bound == 0) return true;
    const auto a = free_module(m.algebra_ptr(), 1);
    auto vanishes = [&](const FPModule<K>& x) {
        const auto dims = ext_dimensions(x, a, bound);
        return std::all_of(dims.begin() + 1, dims.end(), [](std::size_t e) { return e == 0; });
    };
    return vanishes(m) && vanishes(dual_module(m));
}

template <class K>
bool is_semidualizing_up_to(const FPModule<K>& c, std::size_t bound)
{
    check_bound(bound);
    const std::size_t d = c.algebra().dim();
    if (hom_dimension(c, c) != d) return false;
    std::vector<Vec<K>> homotheties;
    for (std::size_t l = 0; l < d; ++l) homotheties.push_back(flatten(c.basis_action(l)));
    if (span_dimension(c.field(), c.dim() * c.dim(), homotheties) != d) return false;
    if (bound == 0) return true;
    const auto dims = ext_dimensions(c, c, bound);
    for (std::size_t i = 1; i <= bound; ++i)
        if (dims[i] != 0) return false;
    return true;
}

#define FIBERLAB_INSTANTIATE(K)                                                                               \
    template class FPModule<K>;                                                                               \
    template struct Resolution<K>;                                                                            \
    template FPModule<K> residue_field(std::shared_ptr<const LocalAlgebra<K>>);                               \
    template FPModule<K> free_module(std::shared_ptr<const LocalAlgebra<K>>, std::size_t);                    \
    template FPModule<K> quotient_module(const FPModule<K>&, const std::vector<Vec<K>>&, std::string);        \
    template FPModule<K> submodule(const FPModule<K>&, const std::vector<Vec<K>>&, std::string);              \
    template FPModule<K> cyclic_module(std::shared_ptr<const LocalAlgebra<K>>, const std::vector<Vec<K>>&,    \
                                       std::string);                                                          \
    template FPModule<K> canonical_module(std::shared_ptr<const LocalAlgebra<K>>);                            \
    template std::size_t minimal_generator_count(const FPModule<K>&);                                         \
    template KernelBasis<K> hom_basis(const FPModule<K>&, const FPModule<K>&);                                \
    template std::size_t hom_dimension(const FPModule<K>&, const FPModule<K>&);                               \
    template std::size_t hom_dimension_full_basis(const FPModule<K>&, const FPModule<K>&);                    \
    template Resolution<K> minimal_resolution(const FPModule<K>&, std::size_t);                               \
    template std::vector<std::size_t> poincare_truncation(const FPModule<K>&, std::size_t);                   \
    template std::vector<std::size_t> bass_truncation(const FPModule<K>&, std::size_t);                       \
    template std::vector<std::size_t> ext_dimensions(const FPModule<K>&, const FPModule<K>&, std::size_t);    \
    template std::vector<std::size_t> tor_dimensions(const FPModule<K>&, const FPModule<K>&, std::size_t);    \
    template std::size_t ext(const FPModule<K>&, const FPModule<K>&, std::size_t);                            \
    template std::size_t tor(const FPModule<K>&, const FPModule<K>&, std::size_t);                            \
    template std::size_t ext_bruteforce(const FPModule<K>&, const FPModule<K>&, std::size_t);                 \
    template FPModule<K> dual_module(const FPModule<K>&);                                                     \
    template bool biduality_is_iso(const FPModule<K>&);                                                       \
    template bool is_totally_reflexive_up_to(const FPModule<K>&, std::size_t);                                \
    template bool is_semidualizing_up_to(const FPModule<K>&, std::size_t);

FIBERLAB_INSTANTIATE(PrimeField)
FIBERLAB_INSTANTIATE(RationalField)

}  // namespace fiberlab
