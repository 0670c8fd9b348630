#include "fiberlab/local_algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fiberlab {

namespace {

template <class K>
K make_field(const FieldSpec& spec);

template <>
PrimeField make_field<PrimeField>(const FieldSpec& spec)
{
    if (!spec.is_prime()) throw std::invalid_argument("presentation is over " + spec.to_string() + ", not GF(p)");
    return PrimeField(spec.characteristic());
}

template <>
RationalField make_field<RationalField>(const FieldSpec& spec)
{
    if (!spec.is_rational()) throw std::invalid_argument("presentation is over " + spec.to_string() + ", not Q");
    return RationalField{};
}

// All monomials of degree < bound, ascending in display_order.
std::vector<Monomial> monomials_below(std::size_t n, std::uint32_t bound)
{
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t from, std::uint32_t degree) -> void {
        out.emplace_back(e);
        if (degree + 1 >= bound) return;
        for (std::size_t i = from; i < n; ++i) {
            ++e[i];
            self(self, i, degree + 1);
            --e[i];
        }
    };
    if (bound > 0) rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), display_order);
    return out;
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, std::uint32_t bound)
{
    const std::size_t n = ideal.num_vars();
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(n, 0);
    // Divisors of standard monomials are standard, so the search stops at ideal members.
    auto rec = [&](auto&& self, std::size_t from, std::uint32_t degree) -> void {
        Monomial m(e);
        if (ideal.contains(m)) return;
        out.push_back(std::move(m));
        if (degree + 1 >= bound) return;
        for (std::size_t i = from; i < n; ++i) {
            ++e[i];
            self(self, i, degree + 1);
            --e[i];
        }
    };
    if (bound > 0) rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), display_order);
    return out;
}

std::optional<std::size_t> artinian_order(const MonomialIdeal& ideal)
{
    std::uint32_t bound = 1;
    for (std::size_t i = 0; i < ideal.num_vars(); ++i) {
        std::uint32_t power = 0;
        for (const auto& g : ideal.gens())
            if (g.support() == std::vector<std::size_t>{i}) power = g[i];
        if (power == 0) return std::nullopt;
        bound += power - 1;
    }
    std::size_t top = 0;
    for (const auto& m : standard_monomials(ideal, bound + 1)) top = std::max<std::size_t>(top, m.degree());
    return top + 1;
}

bool is_artinian_at(const Presentation& p, std::size_t order)
{
    if (p.is_monomial()) {
        const auto order32 = static_cast<std::uint32_t>(order);
        const auto standard = standard_monomials(p.monomial_ideal(), order32 + 1);
        return std::none_of(standard.begin(), standard.end(),
                            [order32](const Monomial& m) { return m.degree() == order32; });
    }
    return with_field(p.field(), [&](auto field) {
        using K = decltype(field);
        return LocalAlgebra<K>(p, order).dim() == LocalAlgebra<K>(p, order + 1).dim();
    });
}

template <class K>
LocalAlgebra<K>::LocalAlgebra(const Presentation& p, std::size_t order)
    : field_(make_field<K>(p.field())), presentation_(p), order_(order)
{
    if (order == 0) throw std::invalid_argument("truncation order must be at least 1");
    if (p.is_monomial())
        build_monomial(p.monomial_ideal());
    else
        build_general();
    finish();
    verify_table();
}

template <class K>
void LocalAlgebra<K>::build_monomial(const MonomialIdeal& ideal)
{
    basis_ = standard_monomials(ideal, static_cast<std::uint32_t>(order_));
    if (basis_.size() > kMaxAlgebraDimension)
        throw std::length_error("truncated algebra has dimension above " + std::to_string(kMaxAlgebraDimension));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        forms_index_.emplace(basis_[i], forms_.size());
        forms_.push_back({{i, field_.one()}});
    }
}

template <class K>
void LocalAlgebra<K>::build_general()
{
    const std::size_t n = num_vars();
    const auto columns = monomials_below(n, static_cast<std::uint32_t>(order_));
    std::map<Monomial, std::size_t> column_of;
    for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

    std::vector<Vector> rows;
    for (const auto& g : presentation_.gens()) {
        if (g.is_zero()) continue;
        std::vector<std::pair<Monomial, Element>> terms;
        for (const auto& [m, c] : g.terms()) terms.emplace_back(m, field_.from_rational(c));
        for (const auto& u : columns) {
            Vector row(columns.size(), field_.zero());
            bool nonzero = false;
            for (const auto& [m, c] : terms) {
                auto it = column_of.find(u * m);
                if (it == column_of.end() || field_.is_zero(c)) continue;
                row[it->second] = field_.add(row[it->second], c);
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    const auto ech = rref(Matrix<K>::from_rows(field_, columns.size(), rows));
    std::vector<std::int64_t> pivot_row(columns.size(), -1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<std::int64_t>(r);

    std::vector<std::size_t> basis_index(columns.size(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c)
        if (pivot_row[c] < 0) {
            basis_index[c] = basis_.size();
            basis_.push_back(columns[c]);
        }
    if (basis_.size() > kMaxAlgebraDimension)
        throw std::length_error("truncated algebra has dimension above " + std::to_string(kMaxAlgebraDimension));

    for (std::size_t c = 0; c < columns.size(); ++c) {
        Sparse form;
        if (pivot_row[c] < 0) {
            form.emplace_back(basis_index[c], field_.one());
        } else {
            const auto r = static_cast<std::size_t>(pivot_row[c]);
            for (std::size_t f = c + 1; f < columns.size(); ++f)
                if (pivot_row[f] < 0 && !field_.is_zero(ech.reduced(r, f)))
                    form.emplace_back(basis_index[f], field_.neg(ech.reduced(r, f)));
        }
        if (form.empty()) continue;
        forms_index_.emplace(columns[c], forms_.size());
        forms_.push_back(std::move(form));
    }
}

template <class K>
void LocalAlgebra<K>::finish()
{
    const std::size_t d = dim();
    products_.assign(d * d, -1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto it = forms_index_.find(basis_[i] * basis_[j]);
            if (it != forms_index_.end()) products_[i * d + j] = static_cast<std::int32_t>(it->second);
        }
    for (std::size_t i = 0; i < num_vars(); ++i) {
        const auto x = Monomial::variable(num_vars(), i);
        var_images_.push_back(normal_form(x));
        Matrix<K> act(field_, d, d);
        for (std::size_t j = 0; j < d; ++j) {
            auto it = forms_index_.find(x * basis_[j]);
            if (it == forms_index_.end()) continue;
            for (const auto& [row, c] : forms_[it->second]) act(row, j) = c;
        }
        var_actions_.push_back(std::move(act));
    }
    // Normal forms only involve basis monomials of equal or higher degree, so
    // m^j is spanned by the basis monomials of degree >= j.
    filtration_.assign(order_ + 1, 0);
    for (const auto& b : basis_)
        for (std::size_t j = 0; j <= b.degree(); ++j) ++filtration_[j];
}

template <class K>
const typename LocalAlgebra<K>::Sparse* LocalAlgebra<K>::product(std::size_t i, std::size_t j) const
{
    const auto idx = products_[i * dim() + j];
    return idx < 0 ? nullptr : &forms_[static_cast<std::size_t>(idx)];
}

template <class K>
void LocalAlgebra<K>::verify_table() const
{
    const std::size_t d = dim();
    auto times_basis = [&](const Sparse& s, std::size_t k) {
        Vector out = zero();
        for (const auto& [l, c] : s)
            if (const auto* p = product(l, k))
                for (const auto& [r, e] : *p) out[r] = field_.add(out[r], field_.mul(c, e));
        return out;
    };
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        const auto* ij = product(i, j);
        const auto* jk = product(j, k);
        auto left = ij ? times_basis(*ij, k) : zero();
        auto right = jk ? times_basis(*jk, i) : zero();
        if (left != right)
            throw std::logic_error("multiplication table is not associative at basis elements " +
                                   std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k));
    };
    for (std::size_t j = 0; j < d; ++j) {
        const auto* p = product(0, j);
        if (!p || p->size() != 1 || (*p)[0].first != j || !field_.is_one((*p)[0].second))
            throw std::logic_error("basis element 0 does not act as the identity");
        for (std::size_t i = 0; i < d; ++i)
            if (products_[i * d + j] != products_[j * d + i])
                throw std::logic_error("multiplication table is not commutative");
    }
    if (d <= kFullTableCheckDimension) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) check(i, j, k);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, d - 1);
        for (std::size_t t = 0; t < kSampledTableChecks; ++t) {
            const auto i = pick(rng), j = pick(rng), k = pick(rng);
            check(i, j, k);
        }
    }
}

template <class K>
typename LocalAlgebra<K>::Vector LocalAlgebra<K>::densify(const Sparse& s) const
{
    Vector out = zero();
    for (const auto& [i, c] : s) out[i] = c;
    return out;
}

template <class K>
typename LocalAlgebra<K>::Vector LocalAlgebra<K>::unit(std::size_t i) const
{
    Vector out = zero();
    out.at(i) = field_.one();
    return out;
}

template <class K>
typename LocalAlgebra<K>::Vector LocalAlgebra<K>::normal_form(const Monomial& m) const
{
    if (m.num_vars() != num_vars()) throw std::invalid_argument("monomial over a different ring");
    if (m.degree() >= order_) return zero();
    auto it = forms_index_.find(m);
    return it == forms_index_.end() ? zero() : densify(forms_[it->second]);
}

template <class K>
typename LocalAlgebra<K>::Vector LocalAlgebra<K>::element(const Polynomial& f) const
{
    if (f.num_vars() != num_vars()) throw std::invalid_argument("polynomial over a different ring");
    Vector out = zero();
    for (const auto& [m, c] : f.terms()) {
        const auto coeff = field_.from_rational(c);
        const auto nf = normal_form(m);
        for (std::size_t i = 0; i < dim(); ++i)
            if (!field_.is_zero(nf[i])) out[i] = field_.add(out[i], field_.mul(coeff, nf[i]));
    }
    return out;
}

template <class K>
typename LocalAlgebra<K>::Vector LocalAlgebra<K>::multiply_basis(std::size_t i, const Vector& v) const
{
    Vector out = zero();
    for (std::size_t j = 0; j < dim(); ++j) {
        if (field_.is_zero(v[j])) continue;
        if (const auto* p = product(i, j))
            for (const auto& [r, c] : *p) out[r] = field_.add(out[r], field_.mul(v[j], c));
    }
    return out;
}

template <class K>
typename LocalAlgebra<K>::Vector LocalAlgebra<K>::multiply(const Vector& a, const Vector& b) const
{
    if (a.size() != dim() || b.size() != dim()) throw std::invalid_argument("element of a different algebra");
    Vector out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (field_.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (field_.is_zero(b[j])) continue;
            if (const auto* p = product(i, j)) {
                const auto c = field_.mul(a[i], b[j]);
                for (const auto& [r, e] : *p) out[r] = field_.add(out[r], field_.mul(c, e));
            }
        }
    }
    return out;
}

template <class K>
Matrix<K> LocalAlgebra<K>::action(const Vector& a) const
{
    Matrix<K> out(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        const auto col = multiply(a, unit(j));
        for (std::size_t i = 0; i < dim(); ++i) out(i, j) = col[i];
    }
    return out;
}

template <class K>
std::vector<std::size_t> LocalAlgebra<K>::hilbert_function() const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j + 1 < filtration_.size(); ++j) out.push_back(filtration_[j] - filtration_[j + 1]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

template <class K>
std::string LocalAlgebra<K>::to_string(const Vector& v) const
{
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (field_.is_zero(v.at(i))) continue;
        if (!out.empty()) out += '+';
        const bool unit_coeff = field_.is_one(v[i]);
        if (basis_[i].is_one()) {
            out += field_.to_string(v[i]);
        } else {
            if (!unit_coeff) out += field_.to_string(v[i]) + "*";
            out += fiberlab::to_string(basis_[i], vars());
        }
    }
    return out.empty() ? "0" : out;
}

template <class K>
std::vector<Vec<K>> socle(const LocalAlgebra<K>& a)
{
    const std::size_t d = a.dim(), n = a.num_vars();
    Matrix<K> stacked(a.field(), n * d, d);
    for (std::size_t v = 0; v < n; ++v) {
        const auto& act = a.variable_action(v);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) stacked(v * d + r, c) = act(r, c);
    }
    return kernel_basis(stacked);
}

template <class K>
std::vector<Monomial> monomial_socle(const LocalAlgebra<K>& a)
{
    std::vector<Monomial> out;
    for (const auto& v : socle(a)) {
        std::size_t support = 0, at = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!a.field().is_zero(v[i])) {
                ++support;
                at = i;
            }
        if (support != 1) throw std::logic_error("socle basis vector " + a.to_string(v) + " is not a monomial");
        out.push_back(a.basis()[at]);
    }
    std::sort(out.begin(), out.end(), display_order);
    return out;
}

template <class K>
bool is_gorenstein_artinian(const LocalAlgebra<K>& a)
{
    if (!is_artinian_at(a.presentation(), a.order()))
        throw std::domain_error("m^" + std::to_string(a.order()) +
                                " is not zero in the ring; the truncation is not the full artinian ring");
    return socle(a).size() == 1;
}

template <class K>
EchelonBasis<K> ideal_span(const LocalAlgebra<K>& a, const std::vector<Vec<K>>& gens)
{
    EchelonBasis<K> span(a.field(), a.dim());
    for (const auto& g : gens)
        for (std::size_t l = 0; l < a.dim(); ++l) span.insert(a.multiply_basis(l, g));
    return span;
}

template <class K>
bool ideal_direct_sum_check(const LocalAlgebra<K>& a, const std::vector<Vec<K>>& gens1,
                            const std::vector<Vec<K>>& gens2)
{
    for (const auto* gens : {&gens1, &gens2})
        for (const auto& g : *gens)
            if (!a.in_maximal_ideal(g))
                throw std::invalid_argument("generator " + a.to_string(g) + " is not in the maximal ideal");
    const auto i = ideal_span(a, gens1);
    const auto j = ideal_span(a, gens2);
    if (i.dimension() == 0 || j.dimension() == 0) return false;
    const std::size_t m = a.dim() - 1;
    auto sum = i;
    for (const auto& v : j.basis()) sum.insert(v);
    return i.dimension() + j.dimension() == m && sum.dimension() == m;
}

template <class K>
std::string LinearForm<K>::to_string(const K& field, const std::vector<std::string>& vars) const
{
    std::string out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (field.is_zero(coefficients[i])) continue;
        if (!out.empty()) out += '+';
        if (!field.is_one(coefficients[i])) out += field.to_string(coefficients[i]) + "*";
        out += vars.at(i);
    }
    return out.empty() ? "0" : out;
}

template <class K>
Vec<K> LinearForm<K>::in(const LocalAlgebra<K>& a) const
{
    const K& f = a.field();
    auto out = a.zero();
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (f.is_zero(coefficients[i])) continue;
        const auto& x = a.variable(i);
        for (std::size_t r = 0; r < out.size(); ++r) out[r] = f.add(out[r], f.mul(coefficients[i], x[r]));
    }
    return out;
}

template <class K>
std::vector<std::size_t> embedding_variables(const LocalAlgebra<K>& a)
{
    EchelonBasis<K> span(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis()[i].degree() >= 2) span.insert(a.unit(i));
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < a.num_vars(); ++v)
        if (span.insert(a.variable(v))) out.push_back(v);
    return out;
}

std::optional<std::pair<LinearForm<PrimeField>, LinearForm<PrimeField>>> pair_decomposition_search(
    const LocalAlgebra<PrimeField>& a, SearchMode mode)
{
    const PrimeField& f = a.field();
    const std::uint64_t p = f.characteristic();
    const auto chosen = embedding_variables(a);
    const std::size_t e = chosen.size();

    std::uint64_t lines = 0, power = 1;
    for (std::size_t i = 0; i < e; ++i) {
        lines += power;
        if (lines > kMaxSearchLines) break;
        power *= p;
    }
    if (lines > kMaxSearchLines)
        throw std::length_error("linear-form search needs more than " + std::to_string(kMaxSearchLines) +
                                " lines (embedding dimension " + std::to_string(e) + " over GF(" +
                                std::to_string(p) + "))");

    // Normalized representatives: the first nonzero coordinate is 1.
    std::vector<std::vector<std::uint32_t>> reps;
    std::vector<std::uint32_t> c(e, 0);
    for (std::size_t lead = 0; lead < e; ++lead) {
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == e) {
                reps.push_back(c);
                return;
            }
            for (std::uint32_t v = 0; v < p; ++v) {
                c[pos] = v;
                self(self, pos + 1);
            }
            c[pos] = 0;
        };
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        rec(rec, lead + 1);
    }
    auto support = [](const std::vector<std::uint32_t>& v) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) s.push_back(i);
        return s;
    };
    std::sort(reps.begin(), reps.end(), [&](const auto& x, const auto& y) {
        const auto sx = support(x), sy = support(y);
        if (sx.size() != sy.size()) return sx.size() < sy.size();
        if (sx != sy) return sx < sy;
        return x < y;
    });

    std::vector<LinearForm<PrimeField>> forms;
    std::vector<Vec<PrimeField>> images;
    for (const auto& r : reps) {
        LinearForm<PrimeField> form{std::vector<std::uint32_t>(a.num_vars(), 0)};
        for (std::size_t t = 0; t < e; ++t) form.coefficients[chosen[t]] = r[t];
        images.push_back(form.in(a));
        forms.push_back(std::move(form));
    }
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            if (!is_zero_vector(f, a.multiply(images[i], images[j]))) continue;
            if (mode == SearchMode::full && !ideal_direct_sum_check(a, {images[i]}, {images[j]})) continue;
            return std::make_pair(forms[i], forms[j]);
        }
    return std::nullopt;
}

#define FIBERLAB_INSTANTIATE(K)                                                                               \
    template class LocalAlgebra<K>;                                                                           \
    template struct LinearForm<K>;                                                                            \
    template std::vector<Vec<K>> socle(const LocalAlgebra<K>&);                                               \
    template std::vector<Monomial> monomial_socle(const LocalAlgebra<K>&);                                    \
    template bool is_gorenstein_artinian(const LocalAlgebra<K>&);                                             \
    template EchelonBasis<K> ideal_span(const LocalAlgebra<K>&, const std::vector<Vec<K>>&);                 \
    template bool ideal_direct_sum_check(const LocalAlgebra<K>&, const std::vector<Vec<K>>&,                  \
                                         const std::vector<Vec<K>>&);                                         \
    template std::vector<std::size_t> embedding_variables(const LocalAlgebra<K>&);

FIBERLAB_INSTANTIATE(PrimeField)
FIBERLAB_INSTANTIATE(RationalField)

}  // namespace fiberlab
