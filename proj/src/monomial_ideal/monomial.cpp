#include "fiberlab/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace fiberlab {

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, std::uint32_t power)
{
    if (index >= num_vars) throw std::out_of_range("variable index out of range");
    Monomial m(num_vars);
    m.exps_[index] = power;
    return m;
}

std::uint32_t Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

bool Monomial::is_squarefree() const
{
    for (auto e : exps_)
        if (e > 1) return false;
    return true;
}

std::vector<std::size_t> Monomial::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) out.push_back(i);
    return out;
}

bool Monomial::divides(const Monomial& other) const
{
    if (exps_.size() != other.exps_.size()) throw std::invalid_argument("monomials over different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    if (exps_.size() != other.exps_.size()) throw std::invalid_argument("monomials over different rings");
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (exps_.size() != other.exps_.size()) throw std::invalid_argument("monomials over different rings");
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] + other.exps_[i];
    return out;
}

bool display_order(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars)
{
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.at(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace fiberlab
