#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fiberlab {

// Exponent vector over an ordered list of ring variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t num_vars, std::size_t index, std::uint32_t power = 1);

    std::size_t num_vars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const;
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const;
    // Indices of variables with positive exponent.
    std::vector<std::size_t> support() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

// Lower degree first, then lexicographically larger exponent vectors first
// (x, y, x^2, x*y, y^2). Canonical order of every generator list.
bool display_order(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace fiberlab
