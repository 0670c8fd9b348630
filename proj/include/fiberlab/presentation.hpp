#pragma once

#include "fiberlab/field.hpp"
#include "fiberlab/monomial_ideal.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fiberlab {

// Polynomial with exact rational coefficients; zero terms are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}
    Polynomial(const Monomial& m, mpq_class coeff = 1);

    // Grammar: terms joined by '+'/'-'; a term is factors joined by '*'; a factor
    // is an integer, a fraction a/b, or a variable with optional '^' exponent.
    static Polynomial parse(std::string_view text, const std::vector<std::string>& vars);

    std::size_t num_vars() const { return num_vars_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const Monomial& leading_monomial() const;
    mpq_class constant_term() const;
    // Smallest total degree of a term; 0 for the zero polynomial.
    std::uint32_t low_degree() const;

    void add_term(const Monomial& m, const mpq_class& c);
    Polynomial operator*(const Monomial& m) const;
    Polynomial scaled(const mpq_class& c) const;

    std::string to_string(const std::vector<std::string>& vars) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t num_vars_ = 0;
    std::map<Monomial, mpq_class> terms_;
};

// Quotient k[vars]/(gens) over a field, with every generator in the maximal ideal.
// Generators are kept as given; minimalized() produces the canonical form.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::vector<std::string> vars, std::vector<Polynomial> gens, FieldSpec field);
    Presentation(const MonomialIdeal& ideal, FieldSpec field);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const FieldSpec& field() const { return field_; }
    std::size_t num_vars() const { return vars_.size(); }

    bool is_monomial() const;
    // Throws std::invalid_argument unless every generator is a single term.
    MonomialIdeal monomial_ideal() const;
    // Monomial generators: divisibility-minimal. Otherwise: zero and duplicate
    // generators removed, each scaled to leading coefficient 1, sorted.
    Presentation minimalized() const;
    Presentation with_field(FieldSpec field) const;

    std::vector<std::string> gen_strings() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Polynomial> gens_;
    FieldSpec field_ = FieldSpec::rational();
};

// Variable-to-variable substitution, minimalized; eliminated variables are dropped.
Presentation substitute(const Presentation& p, const std::map<std::string, std::string>& map);

// k[x]/(f) x_k k[y]/(g) = k[x, y]/(f, g, x_i*y_j). Clashing names in the second
// factor get primes appended. Generators are not minimalized.
Presentation fiber_product_presentation(const Presentation& ps, const Presentation& pt);

// {"vars": [...], "gens": [...], "field": "q"}
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

bool is_identifier_start(char c);
bool is_identifier_char(char c);

}  // namespace fiberlab
