#include "fiberlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fiberlab {

bool is_identifier_start(char c)
{
    auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool is_identifier_char(char c)
{
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '\'' || u >= 0x80;
}

Polynomial::Polynomial(const Monomial& m, mpq_class coeff) : num_vars_(m.num_vars())
{
    add_term(m, coeff);
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c)
{
    if (m.num_vars() != num_vars_) throw std::invalid_argument("term over a different ring");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    // Leading term: the last one in display order (highest degree, then lexicographically smallest).
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (display_order(*best, m)) best = &m;
    return *best;
}

mpq_class Polynomial::constant_term() const
{
    auto it = terms_.find(Monomial(num_vars_));
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::uint32_t Polynomial::low_degree() const
{
    std::uint32_t low = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.degree() < low) low = m.degree();
        first = false;
    }
    return low;
}

Polynomial Polynomial::operator*(const Monomial& m) const
{
    Polynomial out(num_vars_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
    return out;
}

Polynomial Polynomial::scaled(const mpq_class& c) const
{
    Polynomial out(num_vars_);
    for (const auto& [t, a] : terms_) out.add_term(t, a * c);
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const
{
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, mpq_class>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    // Highest degree first for readability.
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return display_order(b->first, a->first); });
    std::string out;
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        mpq_class mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? "-" : "+";
        }
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += fiberlab::to_string(m, vars);
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    Polynomial parse()
    {
        Polynomial result(vars_.size());
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [m, c] = term();
            result.add_term(m, sign * c);
            first = false;
            skip_space();
        }
        return result;
    }

private:
    std::pair<Monomial, mpq_class> term()
    {
        Monomial m(vars_.size());
        mpq_class c = 1;
        while (true) {
            skip_space();
            if (at_end()) fail("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else if (is_identifier_start(peek())) {
                auto name = identifier();
                auto it = std::find(vars_.begin(), vars_.end(), name);
                if (it == vars_.end()) fail("unknown variable '" + name + "'");
                std::uint32_t power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    power = static_cast<std::uint32_t>(integer().get_ui());
                }
                m = m * Monomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()), power);
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_space();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return {m, c};
    }

    mpq_class number()
    {
        mpz_class num = integer();
        skip_space();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_space();
            mpz_class den = integer();
            if (den == 0) fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        ++pos_;
        while (!at_end() && is_identifier_char(peek())) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const std::vector<std::string>& vars)
{
    return Parser(text, vars).parse();
}

}  // namespace fiberlab
