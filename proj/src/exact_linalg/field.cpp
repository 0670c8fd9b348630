#include "fiberlab/field.hpp"

#include <charconv>
#include <stdexcept>

namespace fiberlab {

bool is_prime_number(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime_number(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "q" || text == "Q") return rational();
    if (text.substr(0, 3) == "fp:") {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ull << 31))
            throw std::invalid_argument("bad field specification '" + std::string(text) + "'");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("bad field specification '" + std::string(text) +
                                "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const
{
    return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldSpec::prime(p).characteristic()) {}

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p_) + ")");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<Element>(result);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const
{
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (den == 0)
        throw std::domain_error("denominator of " + q.get_str() + " vanishes in GF(" +
                                std::to_string(p_) + ")");
    if (num < 0) num += p_;
    return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

RationalField::Element RationalField::inv(const Element& a) const
{
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const
{
    if (sgn(b) == 0) throw std::domain_error("division by zero in Q");
    return a / b;
}

mpq_class parse_rational(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty number");
    auto check_digits = [&](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) throw std::invalid_argument("bad number '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad number '" + std::string(text) + "'");
    };
    auto strip_plus = [](std::string_view s) {
        return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        check_digits(text);
        return mpq_class(mpz_class(std::string(strip_plus(text))));
    }
    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    check_digits(num);
    check_digits(den);
    mpz_class d(std::string(strip_plus(den)));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(mpz_class(std::string(strip_plus(num))), d);
    q.canonicalize();
    return q;
}

}  // namespace fiberlab
