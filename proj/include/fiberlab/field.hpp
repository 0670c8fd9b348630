#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace fiberlab {

// Which coefficient field a computation runs over: the rationals or GF(p).
class FieldSpec {
public:
    enum class Kind { rational, prime };

    static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }
    // Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    // Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    FieldSpec spec() const { return FieldSpec::prime(p_); }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }
    // a/b reduced mod p; throws std::domain_error if p divides the denominator.
    Element from_rational(const mpq_class& q) const;

    Element add(Element a, Element b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    // Canonical representative in [0, p).
    std::string to_string(Element a) const { return std::to_string(a); }
    // Symmetric representative in (-p/2, p/2], used for readable output.
    long long to_signed(Element a) const
    {
        return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

class RationalField {
public:
    using Element = mpq_class;

    FieldSpec spec() const { return FieldSpec::rational(); }
    std::uint32_t characteristic() const { return 0; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const;
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    std::string to_string(const Element& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// Calls fn with a PrimeField or RationalField matching spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.is_rational()) return std::forward<Fn>(fn)(RationalField{});
    return std::forward<Fn>(fn)(PrimeField{spec.characteristic()});
}

// Parses "a", "-a" or "a/b" into an exact rational.
mpq_class parse_rational(std::string_view text);

}  // namespace fiberlab
