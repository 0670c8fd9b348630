#pragma once

#include "fiberlab/local_algebra.hpp"
#include "fiberlab/module.hpp"
#include "fiberlab/monomial_ideal.hpp"
#include "fiberlab/presentation.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fiberlab::test {

inline MonomialIdeal ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens)
{
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(Polynomial::parse(g, vars).leading_monomial());
    return MonomialIdeal(vars, ms);
}

inline Presentation pres(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                         FieldSpec f = FieldSpec::rational())
{
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(Polynomial::parse(g, vars));
    return Presentation(vars, ps, f);
}

template <class K>
std::shared_ptr<const LocalAlgebra<K>> algebra(const Presentation& p, std::size_t order)
{
    return std::make_shared<const LocalAlgebra<K>>(p, order);
}

template <class K>
std::shared_ptr<const LocalAlgebra<K>> artinian(const MonomialIdeal& i, FieldSpec f)
{
    return algebra<K>(Presentation(i, f), *artinian_order(i));
}

inline std::vector<std::string> strings(const std::vector<Monomial>& ms, const std::vector<std::string>& vars)
{
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(to_string(m, vars));
    return out;
}

}  // namespace fiberlab::test
