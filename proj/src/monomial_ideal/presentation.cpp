#include "fiberlab/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fiberlab {

Presentation::Presentation(std::vector<std::string> vars, std::vector<Polynomial> gens, FieldSpec field)
    : vars_(std::move(vars)), gens_(std::move(gens)), field_(field)
{
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty() || !is_identifier_start(v[0]) ||
            !std::all_of(v.begin(), v.end(), [](char c) { return is_identifier_char(c); }))
            throw std::invalid_argument("bad variable name '" + v + "'");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
    }
    for (const auto& g : gens_) {
        if (g.num_vars() != vars_.size()) throw std::invalid_argument("generator over a different ring");
        if (sgn(g.constant_term()) != 0)
            throw std::invalid_argument("generator " + g.to_string(vars_) +
                                        " has a nonzero constant term (must lie in the maximal ideal)");
    }
}

Presentation::Presentation(const MonomialIdeal& ideal, FieldSpec field)
{
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens()) gens.emplace_back(g);
    *this = Presentation(ideal.vars(), std::move(gens), field);
}

bool Presentation::is_monomial() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.terms().size() <= 1; });
}

MonomialIdeal Presentation::monomial_ideal() const
{
    std::vector<Monomial> gens;
    for (const auto& g : gens_) {
        if (g.is_zero()) continue;
        if (!g.is_monomial())
            throw std::invalid_argument("generator " + g.to_string(vars_) + " is not a monomial");
        gens.push_back(g.terms().begin()->first);
    }
    return MonomialIdeal(vars_, std::move(gens));
}

Presentation Presentation::minimalized() const
{
    if (is_monomial()) return Presentation(monomial_ideal(), field_);
    std::vector<Polynomial> gens;
    for (const auto& g : gens_) {
        if (g.is_zero()) continue;
        auto lead = g.terms().at(g.leading_monomial());
        auto monic = g.scaled(1 / lead);
        if (std::find(gens.begin(), gens.end(), monic) == gens.end()) gens.push_back(std::move(monic));
    }
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.leading_monomial() != b.leading_monomial())
            return display_order(a.leading_monomial(), b.leading_monomial());
        return a.terms() < b.terms();
    });
    return Presentation(vars_, std::move(gens), field_);
}

Presentation Presentation::with_field(FieldSpec field) const
{
    auto copy = *this;
    copy.field_ = field;
    return copy;
}

std::vector<std::string> Presentation::gen_strings() const
{
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.to_string(vars_));
    return out;
}

Presentation substitute(const Presentation& p, const std::map<std::string, std::string>& map)
{
    const std::size_t n = p.num_vars();
    auto index = [&](const std::string& name) {
        auto it = std::find(p.vars().begin(), p.vars().end(), name);
        if (it == p.vars().end()) throw std::invalid_argument("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - p.vars().begin());
    };
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i;
    for (const auto& [from, to] : map) image[index(from)] = index(to);

    std::vector<bool> kept(n, false);
    for (auto t : image) kept[t] = true;
    std::vector<std::string> vars;
    std::vector<std::size_t> position(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (kept[i]) {
            position[i] = vars.size();
            vars.push_back(p.vars()[i]);
        }

    std::vector<Polynomial> gens;
    for (const auto& g : p.gens()) {
        Polynomial out(vars.size());
        for (const auto& [m, c] : g.terms()) {
            std::vector<std::uint32_t> e(vars.size(), 0);
            for (std::size_t i = 0; i < n; ++i) e[position[image[i]]] += m[i];
            out.add_term(Monomial(std::move(e)), c);
        }
        gens.push_back(std::move(out));
    }
    return Presentation(std::move(vars), std::move(gens), p.field()).minimalized();
}

Presentation fiber_product_presentation(const Presentation& ps, const Presentation& pt)
{
    if (!(ps.field() == pt.field())) throw std::invalid_argument("fiber product of rings over different fields");
    const std::size_t ns = ps.num_vars(), nt = pt.num_vars(), n = ns + nt;
    std::vector<std::string> vars = ps.vars();
    std::set<std::string> taken(ps.vars().begin(), ps.vars().end());
    const std::set<std::string> t_names(pt.vars().begin(), pt.vars().end());
    for (const auto& original : pt.vars()) {
        auto name = original;
        while (taken.count(name) || (name != original && t_names.count(name))) name += '\'';
        taken.insert(name);
        vars.push_back(std::move(name));
    }

    auto embed = [n](const Monomial& m, std::size_t offset) {
        std::vector<std::uint32_t> e(n, 0);
        for (std::size_t i = 0; i < m.num_vars(); ++i) e[offset + i] = m[i];
        return Monomial(std::move(e));
    };
    std::vector<Polynomial> gens;
    for (const auto* factor : {&ps, &pt}) {
        const std::size_t offset = factor == &ps ? 0 : ns;
        for (const auto& g : factor->gens()) {
            Polynomial out(n);
            for (const auto& [m, c] : g.terms()) out.add_term(embed(m, offset), c);
            gens.push_back(std::move(out));
        }
    }
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            gens.emplace_back(Monomial::variable(n, i) * Monomial::variable(n, ns + j));
    return Presentation(std::move(vars), std::move(gens), ps.field());
}

nlohmann::json presentation_to_json(const Presentation& p)
{
    return {{"vars", p.vars()}, {"gens", p.gen_strings()}, {"field", p.field().to_string()}};
}

Presentation presentation_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
        throw std::invalid_argument("presentation JSON needs keys \"vars\" and \"gens\"");
    auto vars = j.at("vars").get<std::vector<std::string>>();
    auto field = j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>()) : FieldSpec::rational();
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(Polynomial::parse(g.get<std::string>(), vars));
    return Presentation(std::move(vars), std::move(gens), field);
}

}  // namespace fiberlab
