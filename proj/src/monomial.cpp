#include "monlef/monomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "monlef/util.hpp"

namespace monlef {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    if (exps_.empty())
        throw std::invalid_argument("monomial needs at least one variable");
    for (Exponent e : exps_)
        if (e < 0)
            throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::one(int n) {
    return Monomial(std::vector<Exponent>((std::size_t)n, 0));
}

Monomial Monomial::variable(int n, int index, Exponent e) {
    if (index < 0 || index >= n)
        throw std::invalid_argument("variable index out of range");
    std::vector<Exponent> exps((std::size_t)n, 0);
    exps[(std::size_t)index] = e;
    return Monomial(std::move(exps));
}

Exponent Monomial::degree() const {
    Exponent d = 0;
    for (Exponent e : exps_)
        d = checked_add(d, e);
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (vars() != m.vars())
        throw std::invalid_argument("monomials live in different rings");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (vars() != rhs.vars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<Exponent> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps[i] = checked_add(exps_[i], rhs.exps_[i]);
    return Monomial(std::move(exps));
}

Monomial Monomial::colon(const Monomial& m) const {
    if (vars() != m.vars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<Exponent> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps[i] = std::max<Exponent>(exps_[i] - m.exps_[i], 0);
    return Monomial(std::move(exps));
}

Monomial Monomial::divide(const Monomial& m) const {
    if (!m.divides(*this))
        throw std::invalid_argument("inexact monomial division");
    std::vector<Exponent> exps(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        exps[i] = exps_[i] - m.exps_[i];
    return Monomial(std::move(exps));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<Exponent> exps(a.exps_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomials live in different rings");
    std::vector<Exponent> exps(a.exps_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(exps));
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("monomials live in different rings");
    Exponent da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    for (int i = 0; i < a.vars(); ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = (std::size_t)m.vars();
    for (Exponent e : m.exponents())
        h = h * 1000003u + (std::size_t)e + 0x9e3779b9u;
    return h;
}

std::string render_monomial(const Monomial& m) {
    static const char* aliases[] = {"x", "y", "z", "w"};
    if (m.is_one())
        return "1";
    std::string out;
    for (int i = 0; i < m.vars(); ++i) {
        Exponent e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        if (m.vars() <= 4)
            out += aliases[i];
        else
            out += "x" + std::to_string(i + 1);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << render_monomial(m);
}

} // namespace monlef
