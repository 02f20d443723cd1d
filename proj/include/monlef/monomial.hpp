#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace monlef {

using Exponent = long long;

/// A monomial in n variables, stored as its exponent vector. Immutable after
/// construction; the degree is derived, never stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exps);

    static Monomial one(int n);
    /// x_{index+1}^e in n variables (index is 0-based).
    static Monomial variable(int n, int index, Exponent e = 1);

    int vars() const { return (int)exps_.size(); }
    Exponent degree() const;
    Exponent exponent(int i) const { return exps_[(std::size_t)i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    bool is_one() const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& rhs) const;
    /// this / gcd(this, m); the generator map behind colon ideals.
    Monomial colon(const Monomial& m) const;
    /// Exact quotient this / m; throws unless m divides this.
    Monomial divide(const Monomial& m) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

/// Graded lexicographic comparison with x1 > x2 > ... > xn.
/// Returns <0 if a is smaller, 0 if equal, >0 if a is larger.
int grlex_compare(const Monomial& a, const Monomial& b);

/// Canonical storage order: largest monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) > 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// Text form, e.g. "x^2*y" (variables x,y,z,w for n <= 4, else x1..xn).
std::string render_monomial(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

} // namespace monlef
