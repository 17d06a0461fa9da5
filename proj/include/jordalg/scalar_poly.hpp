#pragma once

#include "jordalg/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jordalg {

// Polynomial in the formal deformation parameter h, coefficient i is that of h^i.
class ScalarPoly {
public:
    ScalarPoly() = default;
    ScalarPoly(const Rational& c);
    ScalarPoly(long c) : ScalarPoly(Rational(c)) {}
    ScalarPoly(int c) : ScalarPoly(Rational(static_cast<long>(c))) {}
    explicit ScalarPoly(std::vector<Rational> coeffs);

    static ScalarPoly h() { return monomial(Rational(1), 1); }
    static ScalarPoly monomial(const Rational& c, unsigned k);

    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(); }
    std::optional<unsigned> degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational at_zero() const { return coeff(0); }
    Rational evaluate(const Rational& x) const;
    // Drops every power above max_degree.
    ScalarPoly truncated(unsigned max_degree) const;
    // Exact division by h; throws if the constant term is nonzero.
    ScalarPoly divided_by_h() const;

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly& operator*=(const ScalarPoly& o);

    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }
    friend bool operator<(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ < b.c_; }

    // "1/2*h - 3*h^2"; zero prints as "0".
    std::string str() const;
    std::vector<std::string> to_strings() const;
    static ScalarPoly from_strings(const std::vector<std::string>& coeffs);

private:
    void normalize();
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);

} // namespace jordalg
