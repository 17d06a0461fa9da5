#include "jordalg/scalar_poly.hpp"

#include "jordalg/errors.hpp"

#include <sstream>

namespace jordalg {

ScalarPoly::ScalarPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

ScalarPoly::ScalarPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

ScalarPoly ScalarPoly::monomial(const Rational& c, unsigned k) {
    if (c.is_zero()) return {};
    ScalarPoly p;
    p.c_.assign(k + 1, Rational());
    p.c_[k] = c;
    return p;
}

void ScalarPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<unsigned> ScalarPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<unsigned>(c_.size() - 1);
}

Rational ScalarPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ScalarPoly ScalarPoly::truncated(unsigned max_degree) const {
    if (c_.size() <= max_degree + 1) return *this;
    return ScalarPoly(std::vector<Rational>(c_.begin(), c_.begin() + max_degree + 1));
}

ScalarPoly ScalarPoly::divided_by_h() const {
    if (c_.empty()) return {};
    if (!c_[0].is_zero()) throw DivisionByZero("polynomial not divisible by h: " + str());
    return ScalarPoly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    if (a.c_.size() == 1 && a.c_[0].is_one()) return b;
    if (b.c_.size() == 1 && b.c_[0].is_one()) return a;
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ScalarPoly(std::move(r));
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) { return *this = *this * o; }

std::string ScalarPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << "h";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> ScalarPoly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
}

ScalarPoly ScalarPoly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    return ScalarPoly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) { return os << p.str(); }

} // namespace jordalg
