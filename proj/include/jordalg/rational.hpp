#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace jordalg {

// Thin value wrapper over mpq_class that keeps the canonical form at every step.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p" or "p/q".
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const;

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational binomial(const Rational& alpha, unsigned k);
Rational factorial(unsigned k);

} // namespace jordalg
