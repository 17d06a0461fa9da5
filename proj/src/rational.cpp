#include "jordalg/rational.hpp"

#include "jordalg/errors.hpp"

namespace jordalg {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw ParseError("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(const Rational& alpha, unsigned k) {
    Rational r(1);
    for (unsigned j = 0; j < k; ++j) r = r * (alpha - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
    return r;
}

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

} // namespace jordalg
