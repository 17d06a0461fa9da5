#include "jordalg/series.hpp"

namespace jordalg {

Rational SeriesSpec::coefficient(unsigned k) const {
    switch (kind) {
    case Kind::sqrt1p:
        return jordalg::binomial(Rational(1, 2), k);
    case Kind::binomial:
        return jordalg::binomial(alpha, k);
    case Kind::exp:
        return Rational(1) / factorial(k);
    case Kind::log1p:
        if (k == 0) return {};
        return Rational(k % 2 ? 1 : -1, static_cast<long>(k));
    case Kind::arcsinh: {
        if (k % 2 == 0) return {};
        unsigned m = (k - 1) / 2;
        // (-1)^m (2m)! / (4^m (m!)^2 (2m+1))
        Rational num = factorial(2 * m);
        Rational den = factorial(m) * factorial(m) * Rational(static_cast<long>(2 * m + 1));
        for (unsigned i = 0; i < m; ++i) den *= Rational(4);
        Rational c = num / den;
        return m % 2 ? -c : c;
    }
    }
    return {};
}

std::string SeriesSpec::name() const {
    switch (kind) {
    case Kind::sqrt1p: return "sqrt1p";
    case Kind::arcsinh: return "arcsinh";
    case Kind::exp: return "exp";
    case Kind::log1p: return "log1p";
    case Kind::binomial: return "binomial(" + alpha.str() + ")";
    }
    return "?";
}

} // namespace jordalg
