#pragma once

#include "jordalg/laurent.hpp"
#include "jordalg/ring_matrix.hpp"

#include <string>

namespace jordalg {

// Maclaurin coefficients of the handful of functions the deformation needs.
struct SeriesSpec {
    enum class Kind { sqrt1p, arcsinh, exp, log1p, binomial };
    Kind kind = Kind::exp;
    Rational alpha{};  // exponent for binomial: (1 + x)^alpha

    static SeriesSpec sqrt1p() { return {Kind::sqrt1p, Rational(1, 2)}; }
    static SeriesSpec arcsinh() { return {Kind::arcsinh, {}}; }
    static SeriesSpec exp() { return {Kind::exp, {}}; }
    static SeriesSpec log1p() { return {Kind::log1p, {}}; }
    static SeriesSpec binomial(const Rational& a) { return {Kind::binomial, a}; }

    Rational coefficient(unsigned k) const;
    std::string name() const;
};

// Sum of c_k a^k over k below the nilpotency index of a.
template <class S>
RingMatrix<S> series_apply(const SeriesSpec& spec, const RingMatrix<S>& a) {
    auto idx = nilpotency_index(a);
    if (!idx) throw NotNilpotentError(spec.name() + " on a non-nilpotent " + a.shape() + " matrix");
    RingMatrix<S> sum(a.rows(), a.cols());
    RingMatrix<S> p = RingMatrix<S>::identity(a.rows());
    for (unsigned k = 0; k < *idx; ++k) {
        Rational c = spec.coefficient(k);
        if (!c.is_zero()) sum += p.scaled(S(c));
        p = p * a;
    }
    return sum;
}

// (I + n)^{-1} for nilpotent n, by the terminating geometric series.
template <class S>
RingMatrix<S> mat_inverse_unipotent(const RingMatrix<S>& a) {
    if (!a.square()) throw NotUnipotent("non-square " + a.shape());
    RingMatrix<S> n = a - RingMatrix<S>::identity(a.rows());
    if (!nilpotency_index(n)) throw NotUnipotent("a - I is not nilpotent");
    return series_apply(SeriesSpec::binomial(Rational(-1)), n);
}

// Symmetric q-integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} with q = u^L.
template <class C>
LaurentScalar<C> q_integer(unsigned n, int L, Window w) {
    LaurentScalar<C> s;
    for (unsigned j = 0; j < n; ++j) {
        long e = static_cast<long>(n) - 1 - 2 * static_cast<long>(j);
        s += q_power<C>(e * L, L, w);
    }
    return s;
}

template <class C>
LaurentScalar<C> q_factorial(unsigned n, int L, Window w) {
    LaurentScalar<C> f = LaurentScalar<C>::from_coeffs(0, {C(Rational(1))}, w, L);
    for (unsigned k = 2; k <= n; ++k) f *= q_integer<C>(k, L, w);
    return f;
}

// Deformed exponential E_q(arg) = sum arg^n / [n]! on a nilpotent argument.
template <class C>
RingMatrix<LaurentScalar<C>> q_series_apply(const RingMatrix<LaurentScalar<C>>& arg, int L, Window w,
                                            unsigned order_bound) {
    using S = LaurentScalar<C>;
    auto idx = nilpotency_index(arg);
    if (!idx || *idx > order_bound)
        throw NotNilpotentError("E_q argument is not nilpotent within order " + std::to_string(order_bound));
    RingMatrix<S> sum(arg.rows(), arg.cols());
    RingMatrix<S> p = RingMatrix<S>::identity(arg.rows());
    for (unsigned n = 0; n < *idx; ++n) {
        sum += p.scaled(q_factorial<C>(n, L, w).invert());
        p = p * arg;
    }
    return sum;
}

} // namespace jordalg
