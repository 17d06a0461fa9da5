#pragma once

#include "jordalg/errors.hpp"
#include "jordalg/rational.hpp"
#include "jordalg/scalar_poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <string>
#include <vector>

namespace jordalg {

struct Window {
    int lo = -12;
    int hi = 6;
    friend bool operator==(const Window&, const Window&) = default;
};

namespace detail {
inline Rational unit_inverse(const Rational& c) {
    if (c.is_zero()) throw InvertOfZero("zero leading coefficient");
    return Rational(1) / c;
}
inline ScalarPoly unit_inverse(const ScalarPoly& c) {
    if (c.is_zero()) throw InvertOfZero("zero leading coefficient");
    if (!c.is_constant()) throw InvertOfZero("leading coefficient " + c.str() + " is not a unit");
    return ScalarPoly(Rational(1) / c.coeff(0));
}
inline std::string coeff_text(const Rational& c) { return c.str(); }
inline std::string coeff_text(const ScalarPoly& c) { return "(" + c.str() + ")"; }
} // namespace detail

// Truncated Laurent series in t = u - 1 with q = u^L. Coefficients may be rationals
// or polynomials in h. Constants built without a window are exact and adopt the
// window of whatever they meet.
template <class C>
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(const C& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    LaurentScalar(long c) : LaurentScalar(C(Rational(c))) {}
    LaurentScalar(int c) : LaurentScalar(C(Rational(static_cast<long>(c)))) {}
    LaurentScalar(const Rational& c) requires(!std::is_same_v<C, Rational>) : LaurentScalar(C(c)) {}

    static LaurentScalar from_coeffs(int min_order, std::vector<C> coeffs, Window w, int root) {
        LaurentScalar r;
        r.min_ = min_order;
        r.c_ = std::move(coeffs);
        r.bounded_ = true;
        r.w_ = w;
        r.root_ = root;
        r.normalize();
        return r;
    }

    // t = u - 1.
    static LaurentScalar t(Window w, int root) { return from_coeffs(1, {C(Rational(1))}, w, root); }

    // u^m = (1+t)^m expanded inside the window; the true q-exponent is m / root.
    static LaurentScalar u_power(long m, Window w, int root) {
        std::vector<C> c;
        for (int k = 0; k <= w.hi; ++k) {
            Rational b = binomial(Rational(m), static_cast<unsigned>(k));
            if (m >= 0 && k > m) break;
            c.push_back(C(b));
        }
        return from_coeffs(0, std::move(c), w, root);
    }

    bool bounded() const { return bounded_; }
    Window window() const { return w_; }
    int root() const { return root_; }
    int min_order() const { return c_.empty() ? 0 : min_; }
    int max_order() const { return c_.empty() ? 0 : min_ + static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    C coeff(int order) const {
        if (c_.empty() || order < min_ || order > max_order()) return C();
        return c_[static_cast<size_t>(order - min_)];
    }

    LaurentScalar operator-() const {
        LaurentScalar r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) { return combine(a, b, false); }
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return combine(a, b, true); }
    LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
    LaurentScalar& operator-=(const LaurentScalar& o) { return *this = *this - o; }

    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r = shell(a, b);
        if (a.c_.empty() || b.c_.empty()) return r;
        int lo_order = a.min_ + b.min_;
        int hi_order = a.max_order() + b.max_order();
        if (r.bounded_) hi_order = std::min(hi_order, r.w_.hi);
        if (hi_order < lo_order) return r;
        std::vector<C> out(static_cast<size_t>(hi_order - lo_order + 1));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int order = lo_order + static_cast<int>(i + j);
                if (order > hi_order) break;
                if (b.c_[j].is_zero()) continue;
                out[static_cast<size_t>(order - lo_order)] += a.c_[i] * b.c_[j];
            }
        }
        r.min_ = lo_order;
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }
    LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

    LaurentScalar invert() const {
        if (c_.empty()) throw InvertOfZero("inverse of zero Laurent series");
        if (!bounded_) {
            if (c_.size() == 1 && min_ == 0) return LaurentScalar(detail::unit_inverse(c_[0]));
            throw InvertOfZero("inverse of an unwindowed non-constant series");
        }
        C lead_inv = detail::unit_inverse(c_[0]);
        int m = min_;
        int count = w_.hi + m + 1;
        std::vector<C> b;
        if (count > 0) {
            b.reserve(static_cast<size_t>(count));
            for (int k = 0; k < count; ++k) {
                C acc = (k == 0) ? C(Rational(1)) : C();
                for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
                    acc -= c_[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
                b.push_back(acc * lead_inv);
            }
        }
        return from_coeffs(-m, std::move(b), w_, root_);
    }

    // Value of the series at q = 1; throws PoleAtOne if a negative order survives.
    C limit_at_1() const {
        for (int o = min_order(); o < 0 && !c_.empty(); ++o)
            if (!coeff(o).is_zero())
                throw PoleAtOne("nonzero coefficient at t^" + std::to_string(o));
        return coeff(0);
    }

    bool has_negative_orders() const { return !c_.empty() && min_ < 0; }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.min_order() == b.min_order() && a.c_ == b.c_;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << detail::coeff_text(c_[i]);
            int o = min_ + static_cast<int>(i);
            if (o != 0) os << "*t^" << o;
        }
        return os.str();
    }

private:
    static LaurentScalar shell(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar r;
        if (a.root_ && b.root_ && a.root_ != b.root_)
            throw IncompatibleRoot("mixing q = u^" + std::to_string(a.root_) + " with q = u^" + std::to_string(b.root_));
        r.root_ = a.root_ ? a.root_ : b.root_;
        if (a.bounded_ && b.bounded_) {
            r.bounded_ = true;
            r.w_ = {std::max(a.w_.lo, b.w_.lo), std::min(a.w_.hi, b.w_.hi)};
        } else if (a.bounded_ || b.bounded_) {
            r.bounded_ = true;
            r.w_ = a.bounded_ ? a.w_ : b.w_;
        }
        return r;
    }

    static LaurentScalar combine(const LaurentScalar& a, const LaurentScalar& b, bool subtract) {
        LaurentScalar r = shell(a, b);
        if (a.c_.empty() && b.c_.empty()) return r;
        int lo_order = std::min(a.c_.empty() ? b.min_ : a.min_, b.c_.empty() ? a.min_ : b.min_);
        int hi_order = std::max(a.c_.empty() ? b.max_order() : a.max_order(),
                                b.c_.empty() ? a.max_order() : b.max_order());
        std::vector<C> out(static_cast<size_t>(hi_order - lo_order + 1));
        for (size_t i = 0; i < a.c_.size(); ++i) out[static_cast<size_t>(a.min_ - lo_order) + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) {
            auto& slot = out[static_cast<size_t>(b.min_ - lo_order) + i];
            if (subtract) slot -= b.c_[i];
            else slot += b.c_[i];
        }
        r.min_ = lo_order;
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }

    void normalize() {
        if (bounded_) {
            int top = max_order();
            if (!c_.empty() && top > w_.hi) {
                int keep = w_.hi - min_ + 1;
                c_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
            }
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            min_ = 0;
            return;
        }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            min_ += static_cast<int>(lead);
        }
        if (bounded_ && min_ < w_.lo)
            throw WindowUnderflow("order t^" + std::to_string(min_) + " below window floor " + std::to_string(w_.lo));
    }

    int min_ = 0;
    std::vector<C> c_;
    bool bounded_ = false;
    Window w_{};
    int root_ = 0;
};

using QScalar = LaurentScalar<Rational>;
using QhScalar = LaurentScalar<ScalarPoly>;

// q^(m / L) for q = u^L.
template <class C = Rational>
LaurentScalar<C> q_power(long exponent_numerator, int L, Window w) {
    if (L <= 0) throw IncompatibleRoot("root index must be positive");
    return LaurentScalar<C>::u_power(exponent_numerator, w, L);
}

// q^alpha for rational alpha; throws IncompatibleRoot if alpha * L is not an integer.
template <class C = Rational>
LaurentScalar<C> q_power_rational(const Rational& alpha, int L, Window w) {
    Rational scaled = alpha * Rational(static_cast<long>(L));
    if (scaled.denominator() != 1)
        throw IncompatibleRoot("q^(" + alpha.str() + ") is not a power of u with L = " + std::to_string(L));
    return q_power<C>(scaled.numerator().get_si(), L, w);
}

template <class C>
C laurent_limit_at_1(const LaurentScalar<C>& a) { return a.limit_at_1(); }

} // namespace jordalg
