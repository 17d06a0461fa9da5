#pragma once

#include "jordalg/errors.hpp"
#include "jordalg/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jordalg {

// Dense row-major matrix over an exact commutative ring S. S{} must be the additive
// zero, S(Rational) the image of a rational, and S must provide is_zero().
template <class S>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static RingMatrix identity(size_t n) {
        RingMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = S(Rational(1));
        return m;
    }
    static RingMatrix zero(size_t rows, size_t cols) { return RingMatrix(rows, cols); }
    // Unit matrix with a one at zero-based (i, j).
    static RingMatrix unit(size_t n, size_t i, size_t j) {
        RingMatrix m(n, n);
        m(i, j) = S(Rational(1));
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    S& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const S& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    const std::vector<S>& entries() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (!square()) return false;
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) {
                const S& x = (*this)(i, j);
                if (i == j ? !(x - S(Rational(1))).is_zero() : !x.is_zero()) return false;
            }
        return true;
    }

    RingMatrix operator-() const {
        RingMatrix m(*this);
        for (auto& x : m.a_) x = -x;
        return m;
    }
    RingMatrix& operator+=(const RingMatrix& o) {
        same_shape(o, "add");
        for (size_t k = 0; k < a_.size(); ++k)
            if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
        return *this;
    }
    RingMatrix& operator-=(const RingMatrix& o) {
        same_shape(o, "sub");
        for (size_t k = 0; k < a_.size(); ++k)
            if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
        return *this;
    }
    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.c_ != b.r_)
            throw DimensionMismatch("mul " + a.shape() + " by " + b.shape());
        RingMatrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const S& x = a(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < b.c_; ++j) {
                    const S& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }
    RingMatrix& operator*=(const RingMatrix& o) { return *this = *this * o; }

    RingMatrix scaled(const S& s) const {
        RingMatrix m(r_, c_);
        if (s.is_zero()) return m;
        for (size_t k = 0; k < a_.size(); ++k)
            if (!a_[k].is_zero()) m.a_[k] = s * a_[k];
        return m;
    }
    friend RingMatrix operator*(const S& s, const RingMatrix& m) { return m.scaled(s); }

    RingMatrix transposed() const {
        RingMatrix m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    template <class F>
    auto map(F&& f) const -> RingMatrix<decltype(f(std::declval<const S&>()))> {
        RingMatrix<decltype(f(std::declval<const S&>()))> m(r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && (a - b).is_zero();
    }

    std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

private:
    void same_shape(const RingMatrix& o, const char* op) const {
        if (r_ != o.r_ || c_ != o.c_)
            throw DimensionMismatch(std::string(op) + " " + shape() + " with " + o.shape());
    }

    size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

template <class S>
RingMatrix<S> kron(const RingMatrix<S>& a, const RingMatrix<S>& b) {
    RingMatrix<S> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const S& x = a(i, j);
            if (x.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l) {
                    const S& y = b(k, l);
                    if (!y.is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

template <class S>
RingMatrix<S> commutator(const RingMatrix<S>& a, const RingMatrix<S>& b) { return a * b - b * a; }

template <class S>
RingMatrix<S> mat_pow(const RingMatrix<S>& a, unsigned k) {
    if (!a.square()) throw DimensionMismatch("power of non-square " + a.shape());
    RingMatrix<S> r = RingMatrix<S>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

// Smallest k <= rows with a^k = 0, or nullopt when a is not nilpotent.
template <class S>
std::optional<unsigned> nilpotency_index(const RingMatrix<S>& a) {
    if (!a.square()) throw DimensionMismatch("nilpotency of non-square " + a.shape());
    if (a.rows() == 0) return 0u;
    RingMatrix<S> p = a;
    for (unsigned k = 1; k <= a.rows(); ++k) {
        if (p.is_zero()) return k;
        p = p * a;
    }
    return std::nullopt;
}

// Flip operator on C^m (x) C^n: e_i (x) e_j -> e_j (x) e_i.
template <class S>
RingMatrix<S> flip(size_t m, size_t n) {
    RingMatrix<S> p(m * n, m * n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) p(j * m + i, i * n + j) = S(Rational(1));
    return p;
}

template <class S>
struct NonzeroEntry {
    size_t row, col;
    S value;
};

template <class S>
std::vector<NonzeroEntry<S>> nonzero_entries(const RingMatrix<S>& m) {
    std::vector<NonzeroEntry<S>> out;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back({i, j, m(i, j)});
    return out;
}

} // namespace jordalg
