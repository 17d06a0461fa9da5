#pragma once

#include "jordalg/ring_matrix.hpp"
#include "jordalg/scalar_poly.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace jordalg {

using Mat = RingMatrix<ScalarPoly>;

enum class AlgebraTag { classical, jordanian, qdeformed };

struct GenSymbol {
    AlgebraTag tag = AlgebraTag::classical;
    std::string name;
    friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
    friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

inline GenSymbol csym(std::string n) { return {AlgebraTag::classical, std::move(n)}; }
inline GenSymbol jsym(std::string n) { return {AlgebraTag::jordanian, std::move(n)}; }
inline GenSymbol qsym(std::string n) { return {AlgebraTag::qdeformed, std::move(n)}; }

using Word = std::vector<GenSymbol>;

// Noncommutative polynomial: sum of coefficient * word, like words merged.
class GenExpr {
public:
    GenExpr() = default;
    GenExpr(const ScalarPoly& c);
    GenExpr(long c) : GenExpr(ScalarPoly(c)) {}
    GenExpr(int c) : GenExpr(ScalarPoly(c)) {}
    GenExpr(const GenSymbol& s);

    static GenExpr word(Word w, ScalarPoly c = ScalarPoly(1));
    static GenExpr unit() { return GenExpr(ScalarPoly(1)); }

    const std::map<Word, ScalarPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::set<GenSymbol> symbols() const;
    void add_term(const Word& w, const ScalarPoly& c);

    GenExpr operator-() const;
    GenExpr& operator+=(const GenExpr& o);
    GenExpr& operator-=(const GenExpr& o);
    friend GenExpr operator+(GenExpr a, const GenExpr& b) { return a += b; }
    friend GenExpr operator-(GenExpr a, const GenExpr& b) { return a -= b; }
    friend GenExpr operator*(const GenExpr& a, const GenExpr& b);
    friend GenExpr operator*(const ScalarPoly& c, const GenExpr& a);
    friend bool operator==(const GenExpr& a, const GenExpr& b) { return a.t_ == b.t_; }

    // "(1/2)·T·H3 + (-1/2)·H3·T"
    std::string str() const;

private:
    std::map<Word, ScalarPoly> t_;
};

GenExpr comm(const GenExpr& a, const GenExpr& b);
GenExpr power(const GenExpr& a, unsigned k);

// Sum of pure tensors of words, uniform degree 2 or 3.
class TensorExpr {
public:
    using Legs = std::vector<Word>;

    explicit TensorExpr(unsigned degree = 2) : deg_(degree) {}
    static TensorExpr unit(unsigned degree);
    static TensorExpr pure(const std::vector<GenExpr>& legs);

    unsigned degree() const { return deg_; }
    const std::map<Legs, ScalarPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const Legs& legs, const ScalarPoly& c);

    TensorExpr operator-() const;
    TensorExpr& operator+=(const TensorExpr& o);
    TensorExpr& operator-=(const TensorExpr& o);
    friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) { return a += b; }
    friend TensorExpr operator-(TensorExpr a, const TensorExpr& b) { return a -= b; }
    friend TensorExpr operator*(const TensorExpr& a, const TensorExpr& b);
    friend TensorExpr operator*(const ScalarPoly& c, const TensorExpr& a);
    friend bool operator==(const TensorExpr& a, const TensorExpr& b) { return a.deg_ == b.deg_ && a.t_ == b.t_; }

    std::string str() const;

private:
    unsigned deg_;
    std::map<Legs, ScalarPoly> t_;
};

TensorExpr tensor(const GenExpr& a, const GenExpr& b);
TensorExpr tensor(const GenExpr& a, const GenExpr& b, const GenExpr& c);
TensorExpr tensor_power(const TensorExpr& a, unsigned k);
// Swap legs 1 and 2 of a degree-2 expression.
TensorExpr opposite(const TensorExpr& e);
// Expand a degree-2 expression in one leg by a map on words; used for (Δ⊗id) and (id⊗Δ).
TensorExpr expand_leg(const TensorExpr& e, unsigned leg, const std::map<GenSymbol, TensorExpr>& delta);

// Generator -> matrix assignment over a scalar ring, all matrices of one dimension.
template <class S>
class RepAssignment {
public:
    RepAssignment() = default;
    explicit RepAssignment(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    void set(const GenSymbol& s, RingMatrix<S> m) {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionMismatch("symbol " + s.name + " gets " + m.shape() + " in a rep of dimension " +
                                    std::to_string(dim_));
        map_[s] = std::move(m);
    }
    bool has(const GenSymbol& s) const { return map_.count(s) != 0; }
    const RingMatrix<S>& at(const GenSymbol& s) const {
        auto it = map_.find(s);
        if (it == map_.end()) throw UnassignedSymbol("no matrix for symbol " + s.name);
        return it->second;
    }
    const std::map<GenSymbol, RingMatrix<S>>& entries() const { return map_; }

private:
    size_t dim_ = 0;
    std::map<GenSymbol, RingMatrix<S>> map_;
};

using Rep = RepAssignment<ScalarPoly>;

template <class S>
RingMatrix<S> word_eval(const Word& w, const RepAssignment<S>& rho) {
    if (w.empty()) return RingMatrix<S>::identity(rho.dim());
    RingMatrix<S> m = rho.at(w[0]);
    for (size_t k = 1; k < w.size(); ++k) m = m * rho.at(w[k]);
    return m;
}

template <class S>
RingMatrix<S> expr_eval(const GenExpr& e, const RepAssignment<S>& rho) {
    RingMatrix<S> sum(rho.dim(), rho.dim());
    for (const auto& [w, c] : e.terms()) sum += word_eval(w, rho).scaled(S(c));
    return sum;
}

template <class S>
RingMatrix<S> tensor_eval(const TensorExpr& e, const std::vector<const RepAssignment<S>*>& reps) {
    if (reps.size() != e.degree())
        throw DimensionMismatch("tensor of degree " + std::to_string(e.degree()) + " evaluated on " +
                                std::to_string(reps.size()) + " legs");
    size_t dim = 1;
    for (auto* r : reps) dim *= r->dim();
    RingMatrix<S> sum(dim, dim);
    for (const auto& [legs, c] : e.terms()) {
        RingMatrix<S> m = word_eval(legs[0], *reps[0]);
        for (size_t k = 1; k < legs.size(); ++k) m = kron(m, word_eval(legs[k], *reps[k]));
        sum += m.scaled(S(c));
    }
    return sum;
}

template <class S>
RingMatrix<S> tensor_eval(const TensorExpr& e, const RepAssignment<S>& a, const RepAssignment<S>& b) {
    return tensor_eval<S>(e, {&a, &b});
}

template <class S>
RingMatrix<S> tensor_eval(const TensorExpr& e, const RepAssignment<S>& a, const RepAssignment<S>& b,
                          const RepAssignment<S>& c) {
    return tensor_eval<S>(e, {&a, &b, &c});
}

enum class HomKind { homomorphism, anti_homomorphism };

GenExpr hom_extend(const std::map<GenSymbol, GenExpr>& phi, const GenExpr& e,
                   HomKind kind = HomKind::homomorphism);
TensorExpr hom_extend(const std::map<GenSymbol, TensorExpr>& phi, const GenExpr& e,
                      HomKind kind = HomKind::homomorphism);

// Symbol-wise image of a word under phi, in order (or reversed for anti).
TensorExpr hom_extend_word(const std::map<GenSymbol, TensorExpr>& phi, const Word& w, unsigned degree,
                           HomKind kind = HomKind::homomorphism);

// Primitive coproduct x -> x⊗1 + 1⊗x on the given symbols.
std::map<GenSymbol, TensorExpr> primitive_coproduct(const std::vector<GenSymbol>& syms);
// x -> -x on the given symbols; extend anti-homomorphically.
std::map<GenSymbol, GenExpr> classical_antipode(const std::vector<GenSymbol>& syms);

std::string word_str(const Word& w);

} // namespace jordalg
