#include "jordalg/free_algebra.hpp"

#include <sstream>

namespace jordalg {

GenExpr::GenExpr(const ScalarPoly& c) {
    if (!c.is_zero()) t_[Word{}] = c;
}

GenExpr::GenExpr(const GenSymbol& s) { t_[Word{s}] = ScalarPoly(1); }

GenExpr GenExpr::word(Word w, ScalarPoly c) {
    GenExpr e;
    e.add_term(w, c);
    return e;
}

void GenExpr::add_term(const Word& w, const ScalarPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

std::set<GenSymbol> GenExpr::symbols() const {
    std::set<GenSymbol> s;
    for (const auto& [w, c] : t_) s.insert(w.begin(), w.end());
    return s;
}

GenExpr GenExpr::operator-() const {
    GenExpr r(*this);
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

GenExpr& GenExpr::operator+=(const GenExpr& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

GenExpr& GenExpr::operator-=(const GenExpr& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

GenExpr operator*(const GenExpr& a, const GenExpr& b) {
    GenExpr r;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

GenExpr operator*(const ScalarPoly& c, const GenExpr& a) {
    GenExpr r;
    for (const auto& [w, x] : a.t_) r.add_term(w, c * x);
    return r;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += "·";
        s += w[k].name;
    }
    return s;
}

std::string GenExpr::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!w.empty()) os << "·" << word_str(w);
    }
    return os.str();
}

GenExpr comm(const GenExpr& a, const GenExpr& b) { return a * b - b * a; }

GenExpr power(const GenExpr& a, unsigned k) {
    GenExpr r = GenExpr::unit();
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

TensorExpr TensorExpr::unit(unsigned degree) {
    TensorExpr t(degree);
    t.add_term(Legs(degree), ScalarPoly(1));
    return t;
}

TensorExpr TensorExpr::pure(const std::vector<GenExpr>& legs) {
    TensorExpr acc(static_cast<unsigned>(legs.size()));
    acc.add_term(Legs(legs.size()), ScalarPoly(1));
    for (size_t k = 0; k < legs.size(); ++k) {
        TensorExpr next(acc.deg_);
        for (const auto& [ls, c] : acc.t_)
            for (const auto& [w, x] : legs[k].terms()) {
                Legs l = ls;
                l[k] = w;
                next.add_term(l, c * x);
            }
        acc = std::move(next);
    }
    return acc;
}

void TensorExpr::add_term(const Legs& legs, const ScalarPoly& c) {
    if (legs.size() != deg_) throw DimensionMismatch("tensor term of wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(legs, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TensorExpr TensorExpr::operator-() const {
    TensorExpr r(*this);
    for (auto& [l, c] : r.t_) c = -c;
    return r;
}

TensorExpr& TensorExpr::operator+=(const TensorExpr& o) {
    if (o.deg_ != deg_) throw DimensionMismatch("adding tensors of different degree");
    for (const auto& [l, c] : o.t_) add_term(l, c);
    return *this;
}

TensorExpr& TensorExpr::operator-=(const TensorExpr& o) {
    if (o.deg_ != deg_) throw DimensionMismatch("subtracting tensors of different degree");
    for (const auto& [l, c] : o.t_) add_term(l, -c);
    return *this;
}

TensorExpr operator*(const TensorExpr& a, const TensorExpr& b) {
    if (a.deg_ != b.deg_) throw DimensionMismatch("multiplying tensors of different degree");
    TensorExpr r(a.deg_);
    for (const auto& [la, ca] : a.t_)
        for (const auto& [lb, cb] : b.t_) {
            TensorExpr::Legs l = la;
            for (size_t k = 0; k < l.size(); ++k) l[k].insert(l[k].end(), lb[k].begin(), lb[k].end());
            r.add_term(l, ca * cb);
        }
    return r;
}

TensorExpr operator*(const ScalarPoly& c, const TensorExpr& a) {
    TensorExpr r(a.deg_);
    for (const auto& [l, x] : a.t_) r.add_term(l, c * x);
    return r;
}

std::string TensorExpr::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [legs, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")·";
        for (size_t k = 0; k < legs.size(); ++k) {
            if (k) os << " ⊗ ";
            os << word_str(legs[k]);
        }
    }
    return os.str();
}

TensorExpr tensor(const GenExpr& a, const GenExpr& b) { return TensorExpr::pure({a, b}); }
TensorExpr tensor(const GenExpr& a, const GenExpr& b, const GenExpr& c) { return TensorExpr::pure({a, b, c}); }

TensorExpr tensor_power(const TensorExpr& a, unsigned k) {
    TensorExpr r = TensorExpr::unit(a.degree());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

TensorExpr opposite(const TensorExpr& e) {
    if (e.degree() != 2) throw DimensionMismatch("opposite needs a degree-2 tensor");
    TensorExpr r(2);
    for (const auto& [legs, c] : e.terms()) r.add_term({legs[1], legs[0]}, c);
    return r;
}

TensorExpr hom_extend_word(const std::map<GenSymbol, TensorExpr>& phi, const Word& w, unsigned degree,
                           HomKind kind) {
    TensorExpr r = TensorExpr::unit(degree);
    auto image = [&](const GenSymbol& s) -> const TensorExpr& {
        auto it = phi.find(s);
        if (it == phi.end()) throw UnassignedSymbol("no image for symbol " + s.name);
        if (it->second.degree() != degree) throw DimensionMismatch("mixed tensor degrees in map");
        return it->second;
    };
    if (kind == HomKind::homomorphism)
        for (const auto& s : w) r = r * image(s);
    else
        for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * image(*it);
    return r;
}

TensorExpr hom_extend(const std::map<GenSymbol, TensorExpr>& phi, const GenExpr& e, HomKind kind) {
    unsigned degree = phi.empty() ? 2 : phi.begin()->second.degree();
    TensorExpr r(degree);
    for (const auto& [w, c] : e.terms()) r += c * hom_extend_word(phi, w, degree, kind);
    return r;
}

GenExpr hom_extend(const std::map<GenSymbol, GenExpr>& phi, const GenExpr& e, HomKind kind) {
    GenExpr r;
    for (const auto& [w, c] : e.terms()) {
        GenExpr term = GenExpr::unit();
        auto image = [&](const GenSymbol& s) -> const GenExpr& {
            auto it = phi.find(s);
            if (it == phi.end()) throw UnassignedSymbol("no image for symbol " + s.name);
            return it->second;
        };
        if (kind == HomKind::homomorphism)
            for (const auto& s : w) term = term * image(s);
        else
            for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * image(*it);
        r += c * term;
    }
    return r;
}

TensorExpr expand_leg(const TensorExpr& e, unsigned leg, const std::map<GenSymbol, TensorExpr>& delta) {
    if (e.degree() != 2 || leg > 1) throw DimensionMismatch("expand_leg works on degree-2 tensors");
    TensorExpr r(3);
    for (const auto& [legs, c] : e.terms()) {
        TensorExpr split = hom_extend_word(delta, legs[leg], 2);
        for (const auto& [sl, sc] : split.terms()) {
            TensorExpr::Legs out = leg == 0 ? TensorExpr::Legs{sl[0], sl[1], legs[1]}
                                            : TensorExpr::Legs{legs[0], sl[0], sl[1]};
            r.add_term(out, c * sc);
        }
    }
    return r;
}

std::map<GenSymbol, TensorExpr> primitive_coproduct(const std::vector<GenSymbol>& syms) {
    std::map<GenSymbol, TensorExpr> d;
    for (const auto& s : syms) d.emplace(s, tensor(GenExpr(s), GenExpr::unit()) + tensor(GenExpr::unit(), GenExpr(s)));
    return d;
}

std::map<GenSymbol, GenExpr> classical_antipode(const std::vector<GenSymbol>& syms) {
    std::map<GenSymbol, GenExpr> m;
    for (const auto& s : syms) m.emplace(s, -GenExpr(s));
    return m;
}

} // namespace jordalg
