#include "jordalg/jordanian.hpp"

#include "jordalg/series.hpp"

#include <algorithm>

namespace jordalg {

GenSymbol J_H(int i) { return jsym("H" + std::to_string(i)); }
GenSymbol J_E(int i) { return jsym("E" + std::to_string(i)); }
GenSymbol J_F(int i) { return jsym("F" + std::to_string(i)); }
GenSymbol J_T() { return jsym("T"); }
GenSymbol J_Tinv() { return jsym("Tinv"); }
GenSymbol J_Thalf() { return jsym("Thalf"); }
GenSymbol J_Tneghalf() { return jsym("Tneghalf"); }
GenSymbol J_Hlong() { return jsym("Hlong"); }
GenSymbol J_Elong() { return jsym("Elong"); }
GenSymbol J_Flong() { return jsym("Flong"); }

GenSymbol fn_T() { return csym("T(e)"); }
GenSymbol fn_Tinv() { return csym("Tinv(e)"); }
GenSymbol fn_Thalf() { return csym("Thalf(e)"); }
GenSymbol fn_Tneghalf() { return csym("Tneghalf(e)"); }
GenSymbol fn_sqrt() { return csym("sqrt(1+h^2e^2)"); }
GenSymbol fn_asinh() { return csym("asinh(he)/h"); }
GenSymbol fn_rootT() { return csym("rootT(e)"); }
GenSymbol fn_rootTinv() { return csym("rootTinv(e)"); }

std::vector<GenSymbol> jordanian_symbols(int N) {
    std::vector<GenSymbol> s;
    for (int i = 1; i < N; ++i) {
        s.push_back(J_H(i));
        s.push_back(J_E(i));
        s.push_back(J_F(i));
    }
    for (auto x : {J_T(), J_Tinv(), J_Thalf(), J_Tneghalf(), J_Hlong(), J_Elong(), J_Flong()}) s.push_back(x);
    return s;
}

Rep with_function_values(const Rep& classical) {
    Rep out = classical;
    const Mat& e = classical.at(e_long());
    size_t n = classical.dim();
    Mat id = Mat::identity(n);
    Mat he = e.scaled(ScalarPoly::h());
    Mat sq = series_apply(SeriesSpec::sqrt1p(), he * he);
    Mat as = series_apply(SeriesSpec::arcsinh(), he);
    Mat T = he + sq;
    Mat Tinv = sq - he;
    out.set(fn_sqrt(), sq);
    out.set(fn_T(), T);
    out.set(fn_Tinv(), Tinv);
    out.set(fn_asinh(), as.map([](const ScalarPoly& p) { return p.divided_by_h(); }));
    out.set(fn_Thalf(), series_apply(SeriesSpec::exp(), as.scaled(ScalarPoly(Rational(1, 2)))));
    out.set(fn_Tneghalf(), series_apply(SeriesSpec::exp(), as.scaled(ScalarPoly(Rational(-1, 2)))));
    out.set(fn_rootT(), series_apply(SeriesSpec::sqrt1p(), T - id));
    out.set(fn_rootTinv(), series_apply(SeriesSpec::sqrt1p(), Tinv - id));
    return out;
}

namespace {

ScalarPoly half_h() { return ScalarPoly::monomial(Rational(1, 2), 1); }

int delta_weight(int i, int N) { return (i == 1 ? 1 : 0) + (i == N - 1 ? 1 : 0); }

// T^{d/2} and T^{-d/2} for d in {0,1,2}.
GenExpr t_half_power(int d, bool negative) {
    if (d == 0) return GenExpr::unit();
    if (d == 1) return GenExpr(negative ? fn_Tneghalf() : fn_Thalf());
    if (d == 2) return GenExpr(negative ? fn_Tinv() : fn_T());
    throw ConfigError("unexpected root weight " + std::to_string(d));
}

} // namespace

std::map<GenSymbol, GenExpr> deformation_map(int N) {
    if (N < 3) throw ConfigError("the deformation map needs N >= 3");
    std::map<GenSymbol, GenExpr> m;
    GenExpr el(e_long()), hs(h_sum()), T(fn_T()), Tinv(fn_Tinv());
    for (int i = 1; i < N; ++i) {
        int d = delta_weight(i, N);
        GenExpr ei(e_(i)), fi(f_(i)), hi(h_(i));
        m[J_E(i)] = t_half_power(d, false) * ei;
        m[J_F(i)] = t_half_power(d, true) * (fi + half_h() * (T * comm(fi, el) * hs));
        m[J_H(i)] = hi - ScalarPoly(d) * half_h() * (el * Tinv * hs);
    }
    m[J_T()] = T;
    m[J_Tinv()] = Tinv;
    m[J_Thalf()] = GenExpr(fn_Thalf());
    m[J_Tneghalf()] = GenExpr(fn_Tneghalf());
    m[J_Hlong()] = GenExpr(fn_sqrt()) * hs;
    m[J_Elong()] = GenExpr(fn_asinh());
    m[J_Flong()] = GenExpr(f_long()) - ScalarPoly::monomial(Rational(1, 4), 2) * (el * (hs * hs - GenExpr::unit()));
    return m;
}

DeformedGenerators build_deformed(const Rep& classical, int N) {
    DeformedGenerators g;
    g.N = N;
    g.classical = with_function_values(classical);
    g.deformed = Rep(classical.dim());
    for (const auto& [sym, expr] : deformation_map(N)) g.deformed.set(sym, expr_eval(expr, g.classical));
    return g;
}

DeformedGenerators build_deformed(int N, int k) { return build_deformed(classical_rep(N, k), N); }

std::string rep_name(int k) { return k == 1 ? "fund" : "fund" + std::to_string(k); }

namespace {

struct PrintedForm {
    std::string label;
    GenExpr expr;  // classical symbols and function symbols
};

struct PrintedObject {
    std::string name;
    GenExpr target;  // jordanian symbols
    std::vector<PrintedForm> forms;
    bool adjudicable = false;
};

GenExpr C(const GenSymbol& s) { return GenExpr(s); }
GenExpr J(const GenSymbol& s) { return GenExpr(s); }
ScalarPoly sc(long p, long q = 1) { return ScalarPoly(Rational(p, q)); }

// Building blocks shared by both ranks: the long root e, the Cartan sum and the function symbols.
struct Sl3Forms {
    GenExpr e, hl, sq, T, Tinv, rootT, rootTinv, Thalf, Tneghalf;
};

Sl3Forms common_forms(const GenExpr& e, const GenExpr& hl) {
    return {e, hl, C(fn_sqrt()), C(fn_T()), C(fn_Tinv()), C(fn_rootT()), C(fn_rootTinv()), C(fn_Thalf()),
            C(fn_Tneghalf())};
}

std::vector<PrintedObject> printed_objects_n3() {
    GenExpr e1 = C(e_(1)), e2 = C(e_(2)), f1 = C(f_(1)), f2 = C(f_(2)), h1 = C(h_(1)), h2 = C(h_(2));
    auto s = common_forms(C(e_long()), C(h_sum()));
    ScalarPoly hh = half_h(), h = ScalarPoly::h();
    std::vector<PrintedObject> v;
    v.push_back({"T", J(J_T()), {{"closed", s.T}, {"series", h * s.e + s.sq}}});
    v.push_back({"Tinv", J(J_Tinv()), {{"closed", s.Tinv}, {"series", s.sq - h * s.e}}});
    v.push_back({"Hlong", J(J_Hlong()), {{"closed", s.sq * s.hl}}});
    v.push_back({"Flong",
                 J(J_Flong()),
                 {{"closed", C(f_long()) - ScalarPoly::monomial(Rational(1, 4), 2) * (s.e * (s.hl * s.hl - GenExpr::unit()))}}});
    v.push_back({"Elong", J(J_Elong()), {{"asinh", C(fn_asinh())}, {"log", C(csym("log(T)/h"))}}});
    v.push_back({"E1", J(J_E(1)), {{"radical", s.rootT * e1}, {"compact", s.Thalf * e1}}});
    v.push_back({"E2", J(J_E(2)), {{"radical", s.rootT * e2}, {"compact", s.Thalf * e2}}});
    v.push_back({"F1",
                 J(J_F(1)),
                 {{"radical", s.rootTinv * f1 + hh * (s.rootT * e2 * s.hl)},
                  {"compact", s.Tneghalf * (f1 + hh * (e2 * s.T * s.hl))}}});
    v.push_back({"F2",
                 J(J_F(2)),
                 {{"radical", s.rootTinv * f2 - hh * (s.rootT * e1 * s.hl)},
                  {"compact", s.Tneghalf * (f2 - hh * (e1 * s.T * s.hl))}}});
    v.push_back({"H1",
                 J(J_H(1)),
                 {{"radical", s.Tinv * (s.sq * h1 + hh * (s.e * (h1 - h2)))},
                  {"compact", h1 - hh * (s.e * s.Tinv * s.hl)}}});
    v.push_back({"H2",
                 J(J_H(2)),
                 {{"radical", s.Tinv * (s.sq * h2 - hh * (s.e * (h1 - h2)))},
                  {"compact", h2 - hh * (s.e * s.Tinv * s.hl)}}});
    return v;
}

std::vector<PrintedObject> printed_objects_n4() {
    auto r = [](int i, int j) { return C(root(i, j)); };
    GenExpr h12 = C(h_(1)), h23 = C(h_(2)), h34 = C(h_(3));
    GenExpr h24 = h23 + h34, h13 = h12 + h23, h14 = C(h_sum());
    auto s = common_forms(C(e_long()), h14);
    ScalarPoly hh = half_h(), h = ScalarPoly::h();
    GenExpr E1 = J(J_E(1)), E2 = J(J_E(2)), E3 = J(J_E(3)), F1 = J(J_F(1)), F2 = J(J_F(2)), F3 = J(J_F(3));
    GenExpr H1 = J(J_H(1)), H2 = J(J_H(2)), H3 = J(J_H(3));

    auto raising = [&](int i, int j) {
        return std::vector<PrintedForm>{{"radical", s.rootT * r(i, j)}, {"compact", s.Thalf * r(i, j)}};
    };
    // Lowering partner of the sl(3)-like subset with upper root (i,j) and partner raising root (a,b).
    auto lowering = [&](int i, int j, int a, int b, long sign, bool t_inside) {
        GenExpr inner = t_inside ? s.T * r(a, b) * s.hl : r(a, b) * s.hl;
        return std::vector<PrintedForm>{{"radical", s.rootTinv * r(j, i) + sc(sign) * hh * (s.rootT * r(a, b) * s.hl)},
                                        {"compact", s.Tneghalf * (r(j, i) + sc(sign) * hh * inner)}};
    };
    auto cartan = [&](const GenExpr& ha, const GenExpr& hb, long sign, const GenExpr& hx) {
        return std::vector<PrintedForm>{{"radical", s.Tinv * (s.sq * hx + sc(sign) * hh * (s.e * (ha - hb)))},
                                        {"compact", hx - hh * (s.e * s.Tinv * s.hl)}};
    };

    std::vector<PrintedObject> v;
    v.push_back({"T", J(J_T()), {{"closed", s.T}, {"series", h * s.e + s.sq}}});
    v.push_back({"Tinv", J(J_Tinv()), {{"closed", s.Tinv}, {"series", s.sq - h * s.e}}});
    v.push_back({"Hlong", J(J_Hlong()), {{"closed", s.sq * h14}}});
    v.push_back({"Flong",
                 J(J_Flong()),
                 {{"closed", r(4, 1) - ScalarPoly::monomial(Rational(1, 4), 2) * (s.e * (h14 * h14 - GenExpr::unit()))}}});
    // First subset {12, 24, 14}.
    v.push_back({"E12", E1, raising(1, 2)});
    v.push_back({"E24", comm(E2, E3), raising(2, 4)});
    v.push_back({"E21", F1, lowering(1, 2, 2, 4, 1, true)});
    v.push_back({"E42", comm(F3, F2), lowering(2, 4, 1, 2, -1, true)});
    v.push_back({"H12", H1, cartan(h12, h24, 1, h12)});
    v.push_back({"H24", H2 + H3, cartan(h12, h24, -1, h24)});
    // Second subset {13, 34, 14}.
    v.push_back({"E13", comm(E1, E2), raising(1, 3)});
    v.push_back({"E34", E3, raising(3, 4)});
    PrintedObject e31{"E31", comm(F2, F1), lowering(1, 3, 3, 4, 1, false), true};
    PrintedObject e43{"E43", F3, lowering(3, 4, 1, 3, -1, false), true};
    v.push_back(e31);
    v.push_back(e43);
    v.push_back({"H13", H1 + H2, cartan(h13, h34, 1, h13)});
    v.push_back({"H34", H3, cartan(h13, h34, -1, h34)});
    // Undeformed middle generators.
    v.push_back({"E23", E2, {{"undeformed", r(2, 3)}}});
    v.push_back({"E32", F2, {{"undeformed", r(3, 2)}}});
    v.push_back({"H23", H2, {{"undeformed", h23}}});
    return v;
}

// Identities among deformed generators; residual lhs - rhs.
std::vector<std::pair<std::string, GenExpr>> derived_identities(int N) {
    GenExpr sum;
    for (int i = 1; i < N; ++i) sum += J(J_H(i));
    std::vector<std::pair<std::string, GenExpr>> v = {{"T*sum(H)=Hlong", J(J_T()) * sum - J(J_Hlong())}};
    if (N == 4) {
        GenExpr T = J(J_T());
        v.push_back({"[T,E2]=0", comm(T, J(J_E(2)))});
        v.push_back({"[T,F2]=0", comm(T, J(J_F(2)))});
        v.push_back({"[T,H2]=0", comm(T, J(J_H(2)))});
    }
    return v;
}

} // namespace

CheckReport specialize_check(int N, const std::vector<int>& tensor_powers) {
    if (N != 3 && N != 4) throw ConfigError("closed-form specializations exist for N = 3 and N = 4 only");
    CheckReport rep;
    rep.suite = "specialize";
    auto objects = N == 3 ? printed_objects_n3() : printed_objects_n4();
    std::string prefix = "sl" + std::to_string(N) + ".map.";

    struct Outcome {
        PrintedObject obj;
        std::vector<std::vector<ReportEntry>> per_form;  // [form][rep]
    };
    std::vector<Outcome> outcomes;
    for (const auto& o : objects) outcomes.push_back({o, std::vector<std::vector<ReportEntry>>(o.forms.size())});

    for (int k : tensor_powers) {
        DeformedGenerators g = build_deformed(N, k);
        Rep cl = g.classical;
        cl.set(csym("log(T)/h"), series_apply(SeriesSpec::log1p(), g.classical.at(fn_T()) - Mat::identity(cl.dim()))
                                     .map([](const ScalarPoly& p) { return p.divided_by_h(); }));
        for (auto& out : outcomes) {
            Mat target = expr_eval(out.obj.target, g.deformed);
            for (size_t f = 0; f < out.obj.forms.size(); ++f) {
                Mat printed = expr_eval(out.obj.forms[f].expr, cl);
                out.per_form[f].push_back(
                    residual_entry(prefix + out.obj.name + "[" + out.obj.forms[f].label + "]", rep_name(k), printed - target));
            }
        }
        for (const auto& [name, expr] : derived_identities(N))
                rep.add(residual_entry(prefix + name, rep_name(k), expr_eval(expr, g.deformed)));
        Mat T = g.T(), Tinv = g.Tinv(), Th = g.deformed.at(J_Thalf()), Tnh = g.deformed.at(J_Tneghalf());
        rep.add(residual_entry(prefix + "T*Tinv=1", rep_name(k), T * Tinv - Mat::identity(T.rows())));
        rep.add(residual_entry(prefix + "Thalf^2=T", rep_name(k), Th * Th - T));
        rep.add(residual_entry(prefix + "Tneghalf^2=Tinv", rep_name(k), Tnh * Tnh - Tinv));
    }

    for (auto& out : outcomes) {
        std::vector<bool> form_ok;
        for (const auto& entries : out.per_form) {
            bool ok = true;
            for (const auto& e : entries) ok = ok && e.pass;
            form_ok.push_back(ok);
        }
        bool some_ok = std::find(form_ok.begin(), form_ok.end(), true) != form_ok.end();
        for (size_t f = 0; f < out.per_form.size(); ++f)
            for (auto e : out.per_form[f]) {
                if (out.obj.adjudicable && some_ok && !form_ok[f]) {
                    e.level = Level::warn;
                    e.note = "written form disagrees with the general map; the other written form agrees in every rep";
                }
                rep.add(std::move(e));
            }
    }
    return rep;
}

std::pair<Rep, Rep> tabulated_irreps_3dim() {
    auto E = [](int i, int j) { return unit_matrix(3, i, j); };
    ScalarPoly hh = half_h(), h = ScalarPoly::h();
    Rep a(3);
    a.set(J_H(1), E(1, 1) + E(1, 3).scaled(hh));
    a.set(J_E(1), E(1, 2));
    a.set(J_F(1), E(2, 1) - E(2, 3).scaled(hh));
    a.set(J_H(2), E(1, 3).scaled(hh) - E(3, 3));
    a.set(J_E(2), E(2, 3));
    a.set(J_F(2), E(3, 2) - E(1, 2).scaled(hh));
    a.set(J_Hlong(), E(1, 1) - E(3, 3));
    a.set(J_T(), Mat::identity(3) + E(1, 3).scaled(h));
    a.set(J_Tinv(), Mat::identity(3) - E(1, 3).scaled(h));
    a.set(J_Flong(), E(3, 1));

    Rep b(3);
    b.set(J_H(1), E(1, 1) + E(1, 3).scaled(hh));
    b.set(J_E(1), E(1, 2));
    b.set(J_F(1), E(2, 1) - E(2, 3).scaled(hh));
    b.set(J_H(2), E(1, 3).scaled(hh) - E(3, 3));
    b.set(J_E(2), E(2, 3));
    b.set(J_F(2), E(3, 2) - E(1, 2).scaled(hh));
    b.set(J_Hlong(), E(3, 3) - E(1, 1));
    b.set(J_T(), -Mat::identity(3) - E(1, 3).scaled(h));
    b.set(J_Tinv(), -Mat::identity(3) + E(1, 3).scaled(h));
    b.set(J_Flong(), -E(3, 1));
    return {a, b};
}

Automorphism automorphism_phi() {
    Automorphism a;
    for (auto s : {J_T(), J_Tinv(), J_Flong(), J_Hlong()}) a[s] = J(s);
    a[J_E(1)] = J(J_E(2));
    a[J_F(1)] = J(J_F(2));
    a[J_H(1)] = J(J_H(2));
    a[J_E(2)] = -J(J_E(1));
    a[J_F(2)] = -J(J_F(1));
    a[J_H(2)] = J(J_H(1));
    return a;
}

Automorphism automorphism_varphi() {
    Automorphism a;
    for (auto s : {J_T(), J_Tinv(), J_Flong(), J_Hlong()}) a[s] = -J(s);
    for (int i = 1; i <= 2; ++i)
        for (auto s : {J_E(i), J_F(i), J_H(i)}) a[s] = J(s);
    return a;
}

GenExpr apply_automorphism(const Automorphism& a, const GenExpr& x) { return hom_extend(a, x); }

Rep transport(const Automorphism& a, const Rep& rho) {
    Rep out(rho.dim());
    for (const auto& [sym, img] : a) {
        bool defined = true;
        for (const auto& s : img.symbols()) defined = defined && rho.has(s);
        if (defined) out.set(sym, expr_eval(img, rho));
    }
    return out;
}

CheckReport irreps_check() {
    CheckReport rep;
    rep.suite = "irreps";
    auto [a, b] = tabulated_irreps_3dim();
    DeformedGenerators g = build_deformed(3, 1);
    const std::vector<GenSymbol> consistent = {J_T(), J_Tinv(), J_E(1), J_E(2), J_F(1), J_F(2), J_Flong(), J_Hlong()};
    for (const auto& s : consistent)
        rep.add(residual_entry("irrep3.tabulated-vs-map." + s.name, "fund", a.at(s) - g.deformed.at(s)));
    for (const auto& s : {J_H(1), J_H(2)}) {
        ReportEntry e = residual_entry("irrep3.tabulated-vs-map." + s.name, "fund", a.at(s) - g.deformed.at(s),
                                       Level::warn);
        if (!e.pass) {
            std::string diff;
            for (const auto& nz : nonzero_entries(a.at(s) - g.deformed.at(s))) {
                if (!diff.empty()) diff += "; ";
                diff += "(" + std::to_string(nz.row + 1) + "," + std::to_string(nz.col + 1) + ") tabulated " +
                        a.at(s)(nz.row, nz.col).str() + " vs map " + g.deformed.at(s)(nz.row, nz.col).str();
            }
            e.note = diff;
        }
        rep.add(std::move(e));
    }
    Rep moved = transport(automorphism_varphi(), a);
    for (const auto& s : consistent)
        rep.add(residual_entry("irrep3.varphi-transport." + s.name, "fund", moved.at(s) - b.at(s)));
    return rep;
}

} // namespace jordalg
