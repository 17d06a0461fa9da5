#include "jordalg/relations.hpp"

#include "jordalg/series.hpp"

namespace jordalg {

GenSymbol J_Tseries() { return jsym("Tseries"); }
GenSymbol J_Tinvseries() { return jsym("Tinvseries"); }

namespace {

GenExpr E(int i) { return GenExpr(J_E(i)); }
GenExpr F(int i) { return GenExpr(J_F(i)); }
GenExpr H(int i) { return GenExpr(J_H(i)); }
GenExpr T() { return GenExpr(J_T()); }
GenExpr Ti() { return GenExpr(J_Tinv()); }
GenExpr Hl() { return GenExpr(J_Hlong()); }
GenExpr El() { return GenExpr(J_Elong()); }
GenExpr Fl() { return GenExpr(J_Flong()); }
GenExpr one() { return GenExpr::unit(); }

ScalarPoly q(long a, long b = 1) { return ScalarPoly(Rational(a, b)); }
ScalarPoly hq(long a, long b = 1) { return ScalarPoly::monomial(Rational(a, b), 1); }
ScalarPoly h2q(long a, long b = 1) { return ScalarPoly::monomial(Rational(a, b), 2); }

GenExpr sum_H(int N) {
    GenExpr s;
    for (int i = 1; i < N; ++i) s += H(i);
    return s;
}

int weight(int i, int N) { return (i == 1 ? 1 : 0) + (i == N - 1 ? 1 : 0); }

GenExpr t_power(int p) {
    GenExpr r = one();
    for (int k = 0; k < (p < 0 ? -p : p); ++k) r = r * (p < 0 ? Ti() : T());
    return r;
}

int cartan(int i, int j) { return i == j ? 2 : (i - j == 1 || j - i == 1 ? -1 : 0); }

std::string br(const std::string& a, const std::string& b) { return "[" + a + "," + b + "]"; }

// x^2 y - 2 x y x + y x^2 with the operands written out as in the source lists.
GenExpr serre_sq_left(const GenExpr& x, const GenExpr& y) { return x * x * y - q(2) * (x * y * x) + y * x * x; }
// x y^2 - 2 y x y + y^2 x
GenExpr serre_sq_right(const GenExpr& x, const GenExpr& y) { return x * y * y - q(2) * (y * x * y) + y * y * x; }

void add(std::vector<Relation>& v, const std::string& block, const std::string& name, GenExpr expr, int n_min,
         int n_max) {
    v.push_back({block, name, std::move(expr), n_min, n_max, {}});
}

std::vector<Relation> sl2_block() {
    std::vector<Relation> v;
    const std::string b = "sl2";
    add(v, b, "T*Tinv=1", T() * Ti() - one(), 3, 0);
    add(v, b, "Tinv*T=1", Ti() * T() - one(), 3, 0);
    add(v, b, br("Hl", "T"), comm(Hl(), T()) - (T() * T() - one()), 3, 0);
    add(v, b, br("Hl", "Tinv"), comm(Hl(), Ti()) - (Ti() * Ti() - one()), 3, 0);
    add(v, b, br("T", "Fl"), comm(T(), Fl()) - hq(1, 2) * (Hl() * T() + T() * Hl()), 3, 0);
    add(v, b, br("Tinv", "Fl"), comm(Ti(), Fl()) + hq(1, 2) * (Hl() * Ti() + Ti() * Hl()), 3, 0);
    add(v, b, br("Hl", "Fl"), comm(Hl(), Fl()) + q(1, 2) * (T() * Fl() + Fl() * T() + Ti() * Fl() + Fl() * Ti()), 3, 0);
    // sinh(h El) = (T - Tinv)/2 and cosh(h El) = (T + Tinv)/2.
    GenExpr cosh = q(1, 2) * (T() + Ti());
    add(v, b, "hyperbolic.h*[Hl,El]", ScalarPoly::h() * comm(Hl(), El()) - (T() - Ti()), 3, 0);
    add(v, b, "hyperbolic.[Hl,Fl]", comm(Hl(), Fl()) + Fl() * cosh + cosh * Fl(), 3, 0);
    add(v, b, "hyperbolic.[El,Fl]", comm(El(), Fl()) - Hl(), 3, 0);
    return v;
}

std::vector<Relation> sl3_full_block() {
    std::vector<Relation> v;
    const std::string b = "sl3.full";
    GenExpr H3 = Hl(), F3 = Fl(), TiH3 = Ti() * Hl();
    auto a = [&](const std::string& n, GenExpr e) { add(v, b, n, std::move(e), 3, 3); };
    a(br("H1", "H2"), comm(H(1), H(2)));
    a(br("H1", "Tinv*H3"), comm(H(1), TiH3));
    a(br("H2", "Tinv*H3"), comm(H(2), TiH3));
    a(br("H1", "E1"), comm(H(1), E(1)) - q(2) * E(1));
    a(br("H2", "E2"), comm(H(2), E(2)) - q(2) * E(2));
    a(br("H1", "E2"), comm(H(1), E(2)) + E(2));
    a(br("H2", "E1"), comm(H(2), E(1)) + E(1));
    a(br("Tinv*H3", "E1"), comm(TiH3, E(1)) - E(1));
    a(br("Tinv*H3", "E2"), comm(TiH3, E(2)) - E(2));
    a(br("H1", "F1"), comm(H(1), F(1)) + q(2) * F(1) - hq(1) * (E(2) * TiH3));
    a(br("H2", "F2"), comm(H(2), F(2)) + q(2) * F(2) + hq(1) * (E(1) * TiH3));
    a(br("H1", "F2"), comm(H(1), F(2)) - F(2) + hq(1) * (E(1) * TiH3));
    a(br("H2", "F1"), comm(H(2), F(1)) - F(1) - hq(1) * (E(2) * TiH3));
    a(br("T*H3", "F1"), comm(T() * H3, F(1)) + T() * T() * F(1));
    a(br("T*H3", "F2"), comm(T() * H3, F(2)) + T() * T() * F(2));
    a(br("Tinv*E1", "F1"),
      comm(Ti() * E(1), F(1)) - q(1, 2) * ((T() + Ti()) * H(1)) - q(1, 2) * ((T() - Ti()) * H(2)));
    a(br("Tinv*E2", "F2"),
      comm(Ti() * E(2), F(2)) - q(1, 2) * ((T() + Ti()) * H(2)) - q(1, 2) * ((T() - Ti()) * H(1)));
    a(br("Tinv*E1", "F2"), comm(Ti() * E(1), F(2)));
    a(br("Tinv*E2", "F1"), comm(Ti() * E(2), F(1)));
    a("2h*[E1,E2]", hq(2) * comm(E(1), E(2)) - (T() * T() - one()));
    {
        Relation r{b, br("T*F2", "T*F1"),
                   comm(T() * F(2), T() * F(1)) - T() * (F3 - hq(1, 2) * (H3 * T() * H3) - hq(1, 8) * (T() - Ti())), 3,
                   3, {}};
        r.diagnostics.push_back(
            {"symmetrized", comm(T() * F(2), T() * F(1)) -
                                T() * (F3 - hq(1, 4) * (H3 * H3 * T() + T() * H3 * H3) - hq(1, 8) * (T() - Ti()))});
        v.push_back(std::move(r));
    }
    for (int i = 1; i <= 2; ++i) {
        std::string n = "T*H" + std::to_string(i);
        a(br(n, "T"), comm(T() * H(i), T()) - q(1, 2) * (T() * T() - one()));
        a(br(n, "Tinv"), comm(T() * H(i), Ti()) - q(1, 2) * (Ti() * Ti() - one()));
    }
    GenExpr anti = T() * F3 + F3 * T() + Ti() * F3 + F3 * Ti();
    for (int i = 1; i <= 2; ++i)
        a(br("H" + std::to_string(i), "F3"), comm(H(i), F3) + q(1, 4) * (Ti() * anti) + hq(1, 4) * (Ti() * H3 * H3) +
                                                 hq(1, 4) * (H3 * Ti() * H3));
    for (int i = 1; i <= 2; ++i) {
        a(br("E" + std::to_string(i), "T"), comm(E(i), T()));
        a(br("E" + std::to_string(i), "Tinv"), comm(E(i), Ti()));
    }
    a(br("F1", "T"), comm(F(1), T()) - hq(1) * (T() * E(2)));
    a(br("F1", "Tinv"), comm(F(1), Ti()) + hq(1) * (Ti() * E(2)));
    a(br("F2", "T"), comm(F(2), T()) + hq(1) * (T() * E(1)));
    a(br("F2", "Tinv"), comm(F(2), Ti()) - hq(1) * (Ti() * E(1)));
    a(br("E1", "F3"), comm(E(1), F3) + q(1, 2) * (T() * F(2) + F(2) * T()));
    a(br("E2", "F3"), comm(E(2), F3) - q(1, 2) * (T() * F(1) + F(1) * T()));
    {
        GenExpr rest = hq(1) * (E(2) * F3) - h2q(1, 4) * (T() * E(2));
        Relation r{b, br("F1", "F3"), comm(F(1), F3) - hq(1) * (T() * F(1)) + rest, 3, 3, {}};
        r.diagnostics.push_back({"half-coefficient", comm(F(1), F3) - hq(1, 2) * (T() * F(1)) + rest});
        v.push_back(std::move(r));
    }
    {
        GenExpr rest = -hq(1) * (E(1) * F3) + h2q(1, 4) * (T() * E(1));
        Relation r{b, br("F2", "F3"), comm(F(2), F3) - hq(1) * (T() * F(2)) + rest, 3, 3, {}};
        r.diagnostics.push_back({"half-coefficient", comm(F(2), F3) - hq(1, 2) * (T() * F(2)) + rest});
        v.push_back(std::move(r));
    }
    return v;
}

std::vector<Relation> sl3_chevalley_block() {
    std::vector<Relation> v;
    const std::string b = "sl3.chevalley";
    auto a = [&](const std::string& n, GenExpr e) { add(v, b, n, std::move(e), 3, 3); };
    GenExpr S = H(1) + H(2);
    a("T=(1+2h[E1,E2])^(1/2)", T() - GenExpr(J_Tseries()));
    a("Tinv=(1+2h[E1,E2])^(-1/2)", Ti() - GenExpr(J_Tinvseries()));
    a(br("H1", "H2"), comm(H(1), H(2)));
    a(br("H1", "E1"), comm(H(1), E(1)) - q(2) * E(1));
    a(br("H2", "E2"), comm(H(2), E(2)) - q(2) * E(2));
    a(br("H1", "E2"), comm(H(1), E(2)) + E(2));
    a(br("H2", "E1"), comm(H(2), E(1)) + E(1));
    a(br("H1", "F1"), comm(H(1), F(1)) + q(2) * F(1) - hq(1) * (E(2) * S));
    a(br("H2", "F2"), comm(H(2), F(2)) + q(2) * F(2) + hq(1) * (E(1) * S));
    a(br("H1", "F2"), comm(H(1), F(2)) - F(2) + hq(1) * (E(1) * S));
    a(br("H2", "F1"), comm(H(2), F(1)) - F(1) - hq(1) * (E(2) * S));
    a(br("Tinv*E1", "F1"),
      comm(Ti() * E(1), F(1)) - q(1, 2) * ((T() + Ti()) * H(1)) - q(1, 2) * ((T() - Ti()) * H(2)));
    a(br("Tinv*E2", "F2"),
      comm(Ti() * E(2), F(2)) - q(1, 2) * ((T() + Ti()) * H(2)) - q(1, 2) * ((T() - Ti()) * H(1)));
    a(br("Tinv*E1", "F2"), comm(Ti() * E(1), F(2)));
    a(br("Tinv*E2", "F1"), comm(Ti() * E(2), F(1)));
    a("serre(E1,E2)", serre_sq_left(E(1), E(2)));
    a("serre(E2,E1)", serre_sq_left(E(2), E(1)));
    GenExpr TF1 = T() * F(1), TF2 = T() * F(2);
    a("serre(T*F1,T*F2)", serre_sq_left(TF1, TF2));
    a("serre(T*F2,T*F1)", serre_sq_left(TF2, TF1));
    return v;
}

std::vector<Relation> sl4_chevalley_block() {
    std::vector<Relation> v;
    const std::string b = "sl4.chevalley";
    auto a = [&](const std::string& n, GenExpr e) { add(v, b, n, std::move(e), 4, 4); };
    GenExpr S = sum_H(4);
    auto defect = [&](int j) { return Ti() * comm(F(j), T()) * S; };
    a("T=(1+2h[E1,[E2,E3]])^(1/2)", T() - GenExpr(J_Tseries()));
    a("Tinv=(1+2h[E1,[E2,E3]])^(-1/2)", Ti() - GenExpr(J_Tinvseries()));
    a(br("H1", "H2"), comm(H(1), H(2)));
    a(br("H1", "H3"), comm(H(1), H(3)));
    a(br("H2", "H3"), comm(H(2), H(3)));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            a(br("H" + std::to_string(i), "E" + std::to_string(j)), comm(H(i), E(j)) - q(cartan(i, j)) * E(j));
    a(br("H1", "F1"), comm(H(1), F(1)) + q(2) * F(1) - defect(1));
    a(br("H1", "F2"), comm(H(1), F(2)) - F(2));
    a(br("H1", "F3"), comm(H(1), F(3)) - defect(3));
    a(br("H2", "F1"), comm(H(2), F(1)) - F(1));
    a(br("H2", "F2"), comm(H(2), F(2)) + q(2) * F(2));
    a(br("H2", "F3"), comm(H(2), F(3)) - F(3));
    a(br("H3", "F1"), comm(H(3), F(1)) - defect(1));
    a(br("H3", "F2"), comm(H(3), F(2)) - F(2));
    a(br("H3", "F3"), comm(H(3), F(3)) + q(2) * F(3) - defect(3));
    a(br("Tinv*E1", "F1"), comm(Ti() * E(1), F(1)) - Ti() * H(1) - q(1, 2) * ((T() - Ti()) * S));
    a(br("E2", "F2"), comm(E(2), F(2)) - H(2));
    a(br("Tinv*E3", "F3"), comm(Ti() * E(3), F(3)) - Ti() * H(3) - q(1, 2) * ((T() - Ti()) * S));
    a(br("Tinv*E1", "F2"), comm(Ti() * E(1), F(2)));
    a(br("Tinv*E1", "F3"), comm(Ti() * E(1), F(3)));
    a(br("E2", "F1"), comm(E(2), F(1)));
    a(br("E2", "F3"), comm(E(2), F(3)));
    a(br("Tinv*E3", "F1"), comm(Ti() * E(3), F(1)));
    a(br("Tinv*E3", "F2"), comm(Ti() * E(3), F(2)));
    a(br("E1", "E3"), comm(E(1), E(3)));
    GenExpr TF1 = T() * F(1), TF3 = T() * F(3);
    a(br("T*F1", "T*F3"), comm(TF1, TF3));
    a("serre(E1,E1,E2)", serre_sq_left(E(1), E(2)));
    a("serre(E1,E2,E2)", serre_sq_right(E(1), E(2)));
    a("serre(E2,E2,E3)", serre_sq_left(E(2), E(3)));
    a("serre(E2,E3,E3)", serre_sq_right(E(2), E(3)));
    a("serre(T*F1,T*F1,F2)", serre_sq_left(TF1, F(2)));
    a("serre(T*F1,F2,F2)", serre_sq_right(TF1, F(2)));
    a("serre(T*F3,T*F3,F2)", serre_sq_left(TF3, F(2)));
    a("serre(F2,F2,T*F3)", F(2) * F(2) * TF3 - q(2) * (F(2) * TF3 * F(2)) + TF3 * F(2) * F(2));
    return v;
}

// The weighted compact presentation, shared by the N = 3 and N = 4 brief lists and the general rank.
std::vector<Relation> brief_block(const std::string& b, int N, int n_min, int n_max) {
    std::vector<Relation> v;
    auto a = [&](const std::string& n, GenExpr e) { add(v, b, n, std::move(e), n_min, n_max); };
    GenExpr S = sum_H(N);
    auto is = [](int i) { return std::to_string(i); };
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j < N; ++j) a(br("H" + is(i), "H" + is(j)), comm(H(i), H(j)));
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            int di = weight(i, N);
            a(br("H" + is(i), "E" + is(j)), comm(H(i), E(j)) - q(cartan(i, j)) * E(j));
            a(br("H" + is(i), "F" + is(j)),
              comm(H(i), F(j)) + q(cartan(i, j)) * F(j) - q(di) * (Ti() * comm(F(j), T()) * S));
            GenExpr lhs = comm(t_power(-di) * E(i), F(j));
            if (i == j) lhs -= t_power(-di) * H(i) + q(di, 2) * ((T() - Ti()) * S);
            a(br("T^-" + is(di) + "*E" + is(i), "F" + is(j)), lhs);
        }
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            if (i == j) continue;
            GenExpr TFi = t_power(weight(i, N)) * F(i), TFj = t_power(weight(j, N)) * F(j);
            if (j - i > 1) {
                a(br("E" + is(i), "E" + is(j)), comm(E(i), E(j)));
                a(br("TF" + is(i), "TF" + is(j)), comm(TFi, TFj));
            } else if (i - j == 1 || j - i == 1) {
                a("ad(E" + is(i) + ")^2(E" + is(j) + ")", comm(E(i), comm(E(i), E(j))));
                a("ad(TF" + is(i) + ")^2(TF" + is(j) + ")", comm(TFi, comm(TFi, TFj)));
            }
        }
    return v;
}

} // namespace

std::vector<std::string> relation_blocks() {
    return {"sl2", "sl3.full", "sl3.chevalley", "sl3.brief", "sl4.chevalley", "sl4.brief", "slN"};
}

std::vector<Relation> relation_catalog(int N) {
    std::vector<Relation> all = sl2_block();
    auto append = [&](std::vector<Relation> b) { all.insert(all.end(), b.begin(), b.end()); };
    if (N == 3) {
        append(sl3_full_block());
        append(sl3_chevalley_block());
        append(brief_block("sl3.brief", 3, 3, 3));
    }
    if (N == 4) {
        append(sl4_chevalley_block());
        append(brief_block("sl4.brief", 4, 4, 4));
    }
    append(brief_block("slN", N, 3, 0));
    std::vector<Relation> out;
    for (auto& r : all)
        if (r.applies(N)) out.push_back(std::move(r));
    return out;
}

Rep with_series_symbols(const Rep& rho, int N) {
    Rep r = rho;
    Mat x = rho.at(J_E(N - 1));
    for (int i = N - 2; i >= 1; --i) x = commutator(rho.at(J_E(i)), x);
    Mat arg = x.scaled(ScalarPoly::monomial(Rational(2), 1));
    r.set(J_Tseries(), series_apply(SeriesSpec::sqrt1p(), arg));
    r.set(J_Tinvseries(), series_apply(SeriesSpec::binomial(Rational(-1, 2)), arg));
    return r;
}

Rep relation_rep(const DeformedGenerators& g) { return with_series_symbols(g.deformed, g.N); }

Mat check_relation(const Relation& r, const DeformedGenerators& g) { return expr_eval(r.expr, relation_rep(g)); }

namespace {

void evaluate_into(CheckReport& rep, const std::vector<Relation>& rels, const Rep& rho, const std::string& label) {
    for (const auto& r : rels) {
        ReportEntry e = residual_entry(r.tag(), label, expr_eval(r.expr, rho));
        bool failed = !e.pass;
        rep.add(std::move(e));
        if (failed)
            for (const auto& [variant, expr] : r.diagnostics)
                rep.add(residual_entry(r.tag(), label, expr_eval(expr, rho), Level::info, variant));
    }
}

} // namespace

CheckReport check_sl2_sector(const DeformedGenerators& g, const std::string& rep_label) {
    CheckReport rep;
    rep.suite = "relations";
    evaluate_into(rep, sl2_block(), g.deformed, rep_label);
    Mat log_t = series_apply(SeriesSpec::log1p(), g.T() - Mat::identity(g.T().rows()))
                    .map([](const ScalarPoly& p) { return p.divided_by_h(); });
    rep.add(residual_entry("sl2.El=log(T)/h", rep_label, g.Elong() - log_t));
    return rep;
}

CheckReport run_catalog(int N, const std::vector<int>& tensor_powers) {
    CheckReport rep;
    rep.suite = "relations";
    std::vector<Relation> rels;
    for (auto& r : relation_catalog(N))
        if (r.block != "sl2") rels.push_back(std::move(r));
    for (int k : tensor_powers) {
        DeformedGenerators g = build_deformed(N, k);
        rep.append(check_sl2_sector(g, rep_name(k)));
        evaluate_into(rep, rels, relation_rep(g), rep_name(k));
    }
    return rep;
}

CheckReport automorphism_relation_check(const std::vector<int>& tensor_powers) {
    CheckReport rep;
    rep.suite = "relations";
    std::vector<std::pair<std::string, Automorphism>> autos = {{"phi", automorphism_phi()},
                                                               {"varphi", automorphism_varphi()}};
    std::vector<Relation> rels;
    for (auto& r : relation_catalog(3))
        if (r.block == "sl3.chevalley" || r.block == "sl3.brief") rels.push_back(std::move(r));
    for (int k : tensor_powers) {
        DeformedGenerators g = build_deformed(3, k);
        for (const auto& [name, a] : autos)
            for (const auto& r : rels) {
                bool in_domain = true;
                for (const auto& s : r.expr.symbols()) in_domain = in_domain && a.count(s);
                if (!in_domain) continue;
                rep.add(residual_entry("automorphism." + name + "." + r.tag(), rep_name(k),
                                       expr_eval(apply_automorphism(a, r.expr), g.deformed)));
            }
    }
    return rep;
}

} // namespace jordalg
