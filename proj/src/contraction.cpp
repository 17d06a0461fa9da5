#include "jordalg/contraction.hpp"

#include "jordalg/series.hpp"

#include <numeric>

namespace jordalg {

QhScalar QFundamental::scalar(const ScalarPoly& c) const {
    return QhScalar::from_coeffs(0, {c}, window, L);
}

QhScalar QFundamental::q_pow(const Rational& alpha) const { return q_power_rational<ScalarPoly>(alpha, L, window); }

QMat QFundamental::q_weight(const std::vector<Rational>& c) const {
    QMat m(static_cast<size_t>(N), static_cast<size_t>(N));
    for (size_t a = 0; a < static_cast<size_t>(N); ++a) {
        Rational alpha;
        for (size_t i = 0; i < c.size(); ++i) alpha = alpha + c[i] * weights[i][a];
        m(a, a) = q_pow(alpha);
    }
    return m;
}

int default_root_index(int N) { return std::lcm(2, N); }

namespace {

QMat lift(const Mat& m, const QFundamental& f) {
    return m.map([&](const ScalarPoly& p) { return p.is_zero() ? QhScalar() : f.scalar(p); });
}

} // namespace

QFundamental q_fundamental_rep(int N, int L, Window w) {
    if (N < 2) throw ConfigError("q-deformed fundamental needs N >= 2");
    if (L % 2 != 0 || L % N != 0) throw IncompatibleRoot("root index must be a multiple of 2 and of N");
    QFundamental f;
    f.N = N;
    f.L = L;
    f.window = w;
    f.rep = QRep(static_cast<size_t>(N));
    Rep cl = fundamental_rep(N);
    for (int i = 1; i < N; ++i) {
        std::vector<Rational> wt;
        for (size_t a = 0; a < static_cast<size_t>(N); ++a) wt.push_back(cl.at(h_(i))(a, a).at_zero());
        f.weights.push_back(wt);
    }
    for (int i = 1; i < N; ++i) {
        f.rep.set(qsym("e" + std::to_string(i)), lift(cl.at(e_(i)), f));
        f.rep.set(qsym("f" + std::to_string(i)), lift(cl.at(f_(i)), f));
        std::vector<Rational> c(static_cast<size_t>(N - 1));
        c[static_cast<size_t>(i - 1)] = Rational(1);
        f.rep.set(qsym("k" + std::to_string(i)), f.q_weight(c));
        c[static_cast<size_t>(i - 1)] = Rational(-1);
        f.rep.set(qsym("k" + std::to_string(i) + "inv"), f.q_weight(c));
    }
    // e_long = [e1,[e2,...]]_q built left to right with q^{-1}, f_long with q, as in the rank-2 brackets.
    QhScalar q = f.q_pow(Rational(1)), qinv = f.q_pow(Rational(-1));
    QMat e = f.rep.at(qsym("e1")), fl = f.rep.at(qsym("f1"));
    for (int i = 2; i < N; ++i) {
        const QMat& ei = f.rep.at(qsym("e" + std::to_string(i)));
        const QMat& fi = f.rep.at(qsym("f" + std::to_string(i)));
        e = e * ei - (ei * e).scaled(qinv);
        fl = fi * fl - (fl * fi).scaled(q);
    }
    f.rep.set(qsym("e_long"), e);
    f.rep.set(qsym("f_long"), fl);
    return f;
}

QMat build_Rq(const QFundamental& fund, const QFundamental& arb, const std::string& lambda13) {
    if (fund.N != 3 || arb.N != 3) throw ConfigError("R_q is written for N = 3 only");
    if (lambda13 != kLambda13Right && lambda13 != kLambda13Left)
        throw ConfigError("unknown position for the q-power in Lambda13: " + lambda13);
    using R = Rational;
    QhScalar pref = arb.q_pow(R(-1, 2)) * (arb.q_pow(R(1)) - arb.q_pow(R(-1)));
    QMat K11 = arb.q_weight({R(2, 3), R(1, 3)});
    QMat K22 = arb.q_weight({R(-1, 3), R(1, 3)});
    QMat K33 = arb.q_weight({R(-1, 3), R(-2, 3)});
    const QMat& f1 = arb.rep.at(qsym("f1"));
    const QMat& f2 = arb.rep.at(qsym("f2"));
    const QMat& f3 = arb.rep.at(qsym("f_long"));
    QMat p13 = arb.q_weight({R(-1, 2), R(-1, 2)});
    QMat L12 = (arb.q_weight({R(-1, 2), R(0)}) * f1).scaled(pref);
    QMat L13 = (lambda13 == kLambda13Right ? f3 * p13 : p13 * f3).scaled(pref);
    QMat L23 = (arb.q_weight({R(0), R(-1, 2)}) * f2).scaled(pref);

    const size_t n = arb.rep.dim();
    QMat Rq(3 * n, 3 * n);
    auto put = [&](size_t i, size_t j, const QMat& b) { Rq += kron(QMat::unit(3, i, j), b); };
    put(0, 0, K11);
    put(0, 1, K11 * L12);
    put(0, 2, K11 * L13);
    put(1, 1, K22);
    put(1, 2, K22 * L23);
    put(2, 2, K33);
    return Rq;
}

QMat q_conjugator(const QFundamental& rho) {
    QhScalar coeff = rho.scalar(ScalarPoly::h()) * (rho.q_pow(Rational(1)) - QhScalar(1)).invert();
    QMat arg = rho.rep.at(qsym("e_long")).scaled(coeff);
    return q_series_apply(arg, rho.L, rho.window, static_cast<unsigned>(rho.rep.dim()));
}

ContractionResult contract(const QFundamental& fund, const QFundamental& arb, const std::string& lambda13) {
    QMat E = kron(q_conjugator(fund), q_conjugator(arb));
    ContractionResult r;
    r.conjugated = mat_inverse_unipotent(E) * build_Rq(fund, arb, lambda13) * E;
    r.limit = Mat(r.conjugated.rows(), r.conjugated.cols());
    for (size_t i = 0; i < r.conjugated.rows(); ++i)
        for (size_t j = 0; j < r.conjugated.cols(); ++j) {
            const QhScalar& x = r.conjugated(i, j);
            for (int o = x.min_order(); o < 0 && !x.is_zero(); ++o)
                if (!x.coeff(o).is_zero())
                    r.surviving_poles.push_back({i, j, "t^" + std::to_string(o) + ": " + x.coeff(o).str()});
            r.limit(i, j) = x.coeff(0);
        }
    return r;
}

QMat q_exp_inverse_residual(const QFundamental& rho) {
    QhScalar coeff = rho.scalar(ScalarPoly::h()) * (rho.q_pow(Rational(1)) - QhScalar(1)).invert();
    QMat x = rho.rep.at(qsym("e_long")).scaled(coeff);
    unsigned bound = static_cast<unsigned>(rho.rep.dim());
    // The symmetric q-integers are invariant under q -> q^{-1}, so E_{q^{-1}} is E_q.
    QMat a = q_series_apply(x, rho.L, rho.window, bound);
    QMat b = q_series_apply(-x, rho.L, rho.window, bound);
    return a * b - QMat::identity(rho.rep.dim());
}

namespace {

Mat negative_part_as_poly(const QMat& m) {
    // Collapse each entry's negative orders into one polynomial per entry, for reporting.
    Mat out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            for (int o = m(i, j).min_order(); o < 0 && !m(i, j).is_zero(); ++o) out(i, j) += m(i, j).coeff(o);
    return out;
}

} // namespace

CheckReport run_contraction(Window w, Window wider, const std::string& leg) {
    CheckReport rep;
    rep.suite = "contraction";
    const int N = 3, L = default_root_index(3);
    const std::string label = "fund*fund";
    const std::string win = "[" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "]";
    rep.config["window"] = win;
    rep.config["L"] = std::to_string(L);
    rep.config["wider-window"] = "[" + std::to_string(wider.lo) + "," + std::to_string(wider.hi) + "]";

    QFundamental f = q_fundamental_rep(N, L, w);
    ContractionResult c = contract(f, f);
    ReportEntry poles{"sl3.contraction.poles-cancel", label, c.surviving_poles.empty(), {}, kLambda13Right,
                      Level::check, {}};
    for (size_t k = 0; k < c.surviving_poles.size() && k < 12; ++k) poles.residual_summary.push_back(c.surviving_poles[k]);
    if (c.surviving_poles.size() > 12) poles.note = std::to_string(c.surviving_poles.size()) + " surviving terms";
    rep.add(poles);

    DeformedGenerators g = build_deformed(N, 1);
    TwistVariant canon{leg.empty() ? select_twist_leg() : leg, kCrossAsWritten};
    Mat R = build_R(g, g, canon);
    rep.add(residual_entry("sl3.contraction.limit=twist-R", label, c.limit - R, Level::check, kLambda13Right));
    rep.add(residual_entry("sl3.contraction.limit=closed-form", label, c.limit - closed_form_R(g, g), Level::check,
                           kLambda13Right));

    QFundamental fw = q_fundamental_rep(N, L, wider);
    ContractionResult cw = contract(fw, fw);
    rep.add(residual_entry("sl3.contraction.window-stable", label, cw.limit - c.limit, Level::check, kLambda13Right));

    // q-power of Λ13 moved to the left of f3.
    ContractionResult cl = contract(f, f, kLambda13Left);
    rep.add(residual_entry("sl3.contraction.poles-cancel", label, negative_part_as_poly(cl.conjugated), Level::warn,
                           kLambda13Left));
    rep.add(residual_entry("sl3.contraction.limit=twist-R", label, cl.limit - R, Level::warn, kLambda13Left));

    QMat inv = q_exp_inverse_residual(f);
    bool inv_zero = inv.is_zero();
    rep.add(bool_entry("sl3.contraction.Eq(x)*Eq^-1(-x)=1", "fund", inv_zero,
                       inv_zero ? "" : "nonzero residual within the window"));
    return rep;
}

} // namespace jordalg
