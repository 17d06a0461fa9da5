#include "jordalg/limits.hpp"

#include "jordalg/contraction.hpp"

namespace jordalg {

Mat at_h0(const Mat& m) {
    return m.map([](const ScalarPoly& p) { return ScalarPoly(p.at_zero()); });
}

namespace {

// Classical counterpart of a jordanian symbol; nullopt for the T-family (limit is the identity).
std::optional<GenSymbol> counterpart(const GenSymbol& s, int N) {
    for (int i = 1; i < N; ++i) {
        if (s == J_H(i)) return h_(i);
        if (s == J_E(i)) return e_(i);
        if (s == J_F(i)) return f_(i);
    }
    if (s == J_Hlong()) return h_sum();
    if (s == J_Elong()) return e_long();
    if (s == J_Flong()) return f_long();
    return std::nullopt;
}

} // namespace

CheckReport classical_limits(int N) {
    CheckReport rep;
    rep.suite = "limits";
    const std::string p = "sl" + std::to_string(N) + ".limit.";
    DeformedGenerators g1 = build_deformed(N, 1);
    for (int k : {1, 2}) {
        DeformedGenerators g = k == 1 ? g1 : build_deformed(N, k);
        size_t n = g.deformed.dim();
        for (const auto& [s, m] : g.deformed.entries()) {
            auto c = counterpart(s, N);
            Mat target = c ? g.classical.at(*c) : Mat::identity(n);
            rep.add(residual_entry(p + "generator." + s.name, rep_name(k), at_h0(m) - target));
        }
    }

    HopfTable t = hopf_table(N, N == 3 || N == 4 ? select_hopf_variant(N) : std::string(kHopfGeneral));
    size_t n = g1.deformed.dim();
    Mat id = Mat::identity(n);
    for (const auto& [s, d] : t.delta) {
        auto c = counterpart(s, N);
        Mat x = c ? g1.classical.at(*c) : id;
        Mat target = c ? kron(x, id) + kron(id, x) : kron(id, id);
        rep.add(residual_entry(p + "coproduct." + s.name, "fund^2", at_h0(tensor_eval(d, g1.deformed, g1.deformed)) - target,
                               Level::check, t.variant));
    }

    for (const char* leg : {kLegWithT, kLegPlain}) {
        TwistVariant v{leg, kCrossAsWritten};
        rep.add(residual_entry(p + "R", "fund^2", at_h0(build_R(g1, g1, v)) - Mat::identity(n * n), Level::check,
                               v.label()));
    }
    if (N == 3) {
        rep.add(residual_entry(p + "G", "fund^2",
                               at_h0(tensor_eval(twist_G(), g1.classical, g1.classical)) - Mat::identity(9)));
        QFundamental f = q_fundamental_rep(3, default_root_index(3), {});
        rep.add(residual_entry(p + "contraction", "fund*fund", at_h0(contract(f, f).limit) - Mat::identity(9)));
    }
    return rep;
}

} // namespace jordalg
