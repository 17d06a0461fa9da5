#pragma once

#include "jordalg/hopf.hpp"

#include <string>
#include <vector>

namespace jordalg {

// First exponential leg of the twist: with-T uses h T·Hlong ⊗ Elong, plain uses h Hlong ⊗ Elong.
inline const char* kLegWithT = "with-T";
inline const char* kLegPlain = "plain";
// Cross term of the second exponential. as-written: the rank-specific form
// (N = 3: T E1 ⊗ T^{-2} E2; N >= 4: sum over k of T E_{kN} ⊗ T^{-2} E_{1k}).
// legs-exchanged: the same tensors with the two legs' root vectors swapped.
inline const char* kCrossAsWritten = "as-written";
inline const char* kCrossExchanged = "legs-exchanged";

struct TwistVariant {
    std::string leg = kLegWithT;
    std::string cross = kCrossAsWritten;

    std::string label() const { return "leg=" + leg + ",cross=" + cross; }
};

// Composite raising vectors in a deformed rep, nested brackets of the simple E_i.
// E_{kN} = [E_k,[E_{k+1},...,E_{N-1}]] for 1 <= k <= N-1; E_{1k} = [E_1,[...,E_{k-1}]] for 2 <= k <= N.
Mat composite_E_kN(const DeformedGenerators& g, int k);
Mat composite_E_1k(const DeformedGenerators& g, int k);

// Exponent arguments of the two factors of F, on V_a ⊗ V_b.
struct TwistArguments {
    Mat first;
    Mat second;
    std::vector<Mat> cross_terms;  // summands of `second`
};
TwistArguments twist_arguments(const DeformedGenerators& a, const DeformedGenerators& b, const TwistVariant& v);

Mat twist_F(const DeformedGenerators& a, const DeformedGenerators& b, const TwistVariant& v);
// R = F21^{-1} F on V_a ⊗ V_b.
Mat build_R(const DeformedGenerators& a, const DeformedGenerators& b, const TwistVariant& v);
Mat build_R(int N, int k1, int k2, const TwistVariant& v = {});

// The printed block form of R in fund ⊗ arb, N = 3 or 4.
Mat closed_form_R(const DeformedGenerators& fund, const DeformedGenerators& arb);

CheckReport check_triangular_qybe(const Mat& R, size_t n, const std::string& tag_prefix, const std::string& rep_label,
                                  Level level = Level::check, const std::string& variant = {});
// R Δ(X) = Δop(X) R for every symbol the table covers.
CheckReport check_intertwining(const Mat& R, const HopfTable& t, const DeformedGenerators& a,
                               const DeformedGenerators& b, const std::string& tag_prefix,
                               const std::string& rep_label, Level level = Level::check,
                               const std::string& variant = {});
CheckReport check_rh_explicit(int N, int arb_k, const TwistVariant& v = {}, Level level = Level::check);

// N = 4: the cross tensors inside the second exponential commute pairwise.
CheckReport cross_term_commutativity(int N, const std::vector<int>& arb_powers = {1, 2});

// Both leg variants against the closed form, triangularity, QYBE and intertwining at N = 3;
// the survivor is canonical and the other variant's failures become warnings.
CheckReport reconcile_twist_variants();
std::string select_twist_leg();

// An empty leg runs the selection; a named one is used as given for N >= 4.
CheckReport run_rmatrix(int N, const std::string& leg = {});

// Twist series G through h^4 over the classical symbols elong and hsum.
TensorExpr twist_G();
// Coefficients of h^0..h^4.
std::vector<TensorExpr> twist_G_coefficients();
// g = 1 + h e sqrt(1 + h^2 e^2) + h^2 e^2.
GenExpr twist_g();
// Classical antipode: minus on Lie generators, T <-> T^{-1}, T^{1/2} <-> T^{-1/2}, asinh odd.
std::map<GenSymbol, GenExpr> classical_S0();

// Drops every power of h above max_degree, entrywise.
Mat truncate_h(const Mat& m, unsigned max_degree);

// Intertwining through h^4 on fund ⊗ fund, cocycle on fund^{⊗3}, exact antipode with g in
// fund and fund ⊗ fund, and μ(id ⊗ S0)G against g through h^4.
CheckReport check_twist_G();

} // namespace jordalg
