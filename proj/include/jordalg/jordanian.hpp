#pragma once

#include "jordalg/classical.hpp"
#include "jordalg/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace jordalg {

// Deformed generator symbols. Hlong/Elong/Flong are the generators attached to
// the highest root; T and its inverse and half powers are kept separate so
// every relation can be written polynomially.
GenSymbol J_H(int i);
GenSymbol J_E(int i);
GenSymbol J_F(int i);
GenSymbol J_T();
GenSymbol J_Tinv();
GenSymbol J_Thalf();
GenSymbol J_Tneghalf();
GenSymbol J_Hlong();
GenSymbol J_Elong();
GenSymbol J_Flong();

std::vector<GenSymbol> jordanian_symbols(int N);

// Function-of-elong symbols on the classical side:
//   Tfn = h e + sqrt(1 + h^2 e^2), Tinvfn its inverse, Thalffn/Tneghalffn = exp(±arcsinh(h e)/2),
//   sqrtfn = sqrt(1 + h^2 e^2), asinhfn = arcsinh(h e)/h.
GenSymbol fn_T();
GenSymbol fn_Tinv();
GenSymbol fn_Thalf();
GenSymbol fn_Tneghalf();
GenSymbol fn_sqrt();
GenSymbol fn_asinh();
// Square roots of T^{±1} taken by the binomial series of T^{±1} - 1.
GenSymbol fn_rootT();
GenSymbol fn_rootTinv();

// Evaluate the function symbols on a classical rep that already carries elong.
Rep with_function_values(const Rep& classical);

// Classical-side expression for each deformed generator.
std::map<GenSymbol, GenExpr> deformation_map(int N);

struct DeformedGenerators {
    int N = 3;
    Rep classical;  // classical generators plus function symbols
    Rep deformed;   // jordanian symbols

    const Mat& H(int i) const { return deformed.at(J_H(i)); }
    const Mat& E(int i) const { return deformed.at(J_E(i)); }
    const Mat& F(int i) const { return deformed.at(J_F(i)); }
    const Mat& T() const { return deformed.at(J_T()); }
    const Mat& Tinv() const { return deformed.at(J_Tinv()); }
    const Mat& Hlong() const { return deformed.at(J_Hlong()); }
    const Mat& Elong() const { return deformed.at(J_Elong()); }
    const Mat& Flong() const { return deformed.at(J_Flong()); }
};

DeformedGenerators build_deformed(const Rep& classical, int N);
// fund (k = 1) or fund^{⊗k}.
DeformedGenerators build_deformed(int N, int k);

std::string rep_name(int k);

// Every closed-form specialization of the map for N = 3 and N = 4, compared
// against the general map. Printed objects with two written forms get one entry
// per form. Only the pair singled out as an ambiguous transcription is
// adjudicated: a failing form there is downgraded to a warning when another form
// agrees everywhere.
CheckReport specialize_check(int N, const std::vector<int>& tensor_powers = {1, 2});

// The two tabulated 3-dimensional irreps of the N = 3 algebra, as written.
std::pair<Rep, Rep> tabulated_irreps_3dim();

// Automorphisms of the N = 3 algebra: phi swaps the two simple sectors,
// varphi flips the sign of T and of the long-root generators.
using Automorphism = std::map<GenSymbol, GenExpr>;
Automorphism automorphism_phi();
Automorphism automorphism_varphi();
GenExpr apply_automorphism(const Automorphism& a, const GenExpr& x);
// Transport a rep through an automorphism: X -> rho(a(X)).
Rep transport(const Automorphism& a, const Rep& rho);

// The 3-dimensional irreps and the automorphism checks.
CheckReport irreps_check();

} // namespace jordalg
