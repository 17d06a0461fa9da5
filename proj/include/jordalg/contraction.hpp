#pragma once

#include "jordalg/laurent.hpp"
#include "jordalg/rmatrix.hpp"

#include <vector>

namespace jordalg {

using QMat = RingMatrix<QhScalar>;
using QRep = RepAssignment<QhScalar>;

// Fundamental rep of the q-deformed algebra with q = u^L, entries truncated to the window.
struct QFundamental {
    int N = 3;
    int L = 6;
    Window window{};
    QRep rep;                                 // e1.., f1.., k_i^{±1}, e_long, f_long
    std::vector<std::vector<Rational>> weights;  // weights[i][a]: eigenvalue of h_{i+1} on basis vector a

    // diag q^{Σ c_i h_i}.
    QMat q_weight(const std::vector<Rational>& c) const;
    QhScalar scalar(const ScalarPoly& c) const;
    QhScalar q_pow(const Rational& alpha) const;
};

int default_root_index(int N);
QFundamental q_fundamental_rep(int N, int L, Window w);

// Position of the q-power inside Λ13: as written it sits to the right of f3.
inline const char* kLambda13Right = "power-right";
inline const char* kLambda13Left = "power-left";

// R_q in fund ⊗ fund as the 3 × 3 block matrix of operators on the second slot. N = 3 only.
QMat build_Rq(const QFundamental& fund, const QFundamental& arb, const std::string& lambda13 = kLambda13Right);

// E_q(h e_long / (q - 1)) in one slot.
QMat q_conjugator(const QFundamental& rho);

struct ContractionResult {
    QMat conjugated;  // before the limit
    Mat limit;        // value at q = 1
    std::vector<ResidualItem> surviving_poles;
};

ContractionResult contract(const QFundamental& fund, const QFundamental& arb,
                           const std::string& lambda13 = kLambda13Right);

// Σ x^n/[n]! · Σ (-x)^n/[n]!_{q^{-1}} - 1 on x = h e_long/(q - 1) in the fundamental.
QMat q_exp_inverse_residual(const QFundamental& rho);

// Negative orders cancel, limit equals the twist-built R, window stability, and the
// position-of-power diagnostic. An empty leg compares against the selected twist variant.
CheckReport run_contraction(Window w = {}, Window wider = {-16, 10}, const std::string& leg = {});

} // namespace jordalg
