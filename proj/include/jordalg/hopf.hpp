#pragma once

#include "jordalg/relations.hpp"

#include <map>
#include <string>

namespace jordalg {

struct HopfTable {
    int N = 3;
    std::string variant;
    std::map<GenSymbol, TensorExpr> delta;
    std::map<GenSymbol, GenExpr> antipode;
    std::map<GenSymbol, Rational> counit;

    bool covers(const GenSymbol& s) const { return delta.count(s) != 0; }
};

// Variant names.
inline const char* kHopfGeneral = "general";            // weighted table for every N, T(H1+...+H_{N-1}) leg
inline const char* kHopfSl3Explicit = "sl3-explicit";   // N = 3 forms written with h H3 ⊗ E2 and T^{-1}H3
inline const char* kHopfNoInteriorT = "no-interior-T";  // (H1+...+H_{N-1}) ⊗ T^{-1}[F_i,T] without the leading T

HopfTable hopf_table(int N, const std::string& variant = kHopfGeneral);

// Symbol -> matrix of Δ(symbol) on V⊗V.
Rep delta_image(const HopfTable& t, const Rep& rho);

CheckReport check_coassociativity(const HopfTable& t, const Rep& rho, const std::string& rep_label);
CheckReport check_counit_antipode(const HopfTable& t, const Rep& rho, const std::string& rep_label);
// Relations whose symbols the table does not cover are listed as info entries and skipped.
CheckReport check_coproduct_homomorphism(const HopfTable& t, const std::vector<Relation>& catalog, const Rep& rho,
                                         const std::string& rep_label);

// Pairwise comparison of the written table variants plus their axiom checks, N = 3 or 4.
// Variant-specific failures of a non-selected table are warnings.
CheckReport reconcile_printed_variants(int N);
// The variant whose checks leave the fewest failing entries; ties go to the general table.
std::string select_hopf_variant(int N);

CheckReport run_hopf(int N);

} // namespace jordalg
