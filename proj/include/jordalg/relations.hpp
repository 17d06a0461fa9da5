#pragma once

#include "jordalg/jordanian.hpp"

#include <string>
#include <vector>

namespace jordalg {

// A relation is an expression over jordanian symbols that must evaluate to zero.
// Relations involving 1/h are multiplied through by h; over Q[h] this is an
// equivalent statement.
struct Relation {
    std::string block;  // sl2, sl3.full, sl3.chevalley, sl3.brief, sl4.chevalley, sl4.brief, slN
    std::string name;
    GenExpr expr;
    int n_min = 3;
    int n_max = 0;  // 0: no upper bound
    // Written form kept alongside a failing relation for diagnosis; never a pass criterion.
    std::vector<std::pair<std::string, GenExpr>> diagnostics;

    std::string tag() const { return block + "." + name; }
    bool applies(int N) const { return N >= n_min && (n_max == 0 || N <= n_max); }
};

// Series-defined T^{±1} built from the Chevalley raising generators:
// (1 + 2h [E1,[E2,...,E_{N-1}]])^{±1/2}.
GenSymbol J_Tseries();
GenSymbol J_Tinvseries();

std::vector<Relation> relation_catalog(int N);
std::vector<std::string> relation_blocks();

// Adds the series-defined symbols to any rep carrying E1..E_{N-1}.
Rep with_series_symbols(const Rep& rho, int N);
// Deformed rep plus the series-defined symbols.
Rep relation_rep(const DeformedGenerators& g);

Mat check_relation(const Relation& r, const DeformedGenerators& g);

CheckReport check_sl2_sector(const DeformedGenerators& g, const std::string& rep_label);

CheckReport run_catalog(int N, const std::vector<int>& tensor_powers = {1, 2});

// N = 3: images of the Chevalley relations under both automorphisms evaluate to zero.
CheckReport automorphism_relation_check(const std::vector<int>& tensor_powers = {1, 2});

} // namespace jordalg
