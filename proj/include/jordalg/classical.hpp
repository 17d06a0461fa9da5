#pragma once

#include "jordalg/free_algebra.hpp"

#include <string>
#include <vector>

namespace jordalg {

struct ClassicalData {
    int N = 3;
    std::vector<std::vector<int>> cartan;

    explicit ClassicalData(int n);
    int a(int i, int j) const { return cartan[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
};

// Symbol helpers; indices are one-based as in the usual Chevalley labelling.
GenSymbol e_(int i);
GenSymbol f_(int i);
GenSymbol h_(int i);
// Root vector e_{ij} for i != j, e.g. root(1,3) is e13 and root(3,1) is e31.
GenSymbol root(int i, int j);
GenSymbol e_long();
GenSymbol f_long();
GenSymbol h_sum();

// One-based unit matrix E_ij of size n.
Mat unit_matrix(size_t n, int i, int j);

Rep fundamental_rep(int N);
// Adds every root vector e_{ij} by iterated commutators, plus the long root
// [e1,[e2,...,[e_{N-2},e_{N-1}]]], its lowering partner and h1+...+h_{N-1}.
Rep composite_roots(const Rep& rho, int N);
// Simple generators pushed through the iterated primitive coproduct, composites rebuilt.
Rep tensor_power_rep(const Rep& rho, int N, int k);

// fundamental (k = 1) or its k-th tensor power, with composites.
Rep classical_rep(int N, int k);

std::vector<GenSymbol> classical_simple_symbols(int N);

struct ClassicalRelationResidual {
    std::string name;
    Mat residual;
};
// [h,h], [h,e], [h,f], [e,f] and Serre relations of sl(N).
std::vector<ClassicalRelationResidual> classical_relation_residuals(const Rep& rho, int N);

} // namespace jordalg
