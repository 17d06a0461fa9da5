#pragma once

#include "jordalg/report.hpp"

namespace jordalg {

// h = 0 in every deformed object: generators, coproducts, R, G and the contraction limit.
CheckReport classical_limits(int N);

// Entrywise value at h = 0.
Mat at_h0(const Mat& m);

} // namespace jordalg
