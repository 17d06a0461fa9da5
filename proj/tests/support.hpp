#pragma once

#include "jordalg/report.hpp"

#include <doctest.h>

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using jordalg::Mat;
using jordalg::Rational;
using jordalg::ScalarPoly;

inline ScalarPoly h(long c = 1, unsigned k = 1, long den = 1) { return ScalarPoly::monomial(Rational(c, den), k); }

// Rational matrix from integer rows.
inline Mat ints(std::initializer_list<std::initializer_list<long>> rows) {
    Mat m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (const auto& r : rows) {
        size_t j = 0;
        for (long x : r) m(i, j++) = ScalarPoly(Rational(x));
        ++i;
    }
    return m;
}

inline Mat E(size_t n, size_t i, size_t j) { return Mat::unit(n, i - 1, j - 1); }

inline Mat random_matrix(std::mt19937& rng, size_t r, size_t c, unsigned max_degree = 2) {
    std::uniform_int_distribution<long> d(-4, 4);
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            std::vector<Rational> cs;
            for (unsigned k = 0; k <= max_degree; ++k) cs.push_back(Rational(d(rng), 1 + (d(rng) + 4) % 3));
            m(i, j) = ScalarPoly(cs);
        }
    return m;
}

inline const jordalg::ReportEntry* find_entry(const jordalg::CheckReport& r, const std::string& tag,
                                              const std::string& rep = {}, const std::string& variant = {}) {
    for (const auto& e : r.entries)
        if (e.tag == tag && (rep.empty() || e.representation == rep) && (variant.empty() || e.variant == variant))
            return &e;
    return nullptr;
}

inline std::vector<std::string> blocking_tags(const jordalg::CheckReport& r) {
    std::vector<std::string> out;
    for (const auto& e : r.entries)
        if (e.blocking()) out.push_back(e.tag + "@" + e.representation);
    return out;
}

} // namespace testing_support
