#include "jordalg/free_algebra.hpp"
#include "jordalg/series.hpp"
#include "support.hpp"

using namespace jordalg;
using testing_support::E;
using testing_support::h;
using testing_support::ints;

TEST_CASE("product and shape errors") {
    Mat a = ints({{1, 2}, {3, 4}});
    Mat b = ints({{0, 1}, {1, 0}});
    CHECK(a * b == ints({{2, 1}, {4, 3}}));
    CHECK(commutator(a, b) == ints({{-1, -3}, {3, 1}}));
    CHECK_THROWS_AS(a * Mat(3, 3), DimensionMismatch);
    CHECK_THROWS_AS(a + Mat(3, 3), DimensionMismatch);
    CHECK(mat_pow(a, 0).is_identity());
    CHECK(mat_pow(a, 2) == ints({{7, 10}, {15, 22}}));
}

TEST_CASE("kron uses the block convention") {
    Mat a = ints({{1, 2}, {0, 1}});
    Mat b = ints({{0, 1}, {1, 0}});
    Mat k = kron(a, b);
    CHECK(k == ints({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
}

TEST_CASE("kron mixed product, random") {
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        Mat A = testing_support::random_matrix(rng, 2, 2), B = testing_support::random_matrix(rng, 3, 3);
        Mat C = testing_support::random_matrix(rng, 2, 2), D = testing_support::random_matrix(rng, 3, 3);
        CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
    }
}

TEST_CASE("flip swaps tensor legs") {
    std::mt19937 rng(3);
    Mat P = flip<ScalarPoly>(2, 3);
    Mat Q = flip<ScalarPoly>(3, 2);
    CHECK((Q * P).is_identity());
    Mat A = testing_support::random_matrix(rng, 2, 2), B = testing_support::random_matrix(rng, 3, 3);
    CHECK(P * kron(A, B) * Q == kron(B, A));
    Mat S = flip<ScalarPoly>(3, 3);
    CHECK((S * S).is_identity());
}

TEST_CASE("nilpotency and terminating series") {
    Mat n = E(3, 1, 2) + E(3, 2, 3);
    CHECK(*nilpotency_index(n) == 3);
    CHECK(!nilpotency_index(ints({{1, 0}, {0, 0}})));
    Mat x = n.scaled(h());
    Mat ex = series_apply(SeriesSpec::exp(), x);
    // exp(h(E12 + E23)) = I + h(E12 + E23) + h^2/2 E13
    CHECK(ex == Mat::identity(3) + x + E(3, 1, 3).scaled(h(1, 2, 2)));
    CHECK((ex * series_apply(SeriesSpec::exp(), -x)).is_identity());
    CHECK(mat_inverse_unipotent(ex) * ex == Mat::identity(3));
    CHECK_THROWS_AS(series_apply(SeriesSpec::exp(), Mat::identity(2)), NotNilpotentError);
    CHECK_THROWS_AS(mat_inverse_unipotent(ints({{2, 0}, {0, 1}})), NotUnipotent);
    // sqrt(1 + x)^2 = 1 + x on a nilpotent
    Mat s = series_apply(SeriesSpec::sqrt1p(), x);
    CHECK(s * s == Mat::identity(3) + x);
}

TEST_CASE("nonzero entries and transposition") {
    Mat m = E(3, 1, 3).scaled(h(2)) + E(3, 2, 1);
    auto nz = nonzero_entries(m);
    REQUIRE(nz.size() == 2);
    CHECK(nz[0].row == 0);
    CHECK(nz[0].col == 2);
    CHECK(nz[0].value == h(2));
    CHECK(m.transposed()(2, 0) == h(2));
}

TEST_CASE("deformed exponential on a nilpotent") {
    Window w{-12, 6};
    using QM = RingMatrix<QScalar>;
    QM x(3, 3);
    x(0, 1) = QScalar(1);
    x(1, 2) = QScalar(1);
    QM e = q_series_apply(x, 6, w, 3);
    // E_q(x) = 1 + x + x^2/[2]!, and [2] -> 2 at q = 1.
    CHECK(e(0, 1).limit_at_1() == Rational(1));
    CHECK(e(0, 2).limit_at_1() == Rational(1, 2));
    CHECK(e(0, 2).coeff(1) == Rational(0));
    CHECK_THROWS_AS(q_series_apply(x, 6, w, 2), NotNilpotentError);
}
