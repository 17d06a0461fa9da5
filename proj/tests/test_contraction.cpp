#include "jordalg/contraction.hpp"
#include "jordalg/limits.hpp"
#include "jordalg/series.hpp"
#include "support.hpp"

using namespace jordalg;
using testing_support::E;
using testing_support::find_entry;
using testing_support::h;

namespace {
const Window kW{-12, 6};
QFundamental fund() { return q_fundamental_rep(3, default_root_index(3), kW); }
}

TEST_CASE("q-deformed fundamental") {
    QFundamental f = fund();
    CHECK(f.L == 6);
    CHECK_THROWS_AS(q_fundamental_rep(3, 4, kW), IncompatibleRoot);
    // e3 = e1 e2 - q^-1 e2 e1 is E13 with constant coefficient.
    const QMat& e3 = f.rep.at(qsym("e_long"));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            if (i == 0 && j == 2) {
                CHECK(e3(i, j).limit_at_1() == ScalarPoly(1));
                CHECK(e3(i, j).max_order() == 0);
            } else {
                CHECK(e3(i, j).is_zero());
            }
        }
    // q^{h1} = diag(q, q^-1, 1), and k1 k1^-1 = 1.
    const QMat& k1 = f.rep.at(qsym("k1"));
    CHECK(k1(0, 0) == f.q_pow(Rational(1)));
    CHECK(k1(1, 1) == f.q_pow(Rational(-1)));
    CHECK((k1(2, 2) - QhScalar(1)).is_zero());
    QMat prod = k1 * f.rep.at(qsym("k1inv"));
    for (size_t i = 0; i < 3; ++i) CHECK((prod(i, i) - QhScalar(1)).is_zero());
    // t = 0 gives the classical generators.
    CHECK(f.rep.at(qsym("f_long"))(2, 0).limit_at_1() == ScalarPoly(1));
}

TEST_CASE("R_q at q = 1 is the identity") {
    QFundamental f = fund();
    QMat Rq = build_Rq(f, f);
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = 0; j < 9; ++j) CHECK(Rq(i, j).limit_at_1() == ScalarPoly(i == j ? 1 : 0));
    CHECK_THROWS_AS(build_Rq(f, f, "middle"), ConfigError);
}

TEST_CASE("Lambda23 in the fundamental") {
    QFundamental f = fund();
    QMat Rq = build_Rq(f, f);
    // block (2,3) = K22 q^{-1/2}(q - q^-1) q^{-h2/2} E32; on e3: h1 = 0, h2 = -1, so q^{-1/3} q^{-1/2} q^{1/2}.
    QhScalar expect = f.q_pow(Rational(-1, 3)) * (f.q_pow(Rational(1)) - f.q_pow(Rational(-1)));
    CHECK(Rq(3 + 2, 6 + 1) == expect);
}

TEST_CASE("conjugator in the fundamental") {
    QFundamental f = fund();
    QMat c = q_conjugator(f);
    QhScalar expect = f.scalar(h()) * (f.q_pow(Rational(1)) - QhScalar(1)).invert();
    CHECK(c(0, 2) == expect);
    CHECK(c(0, 2).min_order() == -1);
    CHECK((c(0, 0) - QhScalar(1)).is_zero());
}

TEST_CASE("contraction limit equals the twist-built R") {
    QFundamental f = fund();
    ContractionResult c = contract(f, f);
    CHECK(c.surviving_poles.empty());
    CHECK(c.limit == build_R(3, 1, 1));
}

TEST_CASE("contraction: the written Lambda13 leaves a corner discrepancy") {
    QFundamental f = fund();
    ContractionResult c = contract(f, f);
    Mat diff = c.limit - build_R(3, 1, 1);
    auto nz = nonzero_entries(diff);
    REQUIRE(nz.size() == 1);
    CHECK(nz[0].row == 0);
    CHECK(nz[0].col == 8);
    CHECK(nz[0].value == h(2, 2));
    CHECK(c.limit(0, 8) == h(3, 2));
}

TEST_CASE("contraction with the Lambda13 power on the left matches R") {
    QFundamental f = fund();
    ContractionResult c = contract(f, f, kLambda13Left);
    CHECK(c.surviving_poles.empty());
    CHECK(c.limit == build_R(3, 1, 1));
}

TEST_CASE("contraction is window-stable and classical at h = 0") {
    ContractionResult a = contract(fund(), fund());
    QFundamental wide = q_fundamental_rep(3, 6, {-16, 10});
    CHECK(contract(wide, wide).limit == a.limit);
    CHECK(at_h0(a.limit).is_identity());
}

TEST_CASE("E_q inverse on the fundamental conjugator argument") { CHECK(q_exp_inverse_residual(fund()).is_zero()); }

TEST_CASE("E_q(x) E_q(-x) differs from 1 once x^2 != 0") {
    using QM = RingMatrix<QScalar>;
    QM x(3, 3);
    x(0, 1) = QScalar(1);
    x(1, 2) = QScalar(1);
    QM prod = q_series_apply(x, 6, kW, 3) * q_series_apply(QM(-x), 6, kW, 3);
    // x^2 coefficient: 2/[2]! - 1, which vanishes only at q = 1.
    CHECK(!(prod(0, 2)).is_zero());
    CHECK(prod(0, 2).limit_at_1() == Rational(0));
    CHECK(prod(0, 1).is_zero());
}

TEST_CASE("contraction suite report") {
    CheckReport r = run_contraction();
    CHECK(r.failures() == 0);
    const ReportEntry* left = find_entry(r, "sl3.contraction.limit=twist-R", "fund*fund", kLambda13Left);
    REQUIRE(left);
    CHECK(left->pass);
}
