#include "jordalg/jordanian.hpp"
#include "jordalg/limits.hpp"
#include "support.hpp"

using namespace jordalg;
using testing_support::E;
using testing_support::find_entry;
using testing_support::h;
using testing_support::ints;

TEST_CASE("sl3 fundamental images of the deformed generators") {
    DeformedGenerators g = build_deformed(3, 1);
    Mat I = Mat::identity(3);
    CHECK(g.T() == I + E(3, 1, 3).scaled(h()));
    CHECK(g.Tinv() == I - E(3, 1, 3).scaled(h()));
    CHECK(g.deformed.at(J_Thalf()) == I + E(3, 1, 3).scaled(h(1, 1, 2)));
    CHECK(g.E(1) == E(3, 1, 2));
    CHECK(g.E(2) == E(3, 2, 3));
    CHECK(g.Elong() == E(3, 1, 3));
    CHECK(g.Hlong() == ints({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
    CHECK(g.H(1) == ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}) + E(3, 1, 3).scaled(h(1, 1, 2)));
    CHECK(g.F(1) == E(3, 2, 1) - E(3, 2, 3).scaled(h(1, 1, 2)));
}

TEST_CASE("function symbols are mutually consistent") {
    for (int k : {1, 2}) {
        DeformedGenerators g = build_deformed(3, k);
        const Rep& c = g.classical;
        size_t n = c.dim();
        CHECK((c.at(fn_T()) * c.at(fn_Tinv())).is_identity());
        CHECK(c.at(fn_Thalf()) * c.at(fn_Thalf()) == c.at(fn_T()));
        CHECK(c.at(fn_rootT()) == c.at(fn_Thalf()));
        CHECK(c.at(fn_rootTinv()) == c.at(fn_Tneghalf()));
        Mat e = c.at(e_long()).scaled(h());
        CHECK(c.at(fn_sqrt()) * c.at(fn_sqrt()) == Mat::identity(n) + e * e);
        CHECK(c.at(fn_T()) - c.at(fn_Tinv()) == e.scaled(ScalarPoly(2)));
    }
}

TEST_CASE("general map rejects small N") { CHECK_THROWS_AS(deformation_map(2), ConfigError); }

TEST_CASE("h = 0 returns the classical generators") {
    DeformedGenerators g = build_deformed(4, 2);
    CHECK(at_h0(g.E(2)) == g.classical.at(e_(2)));
    CHECK(at_h0(g.F(3)) == g.classical.at(f_(3)));
    CHECK(at_h0(g.H(1)) == g.classical.at(h_(1)));
    CHECK(at_h0(g.T()).is_identity());
}

TEST_CASE("specializations agree with the general map") {
    CheckReport r3 = specialize_check(3);
    CHECK(r3.failures() == 0);
    CHECK(r3.entries.size() > 20);
    CheckReport r4 = specialize_check(4);
    CHECK(r4.failures() == 0);
    // The compact written forms of E31 and E43 disagree in the tensor square and are adjudicated.
    const ReportEntry* e31 = find_entry(r4, "sl4.map.E31[compact]", "fund2");
    REQUIRE(e31);
    CHECK(!e31->pass);
    CHECK(e31->level == Level::warn);
    size_t warns = 0;
    for (const auto& e : r4.entries)
        if (e.level == Level::warn && !e.pass) ++warns;
    CHECK(warns == 2);
}

TEST_CASE("tabulated irreps") {
    CheckReport r = irreps_check();
    CHECK(r.failures() == 0);
    for (const char* s : {"T", "Tinv", "E1", "E2", "F1", "F2", "Flong", "Hlong"}) {
        const ReportEntry* e = find_entry(r, std::string("irrep3.tabulated-vs-map.") + s);
        REQUIRE(e);
        CHECK(e->pass);
    }
    const ReportEntry* h1 = find_entry(r, "irrep3.tabulated-vs-map.H1");
    REQUIRE(h1);
    CHECK(!h1->pass);
    CHECK(h1->level == Level::warn);
    REQUIRE(h1->residual_summary.size() == 1);
    CHECK(h1->residual_summary[0].row == 1);
    CHECK(h1->residual_summary[0].col == 1);
    CHECK(h1->note == "(2,2) tabulated 0 vs map -1");
}

TEST_CASE("phi squares to minus one on the simple sectors, varphi is involutive") {
    auto phi = automorphism_phi();
    auto vphi = automorphism_varphi();
    DeformedGenerators g = build_deformed(3, 1);
    auto twice = [&](const Automorphism& a, const GenSymbol& s) {
        return expr_eval(apply_automorphism(a, apply_automorphism(a, GenExpr(s))), g.deformed);
    };
    for (const auto& s : {J_E(1), J_E(2), J_F(1), J_F(2)}) CHECK(twice(phi, s) == -g.deformed.at(s));
    for (const auto& s : {J_H(1), J_H(2), J_T(), J_Flong()}) CHECK(twice(phi, s) == g.deformed.at(s));
    for (const auto& s : {J_E(1), J_F(2), J_H(1), J_T(), J_Flong()}) CHECK(twice(vphi, s) == g.deformed.at(s));
}
