#include "jordalg/hopf.hpp"
#include "support.hpp"

#include <algorithm>

using namespace jordalg;
using testing_support::blocking_tags;
using testing_support::find_entry;
using testing_support::h;

TEST_CASE("table shape") {
    HopfTable t = hopf_table(3);
    for (const auto& s : {J_E(1), J_E(2), J_F(1), J_F(2), J_H(1), J_H(2), J_T(), J_Tinv(), J_Hlong(), J_Flong()})
        CHECK(t.covers(s));
    CHECK(!t.covers(J_Elong()));
    CHECK(t.counit.at(J_T()) == Rational(1));
    CHECK(t.counit.at(J_E(1)) == Rational(0));
    CHECK(t.delta.at(J_T()) == tensor(GenExpr(J_T()), GenExpr(J_T())));
    CHECK(t.antipode.at(J_Tinv()) == GenExpr(J_T()));
    CHECK_THROWS_AS(hopf_table(4, kHopfSl3Explicit), ConfigError);
    CHECK_THROWS_AS(hopf_table(3, "bogus"), ConfigError);
}

TEST_CASE("coproduct of E1 on V^3 is the twisted primitive") {
    DeformedGenerators g = build_deformed(3, 1);
    HopfTable t = hopf_table(3);
    Rep D = delta_image(t, g.deformed);
    Mat I = Mat::identity(3);
    const Mat& T = g.T();
    const Mat& E1 = g.E(1);
    // (Δ⊗id)Δ(E1) = E1⊗1⊗1 + T⊗E1⊗1 + T⊗T⊗E1
    Mat expect = kron(kron(E1, I), I) + kron(kron(T, E1), I) + kron(kron(T, T), E1);
    CHECK(kron(D.at(J_E(1)), I) + kron(D.at(J_T()), E1) == expect);
    CHECK(check_coassociativity(t, g.deformed, "fund").failures() == 0);
}

TEST_CASE("counit and antipode, N = 3") {
    DeformedGenerators g = build_deformed(3, 1);
    HopfTable t = hopf_table(3);
    // S(E1) + S(T) E1 = -T^{-1} E1 + T^{-1} E1
    Mat s_e1 = expr_eval(t.antipode.at(J_E(1)), g.deformed);
    CHECK(s_e1 + g.Tinv() * g.E(1) == Mat(3, 3));
    CheckReport r = check_counit_antipode(t, g.deformed, "fund");
    CHECK(r.failures() == 0);
    CHECK(find_entry(r, "hopf.antipode-left.H1"));
}

TEST_CASE("the two written N = 3 tables agree") {
    CheckReport r = reconcile_printed_variants(3);
    for (const char* tag : {"hopf.reconcile.T*(H1+H2)=H3", "hopf.reconcile.Tinv*[F1,T]=h*E2",
                            "hopf.reconcile.Tinv*[F2,T]=-h*E1"})
        for (const char* rep : {"fund", "fund2"}) {
            const ReportEntry* e = find_entry(r, tag, rep);
            REQUIRE(e);
            CHECK(e->pass);
        }
    for (const auto& e : r.entries)
        if (e.tag.rfind("hopf.reconcile.delta.", 0) == 0 || e.tag.rfind("hopf.reconcile.antipode.", 0) == 0)
            CHECK(e.pass);
}

TEST_CASE("N = 3 axioms and homomorphism vanish") { CHECK(run_hopf(3).failures() == 0); }

TEST_CASE("N = 3: only the [F_i,F3] relations fail under the coproduct") {
    CheckReport r = run_hopf(3);
    auto bad = blocking_tags(r);
    std::sort(bad.begin(), bad.end());
    CHECK(bad == std::vector<std::string>{"hopf.homomorphism.sl3.full.[F1,F3]@fund^2",
                                          "hopf.homomorphism.sl3.full.[F2,F3]@fund^2"});
    for (const auto& e : r.entries)
        if (e.tag.find("coassociativity") != std::string::npos || e.tag.find("counit") != std::string::npos)
            if (e.level == Level::check) CHECK(e.pass);
}

TEST_CASE("N = 4 reconcile keeps the general table") {
    CHECK(select_hopf_variant(4) == kHopfGeneral);
    CheckReport r = run_hopf(4);
    CHECK(r.failures() == 0);
    const ReportEntry* sel = find_entry(r, "hopf.reconcile.selected");
    REQUIRE(sel);
    CHECK(sel->variant == kHopfGeneral);
    bool no_interior_fails = false;
    for (const auto& e : r.entries)
        if (e.variant == kHopfNoInteriorT && !e.pass) {
            no_interior_fails = true;
            CHECK(e.level == Level::warn);
        }
    CHECK(no_interior_fails);
}

TEST_CASE("N = 5 axioms") { CHECK(run_hopf(5).failures() == 0); }

TEST_CASE("h = 0 coproducts are primitive") {
    DeformedGenerators g = build_deformed(3, 1);
    HopfTable t = hopf_table(3);
    Mat I = Mat::identity(3);
    Mat d = tensor_eval(t.delta.at(J_F(1)), g.deformed, g.deformed);
    Mat f1 = g.classical.at(f_(1));
    CHECK(d.map([](const ScalarPoly& p) { return ScalarPoly(p.at_zero()); }) == kron(f1, I) + kron(I, f1));
}
