#include "jordalg/limits.hpp"
#include "jordalg/relations.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace jordalg;
using testing_support::blocking_tags;
using testing_support::E;
using testing_support::find_entry;
using testing_support::h;

namespace {
GenExpr J(const GenSymbol& s) { return GenExpr(s); }
}

TEST_CASE("hand-checked relations in the sl3 fundamental") {
    DeformedGenerators g = build_deformed(3, 1);
    const Mat& T = g.T();
    Mat I = Mat::identity(3);
    // [H3,T] = T^2 - 1 = 2h E13
    CHECK(commutator(g.Hlong(), T) == T * T - I);
    CHECK(T * T - I == E(3, 1, 3).scaled(h(2)));
    // [E1,E2] = (T^2 - 1)/(2h) = E13
    CHECK(commutator(g.E(1), g.E(2)) == E(3, 1, 3));
    // [E3,F3] = H3
    CHECK(commutator(g.Elong(), g.Flong()) == g.Hlong());
}

TEST_CASE("Serre relation in the tensor square") {
    DeformedGenerators g = build_deformed(3, 2);
    Mat ad = commutator(g.E(1), commutator(g.E(1), g.E(2)));
    CHECK(ad.is_zero());
    Mat sl2 = commutator(g.Hlong(), g.Flong()) +
              (g.T() * g.Flong() + g.Flong() * g.T() + g.Tinv() * g.Flong() + g.Flong() * g.Tinv())
                  .scaled(ScalarPoly(Rational(1, 2)));
    CHECK(sl2.is_zero());
}

TEST_CASE("catalog coverage") {
    auto blocks = relation_blocks();
    for (const char* b : {"sl2", "sl3.full", "sl3.chevalley", "sl3.brief", "sl4.chevalley", "sl4.brief", "slN"})
        CHECK(std::find(blocks.begin(), blocks.end(), b) != blocks.end());
    std::set<std::string> tags;
    for (const auto& r : relation_catalog(3)) CHECK(tags.insert(r.tag()).second);
    CHECK(tags.count("sl3.full.[F1,F3]") == 1);
    for (const auto& r : relation_catalog(5)) CHECK(r.applies(5));
}

TEST_CASE("N = 3 catalog vanishes in fund and fund2") { CHECK(run_catalog(3, {1, 2}).failures() == 0); }

TEST_CASE("N = 3 catalog: the failing entries are the two [F_i,F3] relations") {
    CheckReport r = run_catalog(3, {1, 2});
    auto bad = blocking_tags(r);
    std::sort(bad.begin(), bad.end());
    CHECK(bad == std::vector<std::string>{"sl3.full.[F1,F3]@fund", "sl3.full.[F1,F3]@fund2", "sl3.full.[F2,F3]@fund",
                                          "sl3.full.[F2,F3]@fund2"});
}

TEST_CASE("half-coefficient forms of the [F_i,F3] relations vanish") {
    CheckReport r = run_catalog(3, {1, 2});
    size_t seen = 0;
    for (const auto& e : r.entries)
        if (e.level == Level::info && e.variant == "half-coefficient") {
            CHECK(e.pass);
            ++seen;
        }
    CHECK(seen == 4);
}

TEST_CASE("N = 4 fund, fund2 and N = 5 fund") {
    CHECK(run_catalog(4, {1, 2}).failures() == 0);
    CheckReport r5 = run_catalog(5, {1});
    CHECK(r5.failures() == 0);
    CHECK(find_entry(r5, "slN.[E1,E3]", "fund"));
}

TEST_CASE("h^0 part of every residual is the classical residual, which vanishes") {
    DeformedGenerators g = build_deformed(3, 2);
    for (const auto& r : relation_catalog(3)) {
        INFO(r.tag());
        CHECK(at_h0(check_relation(r, g)).is_zero());
    }
}

TEST_CASE("automorphism images of the relations") { CHECK(automorphism_relation_check({1, 2}).failures() == 0); }

TEST_CASE("unassigned symbols are reported") {
    Relation r{"test", "x", J(jsym("nope")), 3, 0, {}};
    CHECK_THROWS_AS(check_relation(r, build_deformed(3, 1)), UnassignedSymbol);
}
