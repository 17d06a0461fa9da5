#include "jordalg/classical.hpp"
#include "support.hpp"

using namespace jordalg;
using testing_support::h;

namespace {
GenExpr a() { return GenExpr(csym("a")); }
GenExpr b() { return GenExpr(csym("b")); }
GenExpr c() { return GenExpr(csym("c")); }
} // namespace

TEST_CASE("words combine and cancel") {
    GenExpr x = a() * b() - b() * a();
    CHECK(x == comm(a(), b()));
    CHECK((comm(a(), b()) + comm(b(), a())).is_zero());
    CHECK(power(a() + b(), 2) == a() * a() + a() * b() + b() * a() + b() * b());
    CHECK((a() * GenExpr::unit()) == a());
    CHECK(x.symbols().size() == 2);
    CHECK((h() * a()).terms().begin()->second == h());
}

TEST_CASE("Jacobi identity in the free algebra") {
    GenExpr j = comm(a(), comm(b(), c())) + comm(b(), comm(c(), a())) + comm(c(), comm(a(), b()));
    CHECK(j.is_zero());
}

TEST_CASE("tagged symbols stay distinct") {
    CHECK(!(csym("E1") == jsym("E1")));
    CHECK(!(GenExpr(csym("E1")) - GenExpr(jsym("E1"))).is_zero());
}

TEST_CASE("hom and anti-hom extension") {
    std::map<GenSymbol, GenExpr> phi{{csym("a"), b()}, {csym("b"), a() + c()}};
    CHECK(hom_extend(phi, a() * b()) == b() * a() + b() * c());
    CHECK(hom_extend(phi, a() * b(), HomKind::anti_homomorphism) == a() * b() + c() * b());
    auto S = classical_antipode({csym("a"), csym("b")});
    CHECK(hom_extend(S, a() * b(), HomKind::anti_homomorphism) == b() * a());
}

TEST_CASE("tensor expressions") {
    TensorExpr t = tensor(a(), b()) + h(2) * tensor(b(), GenExpr::unit());
    CHECK(opposite(opposite(t)) == t);
    CHECK(opposite(tensor(a(), b())) == tensor(b(), a()));
    CHECK(tensor_power(tensor(a(), b()), 2) == tensor(a() * a(), b() * b()));
    CHECK((t - t).is_zero());
}

TEST_CASE("primitive coproduct is coassociative") {
    auto D = primitive_coproduct({csym("a"), csym("b")});
    for (const auto& x : {a(), a() * b(), comm(a(), b()) + h() * b()}) {
        TensorExpr d = hom_extend(D, x);
        CHECK(expand_leg(d, 0, D) == expand_leg(d, 1, D));
    }
}

TEST_CASE("tensor_eval agrees with kron") {
    Rep r(2);
    r.set(csym("a"), Mat::unit(2, 0, 1));
    r.set(csym("b"), Mat::unit(2, 1, 0));
    Mat m = tensor_eval(tensor(a(), b() * a()), r, r);
    CHECK(m == kron(r.at(csym("a")), r.at(csym("b")) * r.at(csym("a"))));
    CHECK_THROWS_AS(expr_eval(c(), r), UnassignedSymbol);
    CHECK_THROWS_AS(r.set(csym("c"), Mat::identity(3)), DimensionMismatch);
    CHECK(word_eval({}, r).is_identity());
}
