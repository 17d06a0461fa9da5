#include "jordalg/classical.hpp"
#include "support.hpp"

using namespace jordalg;
using testing_support::E;
using testing_support::ints;

TEST_CASE("sl3 fundamental") {
    Rep r = classical_rep(3, 1);
    CHECK(r.at(h_(1)) == ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
    CHECK(r.at(h_(2)) == ints({{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
    CHECK(r.at(e_(1)) == E(3, 1, 2));
    CHECK(r.at(f_(2)) == E(3, 3, 2));
    CHECK(r.at(e_long()) == E(3, 1, 3));
    CHECK(r.at(h_sum()) == ints({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}));
    CHECK(r.at(root(3, 1)) == E(3, 3, 1));
    CHECK(commutator(r.at(e_long()), r.at(f_long())) == r.at(h_sum()));
}

TEST_CASE("Cartan matrix") {
    ClassicalData d(4);
    CHECK(d.a(1, 1) == 2);
    CHECK(d.a(1, 2) == -1);
    CHECK(d.a(1, 3) == 0);
    CHECK(d.a(3, 2) == -1);
}

TEST_CASE("classical relations hold in every tested rep") {
    for (int N : {3, 4, 5})
        for (int k : {1, 2}) {
            if (N == 5 && k == 2) continue;
            Rep r = classical_rep(N, k);
            CHECK(r.dim() == static_cast<size_t>(k == 1 ? N : N * N));
            for (const auto& res : classical_relation_residuals(r, N)) {
                INFO("N=" << N << " k=" << k << " " << res.name);
                CHECK(res.residual.is_zero());
            }
        }
}

TEST_CASE("tensor powers use the primitive coproduct") {
    Rep f = classical_rep(3, 1);
    Rep f2 = classical_rep(3, 2);
    Mat id = Mat::identity(3);
    for (const auto& s : {e_(1), e_(2), f_(1), f_(2), h_(1), h_(2)})
        CHECK(f2.at(s) == kron(f.at(s), id) + kron(id, f.at(s)));
    // composites rebuilt from the tensor-power simple generators
    CHECK(f2.at(e_long()) == commutator(f2.at(e_(1)), f2.at(e_(2))));
    CHECK(classical_rep(3, 3).dim() == 27);
}

TEST_CASE("long root vector is nilpotent") {
    for (int N : {3, 4, 5}) CHECK(*nilpotency_index(classical_rep(N, 1).at(e_long())) == 2);
    CHECK(*nilpotency_index(classical_rep(3, 2).at(e_long())) == 3);
}
