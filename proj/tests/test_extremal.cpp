#include <doctest.h>

#include "crysdem/extremal.hpp"
#include "test_util.hpp"

using namespace crysdem;
using namespace crysdem::testutil;

namespace {
IotaSequence remark_iota() { return IotaSequence({1, 2, 3, 2, 1, 2}, {1, 2, 3}); }
}

TEST_CASE("extremal_weight") {
    auto A = a2();
    Weight l1{{1, 0}};
    CHECK(extremal_weight(A, l1, WeylWord{{}}) == weight_offset(l1));
    WeightOffset r = extremal_weight(A, l1, WeylWord{{1}});
    CHECK(r.alpha == std::vector<Int>{1, 0});
}

TEST_CASE("solve_extremal basics") {
    auto A = a2();
    Weight l1{{1, 0}};
    CHECK(solve_extremal(A, alt12(), l1, WeylWord{{}}) == ZVector{});
    ZVector x = solve_extremal(A, alt12(), l1, WeylWord{{1}});
    CHECK(x.get(1) == 1);
    CHECK(x.max_support() == 1);
    CHECK_THROWS_AS(solve_extremal(A, alt12(), l1, WeylWord{{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_extremal(A, alt12(), Weight{{-1, 0}}, WeylWord{{1}}),
                    std::invalid_argument);
}

TEST_CASE("A_3 remark vectors") {
    auto A = a3();
    auto io = remark_iota();
    Weight lm{{1, 2, 3}};
    Int l1 = 1, l2 = 2, l3 = 3;
    // w = s_3 s_2 s_1
    ZVector x = solve_extremal(A, io, lm, WeylWord{{1, 2, 3}});
    CHECK(x.get(1) == l1);
    CHECK(x.get(2) == l1 + l2);
    CHECK(x.get(3) == l1 + l2 + l3);
    CHECK(x.max_support() == 3);
    // w = s_2 s_1 s_2 s_3 s_2 s_1
    ZVector y = solve_extremal(A, io, lm, WeylWord{{1, 2, 3, 2, 1, 2}});
    CHECK(y.get(1) == l1);
    CHECK(y.get(2) == l1 + l2);
    CHECK(y.get(3) == l1 + l2 + l3);
    CHECK(y.get(4) == l3);
    CHECK(y.get(5) == l2 + l3);
    CHECK(y.get(6) == l2);
}

TEST_CASE("oracle agreement and crystal membership") {
    auto A = a2();
    Weight lm{{2, 1}};
    CrystalContext ctx{A, alt12(), lm};
    for (auto& letters : std::vector<std::vector<int>>{{}, {1}, {1, 2}, {1, 2, 1}}) {
        WeylWord w{letters};
        ZVector solved = solve_extremal(A, alt12(), lm, w);
        CHECK(solved == extremal_oracle(A, alt12(), lm, w));
        CHECK(demazure_crystal(ctx, w).count(solved));
        CHECK(wt(ctx, solved) == extremal_weight(A, lm, w));
    }
}

TEST_CASE("oracle single step") {
    auto A = a2();
    Weight l1{{1, 0}};
    ZVector x = extremal_oracle(A, alt12(), l1, WeylWord{{1}});
    CHECK(x.get(1) == 1);
    CHECK(x.coordinate_sum() == 1);
}

TEST_CASE("e-reduction at the last letter lands in the smaller Demazure crystal") {
    auto A = a2();
    Weight lm{{2, 1}};
    CrystalContext ctx{A, alt12(), lm};
    WeylWord w{{1, 2, 1}};
    ZVector x = solve_extremal(A, alt12(), lm, w);
    int iL = w.letters.back();
    Int eps = epsilon_i(ctx, x, iL);
    ZVector y = x;
    for (Int t = 0; t < eps; ++t) {
        auto z = e_tilde(ctx, iL, y);
        REQUIRE(z);
        y = *z;
    }
    CHECK(y.get(static_cast<Int>(w.length())) == 0);
    WeylWord wp{{1, 2}};
    CHECK(demazure_crystal(ctx, wp).count(y));
}
