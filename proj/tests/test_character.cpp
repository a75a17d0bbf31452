#include <doctest.h>

#include "crysdem/character.hpp"
#include "test_util.hpp"

using namespace crysdem;
using namespace crysdem::testutil;

TEST_CASE("D_i on monomials, small m") {
    auto A = a2();
    Weight l1{{1, 0}};
    CharacterElement chi = CharacterElement::monomial(l1);
    // m = <h_1, Lambda_1> = 1: e^mu + e^{mu - alpha_1}
    CharacterElement d1 = demazure_D_i(A, 1, chi);
    CHECK(d1.terms().size() == 2);
    CHECK(d1.terms().count({0, 0}));
    CHECK(d1.terms().count({1, 0}));
    // m = 0: identity
    CHECK(demazure_D_i(A, 2, chi) == chi);
    // m = -1: zero
    CharacterElement neg(l1);
    neg.add({1, 0}, 1);  // Lambda_1 - alpha_1, <h_1, .> = -1
    CharacterElement z = demazure_D_i(A, 1, neg);
    CHECK(z.terms().empty());
    // m = -2: minus the middle term
    CharacterElement neg2(Weight{{2, 0}});
    neg2.add({2, 0}, 1);  // 2*Lambda_1 - 2*alpha_1, <h_1, .> = -2
    CharacterElement d = demazure_D_i(A, 1, neg2);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms().at({1, 0}) == -1);
}

TEST_CASE("D_i is idempotent") {
    auto A = rank2(2, 3);
    CharacterElement chi(Weight{{2, 1}});
    chi.add({0, 0}, 1);
    chi.add({1, 0}, 2);
    chi.add({0, 2}, -1);
    for (int i = 1; i <= 2; ++i) {
        CharacterElement once = demazure_D_i(A, i, chi);
        CHECK(demazure_D_i(A, i, once) == once);
    }
}

TEST_CASE("D_w for the longest A_2 word gives the 8-dim adjoint character") {
    auto A = a2();
    Weight lm{{1, 1}};
    CharacterElement chi =
        demazure_D_w(A, WeylWord{{1, 2, 1}}, CharacterElement::monomial(lm));
    Int total = 0;
    for (auto& [c, coef] : chi.terms()) total += coef;
    CHECK(total == 8);
    CHECK(chi.terms().at({1, 1}) == 2);  // weight zero has multiplicity 2
    // reduced-word independence
    CHECK(chi == demazure_D_w(A, WeylWord{{2, 1, 2}}, CharacterElement::monomial(lm)));
}

TEST_CASE("D_w rejects non-reduced words") {
    auto A = a2();
    CHECK_THROWS_AS(
        demazure_D_w(A, WeylWord{{1, 1}}, CharacterElement::monomial(Weight{{1, 0}})),
        std::invalid_argument);
}

TEST_CASE("crystal Demazure operator on the highest vector") {
    CrystalContext ctx{a2(), alt12(), Weight{{1, 0}}};
    CrystalSum s;
    s.add(ZVector{}, 1);
    CrystalSum d1 = crystal_demazure_Di(ctx, 1, s);
    CHECK(d1.terms.size() == 2);
    ZVector x1;
    x1.set(1, 1);
    CHECK(d1.terms.count(x1));
    // negative pairing: <h_1, wt(x1)> = -1 gives the empty sum
    CrystalSum t;
    t.add(x1, 1);
    CHECK(crystal_demazure_Di(ctx, 1, t).terms.empty());
}

TEST_CASE("ewt intertwines the crystal and character Demazure operators") {
    for (auto A : {a2(), a1a1(), rank2(1, 2)}) {
        Weight lm{{2, 1}};
        CrystalContext ctx{A, alt12(), lm};
        CrystalSum s;
        s.add(ZVector{}, 1);
        CharacterElement chi = CharacterElement::monomial(lm);
        for (int i : {1, 2, 1, 2}) {
            s = crystal_demazure_Di(ctx, i, s);
            chi = demazure_D_i(A, i, chi);
            CHECK(ewt(ctx, s) == chi);
        }
    }
}

TEST_CASE("Demazure character formula: ch B_w(lambda) = D_w(e^lambda)") {
    auto A = a2();
    Weight lm{{1, 1}};
    for (auto& letters :
         std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}}) {
        WeylWord w{letters};
        CrystalContext ctx{A, IotaSequence::extend_word(w, {1, 2}), lm};
        auto B = demazure_crystal(ctx, w);
        CHECK(character_of(ctx, B) ==
              demazure_D_w(A, w, CharacterElement::monomial(lm)));
    }
}

TEST_CASE("Demazure chain through the crystal keeps unit coefficients") {
    CrystalContext ctx{a2(), alt12(), Weight{{1, 1}}};
    CrystalSum s;
    s.add(ZVector{}, 1);
    for (int i : {1, 2, 1}) {
        s = crystal_demazure_Di(ctx, i, s);
        for (auto& [b, coef] : s.terms) CHECK(coef == 1);
    }
    CHECK(s.terms.size() == demazure_crystal(ctx, WeylWord{{1, 2, 1}}).size());
}

TEST_CASE("to_string is stable") {
    CharacterElement chi(Weight{{1, 0}});
    chi.add({0, 0}, 1);
    chi.add({1, 0}, 1);
    CHECK(chi.to_string() == "1 * e[λ] + 1 * e[λ - 1*a1]");
}
