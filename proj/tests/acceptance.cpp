// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is exact integer/rational arithmetic.
#include <iostream>

#include "crysdem/character.hpp"
#include "crysdem/extremal.hpp"
#include "crysdem/graph.hpp"
#include "crysdem/polyhedral.hpp"
#include "crysdem/rank2.hpp"
#include "test_util.hpp"

using namespace crysdem;
using namespace crysdem::testutil;

namespace {

int failures = 0;

void report(int n, const char* title, bool ok) {
    std::cout << "criterion " << n << " (" << title << "): " << (ok ? "PASS" : "FAIL") << '\n';
    if (!ok) ++failures;
}

IotaSequence remark_iota() { return IotaSequence({1, 2, 3, 2, 1, 2}, {1, 2, 3}); }

std::vector<Int> bfs_box(const std::set<ZVector>& B, Int L) {
    std::vector<Int> box(static_cast<size_t>(L), 0);
    for (const ZVector& b : B)
        for (Int k = 1; k <= L; ++k)
            box[static_cast<size_t>(k - 1)] = std::max(box[static_cast<size_t>(k - 1)], b.get(k) + 1);
    return box;
}

// 1. A_3 remark: the four closed-form extremal vectors at every instantiation.
bool criterion1() {
    CartanMatrix A = a3();
    IotaSequence io = remark_iota();
    const std::vector<std::vector<int>> words = {
        {1, 2, 3}, {1, 2, 3, 2}, {1, 2, 3, 2, 1}, {1, 2, 3, 2, 1, 2}};
    for (Int l1 = 0; l1 <= 2; ++l1)
        for (Int l2 = 0; l2 <= 2; ++l2)
            for (Int l3 = 0; l3 <= 2; ++l3) {
                Weight lm{{l1, l2, l3}};
                std::vector<Int> full = {l1, l1 + l2, l1 + l2 + l3, l3, l2 + l3, l2};
                for (size_t wi = 0; wi < words.size(); ++wi) {
                    ZVector x = solve_extremal(A, io, lm, WeylWord{words[wi]});
                    ZVector expect;
                    for (size_t k = 0; k < 3 + wi; ++k)
                        expect.set(static_cast<Int>(k + 1), full[k]);
                    if (x != expect) return false;
                }
            }
    return true;
}

// 2. Rank-2 closed form = triangular solve = f-max oracle.
bool criterion2() {
    const std::vector<std::pair<Int, Int>> cs = {
        {0, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 3}};
    for (auto [c1, c2] : cs)
        for (Int m1 = 0; m1 <= 3; ++m1)
            for (Int m2 = 0; m2 <= 3; ++m2) {
                Rank2Params p(c1, c2, m1, m2);
                auto lm = l_max(p);
                Int top = lm ? std::min<Int>(*lm, 8) : 8;
                for (Int L = 0; L <= top; ++L) {
                    WeylWord w = w_L(p, L);
                    ZVector closed = rank2_extremal(p, L);
                    if (closed != solve_extremal(p.cartan(), alt12(), p.lambda(), w)) return false;
                    if (closed != extremal_oracle(p.cartan(), alt12(), p.lambda(), w)) return false;
                }
            }
    return true;
}

// 3. Affine c1 = c2 = 2: entries k*m1 + (k-1)*m2.
bool criterion3() {
    for (Int m1 = 0; m1 <= 3; ++m1)
        for (Int m2 = 0; m2 <= 3; ++m2) {
            Rank2Params p(2, 2, m1, m2);
            for (Int L = 0; L <= 8; ++L) {
                ZVector x = rank2_extremal(p, L);
                for (Int k = 1; k <= L; ++k)
                    if (x.get(k) != k * m1 + (k - 1) * m2) return false;
                if (x != solve_extremal(p.cartan(), alt12(), p.lambda(), w_L(p, L))) return false;
            }
        }
    return true;
}

std::vector<CartanMatrix> character_types() {
    return {a2(), a1a1(), rank2(1, 2), rank2(2, 1), rank2(1, 3), rank2(3, 1)};
}

// 4. Demazure character formula plus the crystal-level operator chain.
bool criterion4() {
    for (const CartanMatrix& A : character_types())
        for (Int m1 = 0; m1 <= 2; ++m1)
            for (Int m2 = 0; m2 <= 2; ++m2) {
                Weight lm{{m1, m2}};
                for (Int len = 0; len <= 6; ++len)
                    for (const WeylWord& w : all_words(2, len)) {
                        if (!is_reduced(A, w)) continue;
                        IotaSequence io = IotaSequence::extend_word(w, {1, 2});
                        CrystalContext ctx{A, io, lm};
                        auto B = demazure_crystal(ctx, w);
                        CharacterElement lhs = character_of(ctx, B);
                        CharacterElement rhs =
                            demazure_D_w(A, w, CharacterElement::monomial(lm));
                        if (!(lhs == rhs)) return false;
                        CrystalSum s;
                        s.add(ZVector{}, 1);
                        for (int i : w.letters) s = crystal_demazure_Di(ctx, i, s);
                        if (s.terms.size() != B.size()) return false;
                        for (auto& [b, coef] : s.terms)
                            if (coef != 1 || !B.count(b)) return false;
                    }
            }
    return true;
}

// 5. Truncation: B_w(lambda) = Im(Psi) restricted to the first length(w)
// coordinates.
bool criterion5() {
    for (const CartanMatrix& A : {a2(), a1a1(), rank2(1, 2), rank2(2, 1)})
        for (Int m1 = 0; m1 <= 2; ++m1)
            for (Int m2 = 0; m2 <= 2; ++m2) {
                Weight lm{{m1, m2}};
                for (Int len = 0; len <= 6; ++len)
                    for (const WeylWord& w : all_words(2, len)) {
                        if (!is_reduced(A, w)) continue;
                        IotaSequence io = IotaSequence::extend_word(w, {1, 2});
                        CrystalContext ctx{A, io, lm};
                        EnumResult full = enumerate_image(ctx);
                        if (!full.complete) continue;
                        Int L = static_cast<Int>(w.length());
                        std::set<ZVector> truncated;
                        for (const ZVector& b : full.elements)
                            if (b.max_support() <= L) truncated.insert(b);
                        if (truncated != demazure_crystal(ctx, w)) return false;
                    }
            }
    return true;
}

// 6. Explicit rank-2 polytope = image of the embedding.
bool criterion6() {
    const std::vector<std::pair<Int, Int>> cs = {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
    for (auto [c1, c2] : cs)
        for (Int m1 = 0; m1 <= 3; ++m1)
            for (Int m2 = 0; m2 <= 3; ++m2) {
                Rank2Params p(c1, c2, m1, m2);
                CrystalContext ctx{p.cartan(), alt12(), p.lambda()};
                EnumResult full = enumerate_image(ctx);
                if (!full.complete) return false;
                Int L = *l_max(p);
                auto forms = rank2_polytope(p);
                std::set<LinearForm> fs(forms.begin(), forms.end());
                auto pts = enumerate_truncated(fs, L, bfs_box(full.elements, L));
                if (pts != full.elements) return false;
            }
    return true;
}

// 7. Ample polytope description on A_2, lambda = Lambda_1 + Lambda_2.
bool criterion7() {
    Weight lm{{1, 1}};
    XiSet xi = generate_Xi_lambda(alt12(), a2(), lm, XiOptions{10, 5000});
    if (!xi.closed || !check_ample(xi)) return false;
    CrystalContext ctx{a2(), alt12(), lm};
    auto B = demazure_crystal(ctx, WeylWord{{1, 2, 1}});
    if (B.size() != 8) return false;
    auto pts = enumerate_truncated(xi.forms, 3, bfs_box(B, 3));
    return pts == B;
}

// 8. Chebyshev a_l identities at 20 parameter pairs and the l_max table.
bool criterion8() {
    int pairs = 0;
    for (Int c1 = 1; c1 <= 5; ++c1)
        for (Int c2 = 1; c2 <= 4; ++c2) {
            ++pairs;
            Int q = c1 * c2;
            if (a_l(c1, c2, 2) != c1) return false;
            if (a_l(c1, c2, 3) != q - 1) return false;
            if (a_l(c1, c2, 4) != c1 * (q - 2)) return false;
            if (a_l(c1, c2, 5) != q * q - 3 * q + 1) return false;
            if (a_l(c1, c2, 6) != c1 * (q - 1) * (q - 3)) return false;
        }
    if (pairs != 20) return false;
    if (l_max(Rank2Params(0, 0)) != 2) return false;
    if (l_max(Rank2Params(1, 1)) != 3) return false;
    if (l_max(Rank2Params(1, 2)) != 4 || l_max(Rank2Params(2, 1)) != 4) return false;
    if (l_max(Rank2Params(1, 3)) != 6 || l_max(Rank2Params(3, 1)) != 6) return false;
    if (l_max(Rank2Params(2, 2)) || l_max(Rank2Params(2, 3))) return false;
    return true;
}

// 9. Demazure-crystal structure properties, plus the crystal axioms on
// a bulk enumeration (>= 10^4 points).
bool criterion9() {
    // (i) e-closedness and (iii) i-string trichotomy on every B_w from a
    // representative family.
    for (const CartanMatrix& A : {a2(), a1a1(), rank2(1, 3)}) {
        Weight lm{{2, 1}};
        for (Int len = 0; len <= 5; ++len)
            for (const WeylWord& w : all_words(2, len)) {
                if (!is_reduced(A, w)) continue;
                IotaSequence io = IotaSequence::extend_word(w, {1, 2});
                CrystalContext ctx{A, io, lm};
                auto B = demazure_crystal(ctx, w);
                for (const ZVector& b : B)
                    for (int i = 1; i <= 2; ++i) {
                        if (auto y = e_tilde(ctx, i, b))
                            if (!B.count(*y)) return false;
                        i_string_status(ctx, B, i, b);  // throws on violation
                    }
            }
    }
    // Crystal axioms on a large crystal: A_3, lambda = (4,4,4), 15625 points.
    CrystalContext ctx{a3(), remark_iota(), Weight{{4, 4, 4}}};
    EnumResult full = enumerate_image(ctx);
    if (!full.complete || full.elements.size() < 10000) return false;
    for (const ZVector& b : full.elements) {
        for (int i = 1; i <= 3; ++i) {
            Int eps = epsilon_i(ctx, b, i);
            Int phi = phi_i(ctx, b, i);
            if (phi - eps != pairing(ctx.A, i, wt(ctx, b))) return false;
            auto y = f_tilde(ctx, i, b);
            if ((phi > 0) != y.has_value()) return false;
            auto z = e_tilde(ctx, i, b);
            if ((eps > 0) != z.has_value()) return false;
            if (y) {
                auto back = e_tilde(ctx, i, *y);
                if (!back || *back != b) return false;
                WeightOffset mu = wt(ctx, b);
                mu.alpha[static_cast<size_t>(i - 1)] += 1;
                if (!(wt(ctx, *y) == mu)) return false;
                if (epsilon_i(ctx, *y, i) != eps + 1) return false;
                if (phi_i(ctx, *y, i) != phi - 1) return false;
            }
            if (z) {
                auto back = f_tilde(ctx, i, *z);
                if (!back || *back != b) return false;
            }
        }
    }
    return true;
}

// 10. Semisimple support bound: A_2 with iota starting (1,2,1) keeps full B(lambda) inside
// the first three coordinates.
bool criterion10() {
    for (Int m1 = 0; m1 <= 2; ++m1)
        for (Int m2 = 0; m2 <= 2; ++m2) {
            CrystalContext ctx{a2(), alt12(), Weight{{m1, m2}}};
            EnumResult full = enumerate_image(ctx);
            if (!full.complete) return false;
            for (const ZVector& b : full.elements)
                if (b.max_support() > 3) return false;
        }
    return true;
}

}  // namespace

int main() {
    try {
        report(1, "A_3 extremal vectors, all instantiations", criterion1());
        report(2, "rank-2 closed form vs solver vs oracle", criterion2());
        report(3, "affine A_1^(1) extremal entries", criterion3());
        report(4, "Demazure character formula", criterion4());
        report(5, "truncation equality", criterion5());
        report(6, "rank-2 polytope equality", criterion6());
        report(7, "A_2 ample polytope, 8 points", criterion7());
        report(8, "Chebyshev identities and l_max table", criterion8());
        report(9, "crystal property suite", criterion9());
        report(10, "semisimple support bound", criterion10());
    } catch (const std::exception& e) {
        std::cout << "unexpected exception: " << e.what() << '\n';
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
