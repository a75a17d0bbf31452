#pragma once

#include <optional>
#include <vector>

#include "crysdem/cartan.hpp"
#include "crysdem/linear_form.hpp"
#include "crysdem/zvector.hpp"

namespace crysdem {

/// Rank-2 data: <h_1,alpha_2> = -c1, <h_2,alpha_1> = -c2,
/// lambda = m1*Lambda_1 + m2*Lambda_2.
struct Rank2Params {
    Int c1 = 0, c2 = 0;
    Int m1 = 0, m2 = 0;

    Rank2Params(Int c1_, Int c2_, Int m1_ = 0, Int m2_ = 0)
        : c1(c1_), c2(c2_), m1(m1_), m2(m2_) {
        bool ok = (c1 == 0 && c2 == 0) || (c1 > 0 && c2 > 0);
        if (!ok || m1 < 0 || m2 < 0)
            throw std::invalid_argument("invalid rank-2 parameters");
    }

    CartanMatrix cartan() const { return CartanMatrix({{2, -c1}, {-c2, 2}}); }
    Weight lambda() const { return Weight{{m1, m2}}; }
    Int X() const { return c1 * c2 - 2; }
};

/// P_0 = 1, P_1 = X, P_k = X*P_{k-1} - P_{k-2}.
inline Int chebyshev_P(Int k, Int X) {
    if (k < 0) throw std::out_of_range("chebyshev_P: k must be >= 0");
    Int p0 = 1, p1 = X;
    if (k == 0) return p0;
    for (Int t = 2; t <= k; ++t) {
        Int p2 = X * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

/// a_0 = 0, a_1 = 1, a_{2k} = c1*P_{k-1}(X), a_{2k+1} = P_k(X) + P_{k-1}(X).
inline Int a_l(Int c1, Int c2, Int l) {
    if (l < 0) throw std::out_of_range("a_l: l must be >= 0");
    if (l == 0) return 0;
    if (l == 1) return 1;
    Int X = c1 * c2 - 2;
    if (l % 2 == 0) return c1 * chebyshev_P(l / 2 - 1, X);
    return chebyshev_P(l / 2, X) + chebyshev_P(l / 2 - 1, X);
}

inline Int a_l(const Rank2Params& p, Int l) { return a_l(p.c1, p.c2, l); }
inline Int a_prime_l(const Rank2Params& p, Int l) { return a_l(p.c2, p.c1, l); }

/// Minimal l with a_{l+1} < 0; nullopt means +infinity (c1*c2 >= 4).
inline std::optional<Int> l_max(const Rank2Params& p) {
    Int bound = 2 * (p.c1 * p.c2 + 4);
    for (Int l = 0; l <= bound; ++l)
        if (a_l(p, l + 1) < 0) return l;
    return std::nullopt;
}

/// w_L = s_1(s_2 s_1)^l for L = 2l+1, (s_2 s_1)^l for L = 2l: alternating
/// letters (1, 2, 1, 2, ...) in application order.
inline WeylWord w_L(const Rank2Params& p, Int L) {
    if (L < 0) throw std::out_of_range("w_L: L must be >= 0");
    auto lm = l_max(p);
    if (lm && L > *lm) throw std::invalid_argument("w_L: L exceeds l_max");
    WeylWord w;
    for (Int k = 1; k <= L; ++k) w.letters.push_back(k % 2 == 1 ? 1 : 2);
    return w;
}

/// d_k = m1*a_k(c2,c1) + m2*a_{k-1}(c1,c2).
inline Int d_k(const Rank2Params& p, Int k) {
    if (k < 1) throw std::out_of_range("d_k: k must be >= 1");
    return p.m1 * a_prime_l(p, k) + p.m2 * a_l(p, k - 1);
}

/// x_{w_L}: coordinates d_1..d_L, zero beyond.
inline ZVector rank2_extremal(const Rank2Params& p, Int L) {
    auto lm = l_max(p);
    if (lm && L > *lm) throw std::invalid_argument("rank2_extremal: L exceeds l_max");
    ZVector x;
    for (Int k = 1; k <= L; ++k) x.set(k, d_k(p, k));
    return x;
}

/// The explicit inequality system for Im(Psi): x_k >= 0, m1 >= x_1,
/// a_l x_l - a_{l-1} x_{l+1} >= 0, m2 + a'_{l+1} x_l - a'_l x_{l+1} >= 0 for
/// 1 <= l < l_max, and x_k = 0 past l_max. For infinite l_max the list is
/// truncated at the supplied bound.
inline std::vector<LinearForm> rank2_polytope(const Rank2Params& p, Int bound = -1) {
    auto lm = l_max(p);
    if (!lm && bound < 0)
        throw std::invalid_argument("rank2_polytope: infinite l_max needs a bound");
    Int top = lm ? (bound < 0 ? *lm : std::max(*lm, bound)) : bound;
    Int cut = lm ? *lm : bound;
    std::vector<LinearForm> out;
    for (Int k = 1; k <= top; ++k) out.push_back(variable_form(k));
    {
        LinearForm f;  // m1 - x_1 >= 0
        f.constant = Rational(p.m1);
        f.add_coeff(1, Rational(-1));
        out.push_back(f);
    }
    for (Int l = 1; l < cut; ++l) {
        LinearForm f;  // a_l x_l - a_{l-1} x_{l+1} >= 0
        f.add_coeff(l, Rational(a_l(p, l)));
        f.add_coeff(l + 1, Rational(-a_l(p, l - 1)));
        out.push_back(f);
        LinearForm g;  // m2 + a'_{l+1} x_l - a'_l x_{l+1} >= 0
        g.constant = Rational(p.m2);
        g.add_coeff(l, Rational(a_prime_l(p, l + 1)));
        g.add_coeff(l + 1, Rational(-a_prime_l(p, l)));
        out.push_back(g);
    }
    if (lm) {
        for (Int k = *lm + 1; k <= std::max(top, *lm + 1); ++k) {
            LinearForm f;  // forces x_k = 0 together with x_k >= 0
            f.add_coeff(k, Rational(-1));
            out.push_back(f);
            if (k > top) out.push_back(variable_form(k));
        }
    }
    return out;
}

}  // namespace crysdem
