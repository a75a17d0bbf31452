#pragma once

#include "crysdem/crystal.hpp"
#include "crysdem/polyhedral.hpp"

namespace crysdem {

/// w*lambda via iterated simple reflections, as an alpha-offset.
inline WeightOffset extremal_weight(const CartanMatrix& A, const Weight& lambda,
                                    const WeylWord& w) {
    WeightOffset mu = weight_offset(lambda);
    for (int i : w.letters) mu = reflect(A, i, mu);
    return mu;
}

/// The extremal vector x_w as the unique solution of x_k = 0 for k > L and
/// beta_k^(-)(x) = 0 for k <= L. The system is triangular with unit diagonal,
/// so forward substitution in k suffices and all entries are integers.
inline ZVector solve_extremal(const CartanMatrix& A, const IotaSequence& iota,
                              const Weight& lambda, const WeylWord& w) {
    if (!lambda.dominant())
        throw std::invalid_argument("solve_extremal requires a dominant weight");
    if (!is_reduced(A, w))
        throw std::invalid_argument("solve_extremal requires a reduced word");
    if (!iota.extends(w))
        throw std::invalid_argument("iota does not extend the given word");
    const Int L = static_cast<Int>(w.length());
    ZVector x;
    for (Int k = 1; k <= L; ++k) {
        LinearForm f = beta_k_minus(iota, A, lambda, k);
        if (f.coeff(k) != Rational(1))
            throw std::logic_error("solve_extremal: non-unit diagonal");
        Rational v = f.constant;
        for (auto& [j, c] : f.coeffs)
            if (j < k) v += c * Rational(x.get(j));
        Rational xk = -v;
        if (xk.denominator() != 1)
            throw std::logic_error("solve_extremal: non-integral entry");
        if (xk < Rational(0))
            throw std::logic_error("solve_extremal: negative entry; broken invariant");
        x.set(k, xk.numerator());
    }
    // defining system re-evaluated as a post-check
    for (Int k = 1; k <= L; ++k)
        if (beta_k_minus(iota, A, lambda, k).eval(x) != Rational(0))
            throw std::logic_error("solve_extremal: residual in defining system");
    CrystalContext ctx{A, iota, lambda};
    if (!(wt(ctx, x) == extremal_weight(A, lambda, w)))
        throw std::logic_error("solve_extremal: weight mismatch");
    return x;
}

/// Independent oracle: fold f_max along the word from the zero vector.
inline ZVector extremal_oracle(const CartanMatrix& A, const IotaSequence& iota,
                               const Weight& lambda, const WeylWord& w) {
    if (!lambda.dominant())
        throw std::invalid_argument("extremal_oracle requires a dominant weight");
    if (!is_reduced(A, w))
        throw std::invalid_argument("extremal_oracle requires a reduced word");
    if (!iota.extends(w))
        throw std::invalid_argument("iota does not extend the given word");
    CrystalContext ctx{A, iota, lambda};
    ZVector x;
    for (int i : w.letters) x = f_max(ctx, i, x);
    return x;
}

}  // namespace crysdem
