#pragma once

#include <deque>
#include <functional>
#include <set>
#include <vector>

#include "crysdem/cartan.hpp"
#include "crysdem/iota.hpp"
#include "crysdem/linear_form.hpp"

namespace crysdem {

/// beta_k(x) = x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+};
/// beta_0 = 0.
inline LinearForm beta_k(const IotaSequence& iota, const CartanMatrix& A, Int k) {
    LinearForm f;
    if (k == 0) return f;
    if (k < 0) throw std::out_of_range("beta_k: k must be >= 0");
    int ik = iota.at(k);
    Int kp = iota.k_plus(k);
    f.add_coeff(k, Rational(1));
    for (Int j = k + 1; j < kp; ++j) f.add_coeff(j, Rational(A.a(ik, iota.at(j))));
    f.add_coeff(kp, Rational(1));
    return f;
}

/// beta_k^(-): uses the previous occurrence of i_k, or the lambda constant
/// when k is the first occurrence.
inline LinearForm beta_k_minus(const IotaSequence& iota, const CartanMatrix& A,
                               const Weight& lambda, Int k) {
    if (k < 1) throw std::out_of_range("beta_k_minus: k must be >= 1");
    LinearForm f;
    int ik = iota.at(k);
    Int km = iota.k_minus(k);
    if (km > 0) {
        f.add_coeff(km, Rational(1));
        for (Int j = km + 1; j < k; ++j) f.add_coeff(j, Rational(A.a(ik, iota.at(j))));
        f.add_coeff(k, Rational(1));
    } else {
        f.constant = Rational(-lambda.m.at(static_cast<size_t>(ik - 1)));
        for (Int j = 1; j < k; ++j) f.add_coeff(j, Rational(A.a(ik, iota.at(j))));
        f.add_coeff(k, Rational(1));
    }
    return f;
}

enum class BetaSign { PLUS, MINUS };

inline LinearForm beta_k_pm(const IotaSequence& iota, const CartanMatrix& A,
                            const Weight& lambda, Int k, BetaSign sign) {
    return sign == BetaSign::PLUS ? beta_k(iota, A, k) : beta_k_minus(iota, A, lambda, k);
}

/// lambda^(i)(x) = -beta^(-)_{iota^(i)}(x).
inline LinearForm lambda_form(const IotaSequence& iota, const CartanMatrix& A,
                              const Weight& lambda, int i) {
    LinearForm f = beta_k_minus(iota, A, lambda, iota.iota_first(i));
    f *= Rational(-1);
    return f;
}

/// S_k(phi) = phi - phi_k*beta_k if phi_k > 0, phi - phi_k*beta_{k^(-)} else.
inline LinearForm S_k(const IotaSequence& iota, const CartanMatrix& A, Int k,
                      const LinearForm& phi) {
    Rational ck = phi.coeff(k);
    if (ck == Rational(0)) return phi;
    if (ck > Rational(0)) return phi - ck * beta_k(iota, A, k);
    return phi - ck * beta_k(iota, A, iota.k_minus(k));
}

/// The lambda-twisted operator: the nonpositive branch uses beta_k^(-),
/// constant term included.
inline LinearForm S_hat_k(const IotaSequence& iota, const CartanMatrix& A,
                          const Weight& lambda, Int k, const LinearForm& phi) {
    Rational ck = phi.coeff(k);
    if (ck == Rational(0)) return phi;
    if (ck > Rational(0)) return phi - ck * beta_k(iota, A, k);
    return phi - ck * beta_k_minus(iota, A, lambda, k);
}

struct XiOptions {
    Int var_cutoff = 12;
    Int count_cutoff = 20000;
};

struct XiSet {
    std::set<LinearForm> forms;
    bool closed = false;
};

namespace detail {

/// Fixpoint closure of the seeds under step(k, phi) for k <= var_cutoff.
/// Forms escaping the support window certify closure if they are pure cycle
/// shifts of members (zero constant, support inside the periodic region);
/// any other escape, or hitting count_cutoff, clears the closed flag.
inline XiSet close_forms(const IotaSequence& iota, std::vector<LinearForm> seeds,
                         const XiOptions& opt,
                         const std::function<LinearForm(Int, const LinearForm&)>& step) {
    XiSet xi;
    xi.closed = true;
    std::deque<LinearForm> work;
    std::vector<LinearForm> escapes;
    for (auto& s : seeds)
        if (xi.forms.insert(s).second) work.push_back(s);
    while (!work.empty()) {
        if (static_cast<Int>(xi.forms.size()) > opt.count_cutoff) {
            xi.closed = false;
            return xi;
        }
        LinearForm phi = work.front();
        work.pop_front();
        for (Int k = 1; k <= opt.var_cutoff; ++k) {
            if (phi.coeff(k) == Rational(0)) continue;
            LinearForm psi = step(k, phi);
            if (psi == phi) continue;
            if (psi.max_support() <= opt.var_cutoff) {
                if (xi.forms.insert(psi).second) work.push_back(psi);
            } else {
                escapes.push_back(psi);
            }
        }
    }
    Int C = iota.cycle_size();
    for (const LinearForm& psi : escapes) {
        bool shiftable = psi.constant == Rational(0) &&
                         psi.min_support() > iota.prefix_size() + C &&
                         xi.forms.count(psi.shifted_down(C)) > 0;
        if (!shiftable) xi.closed = false;
    }
    return xi;
}

}  // namespace detail

/// Xi_iota: closure of {x_j} under S_k (the B(infty) system).
inline XiSet generate_Xi(const IotaSequence& iota, const CartanMatrix& A,
                         const XiOptions& opt = {}) {
    std::vector<LinearForm> seeds;
    for (Int j = 1; j <= opt.var_cutoff; ++j) seeds.push_back(variable_form(j));
    return detail::close_forms(iota, std::move(seeds), opt,
                               [&](Int k, const LinearForm& phi) { return S_k(iota, A, k, phi); });
}

/// Xi_iota[lambda]: closure of {x_j} and {lambda^(i)} under S_hat_k.
inline XiSet generate_Xi_lambda(const IotaSequence& iota, const CartanMatrix& A,
                                const Weight& lambda, const XiOptions& opt = {}) {
    std::vector<LinearForm> seeds;
    for (Int j = 1; j <= opt.var_cutoff; ++j) seeds.push_back(variable_form(j));
    for (int i = 1; i <= A.rank(); ++i) seeds.push_back(lambda_form(iota, A, lambda, i));
    return detail::close_forms(iota, std::move(seeds), opt, [&](Int k, const LinearForm& phi) {
        return S_hat_k(iota, A, lambda, k, phi);
    });
}

/// Positivity assumption: phi_k >= 0 at every first-occurrence position.
inline bool check_positivity(const XiSet& xi, const IotaSequence& iota, const CartanMatrix& A) {
    for (int i = 1; i <= A.rank(); ++i) {
        Int p = iota.iota_first(i);
        for (const LinearForm& f : xi.forms)
            if (f.coeff(p) < Rational(0)) return false;
    }
    return true;
}

/// Ample iff the zero vector satisfies every generated inequality, i.e. every
/// constant term is >= 0. Only a sound verdict when xi.closed.
inline bool check_ample(const XiSet& xi) {
    for (const LinearForm& f : xi.forms)
        if (f.constant < Rational(0)) return false;
    return true;
}

inline bool check_ample(const IotaSequence& iota, const CartanMatrix& A, const Weight& lambda,
                        const XiOptions& opt = {}) {
    return check_ample(generate_Xi_lambda(iota, A, lambda, opt));
}

inline bool membership(const std::set<LinearForm>& forms, const ZVector& x) {
    for (const LinearForm& f : forms)
        if (f.eval(x) < Rational(0)) return false;
    return true;
}

/// Lattice points of {0..box_k}^L x {0}^(>L) satisfying every form. Depth-first
/// from x_L down to x_1; a form prunes as soon as all its undetermined
/// coordinates have coefficient zero.
inline std::set<ZVector> enumerate_truncated(const std::set<LinearForm>& forms, Int L,
                                             const std::vector<Int>& box) {
    if (static_cast<Int>(box.size()) < L)
        throw std::invalid_argument("enumerate_truncated: box shorter than L");
    std::set<ZVector> out;
    // Forms with no support below each depth become fully determined there.
    // Coordinates above L are fixed to zero from the start.
    std::vector<const LinearForm*> active;
    for (const LinearForm& f : forms) active.push_back(&f);
    std::vector<Int> x(static_cast<size_t>(L), 0);
    auto partial_eval = [&](const LinearForm& f) {
        Rational v = f.constant;
        for (auto& [k, c] : f.coeffs)
            if (k <= L) v += c * Rational(x[static_cast<size_t>(k - 1)]);
        return v;
    };
    std::function<bool(Int)> dfs = [&](Int depth) -> bool {
        // depth = next coordinate to assign, from L downward; 0 means done.
        // Undetermined indices are exactly [1, depth]; indices > L are zero.
        for (const LinearForm* f : active) {
            if ((f->coeffs.empty() || f->min_support() > depth) &&
                partial_eval(*f) < Rational(0))
                return false;
        }
        if (depth == 0) {
            ZVector p;
            for (Int k = 1; k <= L; ++k) p.set(k, x[static_cast<size_t>(k - 1)]);
            out.insert(p);
            return true;
        }
        for (Int v = 0; v <= box[static_cast<size_t>(depth - 1)]; ++v) {
            x[static_cast<size_t>(depth - 1)] = v;
            dfs(depth - 1);
        }
        x[static_cast<size_t>(depth - 1)] = 0;
        return true;
    };
    dfs(L);
    return out;
}

}  // namespace crysdem
