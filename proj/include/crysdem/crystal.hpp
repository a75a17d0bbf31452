#pragma once

#include <deque>
#include <optional>
#include <set>
#include <stdexcept>

#include "crysdem/cartan.hpp"
#include "crysdem/iota.hpp"
#include "crysdem/zvector.hpp"

namespace crysdem {

/// Ambient data for the crystal structure on Z^infty: Cartan matrix, index
/// sequence, and either a highest weight (B(lambda) rules) or none (B(infty)).
struct CrystalContext {
    CartanMatrix A;
    IotaSequence iota;
    std::optional<Weight> lambda;  // nullopt selects the B(infty) rules

    bool infinity_mode() const { return !lambda.has_value(); }

    void require_lambda() const {
        if (infinity_mode())
            throw std::logic_error("operation requires a highest weight, not B(infty) mode");
    }
};

/// sigma_k(x) = x_k + sum_{j>k} <h_{i_k}, alpha_{i_j}> x_j.
inline Int sigma_k(const CrystalContext& ctx, const ZVector& x, Int k) {
    if (k < 1) throw std::out_of_range("sigma_k: k must be >= 1");
    int ik = ctx.iota.at(k);
    Int v = x.get(k);
    for (auto& [j, xj] : x.entries())
        if (j > k) v += ctx.A.a(ik, ctx.iota.at(j)) * xj;
    return v;
}

/// sigma_0^(i)(x) = -<h_i, lambda> + sum_{j>=1} <h_i, alpha_{i_j}> x_j.
inline Int sigma0_i(const CrystalContext& ctx, const ZVector& x, int i) {
    ctx.require_lambda();
    Int v = -ctx.lambda->m.at(static_cast<size_t>(i - 1));
    for (auto& [j, xj] : x.entries()) v += ctx.A.a(i, ctx.iota.at(j)) * xj;
    return v;
}

struct SigmaMax {
    Int value = 0;        // sigma^(i)(x) >= 0
    Int min_pos = 0;      // min M^(i)
    Int max_pos = 0;      // max M^(i) within the window; meaningful iff finite
    bool finite = false;  // M^(i) finite <=> value > 0
};

/// sigma^(i)(x) = max over {k : i_k = i} of sigma_k(x) together with the
/// argmax extremes. sigma_k = 0 for k beyond max support, so a window of one
/// full cycle past the support determines everything.
inline SigmaMax sigma_max(const CrystalContext& ctx, const ZVector& x, int i) {
    if (i < 1 || i > ctx.A.rank()) throw std::out_of_range("sigma_max: index out of range");
    Int window = std::max(x.max_support(), ctx.iota.prefix_size()) + ctx.iota.cycle_size();
    SigmaMax r;
    bool seen = false;
    for (Int k = 1; k <= window; ++k) {
        if (ctx.iota.at(k) != i) continue;
        Int s = sigma_k(ctx, x, k);
        if (!seen || s > r.value) {
            r.value = s;
            r.min_pos = k;
            r.max_pos = k;
            seen = true;
        } else if (s == r.value) {
            r.max_pos = k;
        }
    }
    if (!seen) throw std::logic_error("sigma_max: index never occurs in window");
    if (r.value < 0) throw std::logic_error("sigma_max: negative maximum; broken window");
    r.finite = r.value > 0;
    return r;
}

inline std::optional<ZVector> f_tilde(const CrystalContext& ctx, int i, const ZVector& x) {
    SigmaMax s = sigma_max(ctx, x, i);
    if (!ctx.infinity_mode()) {
        if (!(s.value > sigma0_i(ctx, x, i))) return std::nullopt;
    }
    ZVector y = x;
    y.add(s.min_pos, 1);
    return y;
}

inline std::optional<ZVector> e_tilde(const CrystalContext& ctx, int i, const ZVector& x) {
    SigmaMax s = sigma_max(ctx, x, i);
    if (s.value <= 0) return std::nullopt;
    if (!ctx.infinity_mode()) {
        if (!(s.value >= sigma0_i(ctx, x, i))) return std::nullopt;
    }
    if (!s.finite) throw std::logic_error("e_tilde: infinite argmax set");
    ZVector y = x;
    y.add(s.max_pos, -1);
    return y;
}

/// wt(x) = lambda - sum_j x_j alpha_{i_j}, folded into alpha-coefficients.
inline WeightOffset wt(const CrystalContext& ctx, const ZVector& x) {
    ctx.require_lambda();
    WeightOffset mu = weight_offset(*ctx.lambda);
    for (auto& [k, xk] : x.entries())
        mu.alpha.at(static_cast<size_t>(ctx.iota.at(k) - 1)) += xk;
    return mu;
}

inline Int epsilon_i(const CrystalContext& ctx, const ZVector& x, int i) {
    ctx.require_lambda();
    return std::max(sigma_max(ctx, x, i).value, sigma0_i(ctx, x, i));
}

inline Int phi_i(const CrystalContext& ctx, const ZVector& x, int i) {
    return pairing(ctx.A, i, wt(ctx, x)) + epsilon_i(ctx, x, i);
}

/// f_i^max: apply f_tilde exactly phi_i(x) times.
inline ZVector f_max(const CrystalContext& ctx, int i, const ZVector& x) {
    Int n = phi_i(ctx, x, i);
    if (n < 0) throw std::logic_error("f_max: negative phi_i");
    ZVector y = x;
    for (Int t = 0; t < n; ++t) {
        auto z = f_tilde(ctx, i, y);
        if (!z) throw std::logic_error("f_max: f_tilde vanished before phi_i steps");
        y = *z;
    }
    return y;
}

struct EnumBudget {
    Int max_elements = 1000000;
    Int max_depth = 1000000;  // cap on sum of coordinates
};

struct EnumResult {
    std::set<ZVector> elements;
    bool complete = true;
};

/// BFS closure of the zero vector under all f_tilde; the image of B(lambda).
inline EnumResult enumerate_image(const CrystalContext& ctx, const EnumBudget& budget = {}) {
    ctx.require_lambda();
    if (!ctx.lambda->dominant())
        throw std::invalid_argument("enumerate_image requires a dominant weight");
    EnumResult res;
    std::deque<ZVector> frontier;
    res.elements.insert(ZVector{});
    frontier.push_back(ZVector{});
    while (!frontier.empty()) {
        ZVector b = frontier.front();
        frontier.pop_front();
        for (int i = 1; i <= ctx.A.rank(); ++i) {
            auto y = f_tilde(ctx, i, b);
            if (!y) continue;
            if (y->coordinate_sum() > budget.max_depth) {
                res.complete = false;
                continue;
            }
            if (res.elements.size() >= static_cast<size_t>(budget.max_elements) &&
                !res.elements.count(*y)) {
                res.complete = false;
                continue;
            }
            if (res.elements.insert(*y).second) frontier.push_back(*y);
        }
    }
    return res;
}

/// B_w(lambda) by f-closure along the reduced word: B_1 = {0}, and for each
/// letter i the i-string forward closure of the previous set.
inline std::set<ZVector> demazure_crystal(const CrystalContext& ctx, const WeylWord& w) {
    ctx.require_lambda();
    if (!ctx.lambda->dominant())
        throw std::invalid_argument("demazure_crystal requires a dominant weight");
    if (!is_reduced(ctx.A, w))
        throw std::invalid_argument("demazure_crystal requires a reduced word");
    if (!ctx.iota.extends(w))
        throw std::invalid_argument("iota does not extend the given word");
    std::set<ZVector> B{ZVector{}};
    for (int i : w.letters) {
        std::set<ZVector> next = B;
        for (const ZVector& b : B) {
            ZVector y = b;
            while (auto z = f_tilde(ctx, i, y)) {
                y = *z;
                next.insert(y);
            }
        }
        B = std::move(next);
    }
    return B;
}

/// Elements of B_w(infty) with coordinate sum <= budget.
inline std::set<ZVector> demazure_b_infinity(const CrystalContext& ctx, const WeylWord& w,
                                             Int budget) {
    if (!ctx.infinity_mode())
        throw std::logic_error("demazure_b_infinity requires B(infty) mode");
    if (!is_reduced(ctx.A, w))
        throw std::invalid_argument("demazure_b_infinity requires a reduced word");
    if (!ctx.iota.extends(w))
        throw std::invalid_argument("iota does not extend the given word");
    std::set<ZVector> B{ZVector{}};
    for (int i : w.letters) {
        std::set<ZVector> next = B;
        for (const ZVector& b : B) {
            ZVector y = b;
            while (y.coordinate_sum() < budget) {
                auto z = f_tilde(ctx, i, y);
                if (!z) break;  // never in B(infty) mode, kept for safety
                y = *z;
                next.insert(y);
            }
        }
        B = std::move(next);
    }
    return B;
}

/// Membership in the image of B_w(infty): support truncated at length(w) and
/// e-reduction reaches the zero vector.
inline bool b_infinity_member(const CrystalContext& ctx, const WeylWord& w, const ZVector& x) {
    if (!ctx.infinity_mode())
        throw std::logic_error("b_infinity_member requires B(infty) mode");
    Int L = static_cast<Int>(w.length());
    if (x.max_support() > L) return false;
    if (!x.nonnegative()) return false;
    ZVector y = x;
    Int steps = y.coordinate_sum();
    for (Int t = 0; t < steps; ++t) {
        bool moved = false;
        for (int i = 1; i <= ctx.A.rank() && !moved; ++i) {
            if (auto z = e_tilde(ctx, i, y)) {
                y = *z;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return y.is_zero();
}

enum class StringStatus { FULL, HIGHEST_ONLY, EMPTY };

/// Classifies S intersected with the i-string through x (Demazure trichotomy).
inline StringStatus i_string_status(const CrystalContext& ctx, const std::set<ZVector>& S,
                                    int i, const ZVector& x) {
    ZVector head = x;
    while (auto z = e_tilde(ctx, i, head)) head = *z;
    std::vector<ZVector> str{head};
    {
        ZVector y = head;
        while (auto z = f_tilde(ctx, i, y)) {
            y = *z;
            str.push_back(y);
        }
    }
    size_t inside = 0;
    for (const ZVector& b : str) inside += S.count(b);
    if (inside == 0) return StringStatus::EMPTY;
    if (inside == str.size()) return StringStatus::FULL;
    if (inside == 1 && S.count(head)) return StringStatus::HIGHEST_ONLY;
    throw std::logic_error("i-string trichotomy violated");
}

}  // namespace crysdem
