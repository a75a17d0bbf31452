#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "crysdem/crystal.hpp"

namespace crysdem {

/// Element of the group algebra Z[P], anchored at a fixed lambda: a finite sum
/// of coeff * e^(lambda - sum c_j alpha_j) keyed by the alpha-offset vector c.
class CharacterElement {
public:
    explicit CharacterElement(Weight anchor) : anchor_(std::move(anchor)) {}

    static CharacterElement monomial(const Weight& anchor) {
        CharacterElement e(anchor);
        e.add(std::vector<Int>(anchor.m.size(), 0), 1);
        return e;
    }

    const Weight& anchor() const { return anchor_; }
    const std::map<std::vector<Int>, Int>& terms() const { return terms_; }

    void add(const std::vector<Int>& offset, Int coeff) {
        if (offset.size() != anchor_.m.size())
            throw std::invalid_argument("offset length does not match rank");
        auto it = terms_.find(offset);
        Int v = (it == terms_.end() ? 0 : it->second) + coeff;
        if (v == 0) {
            if (it != terms_.end()) terms_.erase(it);
        } else {
            terms_[offset] = v;
        }
    }

    bool operator==(const CharacterElement& o) const {
        return anchor_ == o.anchor_ && terms_ == o.terms_;
    }

    /// Terms sorted by alpha-offset, "coeff * e[λ - c1*a1 - ...]", zero
    /// offsets omitted.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (auto& [c, coef] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << coef << " * e[λ";
            for (size_t j = 0; j < c.size(); ++j)
                if (c[j] != 0) os << (c[j] > 0 ? " - " : " + ")
                                  << (c[j] > 0 ? c[j] : -c[j]) << "*a" << (j + 1);
            os << ']';
        }
        if (first) os << '0';
        return os.str();
    }

private:
    Weight anchor_;
    std::map<std::vector<Int>, Int> terms_;
};

/// D_i on a monomial e^mu with m = <h_i, mu>: the geometric-series evaluation
/// of e^mu (1 - e^{-(1+m)alpha_i}) / (1 - e^{-alpha_i}).
inline CharacterElement demazure_D_i(const CartanMatrix& A, int i, const CharacterElement& chi) {
    if (i < 1 || i > A.rank()) throw std::out_of_range("demazure_D_i: index out of range");
    CharacterElement out(chi.anchor());
    for (auto& [c, coef] : chi.terms()) {
        Int m = chi.anchor().m.at(static_cast<size_t>(i - 1));
        for (int j = 1; j <= A.rank(); ++j) m -= c[static_cast<size_t>(j - 1)] * A.a(i, j);
        if (m >= 0) {
            for (Int k = 0; k <= m; ++k) {
                auto d = c;
                d[static_cast<size_t>(i - 1)] += k;
                out.add(d, coef);
            }
        } else if (m <= -2) {
            for (Int k = 1; k < -m; ++k) {
                auto d = c;
                d[static_cast<size_t>(i - 1)] -= k;
                out.add(d, -coef);
            }
        }
        // m == -1 contributes nothing
    }
    return out;
}

inline CharacterElement demazure_D_w(const CartanMatrix& A, const WeylWord& w,
                                     CharacterElement chi) {
    if (!is_reduced(A, w))
        throw std::invalid_argument("demazure_D_w requires a reduced word");
    for (int i : w.letters) chi = demazure_D_i(A, i, chi);
    return chi;
}

/// Formal Z-linear combination of crystal points.
struct CrystalSum {
    std::map<ZVector, Int> terms;

    void add(const ZVector& b, Int coeff) {
        auto it = terms.find(b);
        Int v = (it == terms.end() ? 0 : it->second) + coeff;
        if (v == 0) {
            if (it != terms.end()) terms.erase(it);
        } else {
            terms[b] = v;
        }
    }
    bool operator==(const CrystalSum& o) const { return terms == o.terms; }
};

/// The crystal-level Demazure operator: sum of f^k b up to <h_i, wt(b)> when
/// that pairing is >= 0, minus a short e-sum when it is negative.
inline CrystalSum crystal_demazure_Di(const CrystalContext& ctx, int i, const CrystalSum& s) {
    CrystalSum out;
    for (auto& [b, coef] : s.terms) {
        Int m = pairing(ctx.A, i, wt(ctx, b));
        if (m >= 0) {
            ZVector y = b;
            out.add(y, coef);
            for (Int k = 1; k <= m; ++k) {
                auto z = f_tilde(ctx, i, y);
                if (!z) throw std::logic_error("crystal_demazure_Di: f_tilde vanished in range");
                y = *z;
                out.add(y, coef);
            }
        } else {
            ZVector y = b;
            for (Int k = 1; k < -m; ++k) {
                auto z = e_tilde(ctx, i, y);
                if (!z) throw std::logic_error("crystal_demazure_Di: e_tilde vanished in range");
                y = *z;
                out.add(y, -coef);
            }
        }
    }
    return out;
}

/// ewt: b -> e^{wt(b)}, extended additively.
inline CharacterElement ewt(const CrystalContext& ctx, const CrystalSum& s) {
    ctx.require_lambda();
    CharacterElement out(*ctx.lambda);
    for (auto& [b, coef] : s.terms) out.add(wt(ctx, b).alpha, coef);
    return out;
}

/// ch(S) = sum of e^{wt(b)} over the set.
inline CharacterElement character_of(const CrystalContext& ctx, const std::set<ZVector>& S) {
    ctx.require_lambda();
    CharacterElement out(*ctx.lambda);
    for (const ZVector& b : S) out.add(wt(ctx, b).alpha, 1);
    return out;
}

}  // namespace crysdem
