#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace crysdem {

using Int = long long;

/// Generalized Cartan matrix a[i][j] = <h_i, alpha_j>, indices 1..n.
class CartanMatrix {
public:
    explicit CartanMatrix(const std::vector<std::vector<Int>>& rows) {
        n_ = static_cast<int>(rows.size());
        if (n_ == 0)
            throw std::invalid_argument("Cartan matrix must be nonempty");
        a_.resize(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i) {
            if (static_cast<int>(rows[i].size()) != n_)
                throw std::invalid_argument("Cartan matrix must be square");
            for (int j = 0; j < n_; ++j)
                a_[static_cast<size_t>(i) * n_ + j] = rows[i][j];
        }
        for (int i = 1; i <= n_; ++i) {
            if (a(i, i) != 2)
                throw std::invalid_argument("Cartan matrix diagonal entry != 2 at index " +
                                            std::to_string(i));
            for (int j = 1; j <= n_; ++j) {
                if (i == j) continue;
                if (a(i, j) > 0)
                    throw std::invalid_argument("positive off-diagonal Cartan entry at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
                if ((a(i, j) == 0) != (a(j, i) == 0))
                    throw std::invalid_argument("zero pattern not symmetric at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    int rank() const noexcept { return n_; }

    Int a(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("Cartan index out of range");
        return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
    }

    /// True iff positive d_i exist with d_i*a[i][j] = d_j*a[j][i].
    /// Ratios propagate across the graph of nonzero off-diagonal entries;
    /// a cycle with inconsistent ratio means non-symmetrizable.
    bool is_symmetrizable() const {
        // d stored as a fraction num/den per node; -1 num marks unvisited.
        std::vector<Int> num(n_, -1), den(n_, 1);
        for (int start = 0; start < n_; ++start) {
            if (num[start] != -1) continue;
            num[start] = 1;
            den[start] = 1;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (int j = 0; j < n_; ++j) {
                    if (j == i || a(i + 1, j + 1) == 0) continue;
                    // d_j = d_i * a_ij / a_ji  (both entries negative, ratio > 0)
                    Int nn = num[i] * a(i + 1, j + 1);
                    Int dd = den[i] * a(j + 1, i + 1);
                    if (dd < 0) { nn = -nn; dd = -dd; }
                    Int g = std::gcd(nn < 0 ? -nn : nn, dd);
                    if (g > 0) { nn /= g; dd /= g; }
                    if (num[j] == -1) {
                        num[j] = nn;
                        den[j] = dd;
                        stack.push_back(j);
                    } else if (num[j] * dd != nn * den[j]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

private:
    int n_;
    std::vector<Int> a_;
};

/// lambda = sum m_i Lambda_i, so <h_i, lambda> = m_i.
struct Weight {
    std::vector<Int> m;

    bool dominant() const {
        for (Int v : m)
            if (v < 0) return false;
        return true;
    }
    bool operator==(const Weight& o) const { return m == o.m; }
};

/// A weight written lambda - sum_j c_j*alpha_j relative to a fixed base.
struct WeightOffset {
    Weight base;
    std::vector<Int> alpha;  // the c_j coefficients

    bool operator==(const WeightOffset& o) const {
        return base == o.base && alpha == o.alpha;
    }
};

inline WeightOffset weight_offset(const Weight& base) {
    return WeightOffset{base, std::vector<Int>(base.m.size(), 0)};
}

inline Int pairing(const CartanMatrix& A, int i, const WeightOffset& mu) {
    if (i < 1 || i > A.rank())
        throw std::out_of_range("pairing: index out of range");
    Int v = mu.base.m.at(static_cast<size_t>(i - 1));
    for (int j = 1; j <= A.rank(); ++j)
        v -= mu.alpha.at(static_cast<size_t>(j - 1)) * A.a(i, j);
    return v;
}

/// s_i(mu) = mu - <h_i, mu> alpha_i.
inline WeightOffset reflect(const CartanMatrix& A, int i, WeightOffset mu) {
    Int p = pairing(A, i, mu);
    mu.alpha.at(static_cast<size_t>(i - 1)) += p;
    return mu;
}

/// w = s_{i_L} ... s_{i_1}; letters stored in application order, i_1 first.
struct WeylWord {
    std::vector<int> letters;

    size_t length() const { return letters.size(); }
    bool operator==(const WeylWord& o) const { return letters == o.letters; }
};

/// Positive-root criterion, valid for all symmetrizable Kac-Moody types:
/// the word is reduced iff for each k the root
/// s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) is positive (s_{i_{k-1}} applied first).
inline bool is_reduced(const CartanMatrix& A, const WeylWord& w) {
    const int n = A.rank();
    for (int letter : w.letters)
        if (letter < 1 || letter > n)
            throw std::out_of_range("Weyl word letter out of range");
    const size_t L = w.letters.size();
    for (size_t k = 0; k < L; ++k) {
        // root in simple-root coordinates
        std::vector<Int> beta(n, 0);
        beta[static_cast<size_t>(w.letters[k] - 1)] = 1;
        for (size_t t = k; t-- > 0;) {
            int i = w.letters[t];
            Int p = 0;
            for (int j = 1; j <= n; ++j)
                p += A.a(i, j) * beta[static_cast<size_t>(j - 1)];
            beta[static_cast<size_t>(i - 1)] -= p;
        }
        for (Int c : beta)
            if (c < 0) return false;
    }
    return true;
}

}  // namespace crysdem
