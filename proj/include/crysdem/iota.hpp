#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "crysdem/cartan.hpp"

namespace crysdem {

/// Eventually periodic index sequence iota = (i_k)_{k>=1}: a finite prefix
/// followed by a repeating cycle.
class IotaSequence {
public:
    IotaSequence(std::vector<int> prefix, std::vector<int> cycle)
        : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
        if (cycle_.empty())
            throw std::invalid_argument("iota cycle must be nonempty");
    }

    /// Build iota whose first letters are the word's, adjusting the cycle
    /// rotation if the prefix->cycle seam would repeat an index.
    static IotaSequence extend_word(const WeylWord& word, const std::vector<int>& cycle) {
        if (cycle.empty())
            throw std::invalid_argument("iota cycle must be nonempty");
        const size_t C = cycle.size();
        for (size_t t = 0; t < C; ++t)
            if (cycle[t] == cycle[(t + 1) % C] && C > 1)
                throw std::invalid_argument("iota cycle repeats an index at a cyclic seam");
        if (C == 1 && !word.letters.empty())
            throw std::invalid_argument("length-1 cycle cannot satisfy adjacency");
        for (size_t r = 0; r < C; ++r) {
            if (!word.letters.empty() && cycle[r] == word.letters.back()) continue;
            std::vector<int> rot(cycle.begin() + static_cast<long>(r), cycle.end());
            rot.insert(rot.end(), cycle.begin(), cycle.begin() + static_cast<long>(r));
            return IotaSequence(word.letters, rot);
        }
        throw std::invalid_argument("no cycle rotation fixes the prefix->cycle seam");
    }

    int at(Int k) const {
        if (k < 1)
            throw std::out_of_range("iota index must be >= 1");
        if (k <= static_cast<Int>(prefix_.size()))
            return prefix_[static_cast<size_t>(k - 1)];
        Int off = (k - static_cast<Int>(prefix_.size()) - 1) % static_cast<Int>(cycle_.size());
        return cycle_[static_cast<size_t>(off)];
    }

    /// min{l : l > k, i_l = i_k}; exists because every index recurs in the cycle.
    Int k_plus(Int k) const {
        int i = at(k);
        Int bound = std::max(k, static_cast<Int>(prefix_.size())) +
                    static_cast<Int>(cycle_.size()) + 1;
        for (Int l = k + 1; l <= bound; ++l)
            if (at(l) == i) return l;
        throw std::logic_error("k_plus: index does not recur; invalid iota");
    }

    /// max{l : l < k, i_l = i_k}, or 0 if none.
    Int k_minus(Int k) const {
        int i = at(k);
        for (Int l = k - 1; l >= 1; --l)
            if (at(l) == i) return l;
        return 0;
    }

    /// First position where index i occurs.
    Int iota_first(int i) const {
        Int bound = static_cast<Int>(prefix_.size()) + static_cast<Int>(cycle_.size());
        for (Int k = 1; k <= bound; ++k)
            if (at(k) == i) return k;
        throw std::invalid_argument("index " + std::to_string(i) + " never occurs in iota");
    }

    /// Checks adjacency (i_k != i_{k+1} everywhere, including the seam and the
    /// cycle wrap) and that every index 1..n occurs in the cycle.
    std::vector<std::string> validate(const CartanMatrix& A) const {
        std::vector<std::string> bad;
        const int n = A.rank();
        auto check_range = [&](int v, const std::string& where) {
            if (v < 1 || v > n) bad.push_back("index " + std::to_string(v) + " out of range in " + where);
        };
        for (int v : prefix_) check_range(v, "prefix");
        for (int v : cycle_) check_range(v, "cycle");
        Int total = static_cast<Int>(prefix_.size()) + static_cast<Int>(cycle_.size());
        for (Int k = 1; k <= total; ++k)
            if (at(k) == at(k + 1))
                bad.push_back("adjacent equal indices at k=" + std::to_string(k) + "," +
                              std::to_string(k + 1));
        for (int i = 1; i <= n; ++i)
            if (std::find(cycle_.begin(), cycle_.end(), i) == cycle_.end())
                bad.push_back("index " + std::to_string(i) + " never occurs in cycle");
        return bad;
    }

    /// True iff at(k) matches the word letter for k = 1..L.
    bool extends(const WeylWord& w) const {
        for (size_t k = 0; k < w.letters.size(); ++k)
            if (at(static_cast<Int>(k) + 1) != w.letters[k]) return false;
        return true;
    }

    Int prefix_size() const { return static_cast<Int>(prefix_.size()); }
    Int cycle_size() const { return static_cast<Int>(cycle_.size()); }
    const std::vector<int>& prefix() const { return prefix_; }
    const std::vector<int>& cycle() const { return cycle_; }

private:
    std::vector<int> prefix_;
    std::vector<int> cycle_;
};

}  // namespace crysdem
