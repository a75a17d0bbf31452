#pragma once

#include <map>
#include <sstream>
#include <string>

#include "crysdem/cartan.hpp"

namespace crysdem {

/// Finitely supported integer sequence (x_1, x_2, ...); a point of Z^infty.
class ZVector {
public:
    ZVector() = default;

    Int get(Int k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? 0 : it->second;
    }

    void set(Int k, Int v) {
        if (k < 1) throw std::out_of_range("ZVector index must be >= 1");
        if (v == 0)
            entries_.erase(k);
        else
            entries_[k] = v;
    }

    void add(Int k, Int dv) { set(k, get(k) + dv); }

    Int max_support() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

    Int coordinate_sum() const {
        Int s = 0;
        for (auto& [k, v] : entries_) s += v;
        return s;
    }

    bool nonnegative() const {
        for (auto& [k, v] : entries_)
            if (v < 0) return false;
        return true;
    }

    bool is_zero() const { return entries_.empty(); }

    const std::map<Int, Int>& entries() const { return entries_; }

    bool operator==(const ZVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const ZVector& o) const { return !(*this == o); }

    /// Lexicographic on (x_1, x_2, ...).
    bool operator<(const ZVector& o) const {
        Int top = std::max(max_support(), o.max_support());
        for (Int k = 1; k <= top; ++k) {
            Int a = get(k), b = o.get(k);
            if (a != b) return a < b;
        }
        return false;
    }

    /// "(x_1, ..., x_m)" with m = max(upto, max support), ascending.
    std::string to_string(Int upto = 0) const {
        Int top = std::max(upto, max_support());
        std::ostringstream os;
        os << '(';
        for (Int k = 1; k <= top; ++k) {
            if (k > 1) os << ", ";
            os << get(k);
        }
        os << ')';
        return os.str();
    }

private:
    std::map<Int, Int> entries_;  // nonzero entries only
};

}  // namespace crysdem
