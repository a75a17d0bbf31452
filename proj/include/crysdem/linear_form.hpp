#pragma once

#include <boost/rational.hpp>
#include <map>
#include <sstream>
#include <string>

#include "crysdem/zvector.hpp"

namespace crysdem {

using Rational = boost::rational<Int>;

/// Affine function c + sum_k phi_k * x_k with exact rational coefficients.
struct LinearForm {
    Rational constant{0};
    std::map<Int, Rational> coeffs;  // nonzero entries only

    Rational coeff(Int k) const {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    void set_coeff(Int k, Rational v) {
        if (v == Rational(0))
            coeffs.erase(k);
        else
            coeffs[k] = v;
    }

    void add_coeff(Int k, Rational dv) { set_coeff(k, coeff(k) + dv); }

    LinearForm& operator+=(const LinearForm& o) {
        constant += o.constant;
        for (auto& [k, v] : o.coeffs) add_coeff(k, v);
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        constant -= o.constant;
        for (auto& [k, v] : o.coeffs) add_coeff(k, -v);
        return *this;
    }
    LinearForm& operator*=(Rational s) {
        constant *= s;
        if (s == Rational(0)) {
            coeffs.clear();
        } else {
            for (auto& [k, v] : coeffs) v *= s;
        }
        return *this;
    }

    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator*(Rational s, LinearForm a) { return a *= s; }

    Rational eval(const ZVector& x) const {
        Rational v = constant;
        for (auto& [k, c] : coeffs) v += c * Rational(x.get(k));
        return v;
    }

    Int min_support() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
    Int max_support() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
    bool is_zero() const { return constant == Rational(0) && coeffs.empty(); }

    /// Index shift k -> k - delta; valid only when min_support > delta.
    LinearForm shifted_down(Int delta) const {
        LinearForm out;
        out.constant = constant;
        for (auto& [k, v] : coeffs) {
            if (k <= delta) throw std::logic_error("shifted_down: support too low");
            out.coeffs[k - delta] = v;
        }
        return out;
    }

    bool operator==(const LinearForm& o) const {
        return constant == o.constant && coeffs == o.coeffs;
    }

    /// Canonical order: constant, then coefficients by index.
    bool operator<(const LinearForm& o) const {
        if (constant != o.constant) return constant < o.constant;
        auto a = coeffs.begin(), b = o.coeffs.begin();
        for (; a != coeffs.end() && b != o.coeffs.end(); ++a, ++b) {
            if (a->first != b->first) return a->first < b->first;
            if (a->second != b->second) return a->second < b->second;
        }
        return a == coeffs.end() && b != o.coeffs.end();
    }

    /// "c + q1*x_1 + q2*x_2 + ... >= 0", zero terms omitted, rationals as p/q.
    std::string to_string() const {
        std::ostringstream os;
        auto rat = [](Rational r) {
            std::ostringstream s;
            s << r.numerator();
            if (r.denominator() != 1) s << '/' << r.denominator();
            return s.str();
        };
        bool first = true;
        if (constant != Rational(0) || coeffs.empty()) {
            os << rat(constant);
            first = false;
        }
        for (auto& [k, v] : coeffs) {
            if (!first) os << (v > Rational(0) ? " + " : " - ");
            else if (v < Rational(0)) os << '-';
            first = false;
            Rational av = v > Rational(0) ? v : -v;
            if (av != Rational(1)) os << rat(av) << '*';
            os << "x_" << k;
        }
        os << " >= 0";
        return os.str();
    }
};

inline LinearForm variable_form(Int k) {
    LinearForm f;
    f.set_coeff(k, Rational(1));
    return f;
}

}  // namespace crysdem
