#ifndef GVTORIC_XPOLY_HPP
#define GVTORIC_XPOLY_HPP

#include <string>
#include <vector>

#include "qscalar.hpp"

namespace gvtoric {

// Polynomial in x = [1]^2 with exact rational coefficients. Ascending
// storage, trailing zeros trimmed; empty = 0.
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<Rational> c) : c_(std::move(c)) { trim_(); }

    static XPolynomial from_integers(const std::vector<Int>& c) {
        std::vector<Rational> r;
        r.reserve(c.size());
        for (const Int& v : c) r.emplace_back(v);
        return XPolynomial(std::move(r));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero

    Rational coeff(long g) const {
        if (g < 0 || g >= static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(g)];
    }

    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XPolynomial& a, const XPolynomial& b) { return !(a == b); }

    XPolynomial operator-() const {
        XPolynomial r = *this;
        for (Rational& c : r.c_) c = -c;
        return r;
    }

    friend XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return XPolynomial(std::move(r));
    }

    friend XPolynomial operator-(const XPolynomial& a, const XPolynomial& b) { return a + (-b); }

    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return XPolynomial(std::move(r));
    }

    XPolynomial& operator+=(const XPolynomial& o) { return *this = *this + o; }
    XPolynomial& operator-=(const XPolynomial& o) { return *this = *this - o; }
    XPolynomial& operator*=(const XPolynomial& o) { return *this = *this * o; }

    XPolynomial scaled(const Rational& s) const {
        if (s == 0) return {};
        XPolynomial r = *this;
        for (Rational& c : r.c_) c *= s;
        return r;
    }

    XPolynomial pow(unsigned long e) const {
        XPolynomial r({Rational(1)});
        XPolynomial base = *this;
        while (e) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    // x -> x^p.
    XPolynomial stretched(long p) const {
        if (p < 1) throw std::invalid_argument("stretched: p must be >= 1");
        if (is_zero()) return {};
        std::vector<Rational> r((c_.size() - 1) * static_cast<std::size_t>(p) + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(p)] = c_[i];
        return XPolynomial(std::move(r));
    }

    // f(inner) by Horner.
    XPolynomial composed(const XPolynomial& inner) const {
        XPolynomial r;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r = r * inner;
            r += XPolynomial({c_[i]});
        }
        return r;
    }

    // f(base) for a Laurent-polynomial argument, by Horner.
    HalfLaurent evaluated_at(const HalfLaurent& base) const {
        HalfLaurent r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * base + HalfLaurent(c_[i]);
        return r;
    }

    bool has_integer_coefficients() const {
        for (const Rational& c : c_)
            if (!is_integer(c)) return false;
        return true;
    }

    // Narrow to integer coefficients; the caller relies on integrality.
    std::vector<Int> integer_coefficients() const {
        std::vector<Int> r;
        r.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!is_integer(c_[i]))
                throw integrality_violation("coefficient of x^" + std::to_string(i) +
                                            " is not an integer: " + c_[i].str());
            r.push_back(Int(numerator(c_[i])));
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            if (i > 0) s += "*x^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim_() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// The unique h with h(q - 2 + q^{-1}) = f, for f a Laurent polynomial in q
// symmetric under q -> 1/q. Peels the top coefficient: x^N has leading
// term q^N, so the v-degree drops by 2 each round and any residue left at
// the end is impossible by symmetry.
inline XPolynomial to_x_polynomial(const HalfLaurent& f) {
    if (f.is_zero()) return {};
    if (!f.only_even_exponents())
        throw half_power_error("to_x_polynomial: odd powers of v survive: " + f.to_string());
    if (!f.is_mirror_symmetric())
        throw not_symmetric_error("to_x_polynomial: not invariant under q -> 1/q: " +
                                  f.to_string());
    const HalfLaurent x = quantum_bracket(1) * quantum_bracket(1); // v^2 - 2 + v^-2
    const long n = f.max_exp() / 2;
    std::vector<HalfLaurent> xpow(static_cast<std::size_t>(n) + 1);
    xpow[0] = HalfLaurent(Rational(1));
    for (long i = 1; i <= n; ++i)
        xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * x;
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    HalfLaurent g = f;
    while (!g.is_zero()) {
        const long m = g.max_exp() / 2;
        const Rational c = g.coeff(g.max_exp());
        coeffs[static_cast<std::size_t>(m)] = c;
        g -= xpow[static_cast<std::size_t>(m)].scaled(c);
    }
    return XPolynomial(std::move(coeffs));
}

inline XPolynomial to_x_polynomial(const QScalar& f) {
    if (f.den() != HalfLaurent(Rational(1)))
        throw not_polynomial_error("to_x_polynomial: reduced denominator is not 1: " +
                                   f.to_string());
    return to_x_polynomial(f.num());
}

// psi_n(x) = [n]^2 written as a polynomial in x; monic of degree n with zero
// constant term.
inline XPolynomial psi(long n) {
    if (n < 1) throw std::invalid_argument("psi: n must be >= 1");
    const HalfLaurent bn = quantum_bracket(n);
    return to_x_polynomial(bn * bn);
}

// Exponent of p in a nonzero rational.
inline long xi_valuation(const Rational& r, const Int& p) {
    if (r == 0) throw std::domain_error("xi_valuation of zero");
    return p_valuation(Int(numerator(r)), p) - p_valuation(Int(denominator(r)), p);
}

} // namespace gvtoric

#endif
