#ifndef GVTORIC_LAURENT_HPP
#define GVTORIC_LAURENT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace gvtoric {

namespace detail {

// Integer polynomial, ascending coefficients, no trailing zeros; empty = 0.
using IntPoly = std::vector<Int>;

inline void ip_normalize(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long ip_degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline Int ip_content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = gcd(g, c);
    return g; // >= 0
}

// Divide out the content and force a positive leading coefficient.
inline IntPoly ip_positive_primitive(IntPoly p) {
    ip_normalize(p);
    if (p.empty()) return p;
    Int g = ip_content(p);
    if (p.back() < 0) g = -g;
    for (Int& c : p) c /= g;
    return p;
}

// prem(a, b) = remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
inline IntPoly ip_pseudo_rem(IntPoly a, const IntPoly& b) {
    const long db = ip_degree(b);
    const Int& lb = b.back();
    long e = ip_degree(a) - db + 1;
    while (!a.empty() && ip_degree(a) >= db) {
        const Int la = a.back();
        const std::size_t k = a.size() - b.size();
        for (Int& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
        ip_normalize(a);
        --e;
    }
    if (e > 0 && !a.empty()) {
        const Int f = int_pow(lb, static_cast<unsigned long>(e));
        for (Int& c : a) c *= f;
    }
    return a;
}

// Subresultant polynomial remainder sequence. Returns the primitive gcd
// with positive leading coefficient.
inline IntPoly ip_gcd(IntPoly a, IntPoly b) {
    ip_normalize(a);
    ip_normalize(b);
    if (a.empty()) return ip_positive_primitive(std::move(b));
    if (b.empty()) return ip_positive_primitive(std::move(a));
    a = ip_positive_primitive(std::move(a));
    b = ip_positive_primitive(std::move(b));
    if (ip_degree(a) < ip_degree(b)) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        const long delta = ip_degree(a) - ip_degree(b);
        IntPoly r = ip_pseudo_rem(a, b);
        if (r.empty()) break;
        if (ip_degree(r) == 0) return {Int(1)};
        a = std::move(b);
        const Int div = g * int_pow(h, static_cast<unsigned long>(delta));
        for (Int& c : r) {
            if (c % div != 0) throw error("ip_gcd: inexact subresultant division");
            c /= div;
        }
        b = std::move(r);
        g = a.back();
        h = (delta == 0) ? h
                         : int_pow(g, static_cast<unsigned long>(delta)) /
                               int_pow(h, static_cast<unsigned long>(delta - 1));
    }
    return ip_positive_primitive(std::move(b));
}

} // namespace detail

// Laurent polynomial in the half-variable v = q^(1/2) with rational
// coefficients. Stored densely: c_[i] is the coefficient of v^(min_ + i);
// both ends nonzero, empty = 0.
class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(const Rational& c) { // implicit: constants embed
        if (c != 0) { min_ = 0; c_.push_back(c); }
    }
    HalfLaurent(const Int& c) : HalfLaurent(Rational(c)) {}
    HalfLaurent(long c) : HalfLaurent(Rational(c)) {}
    HalfLaurent(int c) : HalfLaurent(Rational(c)) {}

    static HalfLaurent monomial(long e, const Rational& c) {
        HalfLaurent f;
        if (c != 0) { f.min_ = e; f.c_.push_back(c); }
        return f;
    }

    bool is_zero() const { return c_.empty(); }

    long min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero");
        return min_;
    }
    long max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero");
        return min_ + static_cast<long>(c_.size()) - 1;
    }

    Rational coeff(long e) const {
        if (is_zero() || e < min_ || e > max_exp()) return Rational(0);
        return c_[static_cast<std::size_t>(e - min_)];
    }

    // Nonzero terms, ascending exponent.
    std::vector<std::pair<long, Rational>> terms() const {
        std::vector<std::pair<long, Rational>> ts;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) ts.emplace_back(min_ + static_cast<long>(i), c_[i]);
        return ts;
    }

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
        return a.min_ == b.min_ && a.c_ == b.c_; // zero is canonical: min_ = 0, empty
    }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    HalfLaurent operator-() const {
        HalfLaurent f = *this;
        for (Rational& c : f.c_) c = -c;
        return f;
    }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long lo = std::min(a.min_, b.min_);
        const long hi = std::max(a.max_exp(), b.max_exp());
        HalfLaurent r;
        r.min_ = lo;
        r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(a.min_ - lo) + i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[static_cast<std::size_t>(b.min_ - lo) + i] += b.c_[i];
        r.trim_();
        return r;
    }

    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return a + (-b); }

    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        HalfLaurent r;
        r.min_ = a.min_ + b.min_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim_();
        return r;
    }

    HalfLaurent& operator+=(const HalfLaurent& o) { return *this = *this + o; }
    HalfLaurent& operator-=(const HalfLaurent& o) { return *this = *this - o; }
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

    HalfLaurent scaled(const Rational& s) const {
        if (s == 0) return {};
        HalfLaurent f = *this;
        for (Rational& c : f.c_) c *= s;
        return f;
    }

    // Multiply by v^e.
    HalfLaurent shifted(long e) const {
        HalfLaurent f = *this;
        if (!f.is_zero()) f.min_ += e;
        return f;
    }

    // v -> 1/v.
    HalfLaurent mirrored() const {
        if (is_zero()) return {};
        HalfLaurent f;
        f.min_ = -max_exp();
        f.c_.assign(c_.rbegin(), c_.rend());
        return f;
    }

    // v -> v^n, n >= 1.
    HalfLaurent dilated(long n) const {
        if (n < 1) throw std::invalid_argument("dilated: n must be >= 1");
        if (is_zero() || n == 1) return *this;
        HalfLaurent f;
        f.min_ = min_ * n;
        f.c_.assign((c_.size() - 1) * static_cast<std::size_t>(n) + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            f.c_[i * static_cast<std::size_t>(n)] = c_[i];
        return f;
    }

    bool only_even_exponents() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0 && (min_ + static_cast<long>(i)) % 2 != 0) return false;
        return true;
    }

    bool is_mirror_symmetric() const { return *this == mirrored(); }

    bool has_integer_coefficients() const {
        for (const Rational& c : c_)
            if (!is_integer(c)) return false;
        return true;
    }

    // f = content * v^shift * prim(v) with prim integer primitive,
    // prim(0) != 0, lc(prim) > 0; content carries sign and denominators.
    struct Decomposition {
        Rational content; // 0 iff f = 0
        long shift = 0;
        detail::IntPoly prim; // {1} convention when f = 0 is NOT used; empty then
    };

    Decomposition decompose() const {
        Decomposition d;
        if (is_zero()) { d.content = 0; return d; }
        Int den_lcm = 1;
        for (const Rational& c : c_)
            if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
        Int num_gcd = 0;
        for (const Rational& c : c_)
            if (c != 0) num_gcd = gcd(num_gcd, Int(numerator(c) * (den_lcm / denominator(c))));
        d.shift = min_;
        d.prim.reserve(c_.size());
        for (const Rational& c : c_)
            d.prim.push_back(Int(numerator(c) * (den_lcm / denominator(c))) / num_gcd);
        if (d.prim.back() < 0) {
            for (Int& x : d.prim) x = -x;
            num_gcd = -num_gcd;
        }
        d.content = Rational(num_gcd, den_lcm);
        return d;
    }

    static HalfLaurent from_int_poly(const detail::IntPoly& p, long shift = 0) {
        HalfLaurent f;
        if (p.empty()) return f;
        f.min_ = shift;
        f.c_.reserve(p.size());
        for (const Int& c : p) f.c_.push_back(Rational(c));
        f.trim_();
        return f;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto& [e, c] : terms()) {
            if (!s.empty()) s += " + ";
            s += c.str();
            if (e != 0) s += "*v^" + std::to_string(e);
        }
        return s;
    }

private:
    void trim_() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) { c_.clear(); min_ = 0; return; }
        std::size_t tail = c_.size();
        while (c_[tail - 1] == 0) --tail;
        if (lead > 0 || tail < c_.size()) {
            c_ = std::vector<Rational>(c_.begin() + static_cast<long>(lead),
                                       c_.begin() + static_cast<long>(tail));
            min_ += static_cast<long>(lead);
        }
    }

    long min_ = 0;
    std::vector<Rational> c_;
};

// Exact quotient f / g, or nullopt when g does not divide f. Units v^e are
// invertible, so only the polynomial parts matter.
inline std::optional<HalfLaurent> divide_exact(const HalfLaurent& f, const HalfLaurent& g) {
    if (g.is_zero()) throw division_by_zero_error("divide_exact: zero divisor");
    if (f.is_zero()) return HalfLaurent();
    HalfLaurent rem = f.shifted(-f.min_exp());
    const HalfLaurent gg = g.shifted(-g.min_exp());
    const Rational glc = gg.coeff(gg.max_exp());
    HalfLaurent quot;
    while (!rem.is_zero() && rem.max_exp() >= gg.max_exp()) {
        const HalfLaurent t =
            HalfLaurent::monomial(rem.max_exp() - gg.max_exp(), rem.coeff(rem.max_exp()) / glc);
        quot += t;
        rem -= t * gg;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(f.min_exp() - g.min_exp());
}

// [m] = q^(m/2) - q^(-m/2) = v^m - v^(-m).
inline HalfLaurent quantum_bracket(long m) {
    if (m == 0) return {};
    return HalfLaurent::monomial(m, 1) + HalfLaurent::monomial(-m, -1);
}

} // namespace gvtoric

#endif
