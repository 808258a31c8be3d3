#ifndef GVTORIC_QSCALAR_HPP
#define GVTORIC_QSCALAR_HPP

#include <string>
#include <utility>

#include "laurent.hpp"

namespace gvtoric {

// Element of Q(v), the field the vertex amplitudes live in. Canonical form:
//   den is an integer primitive polynomial in v with positive leading
//   coefficient and nonzero constant term (unit powers of v live in num),
//   gcd(primitive part of num, den) = 1, and den = 1 when num = 0.
// Equality of values is therefore structural equality.
class QScalar {
public:
    QScalar() : den_(Rational(1)) {}
    QScalar(const HalfLaurent& n) : num_(n), den_(Rational(1)) {}
    QScalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    QScalar(const Int& c) : num_(c), den_(Rational(1)) {}
    QScalar(long c) : num_(c), den_(Rational(1)) {}
    QScalar(int c) : num_(c), den_(Rational(1)) {}

    QScalar(HalfLaurent num, HalfLaurent den) : num_(std::move(num)), den_(std::move(den)) {
        reduce_();
    }

    const HalfLaurent& num() const { return num_; }
    const HalfLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    QScalar operator-() const {
        QScalar r(raw_tag{});
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend QScalar operator+(const QScalar& x, const QScalar& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        const detail::IntPoly b = ipoly_(x.den_), d = ipoly_(y.den_);
        const detail::IntPoly g = detail::ip_gcd(b, d);
        QScalar r(raw_tag{});
        if (is_one_(g)) {
            r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
            r.den_ = x.den_ * y.den_;
        } else {
            const HalfLaurent hg = HalfLaurent::from_int_poly(g);
            const HalfLaurent b2 = exact_(x.den_, hg), d2 = exact_(y.den_, hg);
            HalfLaurent num = x.num_ * d2 + y.num_ * b2;
            HalfLaurent gden = hg;
            if (!num.is_zero()) {
                const detail::IntPoly h = detail::ip_gcd(num.decompose().prim, g);
                if (!is_one_(h)) {
                    const HalfLaurent hh = HalfLaurent::from_int_poly(h);
                    num = exact_(num, hh);
                    gden = exact_(hg, hh);
                }
            }
            r.num_ = std::move(num);
            r.den_ = gden * b2 * d2;
        }
        if (r.num_.is_zero()) r.den_ = HalfLaurent(Rational(1));
        return r;
    }

    friend QScalar operator-(const QScalar& x, const QScalar& y) { return x + (-y); }

    friend QScalar operator*(const QScalar& x, const QScalar& y) {
        if (x.is_zero() || y.is_zero()) return QScalar();
        const detail::IntPoly g1 = detail::ip_gcd(x.num_.decompose().prim, ipoly_(y.den_));
        const detail::IntPoly g2 = detail::ip_gcd(y.num_.decompose().prim, ipoly_(x.den_));
        HalfLaurent a = x.num_, d = y.den_;
        if (!is_one_(g1)) {
            const HalfLaurent h = HalfLaurent::from_int_poly(g1);
            a = exact_(a, h);
            d = exact_(d, h);
        }
        HalfLaurent c = y.num_, b = x.den_;
        if (!is_one_(g2)) {
            const HalfLaurent h = HalfLaurent::from_int_poly(g2);
            c = exact_(c, h);
            b = exact_(b, h);
        }
        QScalar r(raw_tag{});
        r.num_ = a * c;
        r.den_ = b * d;
        return r;
    }

    friend QScalar operator/(const QScalar& x, const QScalar& y) { return x * y.reciprocal(); }

    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar reciprocal() const {
        if (is_zero()) throw division_by_zero_error("QScalar: reciprocal of zero");
        return from_coprime(den_, num_);
    }

    QScalar pow(long n) const {
        if (n < 0) return reciprocal().pow(-n);
        QScalar r(Rational(1));
        QScalar base = *this;
        unsigned long e = static_cast<unsigned long>(n);
        while (e) {
            // num/den stay coprime under powers, so square parts directly
            if (e & 1) {
                QScalar t(raw_tag{});
                t.num_ = r.num_ * base.num_;
                t.den_ = r.den_ * base.den_;
                r = std::move(t);
            }
            e >>= 1;
            if (e) {
                QScalar t(raw_tag{});
                t.num_ = base.num_ * base.num_;
                t.den_ = base.den_ * base.den_;
                base = std::move(t);
            }
        }
        if (r.num_.is_zero()) r.den_ = HalfLaurent(Rational(1));
        return r;
    }

    // q -> 1/q (v -> 1/v). Preserves coprimality, only the unit normal form
    // of the denominator needs repair.
    QScalar mirrored() const {
        return from_coprime(num_.mirrored(), den_.mirrored());
    }

    // q -> q^n (v -> v^n), n >= 1.
    QScalar dilated(long n) const {
        QScalar r(raw_tag{});
        r.num_ = num_.dilated(n);
        r.den_ = den_.dilated(n);
        return r;
    }

    // num/den with gcd(primitive(num), primitive(den)) already 1; only
    // normalizes the denominator's unit, content and sign into num.
    static QScalar from_coprime(const HalfLaurent& num, const HalfLaurent& den) {
        if (den.is_zero()) throw division_by_zero_error("QScalar: zero denominator");
        QScalar r(raw_tag{});
        if (num.is_zero()) {
            r.den_ = HalfLaurent(Rational(1));
            return r;
        }
        const HalfLaurent::Decomposition dd = den.decompose();
        r.den_ = HalfLaurent::from_int_poly(dd.prim);
        r.num_ = num.scaled(Rational(1) / dd.content).shifted(-dd.shift);
        return r;
    }

    std::string to_string() const {
        if (den_ == HalfLaurent(Rational(1))) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    struct raw_tag {};
    explicit QScalar(raw_tag) {}

    static bool is_one_(const detail::IntPoly& p) { return p.size() == 1 && p[0] == 1; }

    static detail::IntPoly ipoly_(const HalfLaurent& canonical_den) {
        detail::IntPoly p;
        p.reserve(static_cast<std::size_t>(canonical_den.max_exp()) + 1);
        for (long e = 0; e <= canonical_den.max_exp(); ++e)
            p.push_back(Int(numerator(canonical_den.coeff(e))));
        return p;
    }

    static HalfLaurent exact_(const HalfLaurent& f, const HalfLaurent& g) {
        auto q = divide_exact(f, g);
        if (!q) throw error("QScalar: internal gcd division failed");
        return *q;
    }

    void reduce_() {
        if (den_.is_zero()) throw division_by_zero_error("QScalar: zero denominator");
        if (num_.is_zero()) {
            den_ = HalfLaurent(Rational(1));
            return;
        }
        const HalfLaurent::Decomposition dn = num_.decompose();
        const HalfLaurent::Decomposition dd = den_.decompose();
        HalfLaurent pn = HalfLaurent::from_int_poly(dn.prim);
        HalfLaurent pd = HalfLaurent::from_int_poly(dd.prim);
        const detail::IntPoly g = detail::ip_gcd(dn.prim, dd.prim);
        if (!is_one_(g)) {
            const HalfLaurent hg = HalfLaurent::from_int_poly(g);
            pn = exact_(pn, hg);
            pd = exact_(pd, hg);
        }
        num_ = pn.scaled(dn.content / dd.content).shifted(dn.shift - dd.shift);
        den_ = std::move(pd);
    }

    HalfLaurent num_;
    HalfLaurent den_;
};

// q -> q^n on a rational function; n >= 1.
inline QScalar substitute_power(const QScalar& f, long n) { return f.dilated(n); }

// q -> 1/q on a rational function.
inline QScalar invert_q(const QScalar& f) { return f.mirrored(); }

} // namespace gvtoric

#endif
