#ifndef GVTORIC_ARITH_HPP
#define GVTORIC_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gvtoric {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1); // exact: r is always C(n, i+1) * falling-factorial tail
    }
    return r;
}

// (sum ks)! / prod ks!
inline Int multinomial(const std::vector<long>& ks) {
    Int r = 1;
    long total = 0;
    for (long k : ks) {
        if (k < 0) throw std::invalid_argument("multinomial of negative part");
        total += k;
        r *= binomial(Int(total), k);
    }
    return r;
}

// Largest e with p^e | n. n must be nonzero.
inline long p_valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("p_valuation of zero");
    if (p < 2) throw std::invalid_argument("p_valuation: modulus must be >= 2");
    if (n < 0) n = -n;
    long e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Prime factorization by trial division; fine for the divisor lattices and
// Mobius values this library needs (arguments stay small).
inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<long, int>> fs;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        fs.emplace_back(p, e);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> ds{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline int moebius(long n) {
    if (n <= 0) throw std::invalid_argument("moebius: argument must be positive");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

// True iff q is an integer.
inline bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

} // namespace gvtoric

#endif
