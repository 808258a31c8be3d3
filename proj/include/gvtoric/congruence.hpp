#ifndef GVTORIC_CONGRUENCE_HPP
#define GVTORIC_CONGRUENCE_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "partition.hpp"
#include "xpoly.hpp"

namespace gvtoric {

// p^r | a^{p^r} - a^{p^{r-1}}
inline bool check_fermat_lift(long p, long r, long a) {
    const long e = static_cast<long>(int_pow(Int(p), static_cast<unsigned long>(r)));
    const Int lhs = int_pow(Int(a), static_cast<unsigned long>(e));
    const Int rhs = int_pow(Int(a), static_cast<unsigned long>(e / p));
    return (lhs - rhs) % int_pow(Int(p), static_cast<unsigned long>(r)) == 0;
}

// a/gcd(a,b) | C(a,b)
inline bool check_binomial_reduction(long a, long b) {
    if (a < 1 || b < 0 || b > a) throw config_error("check_binomial_reduction: need 0 <= b <= a, a >= 1");
    const long g = std::gcd(a, b);
    return binomial(Int(a), b) % Int(a / g) == 0;
}

namespace detail {

inline bool divisible_coeffs(const XPolynomial& f, const Int& m) {
    for (const Rational& c : f.coeffs())
        if (boost::multiprecision::numerator(c) % m != 0) return false;
    return true;
}

} // namespace detail

// f(x)^{p^r} == f(x^p)^{p^{r-1}} coefficientwise mod p^r, for integer f
inline bool check_frobenius_poly(const XPolynomial& f, long p, long r) {
    if (!f.has_integer_coefficients())
        throw config_error("check_frobenius_poly: f must have integer coefficients");
    const unsigned long e = static_cast<unsigned long>(int_pow(Int(p), static_cast<unsigned long>(r)));
    const XPolynomial lhs = f.pow(e);
    const XPolynomial rhs = f.stretched(p).pow(e / static_cast<unsigned long>(p));
    return detail::divisible_coeffs(lhs - rhs, int_pow(Int(p), static_cast<unsigned long>(r)));
}

// p^{2r} | C(p^r a; p^r a_1, ...) - C(p^{r-1} a; p^{r-1} a_1, ...)
inline bool check_multinomial_congruence(long p, long r, const std::vector<long>& a_vec) {
    const long s = static_cast<long>(int_pow(Int(p), static_cast<unsigned long>(r)));
    std::vector<long> hi = a_vec, lo = a_vec;
    for (long& x : hi) x *= s;
    for (long& x : lo) x *= s / p;
    return (multinomial(hi) - multinomial(lo)) % int_pow(Int(p), static_cast<unsigned long>(2 * r)) == 0;
}

// xi_p of A_p(p^r b) = sum_{1<=k<=p^r b, p !| k} 1/k is at least r
inline bool check_harmonic_valuation(long p, long r, long b) {
    const long n = static_cast<long>(int_pow(Int(p), static_cast<unsigned long>(r))) * b;
    Rational sum = 0;
    for (long k = 1; k <= n; ++k)
        if (k % p != 0) sum += Rational(1, k);
    return xi_valuation(sum, Int(p)) >= r;
}

// p | every coefficient of psi(n p) - psi(n)^p
inline bool check_psi_family(long n, long p) {
    const XPolynomial diff = psi(n * p) - psi(n).pow(static_cast<unsigned long>(p));
    return detail::divisible_coeffs(diff, Int(p));
}

struct SweepBounds {
    std::vector<long> primes{2, 3, 5};
    long r_max = 2;
    long fermat_a_abs = 50;
    long binom_a_max = 60;
    long multinomial_sum_max = 6;
    long multinomial_len_max = 4;
    long psi_n_max = 6;
    long harmonic_b_max = 4;
    std::vector<long> frobenius_primes{2, 3};
    long frobenius_r_max = 2;
    long frobenius_coeff_abs = 2;

    static SweepBounds defaults() { return SweepBounds{}; }
    static SweepBounds deep() {
        SweepBounds b;
        b.primes = {2, 3, 5, 7};
        b.r_max = 3;
        b.fermat_a_abs = 120;
        b.binom_a_max = 120;
        b.multinomial_sum_max = 8;
        b.psi_n_max = 10;
        b.harmonic_b_max = 6;
        b.frobenius_primes = {2, 3, 5};
        return b;
    }
};

struct CongruenceReport {
    std::string claim;
    std::string ranges;
    bool pass = true;
    std::string counterexample; // empty when pass
    long cases = 0;

    void record(bool ok, const std::string& inputs) {
        ++cases;
        if (!ok && pass) {
            pass = false;
            counterexample = inputs;
        }
    }
};

namespace detail {

inline std::string prime_list(const std::vector<long>& ps) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
    os << "}";
    return os.str();
}

} // namespace detail

// Exhaustive sweeps over the bounded parameter boxes; each report records
// exactly the range it tested and the first counterexample, if any.
inline std::vector<CongruenceReport> run_congruence_suite(const SweepBounds& bounds) {
    std::vector<CongruenceReport> reports;

    {
        CongruenceReport rep;
        rep.claim = "fermat_lift";
        rep.ranges = "p in " + detail::prime_list(bounds.primes) + ", 1<=r<=" +
                     std::to_string(bounds.r_max) + ", |a|<=" + std::to_string(bounds.fermat_a_abs);
        for (long p : bounds.primes)
            for (long r = 1; r <= bounds.r_max; ++r)
                for (long a = -bounds.fermat_a_abs; a <= bounds.fermat_a_abs; ++a)
                    rep.record(check_fermat_lift(p, r, a),
                               "p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                   " a=" + std::to_string(a));
        reports.push_back(rep);
    }

    {
        CongruenceReport rep;
        rep.claim = "binomial_reduction";
        rep.ranges = "1<=a<=" + std::to_string(bounds.binom_a_max) + ", 0<=b<=a";
        for (long a = 1; a <= bounds.binom_a_max; ++a)
            for (long b = 0; b <= a; ++b)
                rep.record(check_binomial_reduction(a, b),
                           "a=" + std::to_string(a) + " b=" + std::to_string(b));
        reports.push_back(rep);
    }

    {
        CongruenceReport rep;
        rep.claim = "frobenius_poly";
        rep.ranges = "f with deg<=2, integer coefficients |c|<=" +
                     std::to_string(bounds.frobenius_coeff_abs) + ", p in " +
                     detail::prime_list(bounds.frobenius_primes) + ", 1<=r<=" +
                     std::to_string(bounds.frobenius_r_max);
        const long cmax = bounds.frobenius_coeff_abs;
        for (long c0 = -cmax; c0 <= cmax; ++c0)
            for (long c1 = -cmax; c1 <= cmax; ++c1)
                for (long c2 = -cmax; c2 <= cmax; ++c2) {
                    const XPolynomial f =
                        XPolynomial::from_integers({Int(c0), Int(c1), Int(c2)});
                    for (long p : bounds.frobenius_primes)
                        for (long r = 1; r <= bounds.frobenius_r_max; ++r)
                            rep.record(check_frobenius_poly(f, p, r),
                                       "f=" + f.to_string() + " p=" + std::to_string(p) +
                                           " r=" + std::to_string(r));
                }
        reports.push_back(rep);
    }

    {
        CongruenceReport rep;
        rep.claim = "multinomial_congruence";
        rep.ranges = "p in " + detail::prime_list(bounds.primes) + ", 1<=r<=" +
                     std::to_string(bounds.r_max) + ", a_vec multisets with sum<=" +
                     std::to_string(bounds.multinomial_sum_max) + ", length<=" +
                     std::to_string(bounds.multinomial_len_max);
        for (long d = 1; d <= bounds.multinomial_sum_max; ++d)
            for (const Partition& la : enumerate_partitions(d)) {
                if (la.length() > bounds.multinomial_len_max) continue;
                std::vector<long> a_vec(la.parts().begin(), la.parts().end());
                for (long p : bounds.primes)
                    for (long r = 1; r <= bounds.r_max; ++r)
                        rep.record(check_multinomial_congruence(p, r, a_vec),
                                   "p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                       " a_vec=" + la.to_string());
            }
        reports.push_back(rep);
    }

    {
        CongruenceReport rep;
        rep.claim = "psi_family";
        rep.ranges = "1<=n<=" + std::to_string(bounds.psi_n_max) + ", p in " +
                     detail::prime_list(bounds.primes);
        for (long n = 1; n <= bounds.psi_n_max; ++n)
            for (long p : bounds.primes)
                rep.record(check_psi_family(n, p),
                           "n=" + std::to_string(n) + " p=" + std::to_string(p));
        reports.push_back(rep);
    }

    {
        CongruenceReport rep;
        rep.claim = "harmonic_valuation";
        rep.ranges = "p in " + detail::prime_list(bounds.primes) + ", 1<=r<=" +
                     std::to_string(bounds.r_max) + ", 1<=b<=" +
                     std::to_string(bounds.harmonic_b_max);
        for (long p : bounds.primes)
            for (long r = 1; r <= bounds.r_max; ++r)
                for (long b = 1; b <= bounds.harmonic_b_max; ++b)
                    rep.record(check_harmonic_valuation(p, r, b),
                               "p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                   " b=" + std::to_string(b));
        reports.push_back(rep);
    }

    {
        // The oracles must be falsifiable: perturbed inputs have to fail.
        CongruenceReport rep;
        rep.claim = "perturbation_sanity";
        rep.ranges = "hand-picked perturbed instances";
        const Int multi_perturbed = multinomial({2, 2}) - multinomial({1, 1}) + 1;
        rep.record(multi_perturbed % 4 != 0, "multinomial C(4;2,2)-C(2;1,1)+1 mod 4");
        const Int fermat_perturbed = int_pow(Int(2), 9) - int_pow(Int(2), 3) + 1;
        rep.record(fermat_perturbed % 3 != 0, "fermat 2^9-2^3+1 mod 3");
        reports.push_back(rep);
    }

    return reports;
}

} // namespace gvtoric

#endif
