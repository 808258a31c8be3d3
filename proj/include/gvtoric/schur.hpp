#ifndef GVTORIC_SCHUR_HPP
#define GVTORIC_SCHUR_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "xpoly.hpp"

namespace gvtoric {

// q^e as a rational function of v.
inline QScalar q_power(long e) { return QScalar(HalfLaurent::monomial(2 * e, Rational(1))); }

// h_r evaluated on the principal alphabet q^alpha = (1, q^-1, q^-2, ...):
// h_r = phi_r(1/q) q^{r(r+1)/2} / prod_{i=1}^r [i]^2 with phi_r(q) = prod (1-q^i).
inline QScalar h_principal(int r) {
    if (r < 0) return QScalar();
    HalfLaurent num = HalfLaurent::monomial(r * (static_cast<long>(r) + 1), Rational(1));
    HalfLaurent den(Rational(1));
    for (long i = 1; i <= r; ++i) {
        num *= HalfLaurent(Rational(1)) - HalfLaurent::monomial(-2 * i, Rational(1));
        const HalfLaurent b = quantum_bracket(i);
        den *= b * b;
    }
    return QScalar(std::move(num), std::move(den));
}

namespace detail {

// Coefficients of t^0..t^order of the generating function
//   prod_{i=1}^{l(la)} (1 - q^{-i+1} t) / (1 - q^{la_i - i + 1} t) * H(q^alpha, t),
// which generates h_r on the shifted alphabet q^{la+alpha}.
inline std::vector<QScalar> h_shifted_series(const Partition& la, int order) {
    std::vector<QScalar> s(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) s[static_cast<std::size_t>(j)] = h_principal(j);
    for (int i = 1; i <= la.length(); ++i) {
        const QScalar a = q_power(-i + 1);           // numerator factor (1 - a t)
        const QScalar b = q_power(la.part(i - 1) - i + 1); // denominator factor (1 - b t)^-1
        for (int j = order; j >= 1; --j)
            s[static_cast<std::size_t>(j)] -= a * s[static_cast<std::size_t>(j - 1)];
        for (int j = 1; j <= order; ++j)
            s[static_cast<std::size_t>(j)] += b * s[static_cast<std::size_t>(j - 1)];
    }
    return s;
}

// Determinant by expansion over column subsets; entries are pulled lazily.
// Rows and columns are 1-based in `entry`.
inline QScalar subset_determinant(int n, const std::function<QScalar(int, int)>& entry) {
    if (n == 0) return QScalar(Rational(1));
    const std::size_t full = (static_cast<std::size_t>(1) << n) - 1;
    std::vector<QScalar> dp(full + 1);
    dp[0] = QScalar(Rational(1));
    for (std::size_t sub = 1; sub <= full; ++sub) {
        int k = 0;
        for (std::size_t t = sub; t; t >>= 1) k += static_cast<int>(t & 1);
        QScalar acc;
        int c = 0;
        for (int j = 0; j < n; ++j) {
            if (!(sub >> j & 1)) continue;
            ++c;
            const QScalar term = entry(k, j + 1) * dp[sub ^ (static_cast<std::size_t>(1) << j)];
            if ((k + c) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        dp[sub] = std::move(acc);
    }
    return dp[full];
}

} // namespace detail

// S_la(q^alpha) by the Jacobi-Trudi determinant det(h_{la_i - i + j}).
inline QScalar schur_principal(const Partition& la) {
    const int n = la.length();
    std::vector<QScalar> h(static_cast<std::size_t>(la.empty() ? 0 : la.part(0) + n - 1) + 1);
    for (std::size_t r = 0; r < h.size(); ++r) h[r] = h_principal(static_cast<int>(r));
    return detail::subset_determinant(n, [&](int i, int j) {
        const int idx = la.part(i - 1) - i + j;
        return idx < 0 ? QScalar() : h[static_cast<std::size_t>(idx)];
    });
}

// Hook form S_la(q^alpha) = q^{-n(la)} prod_x 1/(1 - q^{-h(x)}); cross-check
// oracle for the determinant route.
inline QScalar schur_principal_hook(const Partition& la) {
    const PartitionStats st = stats(la);
    HalfLaurent num = HalfLaurent::monomial(-2 * st.n_weight, Rational(1));
    HalfLaurent den(Rational(1));
    for (int h : hooks(la))
        den *= HalfLaurent(Rational(1)) - HalfLaurent::monomial(-2 * h, Rational(1));
    return QScalar(std::move(num), std::move(den));
}

// S_mu(q^{la+alpha}) by Jacobi-Trudi over the shifted h series.
inline QScalar schur_shifted(const Partition& la, const Partition& mu) {
    const int n = mu.length();
    if (n == 0) return QScalar(Rational(1));
    const int order = mu.part(0) + n - 1;
    const std::vector<QScalar> h = detail::h_shifted_series(la, order);
    return detail::subset_determinant(n, [&](int i, int j) {
        const int idx = mu.part(i - 1) - i + j;
        return idx < 0 ? QScalar() : h[static_cast<std::size_t>(idx)];
    });
}

// h_r on the shifted alphabet q^{la+alpha}.
inline QScalar h_shifted(const Partition& la, int r) {
    if (r < 0) return QScalar();
    return detail::h_shifted_series(la, r)[static_cast<std::size_t>(r)];
}

// W_la(q) = q^{k_la/4} prod_x 1/[h(x)]. k_la is even, so the prefactor is
// the integer v-power k_la/2.
inline QScalar w_lambda(const Partition& la) {
    const PartitionStats st = stats(la);
    HalfLaurent den(Rational(1));
    for (int h : hooks(la)) den *= quantum_bracket(h);
    return QScalar(HalfLaurent::monomial(st.k / 2, Rational(1)), std::move(den));
}

// Thread-safe memo for Hopf-link values keyed by (la, mu). Purely an
// optimization: hits return the canonical value a fresh computation yields.
class WCache {
public:
    using Key = std::pair<Partition, Partition>;

    std::optional<QScalar> find(const Partition& la, const Partition& mu) const {
        std::shared_lock lock(mu_);
        const auto it = map_.find(Key(la, mu));
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Partition& la, const Partition& mu, const QScalar& value) {
        std::unique_lock lock(mu_);
        map_.emplace(Key(la, mu), value); // first write wins; value is canonical
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

    // Deterministic snapshot for persistence.
    std::vector<std::pair<Key, QScalar>> snapshot() const {
        std::shared_lock lock(mu_);
        return {map_.begin(), map_.end()};
    }

private:
    std::map<Key, QScalar> map_;
    mutable std::shared_mutex mu_;
};

// Hopf-link invariant W_{la,mu}(q) = q^{-(|la|+|mu|)/2} S_la(q^alpha) S_mu(q^{la+alpha}).
inline QScalar w_pair(const Partition& la, const Partition& mu, WCache* cache = nullptr) {
    if (cache) {
        if (auto hit = cache->find(la, mu)) return *hit;
    }
    QScalar w = QScalar(HalfLaurent::monomial(-(la.degree() + mu.degree()), Rational(1))) *
                schur_principal(la) * schur_shifted(la, mu);
    if (cache) cache->insert(la, mu, w);
    return w;
}

} // namespace gvtoric

#endif
