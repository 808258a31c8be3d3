#ifndef GVTORIC_PARTITION_HPP
#define GVTORIC_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace gvtoric {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw config_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw config_error("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int degree() const {
        int d = 0;
        for (int p : parts_) d += p;
        return d;
    }

    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; } // 0-based

    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

// Conjugate partition: column lengths of the Young diagram.
inline Partition transpose(const Partition& la) {
    std::vector<int> t;
    if (!la.empty()) {
        t.assign(static_cast<std::size_t>(la.part(0)), 0);
        for (int p : la.parts())
            for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(t));
}

// Hook lengths h(i,j) = la_i + la^t_j - i - j + 1 over all cells, sorted
// descending.
inline std::vector<int> hooks(const Partition& la) {
    const Partition t = transpose(la);
    std::vector<int> hs;
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i - 1); ++j)
            hs.push_back(la.part(i - 1) + t.part(j - 1) - i - j + 1);
    std::sort(hs.begin(), hs.end(), std::greater<int>());
    return hs;
}

namespace detail {
inline void enumerate_partitions_rec(int remaining, int maxpart,
                                     std::vector<int>& acc,
                                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        enumerate_partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
} // namespace detail

// All partitions of d, largest-first ordering: (d), (d-1,1), ..., (1^d).
inline std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw config_error("enumerate_partitions: degree must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::enumerate_partitions_rec(d, d, acc, out);
    return out;
}

struct PartitionStats {
    int degree = 0;
    int length = 0;
    Int aut = 1;           // prod_i m_i! over part multiplicities
    Int u = 1;             // l! / prod m_i!  (distinct orderings of the parts)
    Int z = 1;             // prod m_i! * prod la_i  (centralizer order in S_d)
    long long k = 0;       // sum la_i (la_i - 2i + 1); always even, flips sign under transpose
    Rational theta = 0;    // (-1)^{l-1} (l-1)! / prod m_i!
    long long n_weight = 0; // sum (i-1) la_i
};

inline PartitionStats stats(const Partition& la) {
    PartitionStats st;
    st.degree = la.degree();
    st.length = la.length();
    Int prod_parts = 1;
    for (std::size_t i = 0; i < la.parts().size();) {
        std::size_t j = i;
        while (j < la.parts().size() && la.parts()[j] == la.parts()[i]) ++j;
        st.aut *= factorial(static_cast<int>(j - i));
        i = j;
    }
    for (int i = 1; i <= la.length(); ++i) {
        const long long p = la.part(i - 1);
        prod_parts *= p;
        st.k += p * (p - 2 * i + 1);
        st.n_weight += (i - 1) * p;
    }
    st.u = factorial(st.length) / st.aut;
    st.z = st.aut * prod_parts;
    if (st.length == 0) {
        st.theta = 1; // convention: u, theta, z all equal 1 on the zero partition
    } else {
        Rational t(factorial(st.length - 1), st.aut);
        st.theta = (st.length % 2 == 0) ? -t : t;
    }
    return st;
}

namespace detail {

// Beta set (Maya positions) of la padded to `slots` rows: la_j + slots - j.
inline std::vector<long> beta_set(const Partition& la, int slots) {
    std::vector<long> b;
    b.reserve(static_cast<std::size_t>(slots));
    for (int j = 1; j <= slots; ++j) {
        const long part = (j <= la.length()) ? la.part(j - 1) : 0;
        b.push_back(part + slots - j);
    }
    return b;
}

inline Partition partition_from_beta(std::vector<long> b) {
    std::sort(b.begin(), b.end(), std::greater<long>());
    const int slots = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int j = 1; j <= slots; ++j) {
        const long p = b[static_cast<std::size_t>(j - 1)] - (slots - j);
        if (p > 0) parts.push_back(static_cast<int>(p));
    }
    return Partition(std::move(parts));
}

// Murnaghan-Nakayama step: sum over border strips of length r removed from
// la, each with sign (-1)^(strip height). A strip removal is a bead move
// b -> b - r in the beta set; the height parity is the number of beads
// strictly between the two positions.
inline Int mn_rec(const Partition& la, const std::vector<int>& rho, std::size_t next) {
    if (next == rho.size()) return 1; // la is empty here: degrees matched
    const long r = rho[next];
    const int slots = la.length();
    const std::vector<long> beta = beta_set(la, slots);
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const long dst = beta[i] - r;
        if (dst < 0) continue;
        if (std::find(beta.begin(), beta.end(), dst) != beta.end()) continue;
        int crossed = 0;
        for (long x : beta)
            if (x > dst && x < beta[i]) ++crossed;
        std::vector<long> nb = beta;
        nb[i] = dst;
        const Int sub = mn_rec(partition_from_beta(std::move(nb)), rho, next + 1);
        total += (crossed % 2) ? -sub : sub;
    }
    return total;
}

} // namespace detail

// Irreducible character chi_la of S_n on the conjugacy class of cycle type
// rho, |la| = |rho| = n.
inline Int mn_character(const Partition& la, const Partition& rho) {
    if (la.degree() != rho.degree())
        throw degree_mismatch_error("mn_character: |la| = " + std::to_string(la.degree()) +
                                    " but |rho| = " + std::to_string(rho.degree()));
    return detail::mn_rec(la, rho.parts(), 0);
}

} // namespace gvtoric

#endif
