#ifndef GVTORIC_VERTEX_HPP
#define GVTORIC_VERTEX_HPP

#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "schur.hpp"

namespace gvtoric {

// One-loop toric diagram of a local surface: N edges in cyclic order, each
// carrying a framing (self-intersection) gamma_i and a row of the degree
// matrix A mapping edge multiplicities to curve classes.
struct ToricDiagram {
    int n_edges = 0;
    std::vector<long> gamma;
    std::vector<std::vector<long>> degree_matrix; // N rows x m columns
    std::vector<std::string> class_names;         // m labels

    int n_classes() const { return static_cast<int>(class_names.size()); }

    void validate() const {
        if (n_edges < 1) throw config_error("diagram: n_edges must be >= 1");
        if (static_cast<int>(gamma.size()) != n_edges)
            throw config_error("diagram: gamma must have one entry per edge");
        if (static_cast<int>(degree_matrix.size()) != n_edges)
            throw config_error("diagram: degree_matrix must have one row per edge");
        const int m = n_classes();
        if (m < 1) throw config_error("diagram: at least one class name required");
        for (const auto& row : degree_matrix) {
            if (static_cast<int>(row.size()) != m)
                throw config_error("diagram: degree_matrix rows must match class_names");
            bool nonzero = false;
            for (long a : row) {
                if (a < 0) throw config_error("diagram: degree_matrix entries must be >= 0");
                if (a > 0) nonzero = true;
            }
            if (!nonzero)
                throw config_error("diagram: every edge must contribute degree to some class");
        }
    }

    // Stable content hash (FNV-1a over the canonical field serialization).
    std::string id() const {
        std::string s = std::to_string(n_edges) + ";";
        for (long g : gamma) s += std::to_string(g) + ",";
        s += ";";
        for (const auto& row : degree_matrix) {
            for (long a : row) s += std::to_string(a) + ",";
            s += "|";
        }
        s += ";";
        for (const auto& n : class_names) s += n + ",";
        unsigned long long h = 14695981039346656037ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", h);
        return std::string(buf);
    }
};

// p2: the three toric lines of P^2, all self-intersection 1, one hyperplane
// class. fk: the Hirzebruch surface F_k with edges (fiber, section E,
// fiber, section E+kF), classes (d, m) = (sections, fibers + k * far
// section).
inline ToricDiagram builtin_diagram(const std::string& name, long k = 0) {
    ToricDiagram d;
    if (name == "p2") {
        d.n_edges = 3;
        d.gamma = {1, 1, 1};
        d.degree_matrix = {{1}, {1}, {1}};
        d.class_names = {"d"};
    } else if (name == "fk") {
        if (k < 0) throw config_error("builtin_diagram: fk requires k >= 0");
        d.n_edges = 4;
        d.gamma = {0, -k, 0, k};
        d.degree_matrix = {{0, 1}, {1, 0}, {0, 1}, {1, k}};
        d.class_names = {"d", "m"};
    } else {
        throw config_error("builtin_diagram: unknown name '" + name + "'");
    }
    d.validate();
    return d;
}

// Curve class: nonnegative integer vector in the diagram's class basis.
class CurveClass {
public:
    CurveClass() = default;
    explicit CurveClass(std::vector<long> c) : c_(std::move(c)) {
        for (long v : c_)
            if (v < 0) throw config_error("curve class components must be >= 0");
    }

    int size() const { return static_cast<int>(c_.size()); }
    long comp(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<long>& components() const { return c_; }

    long total() const { // |Sigma|
        long t = 0;
        for (long v : c_) t += v;
        return t;
    }

    bool is_zero() const { return total() == 0; }

    // n | Sigma means n divides every component; divisors of Sigma are the
    // divisors of this gcd.
    long gcd_components() const {
        long g = 0;
        for (long v : c_) g = std::gcd(g, v);
        return g;
    }

    CurveClass divided(long n) const {
        std::vector<long> r = c_;
        for (long& v : r) {
            if (v % n != 0) throw config_error("curve class not divisible by " + std::to_string(n));
            v /= n;
        }
        return CurveClass(std::move(r));
    }

    friend CurveClass operator-(const CurveClass& a, const CurveClass& b) {
        std::vector<long> r = a.c_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
        return CurveClass(std::move(r));
    }

    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    std::vector<long> c_;
};

// Edge coloring R-vec = (R^1, ..., R^N).
struct PartitionVector {
    std::vector<Partition> parts;

    int total_size() const { // ||R||
        int t = 0;
        for (const Partition& p : parts) t += p.degree();
        return t;
    }

    PartitionVector transposed() const {
        PartitionVector r;
        r.parts.reserve(parts.size());
        for (const Partition& p : parts) r.parts.push_back(transpose(p));
        return r;
    }
};

namespace detail {

// All degree vectors x >= 0 with x . A = sigma, lexicographically ascending.
inline void degree_vectors_rec(const ToricDiagram& D, const CurveClass& sigma, std::size_t edge,
                               std::vector<long>& acc, std::vector<long>& remaining,
                               std::vector<std::vector<long>>& out) {
    const int m = D.n_classes();
    if (edge == static_cast<std::size_t>(D.n_edges)) {
        for (long r : remaining)
            if (r != 0) return;
        out.push_back(acc);
        return;
    }
    const auto& row = D.degree_matrix[edge];
    long cap = -1; // max multiplicity this edge can carry
    for (int c = 0; c < m; ++c) {
        if (row[static_cast<std::size_t>(c)] == 0) continue;
        const long q = remaining[static_cast<std::size_t>(c)] / row[static_cast<std::size_t>(c)];
        cap = (cap < 0) ? q : std::min(cap, q);
    }
    for (long x = 0; x <= cap; ++x) {
        acc.push_back(x);
        bool ok = true;
        for (int c = 0; c < m; ++c) {
            remaining[static_cast<std::size_t>(c)] -= x * row[static_cast<std::size_t>(c)];
            if (remaining[static_cast<std::size_t>(c)] < 0) ok = false;
        }
        if (ok) degree_vectors_rec(D, sigma, edge + 1, acc, remaining, out);
        for (int c = 0; c < m; ++c)
            remaining[static_cast<std::size_t>(c)] += x * row[static_cast<std::size_t>(c)];
        acc.pop_back();
    }
}

} // namespace detail

// Every R-vec with degree vector |R-vec| . A = sigma: degree vectors in
// lexicographic order, then all partition choices per slot (last slot
// varies fastest) in enumerate_partitions order.
inline std::vector<PartitionVector> enumerate_vectors(const ToricDiagram& D,
                                                      const CurveClass& sigma) {
    if (sigma.size() != D.n_classes())
        throw config_error("enumerate_vectors: class vector size mismatch");
    std::vector<std::vector<long>> degs;
    std::vector<long> acc, remaining = sigma.components();
    detail::degree_vectors_rec(D, sigma, 0, acc, remaining, degs);
    std::vector<PartitionVector> out;
    for (const auto& dv : degs) {
        std::vector<std::vector<Partition>> choices;
        choices.reserve(dv.size());
        for (long d : dv) choices.push_back(enumerate_partitions(static_cast<int>(d)));
        std::vector<std::size_t> idx(dv.size(), 0);
        while (true) {
            PartitionVector pv;
            pv.parts.reserve(dv.size());
            for (std::size_t i = 0; i < dv.size(); ++i) pv.parts.push_back(choices[i][idx[i]]);
            out.push_back(std::move(pv));
            std::size_t i = dv.size();
            while (i-- > 0) {
                if (++idx[i] < choices[i].size()) break;
                idx[i] = 0;
                if (i == 0) goto next_degree_vector;
            }
            if (dv.empty()) break;
        }
    next_degree_vector:;
    }
    return out;
}

// Framing contribution of R-vec on D: (-1)^{sum gamma_i |R^i|} * v^{sum gamma_i k_{R^i}}.
namespace detail {
inline QScalar framing_factor(const PartitionVector& rv, const ToricDiagram& D) {
    long sign_exp = 0, v_exp = 0;
    for (int i = 0; i < D.n_edges; ++i) {
        const PartitionStats st = stats(rv.parts[static_cast<std::size_t>(i)]);
        sign_exp += D.gamma[static_cast<std::size_t>(i)] * st.degree;
        v_exp += D.gamma[static_cast<std::size_t>(i)] * st.k; // q^{k gamma / 2} = v^{k gamma}
    }
    QScalar f(HalfLaurent::monomial(v_exp, Rational(1)));
    if (sign_exp % 2 != 0) f = -f;
    return f;
}
} // namespace detail

// Amplitude W_{R-vec, gamma} as the cyclic product of Hopf-link values
// W_{R^1 R^2} W_{R^2 R^3} ... W_{R^N R^1} times the framing factor.
inline QScalar w_vector(const PartitionVector& rv, const ToricDiagram& D,
                        WCache* cache = nullptr) {
    if (static_cast<int>(rv.parts.size()) != D.n_edges)
        throw config_error("w_vector: partition vector length must equal n_edges");
    QScalar w = detail::framing_factor(rv, D);
    for (int i = 0; i < D.n_edges; ++i) {
        const Partition& cur = rv.parts[static_cast<std::size_t>(i)];
        const Partition& next = rv.parts[static_cast<std::size_t>((i + 1) % D.n_edges)];
        w *= w_pair(cur, next, cache);
    }
    return w;
}

// Same amplitude assembled from the flat evaluation
//   q^{-sum |R^i|} prod_i S_{R^i}(q^alpha) prod_i S_{R^{i+1}}(q^{R^i + alpha})
// with R^{N+1} = R^1; used as a cross-check of the cyclic product.
inline QScalar w_vector_direct(const PartitionVector& rv, const ToricDiagram& D) {
    if (static_cast<int>(rv.parts.size()) != D.n_edges)
        throw config_error("w_vector_direct: partition vector length must equal n_edges");
    QScalar w = detail::framing_factor(rv, D) *
                QScalar(HalfLaurent::monomial(-2L * rv.total_size(), Rational(1)));
    for (int i = 0; i < D.n_edges; ++i) {
        const Partition& cur = rv.parts[static_cast<std::size_t>(i)];
        const Partition& next = rv.parts[static_cast<std::size_t>((i + 1) % D.n_edges)];
        w *= schur_principal(cur);
        w *= schur_shifted(cur, next);
    }
    return w;
}

// Shared evaluation state for one diagram: the Hopf-link cache plus a memo
// of eta values keyed by curve class.
class Workspace {
public:
    WCache wcache;

    std::optional<QScalar> find_eta(const CurveClass& sigma) const {
        std::shared_lock lock(mu_);
        const auto it = eta_.find(sigma);
        if (it == eta_.end()) return std::nullopt;
        return it->second;
    }

    void insert_eta(const CurveClass& sigma, const QScalar& v) {
        std::unique_lock lock(mu_);
        eta_.emplace(sigma, v);
    }

private:
    std::map<CurveClass, QScalar> eta_;
    mutable std::shared_mutex mu_;
};

// <eta_{|sigma|}>_sigma: the e^{-omega . sigma} coefficient of the degree-
// |sigma| amplitude sum.
inline QScalar eta(const ToricDiagram& D, const CurveClass& sigma, Workspace* ws = nullptr) {
    if (sigma.is_zero()) throw config_error("eta: sigma must be nonzero");
    if (ws) {
        if (auto hit = ws->find_eta(sigma)) return *hit;
    }
    QScalar acc;
    for (const PartitionVector& rv : enumerate_vectors(D, sigma))
        acc += w_vector(rv, D, ws ? &ws->wcache : nullptr);
    if (ws) ws->insert_eta(sigma, acc);
    return acc;
}

namespace detail {

// Nonnegative class vectors c <= bound componentwise with |c| = total,
// lexicographic order.
inline void classes_of_degree_rec(const std::vector<long>& bound, long total, std::size_t i,
                                  std::vector<long>& acc, std::vector<CurveClass>& out) {
    if (i == bound.size()) {
        if (total == 0) out.push_back(CurveClass(acc));
        return;
    }
    // remaining components can absorb at most sum of their bounds
    long tail = 0;
    for (std::size_t j = i + 1; j < bound.size(); ++j) tail += bound[j];
    for (long v = std::max(0L, total - tail); v <= std::min(bound[i], total); ++v) {
        acc.push_back(v);
        classes_of_degree_rec(bound, total - v, i + 1, acc, out);
        acc.pop_back();
    }
}

inline std::vector<CurveClass> classes_of_degree(const std::vector<long>& bound, long total) {
    std::vector<CurveClass> out;
    std::vector<long> acc;
    classes_of_degree_rec(bound, total, 0, acc, out);
    return out;
}

} // namespace detail

// <eta_la>_sigma = sum over ordered decompositions sigma_1 + ... + sigma_l
// = sigma with |sigma_i| = la_i of prod_i <eta_{la_i}>_{sigma_i}.
inline QScalar eta_composition(const ToricDiagram& D, const Partition& la,
                               const CurveClass& sigma, Workspace* ws = nullptr) {
    if (la.empty()) return sigma.is_zero() ? QScalar(Rational(1)) : QScalar();
    std::function<QScalar(int, const CurveClass&)> go = [&](int idx,
                                                            const CurveClass& rem) -> QScalar {
        if (idx == la.length()) return rem.is_zero() ? QScalar(Rational(1)) : QScalar();
        QScalar acc;
        // |c| = la_idx >= 1, so every summand class is nonzero
        for (const CurveClass& c :
             detail::classes_of_degree(rem.components(), la.part(idx))) {
            const QScalar tail = go(idx + 1, rem - c);
            if (tail.is_zero()) continue;
            acc += eta(D, c, ws) * tail;
        }
        return acc;
    };
    return go(0, sigma);
}

// H_sigma = sum_{la |- |sigma|} theta_la <eta_la>_sigma; equals the
// free-energy coefficient of e^{-omega . sigma}.
inline QScalar free_energy_coefficient(const ToricDiagram& D, const CurveClass& sigma,
                                       Workspace* ws = nullptr) {
    if (sigma.is_zero()) throw config_error("free_energy_coefficient: sigma must be nonzero");
    QScalar acc;
    for (const Partition& la : enumerate_partitions(static_cast<int>(sigma.total()))) {
        const QScalar part = eta_composition(D, la, sigma, ws);
        if (part.is_zero()) continue;
        acc += QScalar(stats(la).theta) * part;
    }
    return acc;
}

} // namespace gvtoric

#endif
