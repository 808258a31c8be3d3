#ifndef GVTORIC_GV_HPP
#define GVTORIC_GV_HPP

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "vertex.hpp"

namespace gvtoric {

// P_sigma(x) = sum_g Nhat^g_sigma x^g with integer coefficients; empty
// coefficient list = identically zero class contribution.
struct GVPolynomial {
    CurveClass sigma;
    std::vector<Int> coeffs; // ascending genus, trailing zeros trimmed

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    Int leading() const { return is_zero() ? Int(0) : coeffs.back(); }
};

struct GVTable {
    std::string diagram_id;
    ToricDiagram diagram;
    long d_max = 0;
    std::map<CurveClass, GVPolynomial> classes;
};

// Generalized Mobius inversion (divisors run over the class gcd):
//   f(Sigma, m) = sum_{n | Sigma} mu(n) alpha(n) g(Sigma/n, n m).
// alpha must be completely multiplicative; sampled pairs are checked.
inline QScalar moebius_invert(const std::function<QScalar(const CurveClass&, long)>& g,
                              const std::function<Rational(long)>& alpha,
                              const CurveClass& sigma, long m) {
    if (sigma.is_zero()) throw config_error("moebius_invert: sigma must be nonzero");
    static const std::pair<long, long> samples[] = {{1, 2}, {2, 3}, {2, 2}, {3, 4}, {5, 6}};
    for (const auto& [a, b] : samples)
        if (alpha(a) * alpha(b) != alpha(a * b))
            throw config_error("moebius_invert: alpha is not completely multiplicative");
    QScalar acc;
    for (long n : divisors(sigma.gcd_components())) {
        const int mu = moebius(n);
        if (mu == 0) continue;
        const Rational w = Rational(mu) * alpha(n);
        if (w == 0) continue;
        acc += QScalar(w) * g(sigma.divided(n), n * m);
    }
    return acc;
}

// P_sigma via the explicit formula
//   P_sigma([1]^2) = [1]^2 sum_{n | sigma} (mu(n)/n) H_{sigma/n}(q^n),
// where H is the free-energy coefficient; the result provably reduces to a
// Laurent polynomial in q, symmetric, with integer x-coefficients.
inline GVPolynomial gv_polynomial(const ToricDiagram& D, const CurveClass& sigma,
                                  Workspace* ws = nullptr) {
    if (sigma.is_zero()) throw config_error("gv_polynomial: sigma must be nonzero");
    QScalar acc;
    for (long n : divisors(sigma.gcd_components())) {
        const int mu = moebius(n);
        if (mu == 0) continue;
        const QScalar h = free_energy_coefficient(D, sigma.divided(n), ws);
        acc += QScalar(Rational(mu, n)) * substitute_power(h, n);
    }
    const HalfLaurent x = quantum_bracket(1) * quantum_bracket(1);
    const QScalar p = QScalar(x) * acc;
    try {
        const XPolynomial px = to_x_polynomial(p);
        return GVPolynomial{sigma, px.integer_coefficients()};
    } catch (const integrality_violation& e) {
        throw integrality_violation("gv_polynomial at class " + sigma.to_string() + ": " +
                                    e.what() + "; P(q) = " + p.to_string());
    } catch (const not_polynomial_error& e) {
        throw not_polynomial_error("gv_polynomial at class " + sigma.to_string() + ": " +
                                   e.what());
    } catch (const not_symmetric_error& e) {
        throw not_symmetric_error("gv_polynomial at class " + sigma.to_string() + ": " +
                                  e.what());
    }
}

namespace detail {

// All nonzero classes with |Sigma| <= d_max, ascending lexicographic.
inline std::vector<CurveClass> classes_up_to(const ToricDiagram& D, long d_max) {
    std::vector<CurveClass> out;
    const std::vector<long> bound(static_cast<std::size_t>(D.n_classes()), d_max);
    for (long d = 1; d <= d_max; ++d)
        for (const CurveClass& c : classes_of_degree(bound, d)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Batch driver: every nonzero class up to d_max, shared workspace, optional
// parallelism. Exact arithmetic makes the result schedule-independent.
inline GVTable gv_table(const ToricDiagram& D, long d_max, Workspace* ws = nullptr,
                        int jobs = 1) {
    if (d_max < 1) throw config_error("gv_table: d_max must be >= 1");
    D.validate();
    Workspace local;
    if (!ws) ws = &local;
    const std::vector<CurveClass> classes = detail::classes_up_to(D, d_max);
    std::vector<GVPolynomial> results(classes.size());
    std::exception_ptr failure;
    std::mutex failure_mu;
    if (jobs <= 1) {
        for (std::size_t i = 0; i < classes.size(); ++i)
            results[i] = gv_polynomial(D, classes[i], ws);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= classes.size()) return;
                try {
                    results[i] = gv_polynomial(D, classes[i], ws);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int n_threads = std::min<int>(jobs, static_cast<int>(classes.size()));
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    GVTable table;
    table.diagram_id = D.id();
    table.diagram = D;
    table.d_max = d_max;
    for (std::size_t i = 0; i < classes.size(); ++i) table.classes.emplace(classes[i], results[i]);
    return table;
}

// Reassemble the free-energy coefficient from the table:
//   sum_{n | sigma} (1/n) [n]^{-2} P_{sigma/n}([n]^2).
inline QScalar gw_from_gv(const GVTable& table, const CurveClass& sigma) {
    if (sigma.is_zero()) throw config_error("gw_from_gv: sigma must be nonzero");
    QScalar acc;
    for (long n : divisors(sigma.gcd_components())) {
        const CurveClass cls = sigma.divided(n);
        const auto it = table.classes.find(cls);
        if (it == table.classes.end())
            throw config_error("gw_from_gv: table missing divisor class " + cls.to_string());
        const GVPolynomial& p = it->second;
        if (p.is_zero()) continue;
        const HalfLaurent bn2 = quantum_bracket(n) * quantum_bracket(n);
        const XPolynomial px = XPolynomial::from_integers(p.coeffs);
        acc += QScalar(px.evaluated_at(bn2), bn2.scaled(Rational(n)));
    }
    return acc;
}

// N^g = (-1)^{g-1} Nhat^g.
inline std::vector<Int> sign_convert(const GVPolynomial& p) {
    std::vector<Int> out = p.coeffs;
    for (std::size_t g = 0; g < out.size(); ++g)
        if (g % 2 == 0) out[g] = -out[g];
    return out;
}

} // namespace gvtoric

#endif
