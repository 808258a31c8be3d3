#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include <gvtoric/gv.hpp>

using namespace gvtoric;

namespace {

std::vector<Int> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

// Summation side of the inversion pair: G(sigma, m) = sum_{n | sigma} alpha(n) ghat(sigma/n, nm).
QScalar summed(const std::function<QScalar(const CurveClass&, long)>& ghat,
               const std::function<Rational(long)>& alpha, const CurveClass& sigma, long m) {
    QScalar acc;
    for (long n : divisors(sigma.gcd_components()))
        acc += QScalar(alpha(n)) * ghat(sigma.divided(n), n * m);
    return acc;
}

} // namespace

TEST_CASE("moebius function and divisor lists") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<long>{1});
}

TEST_CASE("moebius delta identity") {
    for (long n = 1; n <= 10000; ++n) {
        long s = 0;
        for (long d : divisors(n)) s += moebius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("inversion recovers the summand") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> comp_d(1, 2), base_d(0, 4), mult_d(1, 12),
        num_d(-20, 20), den_d(1, 7);

    std::map<std::pair<std::vector<long>, long>, QScalar> memo;
    auto ghat = [&](const CurveClass& s, long m) -> QScalar {
        const auto key = std::make_pair(s.components(), m);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, QScalar(Rational(num_d(rng), den_d(rng)))).first;
        return it->second;
    };

    const std::function<Rational(long)> alpha_inv = [](long n) { return Rational(1, n); };
    const std::function<Rational(long)> alpha_one = [](long) { return Rational(1); };

    for (int trial = 0; trial < 1000; ++trial) {
        const int nc = comp_d(rng);
        std::vector<long> base(static_cast<std::size_t>(nc));
        long total = 0;
        for (long& b : base) {
            b = base_d(rng);
            total += b;
        }
        if (total == 0) base[0] = 1;
        const long mult = mult_d(rng);
        std::vector<long> scaled = base;
        for (long& b : scaled) b *= mult;
        const CurveClass sigma(scaled);
        const long m = 1 + trial % 3;

        for (const auto& alpha : {alpha_inv, alpha_one}) {
            const auto g = [&](const CurveClass& s, long mm) { return summed(ghat, alpha, s, mm); };
            CHECK(moebius_invert(g, alpha, sigma, m) == ghat(sigma, m));
        }
    }
}

TEST_CASE("inversion validates its inputs") {
    const auto g = [](const CurveClass&, long) { return QScalar(Rational(1)); };
    CHECK_THROWS_AS(moebius_invert(g, [](long n) { return Rational(n + 1); },
                                   CurveClass({2}), 1),
                    config_error); // not completely multiplicative
    CHECK_THROWS_AS(moebius_invert(g, [](long n) { return Rational(1, n); },
                                   CurveClass({0, 0}), 1),
                    config_error);
    // alpha identically zero is multiplicative and kills every term
    CHECK(moebius_invert(g, [](long) { return Rational(0); }, CurveClass({4}), 1).is_zero());
}

TEST_CASE("projective plane invariants") {
    const ToricDiagram p2 = builtin_diagram("p2");
    Workspace ws;
    CHECK(gv_polynomial(p2, CurveClass({1}), &ws).coeffs == ints({-3}));
    CHECK(gv_polynomial(p2, CurveClass({2}), &ws).coeffs == ints({6}));
    CHECK(gv_polynomial(p2, CurveClass({3}), &ws).coeffs == ints({-27, -10}));
    CHECK_THROWS_AS(gv_polynomial(p2, CurveClass({0}), &ws), config_error);
}

TEST_CASE("projective plane degree four matches the classical table") {
    const ToricDiagram p2 = builtin_diagram("p2");
    const GVPolynomial p = gv_polynomial(p2, CurveClass({4}));
    CHECK(p.coeffs == ints({192, 231, 102, 15}));
    CHECK(p.degree() == 3);
    CHECK(p.leading() == 15);
    // genus-zero invariant in the standard sign convention
    CHECK(sign_convert(p)[0] == -192);
}

TEST_CASE("hirzebruch tables") {
    const std::map<std::vector<long>, std::vector<long>> f0_expect{
        {{0, 1}, {2}}, {{0, 2}, {}}, {{0, 3}, {}},
        {{1, 0}, {2}}, {{1, 1}, {4}}, {{1, 2}, {6}},
        {{2, 0}, {}},  {{2, 1}, {6}}, {{3, 0}, {}}};
    const std::map<std::vector<long>, std::vector<long>> f1_expect{
        {{0, 1}, {2}}, {{0, 2}, {}},  {{0, 3}, {}},
        {{1, 0}, {-1}}, {{1, 1}, {-3}}, {{1, 2}, {-5}},
        {{2, 0}, {}},  {{2, 1}, {}},  {{3, 0}, {}}};

    for (const auto& [k, expect] :
         std::vector<std::pair<long, std::map<std::vector<long>, std::vector<long>>>>{
             {0, f0_expect}, {1, f1_expect}}) {
        const GVTable table = gv_table(builtin_diagram("fk", k), 3);
        REQUIRE(table.classes.size() == expect.size());
        for (const auto& [sigma, p] : table.classes) {
            const auto it = expect.find(sigma.components());
            REQUIRE(it != expect.end());
            CHECK(p.coeffs == ints(it->second));
        }
    }
}

TEST_CASE("sign conversion flips even genera") {
    CHECK(sign_convert(GVPolynomial{CurveClass({1}), ints({-3})}) == ints({3}));
    CHECK(sign_convert(GVPolynomial{CurveClass({2}), ints({6})}) == ints({-6}));
    CHECK(sign_convert(GVPolynomial{CurveClass({3}), ints({-27, -10})}) == ints({27, -10}));
    CHECK(sign_convert(GVPolynomial{CurveClass({1}), {}}).empty());
}

TEST_CASE("table reassembles the free energy") {
    const ToricDiagram p2 = builtin_diagram("p2");
    Workspace ws;
    const GVTable table = gv_table(p2, 3, &ws);
    for (const auto& [sigma, p] : table.classes)
        CHECK(gw_from_gv(table, sigma) == free_energy_coefficient(p2, sigma, &ws));

    CHECK(gw_from_gv(table, CurveClass({1})) ==
          QScalar(HalfLaurent(Rational(-3)), quantum_bracket(1) * quantum_bracket(1)));

    const ToricDiagram f1 = builtin_diagram("fk", 1);
    Workspace ws1;
    const GVTable t1 = gv_table(f1, 2, &ws1);
    for (const auto& [sigma, p] : t1.classes)
        CHECK(gw_from_gv(t1, sigma) == free_energy_coefficient(f1, sigma, &ws1));
}

TEST_CASE("reassembly needs every divisor class") {
    const GVTable table = gv_table(builtin_diagram("p2"), 1);
    CHECK_THROWS_AS(gw_from_gv(table, CurveClass({2})), config_error);
    CHECK_THROWS_AS(gw_from_gv(table, CurveClass({0})), config_error);
}

TEST_CASE("free energy multicover defect is p-integral") {
    // H_{p sigma} - (1/p) H_sigma(q^p) has p-integral coefficients.
    const ToricDiagram p2 = builtin_diagram("p2");
    Workspace ws;
    const CurveClass one({1});
    for (long p : {2L, 3L}) {
        const QScalar g = free_energy_coefficient(p2, CurveClass({p}), &ws) -
                          QScalar(Rational(1, p)) *
                              substitute_power(free_energy_coefficient(p2, one, &ws), p);
        if (g.is_zero()) continue;
        const auto d = g.num().decompose();
        CHECK(xi_valuation(d.content, Int(p)) >= 0);
    }
}

TEST_CASE("batch driver is schedule independent") {
    const ToricDiagram p2 = builtin_diagram("p2");
    const GVTable seq = gv_table(p2, 3, nullptr, 1);
    const GVTable par = gv_table(p2, 3, nullptr, 4);
    REQUIRE(seq.classes.size() == par.classes.size());
    for (const auto& [sigma, p] : seq.classes) {
        const auto it = par.classes.find(sigma);
        REQUIRE(it != par.classes.end());
        CHECK(it->second.coeffs == p.coeffs);
    }
    CHECK(seq.diagram_id == par.diagram_id);
    CHECK_THROWS_AS(gv_table(p2, 0), config_error);
}
