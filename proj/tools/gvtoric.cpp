// gvtoric: exact local Gopakumar-Vafa polynomials for toric surfaces.
//
// Subcommands:
//   compute   evaluate the GV table of a diagram up to a degree bound
//   verify    recompute a table and check it against closed-form expectations
//   selftest  run the exhaustive congruence sweeps and property suites

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gvtoric/gvtoric.hpp>

namespace {

using namespace gvtoric;

struct RunConfig {
    std::string surface;  // "p2" | "fk" | "" when --diagram used
    long k = 0;
    bool k_set = false;
    std::string diagram_path;
    long d_max = 1;
    std::string out_path;
    std::string format = "json";
    std::string cache_path;
    int jobs = 1;
    bool deep = false;
    std::string table_path; // verify diff mode
};

ToricDiagram resolve_diagram(const RunConfig& cfg) {
    if (!cfg.diagram_path.empty()) return load_diagram_file(cfg.diagram_path);
    if (cfg.surface.empty())
        throw config_error("one of --surface or --diagram is required");
    if (cfg.surface == "fk" && !cfg.k_set)
        throw config_error("--k is required with --surface fk");
    if (cfg.surface != "fk" && cfg.k_set)
        throw config_error("--k only applies to --surface fk");
    return builtin_diagram(cfg.surface, cfg.k);
}

void apply_cache_env(RunConfig& cfg) {
    if (const char* env = std::getenv("GVTORIC_CACHE"); env && *env) cfg.cache_path = env;
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::trunc | std::ios::binary);
    if (!out) throw config_error("cannot write output file: " + cfg.out_path);
    out << payload;
    if (!out) throw config_error("failed writing output file: " + cfg.out_path);
}

GVTable compute_table(const RunConfig& cfg, const ToricDiagram& D, Workspace& ws) {
    if (!cfg.cache_path.empty()) wcache_load(ws.wcache, cfg.cache_path);
    GVTable table = gv_table(D, cfg.d_max, &ws, cfg.jobs);
    if (!cfg.cache_path.empty()) wcache_save(ws.wcache, cfg.cache_path);
    return table;
}

int cmd_compute(const RunConfig& cfg) {
    const ToricDiagram D = resolve_diagram(cfg);
    Workspace ws;
    const GVTable table = compute_table(cfg, D, ws);
    emit(cfg, cfg.format == "csv" ? table_to_csv(table) : table_dump(table));
    return 0;
}

// Closed-form expectations for the built-in surfaces. For local P^2 the
// degree-d class has degree (d-1)(d-2)/2 and leading (-1)^d (d+1)(d+2)/2.
// For F_k the class (d,m) has degree A = (d-1)(m-1) - k d(d-1)/2 and leading
// L = (-1)^{dk} ((d+1)(m+1) - k d(d+1)/2); when that window is empty
// (A < 0 or L = 0) the polynomial is identically zero.
struct Expectation {
    bool zero = false;
    long degree = 0;
    Int leading;
};

std::optional<Expectation> expected_for(const RunConfig& cfg, const CurveClass& sigma) {
    if (cfg.surface == "p2") {
        const long d = sigma.components()[0];
        Expectation e;
        e.degree = (d - 1) * (d - 2) / 2;
        e.leading = Int((d + 1) * (d + 2) / 2);
        if (d % 2 != 0) e.leading = -e.leading;
        return e;
    }
    if (cfg.surface == "fk") {
        const long d = sigma.components()[0], m = sigma.components()[1], k = cfg.k;
        Expectation e;
        e.degree = (d - 1) * (m - 1) - k * d * (d - 1) / 2;
        e.leading = Int((d + 1) * (m + 1) - k * d * (d + 1) / 2);
        if ((d * k) % 2 != 0) e.leading = -e.leading;
        if (e.degree < 0 || e.leading == 0) e.zero = true;
        return e;
    }
    return std::nullopt; // custom diagram: no closed form to check against
}

int verify_against_expectations(const RunConfig& cfg, const ToricDiagram& D,
                                const GVTable& table, Workspace& ws) {
    long mismatches = 0;
    for (const auto& [sigma, p] : table.classes) {
        std::string line = "class " + sigma.to_string() + ":";
        bool ok = true;
        if (const auto exp = expected_for(cfg, sigma)) {
            if (exp->zero) {
                if (p.is_zero()) {
                    line += " zero as expected;";
                } else {
                    line += " MISMATCH expected zero polynomial;";
                    ok = false;
                }
            } else if (p.degree() != exp->degree) {
                line += " MISMATCH degree expected " + std::to_string(exp->degree) + " got " +
                        std::to_string(p.degree()) + ";";
                ok = false;
            } else if (p.leading() != exp->leading) {
                line += " MISMATCH leading expected " + exp->leading.str() + " got " +
                        p.leading().str() + ";";
                ok = false;
            } else {
                line += " degree " + std::to_string(p.degree()) + " leading " +
                        p.leading().str() + " ok;";
            }
        } else {
            line += " integer coefficients ok;";
        }
        if (gw_from_gv(table, sigma) == free_energy_coefficient(D, sigma, &ws)) {
            line += " gw roundtrip ok";
        } else {
            line += " MISMATCH gw roundtrip";
            ok = false;
        }
        if (!ok) ++mismatches;
        std::cout << line << "\n";
    }
    std::cout << "verify: " << table.classes.size() << " classes, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

int verify_table_file(const RunConfig& cfg) {
    std::ifstream in(cfg.table_path);
    if (!in) throw config_error("cannot open table file: " + cfg.table_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error("table file " + cfg.table_path + ": " + e.what());
    }
    const GVTable stored = parse_table_json(j);
    Workspace ws;
    RunConfig inner = cfg;
    inner.d_max = stored.d_max;
    const GVTable fresh = compute_table(inner, stored.diagram, ws);
    long mismatches = 0;
    for (const auto& [sigma, p] : fresh.classes) {
        const auto it = stored.classes.find(sigma);
        if (it == stored.classes.end()) {
            std::cout << "class " << sigma.to_string() << ": MISSING from table file\n";
            ++mismatches;
            continue;
        }
        if (it->second.coeffs != p.coeffs) {
            std::cout << "class " << sigma.to_string() << ": MISMATCH file "
                      << XPolynomial::from_integers(it->second.coeffs).to_string()
                      << " recomputed " << XPolynomial::from_integers(p.coeffs).to_string()
                      << "\n";
            ++mismatches;
        }
    }
    for (const auto& [sigma, p] : stored.classes)
        if (!fresh.classes.count(sigma)) {
            std::cout << "class " << sigma.to_string() << ": EXTRA in table file\n";
            ++mismatches;
        }
    std::cout << "verify: " << fresh.classes.size() << " classes, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    if (!cfg.table_path.empty()) return verify_table_file(cfg);
    const ToricDiagram D = resolve_diagram(cfg);
    Workspace ws;
    const GVTable table = compute_table(cfg, D, ws);
    return verify_against_expectations(cfg, D, table, ws);
}

// One JSON line per claim; exit 0 iff every claim passes.
struct ClaimSink {
    bool all_pass = true;

    void operator()(const std::string& claim, const std::string& ranges, bool pass,
                    long cases, const std::string& counterexample = "") {
        json line;
        line["claim"] = claim;
        line["ranges"] = ranges;
        line["pass"] = pass;
        line["cases"] = cases;
        if (!pass) line["counterexample"] = counterexample;
        std::cout << line.dump() << "\n";
        if (!pass) all_pass = false;
    }
};

void selftest_symmetry(ClaimSink& sink, int sum_max) {
    long cases = 0;
    bool pass = true;
    std::string counter;
    for (int s = 0; s <= sum_max && pass; ++s)
        for (int a = 0; a <= s && pass; ++a)
            for (const Partition& la : enumerate_partitions(a))
                for (const Partition& mu : enumerate_partitions(s - a)) {
                    ++cases;
                    const QScalar lhs = w_pair(transpose(la), transpose(mu));
                    QScalar rhs = invert_q(w_pair(la, mu));
                    if ((la.degree() + mu.degree()) % 2 != 0) rhs = -rhs;
                    if (lhs != rhs) {
                        pass = false;
                        counter = "la=" + la.to_string() + " mu=" + mu.to_string();
                        break;
                    }
                }
    sink("hopf_transpose_symmetry", "|la|+|mu|<=" + std::to_string(sum_max), pass, cases, counter);
}

void selftest_schur_consistency(ClaimSink& sink, int deg_max) {
    long cases = 0;
    bool pass = true;
    std::string counter;
    for (int d = 0; d <= deg_max && pass; ++d)
        for (const Partition& la : enumerate_partitions(d)) {
            ++cases;
            if (schur_principal(la) != schur_principal_hook(la)) {
                pass = false;
                counter = "la=" + la.to_string();
                break;
            }
        }
    sink("schur_determinant_vs_hook", "|la|<=" + std::to_string(deg_max), pass, cases, counter);
}

void selftest_amplitude_forms(ClaimSink& sink, int size_max) {
    const ToricDiagram D = builtin_diagram("p2");
    long cases = 0;
    bool pass = true;
    std::string counter;
    for (long d = 0; d <= size_max && pass; ++d) {
        const CurveClass sigma(std::vector<long>{d});
        for (const PartitionVector& rv : enumerate_vectors(D, sigma)) {
            ++cases;
            if (w_vector(rv, D) != w_vector_direct(rv, D)) {
                pass = false;
                counter = "sigma=" + sigma.to_string();
                break;
            }
        }
    }
    sink("amplitude_cyclic_vs_direct", "p2, ||R||<=" + std::to_string(size_max), pass, cases,
         counter);
}

void selftest_hook_identity(ClaimSink& sink, int deg_max) {
    long cases = 0;
    bool pass = true;
    std::string counter;
    for (int d = 0; d <= deg_max && pass; ++d)
        for (const Partition& la : enumerate_partitions(d)) {
            ++cases;
            const PartitionStats st = stats(la);
            long hook_sum = 0, n_sum = 0;
            for (int h : hooks(la)) hook_sum += h;
            for (int i = 0; i < la.length(); ++i) n_sum += static_cast<long>(i) * la.part(i);
            // sum h(x) - k/2 = 2 n(la) + |la|; k even; k flips sign under transpose
            const bool ok = hook_sum - st.k / 2 == 2 * n_sum + d && st.k % 2 == 0 &&
                            stats(transpose(la)).k == -st.k;
            if (!ok) {
                pass = false;
                counter = "la=" + la.to_string();
                break;
            }
        }
    sink("hook_identity_and_k", "|la|<=" + std::to_string(deg_max), pass, cases, counter);
}

void selftest_moebius_delta(ClaimSink& sink, long n_max) {
    long cases = 0;
    bool pass = true;
    std::string counter;
    for (long n = 1; n <= n_max; ++n) {
        ++cases;
        long s = 0;
        for (long d : divisors(n)) s += moebius(d);
        if (s != (n == 1 ? 1 : 0)) {
            pass = false;
            counter = "n=" + std::to_string(n);
            break;
        }
    }
    sink("moebius_delta", "n<=" + std::to_string(n_max), pass, cases, counter);
}

void selftest_cache_transparency(ClaimSink& sink) {
    const ToricDiagram D = builtin_diagram("p2");
    Workspace with_cache;
    long cases = 0;
    bool pass = true;
    std::string counter;
    for (long d = 1; d <= 2; ++d) {
        const CurveClass sigma(std::vector<long>{d});
        ++cases;
        const GVPolynomial a = gv_polynomial(D, sigma, &with_cache);
        const GVPolynomial b = gv_polynomial(D, sigma, nullptr);
        if (a.coeffs != b.coeffs) {
            pass = false;
            counter = "sigma=" + sigma.to_string();
            break;
        }
    }
    sink("cache_transparency", "p2, |sigma|<=2", pass, cases, counter);
}

int cmd_selftest(const RunConfig& cfg) {
    ClaimSink sink;
    const SweepBounds bounds = cfg.deep ? SweepBounds::deep() : SweepBounds::defaults();
    for (const CongruenceReport& rep : run_congruence_suite(bounds))
        sink(rep.claim, rep.ranges, rep.pass, rep.cases, rep.counterexample);
    selftest_symmetry(sink, cfg.deep ? 6 : 5);
    selftest_schur_consistency(sink, cfg.deep ? 6 : 5);
    selftest_amplitude_forms(sink, 2);
    selftest_hook_identity(sink, cfg.deep ? 12 : 8);
    selftest_moebius_delta(sink, cfg.deep ? 10000 : 1000);
    selftest_cache_transparency(sink);
    return sink.all_pass ? 0 : 1;
}

void add_diagram_flags(CLI::App* cmd, RunConfig& cfg) {
    auto* surface = cmd->add_option("--surface", cfg.surface, "Built-in surface: p2 or fk")
                        ->check(CLI::IsMember({"p2", "fk"}));
    auto* k = cmd->add_option("--k", cfg.k, "Hirzebruch index for --surface fk");
    auto* diagram = cmd->add_option("--diagram", cfg.diagram_path, "Custom diagram JSON file");
    diagram->excludes(surface);
    diagram->excludes(k);
    k->needs(surface);
}

void add_compute_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--dmax", cfg.d_max, "Largest total degree |sigma| to compute")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--cache", cfg.cache_path, "Hopf-link value cache file");
    cmd->add_option("--jobs", cfg.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gopakumar-Vafa polynomials for local toric surfaces"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* compute = app.add_subcommand("compute", "Compute a GV table");
    add_diagram_flags(compute, cfg);
    add_compute_flags(compute, cfg);

    CLI::App* verify = app.add_subcommand("verify", "Check a table against closed forms");
    add_diagram_flags(verify, cfg);
    verify->add_option("--dmax", cfg.d_max, "Largest total degree |sigma| to verify")
        ->check(CLI::PositiveNumber);
    verify->add_option("--cache", cfg.cache_path, "Hopf-link value cache file");
    verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--table", cfg.table_path, "Recompute and diff a stored table file");

    CLI::App* selftest = app.add_subcommand("selftest", "Run congruence and property suites");
    selftest->add_flag("--deep", cfg.deep, "Widen sweep bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.k_set = compute->count("--k") > 0 || verify->count("--k") > 0;
    apply_cache_env(cfg);

    try {
        if (compute->parsed()) return cmd_compute(cfg);
        if (verify->parsed()) {
            if (cfg.table_path.empty() && verify->count("--dmax") == 0)
                throw config_error("verify needs --dmax (or --table)");
            return cmd_verify(cfg);
        }
        return cmd_selftest(cfg);
    } catch (const integrality_violation& e) {
        std::cerr << "integrality violation: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
