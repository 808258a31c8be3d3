#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <gvtoric/gvtoric.hpp>

using namespace gvtoric;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + GVTORIC_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch_dir(const std::string& tag) {
    const fs::path dir =
        fs::temp_directory_path() / ("gvtoric_test_" + std::to_string(getpid()) + "_" + tag);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
    REQUIRE(out.good());
}

} // namespace

TEST_CASE("diagram json round trip") {
    const ToricDiagram f2 = builtin_diagram("fk", 2);
    const ToricDiagram back = diagram_from_json(diagram_to_json(f2));
    CHECK(back.n_edges == f2.n_edges);
    CHECK(back.gamma == f2.gamma);
    CHECK(back.degree_matrix == f2.degree_matrix);
    CHECK(back.class_names == f2.class_names);
    CHECK(back.id() == f2.id());

    CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"n_edges": 1})")), config_error);
    // structurally valid json, invalid diagram
    json j = diagram_to_json(f2);
    j["gamma"] = std::vector<long>{1};
    CHECK_THROWS_AS(diagram_from_json(j), config_error);
}

TEST_CASE("laurent polynomial json round trip") {
    HalfLaurent f = HalfLaurent::monomial(-3, Rational(5, 7)) + HalfLaurent::monomial(2, -4) +
                    HalfLaurent::monomial(0, Rational(1, 2));
    CHECK(half_laurent_from_json(half_laurent_to_json(f)) == f);
    CHECK(half_laurent_from_json(half_laurent_to_json(HalfLaurent())) == HalfLaurent());
    CHECK_THROWS_AS(half_laurent_from_json(json::parse(R"([["a", 1]])")), config_error);
}

TEST_CASE("table json schema") {
    const GVTable t = gv_table(builtin_diagram("p2"), 2);
    const json j = table_to_json(t);

    CHECK(j.at("diagram").at("id").get<std::string>() == t.diagram_id);
    CHECK(j.at("diagram").at("class_names").get<std::vector<std::string>>() ==
          std::vector<std::string>{"d"});
    CHECK(j.at("d_max").get<long>() == 2);
    REQUIRE(j.at("classes").size() == 2);
    CHECK(j.at("classes")[0].at("sigma").get<std::vector<long>>() == std::vector<long>{1});
    CHECK(j.at("classes")[0].at("p_coeffs").get<std::vector<std::string>>() ==
          std::vector<std::string>{"-3"});
    CHECK(j.at("classes")[0].at("n_gv").get<std::vector<std::string>>() ==
          std::vector<std::string>{"3"});
    CHECK(j.at("classes")[1].at("sigma").get<std::vector<long>>() == std::vector<long>{2});
    CHECK(j.at("classes")[1].at("p_coeffs").get<std::vector<std::string>>() ==
          std::vector<std::string>{"6"});

    const GVTable back = parse_table_json(j);
    CHECK(back.diagram_id == t.diagram_id);
    CHECK(back.d_max == t.d_max);
    REQUIRE(back.classes.size() == t.classes.size());
    for (const auto& [sigma, p] : t.classes) CHECK(back.classes.at(sigma).coeffs == p.coeffs);

    // stored trailing zeros are trimmed on load
    json padded = j;
    padded["classes"][0]["p_coeffs"].push_back("0");
    CHECK(parse_table_json(padded).classes.at(CurveClass({1})).coeffs == t.classes.at(CurveClass({1})).coeffs);

    CHECK_THROWS_AS(parse_table_json(json::parse(R"({"classes": []})")), config_error);
}

TEST_CASE("csv projection") {
    CHECK(table_to_csv(gv_table(builtin_diagram("p2"), 2)) ==
          "d,genus,n_hat,n\n"
          "1,0,-3,3\n"
          "2,0,6,-6\n");

    // zero classes contribute no rows
    const std::string csv = table_to_csv(gv_table(builtin_diagram("fk", 1), 2));
    CHECK(csv.find("2,0,") == std::string::npos);
    CHECK(csv.substr(0, 15) == "d,m,genus,n_hat");
}

TEST_CASE("hopf cache file round trip") {
    const fs::path dir = scratch_dir("cache");
    const fs::path file = dir / "w.jsonl";

    WCache cache;
    for (int dl = 0; dl <= 2; ++dl)
        for (const Partition& la : enumerate_partitions(dl))
            for (const Partition& mu : enumerate_partitions(2 - dl)) w_pair(la, mu, &cache);
    cache.insert(Partition({5}), Partition{}, QScalar(Rational(22, 7)));

    wcache_save(cache, file.string());
    WCache loaded;
    CHECK(wcache_load(loaded, file.string()) == cache.size());
    CHECK(loaded.size() == cache.size());
    for (const auto& [key, value] : cache.snapshot()) {
        const auto hit = loaded.find(key.first, key.second);
        REQUIRE(hit.has_value());
        CHECK(*hit == value);
    }

    WCache empty;
    CHECK(wcache_load(empty, (dir / "absent.jsonl").string()) == 0);
    CHECK(empty.size() == 0);

    fs::remove_all(dir);
}

TEST_CASE("hopf cache file validation") {
    const fs::path dir = scratch_dir("cache_bad");

    const fs::path bad_header = dir / "bad_header.jsonl";
    spit(bad_header, "{\"format\":\"bogus\",\"version\":1}\n");
    WCache c1;
    CHECK_THROWS_AS(wcache_load(c1, bad_header.string()), config_error);

    const fs::path garbage = dir / "garbage.jsonl";
    spit(garbage, "not json at all\n");
    WCache c2;
    CHECK_THROWS_AS(wcache_load(c2, garbage.string()), config_error);

    const fs::path bad_record = dir / "bad_record.jsonl";
    spit(bad_record, "{\"format\":\"gvtoric-wcache\",\"version\":1}\n{\"lambda\":[1]}\n");
    WCache c3;
    CHECK_THROWS_AS(wcache_load(c3, bad_record.string()), config_error);

    // duplicate records: the first one wins
    const fs::path dup = dir / "dup.jsonl";
    spit(dup,
         "{\"format\":\"gvtoric-wcache\",\"version\":1}\n"
         "{\"lambda\":[1],\"mu\":[],\"num\":[[0,\"7\"]],\"den\":[[0,\"1\"]]}\n"
         "{\"lambda\":[1],\"mu\":[],\"num\":[[0,\"9\"]],\"den\":[[0,\"1\"]]}\n");
    WCache c4;
    CHECK(wcache_load(c4, dup.string()) == 2);
    const auto hit = c4.find(Partition({1}), Partition{});
    REQUIRE(hit.has_value());
    CHECK(*hit == QScalar(Rational(7)));

    fs::remove_all(dir);
}

TEST_CASE("cli compute") {
    const RunResult r = run_cli("compute --surface p2 --dmax 2");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("classes")[0].at("p_coeffs").get<std::vector<std::string>>() ==
          std::vector<std::string>{"-3"});
    CHECK(j.at("classes")[1].at("p_coeffs").get<std::vector<std::string>>() ==
          std::vector<std::string>{"6"});

    const RunResult csv = run_cli("compute --surface p2 --dmax 2 --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "d,genus,n_hat,n\n1,0,-3,3\n2,0,6,-6\n");
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("compute --help").code == 0);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("compute --surface p3 --dmax 1").code == 2);
    CHECK(run_cli("compute --surface p2 --dmax 0").code == 2);
    CHECK(run_cli("compute --surface fk --dmax 1").code == 2); // k required
    CHECK(run_cli("compute --surface p2 --k 1 --dmax 1").code == 2);
    CHECK(run_cli("compute --diagram /no/such/file.json --dmax 1").code == 2);
    CHECK(run_cli("verify --surface p2").code == 2); // needs --dmax or --table
}

TEST_CASE("cli custom diagram file matches the builtin") {
    const fs::path dir = scratch_dir("diagram");
    const fs::path file = dir / "p2.json";
    spit(file, diagram_to_json(builtin_diagram("p2")).dump() + "\n");

    const RunResult builtin = run_cli("compute --surface p2 --dmax 2");
    const RunResult custom = run_cli("compute --diagram '" + file.string() + "' --dmax 2");
    REQUIRE(custom.code == 0);
    CHECK(custom.out == builtin.out);

    fs::remove_all(dir);
}

TEST_CASE("cli output is byte deterministic") {
    const fs::path dir = scratch_dir("determinism");
    const std::string cache = (dir / "w.jsonl").string();

    const RunResult a = run_cli("compute --surface fk --k 1 --dmax 2 --jobs 1");
    const RunResult b = run_cli("compute --surface fk --k 1 --dmax 2 --jobs 8");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);

    const RunResult cold = run_cli("compute --surface fk --k 1 --dmax 2 --cache '" + cache + "'");
    REQUIRE(cold.code == 0);
    REQUIRE(fs::exists(cache));
    const std::string cache_after_cold = slurp(cache);
    const RunResult warm = run_cli("compute --surface fk --k 1 --dmax 2 --cache '" + cache + "'");
    REQUIRE(warm.code == 0);
    CHECK(cold.out == a.out);
    CHECK(warm.out == a.out);
    CHECK(slurp(cache) == cache_after_cold);

    fs::remove_all(dir);
}

TEST_CASE("cli verify") {
    CHECK(run_cli("verify --surface p2 --dmax 2").code == 0);

    const fs::path dir = scratch_dir("verify");
    const fs::path table = dir / "t.json";
    REQUIRE(run_cli("compute --surface p2 --dmax 2 --out '" + table.string() + "'").code == 0);
    CHECK(run_cli("verify --table '" + table.string() + "'").code == 0);

    // corrupt one stored coefficient
    std::string text = slurp(table);
    const auto pos = text.find("\"6\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"7\"");
    spit(table, text);
    const RunResult bad = run_cli("verify --table '" + table.string() + "'");
    CHECK(bad.code == 1);

    fs::remove_all(dir);
}

TEST_CASE("cli selftest reports the harmonic counterexample honestly") {
    const RunResult r = run_cli("selftest");
    CHECK(r.code == 1);

    std::istringstream lines(r.out);
    std::string line;
    int claims = 0, failures = 0;
    bool saw_harmonic = false;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        ++claims;
        if (j.at("claim").get<std::string>() == "harmonic_valuation") {
            saw_harmonic = true;
            CHECK_FALSE(j.at("pass").get<bool>());
            CHECK(j.at("counterexample").get<std::string>() == "p=2 r=1 b=1");
        } else {
            INFO(line);
            CHECK(j.at("pass").get<bool>());
        }
        failures += !j.at("pass").get<bool>();
    }
    CHECK(saw_harmonic);
    CHECK(claims == 13);
    CHECK(failures == 1);
}
