#ifndef GVTORIC_IO_HPP
#define GVTORIC_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gv.hpp"

namespace gvtoric {

using json = nlohmann::ordered_json;

inline json diagram_to_json(const ToricDiagram& D) {
    json j;
    j["n_edges"] = D.n_edges;
    j["gamma"] = D.gamma;
    j["degree_matrix"] = D.degree_matrix;
    j["class_names"] = D.class_names;
    return j;
}

inline ToricDiagram diagram_from_json(const json& j) {
    ToricDiagram D;
    try {
        D.n_edges = j.at("n_edges").get<long>();
        D.gamma = j.at("gamma").get<std::vector<long>>();
        D.degree_matrix = j.at("degree_matrix").get<std::vector<std::vector<long>>>();
        D.class_names = j.at("class_names").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw config_error(std::string("diagram json: ") + e.what());
    }
    D.validate();
    return D;
}

inline ToricDiagram load_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open diagram file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error("diagram file " + path + ": " + e.what());
    }
    return diagram_from_json(j);
}

// [[exponent, "coefficient"], ...] ascending; coefficients as exact
// decimal strings ("a" or "a/b").
inline json half_laurent_to_json(const HalfLaurent& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.terms()) arr.push_back(json::array({e, c.str()}));
    return arr;
}

inline HalfLaurent half_laurent_from_json(const json& arr) {
    HalfLaurent f;
    try {
        for (const auto& term : arr) {
            const long e = term.at(0).get<long>();
            const Rational c(term.at(1).get<std::string>());
            f = f + HalfLaurent::monomial(e, c);
        }
    } catch (const json::exception& e) {
        throw config_error(std::string("half-laurent json: ") + e.what());
    }
    return f;
}

inline json table_to_json(const GVTable& table) {
    json j;
    json dj = diagram_to_json(table.diagram);
    dj["id"] = table.diagram_id;
    j["diagram"] = dj;
    j["d_max"] = table.d_max;
    json classes = json::array();
    for (const auto& [sigma, p] : table.classes) {
        json entry;
        entry["sigma"] = sigma.components();
        json pc = json::array(), ng = json::array();
        for (const Int& c : p.coeffs) pc.push_back(c.str());
        for (const Int& c : sign_convert(p)) ng.push_back(c.str());
        entry["p_coeffs"] = pc;
        entry["n_gv"] = ng;
        classes.push_back(entry);
    }
    j["classes"] = classes;
    return j;
}

inline std::string table_dump(const GVTable& table) { return table_to_json(table).dump(2) + "\n"; }

inline GVTable parse_table_json(const json& j) {
    GVTable table;
    try {
        table.diagram = diagram_from_json(j.at("diagram"));
        table.diagram_id = j.at("diagram").value("id", table.diagram.id());
        table.d_max = j.at("d_max").get<long>();
        for (const auto& entry : j.at("classes")) {
            CurveClass sigma(entry.at("sigma").get<std::vector<long>>());
            GVPolynomial p;
            p.sigma = sigma;
            for (const auto& s : entry.at("p_coeffs")) p.coeffs.push_back(Int(s.get<std::string>()));
            while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
            table.classes.emplace(sigma, p);
        }
    } catch (const json::exception& e) {
        throw config_error(std::string("table json: ") + e.what());
    }
    return table;
}

// Flat projection: sigma components, genus, Nhat^g, N^g; one row per
// retained coefficient, so an identically zero class contributes no rows.
inline std::string table_to_csv(const GVTable& table) {
    std::ostringstream os;
    for (const std::string& name : table.diagram.class_names) os << name << ",";
    os << "genus,n_hat,n\n";
    for (const auto& [sigma, p] : table.classes) {
        const std::vector<Int> n = sign_convert(p);
        for (std::size_t g = 0; g < p.coeffs.size(); ++g) {
            for (long v : sigma.components()) os << v << ",";
            os << g << "," << p.coeffs[g].str() << "," << n[g].str() << "\n";
        }
    }
    return os.str();
}

// Cache file: header line {"format","version"}, then one record per line,
// sorted by (lambda, mu). Loading tolerates duplicate records (first wins).
inline constexpr int wcache_version = 1;

inline void wcache_save(const WCache& cache, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw config_error("cannot write cache file: " + path);
    json header;
    header["format"] = "gvtoric-wcache";
    header["version"] = wcache_version;
    out << header.dump() << "\n";
    for (const auto& [key, value] : cache.snapshot()) {
        json rec;
        rec["lambda"] = key.first.parts();
        rec["mu"] = key.second.parts();
        rec["num"] = half_laurent_to_json(value.num());
        rec["den"] = half_laurent_to_json(value.den());
        out << rec.dump() << "\n";
    }
    if (!out) throw config_error("failed writing cache file: " + path);
}

inline std::size_t wcache_load(WCache& cache, const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0; // a missing cache is an empty cache
    std::string line;
    if (!std::getline(in, line)) return 0;
    try {
        const json header = json::parse(line);
        if (header.at("format").get<std::string>() != "gvtoric-wcache" ||
            header.at("version").get<int>() != wcache_version)
            throw config_error("cache file " + path + ": unsupported format or version");
    } catch (const json::exception& e) {
        throw config_error("cache file " + path + ": bad header: " + e.what());
    }
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const json rec = json::parse(line);
            const Partition la(rec.at("lambda").get<std::vector<int>>());
            const Partition mu(rec.at("mu").get<std::vector<int>>());
            const HalfLaurent num = half_laurent_from_json(rec.at("num"));
            const HalfLaurent den = half_laurent_from_json(rec.at("den"));
            cache.insert(la, mu, QScalar(num, den));
            ++count;
        } catch (const json::exception& e) {
            throw config_error("cache file " + path + ": bad record: " + e.what());
        }
    }
    return count;
}

} // namespace gvtoric

#endif
