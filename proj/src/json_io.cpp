#include "pk/json_io.hpp"

#include "pk/parser.hpp"

namespace pk {

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw error(std::string(what) + ": unknown key '" + key + "'");
    }
}

std::pair<int, int> parse_pair(const std::string& key, const char* what) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw error(std::string(what) + ": bad index pair '" + key + "'");
    try {
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        throw error(std::string(what) + ": bad index pair '" + key + "'");
    }
}

}  // namespace

PoissonStructure structure_from_json(const json& j) {
    if (!j.is_object()) throw error("structure: expected a JSON object");
    reject_unknown_keys(j, {"vars", "bivector"}, "structure");
    if (!j.contains("vars") || !j.at("vars").is_array())
        throw error("structure: missing or malformed 'vars'");
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) {
        if (!v.is_string()) throw error("structure: variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    RingPtr ring = make_ring(vars);
    std::map<std::pair<int, int>, Polynomial> entries;
    if (j.contains("bivector")) {
        if (!j.at("bivector").is_object()) throw error("structure: 'bivector' must be an object");
        for (const auto& [key, value] : j.at("bivector").items()) {
            auto [i1, j1] = parse_pair(key, "structure bivector");
            if (!value.is_string()) throw error("structure: bivector entries must be strings");
            // 1-based in the file, 0-based internally
            entries.emplace(std::make_pair(i1 - 1, j1 - 1), parse_poly(value.get<std::string>(), ring));
        }
    }
    return PoissonStructure(ring, std::move(entries));
}

json structure_to_json(const PoissonStructure& P) {
    json j;
    j["vars"] = P.ring()->vars();
    json biv = json::object();
    for (const auto& [ij, p] : P.upper_entries())
        biv[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = p.str();
    j["bivector"] = biv;
    return j;
}

KForm form_from_json(const json& j, const RingPtr& ring) {
    if (!j.is_object()) throw error("form: expected a JSON object");
    reject_unknown_keys(j, {"k", "coeffs"}, "form");
    if (!j.contains("k") || !j.at("k").is_number_integer()) throw error("form: missing arity 'k'");
    KForm w(ring, j.at("k").get<int>());
    if (j.contains("coeffs")) {
        for (const auto& [key, value] : j.at("coeffs").items()) {
            IndexTuple t;
            if (!key.empty()) {
                std::size_t start = 0;
                while (start <= key.size()) {
                    auto comma = key.find(',', start);
                    std::string part =
                        key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                    try {
                        t.push_back(std::stoi(part));
                    } catch (const std::exception&) {
                        throw error("form: bad index tuple '" + key + "'");
                    }
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            if (!value.is_string()) throw error("form: coefficients must be strings");
            w.add(t, parse_poly(value.get<std::string>(), ring));
        }
    }
    return w;
}

json form_to_json(const KForm& w) {
    json j;
    j["k"] = w.arity();
    json coeffs = json::object();
    for (const auto& [t, p] : w.coeffs()) {
        std::string key;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(t[i]);
        }
        coeffs[key] = p.str();
    }
    j["coeffs"] = coeffs;
    return j;
}

RankOneConnection connection_from_json(const json& j, const RingPtr& ring) {
    if (!j.is_object()) throw error("connection: expected a JSON object");
    reject_unknown_keys(j, {"theta", "mode"}, "connection");
    if (!j.contains("theta")) throw error("connection: missing 'theta'");
    KForm theta = form_from_json(j.at("theta"), ring);
    std::string mode = j.value("mode", "real");
    if (mode != "real" && mode != "imaginary")
        throw error("connection: mode must be 'real' or 'imaginary'");
    return RankOneConnection(theta,
                             mode == "real" ? ConnectionMode::real : ConnectionMode::imaginary);
}

json connection_to_json(const RankOneConnection& c) {
    json j;
    j["theta"] = form_to_json(c.theta);
    j["mode"] = c.mode == ConnectionMode::real ? "real" : "imaginary";
    return j;
}

json dim_table_to_json(const DimTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"k", r.k}, {"d", r.d}, {"z", r.z}, {"b", r.b}, {"h", r.h}});
    json j;
    j["truncated"] = t.truncated;
    j["rows"] = rows;
    return j;
}

}  // namespace pk
