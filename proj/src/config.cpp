#include "kirwan/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace kirwan {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where,
                    const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
    if (!j.is_object())
        throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ConfigError(where + ": unknown field \"" + key + "\"");
    }
    for (const auto& key : required)
        if (!j.contains(key))
            throw ConfigError(where + ": missing field \"" + key + "\"");
}

Rat parse_rat(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": expected an integer or a \"p/q\" string");
}

json rat_to_json(const Rat& r) { return r.str(); }

Weight parse_weight(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(where + ": expected a pair");
    return {parse_rat(j[0], where), parse_rat(j[1], where)};
}

json weight_to_json(const Weight& w) {
    return json::array({rat_to_json(w.x), rat_to_json(w.y)});
}

WeightSystem parse_weight_system(const json& j, const std::string& where) {
    require_object(j, where, {"gram", "weights"}, {"weights"});
    WeightSystem ws;
    if (j.contains("gram")) {
        const json& g = j["gram"];
        if (!g.is_array() || g.size() != 2 || !g[0].is_array() ||
            g[0].size() != 2 || !g[1].is_array() || g[1].size() != 2)
            throw ConfigError(where + ".gram: expected a 2x2 matrix");
        ws.gram.a = parse_rat(g[0][0], where + ".gram");
        ws.gram.b = parse_rat(g[0][1], where + ".gram");
        const Rat b2 = parse_rat(g[1][0], where + ".gram");
        ws.gram.d = parse_rat(g[1][1], where + ".gram");
        if (b2 != ws.gram.b)
            throw ConfigError(where + ".gram: matrix must be symmetric");
        if (!ws.gram.positive_definite())
            throw ConfigError(where + ".gram: matrix must be positive definite");
    }
    if (!j["weights"].is_array() || j["weights"].empty())
        throw ConfigError(where + ".weights: expected a nonempty list");
    for (const json& e : j["weights"]) {
        require_object(e, where + ".weights[]", {"label", "v", "multiplicity"},
                       {"v"});
        WeightEntry entry;
        entry.w = parse_weight(e["v"], where + ".weights[].v");
        entry.label = e.value("label", entry.w.str());
        entry.multiplicity = e.value("multiplicity", 1);
        if (entry.multiplicity < 1)
            throw ConfigError(where + ".weights[]: multiplicity must be >= 1");
        ws.weights.push_back(std::move(entry));
    }
    return ws;
}

json weight_system_to_json(const WeightSystem& ws) {
    json j;
    j["gram"] = json::array(
        {json::array({rat_to_json(ws.gram.a), rat_to_json(ws.gram.b)}),
         json::array({rat_to_json(ws.gram.b), rat_to_json(ws.gram.d)})});
    j["weights"] = json::array();
    for (const auto& e : ws.weights)
        j["weights"].push_back({{"label", e.label},
                                {"v", weight_to_json(e.w)},
                                {"multiplicity", e.multiplicity}});
    return j;
}

ChamberDesc parse_chamber(const json& j, const std::string& where) {
    if (!j.is_array()) throw ConfigError(where + ": expected a list");
    ChamberDesc c;
    for (const json& f : j) {
        const Weight l = parse_weight(f, where + "[]");
        c.halfspaces.push_back({l.x, l.y});
    }
    return c;
}

json chamber_to_json(const ChamberDesc& c) {
    json j = json::array();
    for (const auto& [p, q] : c.halfspaces)
        j.push_back(json::array({rat_to_json(p), rat_to_json(q)}));
    return j;
}

Mat2 parse_mat2(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
        j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
        throw ConfigError(where + ": expected a 2x2 matrix");
    return {parse_rat(j[0][0], where), parse_rat(j[0][1], where),
            parse_rat(j[1][0], where), parse_rat(j[1][1], where)};
}

GradedAction parse_action(const json& j, const std::string& where) {
    require_object(j, where, {"degrees", "elements"}, {"degrees", "elements"});
    GradedAction a;
    for (const json& d : j["degrees"]) a.generator_degrees.push_back(d);
    for (const json& m : j["elements"]) {
        std::vector<std::vector<Rat>> mat;
        for (const json& row : m) {
            std::vector<Rat> r;
            for (const json& v : row) r.push_back(parse_rat(v, where));
            mat.push_back(std::move(r));
        }
        a.elements.push_back(std::move(mat));
    }
    try {
        a.validate();
    } catch (const std::exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return a;
}

GroupDesc parse_group(const json& j, const std::string& where) {
    require_object(j, where,
                   {"name", "dim", "rank", "positive_roots", "classifying",
                    "pi0_order", "central_torus_rank", "weyl_gens",
                    "pi0_gens"},
                   {"name", "dim", "rank", "classifying"});
    GroupDesc g;
    g.name = j["name"];
    g.dim = j["dim"];
    g.rank = j["rank"];
    if (j.contains("positive_roots"))
        for (const json& r : j["positive_roots"])
            g.positive_roots.push_back(
                parse_weight(r, where + ".positive_roots[]"));
    g.classifying = parse_action(j["classifying"], where + ".classifying");
    g.pi0_order = j.value("pi0_order", 1);
    g.central_torus_rank = j.value("central_torus_rank", 0);
    if (j.contains("weyl_gens"))
        for (const json& m : j["weyl_gens"])
            g.weyl_gens.push_back(parse_mat2(m, where + ".weyl_gens[]"));
    if (j.contains("pi0_gens"))
        for (const json& m : j["pi0_gens"])
            g.pi0_gens.push_back(parse_mat2(m, where + ".pi0_gens[]"));
    return g;
}

BiForm parse_biform(const json& j, const std::string& where) {
    require_object(j, where, {"bidegree", "coefficients"},
                   {"bidegree", "coefficients"});
    BiForm f(j["bidegree"].get<int>());
    for (const auto& [key, value] : j["coefficients"].items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw ConfigError(where + ": coefficient key \"" + key +
                              "\" is not \"i,j\"");
        try {
            const int i = std::stoi(key.substr(0, comma));
            const int jj = std::stoi(key.substr(comma + 1));
            f.set(i, jj, parse_rat(value, where));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    return f;
}

json biform_to_json(const BiForm& f) {
    json coeffs = json::object();
    for (const auto& [ij, c] : f.coeffs())
        coeffs[std::to_string(ij.first) + "," + std::to_string(ij.second)] =
            rat_to_json(c);
    return {{"bidegree", f.bidegree()}, {"coefficients", coeffs}};
}

WeightMultiset parse_multiset(const json& j, const std::string& where) {
    WeightMultiset m;
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        try {
            m[std::stoi(key)] = value.get<int>();
        } catch (const std::exception& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    return m;
}

json multiset_to_json(const WeightMultiset& m) {
    json j = json::object();
    for (const auto& [w, mult] : m) j[std::to_string(w)] = mult;
    return j;
}

QPolynomial parse_poly(const json& j, const std::string& where) {
    QPolynomial p;
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        try {
            p.set(std::stoi(key), parse_rat(value, where));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    return p;
}

json poly_to_json(const QPolynomial& p) {
    json j = json::object();
    for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = rat_to_json(c);
    return j;
}

SeriesSpec parse_series_spec(const json& j, const std::string& where) {
    require_object(j, where,
                   {"kind", "group", "section", "section_group",
                    "center_group", "rank"},
                   {"kind"});
    SeriesSpec s;
    const std::string kind = j["kind"];
    if (kind == "classifying") {
        s.kind = SeriesSpec::Kind::Classifying;
        if (!j.contains("group"))
            throw ConfigError(where + ": classifying kind needs \"group\"");
        s.group = j["group"];
    } else if (kind == "blowup_of_section") {
        s.kind = SeriesSpec::Kind::BlowupOfSection;
        for (const char* key : {"section", "section_group", "center_group"})
            if (!j.contains(key))
                throw ConfigError(where + ": blowup kind needs \"" +
                                  std::string(key) + "\"");
        s.section = parse_weight_system(j["section"], where + ".section");
        s.section_group = j["section_group"];
        s.center_group = j["center_group"];
        s.rank = j.value("rank", 2);
    } else {
        throw ConfigError(where + ": unknown kind \"" + kind + "\"");
    }
    return s;
}

json series_spec_to_json(const SeriesSpec& s) {
    json j;
    if (s.kind == SeriesSpec::Kind::Classifying) {
        j["kind"] = "classifying";
        j["group"] = s.group;
    } else {
        j["kind"] = "blowup_of_section";
        j["section"] = weight_system_to_json(s.section);
        j["section_group"] = s.section_group;
        j["center_group"] = s.center_group;
        j["rank"] = s.rank;
    }
    return j;
}

CenterConfig parse_center(const json& j, const std::string& where) {
    require_object(j, where,
                   {"name", "r_group", "n_group", "z_dim", "z_series",
                    "base_point", "psg", "extras", "w", "extra_base",
                    "r_invariant_group", "fiber", "nested"},
                   {"name", "r_group", "n_group", "z_dim", "z_series",
                    "base_point", "psg", "w", "extra_base",
                    "r_invariant_group", "fiber"});
    CenterConfig c;
    c.name = j["name"];
    c.r_group = j["r_group"];
    c.n_group = j["n_group"];
    c.z_dim = j["z_dim"];
    c.z_series = parse_series_spec(j["z_series"], where + ".z_series");
    c.base_point = parse_biform(j["base_point"], where + ".base_point");
    if (!j["psg"].is_array() || j["psg"].size() != 2)
        throw ConfigError(where + ".psg: expected a pair of integers");
    c.psg = {j["psg"][0].get<int>(), j["psg"][1].get<int>()};
    if (j.contains("extras"))
        for (const json& e : j["extras"])
            c.extras.push_back(parse_biform(e, where + ".extras[]"));
    c.w = j["w"];
    c.extra_base = parse_series_spec(j["extra_base"], where + ".extra_base");
    c.r_invariant_group = j["r_invariant_group"];
    const std::string fiber = j["fiber"];
    if (fiber == "invariant_ip") {
        c.fiber = CenterConfig::Fiber::InvariantIp;
    } else if (fiber == "nested") {
        c.fiber = CenterConfig::Fiber::Nested;
        if (!j.contains("nested"))
            throw ConfigError(where + ": nested fiber needs \"nested\"");
        const json& n = j["nested"];
        require_object(n, where + ".nested", {"slice", "w", "b_poly"},
                       {"slice", "w", "b_poly"});
        c.nested.slice = parse_multiset(n["slice"], where + ".nested.slice");
        c.nested.w = n["w"];
        c.nested.b_poly = parse_poly(n["b_poly"], where + ".nested.b_poly");
    } else {
        throw ConfigError(where + ": unknown fiber kind \"" + fiber + "\"");
    }
    return c;
}

json center_to_json(const CenterConfig& c) {
    json j;
    j["name"] = c.name;
    j["r_group"] = c.r_group;
    j["n_group"] = c.n_group;
    j["z_dim"] = c.z_dim;
    j["z_series"] = series_spec_to_json(c.z_series);
    j["base_point"] = biform_to_json(c.base_point);
    j["psg"] = json::array({c.psg.a, c.psg.b});
    if (!c.extras.empty()) {
        j["extras"] = json::array();
        for (const auto& e : c.extras) j["extras"].push_back(biform_to_json(e));
    }
    j["w"] = c.w;
    j["extra_base"] = series_spec_to_json(c.extra_base);
    j["r_invariant_group"] = c.r_invariant_group;
    if (c.fiber == CenterConfig::Fiber::Nested) {
        j["fiber"] = "nested";
        j["nested"] = {{"slice", multiset_to_json(c.nested.slice)},
                       {"w", c.nested.w},
                       {"b_poly", poly_to_json(c.nested.b_poly)}};
    } else {
        j["fiber"] = "invariant_ip";
    }
    return j;
}

} // namespace

PipelineConfig parse_config(const json& j, GroupCatalog& catalog) {
    require_object(j, "config",
                   {"truncation_order", "group", "weight_system", "chamber",
                    "h_action_signs", "groups", "centers"},
                   {"group", "weight_system", "chamber"});
    PipelineConfig cfg;
    cfg.truncation_order = j.value("truncation_order", 19);
    if (cfg.truncation_order < 1)
        throw ConfigError("config.truncation_order: must be positive");
    if (j.contains("groups"))
        for (const json& g : j["groups"])
            catalog.add(parse_group(g, "config.groups[]"));
    cfg.group = j["group"];
    if (!catalog.has(cfg.group))
        throw ConfigError("config.group: unknown group \"" + cfg.group + "\"");
    cfg.ws = parse_weight_system(j["weight_system"], "config.weight_system");
    cfg.chamber = parse_chamber(j["chamber"], "config.chamber");
    if (j.contains("h_action_signs"))
        for (const json& s : j["h_action_signs"]) {
            const int v = s.get<int>();
            if (v != 1 && v != -1)
                throw ConfigError("config.h_action_signs: entries are +-1");
            cfg.h_signs.push_back(v);
        }
    if (j.contains("centers"))
        for (const json& c : j["centers"])
            cfg.centers.push_back(parse_center(c, "config.centers[]"));
    for (const auto& c : cfg.centers)
        for (const std::string& name :
             {c.r_group, c.n_group, c.r_invariant_group})
            if (!catalog.has(name))
                throw ConfigError("config.centers[]: unknown group \"" + name +
                                  "\"");
    return cfg;
}

PipelineConfig load_config_file(const std::string& path,
                                GroupCatalog& catalog) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    return parse_config(j, catalog);
}

nlohmann::json config_to_json(const PipelineConfig& cfg) {
    json j;
    j["truncation_order"] = cfg.truncation_order;
    j["group"] = cfg.group;
    j["weight_system"] = weight_system_to_json(cfg.ws);
    j["chamber"] = chamber_to_json(cfg.chamber);
    if (!cfg.h_signs.empty()) j["h_action_signs"] = cfg.h_signs;
    j["centers"] = json::array();
    for (const auto& c : cfg.centers) j["centers"].push_back(center_to_json(c));
    return j;
}

} // namespace kirwan
