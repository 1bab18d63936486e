#include "gptd/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gptd {

using nlohmann::json;

namespace {

json subset_to_array(const IndexSubset& subset) {
    json arr = json::array();
    for (int j : subset.elements()) arr.push_back(j);
    return arr;
}

IndexSubset subset_from_array(int n, const json& arr) {
    if (!arr.is_array()) throw std::runtime_error("subset must be an array of integers");
    std::vector<int> elements;
    for (const json& v : arr) {
        if (!v.is_number_integer()) throw std::runtime_error("subset entries must be integers");
        elements.push_back(v.get<int>());
    }
    return IndexSubset::from_elements(n, elements);
}

int ground_size_of(const json& j) {
    if (!j.contains("n") || !j.at("n").is_number_integer()) {
        throw std::runtime_error("system JSON needs an integer field \"n\"");
    }
    return j.at("n").get<int>();
}

}  // namespace

json system_to_json(const IndependenceSystem& system) {
    json sets = json::array();
    for (const IndexSubset& s : system.maximal_members()) sets.push_back(subset_to_array(s));
    return json{{"n", system.ground_size()}, {"maximal_independent", sets}};
}

IndependenceSystem system_from_json(const json& j) {
    const int n = ground_size_of(j);
    const bool has_members = j.contains("members");
    const bool has_maximal = j.contains("maximal_independent");
    if (has_members == has_maximal) {
        throw std::runtime_error(
            "system JSON needs exactly one of \"members\" or \"maximal_independent\"");
    }
    const json& sets = j.at(has_members ? "members" : "maximal_independent");
    if (!sets.is_array()) throw std::runtime_error("system sets must be an array");
    std::vector<IndexSubset> parsed;
    for (const json& s : sets) parsed.push_back(subset_from_array(n, s));
    return has_members ? IndependenceSystem::from_member_list(n, parsed)
                       : IndependenceSystem::from_maximal(n, parsed);
}

json space_to_json(const StateSpace& space, const Rat* eps) {
    json generators = json::array();
    for (int i = 0; i < space.generator_count(); ++i) {
        json coords = json::array();
        for (const Rat& c : space.generator(i).coords()) coords.push_back(c.str());
        json g{{"coords", coords}};
        const std::string& label = space.labels()[static_cast<std::size_t>(i)];
        if (!label.empty()) g["label"] = label;
        generators.push_back(std::move(g));
    }
    json out{{"n", space.dimension()}, {"generators", generators}};
    if (eps != nullptr) out["epsilon"] = eps->str();
    return out;
}

StateSpace space_from_json(const json& j) {
    const int n = ground_size_of(j);
    if (!j.contains("generators") || !j.at("generators").is_array()) {
        throw std::runtime_error("space JSON needs an array field \"generators\"");
    }
    std::vector<RPoint> generators;
    std::vector<std::string> labels;
    for (const json& g : j.at("generators")) {
        if (!g.contains("coords") || !g.at("coords").is_array()) {
            throw std::runtime_error("generator needs an array field \"coords\"");
        }
        std::vector<Rat> coords;
        for (const json& c : g.at("coords")) {
            if (!c.is_string()) {
                throw std::runtime_error("coordinates must be rational strings like \"-1/27\"");
            }
            coords.push_back(Rat::parse(c.get<std::string>()));
        }
        generators.emplace_back(std::move(coords));
        labels.push_back(g.value("label", std::string{}));
    }
    return StateSpace(n, std::move(generators), std::move(labels));
}

json measurement_to_json(const Measurement& measurement) {
    json matrix = json::array();
    for (const auto& row : measurement.rows()) {
        json r = json::array();
        for (const Rat& v : row) r.push_back(v.str());
        matrix.push_back(std::move(r));
    }
    return json{{"outcomes", measurement.outcomes()},
                {"dimension", measurement.dimension()},
                {"matrix", matrix}};
}

json report_to_json(const RealizationReport& report) {
    json subsets = json::array();
    for (const auto& [subset, verdict] : report.subsets) {
        subsets.push_back(json{{"set", subset_to_array(subset)},
                               {"expected", verdict.expected},
                               {"got", verdict.got},
                               {"lp_calls", verdict.lp_calls}});
    }
    return json{{"n", report.input_system.ground_size()},
                {"match", report.match},
                {"input_system", system_to_json(report.input_system)},
                {"realized_system", system_to_json(report.realized_system)},
                {"subsets", subsets},
                {"timings_ms", json{{"build", report.build_ms}, {"family", report.family_ms}}}};
}

json profile_to_json(const PeProfile& profile) {
    json rows = json::array();
    for (const PeProfileRow& row : profile.rows) {
        rows.push_back(json{{"set", subset_to_array(row.subset)},
                            {"value", row.value.str()},
                            {"value_approx", row.value.to_double()}});
    }
    json monotone = json::array();
    for (const auto& [small, big] : profile.monotone_violations) {
        monotone.push_back(json{{"subset", subset_to_array(small)},
                                {"superset", subset_to_array(big)}});
    }
    json lipschitz = json::array();
    for (const auto& [base, added] : profile.lipschitz_violations) {
        lipschitz.push_back(json{{"base", subset_to_array(base)}, {"added", added}});
    }
    return json{{"rows", rows},
                {"monotone_ok", profile.monotone_ok},
                {"lipschitz_ok", profile.lipschitz_ok},
                {"monotone_violations", monotone},
                {"lipschitz_violations", lipschitz}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

IndependenceSystem load_system(const std::string& path) {
    return system_from_json(load_json(path));
}

StateSpace load_space(const std::string& path) { return space_from_json(load_json(path)); }

}  // namespace gptd
