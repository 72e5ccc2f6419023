#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "barrier_cover/model.hpp"
#include "barrier_cover/search_result.hpp"

namespace barrier_cover {

// Round-trips a value through a 12-significant-digit decimal string, the
// serialization width of every emitted file; applying it before computing
// derived quantities keeps emit/reload/verify bit-stable.
inline double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json sensors = nlohmann::json::array();
    for (const auto& s : inst.sensors)
        sensors.push_back({{"x", round12(s.x)}, {"y", round12(s.y)}, {"r", round12(s.r)}});
    return {{"barrier_length", round12(inst.barrier_length)}, {"sensors", sensors}};
}

inline Instance instance_from_json(const nlohmann::json& j) {
    Instance inst;
    try {
        inst.barrier_length = j.at("barrier_length").get<double>();
        for (const auto& js : j.at("sensors")) {
            Sensor s;
            s.x = js.at("x").get<double>();
            s.y = js.at("y").get<double>();
            s.r = js.at("r").get<double>();
            inst.sensors.push_back(s);
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("instance: ") + e.what());
    }
    if (!std::isfinite(inst.barrier_length) || inst.barrier_length <= 0)
        throw MalformedInput("instance: barrier_length must be positive");
    for (const auto& s : inst.sensors) {
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.r))
            throw MalformedInput("instance: sensor coordinates must be finite");
        if (s.r <= 0) throw MalformedInput("instance: sensor radius must be positive");
    }
    return inst;
}

// Positions are rounded to the serialization width first and max_move is
// recomputed from the rounded values, so a reloaded file re-verifies to the
// identical number.
struct SolutionFile {
    double base_bound = 0;
    double reported_bound = 0;
    double max_move = 0;
    Solution solution;
};

inline SolutionFile make_solution_file(const Instance& inst, const Solution& sol,
                                       double base_bound, double reported_bound) {
    SolutionFile f;
    f.base_bound = round12(base_bound);
    f.reported_bound = round12(reported_bound);
    f.solution.positions.assign(sol.positions.size(), std::nullopt);
    for (std::size_t i = 0; i < sol.positions.size(); ++i)
        if (sol.positions[i]) f.solution.positions[i] = round12(*sol.positions[i]);
    f.max_move = f.solution.max_move(inst);
    return f;
}

inline nlohmann::json solution_to_json(const SolutionFile& f) {
    nlohmann::json positions = nlohmann::json::array();
    for (const auto& p : f.solution.positions) {
        if (p)
            positions.push_back(*p);
        else
            positions.push_back(nullptr);
    }
    return {{"base_D", f.base_bound},
            {"reported_D", f.reported_bound},
            {"max_move", f.max_move},
            {"positions", positions}};
}

inline SolutionFile solution_from_json(const nlohmann::json& j) {
    SolutionFile f;
    try {
        f.base_bound = j.at("base_D").get<double>();
        f.reported_bound = j.at("reported_D").get<double>();
        f.max_move = j.value("max_move", 0.0);
        for (const auto& jp : j.at("positions")) {
            if (jp.is_null())
                f.solution.positions.push_back(std::nullopt);
            else
                f.solution.positions.push_back(jp.get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("solution: ") + e.what());
    }
    return f;
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
    return j;
}

inline Instance load_instance(const std::string& path) {
    return instance_from_json(load_json(path));
}

inline SolutionFile load_solution(const std::string& path) {
    return solution_from_json(load_json(path));
}

inline void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace barrier_cover
