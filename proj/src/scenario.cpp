#include "sdnlb/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sdnlb {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ScenarioMissingFieldError(where + ": missing field '" + key + "'");
    return *it;
}

double require_number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number())
        throw ScenarioMissingFieldError(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number())
        throw ScenarioMissingFieldError(where + ": field '" + key + "' must be a number");
    return it->get<double>();
}

void check(bool ok, const std::string& message) {
    if (!ok) throw ScenarioValueError(message);
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioParseError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ScenarioParseError(origin + ": top level must be an object");

    Scenario sc;
    sc.version = static_cast<int>(require_number(doc, "version", origin));
    check(sc.version == 1, origin + ": unsupported scenario version " +
                               std::to_string(sc.version));
    sc.name = doc.value("name", std::string{});
    sc.rounds = static_cast<int>(require_number(doc, "rounds", origin));
    check(sc.rounds >= 1, origin + ": rounds must be >= 1");
    sc.seed = static_cast<std::uint64_t>(number_or(doc, "seed", 0.0, origin));
    sc.trigger_threshold = number_or(doc, "trigger_threshold", 0.3, origin);
    check(sc.trigger_threshold >= 0.0, origin + ": trigger_threshold must be >= 0");

    // Controllers.
    const json& ctrls = require(doc, "controllers", origin);
    if (!ctrls.is_array() || ctrls.empty())
        throw ScenarioMissingFieldError(origin + ": 'controllers' must be a non-empty array");
    std::set<ControllerId> controller_ids;
    for (std::size_t i = 0; i < ctrls.size(); ++i) {
        std::string where = origin + ": controllers[" + std::to_string(i) + "]";
        ControllerId id = static_cast<ControllerId>(require_number(ctrls[i], "id", where));
        double capacity = require_number(ctrls[i], "capacity", where);
        check(capacity > 0.0, where + ": capacity must be > 0");
        check(controller_ids.insert(id).second, where + ": duplicate controller id");
        sc.controllers.push_back({id, capacity, {}});
    }

    // Switches and their owners.
    const json& sws = require(doc, "switches", origin);
    if (!sws.is_array() || sws.empty())
        throw ScenarioMissingFieldError(origin + ": 'switches' must be a non-empty array");
    std::set<SwitchId> switch_ids;
    for (std::size_t i = 0; i < sws.size(); ++i) {
        std::string where = origin + ": switches[" + std::to_string(i) + "]";
        SwitchId id = static_cast<SwitchId>(require_number(sws[i], "id", where));
        ControllerId owner = static_cast<ControllerId>(require_number(sws[i], "owner", where));
        check(switch_ids.insert(id).second, where + ": duplicate switch id");
        if (!controller_ids.count(owner))
            throw ScenarioDanglingIdError(where + ": owner " + std::to_string(owner) +
                                          " is not a defined controller");
        sc.switches.push_back({id, 0.0});
        for (auto& c : sc.controllers)
            if (c.id == owner) c.switches.insert(id);
    }

    // Dense hop matrix, rows following the switches array.
    const json& hops = require(doc, "hops", origin);
    if (!hops.is_array() || hops.size() != sc.switches.size())
        throw ScenarioHopMatrixError(origin + ": 'hops' must have one row per switch (" +
                                     std::to_string(sc.switches.size()) + " rows)");
    for (std::size_t i = 0; i < hops.size(); ++i) {
        std::string where = origin + ": hops[" + std::to_string(i) + "]";
        if (!hops[i].is_array() || hops[i].size() != sc.controllers.size())
            throw ScenarioHopMatrixError(where + ": row must have one entry per controller (" +
                                         std::to_string(sc.controllers.size()) + ")");
        std::vector<int> row;
        for (const auto& h : hops[i]) {
            if (!h.is_number() || h.get<double>() < 1.0)
                throw ScenarioHopMatrixError(where + ": hop counts must be numbers >= 1");
            row.push_back(h.get<int>());
        }
        sc.hops.push_back(std::move(row));
    }

    // Traffic profiles.
    const json& traffic = require(doc, "traffic", origin);
    if (!traffic.is_array())
        throw ScenarioMissingFieldError(origin + ": 'traffic' must be an array");
    std::set<SwitchId> profiled;
    for (std::size_t i = 0; i < traffic.size(); ++i) {
        std::string where = origin + ": traffic[" + std::to_string(i) + "]";
        TrafficProfile p;
        p.sw = static_cast<SwitchId>(require_number(traffic[i], "switch", where));
        if (!switch_ids.count(p.sw))
            throw ScenarioDanglingIdError(where + ": switch " + std::to_string(p.sw) +
                                          " is not defined");
        check(profiled.insert(p.sw).second, where + ": duplicate profile for this switch");
        const json& bps = require(traffic[i], "breakpoints", where);
        if (!bps.is_array() || bps.empty())
            throw ScenarioMissingFieldError(where + ": 'breakpoints' must be a non-empty array");
        int prev_round = -1;
        for (const auto& bp : bps) {
            if (!bp.is_array() || bp.size() != 2 || !bp[0].is_number() || !bp[1].is_number())
                throw ScenarioMissingFieldError(where + ": breakpoints are [round, rate] pairs");
            RatePoint pt{bp[0].get<int>(), bp[1].get<double>()};
            check(pt.rate >= 0.0, where + ": rates must be >= 0");
            check(pt.round > prev_round, where + ": breakpoint rounds must strictly increase");
            prev_round = pt.round;
            p.breakpoints.push_back(pt);
        }
        check(p.breakpoints.front().round == 0, where + ": first breakpoint must be round 0");
        if (auto it = traffic[i].find("jitter"); it != traffic[i].end()) {
            std::string jwhere = where + ".jitter";
            JitterSpec js;
            js.amplitude = require_number(*it, "amplitude", jwhere);
            check(js.amplitude >= 0.0 && js.amplitude < 1.0,
                  jwhere + ": amplitude must be in [0, 1)");
            js.seed = static_cast<std::uint64_t>(number_or(*it, "seed", 0.0, jwhere));
            p.jitter = js;
        }
        sc.traffic.push_back(std::move(p));
    }

    // Cost model.
    if (auto it = doc.find("cost_model"); it != doc.end()) {
        std::string where = origin + ": cost_model";
        sc.cost_model.per_switch_base = number_or(*it, "per_switch_base", 1.0, where);
        sc.cost_model.per_hop = number_or(*it, "per_hop", 1.0, where);
        sc.cost_model.sync_penalty = number_or(*it, "sync_penalty", 1.0, where);
        check(sc.cost_model.per_switch_base >= 0.0 && sc.cost_model.per_hop >= 0.0 &&
                  sc.cost_model.sync_penalty >= 0.0,
              where + ": components must be >= 0");
        check(sc.cost_model.per_switch_base + sc.cost_model.per_hop +
                      sc.cost_model.sync_penalty > 0.0,
              where + ": at least one component must be positive");
    }

    // Delay model.
    if (auto it = doc.find("delay_model"); it != doc.end()) {
        std::string where = origin + ": delay_model";
        sc.delay_model.base_service_time = number_or(*it, "base_service_time", 1.0, where);
        sc.delay_model.epsilon = number_or(*it, "epsilon", 0.05, where);
        sc.delay_model.saturation_delay = number_or(*it, "saturation_delay", 25.0, where);
        sc.delay_model.migration_handoff_penalty = number_or(*it, "handoff_penalty", 2.0, where);
        check(sc.delay_model.base_service_time > 0.0, where + ": base_service_time must be > 0");
        check(sc.delay_model.epsilon > 0.0, where + ": epsilon must be > 0");
        check(sc.delay_model.migration_handoff_penalty >= 0.0,
              where + ": handoff_penalty must be >= 0");
        check(sc.delay_model.saturation_delay >=
                  sc.delay_model.base_service_time / sc.delay_model.epsilon,
              where + ": saturation_delay must cover the unsaturated maximum");
    }

    // Decision parameters.
    if (auto it = doc.find("rl"); it != doc.end()) {
        std::string where = origin + ": rl";
        sc.rl.alpha = number_or(*it, "alpha", 0.5, where);
        sc.rl.gamma = number_or(*it, "gamma", 0.8, where);
        sc.rl.epsilon = number_or(*it, "epsilon", 0.9, where);
        sc.rl.q_init = number_or(*it, "q_init", 1.0, where);
        sc.rl.convergence_tol = number_or(*it, "convergence_tol", 1e-6, where);
        sc.rl.max_iterations = static_cast<int>(number_or(*it, "max_iterations", 10000.0, where));
        check(sc.rl.alpha > 0.0 && sc.rl.alpha <= 1.0, where + ": alpha must be in (0, 1]");
        check(sc.rl.gamma >= 0.0 && sc.rl.gamma < 1.0, where + ": gamma must be in [0, 1)");
        check(sc.rl.epsilon > 0.0 && sc.rl.epsilon <= 1.0,
              where + ": epsilon (exploit probability) must be in (0, 1]");
        check(sc.rl.convergence_tol >= 0.0, where + ": convergence_tol must be >= 0");
        check(sc.rl.max_iterations >= 1, where + ": max_iterations must be >= 1");
    }

    // Let the topology constructor re-check the ownership partition.
    try {
        sc.make_topology();
    } catch (const std::exception& e) {
        throw ScenarioValueError(origin + ": " + e.what());
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioIoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ScenarioIoError("error reading scenario file: " + path);
    return parse_scenario(buf.str(), path);
}

}  // namespace sdnlb
