#include "sdnlb/metrics_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sdnlb {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string metrics_csv(const Scenario& scenario, const std::vector<RoundRecord>& records) {
    std::vector<ControllerId> ids;
    for (const auto& c : scenario.controllers) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());

    std::ostringstream out;
    out << "round";
    for (ControllerId id : ids) out << ",R_C" << id;
    out << ",D,mean_delay,migrations,round_cost,cum_cost\n";
    for (const auto& r : records) {
        out << r.round;
        for (double ratio : r.ratios) out << ',' << format_double(ratio);
        std::size_t moved = 0;
        for (const auto& t : r.migrations) moved += t.switches.size();
        out << ',' << format_double(r.deviation) << ',' << format_double(r.mean_delay) << ','
            << moved << ',' << format_double(r.round_cost) << ','
            << format_double(r.cum_cost) << '\n';
    }
    return out.str();
}

std::string run_summary_json(const Scenario& scenario, PolicyKind policy, std::uint64_t seed,
                             const std::vector<RoundRecord>& records) {
    double delay_sum = 0.0;
    double deviation_sum = 0.0;
    std::size_t moved = 0;
    for (const auto& r : records) {
        delay_sum += r.mean_delay;
        deviation_sum += r.deviation;
        for (const auto& t : r.migrations) moved += t.switches.size();
    }
    const auto n = static_cast<double>(records.size());

    nlohmann::ordered_json doc;
    doc["scenario"] = scenario.name;
    doc["policy"] = to_string(policy);
    doc["seed"] = seed;
    doc["rounds"] = records.size();
    doc["final_deviation"] = records.empty() ? 0.0 : records.back().deviation;
    doc["mean_deviation"] = records.empty() ? 0.0 : deviation_sum / n;
    doc["mean_delay"] = records.empty() ? 0.0 : delay_sum / n;
    doc["cumulative_cost"] = records.empty() ? 0.0 : records.back().cum_cost;
    doc["switches_migrated"] = moved;
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

}  // namespace sdnlb
