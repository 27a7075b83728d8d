#include "mwrc/config_io.hpp"

#include "mwrc/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace mwrc {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

SweepRange parse_range(const json& j, const std::string& field) {
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        return {v, v};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        SweepRange r{j[0].get<int>(), j[1].get<int>()};
        if (r.lo > r.hi) throw ValidationError(field + ": range lo > hi");
        return r;
    }
    throw ValidationError(field + ": expected an integer or a [lo, hi] pair");
}

}  // namespace

NetworkConfig load_config(const std::string& path) {
    const json j = load_json(path);
    if (!j.is_object()) throw ValidationError(path + ": top level must be an object");
    if (!j.contains("clusters")) throw ValidationError("clusters: field missing");
    if (!j.contains("relay_antennas")) throw ValidationError("relay_antennas: field missing");

    NetworkConfig cfg;
    const auto& clusters = j.at("clusters");
    if (!clusters.is_array()) throw ValidationError("clusters: expected a list of lists");
    for (const auto& cluster : clusters) {
        if (!cluster.is_array()) throw ValidationError("clusters: expected a list of lists");
        std::vector<int> antennas;
        for (const auto& count : cluster) {
            if (!count.is_number_integer())
                throw ValidationError("clusters: antenna counts must be integers");
            antennas.push_back(count.get<int>());
        }
        cfg.clusters.push_back(std::move(antennas));
    }
    if (!j.at("relay_antennas").is_number_integer())
        throw ValidationError("relay_antennas: expected an integer");
    cfg.relay_antennas = j.at("relay_antennas").get<int>();

    validate(cfg);
    return cfg;
}

SweepSpec load_sweep_spec(const std::string& path) {
    const json j = load_json(path);
    if (!j.is_object() || !j.contains("ranges"))
        throw ValidationError("ranges: field missing");
    const auto& ranges = j.at("ranges");

    SweepSpec spec;
    if (ranges.contains("L")) spec.clusters = parse_range(ranges.at("L"), "ranges.L");
    if (ranges.contains("K")) spec.users = parse_range(ranges.at("K"), "ranges.K");
    if (!ranges.contains("N")) throw ValidationError("ranges.N: field missing");
    spec.relay = parse_range(ranges.at("N"), "ranges.N");

    if (ranges.contains("M")) {
        spec.m1 = spec.m2 = parse_range(ranges.at("M"), "ranges.M");
        if (ranges.contains("M1") || ranges.contains("M2"))
            throw ValidationError("ranges: give either M or M1/M2, not both");
    } else {
        if (!ranges.contains("M1") || !ranges.contains("M2"))
            throw ValidationError("ranges: need M, or both M1 and M2");
        spec.m1 = parse_range(ranges.at("M1"), "ranges.M1");
        spec.m2 = parse_range(ranges.at("M2"), "ranges.M2");
    }

    if (spec.clusters.lo < 1 || spec.users.lo < 2 || spec.m1.lo < 1 || spec.m2.lo < 1 ||
        spec.relay.lo < 1)
        throw ValidationError("ranges: need L >= 1, K >= 2, antenna counts >= 1");

    if (j.contains("seeds")) {
        spec.seeds.clear();
        for (const auto& s : j.at("seeds")) {
            if (!s.is_number_unsigned() && !s.is_number_integer())
                throw ValidationError("seeds: expected integers");
            spec.seeds.push_back(s.get<std::uint64_t>());
        }
    }
    return spec;
}

}  // namespace mwrc
