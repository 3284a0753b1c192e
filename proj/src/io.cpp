#include "siet/io.hpp"

#include <charconv>

#include "siet/errors.hpp"

namespace siet {

Json constellation_to_json(const Constellation& cst) {
    Json layers = Json::array();
    for (const auto& ly : cst.layers()) {
        layers.push_back({{"amplitude", ly.amplitude},
                          {"count", ly.count},
                          {"phase", ly.phase},
                          {"radius", ly.radius}});
    }
    return Json{{"layers", layers}};
}

Constellation constellation_from_json(const Json& j) {
    std::vector<Layer> layers;
    for (const auto& lj : j.at("layers")) {
        Layer ly;
        ly.amplitude = lj.at("amplitude").get<double>();
        ly.count = lj.at("count").get<int>();
        ly.phase = lj.value("phase", 0.0);
        ly.radius = lj.at("radius").get<double>();
        layers.push_back(ly);
    }
    return build_constellation(std::move(layers));
}

Json codebook_to_json(const Codebook& cb) {
    return Json{{"constellation", constellation_to_json(cb.constellation)},
                {"n", cb.n},
                {"codewords", cb.codewords}};
}

Json codebook_to_compact_json(const Codebook& cb, const SymbolType& type, std::uint64_t M,
                              std::uint64_t seed) {
    Json counts = Json::object();
    for (std::size_t i = 0; i < type.counts().size(); ++i)
        if (type.counts()[i] > 0) counts[std::to_string(i)] = type.counts()[i];
    return Json{{"constellation", constellation_to_json(cb.constellation)},
                {"n", type.n()},
                {"type_counts", counts},
                {"M", M},
                {"seed", seed}};
}

Codebook codebook_from_json(const Json& j) {
    Codebook cb;
    cb.constellation = constellation_from_json(j.at("constellation"));
    cb.n = j.at("n").get<int>();
    if (j.contains("codewords")) {
        cb.codewords = j.at("codewords").get<std::vector<Codeword>>();
    } else {
        std::vector<int> counts(cb.constellation.size(), 0);
        for (const auto& [key, value] : j.at("type_counts").items()) {
            const int idx = std::stoi(key);
            if (idx < 0 || idx >= cb.constellation.size())
                throw IndexOutOfRange("type_counts symbol index " + key + " out of range");
            counts[idx] = value.get<int>();
        }
        cb.codewords = sample_codewords(SymbolType(std::move(counts)),
                                        j.at("M").get<std::uint64_t>(),
                                        j.at("seed").get<std::uint64_t>());
    }
    validate_codebook(cb);
    return cb;
}

Json bound_report_to_json(const BoundReport& r) {
    return Json{{"dep_lower", r.dep_lower},
                {"rate_upper_exact_nats", r.rate_upper_exact.nats},
                {"rate_upper_exact_bits", r.rate_upper_exact.bits},
                {"rate_upper_stirling_nats", r.rate_upper_stirling.nats},
                {"rate_upper_stirling_bits", r.rate_upper_stirling.bits},
                {"eop_lower", r.eop_lower},
                {"energy_upper", r.energy_upper},
                {"dep_achievable", r.dep_achievable},
                {"rate_achievable_geometric_bits", r.rate_achievable_geometric_bits},
                {"rate_achievable_cc_nats", r.rate_achievable_cc.nats},
                {"rate_achievable_cc_bits", r.rate_achievable_cc.bits},
                {"eop_achievable", r.eop_achievable}};
}

Json sim_result_to_json(const SimResult& result, const std::string& decoder_name) {
    return Json{{"dep", result.dep_estimate},
                {"se", result.std_error},
                {"trials", result.trials_used},
                {"decoder", decoder_name}};
}

std::string energy_profile_to_csv(const EnergyProfile& profile) {
    std::string csv = "codeword_index,energy\n";
    for (std::size_t i = 0; i < profile.per_codeword().size(); ++i) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof(buf), profile.per_codeword()[i]);
        csv += std::to_string(i) + "," + std::string(buf, res.ptr) + "\n";
    }
    return csv;
}

Json energy_profile_summary_json(const EnergyProfile& profile) {
    return Json{{"codewords", profile.codeword_count()},
                {"levels", profile.levels()},
                {"multiplicities", profile.multiplicities()}};
}

}  // namespace siet
