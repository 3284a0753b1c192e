#include "siet/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "siet/bounds.hpp"
#include "siet/codebook.hpp"
#include "siet/errors.hpp"
#include "siet/io.hpp"
#include "siet/simulator.hpp"
#include "siet/sweep.hpp"

namespace siet {

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Json load_spec(const RunSpec& spec) {
    std::ifstream in(spec.input_path);
    if (!in) throw Error("cannot open input file: " + spec.input_path);
    Json j = Json::parse(in);
    for (const auto& kv : spec.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("override must be key=value: " + kv);
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        Json parsed = Json::parse(value, nullptr, false);
        j[key] = parsed.is_discarded() ? Json(value) : parsed;
    }
    return j;
}

void write_output(const RunSpec& spec, const std::string& content) {
    if (spec.output_path.empty()) return;
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + spec.output_path);
    out << content;
}

PackingMode packing_mode(const std::string& name) {
    if (name == "paper") return PackingMode::paper;
    if (name == "strict") return PackingMode::strict;
    throw Error("unknown packing mode: " + name);
}

int cmd_bounds(const RunSpec& spec, std::ostream& out) {
    const Json j = load_spec(spec);
    const Constellation cst = constellation_from_json(j.at("constellation"));
    const int n = j.at("n").get<int>();
    const std::uint64_t M = j.at("M").get<std::uint64_t>();
    const double sigma2 = j.at("sigma2").get<double>();
    const double B = j.value("B", 0.0);
    LayerProbabilities probs{j.at("layer_probs").get<std::vector<double>>()};

    const BoundReport report = evaluate_bounds(n, M, cst, probs, sigma2, B);

    const std::pair<const char*, double> rows[] = {
        {"dep_lower", report.dep_lower},
        {"rate_upper_exact_nats", report.rate_upper_exact.nats},
        {"rate_upper_exact_bits", report.rate_upper_exact.bits},
        {"rate_upper_stirling_nats", report.rate_upper_stirling.nats},
        {"rate_upper_stirling_bits", report.rate_upper_stirling.bits},
        {"eop_lower", report.eop_lower},
        {"energy_upper", report.energy_upper},
        {"dep_achievable", report.dep_achievable},
        {"rate_achievable_geometric_bits", report.rate_achievable_geometric_bits},
        {"rate_achievable_cc_nats", report.rate_achievable_cc.nats},
        {"rate_achievable_cc_bits", report.rate_achievable_cc.bits},
        {"eop_achievable", report.eop_achievable},
    };
    for (const auto& [name, value] : rows) {
        out << name;
        for (std::size_t pad = std::string(name).size(); pad < 32; ++pad) out << ' ';
        out << fmt(value) << "\n";
    }
    write_output(spec, bound_report_to_json(report).dump(2) + "\n");
    return kExitOk;
}

int cmd_simulate(const RunSpec& spec, std::ostream& out) {
    const Json j = load_spec(spec);
    const Codebook cb = codebook_from_json(j.at("codebook"));
    ChannelConfig cfg;
    cfg.sigma2 = j.at("sigma2").get<double>();
    cfg.seed = spec.seed;
    cfg.trials = spec.trials;

    Decoder decoder;
    if (spec.decoder == "min-distance")
        decoder = Decoder::min_distance;
    else if (spec.decoder == "regions")
        decoder = Decoder::regions;
    else
        throw Error("unknown decoder: " + spec.decoder);

    const SimResult result = estimate_dep(cb, decoder, cfg);
    const std::string payload = sim_result_to_json(result, spec.decoder).dump(2) + "\n";
    out << payload;
    write_output(spec, payload);
    return kExitOk;
}

int cmd_sweep(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const Json j = load_spec(spec);
    const int n = j.at("n").get<int>();
    const int layers = j.at("layers").get<int>();
    const double amplitude1 = j.at("amplitude1").get<double>();
    const double sigma2 = j.at("sigma2").get<double>();
    const auto epsilon_grid = j.at("epsilon_grid").get<std::vector<double>>();
    const PackingMode mode = packing_mode(j.value("packing", spec.packing));

    std::optional<std::vector<int>> fixed_layer_counts;
    if (j.contains("layer_counts"))
        fixed_layer_counts = j.at("layer_counts").get<std::vector<int>>();

    SweepResult result;
    if (j.contains("p_grid") && j.at("p_grid").is_array()) {
        std::vector<LayerProbabilities> p_grid;
        for (const auto& pj : j.at("p_grid"))
            p_grid.push_back({pj.get<std::vector<double>>()});
        result = sweep_region(n, layers, amplitude1, mode, epsilon_grid, p_grid, sigma2, {},
                              fixed_layer_counts);
    } else {
        result = sweep_region_auto_p(n, layers, amplitude1, mode, epsilon_grid, sigma2, {},
                                     spec.grid_step, fixed_layer_counts);
    }

    const std::string csv = sweep_to_csv(result.points, layers);
    out << csv;
    write_output(spec, csv);
    for (const auto& note : result.skipped) err << "skipped " << note << "\n";
    return kExitOk;
}

int cmd_design(const RunSpec& spec, std::ostream& out) {
    const Json j = load_spec(spec);
    const int n = j.at("n").get<int>();
    const double rate_bits = j.at("rate_bits").get<double>();
    const double B = j.at("energy").get<double>();
    const double epsilon = j.at("epsilon").get<double>();
    const double delta = j.at("delta").get<double>();
    const double sigma2 = j.at("sigma2").get<double>();
    const double peak = j.at("peak_amplitude").get<double>();
    const int layer_count = j.at("layers").get<int>();
    const int cap_per_layer = j.value("max_layer_symbols", 64);
    const std::uint64_t enumeration_cap = j.value("enumeration_cap", std::uint64_t{1000000});

    if (n < 1 || !(std::isfinite(rate_bits) && rate_bits >= 0.0) || !(B >= 0.0) ||
        !(epsilon > 0.0 && epsilon <= 1.0) || !(delta >= 0.0 && delta <= 1.0) ||
        !(sigma2 > 0.0) || !(peak > 0.0) || layer_count < 1)
        throw InvalidTargets("design targets out of range");

    // Disk radius from the DEP budget, shaved by 1e-9 so the constructed
    // code sits strictly inside the budget instead of exactly on it.
    const double radius = min_radius_for_dep(epsilon * (1.0 - 1e-9), n, sigma2);

    Json verdict;
    verdict["targets"] = {{"n", n},           {"rate_bits", rate_bits}, {"energy", B},
                          {"epsilon", epsilon}, {"delta", delta},       {"sigma2", sigma2}};

    if (peak <= radius) {
        verdict["feasible"] = false;
        verdict["binding_constraint"] = "radius";
        verdict["detail"] = "required disk radius " + fmt(radius) + " does not fit below peak amplitude " + fmt(peak);
        out << verdict.dump(2) << "\n";
        write_output(spec, verdict.dump(2) + "\n");
        return kExitVerdict;
    }

    std::vector<Layer> layers;
    double amplitude = peak;
    for (int c = 0; c < layer_count && amplitude > radius; ++c) {
        Layer ly;
        ly.amplitude = amplitude;
        ly.radius = radius;
        // a ring larger than n cannot carry an integral per-layer-uniform type
        ly.count = std::min({cap_per_layer, n,
                             max_symbols_per_layer(amplitude, radius, PackingMode::strict)});
        layers.push_back(ly);
        amplitude -= 2.0 * radius;
    }

    // The packed ring sizes may admit no integral type at all (no solution of
    // sum L_c k_c = n). Shrink each ring to the largest divisor of n within
    // its packing limit in that case; (n, 0, ...) is then always available.
    bool type_exists = false;
    for_each_integral_layer_counts(layers, n, 1, [&](const std::vector<int>&) {
        type_exists = true;
        return false;
    });
    if (!type_exists) {
        for (auto& ly : layers) {
            int d = ly.count;
            while (n % d != 0) --d;
            ly.count = d;
        }
    }
    const Constellation cst = build_constellation(layers);

    const double log2_L = std::log2(static_cast<double>(cst.size()));
    if (rate_bits > log2_L) {
        verdict["feasible"] = false;
        verdict["binding_constraint"] = "rate";
        verdict["detail"] = "target rate " + fmt(rate_bits) + " bits exceeds the log2(L) ceiling " +
                            fmt(log2_L) + " of the packed constellation";
        out << verdict.dump(2) << "\n";
        write_output(spec, verdict.dump(2) + "\n");
        return kExitVerdict;
    }
    if (n * rate_bits > 62.0)
        throw InvalidTargets("rate target needs more than 2^62 messages; not materializable");

    const auto M = static_cast<std::uint64_t>(std::ceil(std::exp2(n * rate_bits)));
    const FeasibilityResult search =
        check_tuple_feasibility(n, M, cst, epsilon, B, delta, sigma2, {}, spec.grid_step);

    Json margins = Json::array();
    for (const auto& m : search.margins)
        margins.push_back({{"inequality", m.name},
                           {"target", m.target},
                           {"achieved", m.achieved},
                           {"satisfied", m.satisfied}});
    verdict["margins"] = margins;
    verdict["M"] = M;

    if (!search.feasible) {
        verdict["feasible"] = false;
        std::string binding = "grid";
        for (const auto& m : search.margins)
            if (!m.satisfied) {
                binding = m.name;
                break;
            }
        verdict["binding_constraint"] = binding;
        out << verdict.dump(2) << "\n";
        write_output(spec, verdict.dump(2) + "\n");
        return kExitVerdict;
    }

    const SymbolType& type = *search.witness_type;
    Codebook cb;
    cb.constellation = cst;
    cb.n = n;
    Json codebook_json;
    if (M <= enumeration_cap) {
        cb.codewords = enumerate_codewords(type, M);
        codebook_json = codebook_to_json(cb);
    } else {
        cb.codewords = sample_codewords(type, enumeration_cap, spec.seed);
        codebook_json = codebook_to_compact_json(cb, type, M, spec.seed);
    }

    verdict["feasible"] = true;
    verdict["witness_p"] = search.witness->p;
    verdict["codebook"] = codebook_json;
    verdict["report"] = bound_report_to_json(
        evaluate_bounds(n, M, cst, *search.witness, sigma2, B));
    out << verdict.dump(2) << "\n";
    write_output(spec, verdict.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.command == "bounds") return cmd_bounds(spec, out);
        if (spec.command == "simulate") return cmd_simulate(spec, out);
        if (spec.command == "sweep") return cmd_sweep(spec, out, err);
        if (spec.command == "design") return cmd_design(spec, out);
        err << "error: unknown command '" << spec.command << "'\n";
        return kExitInput;
    } catch (const InvalidTargets& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const OverlappingRegions& e) {
        err << "violation: " << e.what() << "\n";
        return kExitVerdict;
    } catch (const Json::exception& e) {
        err << "error: invalid input JSON: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace siet
