#pragma once

#include <json.hpp>
#include <string>

#include "siet/bounds.hpp"
#include "siet/codebook.hpp"
#include "siet/energy.hpp"
#include "siet/simulator.hpp"

namespace siet {

using Json = nlohmann::json;

// Constellation: {"layers":[{"amplitude":30.0,"count":8,"phase":0.0,"radius":2.5}, ...]}
Json constellation_to_json(const Constellation& cst);
Constellation constellation_from_json(const Json& j);

// Full form: {"constellation":..., "n":80, "codewords":[[0,3,1,...],...]}
// Compact form: {"constellation":..., "n":80, "type_counts":{"0":10,...},
//                "M":100, "seed":42} (codewords regenerated by sampling)
Json codebook_to_json(const Codebook& cb);
Json codebook_to_compact_json(const Codebook& cb, const SymbolType& type, std::uint64_t M,
                              std::uint64_t seed);
Codebook codebook_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& report);

// {"decoder":"regions","dep":...,"se":...,"trials":...}
Json sim_result_to_json(const SimResult& result, const std::string& decoder_name);

// columns: codeword_index,energy
std::string energy_profile_to_csv(const EnergyProfile& profile);
Json energy_profile_summary_json(const EnergyProfile& profile);

}  // namespace siet
