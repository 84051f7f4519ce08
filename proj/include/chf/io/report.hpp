#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chf/classifier.hpp"
#include "chf/config.hpp"
#include "chf/physics.hpp"

namespace chf::io {

using Json = nlohmann::ordered_json;

/// Compact, deterministic text: keys in insertion order, every double with
/// 17 significant digits, non-finite doubles as null.
std::string dump(const Json& j, int indent = 2);

/// Parses text produced by dump (or any JSON text).
Json parse(const std::string& text);

std::string format_double(double x);

Json to_json(const SeriesEval& e);
SeriesEval series_eval_from_json(const Json& j);

Json to_json(const CaseId& id);
CaseId case_id_from_json(const Json& j);

Json to_json(const SolutionDescriptor& d);
SolutionDescriptor descriptor_from_json(const Json& j);

Json to_json(const SolutionPair& p);
SolutionPair pair_from_json(const Json& j);

Json to_json(const SolutionBasis& b);
SolutionBasis basis_from_json(const Json& j);

Json to_json(const LabyrinthCell& c);
LabyrinthCell labyrinth_cell_from_json(const Json& j);

Json to_json(const physics::BoundStateSpectrum& s);
physics::BoundStateSpectrum spectrum_from_json(const Json& j);

Json to_json(const physics::CutoffState& s);
physics::CutoffState cutoff_state_from_json(const Json& j);

/// `r,R` header followed by one row per sample, 17 significant digits.
std::string radial_csv(const physics::RadialWavefunction& w);

}  // namespace chf::io
