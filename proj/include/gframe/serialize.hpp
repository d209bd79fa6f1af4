#pragma once

#include <json.hpp>

#include "gframe/sod.hpp"

namespace gframe {

using Json = nlohmann::ordered_json;

/// Version tag written as the top-level "schema" field of every document.
inline constexpr int kSchemaVersion = 1;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j);

/// Frame document: dimensions, layout, spectrum, row-major synthesis
/// entries as [re, im] pairs and frame bounds.
Json frame_to_json(const Frame &f, const Tolerances &tol = {});
/// Throws ParseError on a malformed document.
Frame frame_from_json(const Json &j);

Json params_to_json(const DualParams &p);
/// Parse a list of m complex vectors of length k; throws ParseError.
DualParams params_from_json(const Json &j, const Frame &f);

Json dual_to_json(const Frame &f, const DualFrame &d);

/// Frame indices are written 1-based.
Json erasure_report_to_json(const ErasureReport &r);

Json sod_report_to_json(const SodReport &r);
Json search_report_to_json(const SearchReport &r);

} // namespace gframe
