#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "specgeo/bound_verifier.hpp"
#include "specgeo/center_of_mass.hpp"
#include "specgeo/mesh.hpp"

namespace specgeo {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation (matches JSON serialization
/// bit for bit, so CSV and JSON payloads agree exactly).
std::string format_double(double x);

Json space_to_json(const SpaceSpec& spec);
SpaceSpec space_from_json(const Json& j);

/// Point-cloud schema:
///   {"space": {"field": "R|C|H|Ca", "n": int, "kind": "..."},
///    "points": [[...ambient coords...]], "weights": [...]}
/// Complex ambient coordinates are interleaved [re0, im0, re1, im1, ...].
/// Missing weights default to 1.
Json cloud_to_json(const WeightedPointCloud& cloud);
WeightedPointCloud cloud_from_json(const Json& j);

/// Mesh schema: the point-cloud schema with a "cells" array of index
/// triples (surface) or pairs (closed polyline) instead of weights.
Json mesh_to_json(const SurfaceMesh& mesh);
SurfaceMesh mesh_from_json(const Json& j);

/// ASCII OFF, euclidean-ambient triangle meshes only.
void write_off(std::ostream& out, const SurfaceMesh& mesh);
SurfaceMesh read_off(std::istream& in);

Json report_to_json(const VerificationReport& report);
Json study_to_json(const StudyResult& study);

Json load_json_file(const std::string& path);

}  // namespace specgeo
