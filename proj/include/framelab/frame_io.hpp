#pragma once

#include <filesystem>
#include <istream>

#include <json.hpp>

#include "framelab/frame.hpp"
#include "framelab/measure_space.hpp"

namespace framelab::io {

/// Frame file format:
///   { "dim": n, "field": "real"|"complex", "labels": [...],
///     "weights": [...], "vectors": [[...], ...] }
/// Complex entries are [re, im] pairs; real frames use plain numbers.
/// "weights" may be omitted (counting measure). Labels may be strings or
/// integers; integers are canonicalized to their decimal text.
Frame frame_from_json(const nlohmann::json& j);
Frame read_frame(std::istream& in, const std::string& origin = "<stream>");
Frame read_frame_file(const std::filesystem::path& path);

nlohmann::json frame_to_json(const Frame& f);

/// Measure-space file: { "labels": [...], "weights": [...] } plus "nodes"
/// when quadrature nodes are known.
nlohmann::json measure_space_to_json(const MeasureSpace& space, const RealVector* nodes = nullptr);

}  // namespace framelab::io
