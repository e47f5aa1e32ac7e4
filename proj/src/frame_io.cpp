#include "framelab/frame_io.hpp"

#include <fstream>

#include "framelab/errors.hpp"

namespace framelab::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

std::vector<std::string> parse_labels(const nlohmann::json& j) {
  std::vector<std::string> labels;
  labels.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& item = j[i];
    if (item.is_string()) {
      labels.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      labels.push_back(std::to_string(item.get<long long>()));
    } else {
      fail("labels[" + std::to_string(i) + "]: expected string or integer");
    }
  }
  return labels;
}

Complex parse_entry(const nlohmann::json& entry, ScalarField field, const std::string& where) {
  if (entry.is_number()) {
    return Complex(entry.get<double>(), 0.0);
  }
  if (entry.is_array()) {
    if (field == ScalarField::Real) {
      fail(where + ": real frames take plain numbers, not [re, im] pairs");
    }
    if (entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      fail(where + ": complex entries are [re, im] pairs of numbers");
    }
    return Complex(entry[0].get<double>(), entry[1].get<double>());
  }
  fail(where + ": expected a number" +
       (field == ScalarField::Complex ? std::string(" or [re, im] pair") : std::string()));
}

}  // namespace

Frame frame_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("frame file: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    fail("frame file: \"dim\" must be a positive integer");
  }
  const Index dim = j["dim"].get<Index>();

  if (!j.contains("field") || !j["field"].is_string()) {
    fail("frame file: \"field\" must be \"real\" or \"complex\"");
  }
  const std::string field_name = j["field"].get<std::string>();
  ScalarField field;
  if (field_name == "real") {
    field = ScalarField::Real;
  } else if (field_name == "complex") {
    field = ScalarField::Complex;
  } else {
    fail("frame file: \"field\" is \"" + field_name + "\", expected \"real\" or \"complex\"");
  }

  if (!j.contains("labels") || !j["labels"].is_array() || j["labels"].empty()) {
    fail("frame file: \"labels\" must be a nonempty array");
  }
  std::vector<std::string> labels = parse_labels(j["labels"]);
  const Index m = static_cast<Index>(labels.size());

  RealVector weights = RealVector::Ones(m);  // counting measure when omitted
  if (j.contains("weights")) {
    if (!j["weights"].is_array() || static_cast<Index>(j["weights"].size()) != m) {
      fail("frame file: \"weights\" must list one weight per label (" + std::to_string(m) + ")");
    }
    for (Index i = 0; i < m; ++i) {
      const auto& w = j["weights"][static_cast<std::size_t>(i)];
      if (!w.is_number()) fail("weights[" + std::to_string(i) + "]: expected a number");
      weights(i) = w.get<double>();
    }
  }

  if (!j.contains("vectors") || !j["vectors"].is_array() ||
      static_cast<Index>(j["vectors"].size()) != m) {
    fail("frame file: \"vectors\" must list one vector per label (" + std::to_string(m) + ")");
  }
  ComplexMatrix vectors(dim, m);
  for (Index c = 0; c < m; ++c) {
    const auto& column = j["vectors"][static_cast<std::size_t>(c)];
    if (!column.is_array() || static_cast<Index>(column.size()) != dim) {
      fail("vectors[" + std::to_string(c) + "]: expected " + std::to_string(dim) + " entries");
    }
    for (Index r = 0; r < dim; ++r) {
      vectors(r, c) = parse_entry(column[static_cast<std::size_t>(r)], field,
                                  "vectors[" + std::to_string(c) + "][" + std::to_string(r) + "]");
    }
  }

  try {
    return Frame(MeasureSpace(std::move(labels), std::move(weights)), std::move(vectors), field);
  } catch (const InvariantError& e) {
    fail(std::string("frame file: ") + e.what());
  }
}

Frame read_frame(std::istream& in, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(origin + ": " + e.what());
  }
  try {
    return frame_from_json(j);
  } catch (const ParseError& e) {
    fail(origin + ": " + e.what());
  }
}

Frame read_frame_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(path.string() + ": cannot open file");
  return read_frame(in, path.string());
}

nlohmann::json frame_to_json(const Frame& f) {
  nlohmann::json vectors = nlohmann::json::array();
  for (Index c = 0; c < f.points(); ++c) {
    nlohmann::json column = nlohmann::json::array();
    for (Index r = 0; r < f.dim(); ++r) {
      const Complex v = f.vectors()(r, c);
      if (f.field() == ScalarField::Real) {
        column.push_back(v.real());
      } else {
        column.push_back(nlohmann::json::array({v.real(), v.imag()}));
      }
    }
    vectors.push_back(std::move(column));
  }
  nlohmann::json weights = nlohmann::json::array();
  for (Index i = 0; i < f.points(); ++i) weights.push_back(f.space().weight(i));
  return nlohmann::json{{"dim", f.dim()},
                        {"field", f.field() == ScalarField::Real ? "real" : "complex"},
                        {"labels", f.space().labels()},
                        {"weights", weights},
                        {"vectors", vectors}};
}

nlohmann::json measure_space_to_json(const MeasureSpace& space, const RealVector* nodes) {
  nlohmann::json weights = nlohmann::json::array();
  for (Index i = 0; i < space.size(); ++i) weights.push_back(space.weight(i));
  nlohmann::json out{{"labels", space.labels()}, {"weights", weights}};
  if (nodes != nullptr) {
    nlohmann::json node_list = nlohmann::json::array();
    for (Index i = 0; i < nodes->size(); ++i) node_list.push_back((*nodes)(i));
    out["nodes"] = node_list;
  }
  return out;
}

}  // namespace framelab::io
