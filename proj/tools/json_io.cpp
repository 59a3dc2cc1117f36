#include "json_io.hpp"

#include <fstream>

#include "teich/error.hpp"

namespace teich::cli {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, path + ": " + e.what());
  }
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::parse, "matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

}  // namespace

kz::RationalMatrix rational_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::parse, "a matrix is a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
  kz::RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorKind::parse, "matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

json to_json(const kz::RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(teich::to_string(m(i, k)));
    out.push_back(row);
  }
  return out;
}

json to_json(const kz::ComplexMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    out.push_back(row);
  }
  return out;
}

kz::Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorKind::parse, "expected a number or [re, im], got " + j.dump());
}

std::vector<kz::RationalForm> forms_from_json(const json& j) {
  try {
    std::vector<kz::RationalForm> out;
    for (const auto& f : j.at("forms")) {
      kz::RationalForm form;
      for (const auto& p : f.at("poles")) {
        form.poles.push_back({complex_from_json(p.at("at")), complex_from_json(p.value("residue", json(1)))});
      }
      out.push_back(form);
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("forms JSON: ") + e.what());
  }
}

kz::FormPath path_from_json(const json& path, const json& forms) {
  try {
    kz::FormPath fp;
    fp.forms = forms_from_json(forms);
    const json& segments = path.is_object() ? path.at("segments") : path;
    if (path.is_object() && path.contains("margin")) fp.margin = path["margin"].get<double>();
    for (const auto& s : segments) {
      const auto type = s.at("type").get<std::string>();
      if (type == "line") {
        fp.segments.push_back(kz::LineSegment{complex_from_json(s.at("from")), complex_from_json(s.at("to")),
                                              s.value("warp", 1.0)});
      } else if (type == "arc") {
        fp.segments.push_back(kz::ArcSegment{complex_from_json(s.at("center")), s.at("radius").get<double>(),
                                             s.at("theta0").get<double>(), s.at("theta1").get<double>()});
      } else {
        throw Error(ErrorKind::parse, "unknown segment type '" + type + "'");
      }
    }
    return fp;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("path JSON: ") + e.what());
  }
}

}  // namespace teich::cli
