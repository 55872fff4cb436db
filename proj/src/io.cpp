#include "thinpl/io.hpp"

#include <fstream>
#include <sstream>

#include "thinpl/errors.hpp"

namespace thinpl {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& origin, const std::string& what) {
  throw DomainError(ErrorKind::ParseError, origin + ": " + what);
}

const json& expect(const json& j, const char* key, json::value_t type,
                   const std::string& origin) {
  if (!j.is_object() || !j.contains(key)) {
    parse_fail(origin, std::string("missing key \"") + key + "\"");
  }
  const json& v = j.at(key);
  const bool numeric_ok =
      type == json::value_t::number_integer &&
      (v.is_number_integer() || v.is_number_unsigned());
  if (v.type() != type && !numeric_ok) {
    parse_fail(origin, std::string("key \"") + key + "\" has the wrong type");
  }
  return v;
}

Point parse_point(const json& j, const std::string& origin) {
  if (!j.is_array() || j.empty()) {
    parse_fail(origin, "a point must be a nonempty array of rational strings");
  }
  std::vector<Rational> coords;
  coords.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) parse_fail(origin, "coordinates must be rational strings");
    coords.push_back(parse_rational(c.get<std::string>()));
  }
  return Point(std::move(coords));
}

}  // namespace

ComplexSpec complex_spec_from_json(const json& j) {
  const std::string origin = "complex";
  ComplexSpec spec;
  spec.ambient_dim =
      expect(j, "ambient_dim", json::value_t::number_integer, origin).get<int>();
  const json& vertices = expect(j, "vertices", json::value_t::array, origin);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = origin + ".vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    const std::string id = expect(v, "id", json::value_t::string, at).get<std::string>();
    spec.vertices.emplace_back(id, parse_point(expect(v, "coords", json::value_t::array, at), at));
  }
  const json& simplices = expect(j, "simplices", json::value_t::array, origin);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const std::string at = origin + ".simplices[" + std::to_string(i) + "]";
    const json& s = simplices[i];
    if (!s.is_array() || s.empty()) parse_fail(at, "a simplex is a nonempty array of vertex ids");
    std::vector<std::string> ids;
    for (const auto& id : s) {
      if (!id.is_string()) parse_fail(at, "vertex ids must be strings");
      ids.push_back(id.get<std::string>());
    }
    spec.simplices.push_back(std::move(ids));
  }
  spec.basepoint = expect(j, "basepoint", json::value_t::string, origin).get<std::string>();
  return spec;
}

PLWord word_from_json(const json& j, std::shared_ptr<const SimplicialComplex> complex) {
  const std::string origin = "word";
  const std::string kind_str =
      expect(j, "kind", json::value_t::string, origin).get<std::string>();
  Kind kind;
  if (kind_str == "loop") {
    kind = Kind::Loop;
  } else if (kind_str == "path") {
    kind = Kind::Path;
  } else {
    parse_fail(origin, "kind must be \"loop\" or \"path\", got \"" + kind_str + "\"");
  }
  const json& pts = expect(j, "points", json::value_t::array, origin);
  std::vector<Point> points;
  points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(parse_point(pts[i], origin + ".points[" + std::to_string(i) + "]"));
  }
  return PLWord::make(std::move(complex), std::move(points), kind);
}

json point_to_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords) out.push_back(to_string(c));
  return out;
}

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

json word_to_json(const PLWord& w) {
  return json{{"kind", w.kind() == Kind::Loop ? "loop" : "path"},
              {"points", points_to_json(w.points())}};
}

json trace_to_json(const ReductionTrace& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    out.push_back(json{{"rule", to_string(step.rule)}, {"index", step.index}});
  }
  return out;
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop =
        std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail(origin, "JSON parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError(ErrorKind::ParseError, path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::shared_ptr<const SimplicialComplex> load_complex(const std::string& path) {
  return build_complex(complex_spec_from_json(parse_json_text(read_file(path), path)));
}

PLWord load_word(const std::string& path,
                 std::shared_ptr<const SimplicialComplex> complex) {
  return word_from_json(parse_json_text(read_file(path), path), std::move(complex));
}

}  // namespace thinpl
