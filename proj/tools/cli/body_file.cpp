#include "cli/body_file.hpp"

#include <fstream>
#include <sstream>

namespace spectral::cli {

namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(join(path, key), "missing field");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected a number");
  return v.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& path) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : number(*it, join(path, key));
}

std::vector<double> numbers(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], index(path, i)));
  return out;
}

std::string text(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a string");
  return v.get<std::string>();
}

template <class F>
auto validated(F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    throw ValidationError(e);
  }
}

}  // namespace

HeightFunction parse_height(const json& doc, double a, double b, const std::string& path) {
  const std::string kind = text(field(doc, "kind", path), join(path, "kind"));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  return validated([&] {
    if (kind == "poly") return HeightFunction::polynomial(numbers(field(doc, "coeffs", path), join(path, "coeffs")));
    if (kind == "tent") {
      const double hw = number_or(doc, "half_width", half, path);
      return HeightFunction::tent(number_or(doc, "center", mid, path), hw, number_or(doc, "height", hw, path));
    }
    if (kind == "semicircle")
      return HeightFunction::semicircle(number_or(doc, "center", mid, path), number(field(doc, "r", path), join(path, "r")));
    if (kind == "pw")
      return HeightFunction::piecewise_linear(numbers(field(doc, "knots", path), join(path, "knots")),
                                              numbers(field(doc, "values", path), join(path, "values")));
    if (kind == "power") {
      const double hw = number_or(doc, "half_width", half, path);
      return HeightFunction::power_cap(number_or(doc, "center", mid, path), hw, number_or(doc, "height", hw, path),
                                       number(field(doc, "exponent", path), join(path, "exponent")));
    }
    throw ParseError(join(path, "kind"), "unknown height kind '" + kind + "'");
  });
}

ConvexBody parse_body(const json& doc) {
  const std::string type = text(field(doc, "type", ""), "type");
  if (type == "polygon") {
    const json& vs = field(doc, "vertices", "");
    if (!vs.is_array()) throw ParseError("vertices", "expected an array of [x, y] pairs");
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string p = index("vertices", i);
      if (!vs[i].is_array() || vs[i].size() != 2) throw ParseError(p, "expected a pair [x, y]");
      pts.push_back({number(vs[i][0], index(p, 0)), number(vs[i][1], index(p, 1))});
    }
    return validated([&] { return ConvexBody(ConvexPolygon(std::move(pts))); });
  }
  if (type == "graph") {
    const double a = number(field(doc, "a", ""), "a");
    const double b = number(field(doc, "b", ""), "b");
    HeightFunction f = parse_height(field(doc, "f", ""), a, b, "f");
    HeightFunction g = parse_height(field(doc, "g", ""), a, b, "g");
    return validated([&] { return ConvexBody(validate_graph_body(a, b, std::move(f), std::move(g))); });
  }
  throw ParseError("type", "expected \"polygon\" or \"graph\", got '" + type + "'");
}

ConvexBody parse_body_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("", path.string() + ": " + e.what());
  }
  return parse_body(doc);
}

}  // namespace spectral::cli
