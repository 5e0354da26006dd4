#include "phc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phc {
namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double get_finite(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite value");
  return v;
}

std::size_t get_dim(const json& j) {
  if (!j.contains("dim")) throw ParseError("dim: missing field");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw ParseError("dim: expected a positive integer");
  return j["dim"].get<std::size_t>();
}

Point get_point(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw ParseError(where + ": expected an array of " + std::to_string(dim) +
                     " numbers");
  Point p(dim);
  for (std::size_t c = 0; c < dim; ++c)
    p[c] = get_finite(j[c], where + "[" + std::to_string(c) + "]");
  return p;
}

std::vector<Point> get_points(const json& j, std::size_t dim,
                              const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < j.size(); ++i)
    pts.push_back(get_point(j[i], dim, where + "[" + std::to_string(i) + "]"));
  return pts;
}

void emit_point(std::string& out, const Point& p) {
  out += '[';
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (c) out += ',';
    out += format_double(p[c]);
  }
  out += ']';
}

void emit_points(std::string& out, const std::vector<Point>& pts) {
  out += '[';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    emit_point(out, pts[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

DiscreteMeasure parse_measure(const std::string& text) {
  json j = parse_text(text);
  DiscreteMeasure m;
  m.dim = get_dim(j);
  if (!j.contains("atoms") || !j["atoms"].is_array())
    throw ParseError("atoms: expected an array");
  std::size_t i = 0;
  for (const auto& atom : j["atoms"]) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    if (!atom.is_object()) throw ParseError(where + ": expected an object");
    if (!atom.contains("x") || !atom.contains("w"))
      throw ParseError(where + ": missing x or w");
    Point x = get_point(atom["x"], m.dim, where + ".x");
    double w = get_finite(atom["w"], where + ".w");
    if (w < 0) throw ParseError(where + ".w: negative weight");
    m.atoms.push_back({std::move(x), w});
    ++i;
  }
  return m;
}

DiscreteMeasure load_measure(const std::string& path) {
  return parse_measure(read_file(path));
}

DiscreteKernel parse_kernel(const std::string& text) {
  json j = parse_text(text);
  DiscreteKernel q;
  q.dim = get_dim(j);
  if (!j.contains("source")) throw ParseError("source: missing field");
  if (!j.contains("targets")) throw ParseError("targets: missing field");
  if (!j.contains("Q")) throw ParseError("Q: missing field");
  q.source = get_points(j["source"], q.dim, "source");
  q.targets = get_points(j["targets"], q.dim, "targets");
  const auto& rows = j["Q"];
  if (!rows.is_array() || rows.size() != q.source.size())
    throw ParseError("Q: expected one row per source atom");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "Q[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != q.targets.size())
      throw ParseError(where + ": expected one entry per target atom");
    std::vector<double> row(q.targets.size());
    for (std::size_t jj = 0; jj < row.size(); ++jj) {
      row[jj] = get_finite(rows[i][jj], where + "[" + std::to_string(jj) + "]");
      if (row[jj] < 0) throw ParseError(where + "[" + std::to_string(jj) +
                                        "]: negative kernel weight");
    }
    q.weights.push_back(std::move(row));
  }
  return q;
}

DiscreteKernel load_kernel(const std::string& path) {
  return parse_kernel(read_file(path));
}

PolyhedralSupportFunction parse_support_function(const std::string& text) {
  json j = parse_text(text);
  PolyhedralSupportFunction f;
  f.dim = get_dim(j);
  if (!j.contains("gradients")) throw ParseError("gradients: missing field");
  f.gradients = get_points(j["gradients"], f.dim, "gradients");
  if (f.gradients.empty()) throw ParseError("gradients: must be nonempty");
  return f;
}

PolyhedralSupportFunction load_support_function(const std::string& path) {
  return parse_support_function(read_file(path));
}

SphericalFunctionSamples parse_spherical_samples(const std::string& text) {
  json j = parse_text(text);
  SphericalFunctionSamples f;
  f.dim = get_dim(j);
  if (!j.contains("directions")) throw ParseError("directions: missing field");
  if (!j.contains("values")) throw ParseError("values: missing field");
  f.directions = get_points(j["directions"], f.dim, "directions");
  if (!j["values"].is_array() || j["values"].size() != f.directions.size())
    throw ParseError("values: expected one value per direction");
  for (std::size_t i = 0; i < j["values"].size(); ++i)
    f.values.push_back(get_finite(j["values"][i], "values[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < f.directions.size(); ++i)
    if (std::abs(l2norm(f.directions[i]) - 1.0) > 1e-9)
      throw ParseError("directions[" + std::to_string(i) + "]: not unit length");
  return f;
}

SphericalFunctionSamples load_spherical_samples(const std::string& path) {
  return parse_spherical_samples(read_file(path));
}

std::string to_json(const DiscreteMeasure& m) {
  std::string out = "{\"dim\":" + std::to_string(m.dim) + ",\"atoms\":[";
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i) out += ',';
    out += "{\"x\":";
    emit_point(out, m.atoms[i].x);
    out += ",\"w\":" + format_double(m.atoms[i].w) + "}";
  }
  out += "]}";
  return out;
}

std::string to_json(const DiscreteKernel& q) {
  std::string out = "{\"dim\":" + std::to_string(q.dim) + ",\"source\":";
  emit_points(out, q.source);
  out += ",\"targets\":";
  emit_points(out, q.targets);
  out += ",\"Q\":[";
  for (std::size_t i = 0; i < q.weights.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < q.weights[i].size(); ++j) {
      if (j) out += ',';
      out += format_double(q.weights[i][j]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

std::string to_json(const PolyhedralSupportFunction& f) {
  std::string out = "{\"dim\":" + std::to_string(f.dim) + ",\"gradients\":";
  emit_points(out, f.gradients);
  out += "}";
  return out;
}

std::string to_json(const ConvexPolyhedralFunction& f) {
  std::string out = "{\"dim\":" + std::to_string(f.dim) + ",\"pieces\":[";
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    if (i) out += ',';
    out += "{\"gradient\":";
    emit_point(out, f.pieces[i].first);
    out += ",\"offset\":" + format_double(f.pieces[i].second) + "}";
  }
  out += "]}";
  return out;
}

std::string to_json(const OrderVerdict& v, const VerdictStats& stats) {
  std::string out = "{\"holds\":";
  out += v.holds ? "true" : "false";
  out += ",\"witness\":";
  if (v.kernel)
    out += to_json(*v.kernel);
  else if (v.support_certificate)
    out += to_json(*v.support_certificate);
  else if (v.convex_certificate)
    out += to_json(*v.convex_certificate);
  else
    out += "null";
  out += ",\"gap\":" + format_double(v.gap);
  out += ",\"stats\":{\"pivots\":" + std::to_string(stats.pivots) +
         ",\"runtime_ms\":" + std::to_string(stats.runtime_ms) + "}}";
  return out;
}

}  // namespace phc
