#include "affcurve/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "affcurve/errors.hpp"

namespace affcurve {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_row(const std::string& line, std::size_t expected, std::size_t lineno) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    field = trim(field);
    try {
      std::size_t used = 0;
      double v = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      row.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad number '" + field + "'");
    }
  }
  if (row.size() != expected) {
    throw ParseError("line " + std::to_string(lineno) + ": expected " +
                     std::to_string(expected) + " fields, got " + std::to_string(row.size()));
  }
  return row;
}

void expect_header(std::istream& in, const std::string& want) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input");
  if (trim(line) != want) {
    throw ParseError("expected header '" + want + "', got '" + trim(line) + "'");
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  return out;
}

SpecialAffineMap map_from_parsed(const json& j) {
  if (!j.contains("B") || !j.contains("tau")) throw ParseError("map JSON needs B and tau");
  auto bv = j.at("B");
  auto tv = j.at("tau");
  if (!bv.is_array() || bv.size() != 9 || !tv.is_array() || tv.size() != 3) {
    throw ParseError("map JSON: B must hold 9 numbers, tau 3");
  }
  SpecialAffineMap map;
  for (int i = 0; i < 9; ++i) map.B.m[i] = bv.at(i).get<double>();
  map.tau = {tv.at(0).get<double>(), tv.at(1).get<double>(), tv.at(2).get<double>()};
  return map;
}

}  // namespace

SampledCurve read_curve_csv(std::istream& in) {
  expect_header(in, "t,x,y,z");
  std::vector<double> params;
  std::vector<Vec3> points;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto row = parse_row(line, 4, lineno);
    params.push_back(row[0]);
    points.push_back({row[1], row[2], row[3]});
  }
  try {
    return SampledCurve::make(std::move(params), std::move(points));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

SampledCurve read_curve_csv_file(const std::string& path) {
  auto in = open_input(path);
  return read_curve_csv(in);
}

void write_curve_csv(std::ostream& out, const SampledCurve& curve) {
  out << "t,x,y,z\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Vec3& p = curve.points[i];
    out << fmt(curve.params[i]) << ',' << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(p.z) << '\n';
  }
}

void write_curve_csv_file(const std::string& path, const SampledCurve& curve) {
  auto out = open_output(path);
  write_curve_csv(out, curve);
}

AffineSignature read_signature_csv(std::istream& in) {
  expect_header(in, "sigma,chi1,chi2");
  AffineSignature sig;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto row = parse_row(line, 3, lineno);
    sig.sigma.push_back(row[0]);
    sig.chi1.push_back(row[1]);
    sig.chi2.push_back(row[2]);
  }
  if (sig.sigma.empty()) throw ParseError("signature CSV has no samples");
  return sig;
}

AffineSignature read_signature_csv_file(const std::string& path) {
  auto in = open_input(path);
  return read_signature_csv(in);
}

void write_signature_csv(std::ostream& out, const AffineSignature& sig) {
  out << "sigma,chi1,chi2\n";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    out << fmt(sig.sigma[i]) << ',' << fmt(sig.chi1[i]) << ',' << fmt(sig.chi2[i]) << '\n';
  }
}

void write_signature_csv_file(const std::string& path, const AffineSignature& sig) {
  auto out = open_output(path);
  write_signature_csv(out, sig);
}

SpecialAffineMap map_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("map JSON: ") + e.what());
  }
  return map_from_parsed(j);
}

SpecialAffineMap read_map_json_file(const std::string& path) {
  auto in = open_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return map_from_json(ss.str());
}

std::string map_to_json(const SpecialAffineMap& map) {
  json j;
  j["B"] = map.B.m;
  j["tau"] = {map.tau.x, map.tau.y, map.tau.z};
  return j.dump();
}

std::string report_to_json(const EquivalenceReport& report) {
  json j;
  j["equivalent"] = report.equivalent;
  j["distance"] = report.distance;
  j["compared_length"] = report.compared_length;
  if (report.map) {
    j["map"]["B"] = report.map->B.m;
    j["map"]["tau"] = {report.map->tau.x, report.map->tau.y, report.map->tau.z};
  }
  return j.dump();
}

}  // namespace affcurve
